//! Coefficient fields.
//!
//! Everything in this crate is generic over a [`Scalar`]. Exactness is the
//! caller's responsibility: rank and kernel computations assume that `==`
//! on the scalar type is exact, which holds for the rational types and not
//! for floating point.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed};

/// A commutative field with exact equality.
pub trait Scalar:
    Num + Signed + Clone + Neg<Output = Self> + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer not representable in scalar type")
    }
}

impl<T> Scalar for T where
    T: Num + Signed + Clone + Neg<Output = T> + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// Arbitrary precision rational, the default coefficient field.
pub type ExactScalar = BigRational;

pub fn rational(num: i64, den: i64) -> ExactScalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
