//! Exact computation of Koszul–Brylinski Poisson homology for the quadratic
//! Poisson structures attached to the standard `sl(n)` r-matrix on rank-one
//! orbits.
//!
//! All arithmetic is generic over a [`Scalar`] field; the aliases at the crate
//! root fix it to arbitrary-precision rationals.

pub mod ambient;
pub mod catalog;
pub mod error;
pub mod exterior;
pub mod grading;
pub mod homology;
pub mod monomial;
pub mod poisson;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod spectral;
pub mod word;

#[cfg(test)]
mod testing;

pub use ambient::{Ambient, VariableSet};
pub use error::{Error, Result};
pub use grading::{Multidegree, Weight};
pub use monomial::Monomial;
pub use scalar::{rational, ExactScalar, Scalar};
pub use word::Word;

/// Exact rational polynomial.
pub type Poly = poly::Polynomial<ExactScalar>;
/// Exact rational differential form.
pub type Form = exterior::PolyForm<ExactScalar>;
/// Exact rational multivector field.
pub type Multivector = exterior::PolyVector<ExactScalar>;
