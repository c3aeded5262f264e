//! Ambient coordinate systems.
//!
//! Variables are indexed `0..nvars`. The first block is always `z_1..z_n`;
//! the second block (when present) is `ξ_1..ξ_n` on the cotangent space or
//! `z̄_1..z̄_n` on the Schubert cell. On the cotangent space and the
//! holomorphic chart `z_i` and `ξ_i` carry weight `i`; on the Schubert cell
//! the order is reversed, `z_i` and `z̄_i` carrying `n + 1 − i`, which makes
//! the positive-weight part of the structure there strictly positive.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VariableSet {
    /// `(z, ξ)` on `T*Cⁿ`.
    Cotangent,
    /// `(z, z̄)` affine coordinates on the large Schubert cell.
    Schubert,
    /// `z` only.
    Holomorphic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ambient {
    pub n: usize,
    pub set: VariableSet,
}

impl Ambient {
    pub const fn new(n: usize, set: VariableSet) -> Self {
        Ambient { n, set }
    }

    pub const fn cotangent(n: usize) -> Self {
        Self::new(n, VariableSet::Cotangent)
    }

    pub const fn schubert(n: usize) -> Self {
        Self::new(n, VariableSet::Schubert)
    }

    pub const fn holomorphic(n: usize) -> Self {
        Self::new(n, VariableSet::Holomorphic)
    }

    pub fn nvars(&self) -> usize {
        match self.set {
            VariableSet::Holomorphic => self.n,
            _ => 2 * self.n,
        }
    }

    pub fn has_second_block(&self) -> bool {
        self.set != VariableSet::Holomorphic
    }

    /// Index of `z_i`, `i` one-based.
    pub fn z(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.n);
        i - 1
    }

    /// Index of `ξ_i` (or `z̄_i`), `i` one-based.
    pub fn w(&self, i: usize) -> usize {
        debug_assert!(self.has_second_block() && i >= 1 && i <= self.n);
        self.n + i - 1
    }

    pub fn xi(&self, i: usize) -> usize {
        self.w(i)
    }

    /// One-based label of the variable within its block.
    pub fn label(&self, v: usize) -> usize {
        v % self.n + 1
    }

    pub fn weight(&self, v: usize) -> i64 {
        match self.set {
            VariableSet::Schubert => (self.n + 1 - self.label(v)) as i64,
            _ => self.label(v) as i64,
        }
    }

    pub fn is_first_block(&self, v: usize) -> bool {
        v < self.n
    }

    pub fn var_name(&self, v: usize) -> String {
        let stem = if self.is_first_block(v) {
            "z"
        } else {
            match self.set {
                VariableSet::Cotangent => "xi",
                VariableSet::Schubert => "zb",
                VariableSet::Holomorphic => unreachable!(),
            }
        };
        format!("{stem}{}", self.label(v))
    }

    pub(crate) fn check_same(&self, other: &Ambient) -> crate::Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(crate::Error::mismatch(*self, *other))
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = match self.set {
            VariableSet::Cotangent => "z,xi",
            VariableSet::Schubert => "z,zb",
            VariableSet::Holomorphic => "z",
        };
        write!(f, "({set}; n={})", self.n)
    }
}
