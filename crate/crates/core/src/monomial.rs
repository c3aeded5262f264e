use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector over the ambient variables.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of the lowest-indexed variable where the two differ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u16; 12]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[v] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, v: usize) -> u16 {
        self.0[v]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u16) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0.clone();
        for (e, &d) in out.iter_mut().zip(&other.0) {
            *e = e.checked_sub(d)?;
        }
        Some(Monomial(out))
    }

    pub fn with_exponent(&self, v: usize, e: u16) -> Monomial {
        let mut out = self.clone();
        out.0[v] = e;
        out
    }

    /// Multiply by `x_v`.
    pub fn raise(&self, v: usize) -> Monomial {
        let mut out = self.clone();
        out.0[v] += 1;
        out
    }

    /// Divide by `x_v`; `None` when the exponent is zero.
    pub fn lower(&self, v: usize) -> Option<Monomial> {
        let e = self.0[v].checked_sub(1)?;
        Some(self.with_exponent(v, e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
