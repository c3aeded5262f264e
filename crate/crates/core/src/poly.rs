use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ambient::Ambient;
use crate::monomial::Monomial;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Adds `c` to the entry at `key`, dropping it when the sum vanishes.
pub(crate) fn accumulate<K: Ord, S: Scalar>(map: &mut BTreeMap<K, S>, key: K, c: S) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get().clone() + c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// Sparse polynomial with coefficients in `S`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<S> {
    ambient: Ambient,
    terms: BTreeMap<Monomial, S>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp<'a, S> {
    Add,
    Mul,
    Scale(&'a S),
}

/// Checked arithmetic entry point: fails when the operands live on different
/// variable sets. `Scale` ignores `q`'s terms but still checks its ambient.
pub fn polynomial_arithmetic<S: Scalar>(
    p: &Polynomial<S>,
    q: &Polynomial<S>,
    op: ArithOp<'_, S>,
) -> Result<Polynomial<S>> {
    p.ambient.check_same(&q.ambient)?;
    Ok(match op {
        ArithOp::Add => p + q,
        ArithOp::Mul => p * q,
        ArithOp::Scale(c) => p.scale(c),
    })
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero(ambient: Ambient) -> Self {
        Polynomial { ambient, terms: BTreeMap::new() }
    }

    pub fn constant(ambient: Ambient, c: S) -> Self {
        Self::term(ambient, Monomial::one(ambient.nvars()), c)
    }

    pub fn one(ambient: Ambient) -> Self {
        Self::constant(ambient, S::one())
    }

    pub fn term(ambient: Ambient, m: Monomial, c: S) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, m, c);
        Polynomial { ambient, terms }
    }

    pub fn var(ambient: Ambient, v: usize) -> Self {
        Self::term(ambient, Monomial::var(ambient.nvars(), v), S::one())
    }

    pub fn from_terms(ambient: Ambient, terms: impl IntoIterator<Item = (Monomial, S)>) -> Self {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ambient.nvars());
            accumulate(&mut map, m, c);
        }
        Polynomial { ambient, terms: map }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &S)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.ambient);
        }
        Polynomial {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.ambient);
        }
        Polynomial {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ambient);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `v`.
    pub fn derivative(&self, v: usize) -> Self {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e > 0 {
                accumulate(&mut out, m.lower(v).unwrap(), c.clone() * S::from_int(e as i64));
            }
        }
        Polynomial { ambient: self.ambient, terms: out }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in the first block minus degree in the second block, per term.
    pub fn block_degrees(m: &Monomial, ambient: Ambient) -> (u32, u32) {
        let n = ambient.n;
        let e = m.exponents();
        let first = e[..n].iter().map(|&x| x as u32).sum();
        let second = e[n..].iter().map(|&x| x as u32).sum();
        (first, second)
    }

    /// Every term has equal degree in `z` and in `ξ`, i.e. the polynomial lies
    /// in the subalgebra generated by the `z_i ξ_j`.
    pub fn is_balanced(&self) -> bool {
        self.ambient.has_second_block()
            && self.terms.keys().all(|m| {
                let (a, b) = Self::block_degrees(m, self.ambient);
                a == b
            })
    }

    /// Splits a balanced polynomial into components of bidegree `(j, j)`.
    pub fn balanced_components(&self) -> Result<BTreeMap<u32, Polynomial<S>>> {
        if !self.is_balanced() && !self.is_zero() {
            return Err(Error::contract("balanced_components", format!("{self} is not balanced")));
        }
        let mut out: BTreeMap<u32, Polynomial<S>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (j, _) = Self::block_degrees(m, self.ambient);
            let entry = out.entry(j).or_insert_with(|| Self::zero(self.ambient));
            accumulate(&mut entry.terms, m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Exact division by a nonzero scalar.
    pub fn div_scalar(&self, c: &S) -> Self {
        Polynomial {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() / c.clone())).collect(),
        }
    }

    /// Exact division by a monomial; `None` if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (t, c) in &self.terms {
            terms.insert(t.div(m)?, c.clone());
        }
        Some(Polynomial { ambient: self.ambient, terms })
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: S) {
        accumulate(&mut self.terms, m, c);
    }
}

impl<'a, S: Scalar> Add<&'a Polynomial<S>> for &'a Polynomial<S> {
    type Output = Polynomial<S>;

    fn add(self, rhs: &'a Polynomial<S>) -> Polynomial<S> {
        assert_eq!(self.ambient, rhs.ambient, "variable sets differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            accumulate(&mut out.terms, m.clone(), c.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Sub<&'a Polynomial<S>> for &'a Polynomial<S> {
    type Output = Polynomial<S>;

    fn sub(self, rhs: &'a Polynomial<S>) -> Polynomial<S> {
        assert_eq!(self.ambient, rhs.ambient, "variable sets differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            accumulate(&mut out.terms, m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Mul<&'a Polynomial<S>> for &'a Polynomial<S> {
    type Output = Polynomial<S>;

    fn mul(self, rhs: &'a Polynomial<S>) -> Polynomial<S> {
        assert_eq!(self.ambient, rhs.ambient, "variable sets differ");
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                accumulate(&mut terms, a.mul(b), x.clone() * y.clone());
            }
        }
        Polynomial { ambient: self.ambient, terms }
    }
}

impl<S: Scalar> Neg for &Polynomial<S> {
    type Output = Polynomial<S>;

    fn neg(self) -> Polynomial<S> {
        Polynomial {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<S: Scalar> $tr<Polynomial<S>> for Polynomial<S> {
            type Output = Polynomial<S>;
            fn $method(self, rhs: Polynomial<S>) -> Polynomial<S> {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> Neg for Polynomial<S> {
    type Output = Polynomial<S>;
    fn neg(self) -> Polynomial<S> {
        -&self
    }
}

/// Appends `c*factors` in the canonical textual form.
pub(crate) fn write_term<S: Scalar>(out: &mut String, first: bool, c: &S, factors: &[String]) {
    let negative = c.is_negative();
    let abs = c.abs();
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    if factors.is_empty() {
        out.push_str(&abs.to_string());
    } else {
        if !abs.is_one() {
            out.push_str(&abs.to_string());
            out.push('*');
        }
        out.push_str(&factors.join("*"));
    }
}

pub(crate) fn monomial_factors(ambient: Ambient, m: &Monomial) -> Vec<String> {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| {
            let name = ambient.var_name(v);
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect()
}

/// Canonical text: terms in descending graded-lex order, explicit exponents.
impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            write_term(&mut out, i == 0, c, &monomial_factors(self.ambient, m));
        }
        f.write_str(&out)
    }
}
