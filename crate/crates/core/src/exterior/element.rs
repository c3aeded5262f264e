use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};

use crate::ambient::Ambient;
use crate::grading::{flat_multidegree, monomial_weight, word_weight};
use crate::monomial::Monomial;
use crate::poly::{accumulate, monomial_factors, write_term, Polynomial};
use crate::scalar::Scalar;
use crate::word::Word;

/// Distinguishes differential forms from multivector fields.
pub trait GeneratorKind: Clone + Copy + fmt::Debug + PartialEq + Send + Sync + 'static {
    /// `+1` for `dx`, `-1` for `∂_x`.
    const WEIGHT_SIGN: i64;
    fn generator_name(ambient: Ambient, v: usize) -> String;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VectorKind;

impl GeneratorKind for FormKind {
    const WEIGHT_SIGN: i64 = 1;
    fn generator_name(ambient: Ambient, v: usize) -> String {
        format!("d{}", ambient.var_name(v))
    }
}

impl GeneratorKind for VectorKind {
    const WEIGHT_SIGN: i64 = -1;
    fn generator_name(ambient: Ambient, v: usize) -> String {
        format!("D{}", ambient.var_name(v))
    }
}

/// Term key: generator word first so that terms group by degree.
pub type TermKey = (Word, Monomial);

/// Polynomial-coefficient element of the exterior algebra over the ambient
/// generators, kept in canonical form: sorted words, sign absorbed into the
/// coefficient, no zero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Exterior<S, K> {
    ambient: Ambient,
    terms: BTreeMap<TermKey, S>,
    _kind: PhantomData<K>,
}

/// Polynomial differential form in `dz_i`, `dξ_i` (or `dz̄_i`).
pub type PolyForm<S> = Exterior<S, FormKind>;
/// Polynomial multivector field in `∂z_i`, `∂ξ_i` (or `∂z̄_i`).
pub type PolyVector<S> = Exterior<S, VectorKind>;

impl<S: Scalar, K: GeneratorKind> Exterior<S, K> {
    pub fn zero(ambient: Ambient) -> Self {
        Exterior { ambient, terms: BTreeMap::new(), _kind: PhantomData }
    }

    pub fn from_terms(ambient: Ambient, terms: impl IntoIterator<Item = (TermKey, S)>) -> Self {
        let mut out = Self::zero(ambient);
        for (k, c) in terms {
            out.add_term(k.0, k.1, c);
        }
        out
    }

    pub fn monomial_term(ambient: Ambient, c: S, m: Monomial, word: Word) -> Self {
        let mut out = Self::zero(ambient);
        out.add_term(word, m, c);
        out
    }

    /// Degree-zero element.
    pub fn function(f: &Polynomial<S>) -> Self {
        Self::with_coefficient(f, Word::EMPTY)
    }

    /// `f · g_word`.
    pub fn with_coefficient(f: &Polynomial<S>, word: Word) -> Self {
        let mut out = Self::zero(f.ambient());
        for (m, c) in f.terms() {
            out.add_term(word, m.clone(), c.clone());
        }
        out
    }

    /// The generator `g_{v_1} ∧ … ∧ g_{v_k}` in the given (unsorted) order.
    pub fn generators(ambient: Ambient, indices: &[usize]) -> Self {
        match Word::from_indices(indices) {
            None => Self::zero(ambient),
            Some((sign, w)) => {
                Self::monomial_term(ambient, S::from_int(sign), Monomial::one(ambient.nvars()), w)
            }
        }
    }

    pub fn generator(ambient: Ambient, v: usize) -> Self {
        Self::generators(ambient, &[v])
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

    /// Terms as `(word, monomial, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Word, &Monomial, &S)> {
        self.terms.iter().map(|((w, m), c)| (*w, m, c))
    }

    pub fn coefficient_of(&self, word: Word, m: &Monomial) -> S {
        self.terms.get(&(word, m.clone())).cloned().unwrap_or_else(S::zero)
    }

    /// Polynomial coefficient of a single generator word.
    pub fn coefficient(&self, word: Word) -> Polynomial<S> {
        Polynomial::from_terms(
            self.ambient,
            self.terms
                .iter()
                .filter(|((w, _), _)| *w == word)
                .map(|((_, m), c)| (m.clone(), c.clone())),
        )
    }

    pub fn words(&self) -> Vec<Word> {
        let mut ws: Vec<Word> = self.terms.keys().map(|(w, _)| *w).collect();
        ws.dedup();
        ws
    }

    /// Set of generator degrees present.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(|(w, _)| w.len()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Degree when homogeneous; `None` for zero or mixed elements.
    pub fn degree(&self) -> Option<usize> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn homogeneous_part(&self, degree: usize) -> Self {
        self.filter(|w, _| w.len() == degree)
    }

    pub fn filter(&self, mut keep: impl FnMut(Word, &Monomial) -> bool) -> Self {
        Exterior {
            ambient: self.ambient,
            terms: self
                .terms
                .iter()
                .filter(|((w, m), _)| keep(*w, m))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
            _kind: PhantomData,
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.ambient);
        }
        Exterior {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(k, a)| (k.clone(), a.clone() * c.clone())).collect(),
            _kind: PhantomData,
        }
    }

    /// Multiply every coefficient by the polynomial `f`.
    pub fn mul_poly(&self, f: &Polynomial<S>) -> Self {
        assert_eq!(self.ambient, f.ambient(), "variable sets differ");
        let mut out = Self::zero(self.ambient);
        for ((w, m), c) in &self.terms {
            for (fm, fc) in f.terms() {
                out.add_term(*w, m.mul(fm), c.clone() * fc.clone());
            }
        }
        out
    }

    /// Graded-commutative product.
    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient, "variable sets differ");
        let mut out = Self::zero(self.ambient);
        for ((wa, ma), ca) in &self.terms {
            for ((wb, mb), cb) in &other.terms {
                if let Some((sign, w)) = wa.wedge(*wb) {
                    out.add_term(w, ma.mul(mb), S::from_int(sign) * ca.clone() * cb.clone());
                }
            }
        }
        out
    }

    /// Weight of each term: coefficient weight plus `WEIGHT_SIGN` times generator weight.
    pub fn term_weight(&self, word: Word, m: &Monomial) -> i64 {
        monomial_weight(self.ambient, m) + K::WEIGHT_SIGN * word_weight(self.ambient, word)
    }

    /// Sorted list of term weights present.
    pub fn weights(&self) -> Vec<i64> {
        let mut ws: Vec<i64> = self.terms.keys().map(|(w, m)| self.term_weight(*w, m)).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    /// Split into weight-homogeneous parts.
    pub fn weight_components(&self) -> BTreeMap<i64, Self> {
        let mut out: BTreeMap<i64, Self> = BTreeMap::new();
        for ((w, m), c) in &self.terms {
            out.entry(self.term_weight(*w, m))
                .or_insert_with(|| Self::zero(self.ambient))
                .add_term(*w, m.clone(), c.clone());
        }
        out
    }

    /// Drop all terms of weight above `max`.
    pub fn truncate_weight(&self, max: i64) -> Self {
        self.filter(|w, m| self.term_weight(w, m) <= max)
    }

    /// Per-variable degree of each term (forms only count as positive degree).
    pub fn term_multidegree(word: Word, m: &Monomial) -> Vec<u32> {
        flat_multidegree(m, word)
    }

    pub fn add_term(&mut self, word: Word, m: Monomial, c: S) {
        debug_assert_eq!(m.nvars(), self.ambient.nvars());
        accumulate(&mut self.terms, (word, m), c);
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.ambient, other.ambient, "variable sets differ");
        for (k, c) in &other.terms {
            accumulate(&mut self.terms, k.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        assert_eq!(self.ambient, other.ambient, "variable sets differ");
        if c.is_zero() {
            return;
        }
        for (k, a) in &other.terms {
            accumulate(&mut self.terms, k.clone(), a.clone() * c.clone());
        }
    }
}

impl<'a, S: Scalar, K: GeneratorKind> Add<&'a Exterior<S, K>> for &'a Exterior<S, K> {
    type Output = Exterior<S, K>;
    fn add(self, rhs: &'a Exterior<S, K>) -> Exterior<S, K> {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a, S: Scalar, K: GeneratorKind> Sub<&'a Exterior<S, K>> for &'a Exterior<S, K> {
    type Output = Exterior<S, K>;
    fn sub(self, rhs: &'a Exterior<S, K>) -> Exterior<S, K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-S::one());
        out
    }
}

impl<S: Scalar, K: GeneratorKind> Neg for &Exterior<S, K> {
    type Output = Exterior<S, K>;
    fn neg(self) -> Exterior<S, K> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar, K: GeneratorKind> Add for Exterior<S, K> {
    type Output = Exterior<S, K>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<S: Scalar, K: GeneratorKind> Sub for Exterior<S, K> {
    type Output = Exterior<S, K>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

/// Canonical text: words in increasing order, within a word monomials in
/// decreasing graded-lex order; generators joined by `∧`.
impl<S: Scalar, K: GeneratorKind> fmt::Display for Exterior<S, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let mut first = true;
        for w in self.words() {
            let mut group: Vec<(&Monomial, &S)> = self
                .terms
                .range((w, Monomial::one(self.ambient.nvars()))..)
                .take_while(|((tw, _), _)| *tw == w)
                .map(|((_, m), c)| (m, c))
                .collect();
            group.reverse();
            let gens: Vec<String> = w.iter().map(|v| K::generator_name(self.ambient, v)).collect();
            for (m, c) in group {
                let mut factors = monomial_factors(self.ambient, m);
                if !gens.is_empty() {
                    factors.push(gens.join("∧"));
                }
                write_term(&mut out, first, c, &factors);
                first = false;
            }
        }
        f.write_str(&out)
    }
}
