//! Shared proptest strategies for unit tests.

use proptest::prelude::*;

use crate::ambient::Ambient;
use crate::exterior::{PolyForm, PolyVector};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::word::Word;
use crate::{rational, ExactScalar, Poly};

pub fn monomial(nvars: usize, max_exp: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(|e| Monomial::from_exponents(&e))
}

pub fn scalar() -> impl Strategy<Value = ExactScalar> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| rational(n, d))
}

pub fn poly(ambient: Ambient, max_terms: usize, max_exp: u16) -> impl Strategy<Value = Poly> {
    prop::collection::vec((monomial(ambient.nvars(), max_exp), scalar()), 0..=max_terms)
        .prop_map(move |terms| Polynomial::from_terms(ambient, terms))
}

fn word(nvars: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::btree_set(0..nvars, 0..=max_len)
        .prop_map(|s| Word::from_indices(&s.into_iter().collect::<Vec<_>>()).unwrap().1)
}

pub fn form(ambient: Ambient, max_terms: usize, max_exp: u16, max_deg: usize) -> impl Strategy<Value = PolyForm<ExactScalar>> {
    let n = ambient.nvars();
    prop::collection::vec(((word(n, max_deg), monomial(n, max_exp)), scalar()), 0..=max_terms)
        .prop_map(move |terms| PolyForm::from_terms(ambient, terms))
}

/// Homogeneous multivector of the given degree.
pub fn vector_of_degree(ambient: Ambient, max_terms: usize, max_exp: u16, deg: usize) -> impl Strategy<Value = PolyVector<ExactScalar>> {
    let n = ambient.nvars();
    let w = prop::collection::btree_set(0..n, deg..=deg)
        .prop_map(|s| Word::from_indices(&s.into_iter().collect::<Vec<_>>()).unwrap().1);
    prop::collection::vec(((w, monomial(n, max_exp)), scalar()), 0..=max_terms)
        .prop_map(move |terms| PolyVector::from_terms(ambient, terms))
}
