//! Weight and multidegree gradings.
//!
//! Variable `x_v` and its differential `dx_v` both carry weight
//! `label(v)`; the dual vector `∂_v` carries `-label(v)`. Multidegrees count
//! coefficient exponents plus generator occurrences, so `z_1 dz_1` has
//! `z_1`-degree 2.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ambient::Ambient;
use crate::monomial::Monomial;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub i64);

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Degrees per variable: `m` for the first block, `l` for the second.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multidegree {
    pub m: Vec<u32>,
    pub l: Vec<u32>,
}

impl Multidegree {
    pub fn new(m: Vec<u32>, l: Vec<u32>) -> Self {
        Multidegree { m, l }
    }

    pub fn zero(ambient: Ambient) -> Self {
        let l = if ambient.has_second_block() { vec![0; ambient.n] } else { Vec::new() };
        Multidegree { m: vec![0; ambient.n], l }
    }

    /// Flat per-variable view in ambient index order.
    pub fn flat(&self) -> Vec<u32> {
        self.m.iter().chain(&self.l).copied().collect()
    }

    pub fn from_flat(ambient: Ambient, flat: &[u32]) -> Self {
        let n = ambient.n;
        Multidegree { m: flat[..n].to_vec(), l: flat[n..].to_vec() }
    }

    pub fn total_m(&self) -> u32 {
        self.m.iter().sum()
    }

    pub fn total_l(&self) -> u32 {
        self.l.iter().sum()
    }

    pub fn weight(&self, ambient: Ambient) -> Weight {
        Weight(self.flat().iter().enumerate().map(|(v, &d)| ambient.weight(v) * d as i64).sum())
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        let add = |a: &[u32], b: &[u32]| a.iter().zip(b).map(|(x, y)| x + y).collect();
        Multidegree { m: add(&self.m, &other.m), l: add(&self.l, &other.l) }
    }

    pub fn fits(&self, ambient: Ambient) -> bool {
        let l_len = if ambient.has_second_block() { ambient.n } else { 0 };
        self.m.len() == ambient.n && self.l.len() == l_len
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={:?} l={:?}", self.m, self.l)
    }
}

pub fn monomial_weight(ambient: Ambient, m: &Monomial) -> i64 {
    m.exponents().iter().enumerate().map(|(v, &e)| ambient.weight(v) * e as i64).sum()
}

pub fn word_weight(ambient: Ambient, w: Word) -> i64 {
    w.iter().map(|v| ambient.weight(v)).sum()
}

/// Per-variable degree of the term `m · g_word`, counting generators.
pub fn flat_multidegree(m: &Monomial, word: Word) -> Vec<u32> {
    m.exponents()
        .iter()
        .enumerate()
        .map(|(v, &e)| e as u32 + u32::from(word.contains(v)))
        .collect()
}

/// Weight and multidegree of a single term `m · g_word`, where `word_sign`
/// is `+1` for form generators and `-1` for vector generators.
pub fn weight_and_multidegree(ambient: Ambient, m: &Monomial, word: Word, word_sign: i64) -> (Weight, Multidegree) {
    let w = monomial_weight(ambient, m) + word_sign * word_weight(ambient, word);
    (Weight(w), Multidegree::from_flat(ambient, &flat_multidegree(m, word)))
}
