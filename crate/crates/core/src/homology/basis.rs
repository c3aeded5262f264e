//! Finite graded pieces of the form algebra and their bases.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ambient::{Ambient, VariableSet};
use crate::exterior::PolyForm;
use crate::grading::{flat_multidegree, Multidegree};
use crate::monomial::Monomial;
use crate::poisson::hamiltonian_contraction;
use crate::scalar::Scalar;
use crate::word::Word;
use crate::{Error, Result};

use super::matrix::{Echelon, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SliceConstraint {
    FixedMultidegree(Multidegree),
    WeightAtMost(i64),
    WeightExactly(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SliceFilter {
    /// Total degree in the first block equals that in the second.
    BalancedZXi,
    /// Kernel of `i_H`, `X_H = Σ z_i∂z_i − Σ ξ_i∂ξ_i`.
    KernelOfIH,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SliceSpec {
    pub ambient: Ambient,
    pub form_degree: usize,
    pub constraint: SliceConstraint,
    pub filters: BTreeSet<SliceFilter>,
}

impl SliceSpec {
    pub fn new(ambient: Ambient, form_degree: usize, constraint: SliceConstraint) -> Self {
        SliceSpec { ambient, form_degree, constraint, filters: BTreeSet::new() }
    }

    pub fn with_filter(mut self, f: SliceFilter) -> Self {
        self.filters.insert(f);
        self
    }

    pub fn with_filters(mut self, fs: impl IntoIterator<Item = SliceFilter>) -> Self {
        self.filters.extend(fs);
        self
    }

    /// Same piece in another form degree.
    pub fn at_degree(&self, k: usize) -> Self {
        SliceSpec { form_degree: k, ..self.clone() }
    }

    pub fn has(&self, f: SliceFilter) -> bool {
        self.filters.contains(&f)
    }

    /// Whether a monomial term lies in the piece, ignoring the kernel filter.
    pub fn admits(&self, word: Word, m: &Monomial) -> bool {
        if word.len() != self.form_degree {
            return false;
        }
        let d = flat_multidegree(m, word);
        let ok = match &self.constraint {
            SliceConstraint::FixedMultidegree(md) => md.flat() == d,
            SliceConstraint::WeightAtMost(w) => weight_of(self.ambient, &d) <= *w,
            SliceConstraint::WeightExactly(w) => weight_of(self.ambient, &d) == *w,
        };
        ok && (!self.has(SliceFilter::BalancedZXi) || is_balanced(self.ambient, &d))
    }

    fn validate(&self) -> Result<()> {
        if let SliceConstraint::FixedMultidegree(md) = &self.constraint {
            if !md.fits(self.ambient) {
                return Err(Error::Structural(format!("multidegree {md} does not fit {}", self.ambient)));
            }
        }
        let needs_pairs = self.has(SliceFilter::BalancedZXi) || self.has(SliceFilter::KernelOfIH);
        if needs_pairs && self.ambient.set != VariableSet::Cotangent {
            return Err(Error::Structural(format!("filters {:?} need cotangent variables, got {}", self.filters, self.ambient)));
        }
        if (0..self.ambient.nvars()).any(|v| self.ambient.weight(v) <= 0) {
            return Err(Error::Structural("weight cutoff does not bound the slice".into()));
        }
        Ok(())
    }
}

impl fmt::Display for SliceConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SliceConstraint::FixedMultidegree(md) => write!(f, "{md}"),
            SliceConstraint::WeightAtMost(w) => write!(f, "weight<={w}"),
            SliceConstraint::WeightExactly(w) => write!(f, "weight={w}"),
        }
    }
}

fn weight_of(ambient: Ambient, d: &[u32]) -> i64 {
    d.iter().enumerate().map(|(v, &e)| ambient.weight(v) * e as i64).sum()
}

fn is_balanced(ambient: Ambient, d: &[u32]) -> bool {
    let n = ambient.n;
    d[..n].iter().sum::<u32>() == d[n..].iter().sum::<u32>()
}

/// Exponent vectors of length `parts` summing to `total`, in lexicographic
/// order of the vectors read from the last entry.
pub fn compositions(parts: usize, total: u32) -> Vec<Vec<u32>> {
    fn go(parts: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in 0..=total {
            prefix.push(e);
            go(parts - 1, total - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(parts, total, &mut Vec::new(), &mut out);
    out
}

/// Per-variable degree vectors with weighted sum at most `max`.
fn degree_vectors_up_to(weights: &[i64], max: i64) -> Vec<Vec<u32>> {
    fn go(weights: &[i64], budget: i64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let Some((&w, rest)) = weights.split_first() else {
            out.push(prefix.clone());
            return;
        };
        let mut e = 0;
        while e as i64 * w <= budget {
            prefix.push(e);
            go(rest, budget - e as i64 * w, prefix, out);
            prefix.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    if max >= 0 {
        go(weights, max, &mut Vec::new(), &mut out);
    }
    out
}

fn words_within(support: &[usize], k: usize) -> Vec<Word> {
    fn go(support: &[usize], k: usize, bits: u32, out: &mut Vec<Word>) {
        if k == 0 {
            out.push(Word::from_bits(bits));
            return;
        }
        for (i, &v) in support.iter().enumerate() {
            go(&support[i + 1..], k - 1, bits | (1 << v), out);
        }
    }
    let mut out = Vec::new();
    go(support, k, 0, &mut out);
    out
}

/// Monomial terms `(word, monomial)` of the piece, ignoring the kernel filter.
pub fn monomial_terms(spec: &SliceSpec) -> Result<Vec<(Word, Monomial)>> {
    spec.validate()?;
    let ambient = spec.ambient;
    let nv = ambient.nvars();
    let degree_vectors = match &spec.constraint {
        SliceConstraint::FixedMultidegree(md) => vec![md.flat()],
        SliceConstraint::WeightAtMost(w) | SliceConstraint::WeightExactly(w) => {
            let weights: Vec<i64> = (0..nv).map(|v| ambient.weight(v)).collect();
            degree_vectors_up_to(&weights, *w)
        }
    };
    let mut out = Vec::new();
    for d in degree_vectors {
        let support: Vec<usize> = (0..nv).filter(|&v| d[v] > 0).collect();
        for word in words_within(&support, spec.form_degree) {
            let exps: Vec<u16> = (0..nv).map(|v| (d[v] - u32::from(word.contains(v))) as u16).collect();
            let m = Monomial::from_exponents(&exps);
            if spec.admits(word, &m) {
                out.push((word, m));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Ordered basis of the piece. Without the kernel filter the basis consists
/// of monomial forms in canonical term order; with it, of kernel vectors of
/// `i_H` computed per multidegree block.
pub fn enumerate_slice_basis<S: Scalar>(spec: &SliceSpec) -> Result<Vec<PolyForm<S>>> {
    let terms = monomial_terms(spec)?;
    let ambient = spec.ambient;
    let single = |(w, m): &(Word, Monomial)| PolyForm::monomial_term(ambient, S::one(), m.clone(), *w);
    if !spec.has(SliceFilter::KernelOfIH) {
        return Ok(terms.iter().map(single).collect());
    }
    let mut blocks: BTreeMap<Vec<u32>, Vec<(Word, Monomial)>> = BTreeMap::new();
    for (w, m) in terms {
        blocks.entry(flat_multidegree(&m, w)).or_default().push((w, m));
    }
    let mut out = Vec::new();
    for block in blocks.values() {
        let images: Vec<PolyForm<S>> = block.iter().map(|t| hamiltonian_contraction(&single(t))).collect::<Result<_>>()?;
        let mut index: BTreeMap<(Word, Monomial), usize> = BTreeMap::new();
        let mut ech = Echelon::new(true);
        for img in &images {
            let mut v = SparseVec::new();
            for (w, m, c) in img.terms() {
                let next = index.len();
                let i = *index.entry((w, m.clone())).or_insert(next);
                v.insert(i, c.clone());
            }
            if let Some(dep) = ech.insert(v) {
                let mut form = PolyForm::zero(ambient);
                for (j, c) in dep {
                    form.add_scaled(&single(&block[j]), &c);
                }
                out.push(form);
            }
        }
    }
    Ok(out)
}
