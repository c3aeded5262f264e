use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::catalog::{build_structure, StructureId};
use crate::exterior::{PolyForm, PolyVector};
use crate::homology::{Echelon, SliceComplex, SliceConstraint, SliceFilter, SliceSpec, TermIndex};
use crate::poisson::differential::koszul;
use crate::scalar::Scalar;
use crate::Result;

use super::filtration::{default_filters, e1_page_for, weight_zero_part};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageEntry {
    pub weight: i64,
    pub form_degree: usize,
    /// `dim E₁` at this weight and degree.
    pub e1: usize,
    /// Dimension of the weight-graded piece of `H(δ_π)` on the truncation.
    pub limit: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub structure: String,
    pub n: usize,
    pub cutoff: i64,
    pub entries: Vec<PageEntry>,
    pub mismatches: Vec<PageEntry>,
}

impl ConvergenceReport {
    pub fn converges(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn leading_weight<S: Scalar>(a: &PolyForm<S>) -> i64 {
    a.weights().first().copied().unwrap_or(0)
}

/// `dim gr_p H_k` for `p = 0..=cutoff` on a complex of weight-homogeneous
/// basis forms, from `dim((Z ∩ F^p) + B) − dim((Z ∩ F^{p+1}) + B)`.
pub fn graded_homology<S: Scalar>(cx: &SliceComplex<S>, k: usize, cutoff: i64) -> Vec<usize> {
    let basis = &cx.bases[k];
    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_by_key(|&j| std::cmp::Reverse(leading_weight(&basis[j])));

    // cycles of F^p appear in the order of decreasing leading weight
    let mut out_index = TermIndex::default();
    let mut kernel = Echelon::new(true);
    let mut cycles: Vec<(i64, PolyForm<S>)> = Vec::new();
    for &j in &order {
        let image = if k == 0 { PolyForm::zero(basis[j].ambient()) } else { cx.images[k][j].clone() };
        if let Some(dep) = kernel.insert(out_index.coords(&image)) {
            let mut z = PolyForm::zero(basis[j].ambient());
            for (pos, c) in dep {
                z.add_scaled(&basis[order[pos]], &c);
            }
            cycles.push((leading_weight(&basis[j]), z));
        }
    }

    let mut index = TermIndex::default();
    let mut span = Echelon::new(false);
    if let Some(incoming) = cx.images.get(k + 1) {
        for b in incoming {
            span.insert(index.coords(b));
        }
    }
    let mut graded = vec![0; cutoff.max(-1).saturating_add(1) as usize];
    let mut rank_above = span.rank();
    let mut next = 0;
    for p in (0..=cutoff).rev() {
        while next < cycles.len() && cycles[next].0 >= p {
            span.insert(index.coords(&cycles[next].1));
            next += 1;
        }
        graded[p as usize] = span.rank() - rank_above;
        rank_above = span.rank();
    }
    graded
}

/// Compares `E₁` with the weight-graded homology of `δ_π` on the forms of
/// weight at most `cutoff`, taken modulo higher weights.
pub fn convergence_check_for<S: Scalar>(
    label: &str,
    pi: &PolyVector<S>,
    pi0: &PolyVector<S>,
    filters: &BTreeSet<SliceFilter>,
    cutoff: i64,
) -> Result<ConvergenceReport> {
    let ambient = pi.ambient();
    let e1 = e1_page_for(label, pi0, filters, cutoff)?;
    let base = SliceSpec::new(ambient, 0, SliceConstraint::WeightAtMost(cutoff)).with_filters(filters.iter().copied());
    let op = |a: &PolyForm<S>| koszul(pi, a);
    let cx = SliceComplex::build(&op, &base)?;
    let mut entries = Vec::new();
    for k in 0..=ambient.nvars() {
        let graded = graded_homology(&cx, k, cutoff);
        for (p, &limit) in graded.iter().enumerate() {
            let e1_dim = e1
                .rows
                .iter()
                .find(|r| r.form_degree == k && r.constraint == SliceConstraint::WeightExactly(p as i64))
                .map_or(0, |r| r.homology_dim);
            entries.push(PageEntry { weight: p as i64, form_degree: k, e1: e1_dim, limit });
        }
    }
    entries.sort_by_key(|e| (e.weight, e.form_degree));
    let mismatches = entries.iter().filter(|e| e.e1 != e.limit).cloned().collect();
    Ok(ConvergenceReport { structure: label.to_string(), n: ambient.n, cutoff, entries, mismatches })
}

pub fn convergence_check<S: Scalar>(id: StructureId, cutoff: i64) -> Result<ConvergenceReport> {
    let pi0 = weight_zero_part::<S>(id)?;
    let pi = build_structure::<S>(id)?;
    convergence_check_for(&id.kind.to_string(), &pi, &pi0, &default_filters(pi.ambient()), cutoff)
}
