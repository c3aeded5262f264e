//! Homology dimension tables and harmonic kernels.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{build_structure, StructureId};
use crate::exterior::{PolyForm, PolyVector};
use crate::poisson::differential::koszul;
use crate::poisson::{adjoint_and_laplacian, LogCanonical};
use crate::scalar::Scalar;
use crate::{Error, Result};

use super::basis::{enumerate_slice_basis, SliceConstraint, SliceFilter, SliceSpec};
use super::complex::{express_in_basis, SliceComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceRecord {
    pub structure: String,
    pub n: usize,
    pub form_degree: usize,
    pub constraint: SliceConstraint,
    pub filters: Vec<SliceFilter>,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub homology_dim: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyTable {
    pub rows: Vec<SliceRecord>,
}

impl HomologyTable {
    pub fn total(&self, form_degree: usize) -> usize {
        self.rows.iter().filter(|r| r.form_degree == form_degree).map(|r| r.homology_dim).sum()
    }
}

/// Records for every spec, computing each slice family once.
pub fn homology_table_for<S: Scalar>(
    label: &str,
    pi: &PolyVector<S>,
    specs: &[SliceSpec],
) -> Result<HomologyTable> {
    let mut families: Vec<SliceSpec> = specs.iter().map(|s| s.at_degree(0)).collect();
    families.sort();
    families.dedup();
    for f in &families {
        f.ambient.check_same(&pi.ambient())?;
    }
    let op = |a: &PolyForm<S>| koszul(pi, a);
    let complexes: Vec<SliceComplex<S>> =
        families.par_iter().map(|f| SliceComplex::build(&op, f)).collect::<Result<_>>()?;
    let rows = specs
        .iter()
        .map(|spec| {
            let idx = families.binary_search(&spec.at_degree(0)).expect("family present");
            let cx = &complexes[idx];
            let k = spec.form_degree;
            let rank_out = cx.rank_out(k);
            let rank_in = cx.rank_out(k + 1);
            SliceRecord {
                structure: label.to_string(),
                n: spec.ambient.n,
                form_degree: k,
                constraint: spec.constraint.clone(),
                filters: spec.filters.iter().copied().collect(),
                dim: cx.dim(k),
                rank_in,
                rank_out,
                homology_dim: cx.dim(k) - rank_in - rank_out,
            }
        })
        .collect();
    Ok(HomologyTable { rows })
}

pub fn homology_table<S: Scalar>(id: StructureId, specs: &[SliceSpec]) -> Result<HomologyTable> {
    let pi = build_structure::<S>(id)?;
    homology_table_for(&id.kind.to_string(), &pi, specs)
}

/// Kernel of the Laplacian on the piece, as forms in the piece.
pub fn harmonic_kernel_for<S: Scalar>(pi: &PolyVector<S>, spec: &SliceSpec) -> Result<Vec<PolyForm<S>>> {
    LogCanonical::from_bivector(pi)?;
    let basis = enumerate_slice_basis::<S>(spec)?;
    let images: Vec<PolyForm<S>> =
        basis.iter().map(|b| adjoint_and_laplacian(pi, b).map(|(_, lap)| lap)).collect::<Result<_>>()?;
    let m = express_in_basis(&images, spec, &basis)?;
    Ok(m
        .kernel()
        .into_iter()
        .map(|v| {
            let mut form = PolyForm::zero(spec.ambient);
            for (j, c) in v {
                form.add_scaled(&basis[j], &c);
            }
            form
        })
        .collect())
}

pub fn harmonic_kernel<S: Scalar>(id: StructureId, spec: &SliceSpec) -> Result<Vec<PolyForm<S>>> {
    let pi = build_structure::<S>(id)?;
    if spec.ambient != pi.ambient() {
        return Err(Error::mismatch(spec.ambient, pi.ambient()));
    }
    harmonic_kernel_for(&pi, spec)
}
