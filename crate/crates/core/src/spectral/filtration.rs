use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::ambient::{Ambient, VariableSet};
use crate::catalog::{build_structure, StructureId};
use crate::exterior::{PolyForm, PolyVector};
use crate::homology::{homology_table_for, HomologyTable, SliceConstraint, SliceFilter, SliceSpec};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// `F^p`: span of terms of weight at least `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiltrationLevel(pub i64);

/// Weight-homogeneous parts keyed by the level they generate.
pub fn filtration_decompose<S: Scalar>(a: &PolyForm<S>) -> BTreeMap<FiltrationLevel, PolyForm<S>> {
    a.weight_components().into_iter().map(|(w, part)| (FiltrationLevel(w), part)).collect()
}

/// On the cotangent space homology is taken on balanced forms killed by
/// `i_H`; elsewhere on all forms.
pub fn default_filters(ambient: Ambient) -> BTreeSet<SliceFilter> {
    match ambient.set {
        VariableSet::Cotangent => [SliceFilter::BalancedZXi, SliceFilter::KernelOfIH].into_iter().collect(),
        _ => BTreeSet::new(),
    }
}

pub(crate) fn weight_zero_part<S: Scalar>(id: StructureId) -> Result<PolyVector<S>> {
    let (p0, _) = id
        .declared_split()
        .ok_or_else(|| Error::contract("e1_page", format!("{} has no declared weight split", id.kind)))?;
    let pi0 = build_structure::<S>(p0)?;
    if pi0.weights().iter().any(|&w| w != 0) {
        return Err(Error::contract("e1_page", format!("declared weight-zero part of {} has weights {:?}", id.kind, pi0.weights())));
    }
    Ok(pi0)
}

/// Homology of `δ_{π₀}` on each weight `0..=cutoff` and form degree.
pub fn e1_page<S: Scalar>(id: StructureId, cutoff: i64) -> Result<HomologyTable> {
    let pi0 = weight_zero_part::<S>(id)?;
    e1_page_for(&id.kind.to_string(), &pi0, &default_filters(pi0.ambient()), cutoff)
}

pub fn e1_page_for<S: Scalar>(
    label: &str,
    pi0: &PolyVector<S>,
    filters: &BTreeSet<SliceFilter>,
    cutoff: i64,
) -> Result<HomologyTable> {
    let ambient = pi0.ambient();
    let specs: Vec<SliceSpec> = (0..=cutoff)
        .flat_map(|w| {
            (0..=ambient.nvars()).map(move |k| SliceSpec::new(ambient, k, SliceConstraint::WeightExactly(w)))
        })
        .map(|s| s.with_filters(filters.iter().copied()))
        .collect();
    homology_table_for(label, pi0, &specs)
}
