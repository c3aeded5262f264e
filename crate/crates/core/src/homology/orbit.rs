//! Cross-checks of the multidegree classifier against slice homology of the
//! weight-zero part of the Drinfeld–Sklyanin structure.

use serde::{Deserialize, Serialize};

use crate::ambient::Ambient;
use crate::catalog::{build_structure, StructureId, StructureKind};
use crate::exterior::{PolyForm, PolyVector};
use crate::grading::Multidegree;
use crate::poisson::differential::koszul;
use crate::poisson::{acyclicity_classifier, apply_homotopy, hamiltonian_contraction, AcyclicityVerdict};
use crate::scalar::Scalar;
use crate::Result;

use super::basis::{compositions, SliceConstraint, SliceFilter, SliceSpec};
use super::complex::{express_in_basis, SliceComplex};
use super::matrix::ExactMatrix;

/// `A^k(m,l)` restricted to balanced forms in the kernel of `i_H`.
pub fn orbit_slice(ambient: Ambient, md: &Multidegree, form_degree: usize) -> SliceSpec {
    SliceSpec::new(ambient, form_degree, SliceConstraint::FixedMultidegree(md.clone()))
        .with_filters([SliceFilter::BalancedZXi, SliceFilter::KernelOfIH])
}

/// Every `(m, l)` with `|m| = |l| ≤ max_total`.
pub fn balanced_multidegrees(n: usize, max_total: u32) -> Vec<Multidegree> {
    let mut out = Vec::new();
    for t in 0..=max_total {
        for m in compositions(n, t) {
            for l in compositions(n, t) {
                out.push(Multidegree::new(m.clone(), l));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifierCheck {
    pub multidegree: Multidegree,
    pub acyclic: bool,
    pub lambda: Option<i64>,
    /// Homology dimension per form degree on the `i_H`-kernel slice.
    pub homology: Vec<usize>,
    pub agrees: bool,
    /// `δs + sδ = 1` on every degree of the kernel slice (acyclic verdicts).
    pub homotopy_identity: Option<bool>,
    /// `δ_{π₀}` vanishes on the kernel slice (non-acyclic verdicts).
    pub vanishes_on_kernel: Option<bool>,
    /// `δ_{π₀} = λ i_H` on the balanced slice without the kernel filter.
    pub equals_lambda_ih: Option<bool>,
    /// `δ_{π₀}` vanishes on the balanced slice without the kernel filter.
    pub vanishes_on_full_slice: Option<bool>,
}

impl ClassifierCheck {
    pub fn passes(&self) -> bool {
        self.agrees
            && self.homotopy_identity != Some(false)
            && self.vanishes_on_kernel != Some(false)
            && self.equals_lambda_ih != Some(false)
    }
}

/// Matrix of `op` from degree `k` to degree `k + 1` of the complex.
fn raising_matrix<S: Scalar>(
    cx: &SliceComplex<S>,
    k: usize,
    op: impl Fn(&PolyForm<S>) -> PolyForm<S>,
) -> Result<ExactMatrix<S>> {
    if k + 1 > cx.top() {
        return Ok(ExactMatrix::zeros(0, cx.dim(k)));
    }
    let images: Vec<PolyForm<S>> = cx.bases[k].iter().map(op).collect();
    express_in_basis(&images, &cx.base.at_degree(k + 1), &cx.bases[k + 1])
}

fn homotopy_identity<S: Scalar>(cx: &SliceComplex<S>, x: &[S], p: &[S]) -> Result<bool> {
    let s = |a: &PolyForm<S>| apply_homotopy(x, p, a).expect("cotangent slice");
    for k in 0..=cx.top() {
        let dim = cx.dim(k);
        let mut total = ExactMatrix::zeros(dim, dim);
        if k < cx.top() {
            total = total.add(&cx.matrix(k + 1)?.mul(&raising_matrix(cx, k, s)?));
        }
        if k > 0 {
            total = total.add(&raising_matrix(cx, k - 1, s)?.mul(&cx.matrix(k)?));
        }
        if total != ExactMatrix::identity(dim) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs the classifier on `md` and compares with brute-force homology of `π₀`.
pub fn check_classifier<S: Scalar>(md: &Multidegree) -> Result<ClassifierCheck> {
    let n = md.m.len();
    let ambient = Ambient::cotangent(n);
    let pi0: PolyVector<S> = build_structure(StructureId::new(StructureKind::Pi0OfDS, n))?;
    let op = |a: &PolyForm<S>| koszul(&pi0, a);
    let cx = SliceComplex::build(&op, &orbit_slice(ambient, md, 0))?;
    let homology: Vec<usize> = (0..=cx.top()).map(|k| cx.homology_dim(k)).collect();
    let has_homology = homology.iter().any(|&h| h > 0);
    let verdict = acyclicity_classifier::<S>(md)?;
    let mut check = ClassifierCheck {
        multidegree: md.clone(),
        acyclic: verdict.is_acyclic(),
        lambda: None,
        agrees: verdict.is_acyclic() != has_homology,
        homology,
        homotopy_identity: None,
        vanishes_on_kernel: None,
        equals_lambda_ih: None,
        vanishes_on_full_slice: None,
    };
    match verdict {
        AcyclicityVerdict::Acyclic { x, p } => {
            check.homotopy_identity = Some(homotopy_identity(&cx, &x, &p)?);
        }
        AcyclicityVerdict::NonAcyclic { lambda } => {
            check.lambda = Some(lambda);
            check.vanishes_on_kernel = Some(cx.images.iter().flatten().all(PolyForm::is_zero));
            let full = SliceComplex::build(
                &op,
                &SliceSpec::new(ambient, 0, SliceConstraint::FixedMultidegree(md.clone())).with_filter(SliceFilter::BalancedZXi),
            )?;
            let lam = S::from_int(lambda);
            let mut equal = true;
            let mut vanishes = true;
            for (basis, images) in full.bases.iter().zip(&full.images) {
                for (b, img) in basis.iter().zip(images) {
                    equal &= *img == hamiltonian_contraction(b)?.scale(&lam);
                    vanishes &= img.is_zero();
                }
            }
            check.equals_lambda_ih = Some(equal);
            check.vanishes_on_full_slice = Some(vanishes);
        }
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ExactScalar;

    fn md(m: &[u32], l: &[u32]) -> Multidegree {
        Multidegree::new(m.to_vec(), l.to_vec())
    }

    #[test]
    fn two_by_two_mixed_slice() {
        let c = check_classifier::<ExactScalar>(&md(&[1, 1], &[1, 1])).unwrap();
        assert!(c.passes(), "{c:?}");
    }

    #[test]
    fn off_diagonal_family() {
        for p in 1..=3 {
            let c = check_classifier::<ExactScalar>(&md(&[p, 0], &[0, p])).unwrap();
            assert!(c.passes(), "{c:?}");
            assert!(!c.acyclic);
        }
    }

    #[test]
    fn grid_size() {
        // Σ_t C(t+1,1)^2 for t ≤ 2 at n = 2: 1 + 4 + 9
        assert_eq!(balanced_multidegrees(2, 2).len(), 14);
    }
}
