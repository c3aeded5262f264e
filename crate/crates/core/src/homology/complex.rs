//! Matrix assembly and the chain complex carried by a family of slices.

use std::collections::BTreeMap;

use crate::exterior::PolyForm;
use crate::grading::flat_multidegree;
use crate::monomial::Monomial;
use crate::poisson::hamiltonian_contraction;
use crate::scalar::Scalar;
use crate::word::Word;
use crate::{Error, Result};

use super::basis::{enumerate_slice_basis, SliceConstraint, SliceFilter, SliceSpec};
use super::matrix::{Echelon, ExactMatrix, SparseVec};

/// A linear operator on forms.
pub type FormOperator<'a, S> = dyn Fn(&PolyForm<S>) -> PolyForm<S> + Sync + 'a;

/// Drops terms above the cutoff of a `WeightAtMost` piece; identity otherwise.
pub fn truncate_to<S: Scalar>(spec: &SliceSpec, a: &PolyForm<S>) -> PolyForm<S> {
    match spec.constraint {
        SliceConstraint::WeightAtMost(w) => a.truncate_weight(w),
        _ => a.clone(),
    }
}

/// Checks that `a` (already truncated) lies in the piece `spec`.
pub fn check_membership<S: Scalar>(spec: &SliceSpec, a: &PolyForm<S>, context: &dyn Fn() -> String) -> Result<()> {
    for (w, m, _) in a.terms() {
        if !spec.admits(w, m) {
            let term = PolyForm::monomial_term(a.ambient(), S::one(), m.clone(), w);
            return Err(Error::Grading(format!(
                "{}: term {term} (multidegree {:?}) lies outside {} in degree {}",
                context(),
                flat_multidegree(m, w),
                spec.constraint,
                spec.form_degree
            )));
        }
    }
    if spec.has(SliceFilter::KernelOfIH) && !hamiltonian_contraction(a)?.is_zero() {
        return Err(Error::Grading(format!("{}: image leaves the kernel of i_H", context())));
    }
    Ok(())
}

/// Coordinates of forms in the monomial terms they involve.
#[derive(Default)]
pub struct TermIndex {
    index: BTreeMap<(Word, Monomial), usize>,
}

impl TermIndex {
    pub fn coords<S: Scalar>(&mut self, a: &PolyForm<S>) -> SparseVec<S> {
        let mut v = SparseVec::new();
        for (w, m, c) in a.terms() {
            let next = self.index.len();
            let i = *self.index.entry((w, m.clone())).or_insert(next);
            v.insert(i, c.clone());
        }
        v
    }
}

/// Matrix of `op` from the basis of `domain` to the basis of `codomain`.
pub fn assemble_matrix<S: Scalar>(
    op: &FormOperator<'_, S>,
    domain: &SliceSpec,
    codomain: &SliceSpec,
) -> Result<ExactMatrix<S>> {
    let dom = enumerate_slice_basis::<S>(domain)?;
    let cod = enumerate_slice_basis::<S>(codomain)?;
    assemble_on_bases(op, &dom, codomain, &cod)
}

pub fn assemble_on_bases<S: Scalar>(
    op: &FormOperator<'_, S>,
    domain: &[PolyForm<S>],
    codomain_spec: &SliceSpec,
    codomain: &[PolyForm<S>],
) -> Result<ExactMatrix<S>> {
    let images: Vec<PolyForm<S>> = domain.iter().map(|b| truncate_to(codomain_spec, &op(b))).collect();
    express_in_basis(&images, codomain_spec, codomain)
}

/// Columns of coordinates of `images` in `codomain`; any residue is a
/// grading violation.
pub fn express_in_basis<S: Scalar>(
    images: &[PolyForm<S>],
    codomain_spec: &SliceSpec,
    codomain: &[PolyForm<S>],
) -> Result<ExactMatrix<S>> {
    let mut index = TermIndex::default();
    let mut ech = Echelon::new(true);
    for b in codomain {
        if ech.insert(index.coords(b)).is_some() {
            return Err(Error::Structural("codomain basis is linearly dependent".into()));
        }
    }
    let mut columns = Vec::with_capacity(images.len());
    for (j, image) in images.iter().enumerate() {
        match ech.express(&index.coords(image)) {
            Ok(x) => columns.push(x),
            Err(_) => {
                return Err(Error::Grading(format!(
                    "image {image} of domain element {j} lies outside the codomain {} in degree {}",
                    codomain_spec.constraint, codomain_spec.form_degree
                )))
            }
        }
    }
    Ok(ExactMatrix::from_columns(codomain.len(), columns))
}

/// Bases and differential images of one slice family across form degrees.
#[derive(Clone, Debug)]
pub struct SliceComplex<S> {
    pub base: SliceSpec,
    /// `bases[k]`: basis in form degree `k`.
    pub bases: Vec<Vec<PolyForm<S>>>,
    /// `images[k][j]`: truncated image of `bases[k][j]`, in degree `k − 1`.
    pub images: Vec<Vec<PolyForm<S>>>,
}

impl<S: Scalar> SliceComplex<S> {
    /// Builds every form degree, verifying that images stay in the family
    /// and that the differential squares to zero.
    pub fn build(op: &FormOperator<'_, S>, base: &SliceSpec) -> Result<Self> {
        let top = base.ambient.nvars();
        let bases: Vec<Vec<PolyForm<S>>> =
            (0..=top).map(|k| enumerate_slice_basis(&base.at_degree(k))).collect::<Result<_>>()?;
        let mut images = Vec::with_capacity(top + 1);
        for (k, basis) in bases.iter().enumerate() {
            let target = base.at_degree(k.saturating_sub(1));
            let mut imgs = Vec::with_capacity(basis.len());
            for b in basis {
                let img = truncate_to(&target, &op(b));
                if k == 0 {
                    if !img.is_zero() {
                        return Err(Error::Grading(format!("operator does not lower degree on {b}")));
                    }
                } else {
                    check_membership(&target, &img, &|| format!("image of {b}"))?;
                }
                if k >= 2 {
                    let twice = truncate_to(&base.at_degree(k - 2), &op(&img));
                    if !twice.is_zero() {
                        return Err(Error::Structural(format!(
                            "differential does not square to zero on {} in degree {k}: {b} maps to {twice}",
                            base.constraint
                        )));
                    }
                }
                imgs.push(img);
            }
            images.push(imgs);
        }
        Ok(SliceComplex { base: base.clone(), bases, images })
    }

    pub fn top(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn dim(&self, k: usize) -> usize {
        self.bases.get(k).map_or(0, |b| b.len())
    }

    /// Rank of the differential leaving degree `k`.
    pub fn rank_out(&self, k: usize) -> usize {
        let Some(imgs) = self.images.get(k) else { return 0 };
        if k == 0 {
            return 0;
        }
        let mut index = TermIndex::default();
        let mut ech = Echelon::new(false);
        for img in imgs {
            ech.insert(index.coords(img));
        }
        ech.rank()
    }

    pub fn homology_dim(&self, k: usize) -> usize {
        self.dim(k) - self.rank_out(k) - self.rank_out(k + 1)
    }

    /// Matrix of the differential from degree `k` to `k − 1`.
    pub fn matrix(&self, k: usize) -> Result<ExactMatrix<S>> {
        if k == 0 || k > self.top() {
            return Ok(ExactMatrix::zeros(if k == 0 { 0 } else { self.dim(k - 1) }, self.dim(k)));
        }
        express_in_basis(&self.images[k], &self.base.at_degree(k - 1), &self.bases[k - 1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::Ambient;
    use crate::exterior::calculus::exterior_derivative;
    use crate::ExactScalar;

    #[test]
    fn raising_operator_rejected() {
        // d raises degree; the complex expects a lowering differential
        let op = |a: &PolyForm<ExactScalar>| exterior_derivative(a);
        let base = SliceSpec::new(Ambient::holomorphic(1), 0, SliceConstraint::WeightExactly(2));
        assert!(matches!(SliceComplex::build(&op, &base), Err(Error::Grading(_))));
    }

    #[test]
    fn contraction_by_euler_field_is_acyclic() {
        // i_E with E = Σ w_v x_v ∂_v: homotopy L_E = (weight)·1 makes positive weights acyclic
        use crate::exterior::calculus::interior_product;
        use crate::exterior::PolyVector;
        use crate::poly::Polynomial;
        let amb = Ambient::holomorphic(2);
        let mut euler = PolyVector::<ExactScalar>::zero(amb);
        for v in 0..amb.nvars() {
            let x = PolyVector::generator(amb, v).mul_poly(&Polynomial::var(amb, v));
            euler = &euler + &x.scale(&ExactScalar::from_integer(amb.weight(v).into()));
        }
        let op = |a: &PolyForm<ExactScalar>| interior_product(&euler, a).unwrap();
        for w in 0..=4 {
            let cx = SliceComplex::build(&op, &SliceSpec::new(amb, 0, SliceConstraint::WeightExactly(w))).unwrap();
            let total: usize = (0..=cx.top()).map(|k| cx.homology_dim(k)).sum();
            assert_eq!(total, usize::from(w == 0), "weight {w}");
        }
    }

    #[test]
    fn matrices_compose_to_zero() {
        use crate::catalog::{build_structure, StructureId, StructureKind};
        use crate::poisson::differential::koszul;
        let pi = build_structure::<ExactScalar>(StructureId::new(StructureKind::DrinfeldSklyanin, 2)).unwrap();
        let op = |a: &PolyForm<ExactScalar>| koszul(&pi, a);
        let cx = SliceComplex::build(&op, &SliceSpec::new(Ambient::cotangent(2), 0, SliceConstraint::WeightAtMost(4))).unwrap();
        for k in 2..=cx.top() {
            let dd = cx.matrix(k - 1).unwrap().mul(&cx.matrix(k).unwrap());
            assert!(dd.is_zero());
        }
        for k in 0..=cx.top() {
            assert!(cx.rank_out(k) + cx.rank_out(k + 1) <= cx.dim(k));
        }
    }

    #[test]
    fn express_rejects_outside_images() {
        let amb = Ambient::holomorphic(1);
        let spec = SliceSpec::new(amb, 0, SliceConstraint::WeightExactly(1));
        let basis = enumerate_slice_basis::<ExactScalar>(&spec).unwrap();
        let outside = PolyForm::function(&crate::poly::Polynomial::one(amb));
        assert!(matches!(express_in_basis(&[outside], &spec, &basis), Err(Error::Grading(_))));
    }
}
