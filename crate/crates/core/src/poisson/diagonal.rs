//! Log-canonical bivectors `π = Σ_{a<b} c_ab x_a x_b ∂_a∧∂_b` and the
//! operators built from the Euler fields `E_a = x_a ∂_a`.
//!
//! On a term of per-variable degree `d`, `δ_π = Σ_b κ_b i_{E_b}` with
//! `κ_b = Σ_a c_ab d_a` (`c` extended antisymmetrically). The adjoint uses
//! `i*_{E_b} = dx_b ∧ ∂_{x_b}`, so `Δ_π = Σ_b κ_b² d_b` on the same term.

use crate::ambient::Ambient;
use crate::exterior::{PolyForm, PolyVector};
use crate::grading::flat_multidegree;
use crate::scalar::Scalar;
use crate::{Error, Result};

use super::differential::koszul;

/// `i_{E_v}`: removes `dx_v` and multiplies by `x_v`.
pub fn euler_contraction<S: Scalar>(v: usize, a: &PolyForm<S>) -> PolyForm<S> {
    let mut out = PolyForm::zero(a.ambient());
    for (w, m, c) in a.terms() {
        if let Some((sign, w2)) = w.remove_left(v) {
            out.add_term(w2, m.raise(v), c.clone() * S::from_int(sign));
        }
    }
    out
}

/// `i*_{E_v} = dx_v ∧ ∂_{x_v}`.
pub fn euler_cocontraction<S: Scalar>(v: usize, a: &PolyForm<S>) -> PolyForm<S> {
    let mut out = PolyForm::zero(a.ambient());
    for (w, m, c) in a.terms() {
        let e = m.exponent(v);
        if e == 0 {
            continue;
        }
        if let Some((sign, w2)) = w.insert_front(v) {
            out.add_term(w2, m.lower(v).unwrap(), c.clone() * S::from_int(sign * e as i64));
        }
    }
    out
}

/// Applies `Σ_v f_v(d) · op_v` where `d` is the per-variable degree of each
/// term, which every `op_v` preserves.
pub fn apply_graded<S: Scalar>(
    a: &PolyForm<S>,
    coefficients: impl Fn(&[u32]) -> Vec<S>,
    op: impl Fn(usize, &PolyForm<S>) -> PolyForm<S>,
) -> PolyForm<S> {
    let mut out = PolyForm::zero(a.ambient());
    for (w, m, c) in a.terms() {
        let d = flat_multidegree(m, w);
        let single = PolyForm::monomial_term(a.ambient(), c.clone(), m.clone(), w);
        for (v, k) in coefficients(&d).into_iter().enumerate() {
            if !k.is_zero() {
                out.add_scaled(&op(v, &single), &k);
            }
        }
    }
    out
}

/// Antisymmetric coefficient matrix of a log-canonical bivector.
#[derive(Clone, Debug, PartialEq)]
pub struct LogCanonical<S> {
    ambient: Ambient,
    c: Vec<Vec<S>>,
}

impl<S: Scalar> LogCanonical<S> {
    pub fn from_bivector(pi: &PolyVector<S>) -> Result<Self> {
        let ambient = pi.ambient();
        let nv = ambient.nvars();
        let mut c = vec![vec![S::zero(); nv]; nv];
        for (w, m, coef) in pi.terms() {
            let idx: Vec<usize> = w.iter().collect();
            let diagonal = idx.len() == 2
                && m.degree() == 2
                && m.exponent(idx[0]) == 1
                && m.exponent(idx[1]) == 1;
            if !diagonal {
                return Err(Error::contract(
                    "adjoint_and_laplacian",
                    format!("term {} of the bivector is not of the form c x_a x_b Da∧Db", PolyVector::monomial_term(ambient, coef.clone(), m.clone(), w)),
                ));
            }
            c[idx[0]][idx[1]] = coef.clone();
            c[idx[1]][idx[0]] = -coef.clone();
        }
        Ok(LogCanonical { ambient, c })
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn coefficient(&self, a: usize, b: usize) -> &S {
        &self.c[a][b]
    }

    /// `κ_b(d) = Σ_a c_ab d_a`.
    pub fn kappa(&self, d: &[u32]) -> Vec<S> {
        let nv = self.ambient.nvars();
        (0..nv)
            .map(|b| {
                (0..nv).fold(S::zero(), |acc, a| acc + self.c[a][b].clone() * S::from_int(d[a] as i64))
            })
            .collect()
    }

    /// `δ_π` through the Euler-field expansion.
    pub fn differential(&self, a: &PolyForm<S>) -> PolyForm<S> {
        apply_graded(a, |d| self.kappa(d), euler_contraction)
    }

    /// `δ*_π = Σ_b κ_b i*_{E_b}`.
    pub fn adjoint(&self, a: &PolyForm<S>) -> PolyForm<S> {
        apply_graded(a, |d| self.kappa(d), euler_cocontraction)
    }

    /// Eigenvalue `Σ_b κ_b² d_b` of the Laplacian on per-variable degree `d`.
    pub fn laplacian_eigenvalue(&self, d: &[u32]) -> S {
        self.kappa(d)
            .into_iter()
            .zip(d)
            .fold(S::zero(), |acc, (k, &db)| acc + k.clone() * k * S::from_int(db as i64))
    }
}

/// `(δ*_π a, Δ_π a)` with `Δ_π = δ_π δ*_π + δ*_π δ_π`, for log-canonical `π`.
pub fn adjoint_and_laplacian<S: Scalar>(pi: &PolyVector<S>, a: &PolyForm<S>) -> Result<(PolyForm<S>, PolyForm<S>)> {
    pi.ambient().check_same(&a.ambient())?;
    let lc = LogCanonical::from_bivector(pi)?;
    let adj = lc.adjoint(a);
    let lap = &koszul(pi, &adj) + &lc.adjoint(&koszul(pi, a));
    Ok((adj, lap))
}

#[cfg(test)]
mod tests {
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    use super::*;
    use crate::catalog::{build_structure, StructureId, StructureKind};
    use crate::monomial::Monomial;
    use crate::testing;
    use crate::word::Word;
    use crate::{rational, ExactScalar, Form, Multivector};

    fn skew(n: usize) -> Multivector {
        build_structure(StructureId::new(StructureKind::SkewPolyEx3, n)).unwrap()
    }

    fn monomial_form(amb: Ambient, exps: &[u16], gens: &[usize]) -> Form {
        let w = Word::from_indices(gens).unwrap().1;
        Form::monomial_term(amb, ExactScalar::one(), Monomial::from_exponents(exps), w)
    }

    /// `⟨x^α g_W, x^β g_V⟩ = δ α! [W = V]`.
    fn fischer(a: &Form, b: &Form) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for (w, m, c) in a.terms() {
            let other = b.coefficient_of(w, m);
            if !other.is_zero() {
                let weight: u64 = m.exponents().iter().map(|&e| (1..=e as u64).product::<u64>()).product();
                acc += c.clone() * other * rational(weight as i64, 1);
            }
        }
        acc
    }

    #[test]
    fn pure_powers_are_harmonic() {
        let pi = skew(2);
        let amb = pi.ambient();
        for k in 0..5 {
            let a = monomial_form(amb, &[k, 0], &[]);
            assert!(adjoint_and_laplacian(&pi, &a).unwrap().1.is_zero());
        }
    }

    #[test]
    fn mixed_monomial_eigenvalue() {
        let pi = skew(2);
        let amb = pi.ambient();
        let a = monomial_form(amb, &[1, 1], &[]);
        let (adj, lap) = adjoint_and_laplacian(&pi, &a).unwrap();
        // δ kills 0-forms, so Δ = δ δ*.
        let by_hand = koszul(&pi, &adj);
        assert_eq!(lap, by_hand);
        assert_eq!(lap, a.scale(&rational(2, 1)));
        let lc = LogCanonical::from_bivector(&pi).unwrap();
        assert_eq!(lc.laplacian_eigenvalue(&[1, 1]), rational(2, 1));
    }

    #[test]
    fn non_diagonal_structures_rejected() {
        let ds = build_structure::<ExactScalar>(StructureId::new(StructureKind::DrinfeldSklyanin, 2)).unwrap();
        let a = Form::zero(ds.ambient());
        assert!(matches!(adjoint_and_laplacian(&ds, &a), Err(Error::Contract { .. })));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn euler_expansion_matches_koszul(a in testing::form(Ambient::cotangent(2), 4, 3, 4)) {
            let pi0 = build_structure::<ExactScalar>(StructureId::new(StructureKind::Pi0OfDS, 2)).unwrap();
            let lc = LogCanonical::from_bivector(&pi0).unwrap();
            prop_assert_eq!(lc.differential(&a), koszul(&pi0, &a));
        }

        #[test]
        fn laplacian_acts_by_eigenvalue(
            exps in prop::collection::vec(0u16..3, 3),
            gens in prop::collection::btree_set(0usize..3, 0..=3),
        ) {
            let pi = skew(3);
            let amb = pi.ambient();
            let gens: Vec<usize> = gens.into_iter().collect();
            let a = monomial_form(amb, &exps, &gens);
            let lc = LogCanonical::from_bivector(&pi).unwrap();
            let d = flat_multidegree(&Monomial::from_exponents(&exps), Word::from_indices(&gens).unwrap().1);
            let (_, lap) = adjoint_and_laplacian(&pi, &a).unwrap();
            prop_assert_eq!(lap, a.scale(&lc.laplacian_eigenvalue(&d)));
        }

        #[test]
        fn adjoint_under_factorial_weights(
            a in testing::form(Ambient::holomorphic(3), 3, 2, 2),
            b in testing::form(Ambient::holomorphic(3), 3, 2, 2),
        ) {
            let pi = skew(3);
            let lc = LogCanonical::from_bivector(&pi).unwrap();
            prop_assert_eq!(fischer(&lc.differential(&a), &b), fischer(&a, &lc.adjoint(&b)));
        }
    }
}
