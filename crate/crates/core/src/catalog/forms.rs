use crate::ambient::{Ambient, VariableSet};
use crate::exterior::calculus::{contract_one_form, differential};
use crate::exterior::{PolyForm, PolyVector};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::word::Word;
use crate::{Error, Result};

/// One-forms on the cotangent space adapted to the recursion operator.
#[derive(Clone, Debug, PartialEq)]
pub struct OneFormBasis<S> {
    /// `φ_i = ξ_i dz_i + z_i dξ_i`.
    pub phi: Vec<PolyForm<S>>,
    /// `ψ_i = ξ_i dz_i − z_i dξ_i`.
    pub psi: Vec<PolyForm<S>>,
    /// `φ̄_k = Σ_{i≤k} φ_i`, `k = 1..n−1`.
    pub phi_bar: Vec<PolyForm<S>>,
    /// `a_k ψ_{k+1} − a_{k+1} ψ_k` with `a_i = z_i ξ_i`, `k = 1..n−1`.
    pub psi_bar_cleared: Vec<PolyForm<S>>,
    /// `φ_0 = Σ_i φ_i`.
    pub phi0: PolyForm<S>,
}

fn a_i<S: Scalar>(ambient: Ambient, i: usize) -> Polynomial<S> {
    &Polynomial::var(ambient, ambient.z(i)) * &Polynomial::var(ambient, ambient.w(i))
}

impl<S: Scalar> OneFormBasis<S> {
    pub fn new(n: usize) -> Self {
        let ambient = Ambient::cotangent(n);
        let piece = |i: usize, sign: i64| {
            let dz = PolyForm::generator(ambient, ambient.z(i)).mul_poly(&Polynomial::var(ambient, ambient.w(i)));
            let dxi = PolyForm::generator(ambient, ambient.w(i)).mul_poly(&Polynomial::var(ambient, ambient.z(i)));
            &dz + &dxi.scale(&S::from_int(sign))
        };
        let phi: Vec<_> = (1..=n).map(|i| piece(i, 1)).collect();
        let psi: Vec<_> = (1..=n).map(|i| piece(i, -1)).collect();
        let mut phi_bar = Vec::new();
        let mut acc = PolyForm::zero(ambient);
        for f in &phi {
            acc = &acc + f;
            phi_bar.push(acc.clone());
        }
        let phi0 = phi_bar.pop().unwrap_or_else(|| PolyForm::zero(ambient));
        let psi_bar_cleared = (1..n)
            .map(|k| &psi[k].mul_poly(&a_i(ambient, k)) - &psi[k - 1].mul_poly(&a_i(ambient, k + 1)))
            .collect();
        OneFormBasis { phi, psi, phi_bar, psi_bar_cleared, phi0 }
    }
}

/// `λ_k = Σ_{j≤k} z_jξ_j − Σ_{j>k} z_jξ_j`.
pub fn eigenvalue<S: Scalar>(n: usize, k: usize) -> Polynomial<S> {
    let ambient = Ambient::cotangent(n);
    (1..=n).fold(Polynomial::zero(ambient), |acc, j| {
        let t = a_i::<S>(ambient, j);
        if j <= k {
            &acc + &t
        } else {
            &acc - &t
        }
    })
}

/// `V_Ω`: `∂ξ_i ↦ dz_i`, `∂z_i ↦ −dξ_i`.
pub fn symplectic_lowering<S: Scalar>(v: &PolyVector<S>) -> Result<PolyForm<S>> {
    let ambient = v.ambient();
    if ambient.set != VariableSet::Cotangent {
        return Err(Error::contract("symplectic_lowering", format!("expected cotangent variables, got {ambient}")));
    }
    let mut out = PolyForm::zero(ambient);
    for (w, m, c) in v.terms() {
        let g: Vec<usize> = w.iter().collect();
        if g.len() != 1 {
            return Err(Error::contract("symplectic_lowering", "expected a vector field"));
        }
        let (target, sign) = if ambient.is_first_block(g[0]) {
            (ambient.w(ambient.label(g[0])), -S::one())
        } else {
            (ambient.z(ambient.label(g[0])), S::one())
        };
        out.add_term(Word::single(target), m.clone(), sign * c.clone());
    }
    Ok(out)
}

/// `A(φ) = V_Ω(i_φ π)`.
pub fn recursion_operator<S: Scalar>(pi: &PolyVector<S>, phi: &PolyForm<S>) -> Result<PolyForm<S>> {
    if !phi.is_zero() && phi.degree() != Some(1) {
        return Err(Error::contract("recursion_operator", format!("expected a 1-form, got degrees {:?}", phi.degrees())));
    }
    symplectic_lowering(&contract_one_form(phi, pi)?)
}

/// `f` with `a = f·φ` when such a polynomial exists.
pub fn quotient_by_form<S: Scalar>(a: &PolyForm<S>, phi: &PolyForm<S>) -> Option<Polynomial<S>> {
    if a.is_zero() {
        return Some(Polynomial::zero(a.ambient()));
    }
    let (word, denom) = phi.words().into_iter().find_map(|w| {
        let c = phi.coefficient(w);
        (c.len() == 1).then_some((w, c))
    })?;
    let (m, c) = denom.leading()?;
    let f = a.coefficient(word).div_monomial(m)?.div_scalar(c);
    (phi.mul_poly(&f) == *a).then_some(f)
}

/// How an eigen-relation `A(v) = λ v` holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum EigenStatus {
    Exact,
    ModuloPhi0,
    Fails,
}

pub fn eigen_status<S: Scalar>(
    pi: &PolyVector<S>,
    v: &PolyForm<S>,
    lambda: &Polynomial<S>,
    phi0: &PolyForm<S>,
) -> Result<EigenStatus> {
    let residual = &recursion_operator(pi, v)? - &v.mul_poly(lambda);
    Ok(if residual.is_zero() {
        EigenStatus::Exact
    } else if quotient_by_form(&residual, phi0).is_some() {
        EigenStatus::ModuloPhi0
    } else {
        EigenStatus::Fails
    })
}

/// `d(Σ_{i≤k} z_iξ_i)`, the closed form of `φ̄_k`.
pub fn partial_hamiltonian_differential<S: Scalar>(n: usize, k: usize) -> PolyForm<S> {
    let ambient = Ambient::cotangent(n);
    let h = (1..=k).fold(Polynomial::zero(ambient), |acc, i| &acc + &a_i(ambient, i));
    differential(&h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_structure, StructureId, StructureKind};
    use crate::{ExactScalar, Form, Multivector, Poly};

    fn rmatrix(n: usize) -> Multivector {
        build_structure(StructureId::new(StructureKind::RMatrixSec1, n)).unwrap()
    }

    #[test]
    fn closed_partial_sums() {
        for n in 2..=4 {
            let b = OneFormBasis::<ExactScalar>::new(n);
            for k in 1..n {
                assert_eq!(b.phi_bar[k - 1], partial_hamiltonian_differential(n, k));
            }
            assert_eq!(b.phi0, partial_hamiltonian_differential(n, n));
        }
    }

    #[test]
    fn eigen_relations() {
        for n in 2..=5 {
            let pi = rmatrix(n);
            let b = OneFormBasis::<ExactScalar>::new(n);
            assert!(recursion_operator(&pi, &b.phi0).unwrap().is_zero());
            for k in 1..n {
                let lambda = eigenvalue(n, k);
                assert_eq!(eigen_status(&pi, &b.phi_bar[k - 1], &lambda, &b.phi0).unwrap(), EigenStatus::ModuloPhi0);
                assert_eq!(eigen_status(&pi, &b.psi_bar_cleared[k - 1], &lambda, &b.phi0).unwrap(), EigenStatus::Exact);
            }
        }
    }

    #[test]
    fn recursion_operator_is_tensorial() {
        let n = 3;
        let pi = rmatrix(n);
        let amb = pi.ambient();
        let b = OneFormBasis::<ExactScalar>::new(n);
        let f = &Poly::var(amb, amb.z(2)) * &Poly::var(amb, amb.xi(3)) + Poly::one(amb);
        for phi in b.phi.iter().chain(&b.psi) {
            let lhs = recursion_operator(&pi, &phi.mul_poly(&f)).unwrap();
            assert_eq!(lhs, recursion_operator(&pi, phi).unwrap().mul_poly(&f));
        }
        let two_form = b.phi[0].wedge(&b.phi[1]);
        assert!(recursion_operator(&pi, &two_form).is_err());
    }

    #[test]
    fn lowering_rule() {
        let amb = Ambient::cotangent(2);
        let v = Multivector::generator(amb, amb.xi(1));
        assert_eq!(symplectic_lowering(&v).unwrap(), Form::generator(amb, amb.z(1)));
        let v = Multivector::generator(amb, amb.z(2));
        assert_eq!(symplectic_lowering(&v).unwrap(), -&Form::generator(amb, amb.xi(2)));
    }

    #[test]
    fn quotient_detects_multiples() {
        let b = OneFormBasis::<ExactScalar>::new(2);
        let amb = Ambient::cotangent(2);
        let f = Poly::var(amb, amb.z(2));
        assert_eq!(quotient_by_form(&b.phi0.mul_poly(&f), &b.phi0), Some(f));
        assert_eq!(quotient_by_form(&b.phi[0], &b.phi0), None);
    }
}
