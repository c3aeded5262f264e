use num_rational::Rational64;

use crate::ambient::Ambient;
use crate::exterior::calculus::poisson_bracket;
use crate::poisson::{hamiltonian, OrbitIdeal};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::{Error, Result};

use super::structures::{build_structure, StructureId, StructureKind};

/// `f = Σ_{j≤k} f_j ↦ Σ_j f_j H^{k−j} c^{j−k}` on level `k` of the filtration.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogenizationMap<S> {
    pub k: u32,
    pub c: S,
}

impl<S: Scalar> HomogenizationMap<S> {
    pub fn new(k: u32) -> Self {
        HomogenizationMap { k, c: S::one() }
    }

    pub fn with_constant(k: u32, c: S) -> Self {
        HomogenizationMap { k, c }
    }
}

pub fn homogenize<S: Scalar>(map: &HomogenizationMap<S>, f: &Polynomial<S>) -> Result<Polynomial<S>> {
    let ambient = f.ambient();
    if map.c.is_zero() {
        return Err(Error::contract("homogenize", "ideal constant must be nonzero"));
    }
    let parts = f.balanced_components()?;
    let h = hamiltonian::<S>(ambient);
    let mut out = Polynomial::zero(ambient);
    for (j, fj) in parts {
        if j > map.k {
            return Err(Error::contract("homogenize", format!("component of degree {j} exceeds level {}", map.k)));
        }
        let mut scale = S::one();
        for _ in j..map.k {
            scale = scale / map.c.clone();
        }
        out = &out + &(&fj * &h.pow(map.k - j)).scale(&scale);
    }
    Ok(out)
}

/// Balanced monomials of bidegree `(k, k)`.
pub fn balanced_monomials<S: Scalar>(n: usize, k: u32) -> Vec<Polynomial<S>> {
    let amb = Ambient::cotangent(n);
    let half = crate::homology::basis::compositions(n, k);
    let mut out = Vec::new();
    for zs in &half {
        for xs in &half {
            let exps: Vec<u16> = zs.iter().chain(xs).map(|&e| e as u16).collect();
            out.push(Polynomial::term(amb, crate::monomial::Monomial::from_exponents(&exps), S::one()));
        }
    }
    out.sort_by(|a, b| a.leading().map(|t| t.0).cmp(&b.leading().map(|t| t.0)));
    out
}

/// `{f, g}_{a,b} = a{f,g}_ω + b{f,g}_π'` reduced modulo the orbit ideal.
pub fn pencil_bracket<S: Scalar>(
    a: Rational64,
    b: Rational64,
    f: &Polynomial<S>,
    g: &Polynomial<S>,
    ideal: &OrbitIdeal<S>,
) -> Result<Polynomial<S>> {
    let n = f.ambient().n;
    let pencil = build_structure::<S>(StructureId::new(StructureKind::Pencil(a, b), n))?;
    crate::poisson::poisson_bracket_mod_ideal(&pencil, f, g, ideal)
}

/// `{f, g}_{a,b}` without reduction.
pub fn pencil_bracket_exact<S: Scalar>(a: Rational64, b: Rational64, f: &Polynomial<S>, g: &Polynomial<S>) -> Result<Polynomial<S>> {
    let n = f.ambient().n;
    let pencil = build_structure::<S>(StructureId::new(StructureKind::Pencil(a, b), n))?;
    Ok(poisson_bracket(&pencil, f, g))
}
