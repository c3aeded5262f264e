use serde::{Deserialize, Serialize};

use crate::ambient::Ambient;
use crate::catalog::{build_structure, StructureId, StructureKind};
use crate::exterior::calculus::{bivector_form_pairing, differential};
use crate::exterior::{PolyForm, PolyVector};
use crate::homology::{truncate_to, Echelon, SliceComplex, SliceConstraint, SliceSpec, TermIndex};
use crate::poisson::differential::koszul;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::{Error, Result};

use super::filtration::default_filters;

/// `σ = (z_iξ_j)^p d(z_iξ_j)^μ G^q (dG)^ν` with `G = Σ_{k≥j} z_kξ_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SigmaCocycle {
    pub i: usize,
    pub j: usize,
    pub p: u32,
    pub q: u32,
    pub mu: u32,
    pub nu: u32,
}

fn zx<S: Scalar>(amb: Ambient, i: usize, j: usize) -> Polynomial<S> {
    &Polynomial::var(amb, amb.z(i)) * &Polynomial::var(amb, amb.w(j))
}

fn tail_sum<S: Scalar>(amb: Ambient, j: usize) -> Polynomial<S> {
    (j..=amb.n).fold(Polynomial::zero(amb), |acc, k| &acc + &zx(amb, k, k))
}

fn assemble<S: Scalar>(amb: Ambient, f: &Polynomial<S>, p: u32, mu: u32, g: &Polynomial<S>, q: u32, nu: u32) -> PolyForm<S> {
    let mut out = PolyForm::function(&(&f.pow(p) * &g.pow(q)));
    if mu == 1 {
        out = out.wedge(&differential(f));
    }
    if nu == 1 {
        out = out.wedge(&differential(g));
    }
    debug_assert_eq!(out.ambient(), amb);
    out
}

impl SigmaCocycle {
    pub fn new(i: usize, j: usize, p: u32, q: u32, mu: u32, nu: u32) -> Result<Self> {
        if i < j {
            return Err(Error::contract("SigmaCocycle::new", format!("requires i >= j, got i={i}, j={j}")));
        }
        if mu > 1 || nu > 1 {
            return Err(Error::contract("SigmaCocycle::new", "mu and nu must be 0 or 1"));
        }
        Ok(SigmaCocycle { i, j, p, q, mu, nu })
    }

    /// `i(p+μ) + j(p+μ+2q+2ν)`.
    pub fn weight(&self) -> i64 {
        let (i, j) = (self.i as i64, self.j as i64);
        let (p, q, mu, nu) = (self.p as i64, self.q as i64, self.mu as i64, self.nu as i64);
        i * (p + mu) + j * (p + mu + 2 * q + 2 * nu)
    }

    pub fn form<S: Scalar>(&self, n: usize) -> Result<PolyForm<S>> {
        let amb = self.ambient(n)?;
        Ok(assemble(amb, &zx(amb, self.i, self.j), self.p, self.mu, &tail_sum(amb, self.j), self.q, self.nu))
    }

    /// `(z_iξ_j)^p d(z_iξ_j)^μ (z_jξ_j)^q d(z_jξ_j)^ν`.
    pub fn leading<S: Scalar>(&self, n: usize) -> Result<PolyForm<S>> {
        let amb = self.ambient(n)?;
        Ok(assemble(amb, &zx(amb, self.i, self.j), self.p, self.mu, &zx(amb, self.j, self.j), self.q, self.nu))
    }

    fn ambient(&self, n: usize) -> Result<Ambient> {
        if self.i > n || self.j == 0 {
            return Err(Error::contract("SigmaCocycle", format!("indices ({}, {}) out of range for n={n}", self.i, self.j)));
        }
        Ok(Ambient::cotangent(n))
    }

    /// Distinct cocycles: off-diagonal with `p + μ ≥ 1`, and the powers of
    /// `G` and `dG` for each `j`, the constant counted once.
    pub fn is_canonical(&self) -> bool {
        if self.i > self.j {
            self.p + self.mu >= 1
        } else {
            self.p == 0 && self.mu == 0 && (self.j == 1 || self.q + self.nu >= 1)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaCheck {
    pub sigma: SigmaCocycle,
    pub weight: i64,
    pub closed: bool,
    pub in_filtration: bool,
    pub leading_term: bool,
}

impl SigmaCheck {
    pub fn passes(&self) -> bool {
        self.closed && self.in_filtration && self.leading_term
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingCheck {
    pub i: usize,
    pub j: usize,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaReport {
    pub n: usize,
    pub p_max: u32,
    pub q_max: u32,
    pub checks: Vec<SigmaCheck>,
    pub pairings: Vec<PairingCheck>,
}

impl SigmaReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(SigmaCheck::passes) && self.pairings.iter().all(|p| p.vanishes)
    }
}

/// `⟨π, d(z_iξ_j) ∧ d(Σ_{k≥j} z_kξ_k)⟩`.
pub fn pairing_identity<S: Scalar>(pi: &PolyVector<S>, i: usize, j: usize) -> Result<Polynomial<S>> {
    let amb = pi.ambient();
    let two_form = differential(&zx::<S>(amb, i, j)).wedge(&differential(&tail_sum(amb, j)));
    if two_form.is_zero() {
        return Ok(Polynomial::zero(amb));
    }
    bivector_form_pairing(pi, &two_form)
}

pub fn check_sigma<S: Scalar>(pi: &PolyVector<S>, sigma: SigmaCocycle) -> Result<SigmaCheck> {
    let n = pi.ambient().n;
    let form = sigma.form::<S>(n)?;
    let w = sigma.weight();
    let lowest = form.weights().first().copied();
    let rest = &form - &sigma.leading::<S>(n)?;
    Ok(SigmaCheck {
        sigma,
        weight: w,
        closed: koszul(pi, &form).is_zero(),
        in_filtration: lowest.is_none_or(|l| l >= w),
        leading_term: rest.weights().first().is_none_or(|&l| l > w),
    })
}

pub fn sigma_cocycle_suite<S: Scalar>(n: usize, p_max: u32, q_max: u32) -> Result<SigmaReport> {
    let pi = build_structure::<S>(StructureId::new(StructureKind::DrinfeldSklyanin, n))?;
    let mut checks = Vec::new();
    let mut pairings = Vec::new();
    for j in 1..=n {
        for i in j..=n {
            pairings.push(PairingCheck { i, j, vanishes: pairing_identity(&pi, i, j)?.is_zero() });
            for p in 0..=p_max {
                for q in 0..=q_max {
                    for mu in 0..=1 {
                        for nu in 0..=1 {
                            checks.push(check_sigma(&pi, SigmaCocycle::new(i, j, p, q, mu, nu)?)?);
                        }
                    }
                }
            }
        }
    }
    Ok(SigmaReport { n, p_max, q_max, checks, pairings })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceEntry {
    pub form_degree: usize,
    /// Canonical cocycles of this form degree with weight at most the cutoff.
    pub count: usize,
    /// Rank of their classes in homology of the truncated complex.
    pub rank: usize,
    /// Total homology dimension of the truncated complex in this degree.
    pub homology_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceReport {
    pub n: usize,
    pub cutoff: i64,
    pub entries: Vec<IndependenceEntry>,
}

impl IndependenceReport {
    pub fn passes(&self) -> bool {
        self.entries.iter().all(|e| e.rank == e.count)
    }

    /// Whether the cocycles span the truncated homology in every degree.
    pub fn spans(&self) -> bool {
        self.entries.iter().all(|e| e.rank == e.homology_dim)
    }
}

/// Canonical cocycles of weight at most `cutoff`.
pub fn canonical_cocycles(n: usize, cutoff: i64) -> Vec<SigmaCocycle> {
    let mut out = Vec::new();
    let bound = cutoff.max(0) as u32;
    for j in 1..=n {
        for i in j..=n {
            for p in 0..=bound {
                for q in 0..=bound {
                    for mu in 0..=1 {
                        for nu in 0..=1 {
                            let s = SigmaCocycle { i, j, p, q, mu, nu };
                            if s.is_canonical() && s.weight() <= cutoff {
                                out.push(s);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Rank of the canonical cocycle classes in the homology of `δ_{π_DS}` on
/// forms of weight at most `cutoff`, taken modulo higher weights.
pub fn sigma_independence<S: Scalar>(n: usize, cutoff: i64) -> Result<IndependenceReport> {
    let pi = build_structure::<S>(StructureId::new(StructureKind::DrinfeldSklyanin, n))?;
    let ambient = pi.ambient();
    let base = SliceSpec::new(ambient, 0, SliceConstraint::WeightAtMost(cutoff)).with_filters(default_filters(ambient));
    let op = |a: &PolyForm<S>| koszul(&pi, a);
    let cx = SliceComplex::build(&op, &base)?;
    let sigmas = canonical_cocycles(n, cutoff);
    let mut entries = Vec::new();
    for k in 0..=cx.top() {
        let mut index = TermIndex::default();
        let mut span = Echelon::<S>::new(false);
        if let Some(incoming) = cx.images.get(k + 1) {
            for b in incoming {
                span.insert(index.coords(b));
            }
        }
        let boundaries = span.rank();
        let mut count = 0;
        for s in sigmas.iter().filter(|s| (s.mu + s.nu) as usize == k) {
            count += 1;
            span.insert(index.coords(&truncate_to(&base.at_degree(k), &s.form::<S>(n)?)));
        }
        entries.push(IndependenceEntry { form_degree: k, count, rank: span.rank() - boundaries, homology_dim: cx.homology_dim(k) });
    }
    Ok(IndependenceReport { n, cutoff, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ExactScalar;

    fn ds(n: usize) -> PolyVector<ExactScalar> {
        build_structure(StructureId::new(StructureKind::DrinfeldSklyanin, n)).unwrap()
    }

    #[test]
    fn weight_formula() {
        assert_eq!(SigmaCocycle::new(3, 1, 1, 1, 0, 1).unwrap().weight(), 8);
        let s = SigmaCocycle::new(3, 1, 1, 1, 0, 1).unwrap();
        assert_eq!(s.leading::<ExactScalar>(3).unwrap().weights(), vec![8]);
    }

    #[test]
    fn contract_violations() {
        assert!(SigmaCocycle::new(1, 2, 0, 0, 0, 0).is_err());
        assert!(SigmaCocycle::new(2, 1, 0, 0, 2, 0).is_err());
        assert!(SigmaCocycle::new(3, 1, 0, 0, 0, 0).unwrap().form::<ExactScalar>(2).is_err());
    }

    #[test]
    fn small_cocycles_are_closed() {
        let pi = ds(2);
        let c = check_sigma(&pi, SigmaCocycle::new(2, 1, 1, 0, 1, 0).unwrap()).unwrap();
        assert!(c.passes());
        let one = SigmaCocycle::new(1, 1, 0, 0, 0, 0).unwrap();
        assert_eq!(one.form::<ExactScalar>(2).unwrap(), PolyForm::function(&Polynomial::one(Ambient::cotangent(2))));
        assert!(check_sigma(&pi, one).unwrap().passes());
    }

    #[test]
    fn suite_passes_at_n3() {
        let r = sigma_cocycle_suite::<ExactScalar>(3, 2, 2).unwrap();
        assert!(r.passes());
        assert_eq!(r.pairings.len(), 6);
    }

    #[test]
    fn canonical_classes_are_independent() {
        for (n, w) in [(2, 6), (3, 5)] {
            let r = sigma_independence::<ExactScalar>(n, w).unwrap();
            assert!(r.passes(), "{:?}", r.entries);
        }
    }

    #[test]
    fn constant_counted_once() {
        let constants = canonical_cocycles(3, 0);
        assert_eq!(constants, vec![SigmaCocycle { i: 1, j: 1, p: 0, q: 0, mu: 0, nu: 0 }]);
    }
}
