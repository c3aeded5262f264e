//! Checks of the homogenization map: bijectivity at a fixed level,
//! multiplicativity, compatibility with the pencil brackets and with the
//! cotangent-lift action.

use num_rational::Rational64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::ambient::Ambient;
use crate::exterior::calculus::apply_vector_field;
use crate::homology::{Echelon, SparseVec, TermIndex};
use crate::exterior::PolyForm;
use crate::poisson::{hamiltonian, OrbitIdeal};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::Result;

use super::action::{lift_generator, LiftPlacement};
use super::homogenize::{balanced_monomials, homogenize, pencil_bracket_exact, HomogenizationMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionCheck {
    pub n: usize,
    pub k: u32,
    /// Balanced polynomials of degree at most `k`.
    pub domain_dim: usize,
    /// Homogeneous polynomials of bidegree `(k, k)`.
    pub target_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    /// `(H − 1)·B^(k−1)` maps to zero; its dimension is the domain count at `k − 1`.
    pub ideal_dim: usize,
    pub ideal_in_kernel: bool,
}

impl BijectionCheck {
    pub fn passes(&self) -> bool {
        self.rank == self.target_dim && self.kernel_dim == self.ideal_dim && self.ideal_in_kernel
    }
}

fn coords<S: Scalar>(index: &mut TermIndex, f: &Polynomial<S>) -> SparseVec<S> {
    index.coords(&PolyForm::function(f))
}

fn filtered_monomials<S: Scalar>(n: usize, k: u32) -> Vec<Polynomial<S>> {
    (0..=k).flat_map(|j| balanced_monomials::<S>(n, j)).collect()
}

/// Rank and kernel of the level-`k` map from the filtered piece to the
/// homogeneous piece.
pub fn homogenization_bijection<S: Scalar>(n: usize, k: u32) -> Result<BijectionCheck> {
    let map = HomogenizationMap::<S>::new(k);
    let domain = filtered_monomials::<S>(n, k);
    let mut index = TermIndex::default();
    let mut ech = Echelon::<S>::new(false);
    for f in &domain {
        ech.insert(coords(&mut index, &homogenize(&map, f)?));
    }
    let ideal_gen = OrbitIdeal::<S>::default().generator(Ambient::cotangent(n));
    let lower = if k == 0 { Vec::new() } else { filtered_monomials::<S>(n, k - 1) };
    let mut ideal_in_kernel = true;
    for m in &lower {
        ideal_in_kernel &= homogenize(&map, &(&ideal_gen * m))?.is_zero();
    }
    Ok(BijectionCheck {
        n,
        k,
        domain_dim: domain.len(),
        target_dim: balanced_monomials::<S>(n, k).len(),
        rank: ech.rank(),
        kernel_dim: domain.len() - ech.rank(),
        ideal_dim: lower.len(),
        ideal_in_kernel,
    })
}

/// Random balanced polynomial with components of degree `0..=k` and small
/// integer coefficients.
pub fn sample_balanced<S: Scalar>(rng: &mut impl Rng, n: usize, k: u32, terms: usize) -> Polynomial<S> {
    let pool = filtered_monomials::<S>(n, k);
    let mut out = Polynomial::zero(Ambient::cotangent(n));
    for _ in 0..terms {
        let m = &pool[rng.gen_range(0..pool.len())];
        let c = rng.gen_range(-3i64..=3);
        out = &out + &m.scale(&S::from_int(c));
    }
    out
}

/// `(f g)^ = f̂ ĝ` with `f` at level `kf` and `g` at level `kg`.
pub fn multiplicative_on<S: Scalar>(f: &Polynomial<S>, kf: u32, g: &Polynomial<S>, kg: u32) -> Result<bool> {
    let lhs = homogenize(&HomogenizationMap::new(kf + kg), &(f * g))?;
    let rhs = &homogenize(&HomogenizationMap::new(kf), f)? * &homogenize(&HomogenizationMap::new(kg), g)?;
    Ok(lhs == rhs)
}

/// `({f,g}_{a,b})^ ≡ {f̂, ĝ}_{a,b}` modulo `H − 1`, the bracket homogenized
/// at level `kf + kg`.
pub fn pencil_compatible_on<S: Scalar>(
    a: Rational64,
    b: Rational64,
    f: &Polynomial<S>,
    kf: u32,
    g: &Polynomial<S>,
    kg: u32,
) -> Result<bool> {
    let lhs = homogenize(&HomogenizationMap::new(kf + kg), &pencil_bracket_exact(a, b, f, g)?)?;
    let fh = homogenize(&HomogenizationMap::new(kf), f)?;
    let gh = homogenize(&HomogenizationMap::new(kg), g)?;
    let rhs = pencil_bracket_exact(a, b, &fh, &gh)?;
    OrbitIdeal::default().contains(&(&lhs - &rhs))
}

/// `{H, z_i ξ_j}_{a,b} ≡ 0` modulo `H − 1` for all `i, j`.
pub fn hamiltonian_is_pencil_casimir<S: Scalar>(a: Rational64, b: Rational64, n: usize) -> Result<bool> {
    let amb = Ambient::cotangent(n);
    let h = hamiltonian::<S>(amb);
    let ideal = OrbitIdeal::default();
    for i in 1..=n {
        for j in 1..=n {
            let g = &Polynomial::var(amb, amb.z(i)) * &Polynomial::var(amb, amb.xi(j));
            if !ideal.contains(&pencil_bracket_exact(a, b, &h, &g)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivarianceCheck {
    pub n: usize,
    pub k: u32,
    /// `X(f̂) = (X f)^` at level `k`.
    pub fixed_level: bool,
    /// The same identity with both sides taken at level `k + 1`.
    pub shifted_level: bool,
}

/// Equivariance of homogenization under every cotangent-lift generator on
/// the given balanced samples of level `k`.
pub fn homogenization_equivariance<S: Scalar>(n: usize, k: u32, samples: &[Polynomial<S>]) -> Result<EquivarianceCheck> {
    let mut fixed = true;
    let mut shifted = true;
    for level in [k, k + 1] {
        let map = HomogenizationMap::<S>::new(level);
        for a in 1..=n {
            for b in 1..=n {
                let x = lift_generator::<S>(n, LiftPlacement::SELECTED, a, b);
                for f in samples {
                    let ok = apply_vector_field(&x, &homogenize(&map, f)?) == homogenize(&map, &apply_vector_field(&x, f))?;
                    if level == k {
                        fixed &= ok;
                    } else {
                        shifted &= ok;
                    }
                }
            }
        }
    }
    Ok(EquivarianceCheck { n, k, fixed_level: fixed, shifted_level: shifted })
}
