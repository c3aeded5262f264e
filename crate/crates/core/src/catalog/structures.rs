use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::ambient::{Ambient, VariableSet};
use crate::exterior::calculus::schouten_bracket;
use crate::exterior::PolyVector;
use crate::monomial::Monomial;
use crate::poisson::{jacobiator_mod_ideal, OrbitIdeal};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::word::Word;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StructureKind {
    /// `Σ_{i<j} z_iz_j ∂z_i∧∂z_j − Σ_{i<j} ξ_iξ_j ∂ξ_i∧∂ξ_j + Σ_{i<j} z_iξ_i ∂z_j∧∂ξ_j − Σ_{i>j} z_iξ_i ∂z_j∧∂ξ_j`.
    RMatrixSec1,
    /// `π_ω = H Σ_i ∂z_i∧∂ξ_i`.
    SymplecticOmega,
    /// Constant bivector `Σ_i ∂z_i∧∂ξ_i` inverse to `Σ dz_i∧dξ_i`.
    KirillovViaH,
    /// `a π_ω + b π'` with `π' = −RMatrixSec1`.
    Pencil(Rational64, Rational64),
    DrinfeldSklyanin,
    Pi0OfDS,
    Pi1OfDS,
    /// `Σ_{i<j} z_iz_j ∂z_i∧∂z_j` on holomorphic coordinates.
    SkewPolyEx3,
    SchubertDSEx4,
    SchubertPi0Ex4,
    SchubertPi1Ex4,
}

impl StructureKind {
    pub const NAMED: [StructureKind; 10] = [
        StructureKind::RMatrixSec1,
        StructureKind::SymplecticOmega,
        StructureKind::KirillovViaH,
        StructureKind::DrinfeldSklyanin,
        StructureKind::Pi0OfDS,
        StructureKind::Pi1OfDS,
        StructureKind::SkewPolyEx3,
        StructureKind::SchubertDSEx4,
        StructureKind::SchubertPi0Ex4,
        StructureKind::SchubertPi1Ex4,
    ];

    pub fn ambient(&self, n: usize) -> Ambient {
        match self {
            StructureKind::SkewPolyEx3 => Ambient::holomorphic(n),
            StructureKind::SchubertDSEx4 | StructureKind::SchubertPi0Ex4 | StructureKind::SchubertPi1Ex4 => {
                Ambient::schubert(n)
            }
            _ => Ambient::cotangent(n),
        }
    }

    /// Weight-zero and positive-weight parts, where declared.
    pub fn declared_split(&self) -> Option<(StructureKind, Option<StructureKind>)> {
        use StructureKind::*;
        match self {
            DrinfeldSklyanin => Some((Pi0OfDS, Some(Pi1OfDS))),
            SchubertDSEx4 => Some((SchubertPi0Ex4, Some(SchubertPi1Ex4))),
            Pi0OfDS | SchubertPi0Ex4 | SkewPolyEx3 => Some((*self, None)),
            _ => None,
        }
    }
}

fn parse_ratio(s: &str) -> Option<Rational64> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let num: i64 = a.trim().parse().ok()?;
            let den: i64 = b.trim().parse().ok()?;
            (den != 0).then(|| Rational64::new(num, den))
        }
        None => Some(Rational64::from_integer(s.parse().ok()?)),
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureKind::Pencil(a, b) => write!(f, "Pencil({a},{b})"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for StructureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(args) = s.strip_prefix("Pencil(").and_then(|r| r.strip_suffix(')')) {
            let parsed = args.split_once(',').and_then(|(a, b)| Some((parse_ratio(a)?, parse_ratio(b)?)));
            return parsed
                .map(|(a, b)| StructureKind::Pencil(a, b))
                .ok_or_else(|| Error::UnknownStructure(s.to_string()));
        }
        StructureKind::NAMED
            .iter()
            .find(|k| k.to_string() == s)
            .copied()
            .ok_or_else(|| Error::UnknownStructure(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StructureId {
    pub kind: StructureKind,
    pub n: usize,
}

impl StructureId {
    pub fn new(kind: StructureKind, n: usize) -> Self {
        StructureId { kind, n }
    }

    pub fn parse(name: &str, n: usize) -> Result<Self> {
        Ok(StructureId { kind: name.parse()?, n })
    }

    pub fn ambient(&self) -> Ambient {
        self.kind.ambient(self.n)
    }

    pub fn declared_split(&self) -> Option<(StructureId, Option<StructureId>)> {
        self.kind
            .declared_split()
            .map(|(p0, p1)| (StructureId::new(p0, self.n), p1.map(|k| StructureId::new(k, self.n))))
    }
}

impl fmt::Display for StructureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n={})", self.kind, self.n)
    }
}

/// Accumulates `c · x_p x_q ∂_a∧∂_b` terms.
struct Builder<S> {
    ambient: Ambient,
    out: PolyVector<S>,
}

impl<S: Scalar> Builder<S> {
    fn new(ambient: Ambient) -> Self {
        Builder { ambient, out: PolyVector::zero(ambient) }
    }

    fn add(&mut self, c: S, vars: &[usize], a: usize, b: usize) {
        let nv = self.ambient.nvars();
        let m = vars.iter().fold(Monomial::one(nv), |m, &v| m.raise(v));
        let (sign, w) = Word::from_indices(&[a, b]).expect("distinct generators");
        self.out.add_term(w, m, c * S::from_int(sign));
    }

    fn add_i(&mut self, c: i64, vars: &[usize], a: usize, b: usize) {
        self.add(S::from_int(c), vars, a, b);
    }
}

fn ratio<S: Scalar>(r: Rational64) -> S {
    S::from_int(*r.numer()) / S::from_int(*r.denom())
}

/// Coefficient of `∂z_j∧∂ξ_j` in `π_ω` is `H`.
fn add_omega<S: Scalar>(bd: &mut Builder<S>, c: S) {
    let amb = bd.ambient;
    for j in 1..=amb.n {
        for k in 1..=amb.n {
            bd.add(c.clone(), &[amb.z(k), amb.w(k)], amb.z(j), amb.w(j));
        }
    }
}

/// `s · RMatrixSec1`.
fn add_rmatrix<S: Scalar>(bd: &mut Builder<S>, s: S) {
    let amb = bd.ambient;
    let n = amb.n;
    for i in 1..=n {
        for j in 1..=n {
            if i < j {
                bd.add(s.clone(), &[amb.z(i), amb.z(j)], amb.z(i), amb.z(j));
                bd.add(-s.clone(), &[amb.w(i), amb.w(j)], amb.w(i), amb.w(j));
                bd.add(s.clone(), &[amb.z(i), amb.w(i)], amb.z(j), amb.w(j));
            } else if i > j {
                bd.add(-s.clone(), &[amb.z(i), amb.w(i)], amb.z(j), amb.w(j));
            }
        }
    }
}

fn add_ds_pi0<S: Scalar>(bd: &mut Builder<S>) {
    let amb = bd.ambient;
    let n = amb.n;
    for i in 1..=n {
        for j in i + 1..=n {
            bd.add_i(-1, &[amb.z(i), amb.z(j)], amb.z(i), amb.z(j));
            bd.add_i(1, &[amb.w(i), amb.w(j)], amb.w(i), amb.w(j));
        }
        bd.add_i(1, &[amb.z(i), amb.w(i)], amb.z(i), amb.w(i));
    }
}

fn add_ds_pi1<S: Scalar>(bd: &mut Builder<S>) {
    let amb = bd.ambient;
    for i in 1..=amb.n {
        for j in 1..i {
            bd.add_i(2, &[amb.z(i), amb.w(i)], amb.z(j), amb.w(j));
        }
    }
}

fn add_schubert_pi0<S: Scalar>(bd: &mut Builder<S>) {
    let amb = bd.ambient;
    let n = amb.n;
    for i in 1..=n {
        for j in 1..=n {
            if i < j {
                bd.add_i(1, &[amb.z(i), amb.z(j)], amb.z(i), amb.z(j));
                bd.add_i(-1, &[amb.w(i), amb.w(j)], amb.w(i), amb.w(j));
            }
            let c = if i == j { 2 } else { 1 };
            bd.add_i(c, &[amb.z(i), amb.w(j)], amb.z(i), amb.w(j));
        }
    }
}

/// Positive-weight part: `2 Σ_{i<j} z_i z̄_i ∂z_j∧∂z̄_j + 2 (Σ_k z_k z̄_k) Σ_{i,j} z_i z̄_j ∂z_i∧∂z̄_j`.
fn add_schubert_pi1<S: Scalar>(bd: &mut Builder<S>) {
    let amb = bd.ambient;
    let n = amb.n;
    for i in 1..=n {
        for j in i + 1..=n {
            bd.add_i(2, &[amb.z(i), amb.w(i)], amb.z(j), amb.w(j));
        }
    }
    for k in 1..=n {
        for i in 1..=n {
            for j in 1..=n {
                bd.add_i(2, &[amb.z(k), amb.w(k), amb.z(i), amb.w(j)], amb.z(i), amb.w(j));
            }
        }
    }
}

pub fn build_structure<S: Scalar>(id: StructureId) -> Result<PolyVector<S>> {
    use StructureKind::*;
    if id.n < 2 {
        return Err(Error::contract("build_structure", format!("n must be at least 2, got {}", id.n)));
    }
    let ambient = id.ambient();
    let mut bd = Builder::new(ambient);
    match id.kind {
        RMatrixSec1 => add_rmatrix(&mut bd, S::one()),
        SymplecticOmega => add_omega(&mut bd, S::one()),
        KirillovViaH => {
            for i in 1..=id.n {
                bd.add_i(1, &[], ambient.z(i), ambient.w(i));
            }
        }
        Pencil(a, b) => {
            add_omega(&mut bd, ratio(a));
            add_rmatrix(&mut bd, -ratio::<S>(b));
        }
        DrinfeldSklyanin => {
            add_ds_pi0(&mut bd);
            add_ds_pi1(&mut bd);
        }
        Pi0OfDS => add_ds_pi0(&mut bd),
        Pi1OfDS => add_ds_pi1(&mut bd),
        SkewPolyEx3 => {
            for i in 1..=id.n {
                for j in i + 1..=id.n {
                    bd.add_i(1, &[ambient.z(i), ambient.z(j)], ambient.z(i), ambient.z(j));
                }
            }
        }
        SchubertDSEx4 => {
            add_schubert_pi0(&mut bd);
            add_schubert_pi1(&mut bd);
        }
        SchubertPi0Ex4 => add_schubert_pi0(&mut bd),
        SchubertPi1Ex4 => add_schubert_pi1(&mut bd),
    }
    Ok(bd.out)
}

/// Weight-homogeneous components keyed by weight.
pub fn weight_split<S: Scalar>(v: &PolyVector<S>) -> BTreeMap<i64, PolyVector<S>> {
    v.weight_components()
}

/// How the Schouten self-bracket of a catalog entry behaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SchoutenStatus {
    /// `[π, π] = 0` identically.
    Vanishes,
    /// `[π, π] ≠ 0`, but the Jacobiator of every triple of generators
    /// `z_i ξ_j` lies in the orbit ideal.
    VanishesOnOrbit,
    Nonzero,
}

pub fn schouten_status<S: Scalar>(id: StructureId) -> Result<SchoutenStatus> {
    let pi = build_structure::<S>(id)?;
    if schouten_bracket(&pi, &pi).is_zero() {
        return Ok(SchoutenStatus::Vanishes);
    }
    let amb = id.ambient();
    if amb.set != VariableSet::Cotangent {
        return Ok(SchoutenStatus::Nonzero);
    }
    let gens: Vec<Polynomial<S>> = (1..=id.n)
        .flat_map(|i| (1..=id.n).map(move |j| (i, j)))
        .map(|(i, j)| &Polynomial::var(amb, amb.z(i)) * &Polynomial::var(amb, amb.xi(j)))
        .collect();
    let ideal = OrbitIdeal::default();
    for (a, f) in gens.iter().enumerate() {
        for (b, g) in gens.iter().enumerate().skip(a + 1) {
            for h in gens.iter().skip(b + 1) {
                if !jacobiator_mod_ideal(&pi, f, g, h, &ideal)?.is_zero() {
                    return Ok(SchoutenStatus::Nonzero);
                }
            }
        }
    }
    Ok(SchoutenStatus::VanishesOnOrbit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rational, ExactScalar, Multivector};

    fn build(kind: StructureKind, n: usize) -> Multivector {
        build_structure(StructureId::new(kind, n)).unwrap()
    }

    fn pencil(a: i64, b: i64) -> StructureKind {
        StructureKind::Pencil(Rational64::from_integer(a), Rational64::from_integer(b))
    }

    #[test]
    fn rmatrix_at_n2() {
        let amb = Ambient::cotangent(2);
        let (z1, z2, x1, x2) = (amb.z(1), amb.z(2), amb.xi(1), amb.xi(2));
        let mut bd = Builder::<ExactScalar>::new(amb);
        bd.add_i(1, &[z1, z2], z1, z2);
        bd.add_i(-1, &[x1, x2], x1, x2);
        bd.add_i(1, &[z1, x1], z2, x2);
        bd.add_i(-1, &[z2, x2], z1, x1);
        assert_eq!(build(StructureKind::RMatrixSec1, 2), bd.out);
    }

    #[test]
    fn pencil_endpoints() {
        for n in 2..=4 {
            assert_eq!(build(pencil(1, 0), n), build(StructureKind::SymplecticOmega, n));
            assert_eq!(build(pencil(1, 1), n), build(StructureKind::DrinfeldSklyanin, n));
            assert_eq!(build(pencil(0, 1), n), -&build(StructureKind::RMatrixSec1, n));
        }
    }

    #[test]
    fn declared_splits_sum() {
        for n in 2..=5 {
            let ds = &build(StructureKind::Pi0OfDS, n) + &build(StructureKind::Pi1OfDS, n);
            assert_eq!(ds, build(StructureKind::DrinfeldSklyanin, n));
        }
        for n in 2..=4 {
            let ex4 = &build(StructureKind::SchubertPi0Ex4, n) + &build(StructureKind::SchubertPi1Ex4, n);
            assert_eq!(ex4, build(StructureKind::SchubertDSEx4, n));
        }
    }

    #[test]
    fn weight_profiles() {
        for n in 2..=4 {
            for kind in [StructureKind::DrinfeldSklyanin, StructureKind::SchubertDSEx4] {
                let split = weight_split(&build(kind, n));
                let (p0, p1) = kind.declared_split().unwrap();
                assert_eq!(split.get(&0), Some(&build(p0, n)));
                assert!(split.keys().all(|&w| w >= 0));
                let positive = split.iter().filter(|(&w, _)| w > 0).fold(Multivector::zero(kind.ambient(n)), |acc, (_, v)| &acc + v);
                assert_eq!(positive, build(p1.unwrap(), n));
            }
            // z_k ξ_k ∂z_j∧∂ξ_j has weight 2(k − j)
            let want: Vec<i64> = (-(n as i64 - 1)..=(n as i64 - 1)).map(|d| 2 * d).collect();
            assert_eq!(build(StructureKind::SymplecticOmega, n).weights(), want);
        }
        assert!(weight_split(&Multivector::zero(Ambient::cotangent(2))).is_empty());
    }

    #[test]
    fn pi0_matches_its_display() {
        let amb = Ambient::cotangent(3);
        let mut bd = Builder::<ExactScalar>::new(amb);
        for i in 1..=3 {
            for j in i + 1..=3 {
                bd.add_i(-1, &[amb.z(i), amb.z(j)], amb.z(i), amb.z(j));
                bd.add_i(1, &[amb.xi(i), amb.xi(j)], amb.xi(i), amb.xi(j));
            }
            bd.add_i(1, &[amb.z(i), amb.xi(i)], amb.z(i), amb.xi(i));
        }
        assert_eq!(build(StructureKind::Pi0OfDS, 3), bd.out);
    }

    #[test]
    fn self_brackets() {
        let status = |k, n| schouten_status::<ExactScalar>(StructureId::new(k, n)).unwrap();
        for n in 2..=3 {
            assert_eq!(status(StructureKind::DrinfeldSklyanin, n), SchoutenStatus::Vanishes);
            assert_eq!(status(StructureKind::SkewPolyEx3, n), SchoutenStatus::Vanishes);
            assert_eq!(status(StructureKind::SchubertDSEx4, n), SchoutenStatus::Vanishes);
            assert_eq!(status(StructureKind::RMatrixSec1, n), SchoutenStatus::VanishesOnOrbit);
            assert_eq!(status(StructureKind::SymplecticOmega, n), SchoutenStatus::VanishesOnOrbit);
        }
    }

    #[test]
    fn names_round_trip() {
        for kind in StructureKind::NAMED.iter().copied().chain([StructureKind::Pencil(Rational64::new(2, 3), Rational64::from_integer(-1))]) {
            assert_eq!(kind.to_string().parse::<StructureKind>().unwrap(), kind);
        }
        assert_eq!(StructureId::parse("Pencil(1, 1/2)", 2).unwrap().kind, StructureKind::Pencil(Rational64::from_integer(1), Rational64::new(1, 2)));
        assert!(matches!("Unknown".parse::<StructureKind>(), Err(Error::UnknownStructure(_))));
        assert!(matches!("Pencil(1,0/0)".parse::<StructureKind>(), Err(Error::UnknownStructure(_))));
    }

    #[test]
    fn small_n_rejected() {
        assert!(build_structure::<ExactScalar>(StructureId::new(StructureKind::DrinfeldSklyanin, 1)).is_err());
    }

    #[test]
    fn pencil_coefficients_are_exact() {
        let p = build(StructureKind::Pencil(Rational64::new(1, 3), Rational64::from_integer(0)), 2);
        let omega = build(StructureKind::SymplecticOmega, 2);
        assert_eq!(p, omega.scale(&rational(1, 3)));
    }
}
