//! Coefficients of `δ_{π₀}` on a multidegree slice of the orbit complex and
//! the homotopy-operator acyclicity test.
//!
//! On forms killed by `i_H` the weight-zero part of the cotangent structure
//! acts on `A^k(m,l)` as `Σ_j a_j i_{z_j∂z_j} − Σ_j b_j i_{ξ_j∂ξ_j}`. A
//! homotopy `s = Σ x_j i*_{z_j∂z_j} + Σ p_j i*_{ξ_j∂ξ_j}` commutes past `i_H`
//! when `Σ x_j m_j − Σ p_j l_j = 0` and gives `δs + sδ = 1` when
//! `Σ a_j x_j m_j − Σ b_j p_j l_j = 1`.

use serde::{Deserialize, Serialize};

use crate::ambient::{Ambient, VariableSet};
use crate::exterior::PolyForm;
use crate::grading::Multidegree;
use crate::scalar::Scalar;
use crate::{Error, Result};

use super::diagonal::{apply_graded, euler_cocontraction, euler_contraction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceCoefficients {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

/// `a_j = −Σ_{i<j} m_i + Σ_{i>j} m_i − l_j`, `b_j = −Σ_{i<j} l_i + Σ_{i>j} l_i − m_j`.
pub fn slice_coefficients(md: &Multidegree) -> SliceCoefficients {
    let n = md.m.len();
    let signed_sum = |v: &[u32], j: usize| -> i64 {
        (0..n).filter(|&i| i != j).map(|i| if i < j { -(v[i] as i64) } else { v[i] as i64 }).sum()
    };
    let a = (0..n).map(|j| signed_sum(&md.m, j) - md.l[j] as i64).collect();
    let b = (0..n).map(|j| signed_sum(&md.l, j) - md.m[j] as i64).collect();
    SliceCoefficients { a, b }
}

#[derive(Clone, Debug, PartialEq)]
pub enum AcyclicityVerdict<S> {
    /// Homotopy coefficients `x` (on `z`) and `p` (on `ξ`).
    Acyclic { x: Vec<S>, p: Vec<S> },
    /// `δ_{π₀} = λ i_H` on the whole slice.
    NonAcyclic { lambda: i64 },
}

impl<S> AcyclicityVerdict<S> {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, AcyclicityVerdict::Acyclic { .. })
    }
}

fn dot<S: Scalar>(u: &[S], v: &[S]) -> S {
    u.iter().zip(v).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

pub fn acyclicity_classifier<S: Scalar>(md: &Multidegree) -> Result<AcyclicityVerdict<S>> {
    if md.m.len() != md.l.len() {
        return Err(Error::contract("acyclicity_classifier", format!("{md} has blocks of different length")));
    }
    if md.total_m() != md.total_l() {
        return Err(Error::contract("acyclicity_classifier", format!("{md} has unequal z and xi degrees")));
    }
    let coeffs = slice_coefficients(md);
    let n = md.m.len();
    let int = |k: i64| S::from_int(k);
    // constraints on y = (x, p): y·u = 0 and y·v = 1
    let u: Vec<S> = md.m.iter().map(|&k| int(k as i64)).chain(md.l.iter().map(|&k| int(-(k as i64)))).collect();
    let v: Vec<S> = (0..n)
        .map(|j| int(coeffs.a[j] * md.m[j] as i64))
        .chain((0..n).map(|j| int(-coeffs.b[j] * md.l[j] as i64)))
        .collect();
    let uu = dot(&u, &u);
    let uv = dot(&u, &v);
    let w: Vec<S> = v.iter().zip(&u).map(|(vi, ui)| vi.clone() * uu.clone() - ui.clone() * uv.clone()).collect();
    let wv = dot(&w, &v);
    if wv.is_zero() {
        // v is parallel to u; the common ratio is λ
        let lambda = (0..n)
            .find(|&j| md.m[j] != 0)
            .map(|j| coeffs.a[j])
            .or_else(|| (0..n).find(|&j| md.l[j] != 0).map(|j| coeffs.b[j]))
            .unwrap_or(0);
        return Ok(AcyclicityVerdict::NonAcyclic { lambda });
    }
    let y: Vec<S> = w.into_iter().map(|wi| wi / wv.clone()).collect();
    let p = y[n..].to_vec();
    let mut x = y;
    x.truncate(n);
    Ok(AcyclicityVerdict::Acyclic { x, p })
}

fn require_cotangent(op: &'static str, ambient: Ambient) -> Result<()> {
    if ambient.set == VariableSet::Cotangent {
        Ok(())
    } else {
        Err(Error::contract(op, format!("expected cotangent variables, got {ambient}")))
    }
}

/// `Σ_j a_j i_{z_j∂z_j} − Σ_j b_j i_{ξ_j∂ξ_j}` with coefficients taken from
/// the multidegree of each term.
pub fn slice_formula_differential<S: Scalar>(a: &PolyForm<S>) -> Result<PolyForm<S>> {
    let ambient = a.ambient();
    require_cotangent("slice_formula_differential", ambient)?;
    Ok(apply_graded(
        a,
        |d| {
            let c = slice_coefficients(&Multidegree::from_flat(ambient, d));
            c.a.iter().map(|&k| S::from_int(k)).chain(c.b.iter().map(|&k| S::from_int(-k))).collect()
        },
        euler_contraction,
    ))
}

/// `s = Σ x_j i*_{z_j∂z_j} + Σ p_j i*_{ξ_j∂ξ_j}`.
pub fn apply_homotopy<S: Scalar>(x: &[S], p: &[S], a: &PolyForm<S>) -> Result<PolyForm<S>> {
    require_cotangent("apply_homotopy", a.ambient())?;
    let coeffs: Vec<S> = x.iter().chain(p).cloned().collect();
    Ok(apply_graded(a, |_| coeffs.clone(), euler_cocontraction))
}

/// `i_H` with `X_H = Σ z_j∂z_j − Σ ξ_j∂ξ_j`.
pub fn hamiltonian_contraction<S: Scalar>(a: &PolyForm<S>) -> Result<PolyForm<S>> {
    let ambient = a.ambient();
    require_cotangent("hamiltonian_contraction", ambient)?;
    let n = ambient.n;
    Ok(apply_graded(
        a,
        |_| (0..2 * n).map(|v| if v < n { S::one() } else { -S::one() }).collect(),
        euler_contraction,
    ))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::ExactScalar;

    fn md(m: &[u32], l: &[u32]) -> Multidegree {
        Multidegree::new(m.to_vec(), l.to_vec())
    }

    /// Literal double loop over the index sets.
    fn oracle(m: &[u32], l: &[u32]) -> (Vec<i64>, Vec<i64>) {
        let n = m.len();
        let mut a = vec![0i64; n];
        let mut b = vec![0i64; n];
        for j in 0..n {
            for i in 0..n {
                if i < j {
                    a[j] -= m[i] as i64;
                    b[j] -= l[i] as i64;
                }
                if i > j {
                    a[j] += m[i] as i64;
                    b[j] += l[i] as i64;
                }
            }
            a[j] -= l[j] as i64;
            b[j] -= m[j] as i64;
        }
        (a, b)
    }

    #[test]
    fn coefficient_examples() {
        let c = slice_coefficients(&md(&[1, 0], &[0, 1]));
        assert_eq!((c.a.clone(), c.b.clone()), (vec![0, -2], vec![0, 0]));
        assert_eq!((c.a, c.b), oracle(&[1, 0], &[0, 1]));
        let c = slice_coefficients(&md(&[0, 1, 0], &[0, 1, 0]));
        assert_eq!((c.a.clone(), c.b.clone()), (vec![1, -1, -1], vec![1, -1, -1]));
        assert_eq!((c.a, c.b), oracle(&[0, 1, 0], &[0, 1, 0]));
        let c = slice_coefficients(&md(&[0, 0], &[0, 0]));
        assert_eq!((c.a, c.b), (vec![0, 0], vec![0, 0]));
    }

    #[test]
    fn verdict_examples() {
        // supports I = {1, 3}, J = {1}: λ = −1
        let v = acyclicity_classifier::<ExactScalar>(&md(&[1, 0, 1], &[2, 0, 0])).unwrap();
        assert_eq!(v, AcyclicityVerdict::NonAcyclic { lambda: -1 });
        // moving the ξ support to the larger index breaks the common λ (a_1 = 1, a_3 = −3)
        let v = acyclicity_classifier::<ExactScalar>(&md(&[1, 0, 1], &[0, 0, 2])).unwrap();
        assert!(v.is_acyclic());
        let v = acyclicity_classifier::<ExactScalar>(&md(&[0, 0], &[0, 0])).unwrap();
        assert_eq!(v, AcyclicityVerdict::NonAcyclic { lambda: 0 });
    }

    #[test]
    fn contract_violations() {
        assert!(acyclicity_classifier::<ExactScalar>(&md(&[1, 0], &[0, 0])).is_err());
        assert!(acyclicity_classifier::<ExactScalar>(&md(&[1, 0], &[1])).is_err());
        let schubert = PolyForm::<ExactScalar>::zero(Ambient::schubert(2));
        assert!(slice_formula_differential(&schubert).is_err());
    }

    fn balanced_pair() -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
        (prop::collection::vec(0u32..3, 3), prop::collection::vec(0u32..3, 3))
            .prop_filter("balanced", |(m, l)| m.iter().sum::<u32>() == l.iter().sum::<u32>())
    }

    proptest! {
        #[test]
        fn coefficients_match_oracle((m, l) in balanced_pair()) {
            let c = slice_coefficients(&md(&m, &l));
            prop_assert_eq!((c.a, c.b), oracle(&m, &l));
        }

        #[test]
        fn verdict_matches_common_lambda((m, l) in balanced_pair()) {
            let d = md(&m, &l);
            let (a, b) = oracle(&m, &l);
            let mut values: Vec<i64> = (0..3).filter(|&i| m[i] != 0).map(|i| a[i]).collect();
            values.extend((0..3).filter(|&j| l[j] != 0).map(|j| b[j]));
            let common = values.windows(2).all(|w| w[0] == w[1]);
            match acyclicity_classifier::<ExactScalar>(&d).unwrap() {
                AcyclicityVerdict::NonAcyclic { lambda } => {
                    prop_assert!(common);
                    prop_assert_eq!(lambda, values.first().copied().unwrap_or(0));
                }
                AcyclicityVerdict::Acyclic { x, p } => {
                    prop_assert!(!common);
                    let int = |k: i64| ExactScalar::from_integer(k.into());
                    let mut kernel = int(0);
                    let mut normal = int(0);
                    for j in 0..3 {
                        kernel += x[j].clone() * int(m[j] as i64) - p[j].clone() * int(l[j] as i64);
                        normal += x[j].clone() * int(a[j] * m[j] as i64) - p[j].clone() * int(b[j] * l[j] as i64);
                    }
                    prop_assert_eq!(kernel, int(0));
                    prop_assert_eq!(normal, int(1));
                }
            }
        }
    }
}
