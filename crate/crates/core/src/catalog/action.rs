use serde::{Deserialize, Serialize};

use crate::ambient::Ambient;
use crate::exterior::calculus::{apply_vector_field, schouten_bracket};
use crate::exterior::PolyVector;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::word::Word;

use crate::poisson::hamiltonian as ideal_free_hamiltonian;

/// `M_ij = z_i ξ_j`.
pub fn moment_map<S: Scalar>(n: usize) -> Vec<Vec<Polynomial<S>>> {
    let amb = Ambient::cotangent(n);
    (1..=n)
        .map(|i| (1..=n).map(|j| &Polynomial::var(amb, amb.z(i)) * &Polynomial::var(amb, amb.w(j))).collect())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ActionVariant {
    /// Chevalley generators on `C[z_1..z_n]`.
    HopfBundle,
    /// Lift of `e_ij` to the cotangent space.
    CotangentLift,
}

/// Candidate index placements for the lift `X_ij = z_? ∂z_? − ξ_? ∂ξ_?`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LiftPlacement {
    /// `z_j ∂z_i − ξ_j ∂ξ_i`
    ZjDiXjDi,
    /// `z_j ∂z_i − ξ_i ∂ξ_j`
    ZjDiXiDj,
    /// `z_i ∂z_j − ξ_j ∂ξ_i`
    ZiDjXjDi,
    /// `z_i ∂z_j − ξ_i ∂ξ_j`
    ZiDjXiDj,
}

impl LiftPlacement {
    pub const ALL: [LiftPlacement; 4] =
        [LiftPlacement::ZjDiXjDi, LiftPlacement::ZjDiXiDj, LiftPlacement::ZiDjXjDi, LiftPlacement::ZiDjXiDj];

    /// Placement selected by [`select_lift`].
    pub const SELECTED: LiftPlacement = LiftPlacement::ZjDiXiDj;

    /// `(z coefficient, z derivative, ξ coefficient, ξ derivative)` labels.
    fn labels(self, i: usize, j: usize) -> (usize, usize, usize, usize) {
        match self {
            LiftPlacement::ZjDiXjDi => (j, i, j, i),
            LiftPlacement::ZjDiXiDj => (j, i, i, j),
            LiftPlacement::ZiDjXjDi => (i, j, j, i),
            LiftPlacement::ZiDjXiDj => (i, j, i, j),
        }
    }
}

fn linear_field<S: Scalar>(amb: Ambient, terms: &[(i64, usize, usize)]) -> PolyVector<S> {
    let mut out = PolyVector::zero(amb);
    for &(c, coef_var, dir) in terms {
        out.add_term(Word::single(dir), Monomial::var(amb.nvars(), coef_var), S::from_int(c));
    }
    out
}

/// `X_ij` for one-based `i, j`.
pub fn lift_generator<S: Scalar>(n: usize, placement: LiftPlacement, i: usize, j: usize) -> PolyVector<S> {
    let amb = Ambient::cotangent(n);
    let (zc, zd, xc, xd) = placement.labels(i, j);
    linear_field(amb, &[(1, amb.z(zc), amb.z(zd)), (-1, amb.w(xc), amb.w(xd))])
}

/// Labelled generators of the action.
#[derive(Clone, Debug, PartialEq)]
pub struct ActionField<S> {
    pub label: String,
    pub field: PolyVector<S>,
}

pub fn sl_action_fields<S: Scalar>(n: usize, variant: ActionVariant) -> Vec<ActionField<S>> {
    match variant {
        ActionVariant::HopfBundle => {
            let amb = Ambient::holomorphic(n);
            let mut out = Vec::new();
            for i in 1..n {
                let (a, b) = (amb.z(i), amb.z(i + 1));
                out.push(ActionField { label: format!("e{i}"), field: linear_field(amb, &[(1, a, b)]) });
                out.push(ActionField { label: format!("f{i}"), field: linear_field(amb, &[(1, b, a)]) });
                out.push(ActionField { label: format!("h{i}"), field: linear_field(amb, &[(1, a, a), (-1, b, b)]) });
            }
            out
        }
        ActionVariant::CotangentLift => {
            let mut out = Vec::new();
            for i in 1..=n {
                for j in 1..=n {
                    out.push(ActionField {
                        label: format!("X{i}{j}"),
                        field: lift_generator(n, LiftPlacement::SELECTED, i, j),
                    });
                }
            }
            out
        }
    }
}

/// Failures of the Chevalley relations `[h_i,h_j] = 0`, `[e_i,f_j] = δ_ij h_i`,
/// `[h_i,e_j] = A_ij e_j`, `[h_i,f_j] = −A_ij f_j` and the Serre relations.
pub fn chevalley_failures<S: Scalar>(n: usize) -> Vec<String> {
    let fields = sl_action_fields::<S>(n, ActionVariant::HopfBundle);
    let get = |kind: usize, i: usize| &fields[3 * (i - 1) + kind].field;
    let (e, f, h) = (|i| get(0, i), |i| get(1, i), |i| get(2, i));
    let cartan = |i: usize, j: usize| -> i64 {
        if i == j {
            2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    };
    let amb = Ambient::holomorphic(n);
    let zero = PolyVector::zero(amb);
    let mut failures = Vec::new();
    let mut expect = |name: String, got: PolyVector<S>, want: PolyVector<S>| {
        if got != want {
            failures.push(format!("{name}: got {got}, expected {want}"));
        }
    };
    for i in 1..n {
        for j in 1..n {
            expect(format!("[h{i},h{j}]"), schouten_bracket(h(i), h(j)), zero.clone());
            let ef = if i == j { h(i).clone() } else { zero.clone() };
            expect(format!("[e{i},f{j}]"), schouten_bracket(e(i), f(j)), ef);
            let a = S::from_int(cartan(i, j));
            expect(format!("[h{i},e{j}]"), schouten_bracket(h(i), e(j)), e(j).scale(&a));
            expect(format!("[h{i},f{j}]"), schouten_bracket(h(i), f(j)), f(j).scale(&-a));
            if i != j {
                let reps = (1 - cartan(i, j)) as usize;
                let mut ad_e = e(j).clone();
                let mut ad_f = f(j).clone();
                for _ in 0..reps {
                    ad_e = schouten_bracket(e(i), &ad_e);
                    ad_f = schouten_bracket(f(i), &ad_f);
                }
                expect(format!("serre e{i},e{j}"), ad_e, zero.clone());
                expect(format!("serre f{i},f{j}"), ad_f, zero.clone());
            }
        }
    }
    failures
}

/// Outcome of testing one lift placement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftCheck {
    pub placement: LiftPlacement,
    /// `[X_ij, X_kl] = s(δ_jk X_il − δ_li X_kj)` with a single sign `s`.
    pub gl_relations: Option<i64>,
    /// `X_ij(H) = 0`.
    pub preserves_h: bool,
    /// `X_ab(M) = [E_ab, M]` entrywise.
    pub momentum_equivariant: bool,
}

impl LiftCheck {
    pub fn passes(&self) -> bool {
        self.gl_relations.is_some() && self.preserves_h && self.momentum_equivariant
    }
}

pub fn check_lift<S: Scalar>(n: usize, placement: LiftPlacement) -> LiftCheck {
    let x = |i, j| lift_generator::<S>(n, placement, i, j);
    let amb = Ambient::cotangent(n);
    let mut sign: Option<Option<i64>> = None;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let got = schouten_bracket(&x(i, j), &x(k, l));
                    let mut want = PolyVector::zero(amb);
                    if j == k {
                        want = &want + &x(i, l);
                    }
                    if l == i {
                        want = &want - &x(k, j);
                    }
                    let s = if want.is_zero() {
                        if got.is_zero() {
                            continue;
                        }
                        None
                    } else if got == want {
                        Some(1)
                    } else if got == -&want {
                        Some(-1)
                    } else {
                        None
                    };
                    sign = match sign {
                        None => Some(s),
                        Some(prev) if prev == s => Some(prev),
                        Some(_) => Some(None),
                    };
                }
            }
        }
    }
    let h = ideal_free_hamiltonian::<S>(amb);
    let mm = moment_map::<S>(n);
    let mut preserves_h = true;
    let mut equivariant = true;
    for a in 1..=n {
        for b in 1..=n {
            let xab = x(a, b);
            preserves_h &= apply_vector_field(&xab, &h).is_zero();
            for i in 1..=n {
                for j in 1..=n {
                    // [E_ab, M]_ij = δ_ai M_bj − M_ia δ_bj
                    let mut want = Polynomial::zero(amb);
                    if a == i {
                        want = &want + &mm[b - 1][j - 1];
                    }
                    if b == j {
                        want = &want - &mm[i - 1][a - 1];
                    }
                    equivariant &= apply_vector_field(&xab, &mm[i - 1][j - 1]) == want;
                }
            }
        }
    }
    LiftCheck { placement, gl_relations: sign.flatten(), preserves_h, momentum_equivariant: equivariant }
}

/// First placement passing every check, with the full table.
pub fn select_lift<S: Scalar>(n: usize) -> (Option<LiftPlacement>, Vec<LiftCheck>) {
    let table: Vec<LiftCheck> = LiftPlacement::ALL.iter().map(|&p| check_lift::<S>(n, p)).collect();
    (table.iter().find(|c| c.passes()).map(|c| c.placement), table)
}
