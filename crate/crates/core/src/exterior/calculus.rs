//! Cartan calculus on polynomial forms and multivector fields.
//!
//! Contraction convention: `i_{X∧Y} = i_X ∘ i_Y` and `i_X(df) = X(f)`.
//! With this choice `d∘i_π − i_π∘d` reproduces the decomposable-form
//! expansion of the Koszul differential, and the scalar pairing of a
//! bivector with a 2-form is `⟨X∧Y, α∧β⟩ = α(X)β(Y) − α(Y)β(X) = −i_{X∧Y}(α∧β)`.

use crate::exterior::element::{PolyForm, PolyVector};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::{Error, Result};

pub fn wedge_product<S: Scalar>(a: &PolyForm<S>, b: &PolyForm<S>) -> Result<PolyForm<S>> {
    a.ambient().check_same(&b.ambient())?;
    Ok(a.wedge(b))
}

pub fn exterior_derivative<S: Scalar>(a: &PolyForm<S>) -> PolyForm<S> {
    let mut out = PolyForm::zero(a.ambient());
    for (w, m, c) in a.terms() {
        for (v, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if let Some((sign, w2)) = w.insert_front(v) {
                out.add_term(w2, m.lower(v).unwrap(), c.clone() * S::from_int(sign * e as i64));
            }
        }
    }
    out
}

/// `d f` for a polynomial.
pub fn differential<S: Scalar>(f: &Polynomial<S>) -> PolyForm<S> {
    exterior_derivative(&PolyForm::function(f))
}

pub fn interior_product<S: Scalar>(v: &PolyVector<S>, a: &PolyForm<S>) -> Result<PolyForm<S>> {
    v.ambient().check_same(&a.ambient())?;
    Ok(contract(v, a))
}

pub(crate) fn contract<S: Scalar>(v: &PolyVector<S>, a: &PolyForm<S>) -> PolyForm<S> {
    let mut out = PolyForm::zero(a.ambient());
    for (vw, vm, vc) in v.terms() {
        for (aw, am, ac) in a.terms() {
            if let Some((sign, w)) = vw.contract_into(aw) {
                out.add_term(w, vm.mul(am), S::from_int(sign) * vc.clone() * ac.clone());
            }
        }
    }
    out
}

/// `L_X = d∘i_X + i_X∘d` for a vector field `X`.
pub fn lie_derivative<S: Scalar>(x: &PolyVector<S>, a: &PolyForm<S>) -> Result<PolyForm<S>> {
    x.ambient().check_same(&a.ambient())?;
    if !x.is_zero() && x.degree() != Some(1) {
        return Err(Error::contract("lie_derivative", format!("expected a vector field, got degrees {:?}", x.degrees())));
    }
    Ok(&exterior_derivative(&contract(x, a)) + &contract(x, &exterior_derivative(a)))
}

/// `X(f)` for a vector field `X`.
pub fn apply_vector_field<S: Scalar>(x: &PolyVector<S>, f: &Polynomial<S>) -> Polynomial<S> {
    contract(x, &differential(f)).coefficient(crate::word::Word::EMPTY)
}

/// Schouten–Nijenhuis bracket, computed as the odd Poisson bracket on
/// `T*[1]`: `[P,Q] = Σ_a (P ∂⃖_{θ_a})(∂_{x_a} Q) − (∂_{x_a} P)(∂⃗_{θ_a} Q)`.
/// On vector fields it is the Lie bracket; `[X, f] = X(f)`.
pub fn schouten_bracket<S: Scalar>(u: &PolyVector<S>, v: &PolyVector<S>) -> PolyVector<S> {
    assert_eq!(u.ambient(), v.ambient(), "variable sets differ");
    let mut out = PolyVector::zero(u.ambient());
    for (wp, mp, cp) in u.terms() {
        for (wq, mq, cq) in v.terms() {
            for a in wp.iter() {
                let e = mq.exponent(a);
                if e == 0 {
                    continue;
                }
                let (s1, wp2) = wp.remove_right(a).unwrap();
                if let Some((s2, w)) = wp2.wedge(wq) {
                    let c = S::from_int(s1 * s2 * e as i64) * cp.clone() * cq.clone();
                    out.add_term(w, mp.mul(&mq.lower(a).unwrap()), c);
                }
            }
            for a in wq.iter() {
                let e = mp.exponent(a);
                if e == 0 {
                    continue;
                }
                let (s1, wq2) = wq.remove_left(a).unwrap();
                if let Some((s2, w)) = wp.wedge(wq2) {
                    let c = S::from_int(-s1 * s2 * e as i64) * cp.clone() * cq.clone();
                    out.add_term(w, mp.lower(a).unwrap().mul(mq), c);
                }
            }
        }
    }
    out
}

/// Full pairing of a bivector with a 2-form, determinant convention.
pub fn bivector_form_pairing<S: Scalar>(v: &PolyVector<S>, a: &PolyForm<S>) -> Result<Polynomial<S>> {
    v.ambient().check_same(&a.ambient())?;
    for (name, degs) in [("bivector", v.degrees()), ("form", a.degrees())] {
        if degs.iter().any(|&d| d != 2) {
            return Err(Error::contract("bivector_form_pairing", format!("{name} has degrees {degs:?}, expected 2")));
        }
    }
    let mut out = Polynomial::zero(v.ambient());
    for (vw, vm, vc) in v.terms() {
        for (aw, am, ac) in a.terms() {
            if vw == aw {
                out.add_term(vm.mul(am), vc.clone() * ac.clone());
            }
        }
    }
    Ok(out)
}

/// `{f, g}_π = ⟨π, df ∧ dg⟩`.
pub fn poisson_bracket<S: Scalar>(pi: &PolyVector<S>, f: &Polynomial<S>, g: &Polynomial<S>) -> Polynomial<S> {
    let mut out = Polynomial::zero(pi.ambient());
    for (w, m, c) in pi.terms() {
        let idx: Vec<usize> = w.iter().collect();
        if idx.len() != 2 {
            continue;
        }
        let (a, b) = (idx[0], idx[1]);
        let coef = Polynomial::term(pi.ambient(), m.clone(), c.clone());
        let det = &(&f.derivative(a) * &g.derivative(b)) - &(&f.derivative(b) * &g.derivative(a));
        out = &out + &(&coef * &det);
    }
    out
}

/// `i_φ P` for a 1-form `φ` contracted into the first slot of a multivector.
pub fn contract_one_form<S: Scalar>(phi: &PolyForm<S>, p: &PolyVector<S>) -> Result<PolyVector<S>> {
    phi.ambient().check_same(&p.ambient())?;
    if !phi.is_zero() && phi.degree() != Some(1) {
        return Err(Error::contract("contract_one_form", format!("expected a 1-form, got degrees {:?}", phi.degrees())));
    }
    let mut out = PolyVector::zero(p.ambient());
    for (fw, fm, fc) in phi.terms() {
        let a = fw.iter().next().unwrap();
        for (pw, pm, pc) in p.terms() {
            if let Some((sign, w)) = pw.remove_left(a) {
                out.add_term(w, fm.mul(pm), S::from_int(sign) * fc.clone() * pc.clone());
            }
        }
    }
    Ok(out)
}
