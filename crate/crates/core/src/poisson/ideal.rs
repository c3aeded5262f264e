use serde::{Deserialize, Serialize};

use crate::ambient::{Ambient, VariableSet};
use crate::exterior::calculus::poisson_bracket;
use crate::exterior::PolyVector;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// `H = Σ_i z_i ξ_i`.
pub fn hamiltonian<S: Scalar>(ambient: Ambient) -> Polynomial<S> {
    let mut h = Polynomial::zero(ambient);
    for i in 1..=ambient.n {
        let m = Monomial::var(ambient.nvars(), ambient.z(i)).mul(&Monomial::var(ambient.nvars(), ambient.w(i)));
        h.add_term(m, S::one());
    }
    h
}

/// The principal ideal generated by `H − c` on the cotangent space.
///
/// Normal forms use the graded-lex leading monomial `z_1 ξ_1` of `H − c`:
/// every occurrence of `z_1 ξ_1` is replaced by `c − Σ_{i≥2} z_i ξ_i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrbitIdeal<S> {
    pub c: S,
}

impl<S: Scalar> Default for OrbitIdeal<S> {
    fn default() -> Self {
        OrbitIdeal { c: S::one() }
    }
}

impl<S: Scalar> OrbitIdeal<S> {
    pub fn new(c: S) -> Self {
        OrbitIdeal { c }
    }

    pub fn generator(&self, ambient: Ambient) -> Polynomial<S> {
        &hamiltonian(ambient) - &Polynomial::constant(ambient, self.c.clone())
    }

    pub fn reduce(&self, p: &Polynomial<S>) -> Result<Polynomial<S>> {
        let ambient = p.ambient();
        if ambient.set != VariableSet::Cotangent {
            return Err(Error::contract("OrbitIdeal::reduce", format!("ideal lives on the cotangent space, got {ambient}")));
        }
        let (z1, x1) = (ambient.z(1), ambient.w(1));
        // c − Σ_{i≥2} z_i ξ_i
        let mut subst = Polynomial::constant(ambient, self.c.clone());
        for i in 2..=ambient.n {
            let m = Monomial::var(ambient.nvars(), ambient.z(i)).mul(&Monomial::var(ambient.nvars(), ambient.w(i)));
            subst.add_term(m, -S::one());
        }
        let mut powers = vec![Polynomial::one(ambient)];
        let mut out = Polynomial::zero(ambient);
        for (m, c) in p.terms() {
            let t = m.exponent(z1).min(m.exponent(x1));
            while powers.len() <= t as usize {
                let next = powers.last().unwrap() * &subst;
                powers.push(next);
            }
            let rest = m.with_exponent(z1, m.exponent(z1) - t).with_exponent(x1, m.exponent(x1) - t);
            out = &out + &powers[t as usize].mul_monomial(&rest, c);
        }
        Ok(out)
    }

    pub fn contains(&self, p: &Polynomial<S>) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }
}

fn require_balanced<S: Scalar>(op: &'static str, f: &Polynomial<S>) -> Result<()> {
    if f.is_zero() || f.is_balanced() {
        Ok(())
    } else {
        Err(Error::contract(op, format!("{f} is not in the subalgebra generated by z_i xi_j")))
    }
}

/// `{f, g}_π` reduced modulo `H − c`; inputs must be balanced.
pub fn poisson_bracket_mod_ideal<S: Scalar>(
    pi: &PolyVector<S>,
    f: &Polynomial<S>,
    g: &Polynomial<S>,
    ideal: &OrbitIdeal<S>,
) -> Result<Polynomial<S>> {
    require_balanced("poisson_bracket_mod_ideal", f)?;
    require_balanced("poisson_bracket_mod_ideal", g)?;
    ideal.reduce(&poisson_bracket(pi, f, g))
}

/// `{f,{g,h}} + {g,{h,f}} + {h,{f,g}}` without reduction.
pub fn jacobiator<S: Scalar>(
    pi: &PolyVector<S>,
    f: &Polynomial<S>,
    g: &Polynomial<S>,
    h: &Polynomial<S>,
) -> Polynomial<S> {
    let br = |a: &Polynomial<S>, b: &Polynomial<S>| poisson_bracket(pi, a, b);
    &(&br(f, &br(g, h)) + &br(g, &br(h, f))) + &br(h, &br(f, g))
}

/// Jacobiator reduced modulo `H − c`.
pub fn jacobiator_mod_ideal<S: Scalar>(
    pi: &PolyVector<S>,
    f: &Polynomial<S>,
    g: &Polynomial<S>,
    h: &Polynomial<S>,
    ideal: &OrbitIdeal<S>,
) -> Result<Polynomial<S>> {
    for x in [f, g, h] {
        require_balanced("jacobiator_mod_ideal", x)?;
    }
    ideal.reduce(&jacobiator(pi, f, g, h))
}
