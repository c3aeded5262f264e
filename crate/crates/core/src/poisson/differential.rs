use crate::exterior::calculus::{contract, differential, exterior_derivative, poisson_bracket};
use crate::exterior::{PolyForm, PolyVector};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Koszul–Brylinski differential `δ_π = d∘i_π − i_π∘d`, lowering form degree by one.
pub fn poisson_differential<S: Scalar>(pi: &PolyVector<S>, a: &PolyForm<S>) -> Result<PolyForm<S>> {
    pi.ambient().check_same(&a.ambient())?;
    if !pi.is_zero() && pi.degree() != Some(2) {
        return Err(Error::contract("poisson_differential", format!("expected a bivector, got degrees {:?}", pi.degrees())));
    }
    Ok(koszul(pi, a))
}

pub(crate) fn koszul<S: Scalar>(pi: &PolyVector<S>, a: &PolyForm<S>) -> PolyForm<S> {
    &exterior_derivative(&contract(pi, a)) - &contract(pi, &exterior_derivative(a))
}

/// The same differential evaluated on a decomposable form
/// `f_0 df_1 ∧ … ∧ df_k` by the bracket expansion
///
/// `Σ_i (−1)^{i+1} {f_0, f_i} df_1…(df_i omitted)…df_k
///  + Σ_{i<j} (−1)^{i+j} f_0 d{f_i, f_j} ∧ df_1…(df_i, df_j omitted)…df_k`.
pub fn decomposable_differential<S: Scalar>(
    pi: &PolyVector<S>,
    f0: &Polynomial<S>,
    fs: &[Polynomial<S>],
) -> PolyForm<S> {
    let ambient = pi.ambient();
    let k = fs.len();
    let dfs: Vec<PolyForm<S>> = fs.iter().map(differential).collect();
    let wedge_except = |skip: &[usize]| -> PolyForm<S> {
        let mut acc = PolyForm::function(&Polynomial::one(ambient));
        for (idx, df) in dfs.iter().enumerate() {
            if !skip.contains(&idx) {
                acc = acc.wedge(df);
            }
        }
        acc
    };
    let sign = |e: usize| if e % 2 == 0 { S::one() } else { -S::one() };

    let mut out = PolyForm::zero(ambient);
    for i in 0..k {
        let bracket = poisson_bracket(pi, f0, &fs[i]);
        // one-based i gives (−1)^{i+1}
        out.add_scaled(&wedge_except(&[i]).mul_poly(&bracket), &sign(i + 2));
    }
    for i in 0..k {
        for j in i + 1..k {
            let dbr = differential(&poisson_bracket(pi, &fs[i], &fs[j]));
            let term = dbr.wedge(&wedge_except(&[i, j])).mul_poly(f0);
            out.add_scaled(&term, &sign(i + j + 2));
        }
    }
    out
}
