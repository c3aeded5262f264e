use std::collections::BTreeSet;
use std::time::Instant;

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::ambient::{Ambient, VariableSet};
use crate::catalog::{
    build_structure, chevalley_failures, eigen_status, eigenvalue, hamiltonian_is_pencil_casimir, homogenization_bijection,
    homogenization_equivariance, multiplicative_on, pencil_compatible_on, recursion_operator, sample_balanced,
    schouten_status, select_lift, EigenStatus, LiftPlacement, OneFormBasis, SchoutenStatus, StructureId, StructureKind,
};
use crate::exterior::calculus::differential;
use crate::exterior::{PolyForm, PolyVector};
use crate::homology::{
    balanced_multidegrees, check_classifier, enumerate_slice_basis, harmonic_kernel_for, homology_table_for, SliceConstraint,
    SliceFilter, SliceRecord, SliceSpec,
};
use crate::monomial::Monomial;
use crate::poisson::differential::koszul;
use crate::poisson::{decomposable_differential, poisson_differential, LogCanonical};
use crate::poly::Polynomial;
use crate::spectral::convergence::convergence_check_for;
use crate::spectral::{default_filters, e1_page_for, sigma_cocycle_suite, sigma_independence};
use crate::{Error, ExactScalar, Result};

use super::{CheckOutcome, HomologyReport, RunConfig, Suite, SuiteResult, SCHEMA_VERSION};

type S = ExactScalar;

const PENCIL_PARAMETERS: [(i64, i64); 4] = [(1, 0), (0, 1), (1, 1), (2, 3)];

/// Suites whose preconditions hold for `id`.
pub fn applicable_suites(id: StructureId) -> Result<Vec<Suite>> {
    let cotangent = id.ambient().set == VariableSet::Cotangent;
    let pi = build_structure::<S>(id)?;
    let mut out = vec![Suite::Identities];
    if cotangent {
        out.push(Suite::Eigen);
        out.push(Suite::Classifier);
    }
    if pi.weights().iter().all(|&w| w >= 0) {
        out.push(Suite::Homology);
    }
    if diagonal_operator(id).is_ok() {
        out.push(Suite::Harmonic);
    }
    if id.declared_split().is_some() {
        out.push(Suite::Spectral);
    }
    if cotangent {
        out.push(Suite::Sigma);
        out.push(Suite::Propositions);
    }
    Ok(out)
}

/// Runs the requested suites in canonical order.
pub fn run(config: &RunConfig) -> Result<HomologyReport> {
    let id = config.validate()?;
    let mut results = Vec::new();
    for suite in config.normalized_suites() {
        let start = Instant::now();
        let mut r = match suite {
            Suite::Identities => identities(id, config)?,
            Suite::Eigen => eigen(id)?,
            Suite::Classifier => classifier(id, config)?,
            Suite::Homology => homology(id, config)?,
            Suite::Harmonic => harmonic(id, config)?,
            Suite::Spectral => spectral(id, config)?,
            Suite::Sigma => sigma(id, config)?,
            Suite::Propositions => propositions(id, config)?,
        };
        if config.timing {
            r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        results.push(r);
    }
    Ok(HomologyReport { schema_version: SCHEMA_VERSION, config: config.clone(), passed: results.iter().all(|r| r.passed), results })
}

fn require_cotangent(id: StructureId, suite: Suite) -> Result<()> {
    if id.ambient().set != VariableSet::Cotangent {
        return Err(Error::contract("run", format!("suite {suite} needs a structure on the cotangent space, got {}", id.kind)));
    }
    Ok(())
}

fn filters(ambient: Ambient, config: &RunConfig) -> BTreeSet<SliceFilter> {
    if config.full_forms {
        BTreeSet::new()
    } else {
        default_filters(ambient)
    }
}

fn weight_slices(ambient: Ambient, cutoff: i64, filters: &BTreeSet<SliceFilter>) -> Vec<SliceSpec> {
    (0..=cutoff)
        .flat_map(|w| (0..=ambient.nvars()).map(move |k| SliceSpec::new(ambient, k, SliceConstraint::WeightExactly(w))))
        .map(|s| s.with_filters(filters.iter().copied()))
        .collect()
}

/// Monomial forms of weight at most `cutoff` in every degree, without filters.
fn monomial_basis(ambient: Ambient, cutoff: i64) -> Result<Vec<PolyForm<S>>> {
    let mut out = Vec::new();
    for k in 0..=ambient.nvars() {
        out.extend(enumerate_slice_basis::<S>(&SliceSpec::new(ambient, k, SliceConstraint::WeightAtMost(cutoff)))?);
    }
    Ok(out)
}

fn claimed_poisson(kind: StructureKind) -> bool {
    !matches!(kind, StructureKind::Pi1OfDS | StructureKind::SchubertPi1Ex4)
}

fn random_poly(rng: &mut ChaCha8Rng, ambient: Ambient) -> Polynomial<S> {
    let nv = ambient.nvars();
    let terms = (0..rng.gen_range(1..=3)).map(|_| {
        let exps: Vec<u16> = (0..nv).map(|_| if rng.gen_bool(0.3) { rng.gen_range(1..=2) } else { 0 }).collect();
        (Monomial::from_exponents(&exps), S::from_integer(rng.gen_range(-3i64..=3).into()))
    });
    Polynomial::from_terms(ambient, terms.collect::<Vec<_>>())
}

fn identities(id: StructureId, config: &RunConfig) -> Result<SuiteResult> {
    let mut r = SuiteResult::new(Suite::Identities);
    let pi = build_structure::<S>(id)?;
    let ambient = pi.ambient();
    let subject = id.to_string();

    let status = schouten_status::<S>(id)?;
    r.note("schouten_status", status);
    if claimed_poisson(id.kind) {
        r.push(CheckOutcome::new("self-bracket-vanishes", &subject, status != SchoutenStatus::Nonzero));
    }

    if status == SchoutenStatus::Vanishes {
        let failure = monomial_basis(ambient, config.weight_cutoff)?
            .into_iter()
            .map(|b| {
                let dd = koszul(&pi, &koszul(&pi, &b));
                (b, dd)
            })
            .find(|(_, dd)| !dd.is_zero());
        let ok = failure.is_none();
        let ce = failure.map(|(b, dd)| json!({ "form": b.to_string(), "image": dd.to_string() }));
        r.push(CheckOutcome::new("square-zero", format!("{subject}, weight<={}", config.weight_cutoff), ok).with_counterexample(ce.into()));
    }

    if let Some((p0, p1)) = id.declared_split() {
        let mut parts = vec![(id, false)];
        if p1.is_some() {
            parts.push((p0, false));
        }
        parts.extend(p1.map(|p| (p, true)));
        let basis = monomial_basis(ambient, config.weight_cutoff)?;
        for (part_id, strict) in parts {
            let part = build_structure::<S>(part_id)?;
            let failure = basis.iter().find(|b| {
                let w = b.weights()[0];
                koszul(&part, b).weights().iter().any(|&v| if strict { v <= w } else { v < w })
            });
            let claim = if strict { "positive-part-raises-weight" } else { "filtration-preserved" };
            r.push(
                CheckOutcome::new(claim, format!("{part_id}, weight<={}", config.weight_cutoff), failure.is_none())
                    .with_counterexample(json!(failure.map(ToString::to_string))),
            );
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(id.n as u64);
    let mut decomposable_ok = true;
    let mut ce = None;
    for _ in 0..25 {
        let f0 = random_poly(&mut rng, ambient);
        let fs: Vec<_> = (0..rng.gen_range(1..=3)).map(|_| random_poly(&mut rng, ambient)).collect();
        let form = fs.iter().fold(PolyForm::function(&f0), |acc, f| acc.wedge(&differential(f)));
        if poisson_differential(&pi, &form)? != decomposable_differential(&pi, &f0, &fs) {
            decomposable_ok = false;
            ce = Some(json!({ "f0": f0.to_string(), "fs": fs.iter().map(ToString::to_string).collect::<Vec<_>>() }));
            break;
        }
    }
    r.push(CheckOutcome::new("decomposable-formula", &subject, decomposable_ok).with_counterexample(ce.into()));

    if ambient.set == VariableSet::Cotangent {
        let failures = chevalley_failures::<S>(id.n);
        r.push(CheckOutcome::new("sl-relations", format!("n={}", id.n), failures.is_empty()).with_counterexample(json!(failures)));
        let (chosen, table) = select_lift::<S>(id.n);
        r.note("lift_checks", &table);
        r.push(
            CheckOutcome::new("gl-lift-equivariant", format!("n={}", id.n), chosen == Some(LiftPlacement::SELECTED))
                .with_counterexample(json!(table)),
        );
    }
    Ok(r)
}

fn eigen(id: StructureId) -> Result<SuiteResult> {
    require_cotangent(id, Suite::Eigen)?;
    let mut r = SuiteResult::new(Suite::Eigen);
    let n = id.n;
    let pi = build_structure::<S>(StructureId::new(StructureKind::RMatrixSec1, n))?;
    let b = OneFormBasis::<S>::new(n);
    let a0 = recursion_operator(&pi, &b.phi0)?;
    r.push(CheckOutcome::new("recursion-kills-phi0", format!("n={n}"), a0.is_zero()).with_counterexample(json!(a0.to_string())));
    let mut psi_statuses = Vec::new();
    for k in 1..n {
        let lambda = eigenvalue::<S>(n, k);
        let s = eigen_status(&pi, &b.phi_bar[k - 1], &lambda, &b.phi0)?;
        r.push(CheckOutcome::new("phi-bar-eigen", format!("n={n}, k={k}"), s != EigenStatus::Fails).with_counterexample(json!(s)));
        let s = eigen_status(&pi, &b.psi_bar_cleared[k - 1], &lambda, &b.phi0)?;
        r.push(CheckOutcome::new("psi-bar-eigen", format!("n={n}, k={k}"), s != EigenStatus::Fails).with_counterexample(json!(s)));
        psi_statuses.push(s);
    }
    r.note("psi_bar_status", psi_statuses);
    Ok(r)
}

fn classifier(id: StructureId, config: &RunConfig) -> Result<SuiteResult> {
    require_cotangent(id, Suite::Classifier)?;
    let mut r = SuiteResult::new(Suite::Classifier);
    let (mut acyclic, mut non_acyclic) = (0, 0);
    for md in balanced_multidegrees(id.n, config.p_max) {
        let c = check_classifier::<S>(&md)?;
        if c.acyclic {
            acyclic += 1;
        } else {
            non_acyclic += 1;
        }
        r.push(CheckOutcome::new("classifier-matches-homology", md.to_string(), c.passes()).with_counterexample(json!(c)));
    }
    r.note("acyclic", acyclic);
    r.note("non_acyclic", non_acyclic);
    Ok(r)
}

/// Single-index classes `x^a` and `x^a dx` counted by weight.
fn single_index_dims(ambient: Ambient, w: i64, k: usize) -> usize {
    let divides = (0..ambient.nvars()).filter(|&v| w > 0 && w % ambient.weight(v) == 0).count();
    match k {
        0 if w == 0 => 1,
        0 | 1 => divides,
        _ => 0,
    }
}

fn has_single_index_homology(kind: StructureKind) -> bool {
    matches!(kind, StructureKind::SkewPolyEx3 | StructureKind::SchubertPi0Ex4)
}

fn weight_of(rec: &SliceRecord) -> i64 {
    match rec.constraint {
        SliceConstraint::WeightExactly(w) => w,
        _ => unreachable!("single-index counts use exact weight slices"),
    }
}

fn homology(id: StructureId, config: &RunConfig) -> Result<SuiteResult> {
    let mut r = SuiteResult::new(Suite::Homology);
    let pi = build_structure::<S>(id)?;
    let ambient = pi.ambient();
    let f = filters(ambient, config);
    let weights = pi.weights();
    let specs = if weights.iter().all(|&w| w == 0) {
        weight_slices(ambient, config.weight_cutoff, &f)
    } else if weights.iter().all(|&w| w >= 0) {
        // δ preserves the filtration, so forms of weight ≤ W modulo higher weights form a complex
        (0..=ambient.nvars())
            .map(|k| SliceSpec::new(ambient, k, SliceConstraint::WeightAtMost(config.weight_cutoff)).with_filters(f.iter().copied()))
            .collect()
    } else {
        return Err(Error::contract("homology", format!("{} has terms of negative weight {weights:?}", id.kind)));
    };
    let table = homology_table_for(&id.kind.to_string(), &pi, &specs)?;
    for rec in &table.rows {
        let subject = format!("{}, degree={}", rec.constraint, rec.form_degree);
        r.push(CheckOutcome::new("rank-bounds", &subject, rec.rank_in + rec.rank_out <= rec.dim));
        if has_single_index_homology(id.kind) {
            let want = single_index_dims(ambient, weight_of(rec), rec.form_degree);
            r.push(
                CheckOutcome::new("single-index-homology", &subject, rec.homology_dim == want)
                    .with_counterexample(json!({ "expected": want, "found": rec.homology_dim })),
            );
        }
    }
    r.rows = table.rows;
    Ok(r)
}

/// The structure itself when log-canonical, otherwise its weight-zero part.
fn diagonal_operator(id: StructureId) -> Result<(StructureId, PolyVector<S>)> {
    let pi = build_structure::<S>(id)?;
    if LogCanonical::from_bivector(&pi).is_ok() {
        return Ok((id, pi));
    }
    if let Some((p0, _)) = id.declared_split() {
        let pi0 = build_structure::<S>(p0)?;
        if LogCanonical::from_bivector(&pi0).is_ok() {
            return Ok((p0, pi0));
        }
    }
    Err(Error::contract("harmonic", format!("{} has no log-canonical operator", id.kind)))
}

fn harmonic(id: StructureId, config: &RunConfig) -> Result<SuiteResult> {
    let mut r = SuiteResult::new(Suite::Harmonic);
    let (op_id, pi) = diagonal_operator(id)?;
    r.note("operator", op_id.kind.to_string());
    let ambient = pi.ambient();
    let specs = weight_slices(ambient, config.weight_cutoff, &BTreeSet::new());
    let table = homology_table_for(&op_id.kind.to_string(), &pi, &specs)?;
    for (spec, rec) in specs.iter().zip(&table.rows) {
        let kernel = harmonic_kernel_for(&pi, spec)?;
        let subject = format!("{}, degree={}", rec.constraint, rec.form_degree);
        r.push(
            CheckOutcome::new("hodge-dimension", &subject, kernel.len() == rec.homology_dim)
                .with_counterexample(json!({ "harmonic": kernel.len(), "homology": rec.homology_dim })),
        );
        if has_single_index_homology(op_id.kind) {
            let stray = kernel.iter().find(|f| !is_single_index(f));
            r.push(
                CheckOutcome::new("single-index-harmonic", &subject, stray.is_none())
                    .with_counterexample(json!(stray.map(ToString::to_string))),
            );
        }
    }
    r.rows = table.rows;
    Ok(r)
}

/// A single term whose coefficient and generators involve one variable.
fn is_single_index(f: &PolyForm<S>) -> bool {
    let terms: Vec<_> = f.terms().collect();
    let [(word, m, _)] = terms.as_slice() else {
        return false;
    };
    let vars: BTreeSet<usize> =
        m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, _)| v).chain(word.iter()).collect();
    vars.len() <= 1
}

fn spectral(id: StructureId, config: &RunConfig) -> Result<SuiteResult> {
    let mut r = SuiteResult::new(Suite::Spectral);
    let (p0, _) = id
        .declared_split()
        .ok_or_else(|| Error::contract("spectral", format!("{} has no declared weight split", id.kind)))?;
    let pi = build_structure::<S>(id)?;
    let pi0 = build_structure::<S>(p0)?;
    let ambient = pi.ambient();
    let f = filters(ambient, config);
    let label = id.kind.to_string();
    let report = convergence_check_for(&label, &pi, &pi0, &f, config.weight_cutoff)?;
    for e in &report.entries {
        r.push(
            CheckOutcome::new("first-page-convergence", format!("weight={}, degree={}", e.weight, e.form_degree), e.e1 == e.limit)
                .with_counterexample(json!(e)),
        );
    }
    r.rows = e1_page_for(&label, &pi0, &f, config.weight_cutoff)?.rows;
    Ok(r)
}

fn sigma(id: StructureId, config: &RunConfig) -> Result<SuiteResult> {
    require_cotangent(id, Suite::Sigma)?;
    let mut r = SuiteResult::new(Suite::Sigma);
    let report = sigma_cocycle_suite::<S>(id.n, config.p_max, config.q_max)?;
    for c in &report.checks {
        let s = c.sigma;
        let subject = format!("i={}, j={}, p={}, q={}, mu={}, nu={}", s.i, s.j, s.p, s.q, s.mu, s.nu);
        r.push(CheckOutcome::new("sigma-cocycle", subject, c.passes()).with_counterexample(json!(c)));
    }
    for p in &report.pairings {
        r.push(CheckOutcome::new("sigma-pairing-vanishes", format!("i={}, j={}", p.i, p.j), p.vanishes));
    }
    let ind = sigma_independence::<S>(id.n, config.weight_cutoff)?;
    for e in &ind.entries {
        r.push(
            CheckOutcome::new("sigma-classes-independent", format!("weight<={}, degree={}", ind.cutoff, e.form_degree), e.rank == e.count)
                .with_counterexample(json!(e)),
        );
    }
    r.note("sigma_classes_span", ind.spans());
    Ok(r)
}

fn propositions(id: StructureId, config: &RunConfig) -> Result<SuiteResult> {
    require_cotangent(id, Suite::Propositions)?;
    let mut r = SuiteResult::new(Suite::Propositions);
    let n = id.n;
    for k in 0..=config.p_max {
        let c = homogenization_bijection::<S>(n, k)?;
        r.push(CheckOutcome::new("homogenization-bijective", format!("n={n}, k={k}"), c.passes()).with_counterexample(json!(c)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    let pairs: Vec<_> = (0..10)
        .map(|_| (sample_balanced::<S>(&mut rng, n, 2, 3), sample_balanced::<S>(&mut rng, n, 1, 3)))
        .collect();
    let mut failed = None;
    for (i, (f, g)) in pairs.iter().enumerate() {
        if !multiplicative_on(f, 2, g, 1)? {
            failed = Some(i);
            break;
        }
    }
    r.push(
        CheckOutcome::new("homogenization-multiplicative", format!("n={n}, {} pairs", pairs.len()), failed.is_none())
            .with_counterexample(json!(failed.map(|i| [pairs[i].0.to_string(), pairs[i].1.to_string()]))),
    );
    for (a, b) in PENCIL_PARAMETERS {
        let (a, b) = (Rational64::from_integer(a), Rational64::from_integer(b));
        let mut failed = None;
        for (f, g) in &pairs {
            if !pencil_compatible_on(a, b, f, 2, g, 1)? {
                failed = Some([f.to_string(), g.to_string()]);
                break;
            }
        }
        r.push(
            CheckOutcome::new("pencil-homomorphism", format!("n={n}, a={a}, b={b}"), failed.is_none())
                .with_counterexample(json!(failed)),
        );
        r.push(CheckOutcome::new("hamiltonian-casimir", format!("n={n}, a={a}, b={b}"), hamiltonian_is_pencil_casimir::<S>(a, b, n)?));
    }
    let samples: Vec<_> = (0..3).map(|_| sample_balanced::<S>(&mut rng, n, 2, 3)).collect();
    let c = homogenization_equivariance(n, 2, &samples)?;
    r.push(
        CheckOutcome::new("homogenization-equivariant", format!("n={n}, k=2"), c.fixed_level && c.shifted_level)
            .with_counterexample(json!(c)),
    );
    Ok(r)
}
