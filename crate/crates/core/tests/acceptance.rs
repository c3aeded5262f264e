//! Acceptance criteria, one PASS/FAIL line each with its time limit.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use poisson_homology::catalog::*;
use poisson_homology::exterior::calculus::differential;
use poisson_homology::homology::*;
use poisson_homology::poisson::*;
use poisson_homology::poly::Polynomial;
use poisson_homology::spectral::{convergence_check, sigma_cocycle_suite};
use poisson_homology::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn build(kind: StructureKind, n: usize) -> Result<Multivector, String> {
    build_structure(StructureId::new(kind, n)).map_err(err)
}

fn random_poly(rng: &mut ChaCha8Rng, ambient: Ambient) -> Poly {
    let nv = ambient.nvars();
    let terms: Vec<_> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let exps: Vec<u16> = (0..nv).map(|_| if rng.gen_bool(0.25) { rng.gen_range(1..=2) } else { 0 }).collect();
            (Monomial::from_exponents(&exps), rational(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
        })
        .collect();
    Polynomial::from_terms(ambient, terms)
}

fn operator_coherence() -> Outcome {
    let kinds = [StructureKind::DrinfeldSklyanin, StructureKind::RMatrixSec1, StructureKind::SkewPolyEx3, StructureKind::SchubertDSEx4];
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for sample in 0..200 {
        let n = 2 + sample % 3;
        let pi = build(kinds[sample % kinds.len()], n)?;
        let ambient = pi.ambient();
        let f0 = random_poly(&mut rng, ambient);
        let fs: Vec<Poly> = (0..rng.gen_range(1..=3)).map(|_| random_poly(&mut rng, ambient)).collect();
        let form = fs.iter().fold(Form::function(&f0), |acc, f| acc.wedge(&differential(f)));
        let lhs = poisson_differential(&pi, &form).map_err(err)?;
        ensure(lhs == decomposable_differential(&pi, &f0, &fs), || format!("sample {sample} on {ambient}: f0 = {f0}"))?;
    }
    Ok("200 decomposable forms, n = 2..4, degree <= 3".into())
}

fn square_zero() -> Outcome {
    let kinds = [StructureKind::DrinfeldSklyanin, StructureKind::Pi0OfDS, StructureKind::SkewPolyEx3, StructureKind::SchubertDSEx4];
    let mut forms = 0;
    for n in 2..=3 {
        for kind in kinds {
            let pi = build(kind, n)?;
            let ambient = pi.ambient();
            for k in 0..=ambient.nvars() {
                let spec = SliceSpec::new(ambient, k, SliceConstraint::WeightAtMost(6));
                for b in enumerate_slice_basis::<ExactScalar>(&spec).map_err(err)? {
                    let d = poisson_differential(&pi, &b).map_err(err)?;
                    let dd = poisson_differential(&pi, &d).map_err(err)?;
                    ensure(dd.is_zero(), || format!("{kind} n={n}: δ²({b}) = {dd}"))?;
                    forms += 1;
                }
            }
        }
    }
    Ok(format!("{forms} basis forms of weight <= 6"))
}

fn eigen_suite() -> Outcome {
    let mut statuses = Vec::new();
    for n in 2..=5 {
        let pi = build(StructureKind::RMatrixSec1, n)?;
        let b = OneFormBasis::<ExactScalar>::new(n);
        ensure(recursion_operator(&pi, &b.phi0).map_err(err)?.is_zero(), || format!("A(φ0) ≠ 0 at n={n}"))?;
        for k in 1..n {
            let lambda = eigenvalue::<ExactScalar>(n, k);
            let s = eigen_status(&pi, &b.phi_bar[k - 1], &lambda, &b.phi0).map_err(err)?;
            ensure(s != EigenStatus::Fails, || format!("φ̄_{k} at n={n}"))?;
            let s = eigen_status(&pi, &b.psi_bar_cleared[k - 1], &lambda, &b.phi0).map_err(err)?;
            ensure(s != EigenStatus::Fails, || format!("ψ̄_{k} at n={n}"))?;
            statuses.push(s);
        }
    }
    let exact = statuses.iter().filter(|&&s| s == EigenStatus::Exact).count();
    Ok(format!("n = 2..5; cleared ψ̄ relations exact in {exact} of {} cases", statuses.len()))
}

fn classifier_grid() -> Outcome {
    let mut counts = Vec::new();
    for n in 2..=3 {
        let grid = balanced_multidegrees(n, 4);
        let checks: Vec<ClassifierCheck> = grid.iter().map(check_classifier::<ExactScalar>).collect::<Result<_>>().map_err(err)?;
        if let Some(c) = checks.iter().find(|c| !c.passes()) {
            return Err(format!("n={n}: {c:?}"));
        }
        let acyclic = checks.iter().filter(|c| c.acyclic).count();
        counts.push(format!("n={n}: {acyclic} acyclic, {} not", checks.len() - acyclic));
    }
    Ok(counts.join("; "))
}

fn sigma_suite() -> Outcome {
    let mut total = 0;
    for n in 2..=4 {
        let r = sigma_cocycle_suite::<ExactScalar>(n, 3, 3).map_err(err)?;
        if let Some(c) = r.checks.iter().find(|c| !c.passes()) {
            return Err(format!("n={n}: {c:?}"));
        }
        if let Some(p) = r.pairings.iter().find(|p| !p.vanishes) {
            return Err(format!("n={n}: pairing {p:?}"));
        }
        total += r.checks.len();
    }
    Ok(format!("{total} cocycles, n = 2..4, p, q <= 3"))
}

/// Monomial forms whose coefficient and generators involve a single variable.
fn single_index(f: &Form) -> bool {
    f.terms().all(|(w, m, _)| {
        let vars: BTreeSet<usize> =
            m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, _)| v).chain(w.iter()).collect();
        vars.len() <= 1
    })
}

fn harmonic_example() -> Outcome {
    let (mut slices, mut classes) = (0, 0);
    for n in 2..=4 {
        let id = StructureId::new(StructureKind::SkewPolyEx3, n);
        let pi = build(StructureKind::SkewPolyEx3, n)?;
        let ambient = pi.ambient();
        let specs: Vec<SliceSpec> = (0..=5)
            .flat_map(|w| (0..=n).map(move |k| SliceSpec::new(ambient, k, SliceConstraint::WeightExactly(w))))
            .collect();
        let table = homology_table::<ExactScalar>(id, &specs).map_err(err)?;
        for (spec, row) in specs.iter().zip(&table.rows) {
            let kernel = harmonic_kernel::<ExactScalar>(id, spec).map_err(err)?;
            let got: BTreeSet<String> = kernel.iter().map(ToString::to_string).collect();
            let want: BTreeSet<String> = enumerate_slice_basis::<ExactScalar>(spec)
                .map_err(err)?
                .into_iter()
                .filter(single_index)
                .map(|f| f.to_string())
                .collect();
            ensure(got == want, || format!("n={n} {} degree {}: {got:?} vs {want:?}", spec.constraint, spec.form_degree))?;
            ensure(row.homology_dim == kernel.len(), || {
                format!("n={n} {} degree {}: homology {} vs harmonic {}", spec.constraint, spec.form_degree, row.homology_dim, kernel.len())
            })?;
            slices += 1;
            classes += kernel.len();
        }
    }
    ensure(classes > 0, || "no harmonic forms found".into())?;
    Ok(format!("{slices} slices with {classes} harmonic forms, n = 2..4, weight <= 5"))
}

fn spectral_convergence() -> Outcome {
    let cases = [(StructureKind::DrinfeldSklyanin, 2), (StructureKind::DrinfeldSklyanin, 3), (StructureKind::SchubertDSEx4, 2)];
    let mut entries = 0;
    for (kind, n) in cases {
        let r = convergence_check::<ExactScalar>(StructureId::new(kind, n), 6).map_err(err)?;
        ensure(!r.entries.is_empty(), || format!("{kind} n={n}: empty first page"))?;
        ensure(r.converges(), || format!("{kind} n={n}: {:?}", r.mismatches))?;
        entries += r.entries.len();
    }
    Ok(format!("{entries} page entries for DS n = 2, 3 and the Schubert structure n = 2, weight <= 6"))
}

fn propositions() -> Outcome {
    for n in 2..=3 {
        for k in 0..=3 {
            let c = homogenization_bijection::<ExactScalar>(n, k).map_err(err)?;
            ensure(c.passes(), || format!("{c:?}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let pairs: Vec<(Poly, u32, Poly, u32)> = (0..100)
        .map(|i| {
            let n = 2 + i % 2;
            let (kf, kg) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
            (sample_balanced(&mut rng, n, kf, 3), kf, sample_balanced(&mut rng, n, kg, 3), kg)
        })
        .collect();
    for (f, kf, g, kg) in &pairs {
        ensure(multiplicative_on(f, *kf, g, *kg).map_err(err)?, || format!("multiplicativity: {f}, {g}"))?;
    }
    for (a, b) in [(1, 0), (0, 1), (1, 1), (2, 3)] {
        let (a, b) = (Rational64::from_integer(a), Rational64::from_integer(b));
        for (f, kf, g, kg) in pairs.iter().take(30) {
            ensure(pencil_compatible_on(a, b, f, *kf, g, *kg).map_err(err)?, || format!("pencil ({a},{b}): {f}, {g}"))?;
        }
        for n in 2..=3 {
            ensure(hamiltonian_is_pencil_casimir::<ExactScalar>(a, b, n).map_err(err)?, || format!("Casimir ({a},{b}) n={n}"))?;
        }
    }
    Ok("bijection n <= 3, k <= 3; 100 multiplicative pairs; 4 pencil members".into())
}

fn structure_sanity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in 2..=4 {
        let failures = chevalley_failures::<ExactScalar>(n);
        ensure(failures.is_empty(), || format!("n={n}: {failures:?}"))?;
        let (chosen, table) = select_lift::<ExactScalar>(n);
        ensure(chosen == Some(LiftPlacement::SELECTED), || format!("n={n}: {table:?}"))?;
        let samples: Vec<Poly> = (0..3).map(|_| sample_balanced(&mut rng, n, 2, 3)).collect();
        let eq = homogenization_equivariance(n, 2, &samples).map_err(err)?;
        ensure(eq.fixed_level && eq.shifted_level, || format!("{eq:?}"))?;
    }
    let mut recorded = Vec::new();
    for n in 2..=3 {
        for kind in StructureKind::NAMED {
            let s = schouten_status::<ExactScalar>(StructureId::new(kind, n)).map_err(err)?;
            recorded.push(format!("{kind}@{n}={s:?}"));
        }
        let ambient = Ambient::cotangent(n);
        let pi = build(StructureKind::DrinfeldSklyanin, n)?;
        let gens: Vec<Poly> = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .map(|(i, j)| &Poly::var(ambient, ambient.z(i)) * &Poly::var(ambient, ambient.xi(j)))
            .collect();
        let ideal = OrbitIdeal::default();
        for f in &gens {
            for g in &gens {
                for h in &gens {
                    let j = jacobiator_mod_ideal(&pi, f, g, h, &ideal).map_err(err)?;
                    ensure(j.is_zero(), || format!("DS n={n}: Jacobiator({f}, {g}, {h}) = {j}"))?;
                }
            }
        }
    }
    Ok(format!("sl/gl relations and equivariance n <= 4; DS Jacobiator vanishes on the orbit; {}", recorded.join(", ")))
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        (1, "operator coherence", 10, operator_coherence),
        (2, "square zero", 60, square_zero),
        (3, "eigen suite", 10, eigen_suite),
        (4, "classifier vs homology", 300, classifier_grid),
        (5, "sigma suite", 60, sigma_suite),
        (6, "harmonic forms", 60, harmonic_example),
        (7, "spectral convergence", 300, spectral_convergence),
        (8, "homogenization", 60, propositions),
        (9, "structure sanity", 60, structure_sanity),
    ];
    let mut failed = 0;
    for (id, name, limit, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let (verdict, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over the {limit} s limit; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("{verdict} criterion {id} ({name}) in {:.2} s: {detail}", elapsed.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
