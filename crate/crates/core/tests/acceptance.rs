//! Acceptance suite: each criterion runs at its stated size and time limit
//! and prints one PASS/FAIL line. Run with `--nocapture` to see the lines.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tetra::algebra::{basis_crosscheck, tetrahedral_form};
use tetra::bimodule::resolution_certificate;
use tetra::cli::verify::expected_cover_shape;
use tetra::cli::{run_verify, Check, VerificationConfig};
use tetra::families::{
    build_omega, build_sigma, corner_iso_check, family_evidence, lambda_family, omega_sigma_iso_check, sigma_family,
    special_biserial_check,
};
use tetra::modules::{is_isomorphic, periodicity_report, radical_mod_socle, IsoVerdict};
use tetra::path_algebra::{identity_suite, quotient_basis, tetrahedral_relations};
use tetra::quiver::tetrahedral_quiver;
use tetra::scalars::{Field, FieldSpec, Fp, DEFAULT_PRIME};

type Outcome = Result<String, String>;

fn fp() -> Fp {
    Fp::new(DEFAULT_PRIME).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(n: usize, name: &str, limit: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (ok, detail) = match outcome {
        Ok(d) if elapsed <= limit => (true, d),
        Ok(d) => (false, format!("{d}; over the time limit")),
        Err(e) => (false, e),
    };
    println!(
        "criterion {n} [{name}]: {} in {:.2}s (limit {}s); {detail}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    ok
}

fn dimensions() -> Outcome {
    let f = fp();
    let mut slowest = Duration::ZERO;
    for m in [2, 3, 4] {
        for lambda in [0, 1] {
            let start = Instant::now();
            let alg = quotient_basis(&tetrahedral_relations(&f, m, lambda).unwrap(), 2).map_err(|e| e.to_string())?;
            let t = start.elapsed();
            slowest = slowest.max(t);
            ensure(alg.dim() == 36 * m, || format!("dim Λ({m},{lambda}) = {}", alg.dim()))?;
            ensure(t <= Duration::from_secs(10), || format!("Λ({m},{lambda}) took {t:?}"))?;
        }
    }
    Ok(format!("dims 72/108/144, slowest build {:.2}s", slowest.as_secs_f64()))
}

fn basis_crosscheck_models() -> Outcome {
    let f = fp();
    for m in [2, 3] {
        for lambda in [0, 1] {
            let alg = quotient_basis(&tetrahedral_relations(&f, m, lambda).unwrap(), 2).map_err(|e| e.to_string())?;
            let c = basis_crosscheck(&alg).map_err(|e| e.to_string())?;
            ensure(c.passed(), || format!("m={m} λ={lambda}: {c:?}"))?;
        }
    }
    Ok("identity on arrows is an isomorphism; structure constants agree".into())
}

fn symmetry() -> Outcome {
    let f = fp();
    for m in [2, 3] {
        for lambda in [0, 1] {
            let alg = quotient_basis(&tetrahedral_relations(&f, m, lambda).unwrap(), 2).map_err(|e| e.to_string())?;
            let (rebased, gram) = tetrahedral_form(&alg).map_err(|e| format!("m={m} λ={lambda}: {e}"))?;
            ensure(gram.matrix.rank() == rebased.dim(), || format!("m={m} λ={lambda}: singular Gram matrix"))?;
        }
    }
    Ok("Gram matrices symmetric, associative and invertible".into())
}

fn lemma_identities() -> Outcome {
    let f = fp();
    let mut instances = 0;
    for lambda in [0, 1] {
        let alg = quotient_basis(&tetrahedral_relations(&f, 2, lambda).unwrap(), 2).map_err(|e| e.to_string())?;
        let report = identity_suite(&alg).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("λ={lambda}: {} violations", report.violation_count()))?;
        instances += report.checks.iter().map(|c| c.instances).sum::<usize>();
    }
    Ok(format!("{instances} identities, zero violations"))
}

fn period_four() -> Outcome {
    let f = fp();
    let q = tetrahedral_quiver().quiver;
    for m in [2, 3] {
        let alg = quotient_basis(&tetrahedral_relations(&f, m, 1).unwrap(), 2).map_err(|e| e.to_string())?;
        for v in 0..6 {
            let r = periodicity_report(&alg, v, 4, 11).map_err(|e| e.to_string())?;
            ensure(r.period_found == Some(4), || format!("m={m} S{}: period {:?}", v + 1, r.period_found))?;
            ensure(r.verdicts[..3].iter().all(|x| matches!(x, IsoVerdict::No(_))), || {
                format!("m={m} S{}: early verdicts {:?}", v + 1, &r.verdicts[..3])
            })?;
            ensure(r.syzygy_dims[1..4] == [6 * m - 1, 6 * m + 1, 6 * m - 1], || {
                format!("m={m} S{}: syzygy dims {:?}", v + 1, r.syzygy_dims)
            })?;
            let covers: Vec<Vec<usize>> = r
                .covers
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    c.sort_unstable();
                    c
                })
                .collect();
            ensure(covers == expected_cover_shape(&q, v), || format!("m={m} S{}: covers {covers:?}", v + 1))?;
        }
    }
    Ok("all simples of Λ(2,1), Λ(3,1) have period 4 with the predicted covers".into())
}

fn singular_failure() -> Outcome {
    let f = fp();
    let alg = quotient_basis(&tetrahedral_relations(&f, 2, 0).unwrap(), 2).map_err(|e| e.to_string())?;
    let mut omega2_top = 0;
    for v in 0..6 {
        let r = periodicity_report(&alg, v, 8, 11).map_err(|e| e.to_string())?;
        ensure(r.period_found.is_none(), || format!("S{} has period {:?}", v + 1, r.period_found))?;
        ensure(r.verdicts.iter().all(|x| matches!(x, IsoVerdict::No(_))), || {
            format!("S{}: undecided verdicts {:?}", v + 1, r.verdicts)
        })?;
        if v == 0 {
            omega2_top = r.top_dims[2];
        }
    }
    ensure(omega2_top > 2, || format!("Ω²(S1) has {omega2_top} generators"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in [0, 2, 4] {
        let a = radical_mod_socle(&alg, i).map_err(|e| e.to_string())?;
        let b = radical_mod_socle(&alg, i + 1).map_err(|e| e.to_string())?;
        let verdict = is_isomorphic(&a, &b, &mut rng);
        ensure(verdict.is_yes(), || format!("rad/soc at {} and {}: {}", i + 1, i + 2, verdict.label()))?;
    }
    Ok(format!("Ω²(S1) needs {omega2_top} generators; no period up to 8; rad/soc pairs isomorphic"))
}

fn bimodule_certificate() -> Outcome {
    let f = fp();
    let alg = quotient_basis(&tetrahedral_relations(&f, 2, 1).unwrap(), 2).map_err(|e| e.to_string())?;
    let (alg, gram) = tetrahedral_form(&alg).map_err(|e| e.to_string())?;
    let c = resolution_certificate(&alg, &tetrahedral_quiver(), &gram).map_err(|e| e.to_string())?;
    ensure(c.chain == [true; 3], || format!("chain conditions {:?}", c.chain))?;
    ensure(c.theta.xi_killed_by_s, || "S(ξ_i) ≠ 0".into())?;
    ensure(c.exact == [true; 4], || format!("exactness {:?}", c.exact))?;
    ensure(c.theta.bimodule && c.theta.rank == 72 && c.kernel_s == 72, || {
        format!("θ rank {} onto kernel of dim {}", c.theta.rank, c.kernel_s)
    })?;
    ensure(c.passed(), || format!("{c:?}"))?;
    Ok(format!(
        "ranks d0={} d={} R={} S={}, Ker S = Λ (dim 72)",
        c.rank_d0, c.rank_d, c.rank_r, c.rank_s
    ))
}

fn constructions() -> Outcome {
    let f = fp();
    let omega = quotient_basis(&build_omega(&f, 2).unwrap(), 2).map_err(|e| e.to_string())?;
    ensure(omega.dim() == 165, || format!("dim Ω(2) = {}", omega.dim()))?;
    for t in [0, 1] {
        let s = quotient_basis(&build_sigma(&f, 2, t).unwrap(), 2).map_err(|e| e.to_string())?;
        ensure(s.dim() == 165, || format!("dim Σ(2,{t}) = {}", s.dim()))?;
    }
    let (_, corner) = corner_iso_check(&f, 2, 2).map_err(|e| e.to_string())?;
    ensure(corner.is_isomorphism(), || format!("corner map {corner:?}"))?;
    let phi = omega_sigma_iso_check(&f, 2, 2).map_err(|e| e.to_string())?;
    ensure(phi.is_isomorphism(), || format!("Ω → Σ map {phi:?}"))?;
    let s0 = build_sigma(&f, 2, 0).unwrap();
    let report = special_biserial_check(&s0, &quotient_basis(&s0, 2).unwrap());
    ensure(report.passed, || format!("Σ(2,0) witnesses {:?}", report.witnesses))?;
    let roots = [2, 3, 5];
    let lam = lambda_family(&f, 2, 1).unwrap();
    let ev = family_evidence(&lam, &roots, 2, 11).map_err(|e| e.to_string())?;
    ensure(ev.passed(&lam), || format!("Λ family: {}", ev.distinction))?;
    let sig = sigma_family(&f, 2).unwrap();
    let ev = family_evidence(&sig, &roots, 2, 11).map_err(|e| e.to_string())?;
    ensure(ev.passed(&sig), || format!("Σ family: {}", ev.distinction))?;
    Ok("Ω(2), Σ(2,0), Σ(2,1) of dim 165; corner, Ω→Σ and 6 scaling maps are isomorphisms".into())
}

fn evidence_section(report: &str) -> &str {
    report.split("[summary]").nth(1).unwrap_or("")
}

fn reproducibility() -> Outcome {
    let config = VerificationConfig {
        seed: 42,
        ..VerificationConfig::default()
    };
    let a = run_verify(&config).map_err(|e| e.to_string())?.render();
    let b = run_verify(&config).map_err(|e| e.to_string())?.render();
    ensure(a == b, || "reports differ between runs".into())?;
    let checks = vec![Check::Dims, Check::BasisCrosscheck, Check::Symmetry, Check::Lemmas4];
    let mut compared = 0;
    for m in [2, 3] {
        for lambda in ["0", "1"] {
            let base = VerificationConfig {
                m,
                lambda: lambda.into(),
                checks: checks.clone(),
                ..VerificationConfig::default()
            };
            let rational = VerificationConfig {
                field: FieldSpec::Rational,
                ..base.clone()
            };
            let p = run_verify(&base).map_err(|e| e.to_string())?;
            let q = run_verify(&rational).map_err(|e| e.to_string())?;
            ensure(p.passed() && q.passed(), || format!("m={m} λ={lambda}: a check failed"))?;
            ensure(evidence_section(&p.render()) == evidence_section(&q.render()), || {
                format!("m={m} λ={lambda}: F_p and Q evidence differ")
            })?;
            compared += 1;
        }
    }
    let q = tetra::scalars::Rationals;
    for m in [2, 3, 4] {
        let alg = quotient_basis(&tetrahedral_relations(&q, m, q.one()).unwrap(), 2).map_err(|e| e.to_string())?;
        ensure(alg.dim() == 36 * m, || format!("dim over Q at m={m}: {}", alg.dim()))?;
    }
    Ok(format!("byte-identical reports; {compared} F_p/Q evidence comparisons agree"))
}

#[test]
fn acceptance_criteria() {
    let results = [
        run(1, "dimension", Duration::from_secs(60), dimensions),
        run(2, "basis cross-check", Duration::from_secs(30), basis_crosscheck_models),
        run(3, "symmetry", Duration::from_secs(60), symmetry),
        run(4, "path identities", Duration::from_secs(60), lemma_identities),
        run(5, "period four", Duration::from_secs(120), period_four),
        run(6, "singular failure", Duration::from_secs(120), singular_failure),
        run(7, "bimodule certificate", Duration::from_secs(600), bimodule_certificate),
        run(8, "constructions", Duration::from_secs(300), constructions),
        run(9, "reproducibility", Duration::from_secs(600), reproducibility),
    ];
    let failed: Vec<usize> = (1..=9).filter(|&n| !results[n - 1]).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
