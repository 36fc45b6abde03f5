//! Batch verification of one algebra and the report it produces.
//!
//! Reports are plain `key: value` lines under `[config]`, `[summary]` and
//! `[evidence]` headers. They contain no timings, so equal configurations
//! give byte-identical reports.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{basis_crosscheck, cartan_matrix, socle_and_radical_series, tetrahedral_form};
use crate::bimodule::resolution_certificate;
use crate::error::{Error, Result};
use crate::families::{
    build_omega, build_sigma, corner_iso_check, family_evidence, gamma_quotient_check, lambda_family,
    omega_sigma_iso_check, sigma_family, special_biserial_check, FamilyEvidence,
};
use crate::modules::{is_isomorphic, periodicity_report, radical_mod_socle, IsoVerdict};
use crate::path_algebra::{
    identity_suite, quotient_basis, stabilization_check, tetrahedral_relations, BasisAlgebra, Presentation,
};
use crate::quiver::tetrahedral_quiver;
use crate::scalars::{FieldSpec, Field, Fp, Rationals};

use super::format::parse_presentation;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Dims,
    BasisCrosscheck,
    Symmetry,
    Lemmas4,
    Simples,
    Bimodule,
    Families,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Dims,
        Check::BasisCrosscheck,
        Check::Symmetry,
        Check::Lemmas4,
        Check::Simples,
        Check::Bimodule,
        Check::Families,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Dims => "dims",
            Check::BasisCrosscheck => "basis-crosscheck",
            Check::Symmetry => "symmetry",
            Check::Lemmas4 => "lemmas4",
            Check::Simples => "simples",
            Check::Bimodule => "bimodule",
            Check::Families => "families",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::BadParameter(format!("unknown check `{s}`")))
    }
}

/// `all` or a comma-separated list of check names, deduplicated and ordered.
pub fn parse_checks(s: &str) -> Result<Vec<Check>> {
    if s.trim() == "all" {
        return Ok(Check::ALL.to_vec());
    }
    let mut out = s.split(',').map(Check::from_str).collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err(Error::BadParameter("no checks selected".into()));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationConfig {
    pub m: usize,
    pub lambda: String,
    pub field: FieldSpec,
    pub checks: Vec<Check>,
    pub max_n: usize,
    pub seed: u64,
    pub headroom: usize,
    /// `(display name, file contents)` of a user presentation replacing `Λ(m, λ)`.
    pub presentation: Option<(String, String)>,
}

impl Default for VerificationConfig {
    fn default() -> Self {
        VerificationConfig {
            m: 2,
            lambda: "1".into(),
            field: FieldSpec::Prime(crate::scalars::DEFAULT_PRIME),
            checks: Check::ALL.to_vec(),
            max_n: 8,
            seed: 0,
            headroom: 2,
            presentation: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error(String),
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub check: Check,
    pub status: Status,
    pub evidence: Vec<(String, String)>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub config: Vec<(String, String)>,
    pub outcomes: Vec<CheckOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.status == Status::Pass)
    }

    pub fn outcome(&self, check: Check) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| o.check == check)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "tetra verification report");
        let _ = writeln!(s, "schema: {SCHEMA_VERSION}");
        s.push_str("[config]\n");
        for (k, v) in &self.config {
            let _ = writeln!(s, "{k}: {v}");
        }
        s.push_str("[summary]\n");
        for o in &self.outcomes {
            let status = match &o.status {
                Status::Pass => "pass".to_string(),
                Status::Fail => "fail".to_string(),
                Status::Error(e) => format!("error ({e})"),
            };
            let _ = writeln!(s, "{}: {status}", o.check.name());
        }
        let passed = self.outcomes.iter().filter(|o| o.status == Status::Pass).count();
        let verdict = if self.passed() { "pass" } else { "fail" };
        let _ = writeln!(s, "overall: {verdict} ({passed}/{} checks)", self.outcomes.len());
        s.push_str("[evidence]\n");
        for o in &self.outcomes {
            for (k, v) in &o.evidence {
                let _ = writeln!(s, "{}.{k}: {v}", o.check.name());
            }
        }
        s
    }

    /// Per-check wall-clock times, one line each.
    pub fn timings(&self) -> String {
        self.outcomes
            .iter()
            .map(|o| format!("{}: {:.3}s\n", o.check.name(), o.elapsed.as_secs_f64()))
            .collect()
    }
}

/// Runs the configured checks. Usage errors (bad parameters, unreadable
/// presentations) are returned as `Err`; failures inside a check become
/// per-check error entries.
pub fn run_verify(config: &VerificationConfig) -> Result<Report> {
    if config.m < 2 && config.presentation.is_none() {
        return Err(Error::BadParameter(format!("m = {}, need m >= 2", config.m)));
    }
    if config.max_n < 4 {
        return Err(Error::BadParameter(format!("max-syzygy = {}, need at least 4", config.max_n)));
    }
    if config.checks.is_empty() {
        return Err(Error::BadParameter("no checks selected".into()));
    }
    match config.field {
        FieldSpec::Prime(p) => run_with(&Fp::new(p)?, config),
        FieldSpec::Rational => run_with(&Rationals, config),
    }
}

type Evidence = Vec<(String, String)>;

fn ev(out: &mut Evidence, key: impl Into<String>, value: impl ToString) {
    out.push((key.into(), value.to_string()));
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

struct Context<'a, F: Field> {
    field: &'a F,
    config: &'a VerificationConfig,
    pres: &'a Presentation<F>,
    alg: &'a BasisAlgebra<F>,
    builtin: bool,
}

fn run_with<F: Field>(field: &F, config: &VerificationConfig) -> Result<Report> {
    let lambda = field
        .parse(&config.lambda)
        .map_err(|e| Error::BadParameter(format!("lambda: {e}")))?;
    let pres = match &config.presentation {
        Some((_, text)) => parse_presentation(field, text)?,
        None => tetrahedral_relations(field, config.m, lambda)?,
    };
    let mut echo = vec![
        ("m".to_string(), pres.m.to_string()),
        ("lambda".to_string(), field.format(&pres.lambda)),
        ("field".to_string(), field.describe()),
        ("checks".to_string(), config.checks.iter().map(|c| c.name()).collect::<Vec<_>>().join(",")),
        ("max_syzygy".to_string(), config.max_n.to_string()),
        ("seed".to_string(), config.seed.to_string()),
        ("headroom".to_string(), config.headroom.to_string()),
    ];
    let source = config.presentation.as_ref().map_or("builtin", |(name, _)| name.as_str());
    echo.push(("presentation".to_string(), source.to_string()));
    let outcomes = match quotient_basis(&pres, config.headroom) {
        Err(e) => config
            .checks
            .iter()
            .map(|&check| CheckOutcome {
                check,
                status: Status::Error(format!("quotient: {e}")),
                evidence: Vec::new(),
                elapsed: Duration::ZERO,
            })
            .collect(),
        Ok(alg) => {
            let ctx = Context {
                field,
                config,
                pres: &pres,
                alg: &alg,
                builtin: config.presentation.is_none(),
            };
            std::thread::scope(|scope| {
                let handles: Vec<_> = config
                    .checks
                    .iter()
                    .map(|&check| {
                        let ctx = &ctx;
                        scope.spawn(move || run_check(ctx, check))
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("check worker panicked"))
                    .collect()
            })
        }
    };
    Ok(Report { config: echo, outcomes })
}

fn run_check<F: Field>(ctx: &Context<F>, check: Check) -> CheckOutcome {
    let start = Instant::now();
    let mut evidence = Vec::new();
    let result = match check {
        Check::Dims => check_dims(ctx, &mut evidence),
        Check::BasisCrosscheck => check_crosscheck(ctx, &mut evidence),
        Check::Symmetry => check_symmetry(ctx, &mut evidence),
        Check::Lemmas4 => check_identities(ctx, &mut evidence),
        Check::Simples => check_simples(ctx, &mut evidence),
        Check::Bimodule => check_bimodule(ctx, &mut evidence),
        Check::Families => check_families(ctx, &mut evidence),
    };
    let status = match result {
        Ok(true) => Status::Pass,
        Ok(false) => Status::Fail,
        Err(e) => Status::Error(e.to_string()),
    };
    CheckOutcome {
        check,
        status,
        evidence,
        elapsed: start.elapsed(),
    }
}

fn check_dims<F: Field>(ctx: &Context<F>, out: &mut Evidence) -> Result<bool> {
    let alg = ctx.alg;
    let m = ctx.pres.m;
    ev(out, "dim", alg.dim());
    for (v, row) in cartan_matrix(alg).iter().enumerate() {
        ev(out, format!("cartan.{}", alg.quiver.vertex_name(alg.vertices[v])), join(row));
    }
    let loewy = socle_and_radical_series(alg);
    ev(out, "loewy_length", loewy.loewy_length);
    ev(out, "socle_dims", join(loewy.per_vertex.iter().map(|v| v.socle_dim)));
    let (a, _, stable) = stabilization_check(ctx.pres, ctx.config.headroom)?;
    ev(out, "dims_by_degree", join(&a.dims_by_degree));
    ev(out, "stable_under_headroom", stable);
    if !ctx.builtin {
        return Ok(stable);
    }
    ev(out, "expected_dim", 36 * m);
    Ok(stable
        && alg.dim() == 36 * m
        && loewy.loewy_length == 3 * m + 1
        && loewy.per_vertex.iter().all(|v| v.socle_dim == 1))
}

fn check_crosscheck<F: Field>(ctx: &Context<F>, out: &mut Evidence) -> Result<bool> {
    let c = basis_crosscheck(ctx.alg)?;
    ev(out, "quotient_dim", c.quotient_dim);
    ev(out, "model_dim", c.model_dim);
    ev(out, "failing_relations", c.map.failing_relations.len());
    ev(out, "map_rank", c.map.rank);
    ev(out, "constants_agree", c.constants_agree);
    Ok(c.passed())
}

fn check_symmetry<F: Field>(ctx: &Context<F>, out: &mut Evidence) -> Result<bool> {
    let f = ctx.field;
    let (rebased, gram) = match tetrahedral_form(ctx.alg) {
        Ok(x) => x,
        Err(Error::BadForm(msg)) => {
            ev(out, "violation", msg);
            return Ok(false);
        }
        Err(e) => return Err(e),
    };
    ev(out, "gram_size", gram.matrix.rows);
    ev(out, "symmetric", true);
    ev(out, "associative", true);
    ev(out, "gram_rank", gram.matrix.rank());
    let one = f.one();
    let unit_pairs = (0..6).all(|i| {
        let e = rebased.index_of(&crate::quiver::Path::trivial(i)).unwrap();
        *gram.pair(e, gram.socle[i]) == one
    });
    ev(out, "idempotent_socle_pairs", unit_pairs);
    let m = ctx.pres.m;
    let complements = (0..rebased.dim()).all(|b| {
        (0..rebased.dim())
            .any(|c| rebased.degree(b) + rebased.degree(c) == 3 * m && *gram.pair(b, c) == one)
    });
    ev(out, "complement_pairs", complements);
    Ok(gram.matrix.rank() == rebased.dim() && unit_pairs && complements)
}

fn check_identities<F: Field>(ctx: &Context<F>, out: &mut Evidence) -> Result<bool> {
    let report = identity_suite(ctx.alg)?;
    for c in &report.checks {
        ev(out, format!("{}.instances", c.name), c.instances);
        ev(out, format!("{}.violations", c.name), c.violations.len());
        if let Some(v) = c.violations.first() {
            ev(out, format!("{}.first", c.name), v);
        }
    }
    Ok(report.passed())
}

/// Cover vertices of `S_i, Ω(S_i), Ω²(S_i), Ω³(S_i)` for a periodic simple:
/// `i`, targets of arrows from `i`, sources of arrows into `i`, `i`.
pub fn expected_cover_shape(q: &crate::quiver::Quiver, i: usize) -> Vec<Vec<usize>> {
    let mut outs: Vec<usize> = q.out_arrows(i).into_iter().map(|a| q.target(a)).collect();
    let mut ins: Vec<usize> = q.in_arrows(i).into_iter().map(|a| q.source(a)).collect();
    outs.sort_unstable();
    ins.sort_unstable();
    vec![vec![i], outs, ins, vec![i]]
}

fn check_simples<F: Field>(ctx: &Context<F>, out: &mut Evidence) -> Result<bool> {
    let alg = ctx.alg;
    let q = &alg.quiver;
    let m = ctx.pres.m;
    let nonsingular = !ctx.field.is_zero(&ctx.pres.lambda);
    let mut ok = true;
    for &v in &alg.vertices {
        let r = periodicity_report(alg, v, ctx.config.max_n, ctx.config.seed)?;
        let name = format!("S{}", q.vertex_name(v));
        ev(out, format!("{name}.syzygy_dims"), join(&r.syzygy_dims));
        ev(out, format!("{name}.top_dims"), join(&r.top_dims));
        let period = r.period_found.map_or("none".to_string(), |p| p.to_string());
        ev(out, format!("{name}.period"), &period);
        let covers: Vec<Vec<usize>> = r
            .covers
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c
            })
            .collect();
        ev(
            out,
            format!("{name}.covers"),
            covers
                .iter()
                .map(|c| join(c.iter().map(|&w| q.vertex_name(w))))
                .collect::<Vec<_>>()
                .join(" | "),
        );
        let inconclusive = r.verdicts.iter().filter(|v| matches!(v, IsoVerdict::Inconclusive)).count();
        ev(out, format!("{name}.inconclusive"), inconclusive);
        if !ctx.builtin {
            continue;
        }
        if nonsingular {
            ok &= r.period_found == Some(4)
                && r.syzygy_dims[1..4] == [6 * m - 1, 6 * m + 1, 6 * m - 1]
                && covers.len() >= 4
                && covers[..4] == expected_cover_shape(q, v)[..];
        } else {
            ok &= r.period_found.is_none()
                && r.verdicts.iter().all(|v| matches!(v, IsoVerdict::No(_)));
        }
    }
    if ctx.builtin && !nonsingular {
        let r = periodicity_report(alg, 0, 4, ctx.config.seed)?;
        ev(out, "omega2_top_S1", r.top_dims[2]);
        ok &= r.top_dims[2] > 2;
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.config.seed);
        for i in [0, 2, 4] {
            let a = radical_mod_socle(alg, i)?;
            let b = radical_mod_socle(alg, i + 1)?;
            let verdict = is_isomorphic(&a, &b, &mut rng);
            ev(
                out,
                format!("rad_soc_iso.{}_{}", q.vertex_name(i), q.vertex_name(i + 1)),
                verdict.label(),
            );
            ok &= verdict == IsoVerdict::Yes;
        }
    }
    Ok(ok)
}

fn check_bimodule<F: Field>(ctx: &Context<F>, out: &mut Evidence) -> Result<bool> {
    let (rebased, gram) = tetrahedral_form(ctx.alg)?;
    let c = resolution_certificate(&rebased, &tetrahedral_quiver(), &gram)?;
    ev(out, "lambda_nonzero", !ctx.field.is_zero(&ctx.pres.lambda));
    ev(out, "algebra_dim", c.algebra_dim);
    ev(out, "projective_dims", join(c.dims));
    ev(out, "ranks", format!("d0={} d={} R={} S={}", c.rank_d0, c.rank_d, c.rank_r, c.rank_s));
    ev(out, "kernel_s", c.kernel_s);
    ev(out, "chain", join(c.chain));
    ev(out, "exact", join(c.exact));
    ev(out, "representatives_agree", c.representatives_agree);
    ev(out, "theta", format!("bimodule={} xi_killed={} rank={}", c.theta.bimodule, c.theta.xi_killed_by_s, c.theta.rank));
    ev(out, "omega4_iso", c.omega4_iso);
    ev(out, "ext_matches", join(c.ext_matches));
    Ok(c.passed())
}

fn family_lines<F: Field>(out: &mut Evidence, prefix: &str, f: &F, e: &FamilyEvidence<F>) {
    ev(out, format!("{prefix}.dims"), join(e.dims.iter().map(|(t, d)| format!("{}:{d}", f.format(t)))));
    ev(
        out,
        format!("{prefix}.scalings"),
        join(e.scalings.iter().map(|s| format!("a={},t={}:{}", f.format(&s.a), f.format(&s.t), s.passed()))),
    );
    ev(out, format!("{prefix}.zero_member"), &e.distinction);
}

fn check_families<F: Field>(ctx: &Context<F>, out: &mut Evidence) -> Result<bool> {
    if !ctx.builtin {
        return Err(Error::BadParameter("families check needs the built-in algebra".into()));
    }
    let (f, m, h) = (ctx.field, ctx.pres.m, ctx.config.headroom);
    let roots: Vec<F::Elem> = [2, 3, 5].iter().map(|&a| f.from_i64(a)).collect();
    let base = if f.is_zero(&ctx.pres.lambda) { f.one() } else { ctx.pres.lambda.clone() };
    let lam = lambda_family(f, m, base)?;
    let lam_ev = family_evidence(&lam, &roots, h, ctx.config.seed)?;
    family_lines(out, "lambda_family", f, &lam_ev);
    let sig = sigma_family(f, m)?;
    let sig_ev = family_evidence(&sig, &roots, h, ctx.config.seed)?;
    family_lines(out, "sigma_family", f, &sig_ev);
    let mut ok = lam_ev.passed(&lam) && sig_ev.passed(&sig);

    let omega = quotient_basis(&build_omega(f, m)?, h)?;
    let vertex_dims: Vec<usize> = (0..9).map(|v| omega.basis_from(v).len()).collect();
    ev(out, "omega.dim", omega.dim());
    ev(out, "omega.vertex_dims", join(&vertex_dims));
    ok &= omega.dim() == 81 * m + 3
        && vertex_dims.iter().enumerate().all(|(v, &d)| d == if v < 6 { 9 * m } else { 9 * m + 1 });

    let (corner_dim, corner) = corner_iso_check(f, m, h)?;
    ev(out, "corner.dim", corner_dim);
    ev(out, "corner.isomorphism", corner.is_isomorphism());
    ok &= corner.is_isomorphism();

    let phi = omega_sigma_iso_check(f, m, h)?;
    ev(out, "omega_sigma.idempotents", phi.idempotents);
    ev(out, "omega_sigma.failing_relations", phi.failing_relations.len());
    ev(out, "omega_sigma.rank", phi.rank);
    ok &= phi.is_isomorphism();

    let s0 = build_sigma(f, m, f.zero())?;
    let s0_alg = quotient_basis(&s0, h)?;
    let biserial_sigma = special_biserial_check(&s0, &s0_alg);
    let biserial_lambda = special_biserial_check(ctx.pres, ctx.alg);
    ev(out, "biserial.sigma0", biserial_sigma.passed);
    ev(out, "biserial.lambda", biserial_lambda.passed);
    if let Some(w) = biserial_lambda.witnesses.first() {
        ev(out, "biserial.lambda_witness", w);
    }
    ok &= biserial_sigma.passed
        && !biserial_lambda.passed
        && biserial_lambda.witnesses.iter().any(|w| w.starts_with("gamma is followed by"));

    let g0 = gamma_quotient_check(f, m, f.zero(), h)?;
    let g1 = gamma_quotient_check(f, m, f.one(), h)?;
    ev(out, "gamma.arrows", g0.presentation.quiver.num_arrows());
    ev(out, "gamma.dims", format!("{} {}", g0.dim, g1.dim));
    ev(out, "gamma.matches_display", g0.matches_display && g1.matches_display);
    ok &= g0.matches_display && g1.matches_display && g0.dim == g1.dim && g0.cartan == g1.cartan;
    Ok(ok)
}
