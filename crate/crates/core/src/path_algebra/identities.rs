//! Exhaustive path identities of `Λ(m, λ)`: socle paths, the alternative
//! forms of `X_i`, and the length-by-length behaviour of all paths.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::quiver::{enumerate_paths, tetrahedral_quiver, Path, Quiver};
use crate::scalars::Field;

use super::{canonical_x, omega_path, BasisAlgebra};

/// Equal forms of `X_i` for vertices `1..6`; the first entry is the canonical one.
pub const X_FORMS: [&[&str]; 6] = [
    &["delta eta gamma", "nu mu alpha", "nu omega gamma", "delta xi alpha"],
    &["rho omega beta", "epsilon xi sigma", "rho mu sigma"],
    &["alpha nu mu", "sigma epsilon xi", "sigma rho mu", "alpha delta xi"],
    &["beta rho omega", "gamma delta eta", "gamma nu omega"],
    &["eta gamma delta", "xi sigma epsilon", "xi alpha delta"],
    &["omega beta rho", "mu alpha nu", "mu sigma rho", "omega gamma nu"],
];

/// `X̃_i` at vertices 2, 4, 5 (indices 1, 3, 4).
pub const X_TILDE: [(usize, &str); 3] = [(1, "epsilon eta beta"), (3, "beta epsilon eta"), (4, "eta beta epsilon")];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub instances: usize,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.violations.is_empty())
    }

    pub fn violation_count(&self) -> usize {
        self.checks.iter().map(|c| c.violations.len()).sum()
    }
}

struct Checker<'a, F: Field> {
    alg: &'a BasisAlgebra<F>,
    check: IdentityCheck,
}

impl<'a, F: Field> Checker<'a, F> {
    fn new(alg: &'a BasisAlgebra<F>, name: &'static str) -> Self {
        Checker {
            alg,
            check: IdentityCheck {
                name,
                instances: 0,
                violations: Vec::new(),
            },
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.check.instances += 1;
        if !ok {
            self.check.violations.push(what());
        }
    }
}

fn word(q: &Quiver, text: &str) -> Path {
    let names: Vec<&str> = text.split_whitespace().collect();
    q.path_by_names(&names).expect("fixed path table")
}

/// Runs every identity on a tetrahedral algebra carrying its presentation.
pub fn identity_suite<F: Field>(alg: &BasisAlgebra<F>) -> Result<IdentityReport> {
    let pres = alg.presentation.as_ref().ok_or(Error::NoPresentation("identity_suite"))?;
    let tq = tetrahedral_quiver();
    if alg.quiver != tq.quiver {
        return Err(Error::BadParameter("lemma suite needs the tetrahedral quiver".into()));
    }
    let (q, m) = (&tq.quiver, pres.m);
    let eval = |p: &Path| alg.eval_path(p);
    let fmt = |p: &Path| q.format_path(p);
    let xs = canonical_x(&tq);
    let tops: Vec<Vec<F::Elem>> = (0..6).map(|i| eval(&omega_path(i, m))).collect();
    let mut checks = Vec::new();

    let mut c = Checker::new(alg, "socle-paths");
    for i in 0..6 {
        c.expect(!c.alg.is_zero(&tops[i]), || format!("X_{}^m is zero", i + 1));
        for a in q.out_arrows(i) {
            let p = q.compose(&omega_path(i, m), &q.arrow_path(a)).unwrap();
            c.expect(c.alg.is_zero(&eval(&p)), || format!("{} is nonzero", fmt(&p)));
        }
    }
    checks.push(c.check);

    let mut c = Checker::new(alg, "x-forms");
    for (i, forms) in X_FORMS.iter().enumerate() {
        let canonical = q.path(&xs[i]).unwrap();
        let x = eval(&canonical);
        for text in forms.iter() {
            let p = word(q, text);
            c.expect(eval(&p) == x, || format!("{} != {}", fmt(&p), fmt(&canonical)));
        }
    }
    checks.push(c.check);

    let mut c = Checker::new(alg, "tilde-forms");
    for (i, text) in X_TILDE {
        let x = eval(&q.path(&xs[i]).unwrap());
        let tilde = word(q, text);
        let rhs = alg.add(&eval(&tilde), &alg.scale(&tops[i], &pres.lambda));
        c.expect(x == rhs, || format!("X_{} != {} + l X^m", i + 1, fmt(&tilde)));
        let tilde_m = (1..m).fold(tilde.clone(), |acc, _| q.compose(&acc, &tilde).unwrap());
        c.expect(eval(&tilde_m) == tops[i], || format!("X_{}^m != ({})^m", i + 1, fmt(&tilde)));
    }
    checks.push(c.check);

    let mut short = Checker::new(alg, "length-3-between-vertices");
    let mut middle = Checker::new(alg, "length-4-to-3m-1");
    let mut top = Checker::new(alg, "length-3m");
    let mut beyond = Checker::new(alg, "beyond-3m");
    for i in 0..6 {
        let mut groups: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
        for p in enumerate_paths(q, Some(i), None, 3 * m + 1) {
            if p.len() >= 3 {
                groups.entry((p.len(), p.target)).or_default().push(p);
            }
        }
        for ((k, j), paths) in groups {
            let values: Vec<Vec<F::Elem>> = paths.iter().map(eval).collect();
            let all_equal_nonzero = |c: &mut Checker<F>| {
                c.expect(!c.alg.is_zero(&values[0]), || format!("{} is zero", fmt(&paths[0])));
                for (p, v) in paths.iter().zip(&values).skip(1) {
                    c.expect(*v == values[0], || format!("{} != {}", fmt(p), fmt(&paths[0])));
                }
            };
            if k == 3 && i != j {
                all_equal_nonzero(&mut short);
            } else if (4..3 * m).contains(&k) {
                all_equal_nonzero(&mut middle);
            } else if k == 3 * m {
                for (p, v) in paths.iter().zip(&values) {
                    if i == j {
                        top.expect(*v == tops[i], || format!("{} != X_{}^m", fmt(p), i + 1));
                    } else {
                        top.expect(top.alg.is_zero(v), || format!("{} is nonzero", fmt(p)));
                    }
                }
            } else if k > 3 * m {
                for (p, v) in paths.iter().zip(&values) {
                    beyond.expect(beyond.alg.is_zero(v), || format!("{} is nonzero", fmt(p)));
                }
            }
        }
    }
    checks.extend([short.check, middle.check, top.check, beyond.check]);
    Ok(IdentityReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path_algebra::{quotient_basis, tetrahedral_relations};
    use crate::scalars::Fp;

    #[test]
    fn identities_hold_for_both_parameters() {
        let f = Fp::new(1_000_003).unwrap();
        for lambda in [0, 1, 7] {
            let alg = quotient_basis(&tetrahedral_relations(&f, 2, lambda).unwrap(), 2).unwrap();
            let report = identity_suite(&alg).unwrap();
            assert!(report.passed(), "{:?}", report);
            assert!(report.checks.iter().all(|c| c.instances > 0));
        }
    }

    #[test]
    fn tilde_form_differs_from_x_when_lambda_nonzero() {
        let f = Fp::new(1_000_003).unwrap();
        let alg = quotient_basis(&tetrahedral_relations(&f, 2, 1).unwrap(), 2).unwrap();
        let q = &alg.quiver;
        assert_ne!(alg.eval_path(&word(q, "rho omega beta")), alg.eval_path(&word(q, "epsilon eta beta")));
    }
}
