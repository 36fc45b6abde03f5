//! Path-algebra elements, presentations, quotient bases and normal forms.

mod basis;
mod identities;
mod basis_model;
mod quotient;

use std::collections::BTreeMap;

pub use basis::BasisAlgebra;
pub use identities::{identity_suite, IdentityCheck, IdentityReport, X_FORMS, X_TILDE};
pub use basis_model::{basis_paths, canonical_x, omega_path, explicit_basis_model};
pub use quotient::{quotient_basis, quotient_basis_with_stats, stabilization_check, QuotientStats};

use crate::error::{Error, Result};
use crate::quiver::{tetrahedral_quiver, Path, Quiver};
use crate::scalars::Field;

/// A finite linear combination of paths with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreeElement<E> {
    terms: BTreeMap<Path, E>,
}

impl<E: Clone + PartialEq> FreeElement<E> {
    pub fn zero() -> Self {
        FreeElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_path<F: Field<Elem = E>>(field: &F, p: Path) -> Self {
        let mut x = Self::zero();
        x.add_term(field, p, field.one());
        x
    }

    pub fn from_terms<F: Field<Elem = E>>(field: &F, terms: impl IntoIterator<Item = (Path, E)>) -> Self {
        let mut x = Self::zero();
        for (p, c) in terms {
            x.add_term(field, p, c);
        }
        x
    }

    pub fn add_term<F: Field<Elem = E>>(&mut self, field: &F, p: Path, c: E) {
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                if !field.is_zero(&c) {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = field.add(o.get(), &c);
                if field.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(field, p.clone(), c.clone());
        }
        out
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.add(field, &other.scale(field, &field.neg(&field.one())))
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        Self::from_terms(field, self.terms.iter().map(|(p, x)| (p.clone(), field.mul(x, c))))
    }

    /// Product in the path algebra; non-composable pairs contribute zero.
    pub fn mul<F: Field<Elem = E>>(&self, field: &F, q: &Quiver, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p1, c1) in &self.terms {
            for (p2, c2) in &other.terms {
                if let Some(p) = q.compose(p1, p2) {
                    out.add_term(field, p, field.mul(c1, c2));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing path order.
    pub fn terms(&self) -> impl Iterator<Item = (&Path, &E)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &Path) -> Option<&E> {
        self.terms.get(p)
    }

    /// Common `(source, target)` of all terms, or `None` for zero.
    pub fn endpoints(&self) -> Result<Option<(usize, usize)>> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Ok(None);
        };
        let ends = (first.source, first.target);
        if it.all(|p| (p.source, p.target) == ends) {
            Ok(Some(ends))
        } else {
            Err(Error::MixedEndpoints)
        }
    }

    pub fn min_length(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).min()
    }

    pub fn max_length(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).max()
    }

    pub fn format<F: Field<Elem = E>>(&self, field: &F, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let text = field.format(c);
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" {
                s.push_str(&mag);
                s.push('*');
            }
            s.push_str(&q.format_path(p));
        }
        s
    }
}

/// A quiver with relations generating an ideal, plus the data used to build
/// the quotient: the parameter value `lambda`, the integer `m`, and the
/// length bound past which every path must vanish (or, when some relation
/// has a term of length below two, be rewritable into shorter paths).
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    pub field: F,
    pub quiver: Quiver,
    pub relations: Vec<FreeElement<F::Elem>>,
    pub lambda: F::Elem,
    pub m: usize,
    pub length_bound: usize,
}

impl<F: Field> PartialEq for Presentation<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field.describe() == other.field.describe()
            && self.quiver == other.quiver
            && self.relations == other.relations
            && self.lambda == other.lambda
            && self.m == other.m
            && self.length_bound == other.length_bound
    }
}

impl<F: Field> Presentation<F> {
    pub fn new(
        field: &F,
        quiver: Quiver,
        relations: Vec<FreeElement<F::Elem>>,
        lambda: F::Elem,
        m: usize,
        length_bound: usize,
    ) -> Result<Self> {
        for r in &relations {
            if r.is_zero() {
                return Err(Error::Other("zero relation in presentation".into()));
            }
            r.endpoints()?;
            if r.terms().any(|(p, _)| p.arrows.iter().any(|&a| a >= quiver.num_arrows())) {
                return Err(Error::BadQuiver("relation uses an arrow outside the quiver".into()));
            }
        }
        Ok(Presentation {
            field: field.clone(),
            quiver,
            relations,
            lambda,
            m,
            length_bound,
        })
    }

    /// True when every relation term has length at least two.
    pub fn is_admissible_shape(&self) -> bool {
        self.relations.iter().all(|r| r.min_length().unwrap_or(2) >= 2)
    }

    pub fn path(&self, names: &[&str]) -> Path {
        self.quiver.path_by_names(names).expect("fixture path")
    }
}

/// Repeats `block` `k` times.
pub fn repeat(block: &[usize], k: usize) -> Vec<usize> {
    let mut v = Vec::with_capacity(block.len() * k);
    for _ in 0..k {
        v.extend_from_slice(block);
    }
    v
}

/// The defining relations of the higher tetrahedral algebra.
///
/// Relation `θ` (arrow-id order) is `θ f(θ) - θ̄ g(θ̄)`, minus the correction
/// `λ (ζ f(ζ) f²(ζ))^{m-1} θ̄ g(θ̄)` with `ζ = θ̄` for `θ ∈ {γ, ρ, ξ}`.
/// Relation `12 + θ` is the zero relation `(θ f(θ) f²(θ))^{m-1} θ f(θ) g(f(θ))`.
pub fn tetrahedral_relations<F: Field>(field: &F, m: usize, lambda: F::Elem) -> Result<Presentation<F>> {
    if m < 2 {
        return Err(Error::BadParameter(format!("m = {m}, need m >= 2")));
    }
    let tq = tetrahedral_quiver();
    let q = &tq.quiver;
    let (f, bar, g) = (&tq.f, &tq.bar, &tq.g);
    let corrected = ["gamma", "rho", "xi"].map(|n| q.arrow_index(n).unwrap());
    let mut relations = Vec::with_capacity(24);
    for theta in 0..12 {
        let tb = bar[theta];
        let mut r = FreeElement::zero();
        r.add_term(field, q.path(&[theta, f[theta]])?, field.one());
        r.add_term(field, q.path(&[tb, g[tb]])?, field.neg(&field.one()));
        if corrected.contains(&theta) {
            let mut arrows = repeat(&[tb, f[tb], f[f[tb]]], m - 1);
            arrows.extend([tb, g[tb]]);
            r.add_term(field, q.path(&arrows)?, field.neg(&lambda));
        }
        relations.push(r);
    }
    for theta in 0..12 {
        let mut arrows = repeat(&[theta, f[theta], f[f[theta]]], m - 1);
        arrows.extend([theta, f[theta], g[f[theta]]]);
        relations.push(FreeElement::from_path(field, q.path(&arrows)?));
    }
    Presentation::new(field, tq.quiver.clone(), relations, lambda, m, 3 * m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Fp;

    #[test]
    fn tetrahedral_relation_shape() {
        let f = Fp::new(101).unwrap();
        let pres = tetrahedral_relations(&f, 2, 1).unwrap();
        assert_eq!(pres.relations.len(), 24);
        let q = &pres.quiver;
        let gamma = q.arrow_index("gamma").unwrap();
        let r = &pres.relations[gamma];
        assert_eq!(r.len(), 3);
        assert_eq!(r.coefficient(&pres.path(&["gamma", "delta"])), Some(&1));
        assert_eq!(r.coefficient(&pres.path(&["beta", "epsilon"])), Some(&100));
        let long = pres.path(&["beta", "rho", "omega", "beta", "epsilon"]);
        assert_eq!(r.coefficient(&long), Some(&100));
        for r in &pres.relations[12..] {
            assert_eq!(r.len(), 1);
            assert_eq!(r.max_length(), Some(6));
        }
        assert!(pres.is_admissible_shape());
    }

    #[test]
    fn lambda_zero_gives_commutativity() {
        let f = Fp::new(101).unwrap();
        let pres = tetrahedral_relations(&f, 3, 0).unwrap();
        for r in &pres.relations[..12] {
            assert_eq!(r.len(), 2);
            assert_eq!(r.max_length(), Some(2));
        }
    }

    #[test]
    fn m_below_two_rejected() {
        let f = Fp::new(101).unwrap();
        assert!(matches!(tetrahedral_relations(&f, 1, 1), Err(Error::BadParameter(_))));
    }

    #[test]
    fn each_relation_has_common_endpoints() {
        let f = Fp::new(101).unwrap();
        let pres = tetrahedral_relations(&f, 2, 3).unwrap();
        for r in &pres.relations {
            assert!(r.endpoints().unwrap().is_some());
        }
    }
}
