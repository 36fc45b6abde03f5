//! The explicit path basis of the higher tetrahedral algebra with products
//! computed by direct rewriting rules instead of linear algebra.
//!
//! For each vertex `i` pick `X_i = τ f(τ) f²(τ)` and let `τ̄` be the other
//! arrow leaving `i`. The basis of `e_i Λ` consists of the initial subwords of
//! `X_i^m`, the paths `X_i^k τ̄` and `X_i^k τ̄ f(τ̄)` for `k < m`, and
//! `X_i^k τ f(τ) g(f(τ))` for `k < m - 1`. A path `p` is rewritten by:
//! * length > 3m: zero; length 3m: `X_i^m` if `p` is a cycle at `i`, else zero;
//! * length 4..3m-1, or length 3 apart from the exceptional cycles: the unique
//!   basis path with the same endpoints and length (zero if there is none);
//! * the exceptional cycles `εηβ`, `βεη`, `ηβε` at 2, 4, 5: `X_i - λ X_i^m`;
//! * a length-2 path `θ̄ g(θ̄)`: `θ f(θ) - λ C_θ`, where `C_θ` is the correction
//!   term of the relation of `θ`.

use std::collections::HashMap;

use crate::error::Result;
use crate::linalg::SparseVec;
use crate::quiver::{tetrahedral_quiver, Path, TriangulationQuiver};
use crate::scalars::Field;

use super::{repeat, tetrahedral_relations, BasisAlgebra};

/// First arrow of the chosen `X_i` for vertices `1..6`.
const X_START: [&str; 6] = ["delta", "rho", "alpha", "beta", "eta", "omega"];

/// Arrow ids of `X_i` for each vertex index (`X_1 = δηγ, X_2 = ρωβ, X_3 = ανμ,
/// X_4 = βρω, X_5 = ηγδ, X_6 = ωβρ`).
pub fn canonical_x(tq: &TriangulationQuiver) -> Vec<[usize; 3]> {
    X_START
        .iter()
        .map(|name| {
            let t = tq.quiver.arrow_index(name).unwrap();
            [t, tq.f[t], tq.f[tq.f[t]]]
        })
        .collect()
}

/// The socle path `X_i^m` at vertex index `i`.
pub fn omega_path(i: usize, m: usize) -> Path {
    let tq = tetrahedral_quiver();
    let x = canonical_x(&tq);
    tq.quiver.path(&repeat(&x[i], m)).unwrap()
}

/// The explicit basis paths, sorted.
pub fn basis_paths(tq: &TriangulationQuiver, m: usize) -> Vec<Path> {
    let q = &tq.quiver;
    let xs = canonical_x(tq);
    let mut out = Vec::new();
    for (i, x) in xs.iter().enumerate() {
        let (tau, taub) = (x[0], tq.bar[x[0]]);
        let xm = repeat(x, m);
        out.push(Path::trivial(i));
        for len in 1..=3 * m {
            out.push(q.path(&xm[..len]).unwrap());
        }
        for k in 0..m {
            let mut a = repeat(x, k);
            a.push(taub);
            out.push(q.path(&a).unwrap());
            a.push(tq.f[taub]);
            out.push(q.path(&a).unwrap());
        }
        for k in 0..m - 1 {
            let mut a = repeat(x, k);
            a.extend([tau, tq.f[tau], tq.g[tq.f[tau]]]);
            out.push(q.path(&a).unwrap());
        }
    }
    out.sort();
    out
}

struct Rewriter<'a, F: Field> {
    field: &'a F,
    tq: &'a TriangulationQuiver,
    m: usize,
    lambda: F::Elem,
    by_shape: HashMap<(usize, usize, usize), usize>,
    index: HashMap<Path, usize>,
    omega: Vec<usize>,
    xi: Vec<usize>,
    exceptional: HashMap<Vec<usize>, usize>,
    corrections: HashMap<usize, Vec<usize>>,
}

impl<F: Field> Rewriter<'_, F> {
    fn reduce(&self, p: &Path) -> SparseVec<F::Elem> {
        let f = self.field;
        let n = p.len();
        let three_m = 3 * self.m;
        let lookup = |p: &Path| -> SparseVec<F::Elem> {
            match self.by_shape.get(&(p.source, p.len(), p.target)) {
                Some(&b) => vec![(b, f.one())],
                None => Vec::new(),
            }
        };
        if n > three_m {
            return Vec::new();
        }
        if n == three_m {
            return if p.is_cycle() { vec![(self.omega[p.source], f.one())] } else { Vec::new() };
        }
        if n >= 4 {
            return lookup(p);
        }
        if n == 3 {
            if let Some(&v) = self.exceptional.get(&p.arrows) {
                let mut out = vec![(self.xi[v], f.one()), (self.omega[v], f.neg(&self.lambda))];
                out.retain(|(_, c)| !f.is_zero(c));
                out.sort_by_key(|(i, _)| *i);
                return out;
            }
            return lookup(p);
        }
        if let Some(&b) = self.index.get(p) {
            return vec![(b, f.one())];
        }
        // n == 2 and p = φ g(φ): rewrite through the relation of θ = bar(φ).
        let theta = self.tq.bar[p.arrows[0]];
        debug_assert_eq!(p.arrows[1], self.tq.g[p.arrows[0]]);
        let main = self.tq.quiver.path(&[theta, self.tq.f[theta]]).unwrap();
        let mut acc: HashMap<usize, F::Elem> = HashMap::new();
        for (b, c) in self.reduce(&main) {
            acc.insert(b, c);
        }
        if let Some(corr) = self.corrections.get(&theta) {
            let cp = self.tq.quiver.path(corr).unwrap();
            for (b, c) in self.reduce(&cp) {
                let e = acc.entry(b).or_insert_with(|| f.zero());
                *e = f.sub(e, &f.mul(&self.lambda, &c));
            }
        }
        let mut out: SparseVec<F::Elem> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }
}

/// The higher tetrahedral algebra on its explicit path basis, with products
/// given by the rewriting rules above.
pub fn explicit_basis_model<F: Field>(field: &F, m: usize, lambda: F::Elem) -> Result<BasisAlgebra<F>> {
    let pres = tetrahedral_relations(field, m, lambda.clone())?;
    let tq = tetrahedral_quiver();
    let q = &tq.quiver;
    let labels = basis_paths(&tq, m);
    let index: HashMap<Path, usize> = labels.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let by_shape = labels
        .iter()
        .enumerate()
        .filter(|(_, p)| (3..3 * m).contains(&p.len()))
        .map(|(i, p)| ((p.source, p.len(), p.target), i))
        .collect();
    let xs = canonical_x(&tq);
    let omega = (0..6).map(|i| index[&omega_path(i, m)]).collect();
    let xi = (0..6).map(|i| index[&q.path(&xs[i]).unwrap()]).collect();
    let exceptional = [("2", ["epsilon", "eta", "beta"]), ("4", ["beta", "epsilon", "eta"]), ("5", ["eta", "beta", "epsilon"])]
        .into_iter()
        .map(|(v, names)| {
            let ids = names.iter().map(|n| q.arrow_index(n).unwrap()).collect();
            (ids, q.vertex_index(v).unwrap())
        })
        .collect();
    let corrections = ["gamma", "rho", "xi"]
        .into_iter()
        .map(|n| {
            let theta = q.arrow_index(n).unwrap();
            let tb = tq.bar[theta];
            let mut arrows = repeat(&[tb, tq.f[tb], tq.f[tq.f[tb]]], m - 1);
            arrows.extend([tb, tq.g[tb]]);
            (theta, arrows)
        })
        .collect();
    let rw = Rewriter {
        field,
        tq: &tq,
        m,
        lambda,
        by_shape,
        index,
        omega,
        xi,
        exceptional,
        corrections,
    };
    let dim = labels.len();
    let mut products = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            if let Some(p) = q.compose(&labels[i], &labels[j]) {
                products[i][j] = rw.reduce(&p);
            }
        }
    }
    BasisAlgebra::from_products(field, q.clone(), (0..6).collect(), labels, products, None, Some(pres))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Fp;

    #[test]
    fn dimension_and_associativity() {
        let f = Fp::new(1_000_003).unwrap();
        for lambda in [0, 1, 5] {
            let alg = explicit_basis_model(&f, 2, lambda).unwrap();
            assert_eq!(alg.dim(), 72);
            assert!(alg.associativity_violation().is_none());
            alg.check_unit_and_grading().unwrap();
        }
    }

    #[test]
    fn two_basis_elements_per_length() {
        let tq = tetrahedral_quiver();
        let labels = basis_paths(&tq, 3);
        for i in 0..6 {
            for len in 1..9 {
                let n = labels.iter().filter(|p| p.source == i && p.len() == len).count();
                assert_eq!(n, 2, "vertex {i} length {len}");
            }
        }
    }
}
