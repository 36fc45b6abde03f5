use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{axpy, SparseVec};
use crate::quiver::{Path, Quiver};
use crate::scalars::Field;

use super::{FreeElement, Presentation};

/// A finite-dimensional algebra with a basis of paths, structure constants,
/// and the vertex grading `b = e_{source(b)} b e_{target(b)}`.
///
/// `vertices` lists the quiver vertices whose idempotents belong to the
/// algebra; for an idempotent subalgebra it is a proper subset.
#[derive(Clone, Debug)]
pub struct BasisAlgebra<F: Field> {
    pub field: F,
    pub quiver: Quiver,
    pub vertices: Vec<usize>,
    pub labels: Vec<Path>,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    idempotent: Vec<Option<usize>>,
    products: Vec<Vec<SparseVec<F::Elem>>>,
    by_source: Vec<Vec<usize>>,
    index: HashMap<Path, usize>,
    arrow_images: Vec<Vec<F::Elem>>,
    pub presentation: Option<Presentation<F>>,
}

impl<F: Field> BasisAlgebra<F> {
    /// Assembles an algebra from labels and the full product table
    /// `products[i][j] = b_i b_j`. Idempotent labels must be trivial paths.
    ///
    /// `arrow_images` gives the image of each quiver arrow; when `None`, each
    /// arrow is looked up among the labels (and is zero if absent).
    pub fn from_products(
        field: &F,
        quiver: Quiver,
        vertices: Vec<usize>,
        labels: Vec<Path>,
        products: Vec<Vec<SparseVec<F::Elem>>>,
        arrow_images: Option<Vec<Vec<F::Elem>>>,
        presentation: Option<Presentation<F>>,
    ) -> Result<Self> {
        let dim = labels.len();
        if products.len() != dim || products.iter().any(|r| r.len() != dim) {
            return Err(Error::Other("product table has the wrong shape".into()));
        }
        let mut idempotent = vec![None; quiver.num_vertices()];
        let mut index = HashMap::new();
        for (i, p) in labels.iter().enumerate() {
            if p.is_empty() {
                idempotent[p.source] = Some(i);
            }
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::Other(format!("duplicate basis label {}", quiver.format_path(p))));
            }
        }
        for &v in &vertices {
            if idempotent[v].is_none() {
                return Err(Error::Other(format!("missing idempotent for vertex {}", quiver.vertex_name(v))));
            }
        }
        let source: Vec<usize> = labels.iter().map(|p| p.source).collect();
        let target: Vec<usize> = labels.iter().map(|p| p.target).collect();
        let mut by_source = vec![Vec::new(); quiver.num_vertices()];
        for (i, &s) in source.iter().enumerate() {
            by_source[s].push(i);
        }
        let mut alg = BasisAlgebra {
            field: field.clone(),
            quiver,
            vertices,
            labels,
            source,
            target,
            idempotent,
            products,
            by_source,
            index,
            arrow_images: Vec::new(),
            presentation,
        };
        alg.arrow_images = match arrow_images {
            Some(images) => images,
            None => (0..alg.quiver.num_arrows())
                .map(|a| match alg.index.get(&alg.quiver.arrow_path(a)) {
                    Some(&i) => alg.unit(i),
                    None => alg.zero(),
                })
                .collect(),
        };
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.labels[i].len()
    }

    pub fn zero(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn unit(&self, i: usize) -> Vec<F::Elem> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    /// Basis index of `e_v`, if `v` belongs to the algebra.
    pub fn idempotent(&self, v: usize) -> Option<usize> {
        self.idempotent[v]
    }

    pub fn one(&self) -> Vec<F::Elem> {
        let mut v = self.zero();
        for &x in &self.vertices {
            v[self.idempotent[x].unwrap()] = self.field.one();
        }
        v
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn label(&self, i: usize) -> String {
        self.quiver.format_path(&self.labels[i])
    }

    /// `b_i b_j`.
    pub fn product(&self, i: usize, j: usize) -> &SparseVec<F::Elem> {
        &self.products[i][j]
    }

    /// Basis indices `b` with `source(b) = v` (a basis of `e_v A`).
    pub fn basis_from(&self, v: usize) -> &[usize] {
        &self.by_source[v]
    }

    /// Basis indices `b` with `target(b) = v` (a basis of `A e_v`).
    pub fn basis_to(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.target[i] == v).collect()
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for &j in &self.by_source[self.target[i]] {
                let yj = &y[j];
                if f.is_zero(yj) {
                    continue;
                }
                axpy(f, &mut out, &f.mul(xi, yj), &self.products[i][j]);
            }
        }
        out
    }

    pub fn add(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().zip(y).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().zip(y).map(|(a, b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, x: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
        x.iter().map(|a| self.field.mul(a, c)).collect()
    }

    pub fn is_zero(&self, x: &[F::Elem]) -> bool {
        x.iter().all(|a| self.field.is_zero(a))
    }

    /// Image of quiver arrow `a`.
    pub fn arrow_element(&self, a: usize) -> &[F::Elem] {
        &self.arrow_images[a]
    }

    /// Image of a path: the product of its arrow images, or `e_v` if trivial.
    pub fn eval_path(&self, p: &Path) -> Vec<F::Elem> {
        if p.is_empty() {
            return match self.idempotent[p.source] {
                Some(i) => self.unit(i),
                None => self.zero(),
            };
        }
        let mut acc = self.arrow_images[p.arrows[0]].clone();
        for &a in &p.arrows[1..] {
            if self.is_zero(&acc) {
                break;
            }
            acc = self.mul(&acc, &self.arrow_images[a]);
        }
        acc
    }

    /// Coefficient vector of the image of `x` under the quotient map.
    pub fn normal_form(&self, x: &FreeElement<F::Elem>) -> Vec<F::Elem> {
        let mut out = self.zero();
        for (p, c) in x.terms() {
            let v = self.eval_path(p);
            for (o, vi) in out.iter_mut().zip(&v) {
                if !self.field.is_zero(vi) {
                    *o = self.field.add(o, &self.field.mul(c, vi));
                }
            }
        }
        out
    }

    /// First basis triple violating associativity, if any.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let f = &self.field;
        for i in 0..self.dim() {
            for &j in &self.by_source[self.target[i]] {
                let ij = &self.products[i][j];
                for &k in &self.by_source[self.target[j]] {
                    let mut left = self.zero();
                    for (r, c) in ij {
                        axpy(f, &mut left, c, &self.products[*r][k]);
                    }
                    let mut right = self.zero();
                    for (r, c) in &self.products[j][k] {
                        axpy(f, &mut right, c, &self.products[i][*r]);
                    }
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Checks that the idempotents are orthogonal, sum to a two-sided
    /// identity, and that products respect the vertex grading.
    pub fn check_unit_and_grading(&self) -> Result<()> {
        let one = self.one();
        for i in 0..self.dim() {
            let b = self.unit(i);
            if self.mul(&one, &b) != b || self.mul(&b, &one) != b {
                return Err(Error::Other(format!("identity fails on {}", self.label(i))));
            }
            for j in 0..self.dim() {
                let p = &self.products[i][j];
                if self.target[i] != self.source[j] && !p.is_empty() {
                    return Err(Error::Other(format!(
                        "product {} * {} is nonzero across vertices",
                        self.label(i),
                        self.label(j)
                    )));
                }
                if p.iter().any(|(k, _)| self.source[*k] != self.source[i] || self.target[*k] != self.target[j]) {
                    return Err(Error::Other(format!(
                        "product {} * {} leaves its corner",
                        self.label(i),
                        self.label(j)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Indices of basis elements of `e_i A e_j`.
    pub fn corner(&self, i: usize, j: usize) -> Vec<usize> {
        self.by_source[i].iter().copied().filter(|&b| self.target[b] == j).collect()
    }

    pub fn format_element(&self, x: &[F::Elem]) -> String {
        let mut fe = FreeElement::zero();
        for (i, c) in x.iter().enumerate() {
            fe.add_term(&self.field, self.labels[i].clone(), c.clone());
        }
        fe.format(&self.field, &self.quiver)
    }
}
