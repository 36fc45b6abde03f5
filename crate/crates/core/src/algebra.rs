//! Structural invariants of a [`BasisAlgebra`] and verification of explicit
//! algebra maps given on arrows.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::path_algebra::{basis_paths, omega_path, explicit_basis_model, BasisAlgebra, FreeElement, Presentation};
use crate::quiver::{tetrahedral_quiver, Path, Quiver};
use crate::scalars::Field;

/// `cartan[i][j] = dim e_i A e_j`, indexed by position in `alg.vertices`.
pub fn cartan_matrix<F: Field>(alg: &BasisAlgebra<F>) -> Vec<Vec<usize>> {
    alg.vertices
        .iter()
        .map(|&i| alg.vertices.iter().map(|&j| alg.corner(i, j).len()).collect())
        .collect()
}

/// Radical series and right socle of one indecomposable projective `e_i A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexLoewy {
    pub vertex: usize,
    /// `dim rad^k(e_i A)` for `k = 0, 1, ...` up to and including the first zero.
    pub radical_dims: Vec<usize>,
    pub socle_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoewyData {
    pub per_vertex: Vec<VertexLoewy>,
    pub loewy_length: usize,
}

/// Basis indices of the radical: the labels of positive length. Valid when
/// every positive-length label is nilpotent, as for admissible presentations.
pub fn radical_basis<F: Field>(alg: &BasisAlgebra<F>) -> Vec<usize> {
    (0..alg.dim()).filter(|&i| alg.degree(i) > 0).collect()
}

/// Right socle of `e_v A`: elements killed by right multiplication with every
/// radical basis element, returned as a subspace of `A`.
pub fn right_socle<F: Field>(alg: &BasisAlgebra<F>, v: usize) -> Subspace<F> {
    let f = &alg.field;
    let rows = alg.basis_from(v).to_vec();
    let rad = radical_basis(alg);
    let images: Vec<Vec<F::Elem>> = rows
        .iter()
        .map(|&b| {
            let mut out = Vec::with_capacity(rad.len() * alg.dim());
            let ub = alg.unit(b);
            for &r in &rad {
                out.extend(alg.mul(&ub, &alg.unit(r)));
            }
            out
        })
        .collect();
    let width = rad.len() * alg.dim();
    let m = Matrix::from_rows(f, width, images);
    let ker = m.left_kernel();
    let vecs = (0..ker.rows)
        .map(|k| {
            let mut v = alg.zero();
            for (pos, &b) in rows.iter().enumerate() {
                v[b] = ker.get(k, pos).clone();
            }
            v
        })
        .collect();
    Subspace::span(f, alg.dim(), vecs)
}

pub fn socle_and_radical_series<F: Field>(alg: &BasisAlgebra<F>) -> LoewyData {
    let f = &alg.field;
    let rad = radical_basis(alg);
    let mut per_vertex = Vec::new();
    let mut loewy_length = 0;
    for &v in &alg.vertices {
        let mut current = Subspace::span(f, alg.dim(), alg.basis_from(v).iter().map(|&b| alg.unit(b)).collect());
        let mut dims = vec![current.dim()];
        while current.dim() > 0 {
            let mut next = Vec::new();
            for k in 0..current.dim() {
                let x = current.basis.row_vec(k);
                for &r in &rad {
                    let y = alg.mul(&x, &alg.unit(r));
                    if !alg.is_zero(&y) {
                        next.push(y);
                    }
                }
            }
            current = Subspace::span(f, alg.dim(), next);
            dims.push(current.dim());
        }
        loewy_length = loewy_length.max(dims.len() - 1);
        per_vertex.push(VertexLoewy {
            vertex: v,
            radical_dims: dims,
            socle_dim: right_socle(alg, v).dim(),
        });
    }
    LoewyData {
        per_vertex,
        loewy_length,
    }
}

/// The bilinear form `(a, b) = φ(ab)` where `φ` sums the coefficients of the
/// chosen socle labels.
#[derive(Clone, Debug)]
pub struct GramForm<F: Field> {
    pub matrix: Matrix<F>,
    pub socle: Vec<usize>,
}

impl<F: Field> GramForm<F> {
    pub fn pair(&self, a: usize, b: usize) -> &F::Elem {
        self.matrix.get(a, b)
    }
}

/// Builds the Gram matrix of `φ(ab)` and checks it is symmetric, invertible
/// and associative on all basis triples.
pub fn symmetrizing_form<F: Field>(alg: &BasisAlgebra<F>, socle: &[usize]) -> Result<GramForm<F>> {
    let f = &alg.field;
    let n = alg.dim();
    let phi = |v: &[(usize, F::Elem)]| -> F::Elem {
        v.iter()
            .filter(|(k, _)| socle.contains(k))
            .fold(f.zero(), |acc, (_, c)| f.add(&acc, c))
    };
    let mut matrix = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            let value = phi(alg.product(i, j));
            if !f.is_zero(&value) {
                matrix.set(i, j, value);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if matrix.get(i, j) != matrix.get(j, i) {
                return Err(Error::BadForm(format!(
                    "asymmetric at ({}, {})",
                    alg.label(i),
                    alg.label(j)
                )));
            }
        }
    }
    for i in 0..n {
        for &j in alg.basis_from(alg.target[i]) {
            let ij = alg.product(i, j);
            for &k in alg.basis_from(alg.target[j]) {
                let left = ij.iter().fold(f.zero(), |acc, (r, c)| f.add(&acc, &f.mul(c, matrix.get(*r, k))));
                let right = alg
                    .product(j, k)
                    .iter()
                    .fold(f.zero(), |acc, (r, c)| f.add(&acc, &f.mul(c, matrix.get(i, *r))));
                if left != right {
                    return Err(Error::BadForm(format!(
                        "not associative at ({}, {}, {})",
                        alg.label(i),
                        alg.label(j),
                        alg.label(k)
                    )));
                }
            }
        }
    }
    if matrix.rank() != n {
        return Err(Error::BadForm("Gram matrix is singular".into()));
    }
    Ok(GramForm {
        matrix,
        socle: socle.to_vec(),
    })
}

/// Re-expresses `alg` on a new basis of path labels, each evaluated through
/// the arrow images. Errors if the labels are not a basis.
pub fn rebase<F: Field>(alg: &BasisAlgebra<F>, labels: Vec<Path>) -> Result<BasisAlgebra<F>> {
    let f = &alg.field;
    let n = alg.dim();
    if labels.len() != n {
        return Err(Error::Other(format!("{} labels for dimension {n}", labels.len())));
    }
    let rows: Vec<Vec<F::Elem>> = labels.iter().map(|p| alg.eval_path(p)).collect();
    let change = Matrix::from_rows(f, n, rows.clone());
    let inv = change
        .inverse()
        .ok_or_else(|| Error::Other("new labels are linearly dependent".into()))?;
    let mut products = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if labels[i].target != labels[j].source {
                continue;
            }
            let prod = alg.mul(&rows[i], &rows[j]);
            let coords = inv.apply_row(&prod);
            products[i][j] = crate::linalg::dense_to_sparse(f, &coords);
        }
    }
    let arrow_images = (0..alg.quiver.num_arrows())
        .map(|a| inv.apply_row(alg.arrow_element(a)))
        .collect();
    BasisAlgebra::from_products(
        f,
        alg.quiver.clone(),
        alg.vertices.clone(),
        labels,
        products,
        Some(arrow_images),
        alg.presentation.clone(),
    )
}

/// Rebases a higher tetrahedral algebra onto its explicit path basis and
/// builds the form whose functional reads off the coefficients of `X_i^m`.
pub fn tetrahedral_form<F: Field>(alg: &BasisAlgebra<F>) -> Result<(BasisAlgebra<F>, GramForm<F>)> {
    let m = alg
        .presentation
        .as_ref()
        .ok_or(Error::NoPresentation("tetrahedral_form"))?
        .m;
    let tq = tetrahedral_quiver();
    let rebased = rebase(alg, basis_paths(&tq, m))?;
    let socle: Vec<usize> = (0..6)
        .map(|i| rebased.index_of(&omega_path(i, m)).unwrap())
        .collect();
    let gram = symmetrizing_form(&rebased, &socle)?;
    Ok((rebased, gram))
}

/// Vertex permutation `(5 4 2)(1 6 3)` and arrow permutation
/// `(δ ω σ)(η β ε)(γ ρ ξ)(ν μ α)` of the tetrahedral quiver.
pub const ROTATION_VERTEX_CYCLES: [[&str; 3]; 2] = [["5", "4", "2"], ["1", "6", "3"]];
pub const ROTATION_ARROW_CYCLES: [[&str; 3]; 4] = [
    ["delta", "omega", "sigma"],
    ["eta", "beta", "epsilon"],
    ["gamma", "rho", "xi"],
    ["nu", "mu", "alpha"],
];

/// The order-three rotation of a higher tetrahedral algebra, as an
/// [`ArrowMap`] from `alg` to itself.
pub fn tetrahedral_rotation<F: Field>(alg: &BasisAlgebra<F>) -> ArrowMap<F> {
    let q = &alg.quiver;
    let mut vperm: Vec<usize> = (0..q.num_vertices()).collect();
    for cycle in ROTATION_VERTEX_CYCLES {
        for k in 0..3 {
            vperm[q.vertex_index(cycle[k]).unwrap()] = q.vertex_index(cycle[(k + 1) % 3]).unwrap();
        }
    }
    let mut aperm: Vec<usize> = (0..q.num_arrows()).collect();
    for cycle in ROTATION_ARROW_CYCLES {
        for k in 0..3 {
            aperm[q.arrow_index(cycle[k]).unwrap()] = q.arrow_index(cycle[(k + 1) % 3]).unwrap();
        }
    }
    let ones = vec![alg.field.one(); q.num_arrows()];
    ArrowMap::from_permutation(alg, &vperm, &aperm, &ones)
}

/// Agreement of the quotient algebra with the explicit path-basis model.
#[derive(Clone, Debug)]
pub struct BasisCrossCheck {
    pub quotient_dim: usize,
    pub model_dim: usize,
    /// The identity on arrows, quotient → model.
    pub map: MapCheck,
    /// Structure constants of the rebased quotient equal the model's.
    pub constants_agree: bool,
}

impl BasisCrossCheck {
    pub fn passed(&self) -> bool {
        self.quotient_dim == self.model_dim && self.map.is_isomorphism() && self.constants_agree
    }
}

pub fn basis_crosscheck<F: Field>(alg: &BasisAlgebra<F>) -> Result<BasisCrossCheck> {
    let pres = alg
        .presentation
        .as_ref()
        .ok_or(Error::NoPresentation("basis_crosscheck"))?;
    let model = explicit_basis_model(&alg.field, pres.m, pres.lambda.clone())?;
    let q = &pres.quiver;
    let ids: Vec<usize> = (0..q.num_vertices()).collect();
    let arrows: Vec<usize> = (0..q.num_arrows()).collect();
    let ones = vec![alg.field.one(); q.num_arrows()];
    let map = check_map(pres, alg, &model, &ArrowMap::from_permutation(&model, &ids, &arrows, &ones));
    let constants_agree = alg.dim() == model.dim() && {
        let rebased = rebase(alg, model.labels.clone())?;
        (0..model.dim()).all(|i| (0..model.dim()).all(|j| rebased.product(i, j) == model.product(i, j)))
    };
    Ok(BasisCrossCheck {
        quotient_dim: alg.dim(),
        model_dim: model.dim(),
        map,
        constants_agree,
    })
}

/// An algebra map given by images of vertex idempotents and arrows, as
/// elements of the target algebra.
#[derive(Clone, Debug)]
pub struct ArrowMap<F: Field> {
    pub vertex_images: Vec<Vec<F::Elem>>,
    pub arrow_images: Vec<Vec<F::Elem>>,
}

impl<F: Field> ArrowMap<F> {
    /// Images written as path combinations in the target's quiver.
    pub fn from_free(
        target: &BasisAlgebra<F>,
        vertex_images: &[FreeElement<F::Elem>],
        arrow_images: &[FreeElement<F::Elem>],
    ) -> Self {
        ArrowMap {
            vertex_images: vertex_images.iter().map(|x| target.normal_form(x)).collect(),
            arrow_images: arrow_images.iter().map(|x| target.normal_form(x)).collect(),
        }
    }

    /// `e_v ↦ e_{vertex_perm[v]}`, `a ↦ scalars[a] · arrow_perm[a]`, within one quiver.
    pub fn from_permutation(
        target: &BasisAlgebra<F>,
        vertex_perm: &[usize],
        arrow_perm: &[usize],
        scalars: &[F::Elem],
    ) -> Self {
        ArrowMap {
            vertex_images: vertex_perm.iter().map(|&v| target.eval_path(&Path::trivial(v))).collect(),
            arrow_images: arrow_perm
                .iter()
                .zip(scalars)
                .map(|(&a, c)| target.scale(target.arrow_element(a), c))
                .collect(),
        }
    }

    /// Image of a path of the source quiver.
    pub fn apply_path(&self, target: &BasisAlgebra<F>, p: &Path) -> Vec<F::Elem> {
        let mut acc = self.vertex_images[p.source].clone();
        for &a in &p.arrows {
            acc = target.mul(&acc, &self.arrow_images[a]);
        }
        acc
    }

    pub fn apply_free(&self, target: &BasisAlgebra<F>, x: &FreeElement<F::Elem>) -> Vec<F::Elem> {
        let f = &target.field;
        let mut out = target.zero();
        for (p, c) in x.terms() {
            let v = self.apply_path(target, p);
            for (o, vi) in out.iter_mut().zip(&v) {
                *o = f.add(o, &f.mul(c, vi));
            }
        }
        out
    }

    /// Matrix of the induced linear map on bases (rows indexed by source basis).
    pub fn induced_matrix(&self, source: &BasisAlgebra<F>, target: &BasisAlgebra<F>) -> Matrix<F> {
        let rows = source.labels.iter().map(|p| self.apply_path(target, p)).collect();
        Matrix::from_rows(&target.field, target.dim(), rows)
    }
}

/// Outcome of checking an [`ArrowMap`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapCheck {
    /// Vertex images are orthogonal idempotents summing to 1.
    pub idempotents: bool,
    /// Each arrow image sits between the images of its endpoints.
    pub grading: bool,
    /// Indices of source relations not mapped to zero.
    pub failing_relations: Vec<usize>,
    /// `φ(b b') = φ(b) φ(b')` for all source basis pairs.
    pub multiplicative: bool,
    pub rank: usize,
    pub bijective: bool,
}

impl MapCheck {
    pub fn is_homomorphism(&self) -> bool {
        self.idempotents && self.grading && self.failing_relations.is_empty() && self.multiplicative
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_homomorphism() && self.bijective
    }
}

/// Verifies that `map` defines an algebra homomorphism from the algebra
/// presented by `pres` (with quotient `source`) to `target`, and whether the
/// induced linear map is bijective.
pub fn check_map<F: Field>(
    pres: &Presentation<F>,
    source: &BasisAlgebra<F>,
    target: &BasisAlgebra<F>,
    map: &ArrowMap<F>,
) -> MapCheck {
    let q = &pres.quiver;
    let nv = q.num_vertices();
    let mut idempotents = map.vertex_images.len() == nv;
    if idempotents {
        let mut sum = target.zero();
        for v in 0..nv {
            let ev = &map.vertex_images[v];
            sum = target.add(&sum, ev);
            for w in 0..nv {
                let prod = target.mul(ev, &map.vertex_images[w]);
                let ok = if v == w { prod == *ev } else { target.is_zero(&prod) };
                idempotents &= ok;
            }
        }
        idempotents &= sum == target.one();
    }
    let grading = idempotents
        && (0..q.num_arrows()).all(|a| {
            let img = &map.arrow_images[a];
            target.mul(&map.vertex_images[q.source(a)], img) == *img
                && target.mul(img, &map.vertex_images[q.target(a)]) == *img
        });
    let failing_relations = pres
        .relations
        .iter()
        .enumerate()
        .filter(|(_, r)| !target.is_zero(&map.apply_free(target, r)))
        .map(|(i, _)| i)
        .collect();
    let images: Vec<Vec<F::Elem>> = source.labels.iter().map(|p| map.apply_path(target, p)).collect();
    let f = &target.field;
    let mut multiplicative = true;
    'outer: for i in 0..source.dim() {
        for j in 0..source.dim() {
            if source.target[i] != source.source[j] {
                continue;
            }
            let mut lhs = target.zero();
            for (k, c) in source.product(i, j) {
                for (o, x) in lhs.iter_mut().zip(&images[*k]) {
                    *o = f.add(o, &f.mul(c, x));
                }
            }
            if lhs != target.mul(&images[i], &images[j]) {
                multiplicative = false;
                break 'outer;
            }
        }
    }
    let matrix = Matrix::from_rows(f, target.dim(), images);
    let rank = matrix.rank();
    MapCheck {
        idempotents,
        grading,
        failing_relations,
        multiplicative,
        rank,
        bijective: rank == source.dim() && rank == target.dim(),
    }
}

/// [`check_map`] for an endomorphism of an algebra built from a presentation.
pub fn check_automorphism<F: Field>(alg: &BasisAlgebra<F>, map: &ArrowMap<F>) -> Result<MapCheck> {
    let pres = alg
        .presentation
        .as_ref()
        .ok_or(Error::NoPresentation("check_automorphism"))?;
    Ok(check_map(pres, alg, alg, map))
}

/// The corner algebra `eAe` for `e` the sum of the idempotents of `verts`.
pub fn idempotent_subalgebra<F: Field>(alg: &BasisAlgebra<F>, verts: &[usize]) -> Result<BasisAlgebra<F>> {
    if verts.is_empty() {
        return Err(Error::BadParameter("empty vertex set".into()));
    }
    let mut verts = verts.to_vec();
    verts.sort_unstable();
    verts.dedup();
    let keep: Vec<usize> = (0..alg.dim())
        .filter(|&i| verts.contains(&alg.source[i]) && verts.contains(&alg.target[i]))
        .collect();
    let mut new_index = vec![usize::MAX; alg.dim()];
    for (k, &i) in keep.iter().enumerate() {
        new_index[i] = k;
    }
    let restrict = |v: &[(usize, F::Elem)]| -> Vec<(usize, F::Elem)> {
        v.iter().map(|(i, c)| (new_index[*i], c.clone())).collect()
    };
    let products = keep
        .iter()
        .map(|&i| keep.iter().map(|&j| restrict(alg.product(i, j))).collect())
        .collect();
    let arrow_images = (0..alg.quiver.num_arrows())
        .map(|a| {
            let full = alg.arrow_element(a);
            keep.iter().map(|&i| full[i].clone()).collect()
        })
        .collect();
    BasisAlgebra::from_products(
        &alg.field,
        alg.quiver.clone(),
        verts,
        keep.iter().map(|&i| alg.labels[i].clone()).collect(),
        products,
        Some(arrow_images),
        None,
    )
}

/// The presentation of `KQ/(I + (arrows))`: the arrows are deleted and every
/// relation term through them is dropped.
pub fn quotient_by_arrow_ideal<F: Field>(pres: &Presentation<F>, arrows: &[&str]) -> Result<Presentation<F>> {
    let q = &pres.quiver;
    let removed: Vec<usize> = arrows.iter().map(|n| q.arrow_index(n)).collect::<Result<_>>()?;
    let kept: Vec<usize> = (0..q.num_arrows()).filter(|a| !removed.contains(a)).collect();
    let triples: Vec<(&str, &str, &str)> = kept
        .iter()
        .map(|&a| {
            let arrow = q.arrow(a);
            (arrow.name.as_str(), q.vertex_name(arrow.source), q.vertex_name(arrow.target))
        })
        .collect();
    let new_q = Quiver::new(q.vertex_names(), &triples)?;
    let mut new_id = vec![usize::MAX; q.num_arrows()];
    for (k, &a) in kept.iter().enumerate() {
        new_id[a] = k;
    }
    let field = &pres.field;
    let mut relations = Vec::new();
    for r in &pres.relations {
        let terms: Vec<(Path, F::Elem)> = r
            .terms()
            .filter(|(p, _)| p.arrows.iter().all(|a| !removed.contains(a)))
            .map(|(p, c)| {
                let arrows = p.arrows.iter().map(|&a| new_id[a]).collect();
                (
                    Path {
                        source: p.source,
                        target: p.target,
                        arrows,
                    },
                    c.clone(),
                )
            })
            .collect();
        let x = FreeElement::from_terms(field, terms);
        if !x.is_zero() {
            relations.push(x);
        }
    }
    Presentation::new(field, new_q, relations, pres.lambda.clone(), pres.m, pres.length_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path_algebra::{explicit_basis_model, quotient_basis, tetrahedral_relations};
    use crate::scalars::Fp;

    fn field() -> Fp {
        Fp::new(1_000_003).unwrap()
    }

    #[test]
    fn cartan_rows_and_total() {
        let f = field();
        let alg = quotient_basis(&tetrahedral_relations(&f, 2, 1).unwrap(), 2).unwrap();
        let c = cartan_matrix(&alg);
        assert!(c.iter().all(|row| row.iter().sum::<usize>() == 12));
        assert_eq!(c.iter().flatten().sum::<usize>(), 72);
        let c0 = cartan_matrix(&quotient_basis(&tetrahedral_relations(&f, 2, 0).unwrap(), 2).unwrap());
        assert_eq!(c, c0);
    }

    #[test]
    fn loewy_length_and_socle() {
        let f = field();
        let alg = quotient_basis(&tetrahedral_relations(&f, 2, 1).unwrap(), 2).unwrap();
        let data = socle_and_radical_series(&alg);
        assert_eq!(data.loewy_length, 7);
        for v in &data.per_vertex {
            assert_eq!(v.socle_dim, 1);
            assert_eq!(v.radical_dims[0] - v.radical_dims[1], 1);
        }
    }

    #[test]
    fn full_vertex_set_is_identity() {
        let f = field();
        let alg = quotient_basis(&tetrahedral_relations(&f, 2, 1).unwrap(), 2).unwrap();
        let sub = idempotent_subalgebra(&alg, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(sub.labels, alg.labels);
        let local = idempotent_subalgebra(&alg, &[0]).unwrap();
        assert_eq!(local.dim(), cartan_matrix(&alg)[0][0]);
        assert!(local.associativity_violation().is_none());
        local.check_unit_and_grading().unwrap();
    }

    #[test]
    fn quotient_by_no_arrows_is_unchanged() {
        let f = field();
        let pres = tetrahedral_relations(&f, 2, 1).unwrap();
        assert_eq!(quotient_by_arrow_ideal(&pres, &[]).unwrap(), pres);
    }

    #[test]
    fn rotation_is_an_automorphism_of_order_three() {
        let f = field();
        for lambda in [0, 1, 7] {
            let alg = quotient_basis(&tetrahedral_relations(&f, 2, lambda).unwrap(), 2).unwrap();
            let map = tetrahedral_rotation(&alg);
            let check = check_automorphism(&alg, &map).unwrap();
            assert!(check.is_isomorphism(), "{check:?}");
            let m = map.induced_matrix(&alg, &alg);
            assert_eq!(m.mul(&m).mul(&m), Matrix::identity(&f, alg.dim()));
        }
    }

    #[test]
    fn rebase_onto_explicit_basis_matches_rewriting_model() {
        let f = field();
        for lambda in [0, 1, 5] {
            let model = explicit_basis_model(&f, 2, lambda).unwrap();
            let alg = quotient_basis(&tetrahedral_relations(&f, 2, lambda).unwrap(), 2).unwrap();
            let rebased = rebase(&alg, model.labels.clone()).unwrap();
            for i in 0..model.dim() {
                for j in 0..model.dim() {
                    assert_eq!(rebased.product(i, j), model.product(i, j));
                }
            }
            let socle: Vec<usize> = (0..6).map(|i| model.index_of(&omega_path(i, 2)).unwrap()).collect();
            symmetrizing_form(&rebased, &socle).unwrap();
        }
    }

    #[test]
    fn crosscheck_against_model() {
        let f = field();
        for m in [2, 3] {
            let alg = quotient_basis(&tetrahedral_relations(&f, m, 3).unwrap(), 2).unwrap();
            let c = basis_crosscheck(&alg).unwrap();
            assert!(c.passed(), "{c:?}");
            assert_eq!(c.model_dim, 36 * m);
        }
    }
}
