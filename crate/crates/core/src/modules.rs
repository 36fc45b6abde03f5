//! Finite-dimensional right modules over a [`BasisAlgebra`], stored as quiver
//! representations in the row-vector convention: a vector `x` at vertex
//! `s(a)` is sent to `x · A_a` at vertex `t(a)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::path_algebra::BasisAlgebra;
use crate::quiver::Path;
use crate::scalars::Field;

/// Random homomorphisms tried before the exhaustive fallback.
pub const ISO_SAMPLES: usize = 32;
/// Largest `dim Hom` for which the exhaustive fallback runs.
pub const EXHAUSTIVE_HOM_DIM: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule<F: Field> {
    pub field: F,
    pub dims: Vec<usize>,
    /// One `dims[s(a)] × dims[t(a)]` matrix per quiver arrow.
    pub actions: Vec<Matrix<F>>,
    arrow_ends: Vec<(usize, usize)>,
}

/// Graded subspace of a module: one subspace of `K^{dims[v]}` per vertex.
pub type GradedSubspace<F> = Vec<Subspace<F>>;

impl<F: Field> RightModule<F> {
    /// Checks matrix shapes and that every relation of the algebra's
    /// presentation acts as zero.
    pub fn new(alg: &BasisAlgebra<F>, dims: Vec<usize>, actions: Vec<Matrix<F>>) -> Result<Self> {
        let q = &alg.quiver;
        if dims.len() != q.num_vertices() || actions.len() != q.num_arrows() {
            return Err(Error::BadModule("wrong number of vertices or arrows".into()));
        }
        for (v, &d) in dims.iter().enumerate() {
            if d > 0 && alg.idempotent(v).is_none() {
                return Err(Error::BadModule(format!("support at vertex {} outside the algebra", q.vertex_name(v))));
            }
        }
        let arrow_ends: Vec<(usize, usize)> = (0..q.num_arrows()).map(|a| (q.source(a), q.target(a))).collect();
        for (a, m) in actions.iter().enumerate() {
            let (s, t) = arrow_ends[a];
            if m.rows != dims[s] || m.cols != dims[t] {
                return Err(Error::BadModule(format!("action of {} has the wrong shape", q.arrow(a).name)));
            }
        }
        let module = RightModule {
            field: alg.field.clone(),
            dims,
            actions,
            arrow_ends,
        };
        if let Some(pres) = &alg.presentation {
            for (k, r) in pres.relations.iter().enumerate() {
                let Some((s, t)) = r.endpoints()? else { continue };
                let mut total = Matrix::zeros(&module.field, module.dims[s], module.dims[t]);
                for (p, c) in r.terms() {
                    total = total.add(&module.path_matrix(p).scale(c));
                }
                if !total.is_zero() {
                    return Err(Error::BadModule(format!("relation {k} does not act as zero")));
                }
            }
        }
        Ok(module)
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Action of a path as a `dims[source] × dims[target]` matrix.
    pub fn path_matrix(&self, p: &Path) -> Matrix<F> {
        let mut acc = Matrix::identity(&self.field, self.dims[p.source]);
        for &a in &p.arrows {
            acc = acc.mul(&self.actions[a]);
        }
        acc
    }

    /// `M · rad` at every vertex.
    pub fn radical(&self) -> GradedSubspace<F> {
        let all: GradedSubspace<F> = self
            .dims
            .iter()
            .map(|&d| Subspace::from_matrix(&Matrix::identity(&self.field, d)))
            .collect();
        self.image_under_arrows(&all)
    }

    /// `U · rad` for a graded subspace `U`.
    pub fn image_under_arrows(&self, u: &GradedSubspace<F>) -> GradedSubspace<F> {
        let mut images: Vec<Vec<Vec<F::Elem>>> = vec![Vec::new(); self.dims.len()];
        for (a, m) in self.actions.iter().enumerate() {
            let (s, t) = self.arrow_ends[a];
            for k in 0..u[s].dim() {
                images[t].push(m.apply_row(u[s].basis.row(k)));
            }
        }
        images
            .into_iter()
            .enumerate()
            .map(|(v, vecs)| Subspace::span(&self.field, self.dims[v], vecs))
            .collect()
    }

    /// Vectors killed by every arrow.
    pub fn socle(&self) -> GradedSubspace<F> {
        (0..self.dims.len())
            .map(|v| {
                let mut rows = vec![Vec::new(); self.dims[v]];
                for (a, m) in self.actions.iter().enumerate() {
                    if self.arrow_ends[a].0 != v {
                        continue;
                    }
                    for (r, row) in rows.iter_mut().enumerate() {
                        row.extend_from_slice(m.row(r));
                    }
                }
                let width = rows.first().map_or(0, Vec::len);
                let ker = Matrix::from_rows(&self.field, width, rows).left_kernel();
                Subspace::from_matrix(&ker)
            })
            .collect()
    }

    /// `dim M/(M · rad)` per vertex.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical().iter().zip(&self.dims).map(|(r, &d)| d - r.dim()).collect()
    }

    /// Number of minimal generators, `dim M/(M · rad)`.
    pub fn generator_count(&self) -> usize {
        self.top_dims().iter().sum()
    }

    /// Total dimensions of `M, M·rad, M·rad², ...` down to zero, per vertex.
    pub fn radical_series(&self) -> Vec<Vec<usize>> {
        let mut current: GradedSubspace<F> = self
            .dims
            .iter()
            .map(|&d| Subspace::from_matrix(&Matrix::identity(&self.field, d)))
            .collect();
        let mut out = vec![self.dims.clone()];
        while current.iter().any(|s| s.dim() > 0) {
            current = self.image_under_arrows(&current);
            out.push(current.iter().map(Subspace::dim).collect());
        }
        out
    }

    /// The module `upper / lower` for graded subspaces `lower ⊆ upper`, both
    /// closed under the arrow actions.
    pub fn subquotient(
        &self,
        alg: &BasisAlgebra<F>,
        upper: &GradedSubspace<F>,
        lower: &GradedSubspace<F>,
    ) -> Result<RightModule<F>> {
        let f = &self.field;
        let reps: Vec<Subspace<F>> = (0..self.dims.len())
            .map(|v| {
                let vecs = (0..upper[v].dim()).map(|k| lower[v].reduce(upper[v].basis.row(k))).collect();
                Subspace::span(f, self.dims[v], vecs)
            })
            .collect();
        let dims: Vec<usize> = reps.iter().map(Subspace::dim).collect();
        let mut actions = Vec::with_capacity(self.actions.len());
        for (a, m) in self.actions.iter().enumerate() {
            let (s, t) = self.arrow_ends[a];
            let rows = (0..dims[s])
                .map(|k| {
                    let y = lower[t].reduce(&m.apply_row(reps[s].basis.row(k)));
                    if !reps[t].contains(&y) {
                        return Err(Error::BadModule("subspace not closed under the action".into()));
                    }
                    Ok(reps[t].coordinates(&y))
                })
                .collect::<Result<Vec<_>>>()?;
            actions.push(Matrix::from_rows(f, dims[t], rows));
        }
        RightModule::new(alg, dims, actions)
    }
}

/// `P_i = e_i A` with right multiplication; the component at `w` has basis
/// the labels in `e_i A e_w`.
pub fn projective_module<F: Field>(alg: &BasisAlgebra<F>, i: usize) -> Result<RightModule<F>> {
    let q = &alg.quiver;
    let comps: Vec<Vec<usize>> = (0..q.num_vertices()).map(|w| alg.corner(i, w)).collect();
    let dims = comps.iter().map(Vec::len).collect();
    let actions = (0..q.num_arrows())
        .map(|a| {
            let (s, t) = (q.source(a), q.target(a));
            let rows = comps[s]
                .iter()
                .map(|&b| {
                    let y = alg.mul(&alg.unit(b), alg.arrow_element(a));
                    comps[t].iter().map(|&c| y[c].clone()).collect()
                })
                .collect();
            Matrix::from_rows(&alg.field, comps[t].len(), rows)
        })
        .collect();
    RightModule::new(alg, dims, actions)
}

pub fn simple_module<F: Field>(alg: &BasisAlgebra<F>, i: usize) -> Result<RightModule<F>> {
    let q = &alg.quiver;
    let mut dims = vec![0; q.num_vertices()];
    dims[i] = 1;
    let actions = (0..q.num_arrows())
        .map(|a| Matrix::zeros(&alg.field, dims[q.source(a)], dims[q.target(a)]))
        .collect();
    RightModule::new(alg, dims, actions)
}

pub fn direct_sum<F: Field>(alg: &BasisAlgebra<F>, parts: &[RightModule<F>]) -> Result<RightModule<F>> {
    let q = &alg.quiver;
    let f = &alg.field;
    let nv = q.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
    let actions = (0..q.num_arrows())
        .map(|a| {
            let (s, t) = (q.source(a), q.target(a));
            let mut m = Matrix::zeros(f, dims[s], dims[t]);
            let (mut r0, mut c0) = (0, 0);
            for p in parts {
                let block = &p.actions[a];
                for r in 0..block.rows {
                    for c in 0..block.cols {
                        m.set(r0 + r, c0 + c, block.get(r, c).clone());
                    }
                }
                r0 += block.rows;
                c0 += block.cols;
            }
            m
        })
        .collect();
    RightModule::new(alg, dims, actions)
}

/// Per-vertex matrices `H_v` with `A^M_a H_{t(a)} = H_{s(a)} A^N_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleHom<F: Field> {
    pub blocks: Vec<Matrix<F>>,
}

impl<F: Field> ModuleHom<F> {
    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(Matrix::is_invertible)
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols)
    }

    pub fn intertwines(&self, m: &RightModule<F>, n: &RightModule<F>) -> bool {
        m.actions.iter().enumerate().all(|(a, am)| {
            let (s, t) = m.arrow_ends[a];
            am.mul(&self.blocks[t]) == self.blocks[s].mul(&n.actions[a])
        })
    }
}

/// A projective cover `P → M` with `P = ⊕ P_v` over `summands`.
#[derive(Clone, Debug)]
pub struct Cover<F: Field> {
    pub projective: RightModule<F>,
    pub summands: Vec<usize>,
    pub epi: ModuleHom<F>,
}

pub fn projective_cover<F: Field>(alg: &BasisAlgebra<F>, m: &RightModule<F>) -> Result<Cover<F>> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let f = &alg.field;
    let rad = m.radical();
    let mut generators: Vec<(usize, Vec<F::Elem>)> = Vec::new();
    for &v in &alg.vertices {
        let mut span = rad[v].clone();
        for k in 0..m.dims[v] {
            if span.dim() == m.dims[v] {
                break;
            }
            let mut e = vec![f.zero(); m.dims[v]];
            e[k] = f.one();
            if !span.contains(&e) {
                let mut vecs: Vec<Vec<F::Elem>> = (0..span.dim()).map(|r| span.basis.row_vec(r)).collect();
                vecs.push(e.clone());
                span = Subspace::span(f, m.dims[v], vecs);
                generators.push((v, e));
            }
        }
    }
    let summands: Vec<usize> = generators.iter().map(|(v, _)| *v).collect();
    let parts = summands
        .iter()
        .map(|&v| projective_module(alg, v))
        .collect::<Result<Vec<_>>>()?;
    let projective = direct_sum(alg, &parts)?;
    let nv = alg.quiver.num_vertices();
    let blocks = (0..nv)
        .map(|w| {
            let mut rows = Vec::new();
            for (v, g) in &generators {
                for b in alg.corner(*v, w) {
                    rows.push(m.path_matrix(&alg.labels[b]).apply_row(g));
                }
            }
            Matrix::from_rows(f, m.dims[w], rows)
        })
        .collect();
    let epi = ModuleHom { blocks };
    if !epi.is_surjective() {
        return Err(Error::BadModule("cover map is not surjective".into()));
    }
    Ok(Cover {
        projective,
        summands,
        epi,
    })
}

/// Kernel of the projective cover, with its induced action.
pub fn syzygy<F: Field>(alg: &BasisAlgebra<F>, m: &RightModule<F>) -> Result<RightModule<F>> {
    Ok(syzygy_with_cover(alg, m)?.0)
}

pub fn syzygy_with_cover<F: Field>(alg: &BasisAlgebra<F>, m: &RightModule<F>) -> Result<(RightModule<F>, Cover<F>)> {
    let cover = projective_cover(alg, m)?;
    let p = &cover.projective;
    let kernel: GradedSubspace<F> = cover.epi.blocks.iter().map(|b| Subspace::from_matrix(&b.left_kernel())).collect();
    let zero: GradedSubspace<F> = p
        .dims
        .iter()
        .map(|&d| Subspace::span(&alg.field, d, Vec::new()))
        .collect();
    let omega = p.subquotient(alg, &kernel, &zero)?;
    if omega.dim() + m.dim() != p.dim() {
        return Err(Error::BadModule("syzygy dimension violates rank-nullity".into()));
    }
    Ok((omega, cover))
}

/// Basis of `Hom(M, N)`.
pub fn hom_space<F: Field>(m: &RightModule<F>, n: &RightModule<F>) -> Vec<ModuleHom<F>> {
    let f = &m.field;
    let nv = m.dims.len();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
    }
    let nvars = offset[nv];
    let var = |v: usize, r: usize, c: usize| offset[v] + r * n.dims[v] + c;
    let mut eqs = Vec::new();
    for (a, am) in m.actions.iter().enumerate() {
        let (s, t) = m.arrow_ends[a];
        let an = &n.actions[a];
        for r in 0..m.dims[s] {
            for c in 0..n.dims[t] {
                let mut row = vec![f.zero(); nvars];
                for k in 0..m.dims[t] {
                    let x = am.get(r, k);
                    if !f.is_zero(x) {
                        let i = var(t, k, c);
                        row[i] = f.add(&row[i], x);
                    }
                }
                for k in 0..n.dims[s] {
                    let x = an.get(k, c);
                    if !f.is_zero(x) {
                        let i = var(s, r, k);
                        row[i] = f.sub(&row[i], x);
                    }
                }
                eqs.push(row);
            }
        }
    }
    let kernel = if eqs.is_empty() {
        Matrix::identity(f, nvars)
    } else {
        Matrix::from_rows(f, nvars, eqs).right_kernel()
    };
    (0..kernel.rows)
        .map(|k| ModuleHom {
            blocks: (0..nv)
                .map(|v| {
                    let rows = (0..m.dims[v])
                        .map(|r| (0..n.dims[v]).map(|c| kernel.get(k, var(v, r, c)).clone()).collect())
                        .collect();
                    Matrix::from_rows(f, n.dims[v], rows)
                })
                .collect(),
        })
        .collect()
}

fn combine<F: Field>(f: &F, basis: &[ModuleHom<F>], coeffs: &[F::Elem]) -> ModuleHom<F> {
    let mut blocks: Vec<Matrix<F>> = basis[0]
        .blocks
        .iter()
        .map(|b| Matrix::zeros(f, b.rows, b.cols))
        .collect();
    for (h, c) in basis.iter().zip(coeffs) {
        for (acc, b) in blocks.iter_mut().zip(&h.blocks) {
            *acc = acc.add(&b.scale(c));
        }
    }
    ModuleHom { blocks }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    Yes,
    No(String),
    Inconclusive,
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes)
    }

    pub fn label(&self) -> String {
        match self {
            IsoVerdict::Yes => "yes".into(),
            IsoVerdict::No(why) => format!("no ({why})"),
            IsoVerdict::Inconclusive => "inconclusive".into(),
        }
    }
}

/// Compares cheap invariants, then searches `Hom(M, N)` for an invertible
/// element: `ISO_SAMPLES` random combinations, then every combination with
/// coefficients in `{-1, 0, 1, 2}` when `dim Hom ≤ EXHAUSTIVE_HOM_DIM`.
pub fn is_isomorphic<F: Field, R: Rng + ?Sized>(m: &RightModule<F>, n: &RightModule<F>, rng: &mut R) -> IsoVerdict {
    if m.dims != n.dims {
        return IsoVerdict::No(format!("dimension vectors {:?} and {:?}", m.dims, n.dims));
    }
    if m.is_zero() {
        return IsoVerdict::Yes;
    }
    let (rm, rn) = (m.radical_series(), n.radical_series());
    if rm != rn {
        return IsoVerdict::No("radical series differ".into());
    }
    let basis = hom_space(m, n);
    if basis.is_empty() {
        return IsoVerdict::No("Hom is zero".into());
    }
    let f = &m.field;
    for _ in 0..ISO_SAMPLES {
        let coeffs: Vec<F::Elem> = basis.iter().map(|_| f.random(rng)).collect();
        if combine(f, &basis, &coeffs).is_invertible() {
            return IsoVerdict::Yes;
        }
    }
    if basis.len() <= EXHAUSTIVE_HOM_DIM {
        let values: Vec<F::Elem> = [-1, 0, 1, 2].iter().map(|&x| f.from_i64(x)).collect();
        let total = values.len().pow(basis.len() as u32);
        for code in 0..total {
            let mut c = code;
            let coeffs: Vec<F::Elem> = (0..basis.len())
                .map(|_| {
                    let x = values[c % values.len()].clone();
                    c /= values.len();
                    x
                })
                .collect();
            if combine(f, &basis, &coeffs).is_invertible() {
                return IsoVerdict::Yes;
            }
        }
        // A singular lattice does not rule out an isomorphism over a large field.
    }
    IsoVerdict::Inconclusive
}

/// Syzygy iteration from a simple module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicityReport {
    pub vertex: usize,
    /// Total dimensions of `Ω^0(S) .. Ω^N(S)`.
    pub syzygy_dims: Vec<usize>,
    /// Least `n ≤ N` with `Ω^n(S) ≅ S`.
    pub period_found: Option<usize>,
    /// Minimal-generator counts of `Ω^0(S) .. Ω^N(S)`.
    pub top_dims: Vec<usize>,
    /// Vertices of the indecomposable summands of the cover of `Ω^n(S)`, for `n < N`.
    pub covers: Vec<Vec<usize>>,
    /// Verdicts of `Ω^n(S) ≅ S` for `n = 1 .. N`.
    pub verdicts: Vec<IsoVerdict>,
}

pub fn periodicity_report<F: Field>(
    alg: &BasisAlgebra<F>,
    vertex: usize,
    max_n: usize,
    seed: u64,
) -> Result<PeriodicityReport> {
    if max_n < 4 {
        return Err(Error::BadParameter(format!("max_n = {max_n}, need at least 4")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (vertex as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let simple = simple_module(alg, vertex)?;
    let mut current = simple.clone();
    let mut report = PeriodicityReport {
        vertex,
        syzygy_dims: vec![1],
        period_found: None,
        top_dims: vec![1],
        covers: Vec::new(),
        verdicts: Vec::new(),
    };
    for n in 1..=max_n {
        let (next, cover) = syzygy_with_cover(alg, &current)?;
        let mut summands = cover.summands;
        summands.sort_unstable();
        report.covers.push(summands);
        current = next;
        report.syzygy_dims.push(current.dim());
        if current.is_zero() {
            report.top_dims.push(0);
            report.verdicts.push(IsoVerdict::No("projective module reached".into()));
            break;
        }
        report.top_dims.push(current.generator_count());
        let verdict = is_isomorphic(&current, &simple, &mut rng);
        if verdict.is_yes() && report.period_found.is_none() {
            report.period_found = Some(n);
        }
        report.verdicts.push(verdict);
    }
    Ok(report)
}

/// `rad P_i / soc P_i`.
pub fn radical_mod_socle<F: Field>(alg: &BasisAlgebra<F>, i: usize) -> Result<RightModule<F>> {
    let p = projective_module(alg, i)?;
    p.subquotient(alg, &p.radical(), &p.socle())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path_algebra::{quotient_basis, tetrahedral_relations};
    use crate::scalars::Fp;

    fn lambda_alg(lambda: u64) -> BasisAlgebra<Fp> {
        let f = Fp::new(1_000_003).unwrap();
        quotient_basis(&tetrahedral_relations(&f, 2, lambda).unwrap(), 2).unwrap()
    }

    #[test]
    fn projective_and_simple() {
        let alg = lambda_alg(1);
        let p = projective_module(&alg, 0).unwrap();
        assert_eq!(p.dim(), 12);
        assert_eq!(p.generator_count(), 1);
        let s = simple_module(&alg, 3).unwrap();
        assert_eq!(s.dims, vec![0, 0, 0, 1, 0, 0]);
        assert!(syzygy(&alg, &p).unwrap().is_zero());
    }

    #[test]
    fn hom_dimensions() {
        let alg = lambda_alg(1);
        let p1 = projective_module(&alg, 0).unwrap();
        assert_eq!(hom_space(&p1, &p1).len(), alg.corner(0, 0).len());
        let s = |i| simple_module(&alg, i).unwrap();
        assert_eq!(hom_space(&s(1), &s(1)).len(), 1);
        assert_eq!(hom_space(&s(1), &s(2)).len(), 0);
        for h in hom_space(&p1, &p1) {
            assert!(h.intertwines(&p1, &p1));
        }
    }

    #[test]
    fn zero_module_has_no_cover() {
        let alg = lambda_alg(1);
        let mut s = simple_module(&alg, 0).unwrap();
        s.dims = vec![0; 6];
        s.actions = s.actions.iter().map(|m| Matrix::zeros(&m.field, 0, 0)).collect();
        assert!(matches!(projective_cover(&alg, &s), Err(Error::ZeroModule)));
    }

    #[test]
    fn syzygies_of_first_simple() {
        let alg = lambda_alg(1);
        let r = periodicity_report(&alg, 0, 4, 7).unwrap();
        assert_eq!(r.syzygy_dims, vec![1, 11, 13, 11, 1]);
        assert_eq!(r.period_found, Some(4));
        assert_eq!(r.covers, vec![vec![0], vec![4, 5], vec![2, 3], vec![0]]);
    }
}
