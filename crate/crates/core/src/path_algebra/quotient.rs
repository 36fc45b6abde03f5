//! Quotient bases by linear-algebra closure of the ideal span.
//!
//! All paths of length at most `L = length_bound + headroom` are enumerated in
//! length-lexicographic order, so path ids compare like paths. The ideal span
//! is kept as a sparse echelon form whose pivots are leading (largest) ids;
//! the quotient basis is the set of non-pivot paths, which favours short paths.
//!
//! Two modes:
//! * truncated (every relation term has length >= 2): products are cut at
//!   length `L`, which computes the ideal modulo paths longer than `L`. The
//!   certificate is that every path of length `length_bound + 1` reduces to 0.
//! * exact (some term is shorter): only products that fit entirely below `L`
//!   are added, so the span is a genuine subspace of the ideal. The
//!   certificate is that every path of length `length_bound + 1` is a pivot,
//!   i.e. can be rewritten into smaller paths.
//!
//! In both modes the resulting right action of the arrows on the basis is
//! checked to kill every relation and to map `e_s` onto each basis path, which
//! bounds the quotient dimension from below.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::quiver::Path;
use crate::scalars::Field;

use super::{BasisAlgebra, Presentation};

const NONE: u32 = u32::MAX;

/// Evidence recorded while building a quotient basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientStats {
    pub headroom: usize,
    pub max_length: usize,
    pub path_count: usize,
    pub ideal_rank: usize,
    pub exact_mode: bool,
    /// Number of basis paths of each length `0..=length_bound`.
    pub dims_by_degree: Vec<usize>,
}

struct PathSpace {
    num_arrows: usize,
    source: Vec<u32>,
    target: Vec<u32>,
    len: Vec<u16>,
    prefix: Vec<u32>,
    last: Vec<u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    first_of_len: Vec<usize>,
}

impl PathSpace {
    fn new(pres: &Presentation<impl Field>, max_len: usize, max_paths: usize) -> Result<Self> {
        let q = &pres.quiver;
        let (nv, na) = (q.num_vertices(), q.num_arrows());
        let mut s = PathSpace {
            num_arrows: na,
            source: Vec::new(),
            target: Vec::new(),
            len: Vec::new(),
            prefix: Vec::new(),
            last: Vec::new(),
            right: Vec::new(),
            left: Vec::new(),
            first_of_len: vec![0],
        };
        for v in 0..nv {
            s.push(v, v, 0, NONE, NONE);
        }
        let out: Vec<Vec<usize>> = (0..nv).map(|v| q.out_arrows(v)).collect();
        let mut level: Vec<u32> = Vec::new();
        s.first_of_len.push(s.source.len());
        for a in 0..na {
            let id = s.push(q.source(a), q.target(a), 1, q.source(a) as u32, a as u32);
            s.right[q.source(a) * na + a] = id;
            level.push(id);
        }
        for len in 2..=max_len {
            s.first_of_len.push(s.source.len());
            let mut next = Vec::new();
            for &p in &level {
                for &a in &out[s.target[p as usize] as usize] {
                    let id = s.push(s.source[p as usize] as usize, q.target(a), len, p, a as u32);
                    s.right[p as usize * na + a] = id;
                    next.push(id);
                }
                if s.source.len() > max_paths {
                    return Err(Error::Other(format!(
                        "path space exceeds {max_paths} paths at length {len}; lower the headroom"
                    )));
                }
            }
            level = next;
        }
        s.first_of_len.push(s.source.len());
        s.left = vec![NONE; s.source.len() * na];
        for p in 0..s.source.len() {
            for a in 0..na {
                if q.target(a) as u32 != s.source[p] {
                    continue;
                }
                s.left[p * na + a] = if s.len[p] == 0 {
                    (nv + a) as u32
                } else {
                    let inner = s.left[s.prefix[p] as usize * na + a];
                    if inner == NONE {
                        NONE
                    } else {
                        s.right[inner as usize * na + s.last[p] as usize]
                    }
                };
            }
        }
        Ok(s)
    }

    fn push(&mut self, source: usize, target: usize, len: usize, prefix: u32, last: u32) -> u32 {
        let id = self.source.len() as u32;
        self.source.push(source as u32);
        self.target.push(target as u32);
        self.len.push(len as u16);
        self.prefix.push(prefix);
        self.last.push(last);
        self.right.extend(std::iter::repeat(NONE).take(self.num_arrows));
        id
    }

    fn count(&self) -> usize {
        self.source.len()
    }

    fn id_of(&self, p: &Path) -> Option<u32> {
        let mut id = p.source as u32;
        for &a in &p.arrows {
            id = self.right[id as usize * self.num_arrows + a];
            if id == NONE {
                return None;
            }
        }
        Some(id)
    }

    fn path(&self, id: u32) -> Path {
        let mut arrows = Vec::with_capacity(self.len[id as usize] as usize);
        let mut cur = id;
        while self.len[cur as usize] > 0 {
            arrows.push(self.last[cur as usize] as usize);
            cur = self.prefix[cur as usize];
        }
        arrows.reverse();
        Path {
            source: self.source[id as usize] as usize,
            target: self.target[id as usize] as usize,
            arrows,
        }
    }

    fn ids_of_len(&self, len: usize) -> std::ops::Range<usize> {
        if len + 1 >= self.first_of_len.len() {
            return self.count()..self.count();
        }
        self.first_of_len[len]..self.first_of_len[len + 1]
    }
}

struct Echelon<F: Field> {
    field: F,
    rows: Vec<Vec<(u32, F::Elem)>>,
    pivot: Vec<u32>,
}

impl<F: Field> Echelon<F> {
    /// Fully reduces `work`; the result is in decreasing id order with no pivot ids.
    fn reduce(&self, mut work: BTreeMap<u32, F::Elem>) -> Vec<(u32, F::Elem)> {
        let f = &self.field;
        let mut out = Vec::new();
        while let Some((id, c)) = work.pop_last() {
            let r = self.pivot[id as usize];
            if r == NONE {
                out.push((id, c));
                continue;
            }
            for (j, d) in &self.rows[r as usize][1..] {
                let delta = f.neg(&f.mul(&c, d));
                match work.entry(*j) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let s = f.add(o.get(), &delta);
                        if f.is_zero(&s) {
                            o.remove();
                        } else {
                            *o.get_mut() = s;
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduces and inserts; returns the new row index if the vector was not
    /// already in the span.
    fn insert(&mut self, work: BTreeMap<u32, F::Elem>) -> Option<u32> {
        let reduced = self.reduce(work);
        let lead = reduced.first()?;
        let inv = self.field.inv(&lead.1).expect("nonzero leading coefficient");
        let row: Vec<(u32, F::Elem)> = reduced.iter().map(|(j, c)| (*j, self.field.mul(c, &inv))).collect();
        let idx = self.rows.len() as u32;
        self.pivot[row[0].0 as usize] = idx;
        self.rows.push(row);
        Some(idx)
    }
}

fn collect<F: Field>(field: &F, terms: impl IntoIterator<Item = (u32, F::Elem)>) -> BTreeMap<u32, F::Elem> {
    let mut work = BTreeMap::new();
    for (id, c) in terms {
        let e = work.entry(id).or_insert_with(|| field.zero());
        *e = field.add(e, &c);
    }
    work.retain(|_, c| !field.is_zero(c));
    work
}

const MAX_PATHS: usize = 4_000_000;

/// The quotient algebra of `pres`, built from the ideal span in paths of
/// length at most `length_bound + headroom`.
pub fn quotient_basis<F: Field>(pres: &Presentation<F>, headroom: usize) -> Result<BasisAlgebra<F>> {
    quotient_basis_with_stats(pres, headroom).map(|(alg, _)| alg)
}

pub fn quotient_basis_with_stats<F: Field>(
    pres: &Presentation<F>,
    headroom: usize,
) -> Result<(BasisAlgebra<F>, QuotientStats)> {
    if headroom == 0 {
        return Err(Error::BadParameter("headroom must be at least 1".into()));
    }
    let field = &pres.field;
    let q = &pres.quiver;
    let bound = pres.length_bound;
    let max_len = bound + headroom;
    let exact = !pres.is_admissible_shape();
    let space = PathSpace::new(pres, max_len, MAX_PATHS)?;
    let na = q.num_arrows();
    let mut ech = Echelon {
        field: field.clone(),
        rows: Vec::new(),
        pivot: vec![NONE; space.count()],
    };
    let not_certified = |detail: String| Error::NotCertified { headroom, detail };

    let mut queue = VecDeque::new();
    for r in &pres.relations {
        let mut terms = Vec::new();
        for (p, c) in r.terms() {
            match space.id_of(p) {
                Some(id) => terms.push((id, c.clone())),
                None if exact => {
                    return Err(not_certified(format!(
                        "relation term {} is longer than {max_len}",
                        q.format_path(p)
                    )))
                }
                None => {}
            }
        }
        if let Some(idx) = ech.insert(collect(field, terms)) {
            queue.push_back(idx);
        }
    }

    let out_arrows: Vec<Vec<usize>> = (0..q.num_vertices()).map(|v| q.out_arrows(v)).collect();
    let in_arrows: Vec<Vec<usize>> = (0..q.num_vertices()).map(|v| q.in_arrows(v)).collect();
    while let Some(r) = queue.pop_front() {
        let (s, t) = {
            let lead = ech.rows[r as usize][0].0 as usize;
            (space.source[lead] as usize, space.target[lead] as usize)
        };
        for side in [0u8, 1u8] {
            let (arrows, table) = if side == 0 {
                (&out_arrows[t], &space.right)
            } else {
                (&in_arrows[s], &space.left)
            };
            for &a in arrows {
                let row = &ech.rows[r as usize];
                if exact && table[row[0].0 as usize * na + a] == NONE {
                    continue;
                }
                let terms: Vec<(u32, F::Elem)> = row
                    .iter()
                    .filter_map(|(id, c)| {
                        let n = table[*id as usize * na + a];
                        (n != NONE).then(|| (n, c.clone()))
                    })
                    .collect();
                if let Some(idx) = ech.insert(collect(field, terms)) {
                    queue.push_back(idx);
                }
            }
        }
    }

    for id in space.ids_of_len(bound + 1) {
        let ok = if exact {
            ech.pivot[id] != NONE
        } else {
            ech.reduce(BTreeMap::from([(id as u32, field.one())])).is_empty()
        };
        if !ok {
            let p = q.format_path(&space.path(id as u32));
            return Err(not_certified(if exact {
                format!("path {p} of length {} is not rewritable", bound + 1)
            } else {
                format!("path {p} of length {} is not in the ideal span", bound + 1)
            }));
        }
    }

    let mut basis_ids = Vec::new();
    for id in 0..space.count() {
        if ech.pivot[id] != NONE {
            continue;
        }
        if space.len[id] as usize > bound {
            return Err(not_certified(format!(
                "path {} survives beyond the length bound",
                q.format_path(&space.path(id as u32))
            )));
        }
        basis_ids.push(id as u32);
    }
    for v in 0..q.num_vertices() {
        if ech.pivot[v] != NONE {
            return Err(Error::Other(format!("idempotent e{} lies in the ideal", q.vertex_name(v))));
        }
    }
    let dim = basis_ids.len();
    let mut basis_index = vec![NONE; space.count()];
    for (i, &id) in basis_ids.iter().enumerate() {
        basis_index[id as usize] = i as u32;
    }
    let to_basis = |v: Vec<(u32, F::Elem)>| -> SparseVec<F::Elem> {
        let mut out: SparseVec<F::Elem> = v
            .into_iter()
            .map(|(id, c)| (basis_index[id as usize] as usize, c))
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    };
    let labels: Vec<Path> = basis_ids.iter().map(|&id| space.path(id)).collect();

    // action[b][a] = normal form of b·a
    let mut action: Vec<Vec<SparseVec<F::Elem>>> = vec![vec![Vec::new(); na]; dim];
    for (i, &id) in basis_ids.iter().enumerate() {
        for &a in &out_arrows[space.target[id as usize] as usize] {
            let n = space.right[id as usize * na + a];
            debug_assert!(n != NONE);
            action[i][a] = to_basis(ech.reduce(BTreeMap::from([(n, field.one())])));
        }
    }
    let act_path = |start: SparseVec<F::Elem>, arrows: &[usize]| -> SparseVec<F::Elem> {
        let mut cur = start;
        for &a in arrows {
            let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
            for (b, c) in &cur {
                for (k, d) in &action[*b][a] {
                    let e = acc.entry(*k).or_insert_with(|| field.zero());
                    *e = field.add(e, &field.mul(c, d));
                }
            }
            cur = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
            if cur.is_empty() {
                break;
            }
        }
        cur
    };

    for (i, p) in labels.iter().enumerate() {
        let e = basis_index[p.source] as usize;
        if act_path(vec![(e, field.one())], &p.arrows) != vec![(i, field.one())] {
            return Err(not_certified(format!("basis path {} does not evaluate to itself", q.format_path(p))));
        }
    }
    for (ri, r) in pres.relations.iter().enumerate() {
        let Some((s, _)) = r.endpoints()? else { continue };
        for b in 0..dim {
            if labels[b].target != s {
                continue;
            }
            let mut total: BTreeMap<usize, F::Elem> = BTreeMap::new();
            for (p, c) in r.terms() {
                for (k, d) in act_path(vec![(b, field.one())], &p.arrows) {
                    let e = total.entry(k).or_insert_with(|| field.zero());
                    *e = field.add(e, &field.mul(c, &d));
                }
            }
            if total.values().any(|c| !field.is_zero(c)) {
                return Err(not_certified(format!(
                    "relation {ri} acts nontrivially on basis path {}",
                    q.format_path(&labels[b])
                )));
            }
        }
    }

    let mut products = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            if labels[i].target != labels[j].source {
                continue;
            }
            products[i][j] = act_path(vec![(i, field.one())], &labels[j].arrows);
        }
    }
    let arrow_images = (0..na)
        .map(|a| {
            let mut v = vec![field.zero(); dim];
            let e = basis_index[q.source(a)] as usize;
            for (k, c) in act_path(vec![(e, field.one())], &[a]) {
                v[k] = c;
            }
            v
        })
        .collect();

    let mut dims_by_degree = vec![0; bound + 1];
    for p in &labels {
        dims_by_degree[p.len()] += 1;
    }
    let stats = QuotientStats {
        headroom,
        max_length: max_len,
        path_count: space.count(),
        ideal_rank: ech.rows.len(),
        exact_mode: exact,
        dims_by_degree,
    };
    let alg = BasisAlgebra::from_products(
        field,
        q.clone(),
        (0..q.num_vertices()).collect(),
        labels,
        products,
        Some(arrow_images),
        Some(pres.clone()),
    )?;
    Ok((alg, stats))
}

/// Builds the quotient at `headroom` and `headroom + 1` and reports whether
/// the per-degree dimensions agree.
pub fn stabilization_check<F: Field>(pres: &Presentation<F>, headroom: usize) -> Result<(QuotientStats, QuotientStats, bool)> {
    let (_, a) = quotient_basis_with_stats(pres, headroom)?;
    let (_, b) = quotient_basis_with_stats(pres, headroom + 1)?;
    let same = a.dims_by_degree == b.dims_by_degree;
    Ok((a, b, same))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path_algebra::{tetrahedral_relations, FreeElement};
    use crate::quiver::Quiver;
    use crate::scalars::Fp;

    #[test]
    fn small_tetrahedral_dimensions() {
        let f = Fp::new(1_000_003).unwrap();
        for (m, lambda) in [(2, 1), (2, 0), (3, 1)] {
            let pres = tetrahedral_relations(&f, m, lambda).unwrap();
            let alg = quotient_basis(&pres, 2).unwrap();
            assert_eq!(alg.dim(), 36 * m);
        }
    }

    #[test]
    fn truncated_polynomial() {
        let f = Fp::new(7).unwrap();
        let q = Quiver::new(&["x"], &[("a", "x", "x")]).unwrap();
        let a3 = q.path_by_names(&["a", "a", "a"]).unwrap();
        let pres = Presentation::new(&f, q, vec![FreeElement::from_path(&f, a3)], 0, 2, 2).unwrap();
        let alg = quotient_basis(&pres, 1).unwrap();
        assert_eq!(alg.dim(), 3);
        assert!(alg.associativity_violation().is_none());
    }

    #[test]
    fn exact_mode_idempotent_loop() {
        let f = Fp::new(7).unwrap();
        let q = Quiver::new(&["x"], &[("a", "x", "x")]).unwrap();
        let a = q.path_by_names(&["a"]).unwrap();
        let a2 = q.path_by_names(&["a", "a"]).unwrap();
        let rel = FreeElement::from_terms(&f, [(a2, 1), (a, 6)]);
        let pres = Presentation::new(&f, q, vec![rel], 0, 2, 1).unwrap();
        let (alg, stats) = quotient_basis_with_stats(&pres, 2).unwrap();
        assert!(stats.exact_mode);
        assert_eq!(alg.dim(), 2);
        let x = alg.arrow_element(0).to_vec();
        assert_eq!(alg.mul(&x, &x), x);
    }

    #[test]
    fn uncertified_when_not_nilpotent() {
        let f = Fp::new(7).unwrap();
        let q = Quiver::new(&["x"], &[("a", "x", "x"), ("b", "x", "x")]).unwrap();
        let ab = q.path_by_names(&["a", "b"]).unwrap();
        let pres = Presentation::new(&f, q, vec![FreeElement::from_path(&f, ab)], 0, 2, 3).unwrap();
        assert!(matches!(quotient_basis(&pres, 2), Err(Error::NotCertified { .. })));
    }
}
