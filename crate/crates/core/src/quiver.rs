//! Quivers, paths, and the tetrahedral triangulation quiver.
//!
//! Vertices and arrows are stored by index; names are kept for parsing and
//! display. Paths are written left to right: `ab` means "first `a`, then `b`",
//! so `t(a) = s(b)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_lookup: HashMap<String, usize>,
    arrow_lookup: HashMap<String, usize>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(name, source, target)` triples.
    pub fn new<V: AsRef<str>>(vertices: &[V], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut vertex_lookup = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::BadQuiver(format!("invalid vertex name `{v}`")));
            }
            if vertex_lookup.insert(v.clone(), i).is_some() {
                return Err(Error::BadQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let mut q = Quiver {
            vertices,
            arrows: Vec::new(),
            vertex_lookup,
            arrow_lookup: HashMap::new(),
        };
        for (name, s, t) in arrows {
            q.add_arrow(name, s, t)?;
        }
        Ok(q)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<usize> {
        if !is_identifier(name) || name == "l" || name.starts_with('e') && name[1..].parse::<u32>().is_ok() {
            return Err(Error::BadQuiver(format!("invalid arrow name `{name}`")));
        }
        if self.arrow_lookup.contains_key(name) {
            return Err(Error::BadQuiver(format!("duplicate arrow `{name}`")));
        }
        let source = self.vertex_index(source)?;
        let target = self.vertex_index(target)?;
        let id = self.arrows.len();
        self.arrows.push(Arrow {
            name: name.to_string(),
            source,
            target,
        });
        self.arrow_lookup.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn source(&self, a: usize) -> usize {
        self.arrows[a].source
    }

    pub fn target(&self, a: usize) -> usize {
        self.arrows[a].target
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertex_lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrow_lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    /// Arrows starting at `v`, in id order.
    pub fn out_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].source == v).collect()
    }

    /// Arrows ending at `v`, in id order.
    pub fn in_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].target == v).collect()
    }

    pub fn trivial_path(&self, v: usize) -> Path {
        Path::trivial(v)
    }

    pub fn arrow_path(&self, a: usize) -> Path {
        Path {
            source: self.arrows[a].source,
            target: self.arrows[a].target,
            arrows: vec![a],
        }
    }

    /// Path through the given arrow ids; errors if two consecutive arrows do not compose.
    pub fn path(&self, arrows: &[usize]) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::Other("empty arrow list; use trivial_path".into()));
        };
        for w in arrows.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(Error::NotComposable(
                    self.arrows[w[0]].name.clone(),
                    self.arrows[w[1]].name.clone(),
                ));
            }
        }
        Ok(Path {
            source: self.arrows[first].source,
            target: self.arrows[*arrows.last().unwrap()].target,
            arrows: arrows.to_vec(),
        })
    }

    /// Path from arrow names.
    pub fn path_by_names(&self, names: &[&str]) -> Result<Path> {
        let ids = names
            .iter()
            .map(|n| self.arrow_index(n))
            .collect::<Result<Vec<_>>>()?;
        self.path(&ids)
    }

    /// `p` followed by `q`, or `None` if `t(p) != s(q)`.
    pub fn compose(&self, p: &Path, q: &Path) -> Option<Path> {
        if p.target != q.source {
            return None;
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        Some(Path {
            source: p.source,
            target: q.target,
            arrows,
        })
    }

    /// `name1*name2*...`, or `e<vertex>` for a trivial path.
    pub fn format_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e{}", self.vertices[p.source]);
        }
        p.arrows
            .iter()
            .map(|&a| self.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphanumeric() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A path in a quiver. Trivial paths have no arrows and `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_cycle(&self) -> bool {
        self.source == self.target
    }
}

/// Length first, then arrow ids lexicographically; trivial paths by vertex.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All paths with the given endpoint constraints and length `<= max_len`,
/// in length-lexicographic order.
pub fn enumerate_paths(q: &Quiver, from: Option<usize>, to: Option<usize>, max_len: usize) -> Vec<Path> {
    let mut out = Vec::new();
    let mut level: Vec<Path> = (0..q.num_vertices())
        .filter(|&v| from.map_or(true, |f| f == v))
        .map(Path::trivial)
        .collect();
    let outgoing: Vec<Vec<usize>> = (0..q.num_vertices()).map(|v| q.out_arrows(v)).collect();
    for len in 0..=max_len {
        out.extend(level.iter().filter(|p| to.map_or(true, |t| t == p.target)).cloned());
        if len == max_len {
            break;
        }
        let mut next = Vec::new();
        if len == 0 {
            // Lexicographic order at length 1 is arrow-id order, independent of source.
            for a in 0..q.num_arrows() {
                if from.map_or(true, |f| f == q.source(a)) {
                    next.push(q.arrow_path(a));
                }
            }
        } else {
            for p in &level {
                for &a in &outgoing[p.target] {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path {
                        source: p.source,
                        target: q.target(a),
                        arrows,
                    });
                }
            }
        }
        level = next;
    }
    out
}

/// A 2-regular quiver with the permutation `f` (shaded triangles), the
/// involution `bar` (the other arrow with the same source) and `g = bar ∘ f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationQuiver {
    pub quiver: Quiver,
    pub f: Vec<usize>,
    pub bar: Vec<usize>,
    pub g: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TriangulationReport {
    pub failures: Vec<String>,
}

impl TriangulationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl TriangulationQuiver {
    /// Orbits of a permutation, each starting at its smallest arrow id.
    pub fn orbits(perm: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; perm.len()];
        let mut orbits = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                orbit.push(a);
                a = perm[a];
            }
            orbits.push(orbit);
        }
        orbits
    }

    pub fn f_orbits(&self) -> Vec<Vec<usize>> {
        Self::orbits(&self.f)
    }

    pub fn g_orbits(&self) -> Vec<Vec<usize>> {
        Self::orbits(&self.g)
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

/// Checks every triangulation-quiver condition and lists the violated ones.
pub fn validate_triangulation(tq: &TriangulationQuiver) -> TriangulationReport {
    let q = &tq.quiver;
    let n = q.num_arrows();
    let mut failures = Vec::new();
    if tq.f.len() != n || tq.bar.len() != n || tq.g.len() != n {
        failures.push("permutation length differs from arrow count".to_string());
        return TriangulationReport { failures };
    }
    for v in 0..q.num_vertices() {
        let (o, i) = (q.out_arrows(v).len(), q.in_arrows(v).len());
        if o != 2 || i != 2 {
            failures.push(format!(
                "2-regularity: vertex {} has {o} outgoing and {i} incoming arrows",
                q.vertex_name(v)
            ));
        }
    }
    if !is_permutation(&tq.f) {
        failures.push("f is not a permutation".to_string());
    } else {
        for a in 0..n {
            if tq.f[tq.f[tq.f[a]]] != a {
                failures.push(format!("f^3 != id at {}", q.arrow(a).name));
            }
            if q.target(a) != q.source(tq.f[a]) {
                failures.push(format!("f({}) does not start where {} ends", q.arrow(a).name, q.arrow(a).name));
            }
        }
    }
    for a in 0..n {
        let b = tq.bar[a];
        if b >= n || tq.bar[b] != a || b == a {
            failures.push(format!("bar is not a fixed-point-free involution at {}", q.arrow(a).name));
        } else if q.source(a) != q.source(b) {
            failures.push(format!("bar({}) has a different source", q.arrow(a).name));
        }
    }
    if tq.f.iter().chain(&tq.bar).all(|&x| x < n) {
        for a in 0..n {
            if tq.g[a] != tq.bar[tq.f[a]] {
                failures.push(format!("g != bar∘f at {}", q.arrow(a).name));
            }
        }
    }
    TriangulationReport { failures }
}

/// ASCII arrow names of the tetrahedral quiver, in arrow-id order.
pub const TETRA_ARROWS: [&str; 12] = [
    "alpha", "beta", "gamma", "delta", "epsilon", "eta", "mu", "nu", "xi", "rho", "sigma", "omega",
];

/// The triangulation quiver of the tetrahedron: vertices `1..6`, twelve arrows.
pub fn tetrahedral_quiver() -> TriangulationQuiver {
    let arrows = [
        ("alpha", "3", "1"),
        ("beta", "4", "2"),
        ("gamma", "4", "1"),
        ("delta", "1", "5"),
        ("epsilon", "2", "5"),
        ("eta", "5", "4"),
        ("mu", "6", "3"),
        ("nu", "1", "6"),
        ("xi", "5", "3"),
        ("rho", "2", "6"),
        ("sigma", "3", "2"),
        ("omega", "6", "4"),
    ];
    let quiver = Quiver::new(&["1", "2", "3", "4", "5", "6"], &arrows).expect("fixture is valid");
    let id = |n: &str| quiver.arrow_index(n).unwrap();
    let f_pairs = [
        ("delta", "eta"),
        ("eta", "gamma"),
        ("gamma", "delta"),
        ("rho", "omega"),
        ("omega", "beta"),
        ("beta", "rho"),
        ("epsilon", "xi"),
        ("xi", "sigma"),
        ("sigma", "epsilon"),
        ("nu", "mu"),
        ("mu", "alpha"),
        ("alpha", "nu"),
    ];
    let mut f = vec![0; 12];
    for (a, b) in f_pairs {
        f[id(a)] = id(b);
    }
    let mut bar = vec![0; 12];
    for v in 0..6 {
        let out = quiver.out_arrows(v);
        bar[out[0]] = out[1];
        bar[out[1]] = out[0];
    }
    let g = (0..12).map(|a| bar[f[a]]).collect();
    TriangulationQuiver { quiver, f, bar, g }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices.join(" "))?;
        for a in &self.arrows {
            writeln!(f, "arrow {}: {} -> {}", a.name, self.vertices[a.source], self.vertices[a.target])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(q: &Quiver, orbit: &[usize]) -> Vec<String> {
        orbit.iter().map(|&a| q.arrow(a).name.clone()).collect()
    }

    #[test]
    fn tetrahedral_fixture() {
        let tq = tetrahedral_quiver();
        assert_eq!(tq.quiver.num_vertices(), 6);
        assert_eq!(tq.quiver.num_arrows(), 12);
        assert!(validate_triangulation(&tq).passed());
        let delta = tq.quiver.arrow_index("delta").unwrap();
        let orbit = tq.f_orbits().into_iter().find(|o| o.contains(&delta)).unwrap();
        let start = orbit.iter().position(|&a| a == delta).unwrap();
        let rotated: Vec<usize> = (0..3).map(|k| orbit[(start + k) % 3]).collect();
        assert_eq!(names(&tq.quiver, &rotated), ["delta", "eta", "gamma"]);
        let g_orbits = tq.g_orbits();
        assert_eq!(g_orbits.len(), 4);
        assert!(g_orbits.iter().all(|o| o.len() == 3));
        for a in 0..12 {
            assert_eq!(tq.g[tq.g[tq.g[a]]], a);
        }
    }

    #[test]
    fn g_orbits_are_white_triangles() {
        let tq = tetrahedral_quiver();
        let mut got: Vec<Vec<String>> = tq.g_orbits().iter().map(|o| names(&tq.quiver, o)).collect();
        got.sort();
        let mut want: Vec<Vec<String>> = [
            ["alpha", "delta", "xi"],
            ["beta", "epsilon", "eta"],
            ["gamma", "nu", "omega"],
            ["mu", "sigma", "rho"],
        ]
        .iter()
        .map(|o| o.iter().map(|s| s.to_string()).collect())
        .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn swapped_orbit_breaks_g() {
        let mut tq = tetrahedral_quiver();
        for a in tq.g_orbits()[0].clone() {
            tq.g[a] = tq.f[a];
        }
        let report = validate_triangulation(&tq);
        assert!(report.failures.iter().any(|f| f.contains("g != bar∘f")), "{report:?}");
    }

    #[test]
    fn three_valent_vertex_fails() {
        let mut tq = tetrahedral_quiver();
        let extra = tq.quiver.add_arrow("extra", "1", "2").unwrap();
        tq.f.push(extra);
        tq.bar.push(extra);
        tq.g.push(extra);
        let report = validate_triangulation(&tq);
        assert!(report.failures.iter().any(|f| f.starts_with("2-regularity")));
    }

    #[test]
    fn path_enumeration_counts() {
        let tq = tetrahedral_quiver();
        let q = &tq.quiver;
        let v1 = q.vertex_index("1").unwrap();
        let v2 = q.vertex_index("2").unwrap();
        assert_eq!(enumerate_paths(q, Some(v1), None, 6).len(), 127);
        assert_eq!(enumerate_paths(q, None, None, 0).len(), 6);
        let len3: Vec<String> = enumerate_paths(q, Some(v1), Some(v2), 3)
            .into_iter()
            .filter(|p| p.len() == 3)
            .map(|p| q.format_path(&p))
            .collect();
        assert_eq!(len3, ["delta*eta*beta", "delta*xi*sigma", "nu*mu*sigma", "nu*omega*beta"]);
    }

    #[test]
    fn enumeration_is_sorted_and_composable() {
        let tq = tetrahedral_quiver();
        let q = &tq.quiver;
        let all = enumerate_paths(q, None, None, 5);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for p in &all {
            if !p.is_empty() {
                assert_eq!(q.path(&p.arrows).unwrap(), *p);
            }
        }
        for v in 0..6 {
            for k in 0..=5 {
                let n = all.iter().filter(|p| p.source == v && p.len() == k).count();
                assert_eq!(n, 1 << k);
            }
        }
    }

    #[test]
    fn non_composable_rejected() {
        let tq = tetrahedral_quiver();
        assert!(matches!(
            tq.quiver.path_by_names(&["delta", "alpha"]),
            Err(Error::NotComposable(_, _))
        ));
    }
}
