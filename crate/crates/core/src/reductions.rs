//! Instance generators from classic hard problems.
//!
//! Each generator maps a source instance to a differ instance whose answer
//! equals the source answer:
//!
//! | generator | source | target |
//! |---|---|---|
//! | [`from_cubic_independent_set`] | independent set of size `k` in a cubic graph | exact differ, (3,4)-affine |
//! | [`from_exact_even_set`] | `|X| = k`, every `|X ∩ S|` even | exact differ, affine |
//! | [`from_odd_set`] | `|X| ≤ k` (or `= k`), every `|X ∩ S|` odd | max (or exact) differ at `n - k` |
//! | [`from_independent_set_2cnf`] | independent set of size `k` | monotone 2-CNF at `d = 2k` |
//!
//! Reference solvers for the source problems live in [`brute`].

use crate::error::{Error, Result};
use crate::model::{AffineEquation, AffineSystem, CnfFormula, DifferQuery, Instance, Literal, Mode, VarId};

/// Simple undirected graph on vertices `0..n`. Edges are stored with the
/// smaller endpoint first, in insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {u}-{v} out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if out.contains(&e) {
                return Err(Error::InvalidGraph(format!("repeated edge {}-{}", e.0, e.1)));
            }
            out.push(e);
        }
        Ok(SimpleGraph { n, edges: out })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph is simple")
    }

    pub fn complete_bipartite_3_3() -> Self {
        let edges = (0..3).flat_map(|u| (3..6).map(move |v| (u, v)));
        Self::new(6, edges).expect("K3,3 is simple")
    }

    /// Triangular prism: two triangles joined by a perfect matching.
    pub fn prism() -> Self {
        Self::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).expect("prism is simple")
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn is_cubic(&self) -> bool {
        self.degrees().iter().all(|&d| d == 3)
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.edges.iter().all(|(u, v)| !(set.contains(u) && set.contains(v)))
    }

    /// Every simple graph on `n` labelled vertices (`2^(n(n-1)/2)` of them).
    pub fn all_on(n: usize) -> impl Iterator<Item = SimpleGraph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let count = 1u64 << pairs.len();
        (0..count).map(move |mask| SimpleGraph {
            n,
            edges: pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect(),
        })
    }
}

/// Universe `0..universe`, a family of subsets, and the size parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    universe: usize,
    family: Vec<Vec<usize>>,
    k: usize,
}

impl SetSystem {
    /// Subsets are sorted and deduplicated.
    pub fn new(universe: usize, family: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        let mut out = Vec::with_capacity(family.len());
        for mut set in family {
            if let Some(&u) = set.iter().find(|&&u| u >= universe) {
                return Err(Error::InvalidParameter(format!("element {u} outside a universe of size {universe}")));
            }
            set.sort_unstable();
            set.dedup();
            out.push(set);
        }
        Ok(SetSystem { universe, family: out, k })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn family(&self) -> &[Vec<usize>] {
        &self.family
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedInstance {
    pub instance: Instance,
    pub query: DifferQuery,
    /// Gadget name of each variable, indexed by variable.
    pub names: Vec<String>,
}

impl GeneratedInstance {
    pub fn var_named(&self, name: &str) -> Option<VarId> {
        self.names.iter().position(|n| n == name).map(VarId)
    }
}

struct Namer {
    names: Vec<String>,
}

impl Namer {
    fn fresh(&mut self, name: String) -> VarId {
        self.names.push(name);
        VarId(self.names.len() - 1)
    }
}

/// Exact differ instance with `d = k(3k+4)`: each vertex gets `x_v` plus
/// `3k` copies chained by equalities, each edge `uv` gets `y_uv` with
/// `x_u ⊕ x_v ⊕ y_uv = 0`.
pub fn from_cubic_independent_set(g: &SimpleGraph, k: usize) -> Result<GeneratedInstance> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if let Some((vertex, &degree)) = g.degrees().iter().enumerate().find(|(_, &d)| d != 3) {
        return Err(Error::NotCubic { vertex, degree });
    }
    let mut namer = Namer { names: Vec::new() };
    let mut equations = Vec::new();
    let mut x = Vec::with_capacity(g.num_vertices());
    for v in 0..g.num_vertices() {
        let head = namer.fresh(format!("x_{v}"));
        x.push(head);
        let mut prev = head;
        for i in 1..=3 * k {
            let copy = namer.fresh(format!("x_{v}^{i}"));
            equations.push(AffineEquation::new([prev, copy], false));
            prev = copy;
        }
    }
    for &(u, v) in g.edges() {
        let y = namer.fresh(format!("y_{u}_{v}"));
        equations.push(AffineEquation::new([x[u], x[v], y], false));
    }
    let sys = AffineSystem::new(namer.names.len(), equations)?;
    debug_assert!(sys.max_arity() <= 3);
    debug_assert!(occurrences(&sys).iter().all(|&c| c <= 4));
    Ok(GeneratedInstance { instance: sys.into(), query: DifferQuery::exact(k * (3 * k + 4)), names: namer.names })
}

fn occurrences(sys: &AffineSystem) -> Vec<usize> {
    let mut occ = vec![0; sys.num_vars()];
    for eq in sys.equations() {
        for v in eq.vars() {
            occ[v.0] += 1;
        }
    }
    occ
}

/// Exact differ instance with `d = k`: one homogeneous equation per set.
pub fn from_exact_even_set(s: &SetSystem) -> Result<GeneratedInstance> {
    let names = (0..s.universe()).map(|u| format!("x_{u}")).collect();
    let equations = s.family().iter().map(|set| AffineEquation::from_indices(set, false)).collect();
    Ok(GeneratedInstance {
        instance: AffineSystem::new(s.universe(), equations)?.into(),
        query: DifferQuery::exact(s.k()),
        names,
    })
}

/// Differ instance at `d = n - k`, exact or max. Odd sets become
/// `⊕ x_u = 1`; each even set `S` gets `y_S` and copies `z_S^1..z_S^k`
/// equal to it, with `⊕ x_u ⊕ y_S = 0`.
pub fn from_odd_set(s: &SetSystem, exact: bool) -> Result<GeneratedInstance> {
    let k = s.k();
    let mut namer = Namer { names: (0..s.universe()).map(|u| format!("x_{u}")).collect() };
    let mut equations = Vec::new();
    for (idx, set) in s.family().iter().enumerate() {
        let xs = set.iter().map(|&u| VarId(u));
        if set.len() % 2 == 1 {
            equations.push(AffineEquation::new(xs, true));
        } else {
            let y = namer.fresh(format!("y_{idx}"));
            for i in 1..=k {
                let z = namer.fresh(format!("z_{idx}^{i}"));
                equations.push(AffineEquation::new([y, z], false));
            }
            equations.push(AffineEquation::new(xs.chain([y]), false));
        }
    }
    let n = namer.names.len();
    if k > n {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds the {n} generated variables")));
    }
    let mode = if exact { Mode::Exact } else { Mode::Max };
    Ok(GeneratedInstance {
        instance: AffineSystem::new(n, equations)?.into(),
        query: DifferQuery { mode, d: n - k },
        names: namer.names,
    })
}

/// Monotone 2-CNF at `d = 2k`: variables `x_v` and `y_v` per vertex,
/// clauses `x_u ∨ x_v` and `y_u ∨ y_v` per edge, `x_u ∨ y_v` for every
/// ordered pair `(u, v)` including `u = v`.
pub fn from_independent_set_2cnf(g: &SimpleGraph, k: usize, mode: Mode) -> Result<GeneratedInstance> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = g.num_vertices();
    let x = |v: usize| Literal::pos(v);
    let y = |v: usize| Literal::pos(n + v);
    let mut clauses: Vec<[Literal; 2]> = Vec::new();
    for &(u, v) in g.edges() {
        clauses.push([x(u), x(v)]);
        clauses.push([y(u), y(v)]);
    }
    for u in 0..n {
        for v in 0..n {
            let c = [x(u), y(v)];
            if !clauses.contains(&c) {
                clauses.push(c);
            }
        }
    }
    let names = (0..n).map(|v| format!("x_{v}")).chain((0..n).map(|v| format!("y_{v}"))).collect();
    Ok(GeneratedInstance {
        instance: CnfFormula::new(2 * n, clauses)?.into(),
        query: DifferQuery { mode, d: 2 * k },
        names,
    })
}

/// Exponential reference solvers for the source problems.
pub mod brute {
    use super::{SetSystem, SimpleGraph};

    /// Sizes up to this are accepted; larger inputs panic.
    pub const SOURCE_CAP: usize = 16;

    fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
        assert!(n <= SOURCE_CAP, "source instance too large for brute force");
        (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
    }

    /// Whether `g` has an independent set of size exactly `k` (equivalently,
    /// at least `k`).
    pub fn has_independent_set(g: &SimpleGraph, k: usize) -> bool {
        subsets(g.num_vertices()).any(|s| s.len() == k && g.is_independent(&s))
    }

    fn all_parities(s: &SetSystem, x: &[usize], odd: bool) -> bool {
        s.family().iter().all(|set| (set.iter().filter(|u| x.contains(u)).count() % 2 == 1) == odd)
    }

    /// `|X| = k` with every `|X ∩ S|` even.
    pub fn exact_even_set(s: &SetSystem) -> bool {
        subsets(s.universe()).any(|x| x.len() == s.k() && all_parities(s, &x, false))
    }

    /// `|X| ≤ k` (or `= k` when `exact`) with every `|X ∩ S|` odd.
    pub fn odd_set(s: &SetSystem, exact: bool) -> bool {
        subsets(s.universe()).any(|x| {
            let size_ok = if exact { x.len() == s.k() } else { x.len() <= s.k() };
            size_ok && all_parities(s, &x, true)
        })
    }
}
