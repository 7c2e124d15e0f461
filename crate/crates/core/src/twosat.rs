//! Max/Exact differ on (2,2)-CNF formulas.
//!
//! Every variable `x` contributes two vertices `x[0]` and `x[1]` joined by a
//! matching edge; a clause joins the vertices of its two literals (`x` maps
//! to `x[1]`, `¬x` to `x[0]`). Because each variable sits in at most two
//! clauses, each connected component is a path or a cycle (the spine) with
//! some pendant matching edges hanging off it.
//!
//! Walking the spine and making every other literal true gives two
//! assignments that differ on every variable of the component, except on
//! odd cycles, where one pendant-carrying vertex has to be pinned in both.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::{Assignment, CnfFormula, DifferAnswer, DifferQuery, Instance, Literal, Mode, VarId};
use crate::subset_sum::{reachable_sums, subset_sum};

/// True iff every clause has at most two literals and every variable
/// occurs in at most two clauses.
pub fn check_22cnf(phi: &CnfFormula) -> bool {
    phi.clauses().iter().all(|c| c.len() <= 2) && phi.occurrences().iter().all(|&k| k <= 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    /// Index of the clause in the formula.
    Clause(usize),
    Matching(VarId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphEdge {
    pub a: usize,
    pub b: usize,
    pub kind: EdgeKind,
}

impl GraphEdge {
    fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

/// Literal-vertex multigraph. Vertex `2x + p` is `x[p]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableGraph {
    n: usize,
    edges: Vec<GraphEdge>,
    incident: Vec<Vec<usize>>,
}

impl VariableGraph {
    pub fn vertex(var: VarId, polarity: bool) -> usize {
        2 * var.0 + polarity as usize
    }

    pub fn vertex_of(lit: Literal) -> usize {
        Self::vertex(lit.var, lit.positive)
    }

    pub fn var_of(vertex: usize) -> VarId {
        VarId(vertex / 2)
    }

    pub fn partner(vertex: usize) -> usize {
        vertex ^ 1
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn num_vertices(&self) -> usize {
        2 * self.n
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn clause_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| matches!(e.kind, EdgeKind::Clause(_))).count()
    }

    pub fn matching_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| matches!(e.kind, EdgeKind::Matching(_))).count()
    }

    /// Edge ids incident to `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn clause_degree(&self, v: usize) -> usize {
        self.incident[v].iter().filter(|&&e| matches!(self.edges[e].kind, EdgeKind::Clause(_))).count()
    }

    /// A degree-one vertex whose matching partner carries two clause edges.
    pub fn is_pendant(&self, v: usize) -> bool {
        self.clause_degree(v) == 0 && self.clause_degree(Self::partner(v)) == 2
    }
}

pub fn build_variable_graph(phi: &CnfFormula) -> Result<VariableGraph> {
    if !check_22cnf(phi) {
        return Err(Error::NotTwoTwoCnf(
            "clauses must have at most two literals and variables at most two occurrences".into(),
        ));
    }
    let n = phi.num_vars();
    let mut edges = Vec::with_capacity(n + phi.num_clauses());
    for (i, clause) in phi.clauses().iter().enumerate() {
        match clause.literals() {
            [a, b] => edges.push(GraphEdge {
                a: VariableGraph::vertex_of(*a),
                b: VariableGraph::vertex_of(*b),
                kind: EdgeKind::Clause(i),
            }),
            [a] => return Err(Error::UnitClause { var: a.var.0 }),
            _ => return Err(Error::NotTwoTwoCnf(format!("clause {i} is empty"))),
        }
    }
    for x in 0..n {
        edges.push(GraphEdge { a: 2 * x, b: 2 * x + 1, kind: EdgeKind::Matching(VarId(x)) });
    }
    let mut incident = vec![Vec::new(); 2 * n];
    for (id, e) in edges.iter().enumerate() {
        incident[e.a].push(id);
        incident[e.b].push(id);
    }
    Ok(VariableGraph { n, edges, incident })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentKind {
    PathLike,
    EvenCycleLikeWithPendants,
    PureEvenCycle,
    OddCycleLike,
}

impl ComponentKind {
    pub fn name(self) -> &'static str {
        match self {
            ComponentKind::PathLike => "path-like",
            ComponentKind::EvenCycleLikeWithPendants => "even-cycle-like-with-pendants",
            ComponentKind::PureEvenCycle => "pure-even-cycle",
            ComponentKind::OddCycleLike => "odd-cycle-like",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub kind: ComponentKind,
    /// Sorted.
    pub vars: Vec<VarId>,
    /// Pendant vertices, sorted.
    pub pendants: Vec<usize>,
    /// Spine vertices in walk order. Paths start at the smaller terminal.
    /// Cycles start at the smallest pendant-carrying vertex (or the
    /// smallest vertex if there is none) and step to its smaller neighbour.
    pub spine: Vec<usize>,
}

impl ComponentReport {
    /// Largest number of this component's variables two satisfying
    /// assignments can differ on.
    pub fn max_differ(&self) -> usize {
        match self.kind {
            ComponentKind::OddCycleLike => self.vars.len() - 1,
            _ => self.vars.len(),
        }
    }
}

/// One report per connected component, ordered by smallest variable.
pub fn classify_components(g: &VariableGraph) -> Result<Vec<ComponentReport>> {
    let nv = g.num_vertices();
    let mut seen = vec![false; nv];
    let mut reports = Vec::new();
    for start in 0..nv {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &e in g.incident(v) {
                let w = g.edges[e].other(v);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        reports.push(classify_one(g, &comp)?);
    }
    Ok(reports)
}

fn classify_one(g: &VariableGraph, comp: &[usize]) -> Result<ComponentReport> {
    let pendants: Vec<usize> = comp.iter().copied().filter(|&v| g.is_pendant(v)).collect();
    let on_spine = |v: usize| !g.is_pendant(v);
    let spine_edges =
        |v: usize| -> Vec<usize> { g.incident(v).iter().copied().filter(|&e| on_spine(g.edges[e].other(v))).collect() };

    let spine_vertices: Vec<usize> = comp.iter().copied().filter(|&v| on_spine(v)).collect();
    let mut edge_count = 0usize;
    for &v in &spine_vertices {
        let deg = spine_edges(v).len();
        if deg > 2 {
            return Err(Error::Structure(format!("vertex {v} has spine degree {deg}")));
        }
        edge_count += deg;
    }
    let edge_count = edge_count / 2;
    let vars: Vec<VarId> =
        comp.iter().map(|&v| VariableGraph::var_of(v)).collect::<BTreeSet<_>>().into_iter().collect();

    let walk_from = |first: usize, first_edge: Option<usize>| -> Vec<usize> {
        let mut order = vec![first];
        let mut prev_edge = None;
        let mut at = first;
        let mut next_edge = first_edge;
        loop {
            let e = match next_edge.take() {
                Some(e) => e,
                None => match spine_edges(at).into_iter().find(|&e| Some(e) != prev_edge) {
                    Some(e) => e,
                    None => break,
                },
            };
            let w = g.edges[e].other(at);
            if w == first {
                break;
            }
            order.push(w);
            prev_edge = Some(e);
            at = w;
        }
        order
    };

    let (kind, spine) = if edge_count + 1 == spine_vertices.len() {
        let start = *spine_vertices
            .iter()
            .find(|&&v| spine_edges(v).len() <= 1)
            .ok_or_else(|| Error::Structure("path without a terminal".into()))?;
        (ComponentKind::PathLike, walk_from(start, None))
    } else if edge_count == spine_vertices.len() {
        let carrier = pendants.first().map(|&p| VariableGraph::partner(p));
        let start = carrier.unwrap_or(spine_vertices[0]);
        let first_edge = spine_edges(start)
            .into_iter()
            .min_by_key(|&e| g.edges[e].other(start))
            .ok_or_else(|| Error::Structure("isolated spine vertex".into()))?;
        let order = walk_from(start, Some(first_edge));
        let kind = match (edge_count % 2 == 1, pendants.is_empty()) {
            (true, true) => return Err(Error::Structure("odd cycle without pendants".into())),
            (true, false) => ComponentKind::OddCycleLike,
            (false, false) => ComponentKind::EvenCycleLikeWithPendants,
            (false, true) => ComponentKind::PureEvenCycle,
        };
        (kind, order)
    } else {
        return Err(Error::Structure(format!(
            "{} spine vertices with {edge_count} edges is neither a path nor a cycle",
            spine_vertices.len()
        )));
    };
    if spine.len() != spine_vertices.len() {
        return Err(Error::Structure("spine is disconnected".into()));
    }
    Ok(ComponentReport { kind, vars, pendants, spine })
}

/// Result of unit propagation: the remaining clauses (over the same `n`
/// variables) and the values forced along the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Propagated {
    pub formula: CnfFormula,
    pub fixed: Vec<Option<bool>>,
}

/// Propagates unit clauses to a fixpoint. `None` on conflict (including an
/// empty clause in the input).
pub fn unit_propagate(phi: &CnfFormula) -> Option<Propagated> {
    let n = phi.num_vars();
    let mut fixed: Vec<Option<bool>> = vec![None; n];
    let mut clauses: Vec<Vec<Literal>> = phi.clauses().iter().map(|c| c.literals().to_vec()).collect();
    loop {
        let mut changed = false;
        let mut next = Vec::with_capacity(clauses.len());
        for clause in clauses {
            if clause.iter().any(|l| fixed[l.var.0] == Some(l.positive)) {
                continue;
            }
            let open: Vec<Literal> = clause.into_iter().filter(|l| fixed[l.var.0].is_none()).collect();
            match open.as_slice() {
                [] => return None,
                [unit] => {
                    fixed[unit.var.0] = Some(unit.positive);
                    changed = true;
                }
                _ => next.push(open),
            }
        }
        clauses = next;
        if !changed {
            break;
        }
    }
    let formula = CnfFormula::new(n, clauses).expect("variables stay in range");
    Some(Propagated { formula, fixed })
}

/// Per-variable literal requirements for one assignment of the pair.
struct PairBuilder {
    first: Vec<Option<bool>>,
    second: Vec<Option<bool>>,
}

impl PairBuilder {
    fn require(side: &mut [Option<bool>], vertex: usize) {
        let var = VariableGraph::var_of(vertex).0;
        let value = vertex & 1 == 1;
        debug_assert!(side[var].is_none_or(|b| b == value), "conflicting literal requirements");
        side[var] = Some(value);
    }

    /// Alternates along `order[..cut]` (first assignment takes even
    /// positions, second takes odd ones). The rest is shared: both make the
    /// literals of parity `cut % 2` true, so the clause edge at the cut is
    /// satisfied by `order[cut]` on both sides.
    fn truncated_alternation(&mut self, order: &[usize], cut: usize) {
        let shared_parity = cut % 2;
        for (i, &v) in order.iter().enumerate() {
            if i < cut {
                if i % 2 == 0 {
                    Self::require(&mut self.first, v);
                } else {
                    Self::require(&mut self.second, v);
                }
            } else if i % 2 == shared_parity {
                Self::require(&mut self.first, v);
                Self::require(&mut self.second, v);
            }
        }
    }

    fn pin(&mut self, vertex: usize) {
        Self::require(&mut self.first, vertex);
        Self::require(&mut self.second, vertex);
    }

    /// Variables set on one side only take the opposite value on the other;
    /// variables set on neither side are 0 on both.
    fn finish(self) -> (Assignment, Assignment) {
        let (mut a, mut b) = (Vec::with_capacity(self.first.len()), Vec::with_capacity(self.first.len()));
        for (x, y) in self.first.into_iter().zip(self.second) {
            let (p, q) = match (x, y) {
                (Some(p), Some(q)) => (p, q),
                (Some(p), None) => (p, !p),
                (None, Some(q)) => (!q, q),
                (None, None) => (false, false),
            };
            a.push(p);
            b.push(q);
        }
        (Assignment::from_bits(a), Assignment::from_bits(b))
    }
}

/// Number of spine vertices covering the first `mu` variables of `order`,
/// always ending on a clause-edge boundary.
fn cut_after_vars(order: &[usize], mu: usize) -> usize {
    let mut seen = 0;
    let mut i = 0;
    while i < order.len() && seen < mu {
        let var = VariableGraph::var_of(order[i]);
        i += 1;
        if i < order.len() && VariableGraph::var_of(order[i]) == var {
            i += 1;
        }
        seen += 1;
    }
    debug_assert_eq!(seen, mu, "component has fewer than {mu} variables");
    i
}

/// Adds to `pair` requirements making exactly `mu` of the component's
/// variables differ. `mu` must be achievable for the component's kind.
fn realize(report: &ComponentReport, mu: usize, pair: &mut PairBuilder) {
    let full = report.vars.len();
    match report.kind {
        ComponentKind::PathLike => {
            let cut = cut_after_vars(&report.spine, mu);
            pair.truncated_alternation(&report.spine, cut);
        }
        ComponentKind::PureEvenCycle => {
            debug_assert!(mu == 0 || mu == full);
            let cut = if mu == 0 { 0 } else { report.spine.len() };
            pair.truncated_alternation(&report.spine, cut);
        }
        ComponentKind::EvenCycleLikeWithPendants if mu == full => {
            pair.truncated_alternation(&report.spine, report.spine.len());
        }
        ComponentKind::EvenCycleLikeWithPendants | ComponentKind::OddCycleLike => {
            // spine[0] carries a pendant: pinning it satisfies both of its
            // clauses, leaving a path.
            pair.pin(report.spine[0]);
            let rest = &report.spine[1..];
            let cut = cut_after_vars(rest, mu);
            pair.truncated_alternation(rest, cut);
        }
    }
}

struct Prepared {
    fixed: Vec<Option<bool>>,
    components: Vec<ComponentReport>,
}

fn prepare(phi: &CnfFormula) -> Result<Option<Prepared>> {
    if !check_22cnf(phi) {
        return Err(Error::NotTwoTwoCnf(
            "clauses must have at most two literals and variables at most two occurrences".into(),
        ));
    }
    let Some(prop) = unit_propagate(phi) else {
        return Ok(None);
    };
    let graph = build_variable_graph(&prop.formula)?;
    let components = classify_components(&graph)?
        .into_iter()
        .filter(|c| !(c.vars.len() == 1 && prop.fixed[c.vars[0].0].is_some()))
        .collect();
    Ok(Some(Prepared { fixed: prop.fixed, components }))
}

fn assemble(prepared: &Prepared, shares: &[usize]) -> (Assignment, Assignment) {
    let n = prepared.fixed.len();
    let mut pair = PairBuilder { first: prepared.fixed.clone(), second: prepared.fixed.clone() };
    debug_assert_eq!(pair.first.len(), n);
    for (report, &mu) in prepared.components.iter().zip(shares) {
        realize(report, mu, &mut pair);
    }
    pair.finish()
}

/// Component reports for a (2,2)-CNF formula after unit propagation;
/// variables fixed by propagation are left out. `None` when propagation
/// finds a conflict.
pub fn components_22(phi: &CnfFormula) -> Result<Option<Vec<ComponentReport>>> {
    Ok(prepare(phi)?.map(|p| p.components))
}

/// Largest Hamming distance between two satisfying assignments, or `None`
/// when the formula is unsatisfiable.
pub fn max_distance_22(phi: &CnfFormula) -> Result<Option<usize>> {
    Ok(prepare(phi)?.map(|p| p.components.iter().map(ComponentReport::max_differ).sum()))
}

pub fn max_differ_22(phi: &CnfFormula, d: usize) -> Result<DifferAnswer> {
    let Some(prepared) = prepare(phi)? else {
        return Ok(DifferAnswer::unsat());
    };
    let shares: Vec<usize> = prepared.components.iter().map(ComponentReport::max_differ).collect();
    if shares.iter().sum::<usize>() < d {
        return Ok(DifferAnswer::no());
    }
    let answer = DifferAnswer::yes(Some(assemble(&prepared, &shares)));
    debug_assert!(Instance::Cnf(phi.clone()).witness_is_valid(&DifferQuery::max(d), &answer));
    Ok(answer)
}

pub fn exact_differ_22(phi: &CnfFormula, d: usize) -> Result<DifferAnswer> {
    let Some(prepared) = prepare(phi)? else {
        return Ok(DifferAnswer::unsat());
    };
    if d > phi.num_vars() {
        return Ok(DifferAnswer::no());
    }
    let comps = &prepared.components;
    let rigid: Vec<usize> = (0..comps.len()).filter(|&i| comps[i].kind == ComponentKind::PureEvenCycle).collect();
    let flexible_budget: usize =
        comps.iter().filter(|c| c.kind != ComponentKind::PureEvenCycle).map(ComponentReport::max_differ).sum();
    let sizes: Vec<u64> = rigid.iter().map(|&i| comps[i].vars.len() as u64).collect();
    let reach = reachable_sums(&sizes, d as u64);
    let Some(rigid_total) = (d.saturating_sub(flexible_budget)..=d).find(|&t| reach[t]) else {
        return Ok(DifferAnswer::no());
    };

    let mut shares = vec![0usize; comps.len()];
    for i in subset_sum(&sizes, rigid_total as u64).expect("sum is reachable") {
        shares[rigid[i]] = comps[rigid[i]].vars.len();
    }
    let mut left = d - rigid_total;
    for (share, c) in shares.iter_mut().zip(comps) {
        if c.kind != ComponentKind::PureEvenCycle {
            *share = left.min(c.max_differ());
            left -= *share;
        }
    }
    debug_assert_eq!(left, 0);
    let answer = DifferAnswer::yes(Some(assemble(&prepared, &shares)));
    debug_assert!(Instance::Cnf(phi.clone()).witness_is_valid(&DifferQuery::exact(d), &answer));
    Ok(answer)
}

/// Dispatches on the query mode.
pub fn differ_22(phi: &CnfFormula, q: DifferQuery) -> Result<DifferAnswer> {
    match q.mode {
        Mode::Max => max_differ_22(phi, q.d),
        Mode::Exact => exact_differ_22(phi, q.d),
    }
}
