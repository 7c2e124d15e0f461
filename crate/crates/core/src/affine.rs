//! Differ solvers for affine (parity) systems.
//!
//! * [`two_affine_differ`]: polynomial for systems whose equations have at
//!   most two variables. Equal-variable classes are contracted to weighted
//!   vertices, the `x ⊕ y = 1` constraints then form a graph whose
//!   bipartite components flip independently.
//! * [`max_differ_fpt`]: `O*(2^d)` for Max mode on arbitrary systems.
//! * [`kernelize`]: shrinks a Max instance to `O(d²)` variables.
//! * [`exact_differ_free_enum`]: exhaustive over free-variable subsets for
//!   Exact mode, guarded by a cap.

use crate::error::{Error, Result};
use crate::gf2::{solve_affine, SolutionSpace};
use crate::model::{AffineEquation, AffineSystem, Assignment, DifferAnswer, DifferQuery, Instance, Mode, VarId};
use crate::subset_sum::subset_sum;

/// Default cap on free variables for [`exact_differ_free_enum`].
pub const DEFAULT_FREE_CAP: usize = 24;

/// Weights of the independently flippable components of a 2-affine system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedComponentSummary {
    /// One entry per flippable component, ordered by smallest variable.
    pub weights: Vec<u64>,
    /// False when the parity constraints cannot be met (odd cycle of
    /// `x ⊕ y = 1` edges, or conflicting pins). `weights` is empty then.
    pub bipartite_ok: bool,
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as representative
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Contracted 2-affine structure: every variable's value is
/// `color[var] ⊕ toggle[component of var]`.
struct TwoAffineStructure {
    color: Vec<bool>,
    component: Vec<usize>,
    /// Per component: `Some(t)` when a pin fixes the toggle.
    pinned: Vec<Option<bool>>,
    weight: Vec<u64>,
}

fn contract(sys: &AffineSystem) -> Result<Option<TwoAffineStructure>> {
    let n = sys.num_vars();
    for (index, eq) in sys.equations().iter().enumerate() {
        if eq.arity() > 2 {
            return Err(Error::NotTwoAffine { index, arity: eq.arity() });
        }
    }

    // Phase 1: x ⊕ y = 0 classes.
    let mut classes = DisjointSets::new(n);
    for eq in sys.equations() {
        match (eq.vars(), eq.rhs()) {
            ([], true) => return Ok(None),
            ([a, b], false) => classes.union(a.0, b.0),
            _ => {}
        }
    }
    let root: Vec<usize> = (0..n).map(|v| classes.find(v)).collect();

    let mut class_pin: Vec<Option<bool>> = vec![None; n];
    for eq in sys.equations() {
        if let [a] = eq.vars() {
            let r = root[a.0];
            match class_pin[r] {
                Some(b) if b != eq.rhs() => return Ok(None),
                _ => class_pin[r] = Some(eq.rhs()),
            }
        }
    }

    // Phase 2: x ⊕ y = 1 edges between classes, 2-colored per component.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for eq in sys.equations() {
        if let ([a, b], true) = (eq.vars(), eq.rhs()) {
            let (ra, rb) = (root[a.0], root[b.0]);
            if ra == rb {
                return Ok(None);
            }
            adj[ra].push(rb);
            adj[rb].push(ra);
        }
    }

    let mut class_color: Vec<Option<bool>> = vec![None; n];
    let mut class_comp: Vec<usize> = vec![usize::MAX; n];
    let mut pinned: Vec<Option<bool>> = Vec::new();
    let mut weight: Vec<u64> = Vec::new();
    let mut class_weight = vec![0u64; n];
    for v in 0..n {
        class_weight[root[v]] += sys.weights()[v];
    }

    for start in 0..n {
        if root[start] != start || class_color[start].is_some() {
            continue;
        }
        let comp = pinned.len();
        let mut toggle: Option<bool> = None;
        let mut total = 0u64;
        class_color[start] = Some(false);
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            class_comp[c] = comp;
            total += class_weight[c];
            let color = class_color[c].expect("colored before push");
            if let Some(b) = class_pin[c] {
                let t = b ^ color;
                if toggle.is_some_and(|t0| t0 != t) {
                    return Ok(None);
                }
                toggle = Some(t);
            }
            for &next in &adj[c] {
                match class_color[next] {
                    None => {
                        class_color[next] = Some(!color);
                        stack.push(next);
                    }
                    Some(c2) if c2 == color => return Ok(None),
                    Some(_) => {}
                }
            }
        }
        pinned.push(toggle);
        weight.push(total);
    }

    let color = (0..n).map(|v| class_color[root[v]].expect("every class colored")).collect();
    let component = (0..n).map(|v| class_comp[root[v]]).collect();
    Ok(Some(TwoAffineStructure { color, component, pinned, weight }))
}

impl TwoAffineStructure {
    fn flippable(&self) -> Vec<usize> {
        (0..self.pinned.len()).filter(|&c| self.pinned[c].is_none()).collect()
    }

    fn assignment(&self, flipped: &[bool]) -> Assignment {
        let bits = self
            .color
            .iter()
            .zip(&self.component)
            .map(|(&col, &c)| col ^ self.pinned[c].unwrap_or(flipped[c]))
            .collect();
        Assignment::from_bits(bits)
    }
}

/// Component weights of a 2-affine system after contraction.
pub fn weighted_components(sys: &AffineSystem) -> Result<WeightedComponentSummary> {
    Ok(match contract(sys)? {
        None => WeightedComponentSummary { weights: Vec::new(), bipartite_ok: false },
        Some(s) => WeightedComponentSummary {
            weights: s.flippable().into_iter().map(|c| s.weight[c]).collect(),
            bipartite_ok: true,
        },
    })
}

/// Max/Exact differ on a system whose equations all have arity ≤ 2.
/// Distances are weighted by the system's variable weights.
pub fn two_affine_differ(sys: &AffineSystem, q: DifferQuery) -> Result<DifferAnswer> {
    let Some(structure) = contract(sys)? else {
        return Ok(DifferAnswer::unsat());
    };
    let flippable = structure.flippable();
    let weights: Vec<u64> = flippable.iter().map(|&c| structure.weight[c]).collect();
    let d = q.d as u64;

    let chosen: Option<Vec<usize>> = match q.mode {
        Mode::Max => (weights.iter().sum::<u64>() >= d).then(|| flippable.clone()),
        Mode::Exact => subset_sum(&weights, d).map(|idx| idx.into_iter().map(|i| flippable[i]).collect()),
    };
    let Some(chosen) = chosen else {
        return Ok(DifferAnswer::no());
    };

    let mut flipped = vec![false; structure.pinned.len()];
    let first = structure.assignment(&flipped);
    for c in chosen {
        flipped[c] = true;
    }
    let second = structure.assignment(&flipped);
    let answer = DifferAnswer::yes(Some((first, second)));
    debug_assert!(Instance::Affine(sys.clone()).witness_is_valid(&q, &answer));
    Ok(answer)
}

/// Instrumentation for [`max_differ_fpt_with_stats`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FptStats {
    /// Free-variable subsets examined by the guessing loop.
    pub subsets_examined: u64,
    pub free_vars: usize,
}

/// Walks subsets of the free variables in Gray-code order, tracking the
/// distance between the all-zero-free solution and the solution with the
/// current subset flipped. Returns the first subset whose distance passes
/// `accept`, plus the number of subsets examined.
fn search_free_subsets(space: &SolutionSpace, accept: impl Fn(usize) -> bool) -> Result<(Option<Vec<bool>>, u64)> {
    let f = space.free.len();
    if f >= 64 {
        return Err(Error::FreeVariableCap { free: f, cap: 63 });
    }
    let deps = space.dependents_by_free();
    let mut in_subset = vec![false; f];
    let mut parity = vec![false; space.forced.len()];
    let mut size = 0usize;
    let mut odd = 0usize;
    let mut examined = 0u64;
    let total: u64 = 1 << f;
    for i in 0..total {
        if i > 0 {
            let j = i.trailing_zeros() as usize;
            in_subset[j] = !in_subset[j];
            if in_subset[j] {
                size += 1;
            } else {
                size -= 1;
            }
            for &k in &deps[j] {
                parity[k] = !parity[k];
                if parity[k] {
                    odd += 1;
                } else {
                    odd -= 1;
                }
            }
        }
        examined += 1;
        if accept(size + odd) {
            return Ok((Some(in_subset), examined));
        }
    }
    Ok((None, examined))
}

fn pair_from_subset(space: &SolutionSpace, subset: &[bool]) -> Result<(Assignment, Assignment)> {
    let zero = space.extend(&vec![false; space.free.len()])?;
    let other = space.extend(subset)?;
    Ok((zero, other))
}

/// Max differ for arbitrary affine systems in `O*(2^d)`.
pub fn max_differ_fpt(sys: &AffineSystem, d: usize) -> Result<DifferAnswer> {
    max_differ_fpt_with_stats(sys, d).map(|(a, _)| a)
}

pub fn max_differ_fpt_with_stats(sys: &AffineSystem, d: usize) -> Result<(DifferAnswer, FptStats)> {
    let space = solve_affine(sys);
    let mut stats = FptStats { subsets_examined: 0, free_vars: space.free.len() };
    if !space.is_consistent() {
        return Ok((DifferAnswer::unsat(), stats));
    }
    let f = space.free.len();
    if f == 0 {
        let sigma = space.extend(&[])?;
        let answer = if d == 0 { DifferAnswer::yes(Some((sigma.clone(), sigma))) } else { DifferAnswer::no() };
        return Ok((answer, stats));
    }
    if f >= d {
        let pair = pair_from_subset(&space, &vec![true; f])?;
        return Ok((DifferAnswer::yes(Some(pair)), stats));
    }
    let (found, examined) = search_free_subsets(&space, |dist| dist >= d)?;
    stats.subsets_examined = examined;
    let answer = match found {
        Some(subset) => DifferAnswer::yes(Some(pair_from_subset(&space, &subset)?)),
        None => DifferAnswer::no(),
    };
    debug_assert!(Instance::Affine(sys.clone()).witness_is_valid(&DifferQuery::max(d), &answer));
    Ok((answer, stats))
}

/// Exact differ by enumerating every subset of free variables; refuses
/// systems with more than [`DEFAULT_FREE_CAP`] free variables.
pub fn exact_differ_free_enum(sys: &AffineSystem, d: usize) -> Result<DifferAnswer> {
    exact_differ_free_enum_capped(sys, d, DEFAULT_FREE_CAP)
}

pub fn exact_differ_free_enum_capped(sys: &AffineSystem, d: usize, cap: usize) -> Result<DifferAnswer> {
    let space = solve_affine(sys);
    if !space.is_consistent() {
        return Ok(DifferAnswer::unsat());
    }
    let f = space.free.len();
    if f > cap {
        return Err(Error::FreeVariableCap { free: f, cap });
    }
    if d > sys.num_vars() {
        return Ok(DifferAnswer::no());
    }
    let (found, _) = search_free_subsets(&space, |dist| dist == d)?;
    let answer = match found {
        Some(subset) => DifferAnswer::yes(Some(pair_from_subset(&space, &subset)?)),
        None => DifferAnswer::no(),
    };
    debug_assert!(Instance::Affine(sys.clone()).witness_is_valid(&DifferQuery::exact(d), &answer));
    Ok(answer)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelResult {
    Decided(DifferAnswer),
    Reduced(Kernel),
}

/// A reduced Max-differ instance together with what is needed to map its
/// solutions back to the original variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub system: AffineSystem,
    pub d: usize,
    /// Original variable for each kernel variable.
    pub kept: Vec<VarId>,
    /// Original variables removed because every solution fixes them.
    pub constants: Vec<(VarId, bool)>,
    pub original_vars: usize,
}

impl Kernel {
    /// Maps a solution of the kernel back to the original variables.
    pub fn lift(&self, sigma: &Assignment) -> Result<Assignment> {
        if sigma.len() != self.kept.len() {
            return Err(Error::LengthMismatch { expected: self.kept.len(), actual: sigma.len() });
        }
        let mut out = Assignment::zeros(self.original_vars);
        for (i, v) in self.kept.iter().enumerate() {
            out.set(*v, sigma.get(VarId(i)));
        }
        for &(v, b) in &self.constants {
            out.set(v, b);
        }
        Ok(out)
    }
}

/// Kernel for Max differ: at most `(d-1)²` variables and `(d-1)(d-2)`
/// equations, same answer as the input for the same `d`.
pub fn kernelize(sys: &AffineSystem, d: usize) -> Result<KernelResult> {
    let space = solve_affine(sys);
    if !space.is_consistent() {
        return Ok(KernelResult::Decided(DifferAnswer::unsat()));
    }
    let f = space.free.len();
    if f == 0 {
        let sigma = space.extend(&[])?;
        return Ok(KernelResult::Decided(if d == 0 {
            DifferAnswer::yes(Some((sigma.clone(), sigma)))
        } else {
            DifferAnswer::no()
        }));
    }
    if f >= d {
        let pair = pair_from_subset(&space, &vec![true; f])?;
        return Ok(KernelResult::Decided(DifferAnswer::yes(Some(pair))));
    }

    // From here 1 <= f <= d - 1, so d >= 2.
    let deps = space.dependents_by_free();
    if let Some(pos) = deps.iter().position(|dep| dep.len() + 1 >= d) {
        let mut subset = vec![false; f];
        subset[pos] = true;
        let pair = pair_from_subset(&space, &subset)?;
        return Ok(KernelResult::Decided(DifferAnswer::yes(Some(pair))));
    }

    let mut kept: Vec<VarId> = space.free.clone();
    let mut constants = Vec::new();
    for expr in &space.forced {
        if expr.support.is_empty() {
            constants.push((expr.target, expr.constant));
        } else {
            kept.push(expr.target);
        }
    }
    kept.sort_unstable();
    let mut new_index = vec![usize::MAX; sys.num_vars()];
    for (i, v) in kept.iter().enumerate() {
        new_index[v.0] = i;
    }
    let equations = space
        .forced
        .iter()
        .filter(|e| !e.support.is_empty())
        .map(|e| {
            AffineEquation::new(
                std::iter::once(e.target).chain(e.support.iter().copied()).map(|v| VarId(new_index[v.0])),
                e.constant,
            )
        })
        .collect();
    let system = AffineSystem::new(kept.len(), equations)?;
    debug_assert!(system.num_vars() <= (d - 1) * (d - 1));
    debug_assert!(system.equations().len() <= (d - 1) * (d - 2));
    Ok(KernelResult::Reduced(Kernel { system, d, kept, constants, original_vars: sys.num_vars() }))
}

/// Max differ via [`kernelize`] followed by [`max_differ_fpt`] on the
/// kernel, with the witness lifted back to the original variables.
pub fn max_differ_kernelized(sys: &AffineSystem, d: usize) -> Result<DifferAnswer> {
    match kernelize(sys, d)? {
        KernelResult::Decided(answer) => Ok(answer),
        KernelResult::Reduced(kernel) => {
            let mut answer = max_differ_fpt(&kernel.system, kernel.d)?;
            if let Some((a, b)) = answer.witness.take() {
                answer.witness = Some((kernel.lift(&a)?, kernel.lift(&b)?));
            }
            Ok(answer)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::{hamming_distance, Decision};

    fn all_distances(sys: &AffineSystem) -> Option<std::collections::BTreeSet<usize>> {
        let n = sys.num_vars();
        let sols: Vec<Assignment> = (0u32..1 << n)
            .map(|m| Assignment::from_bits((0..n).map(|i| m >> i & 1 == 1).collect()))
            .filter(|s| sys.evaluate(s).unwrap())
            .collect();
        if sols.is_empty() {
            return None;
        }
        let mut out = std::collections::BTreeSet::new();
        for a in &sols {
            for b in &sols {
                out.insert(hamming_distance(a, b).unwrap());
            }
        }
        Some(out)
    }

    #[test]
    fn three_component_system() {
        let sys = fixtures::three_component_two_affine();
        let summary = weighted_components(&sys).unwrap();
        assert!(summary.bipartite_ok);
        let mut w = summary.weights.clone();
        w.sort_unstable();
        assert_eq!(w, vec![4, 5, 6]);

        assert!(two_affine_differ(&sys, DifferQuery::max(15)).unwrap().is_yes());
        assert!(!two_affine_differ(&sys, DifferQuery::max(16)).unwrap().is_yes());
        assert!(two_affine_differ(&sys, DifferQuery::exact(9)).unwrap().is_yes());
        assert_eq!(two_affine_differ(&sys, DifferQuery::exact(7)).unwrap().decision, Decision::No);
    }

    #[test]
    fn odd_cycle_is_unsat() {
        let sys = AffineSystem::from_indices(3, &[(&[0, 1], true), (&[1, 2], true), (&[2, 0], true)]).unwrap();
        for d in 0..4 {
            assert_eq!(two_affine_differ(&sys, DifferQuery::max(d)).unwrap().decision, Decision::UnsatNo);
            assert_eq!(two_affine_differ(&sys, DifferQuery::exact(d)).unwrap().decision, Decision::UnsatNo);
        }
        assert!(!weighted_components(&sys).unwrap().bipartite_ok);
    }

    #[test]
    fn equal_pair() {
        let sys = AffineSystem::from_indices(2, &[(&[0, 1], false)]).unwrap();
        let yes = two_affine_differ(&sys, DifferQuery::exact(2)).unwrap();
        assert!(yes.is_yes());
        let (a, b) = yes.witness.unwrap();
        assert_eq!(hamming_distance(&a, &b).unwrap(), 2);
        assert_eq!(two_affine_differ(&sys, DifferQuery::exact(1)).unwrap().decision, Decision::No);
    }

    #[test]
    fn pins_and_constants() {
        // x0 = 1, x0 ⊕ x1 = 1 fixes both; x2 isolated.
        let sys = AffineSystem::from_indices(3, &[(&[0], true), (&[0, 1], true)]).unwrap();
        assert_eq!(weighted_components(&sys).unwrap().weights, vec![1]);
        assert!(two_affine_differ(&sys, DifferQuery::exact(1)).unwrap().is_yes());
        assert!(!two_affine_differ(&sys, DifferQuery::max(2)).unwrap().is_yes());

        let clash = AffineSystem::from_indices(2, &[(&[0], true), (&[1], false), (&[0, 1], false)]).unwrap();
        assert_eq!(two_affine_differ(&clash, DifferQuery::max(0)).unwrap().decision, Decision::UnsatNo);

        let empty_false = AffineSystem::new(1, vec![AffineEquation::new([], true)]).unwrap();
        assert_eq!(two_affine_differ(&empty_false, DifferQuery::max(0)).unwrap().decision, Decision::UnsatNo);

        let contradiction = AffineSystem::from_indices(2, &[(&[0, 1], false), (&[0, 1], true)]).unwrap();
        assert_eq!(two_affine_differ(&contradiction, DifferQuery::max(0)).unwrap().decision, Decision::UnsatNo);
    }

    #[test]
    fn weights_are_summed_per_class() {
        let sys = AffineSystem::from_indices(3, &[(&[0, 1], false), (&[1, 2], true)])
            .unwrap()
            .with_weights(vec![2, 3, 4])
            .unwrap();
        assert_eq!(weighted_components(&sys).unwrap().weights, vec![9]);
        let ans = two_affine_differ(&sys, DifferQuery::exact(9)).unwrap();
        assert!(ans.is_yes());
        assert!(Instance::Affine(sys.clone()).witness_is_valid(&DifferQuery::exact(9), &ans));
        assert!(!two_affine_differ(&sys, DifferQuery::exact(5)).unwrap().is_yes());
    }

    #[test]
    fn rejects_wide_equations() {
        let sys = AffineSystem::from_indices(3, &[(&[0, 1, 2], true)]).unwrap();
        assert_eq!(two_affine_differ(&sys, DifferQuery::max(1)), Err(Error::NotTwoAffine { index: 0, arity: 3 }));
    }

    #[test]
    fn fpt_examples() {
        let sys = fixtures::worked_example_affine();
        let ans = max_differ_fpt(&sys, 2).unwrap();
        let (a, b) = ans.witness.clone().unwrap();
        // x, y, z, u, w = 0..5: differs on y, z, u, w
        let diff: Vec<usize> = (0..5).filter(|&i| a.bits()[i] != b.bits()[i]).collect();
        assert_eq!(diff, vec![1, 2, 3, 4]);

        let (no, stats) = max_differ_fpt_with_stats(&sys, 5).unwrap();
        assert_eq!(no.decision, Decision::No);
        assert_eq!(stats.subsets_examined, 4);
        assert_eq!(all_distances(&sys).unwrap().into_iter().max(), Some(4));

        let bad = AffineSystem::new(2, vec![AffineEquation::new([], true)]).unwrap();
        assert_eq!(max_differ_fpt(&bad, 0).unwrap().decision, Decision::UnsatNo);
        let unique = AffineSystem::from_indices(2, &[(&[0], true), (&[1], false)]).unwrap();
        assert!(max_differ_fpt(&unique, 0).unwrap().is_yes());
        assert_eq!(max_differ_fpt(&unique, 1).unwrap().decision, Decision::No);
    }

    #[test]
    fn exact_enum_examples() {
        let sys = fixtures::worked_example_affine();
        assert_eq!(all_distances(&sys).unwrap().into_iter().collect::<Vec<_>>(), vec![0, 3, 4]);
        assert!(exact_differ_free_enum(&sys, 4).unwrap().is_yes());
        assert!(exact_differ_free_enum(&sys, 3).unwrap().is_yes());
        assert_eq!(exact_differ_free_enum(&sys, 1).unwrap().decision, Decision::No);
        assert_eq!(exact_differ_free_enum(&sys, 40).unwrap().decision, Decision::No);
        let ans = exact_differ_free_enum(&sys, 0).unwrap();
        let (a, b) = ans.witness.unwrap();
        assert_eq!(a, b);

        let unique = AffineSystem::from_indices(1, &[(&[0], true)]).unwrap();
        assert!(exact_differ_free_enum(&unique, 0).unwrap().is_yes());
        let bad = AffineSystem::new(2, vec![AffineEquation::new([], true)]).unwrap();
        assert_eq!(exact_differ_free_enum(&bad, 1).unwrap().decision, Decision::UnsatNo);

        let wide = AffineSystem::new(5, vec![]).unwrap();
        assert_eq!(exact_differ_free_enum_capped(&wide, 1, 4), Err(Error::FreeVariableCap { free: 5, cap: 4 }));
    }

    #[test]
    fn kernel_examples() {
        // a = x, b = x, c = x ⊕ 1 with x free
        let (x, a, b, c) = (0, 1, 2, 3);
        let star = AffineSystem::from_indices(4, &[(&[a, x], false), (&[b, x], false), (&[c, x], true)]).unwrap();
        let space = solve_affine(&star);
        assert_eq!(space.free.len(), 1);
        match kernelize(&star, 4).unwrap() {
            KernelResult::Decided(ans) => {
                let (s1, s2) = ans.witness.clone().unwrap();
                assert_eq!(hamming_distance(&s1, &s2).unwrap(), 4);
            }
            other => panic!("expected a decision, got {other:?}"),
        }

        let pinned = AffineSystem::from_indices(2, &[(&[1], true)]).unwrap();
        match kernelize(&pinned, 1).unwrap() {
            // a single free variable already meets d = 1
            KernelResult::Decided(ans) => assert!(ans.is_yes()),
            other => panic!("unexpected {other:?}"),
        }
        // with d = 2 the constant y is removed and x survives alone
        match kernelize(&pinned, 2).unwrap() {
            KernelResult::Reduced(k) => {
                assert_eq!(k.system.num_vars(), 1);
                assert!(k.system.equations().is_empty());
                assert_eq!(k.kept, vec![VarId(0)]);
                assert_eq!(k.constants, vec![(VarId(1), true)]);
                assert_eq!(max_differ_fpt(&k.system, 2).unwrap().decision, Decision::No);
            }
            other => panic!("unexpected {other:?}"),
        }

        let bad = AffineSystem::new(2, vec![AffineEquation::new([], true)]).unwrap();
        assert_eq!(kernelize(&bad, 2).unwrap(), KernelResult::Decided(DifferAnswer::unsat()));
    }

    #[test]
    fn kernel_witness_lifts() {
        // x0 ⊕ x1 = 0, x2 ⊕ x3 ⊕ x0 = 1, x4 = 1
        let sys = AffineSystem::from_indices(5, &[(&[0, 1], false), (&[2, 3, 0], true), (&[4], true)]).unwrap();
        for d in 0..=6 {
            let direct = max_differ_fpt(&sys, d).unwrap();
            let via = max_differ_kernelized(&sys, d).unwrap();
            assert_eq!(direct.decision, via.decision, "d = {d}");
            assert!(Instance::Affine(sys.clone()).witness_is_valid(&DifferQuery::max(d), &via));
        }
    }
}
