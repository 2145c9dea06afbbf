//! Exact optimum computation.
//!
//! [`brute_force_opt`] is a depth-first branch-and-bound over per-subtree
//! multiplicities and works for any small instance. [`solve_shared_vertex_paths`]
//! handles paths that are either directed or pass through the tree root: the
//! directed ones are packed greedily, and the rest reduce to a degree-bounded
//! multigraph problem over a laminar family of leaf sets, which
//! [`hierarchical_b_matching`] solves exactly.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::greedy::{bottom_up_greedy, OrderPolicy};
use crate::instance::{load_vector, Capacity, CapacityVector, Instance, Loads, Solution, Subtree};
use crate::tree::{Object, VertexId};

/// Limits that keep the exponential searches in check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveBudget {
    /// Subtrees (or multigraph edges) accepted by a solve.
    pub max_subtree_count: usize,
    /// Search nodes explored before giving up.
    pub max_node_count: u64,
    /// Total demand, i.e. subtree count after expanding multiplicities.
    pub max_expanded_copies: u64,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            max_subtree_count: 128,
            max_node_count: 20_000_000,
            max_expanded_copies: 100_000,
        }
    }
}

impl SolveBudget {
    pub fn with_node_limit(max_node_count: u64) -> Self {
        SolveBudget {
            max_node_count,
            ..SolveBudget::default()
        }
    }
}

fn object_slot(n: usize, o: Object) -> usize {
    match o {
        Object::Vertex(v) => v,
        Object::Edge(v) => n + v,
    }
}

struct Oracle<'a> {
    instance: &'a Instance,
    loads: Loads,
    current: Vec<u64>,
    best: Option<(u64, Vec<u64>)>,
    /// Totals below this are known not to be optimal.
    floor: u64,
    nodes: u64,
    node_limit: u64,
    buckets: Vec<u64>,
}

impl Oracle<'_> {
    fn room(&self, subtree: &Subtree) -> u64 {
        match self.loads.residual(self.instance.capacities(), subtree) {
            Capacity::Finite(c) => c.min(subtree.demand()),
            Capacity::Unbounded => subtree.demand(),
        }
    }

    /// Admissible bound on what subtrees `from..` can still add. Each subtree is
    /// charged to its most constrained object, and no object can absorb more
    /// than its residual capacity.
    fn remaining_bound(&mut self, from: usize) -> u64 {
        let n = self.instance.tree().vertex_count();
        let caps = self.instance.capacities();
        self.buckets.iter_mut().for_each(|b| *b = 0);
        let mut free = 0u64;
        let mut touched = Vec::new();
        for s in &self.instance.subtrees()[from..] {
            let tightest = s.objects().map(|o| (caps.get(o).residual(self.loads.get(o)), o)).min();
            let Some((residual, o)) = tightest else { continue };
            match residual {
                Capacity::Unbounded => free += s.demand(),
                Capacity::Finite(0) => {}
                Capacity::Finite(c) => {
                    let slot = object_slot(n, o);
                    if self.buckets[slot] == 0 {
                        touched.push((slot, c));
                    }
                    self.buckets[slot] += s.demand().min(c);
                }
            }
        }
        free + touched
            .into_iter()
            .map(|(slot, c)| self.buckets[slot].min(c))
            .sum::<u64>()
    }

    fn search(&mut self, i: usize, total: u64) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::BudgetExceeded {
                what: "search nodes",
                best_lower_bound: self.best.as_ref().map_or(self.floor, |b| b.0.max(self.floor)),
            });
        }
        let floor = self.floor;
        let beats = |t: u64, best: &Option<(u64, Vec<u64>)>| match best {
            Some((b, _)) => t > *b,
            None => t >= floor,
        };
        if i == self.instance.len() {
            if beats(total, &self.best) {
                self.best = Some((total, self.current.clone()));
            }
            return Ok(());
        }
        let bound = total + self.remaining_bound(i);
        if !beats(bound, &self.best) {
            return Ok(());
        }
        let subtree = &self.instance.subtrees()[i];
        let room = self.room(subtree);
        // ascending multiplicities: the first optimum reached is the
        // lexicographically smallest one
        for m in 0..=room {
            self.loads.add(subtree, m);
            self.current[i] = m;
            let r = self.search(i + 1, total + m);
            self.loads.remove(subtree, m);
            self.current[i] = 0;
            r?;
        }
        Ok(())
    }
}

/// Maximum-total feasible solution; among optima, the lexicographically
/// smallest multiplicity vector.
pub fn brute_force_opt(instance: &Instance, budget: &SolveBudget) -> Result<Solution> {
    if instance.len() > budget.max_subtree_count {
        return Err(Error::BudgetExceeded {
            what: "subtree count",
            best_lower_bound: 0,
        });
    }
    if instance.total_demand() > budget.max_expanded_copies {
        return Err(Error::BudgetExceeded {
            what: "expanded copies",
            best_lower_bound: 0,
        });
    }
    // the greedy total is a valid lower bound on the optimum
    let (greedy, _) = bottom_up_greedy(instance, &OrderPolicy::default())?;
    let n = instance.tree().vertex_count();
    let mut oracle = Oracle {
        instance,
        loads: Loads::zero(instance.tree()),
        current: vec![0; instance.len()],
        best: None,
        floor: greedy.total(),
        nodes: 0,
        node_limit: budget.max_node_count,
        buckets: vec![0; 2 * n],
    };
    oracle.search(0, 0)?;
    let (_, best) = oracle.best.expect("the greedy total is attainable");
    Ok(Solution::from_multiplicities(best))
}

/// Per-vertex degree bounds: `k_r` at the root, `min(k_v, k_{e_v})` elsewhere.
pub fn compute_b_bounds(instance: &Instance) -> Vec<Capacity> {
    let tree = instance.tree();
    let caps = instance.capacities();
    (0..tree.vertex_count())
        .map(|v| {
            if v == tree.root() {
                caps.vertex(v)
            } else {
                caps.vertex(v).min(caps.edge(v))
            }
        })
        .collect()
}

/// Makes every path endpoint a leaf of the tree.
///
/// For each internal vertex `u` that ends some path, one pendant leaf with
/// unbounded vertex and edge capacity is attached below `u` and every path
/// ending at `u` is extended onto it. Returns the new instance (same subtree
/// order) and a map from each new leaf to the vertex it was attached to.
/// Single-vertex paths have no edge to reroute and are left as they are.
pub fn leaf_augment(instance: &Instance) -> Result<(Instance, BTreeMap<VertexId, VertexId>)> {
    let tree = instance.tree();
    let mut internal_ends = std::collections::BTreeSet::new();
    for (index, s) in instance.subtrees().iter().enumerate() {
        let (a, b) = s.path_endpoints().ok_or(Error::NotAPath { index })?;
        if a == b {
            continue;
        }
        for x in [a, b] {
            if !tree.is_leaf(x) {
                internal_ends.insert(x);
            }
        }
    }
    if internal_ends.is_empty() {
        return Ok((instance.clone(), BTreeMap::new()));
    }

    let mut new_tree = tree.clone();
    let mut caps = instance.capacities().clone();
    let mut pendant = BTreeMap::new();
    let mut relabel = BTreeMap::new();
    for &u in &internal_ends {
        let (t, w) = new_tree.with_pendant_leaf(u);
        new_tree = t;
        caps.push_vertex(Capacity::Unbounded, Capacity::Unbounded);
        pendant.insert(u, w);
        relabel.insert(w, u);
    }

    let subtrees = instance
        .subtrees()
        .iter()
        .map(|s| {
            let (a, b) = s.path_endpoints().expect("checked above");
            let mut vertices = s.vertices().to_vec();
            if a != b {
                vertices.extend([a, b].iter().filter_map(|x| pendant.get(x)));
            }
            Subtree::new(&new_tree, vertices, s.demand())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((Instance::from_parts_unchecked(new_tree, subtrees, caps), relabel))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaminarSet {
    /// Sorted node ids.
    pub members: Vec<VertexId>,
    pub bound: Capacity,
}

impl LaminarSet {
    pub fn contains(&self, node: VertexId) -> bool {
        self.members.binary_search(&node).is_ok()
    }
}

/// Pick a sub-multiset of `edges` of maximum size such that for every
/// laminar set the summed degree of its members stays within its bound and
/// the number of picked edge copies stays within `root_pair_bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaminarBMatchingProblem {
    pub nodes: Vec<VertexId>,
    pub edges: Vec<MultiEdge>,
    pub laminar_sets: Vec<LaminarSet>,
    pub root_pair_bound: Capacity,
}

impl LaminarBMatchingProblem {
    pub fn validate(&self) -> Result<()> {
        let mut nodes = self.nodes.clone();
        nodes.sort_unstable();
        for e in &self.edges {
            for x in [e.u, e.v] {
                if nodes.binary_search(&x).is_err() {
                    return Err(Error::UnknownNode { node: x });
                }
            }
        }
        for (i, a) in self.laminar_sets.iter().enumerate() {
            for (j, b) in self.laminar_sets.iter().enumerate().skip(i + 1) {
                let common = a.members.iter().filter(|x| b.contains(**x)).count();
                let nested = common == a.members.len() || common == b.members.len();
                if common > 0 && !nested {
                    return Err(Error::NotLaminar { first: i, second: j });
                }
            }
        }
        Ok(())
    }

    pub fn total_copies(&self) -> u64 {
        self.edges.iter().map(|e| e.multiplicity).sum()
    }

    /// Checks a per-edge multiplicity vector against every constraint.
    pub fn is_feasible(&self, picked: &[u64]) -> bool {
        if picked.len() != self.edges.len() {
            return false;
        }
        if picked.iter().zip(&self.edges).any(|(&x, e)| x > e.multiplicity) {
            return false;
        }
        if !self.root_pair_bound.admits(picked.iter().sum()) {
            return false;
        }
        self.laminar_sets.iter().all(|set| {
            let degree: u64 = picked
                .iter()
                .zip(&self.edges)
                .map(|(&x, e)| x * (u64::from(set.contains(e.u)) + u64::from(set.contains(e.v))))
                .sum();
            set.bound.admits(degree)
        })
    }
}

/// Builds the endpoint multigraph for paths that all pass through the root.
///
/// Nodes are the tree leaves, each path becomes an edge between its two
/// endpoints with multiplicity equal to its demand, and each non-root vertex
/// `v` contributes the set of leaves below it with bound `b_v`. The root's
/// capacity bounds the number of selected paths rather than a degree sum,
/// since each selected path loads the root once but has two endpoints under it.
pub fn build_endpoint_multigraph(instance: &Instance) -> Result<LaminarBMatchingProblem> {
    let tree = instance.tree();
    let r = tree.root();
    let mut edges = Vec::with_capacity(instance.len());
    for (index, s) in instance.subtrees().iter().enumerate() {
        if !s.is_path() {
            return Err(Error::NotAPath { index });
        }
        if !s.has_internal_vertex(r) {
            return Err(Error::NotSharedVertexPath { index });
        }
        let (a, b) = s.path_endpoints().expect("path");
        for x in [a, b] {
            if !tree.is_leaf(x) {
                return Err(Error::EndpointNotLeaf { index, vertex: x });
            }
        }
        edges.push(MultiEdge {
            u: a.min(b),
            v: a.max(b),
            multiplicity: s.demand(),
        });
    }
    let bounds = compute_b_bounds(instance);
    let laminar_sets = (0..tree.vertex_count())
        .filter(|&v| v != r)
        .map(|v| LaminarSet {
            members: tree.leaf_descendants(v),
            bound: bounds[v],
        })
        .collect();
    Ok(LaminarBMatchingProblem {
        nodes: tree.leaf_descendants(r),
        edges,
        laminar_sets,
        root_pair_bound: bounds[r],
    })
}

struct Matcher<'a> {
    edges: &'a [MultiEdge],
    /// Per edge: (finite set index, copies of the set's members among its endpoints).
    touches: Vec<Vec<(usize, u64)>>,
    residual: Vec<u64>,
    root_residual: Option<u64>,
    current: Vec<u64>,
    best: Option<(u64, Vec<u64>)>,
    nodes: u64,
    node_limit: u64,
    buckets: Vec<u64>,
}

impl Matcher<'_> {
    fn room(&self, e: usize) -> u64 {
        let mut room = self.edges[e].multiplicity;
        if let Some(r) = self.root_residual {
            room = room.min(r);
        }
        for &(s, coef) in &self.touches[e] {
            room = room.min(self.residual[s] / coef);
        }
        room
    }

    /// Edges charged to their tightest set; a set absorbs at most its residual.
    fn remaining_bound(&mut self, from: usize) -> u64 {
        self.buckets.iter_mut().for_each(|b| *b = 0);
        let mut free = 0u64;
        for e in from..self.edges.len() {
            let room = self.room(e);
            if room == 0 {
                continue;
            }
            let tightest = self.touches[e]
                .iter()
                .min_by_key(|&&(s, coef)| self.residual[s] / coef)
                .map(|&(s, _)| s);
            match tightest {
                Some(s) => self.buckets[s] += room,
                None => free += room,
            }
        }
        let bounded: u64 = self.buckets.iter().zip(&self.residual).map(|(&b, &r)| b.min(r)).sum();
        let total = free + bounded;
        match self.root_residual {
            Some(r) => total.min(r),
            None => total,
        }
    }

    fn apply(&mut self, e: usize, x: u64, add: bool) {
        for &(s, coef) in &self.touches[e] {
            if add {
                self.residual[s] -= x * coef;
            } else {
                self.residual[s] += x * coef;
            }
        }
        if let Some(r) = self.root_residual.as_mut() {
            if add {
                *r -= x;
            } else {
                *r += x;
            }
        }
    }

    fn search(&mut self, e: usize, total: u64) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::BudgetExceeded {
                what: "search nodes",
                best_lower_bound: self.best.as_ref().map_or(0, |b| b.0),
            });
        }
        let best = self.best.as_ref().map(|b| b.0);
        if e == self.edges.len() {
            if best.is_none_or(|b| total > b) {
                self.best = Some((total, self.current.clone()));
            }
            return Ok(());
        }
        if let Some(b) = best {
            if total + self.remaining_bound(e) <= b {
                return Ok(());
            }
        }
        for x in (0..=self.room(e)).rev() {
            self.apply(e, x, true);
            self.current[e] = x;
            let r = self.search(e + 1, total + x);
            self.apply(e, x, false);
            self.current[e] = 0;
            r?;
        }
        Ok(())
    }
}

/// Exact maximum-size feasible edge multiset, as a multiplicity per edge.
pub fn hierarchical_b_matching(problem: &LaminarBMatchingProblem, budget: &SolveBudget) -> Result<Vec<u64>> {
    problem.validate()?;
    if problem.edges.len() > budget.max_subtree_count {
        return Err(Error::BudgetExceeded {
            what: "edge count",
            best_lower_bound: 0,
        });
    }
    let finite: Vec<(usize, u64)> = problem
        .laminar_sets
        .iter()
        .enumerate()
        .filter_map(|(i, s)| s.bound.finite().map(|b| (i, b)))
        .collect();
    let touches = problem
        .edges
        .iter()
        .map(|e| {
            finite
                .iter()
                .enumerate()
                .filter_map(|(slot, &(i, _))| {
                    let set = &problem.laminar_sets[i];
                    let coef = u64::from(set.contains(e.u)) + u64::from(set.contains(e.v));
                    (coef > 0).then_some((slot, coef))
                })
                .collect()
        })
        .collect();
    let mut matcher = Matcher {
        edges: &problem.edges,
        touches,
        residual: finite.iter().map(|&(_, b)| b).collect(),
        root_residual: problem.root_pair_bound.finite(),
        current: vec![0; problem.edges.len()],
        best: None,
        nodes: 0,
        node_limit: budget.max_node_count,
        buckets: vec![0; finite.len()],
    };
    matcher.search(0, 0)?;
    Ok(matcher.best.map(|b| b.1).unwrap_or_default())
}

enum PathKind {
    Directed,
    ThroughRoot,
}

fn classify_paths(instance: &Instance) -> Result<Vec<PathKind>> {
    let r = instance.tree().root();
    instance
        .subtrees()
        .iter()
        .enumerate()
        .map(|(index, s)| {
            if !s.is_path() {
                Err(Error::NotAPath { index })
            } else if s.is_directed_path() {
                Ok(PathKind::Directed)
            } else if s.has_internal_vertex(r) {
                Ok(PathKind::ThroughRoot)
            } else {
                Err(Error::NotSharedVertexPath { index })
            }
        })
        .collect()
}

/// Optimum for instances whose subtrees are paths that are either directed or
/// pass through the tree root as an internal vertex.
///
/// Directed paths are packed greedily (fewest non-root leaves first), their
/// loads are deducted from the capacities, directed paths the greedy turned
/// down are dropped, and the root-crossing paths are matched exactly on the
/// leaf-augmented residual instance.
pub fn solve_shared_vertex_paths(instance: &Instance, budget: &SolveBudget) -> Result<Solution> {
    let kinds = classify_paths(instance)?;
    let (directed, crossing): (Vec<usize>, Vec<usize>) =
        (0..instance.len()).partition(|&i| matches!(kinds[i], PathKind::Directed));

    let mut solution = Solution::empty(instance.len());
    let directed_instance = instance.restricted_to(&directed)?;
    let (picked, _) = bottom_up_greedy(&directed_instance, &OrderPolicy::fewest_leaves_first())?;
    for (j, &i) in directed.iter().enumerate() {
        solution.set(i, picked.get(j));
    }
    if crossing.is_empty() {
        return Ok(solution);
    }

    let loads = load_vector(instance, &solution)?;
    let tree = instance.tree();
    let mut residual = CapacityVector::uniform(tree, Capacity::Unbounded, Capacity::Unbounded);
    for o in tree.objects() {
        residual.set(o, instance.capacities().get(o).residual(loads.get(o)));
    }
    let crossing_instance = instance.restricted_to(&crossing)?.with_capacities(residual)?;
    let (augmented, _) = leaf_augment(&crossing_instance)?;
    let problem = build_endpoint_multigraph(&augmented)?;
    let matched = hierarchical_b_matching(&problem, budget)?;
    for (k, &i) in crossing.iter().enumerate() {
        solution.set(i, matched[k]);
    }
    Ok(solution)
}
