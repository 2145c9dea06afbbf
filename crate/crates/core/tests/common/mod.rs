//! Reference implementations used as test oracles. They only read raw vertex
//! sets, parent lists and capacities, never the library's load or search code.

#![allow(dead_code)]

use mstbl::exact::{LaminarBMatchingProblem, LaminarSet, MultiEdge};
use mstbl::gen::SimpleGraph;
use mstbl::{Capacity, Instance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fits(cap: Capacity, load: u64) -> bool {
    match cap {
        Capacity::Finite(k) => load <= k,
        Capacity::Unbounded => true,
    }
}

/// Vertex and edge loads of `x`, indexed by vertex (edges by child).
pub fn naive_loads(instance: &Instance, x: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let tree = instance.tree();
    let n = tree.vertex_count();
    let parents = tree.parents();
    let mut vertex = vec![0u64; n];
    let mut edge = vec![0u64; n];
    for (s, &m) in instance.subtrees().iter().zip(x) {
        let members = s.vertices();
        for &v in members {
            vertex[v] += m;
            if v != tree.root() && members.contains(&parents[v]) {
                edge[v] += m;
            }
        }
    }
    (vertex, edge)
}

pub fn naive_feasible(instance: &Instance, x: &[u64]) -> bool {
    let (vertex, edge) = naive_loads(instance, x);
    let caps = instance.capacities();
    let root = instance.tree().root();
    (0..vertex.len()).all(|v| fits(caps.vertex(v), vertex[v]) && (v == root || fits(caps.edge(v), edge[v])))
}

/// Optimum by full enumeration, lexicographically smallest among ties.
/// Each multiplicity ranges up to its demand, clipped by the smallest finite
/// capacity of any vertex it covers.
pub fn exhaustive_opt(instance: &Instance) -> Vec<u64> {
    let caps = instance.capacities();
    let limits: Vec<u64> = instance
        .subtrees()
        .iter()
        .map(|s| {
            s.vertices()
                .iter()
                .filter_map(|&v| match caps.vertex(v) {
                    Capacity::Finite(k) => Some(k),
                    Capacity::Unbounded => None,
                })
                .fold(s.demand(), u64::min)
        })
        .collect();
    let mut x = vec![0u64; limits.len()];
    let mut best = (0u64, x.clone());
    loop {
        if naive_feasible(instance, &x) {
            let total: u64 = x.iter().sum();
            if total > best.0 {
                best = (total, x.clone());
            }
        }
        // odometer with the last coordinate fastest, so vectors come in
        // lexicographic order and the first optimum seen is kept
        let mut i = x.len();
        loop {
            if i == 0 {
                return best.1;
            }
            i -= 1;
            if x[i] < limits[i] {
                x[i] += 1;
                for y in &mut x[i + 1..] {
                    *y = 0;
                }
                break;
            }
        }
    }
}

pub fn exhaustive_opt_total(instance: &Instance) -> u64 {
    exhaustive_opt(instance).iter().sum()
}

/// Independence number by subset enumeration.
pub fn independence_number(graph: &SimpleGraph) -> usize {
    let n = graph.vertex_count();
    let edges: Vec<(usize, usize)> = graph.edges().collect();
    (0u32..1 << n)
        .filter(|mask| edges.iter().all(|&(u, v)| mask & (1 << u) == 0 || mask & (1 << v) == 0))
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Independence number of a graph given by adjacency lists.
pub fn independence_number_adj(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    (0u64..1 << n)
        .filter(|mask| (0..n).all(|u| mask & (1 << u) == 0 || (u + 1..n).all(|v| mask & (1 << v) == 0 || !adj[u][v])))
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn matching_feasible(problem: &LaminarBMatchingProblem, x: &[u64]) -> bool {
    let total: u64 = x.iter().sum();
    if !fits(problem.root_pair_bound, total) {
        return false;
    }
    problem.laminar_sets.iter().all(|set| {
        let mut degree = 0;
        for (e, &m) in problem.edges.iter().zip(x) {
            if set.members.contains(&e.u) {
                degree += m;
            }
            if set.members.contains(&e.v) {
                degree += m;
            }
        }
        fits(set.bound, degree)
    })
}

/// Largest feasible edge multiset size by enumeration.
pub fn exhaustive_matching(problem: &LaminarBMatchingProblem) -> u64 {
    let limits: Vec<u64> = problem.edges.iter().map(|e| e.multiplicity).collect();
    let mut x = vec![0u64; limits.len()];
    let mut best = 0;
    loop {
        if matching_feasible(problem, &x) {
            best = best.max(x.iter().sum());
        }
        let mut i = 0;
        loop {
            if i == x.len() {
                return best;
            }
            if x[i] < limits[i] {
                x[i] += 1;
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// Laminar b-matching problem from a random hierarchy: the hierarchy's
/// leaves are the nodes and every non-root hierarchy vertex contributes the
/// set of leaves below it. At most 10 edge copies in total.
pub fn random_laminar_problem(seed: u64) -> LaminarBMatchingProblem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = rng.gen_range(3..=9);
    let parent: Vec<usize> = (0..size)
        .map(|i| if i == 0 { 0 } else { rng.gen_range(0..i) })
        .collect();
    let is_leaf: Vec<bool> = (0..size)
        .map(|v| v != 0 && !(1..size).any(|c| parent[c] == v))
        .collect();
    let nodes: Vec<usize> = (0..size).filter(|&v| is_leaf[v]).collect();
    let below = |leaf: usize, v: usize| {
        let mut x = leaf;
        loop {
            if x == v {
                return true;
            }
            if x == 0 {
                return false;
            }
            x = parent[x];
        }
    };
    let bound = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.2) {
            Capacity::Unbounded
        } else {
            Capacity::Finite(rng.gen_range(0..=4))
        }
    };
    let laminar_sets = (1..size)
        .map(|v| LaminarSet {
            members: nodes.iter().copied().filter(|&l| below(l, v)).collect(),
            bound: bound(&mut rng),
        })
        .collect();
    let mut edges = Vec::new();
    let mut copies = 0;
    if nodes.len() >= 2 {
        let target = rng.gen_range(0..=10);
        while copies < target {
            let u = nodes[rng.gen_range(0..nodes.len())];
            let v = nodes[rng.gen_range(0..nodes.len())];
            if u == v {
                continue;
            }
            let m = rng.gen_range(1..=(target - copies).min(3));
            copies += m;
            edges.push(MultiEdge { u, v, multiplicity: m });
        }
    }
    let root_pair_bound = bound(&mut rng);
    LaminarBMatchingProblem {
        nodes,
        edges,
        laminar_sets,
        root_pair_bound,
    }
}
