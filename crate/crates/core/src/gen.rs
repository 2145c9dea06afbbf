//! Seeded instance generators and reductions into subtree packing.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::{load_vector, Capacity, CapacityVector, Instance, Solution, Subtree};
use crate::tree::{Object, Tree, VertexId};

/// Which kind of subtrees [`random_instance`] draws.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// Tree path between two uniformly drawn distinct vertices.
    PathsOnly,
    /// Randomly grown connected vertex sets.
    GeneralSubtrees,
    /// Paths from a vertex up to one of its ancestors.
    DirectedPaths,
    /// An even mix of directed paths and paths through the root. The first
    /// two non-root vertices are attached to the root so both kinds exist.
    RootCrossingPaths,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubtreeCount {
    Range(usize, usize),
    /// Between `lo` and `hi` times the tree size.
    TreeMultiple(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CapacityModel {
    Uniform {
        min: u64,
        max: u64,
    },
    /// Each object is unbounded with the given probability, otherwise uniform.
    WithUnbounded {
        min: u64,
        max: u64,
        unbounded_fraction: f64,
    },
    /// Uniform on `[1, 2 * ceil(mean load)]`, the mean taken over objects
    /// loaded by the full subtree list.
    ScaledToLoad,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    pub tree_size: (usize, usize),
    pub subtree_count: SubtreeCount,
    pub capacities: CapacityModel,
    pub demand: (u64, u64),
    pub shape: Shape,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            tree_size: (10, 20),
            subtree_count: SubtreeCount::TreeMultiple(2, 4),
            capacities: CapacityModel::Uniform { min: 1, max: 3 },
            demand: (1, 1),
            shape: Shape::PathsOnly,
        }
    }
}

impl GenConfig {
    pub fn with_seed(self, seed: u64) -> Self {
        GenConfig { seed, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidConfig(msg.to_string()));
        let (lo, hi) = self.tree_size;
        if lo == 0 || lo > hi {
            return bad("tree size range must satisfy 1 <= min <= max");
        }
        match self.subtree_count {
            SubtreeCount::Range(a, b) | SubtreeCount::TreeMultiple(a, b) if a > b => {
                return bad("subtree count range must satisfy min <= max")
            }
            _ => {}
        }
        match self.capacities {
            CapacityModel::Uniform { min, max } if min > max => return bad("capacity range must satisfy min <= max"),
            CapacityModel::WithUnbounded {
                min,
                max,
                unbounded_fraction,
            } => {
                if min > max {
                    return bad("capacity range must satisfy min <= max");
                }
                if !(0.0..=1.0).contains(&unbounded_fraction) {
                    return bad("unbounded fraction must lie in [0, 1]");
                }
            }
            _ => {}
        }
        let (dlo, dhi) = self.demand;
        if dlo == 0 || dlo > dhi {
            return bad("demand range must satisfy 1 <= min <= max");
        }
        Ok(())
    }
}

/// Tree where vertex `i >= 1` hangs off a uniformly drawn earlier vertex.
pub fn random_tree(rng: &mut impl Rng, vertex_count: usize) -> Tree {
    let parents: Vec<VertexId> = (0..vertex_count)
        .map(|i| if i == 0 { 0 } else { rng.gen_range(0..i) })
        .collect();
    Tree::from_parents(&parents, 0).expect("attachment to earlier vertices is a tree")
}

fn pick<T: Copy>(rng: &mut impl Rng, items: &[T]) -> T {
    items[rng.gen_range(0..items.len())]
}

fn descendants(tree: &Tree, v: VertexId) -> Vec<VertexId> {
    let mut out = Vec::new();
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        out.push(x);
        stack.extend_from_slice(tree.children(x));
    }
    out
}

fn directed_path(rng: &mut impl Rng, tree: &Tree) -> Vec<VertexId> {
    let bottom = rng.gen_range(0..tree.vertex_count());
    let depth = tree.depth(bottom);
    let climb = if depth == 0 { 0 } else { rng.gen_range(1..=depth) };
    let mut top = bottom;
    for _ in 0..climb {
        top = tree.parent(top).expect("climb stays below the root");
    }
    tree.path(top, bottom)
}

fn grown_subtree(rng: &mut impl Rng, tree: &Tree) -> Vec<VertexId> {
    let n = tree.vertex_count();
    let target = rng.gen_range(1..=n.div_ceil(2));
    let start = rng.gen_range(0..n);
    let mut set = BTreeSet::from([start]);
    let mut frontier: Vec<VertexId> = Vec::new();
    let neighbours = |v: VertexId| tree.children(v).iter().copied().chain(tree.parent(v));
    frontier.extend(neighbours(start));
    while set.len() < target && !frontier.is_empty() {
        let v = frontier.swap_remove(rng.gen_range(0..frontier.len()));
        if set.insert(v) {
            frontier.extend(neighbours(v).filter(|u| !set.contains(u)));
        }
    }
    set.into_iter().collect()
}

fn draw_capacity(rng: &mut impl Rng, model: CapacityModel, scaled_max: u64) -> Capacity {
    match model {
        CapacityModel::Uniform { min, max } => Capacity::Finite(rng.gen_range(min..=max)),
        CapacityModel::WithUnbounded {
            min,
            max,
            unbounded_fraction,
        } => {
            if rng.gen_bool(unbounded_fraction) {
                Capacity::Unbounded
            } else {
                Capacity::Finite(rng.gen_range(min..=max))
            }
        }
        CapacityModel::ScaledToLoad => Capacity::Finite(rng.gen_range(1..=scaled_max)),
    }
}

/// Deterministic function of `config` (including its seed).
pub fn random_instance(config: &GenConfig) -> Result<Instance> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n = rng.gen_range(config.tree_size.0..=config.tree_size.1);
    let tree = if config.shape == Shape::RootCrossingPaths && n >= 3 {
        let mut parents: Vec<VertexId> = vec![0; n];
        for (i, p) in parents.iter_mut().enumerate().skip(3) {
            *p = rng.gen_range(0..i);
        }
        Tree::from_parents(&parents, 0)?
    } else {
        random_tree(&mut rng, n)
    };

    let count = match config.subtree_count {
        SubtreeCount::Range(a, b) => rng.gen_range(a..=b),
        SubtreeCount::TreeMultiple(a, b) => rng.gen_range(a * n..=b * n),
    };

    let root_children = tree.children(tree.root()).to_vec();
    let mut subtrees = Vec::with_capacity(count);
    for _ in 0..count {
        let vertices = match config.shape {
            Shape::PathsOnly => {
                let u = rng.gen_range(0..n);
                let v = if n == 1 {
                    u
                } else {
                    let v = rng.gen_range(0..n - 1);
                    if v >= u {
                        v + 1
                    } else {
                        v
                    }
                };
                tree.path(u, v)
            }
            Shape::GeneralSubtrees => grown_subtree(&mut rng, &tree),
            Shape::DirectedPaths => directed_path(&mut rng, &tree),
            Shape::RootCrossingPaths => {
                if root_children.len() >= 2 && rng.gen_bool(0.5) {
                    let a = pick(&mut rng, &root_children);
                    let b = loop {
                        let b = pick(&mut rng, &root_children);
                        if b != a {
                            break b;
                        }
                    };
                    let x = pick(&mut rng, &descendants(&tree, a));
                    let y = pick(&mut rng, &descendants(&tree, b));
                    tree.path(x, y)
                } else {
                    directed_path(&mut rng, &tree)
                }
            }
        };
        let demand = rng.gen_range(config.demand.0..=config.demand.1);
        subtrees.push(Subtree::new(&tree, vertices, demand)?);
    }

    let scaled_max = if config.capacities == CapacityModel::ScaledToLoad {
        let all = Instance::new(
            tree.clone(),
            subtrees.clone(),
            CapacityVector::uniform(&tree, Capacity::Unbounded, Capacity::Unbounded),
        )?;
        let full = Solution::from_multiplicities(subtrees.iter().map(Subtree::demand).collect());
        let loads = load_vector(&all, &full)?;
        let positive: Vec<u64> = loads.iter().map(|(_, l)| l).filter(|&l| l > 0).collect();
        let mean = if positive.is_empty() {
            1
        } else {
            positive.iter().sum::<u64>().div_ceil(positive.len() as u64)
        };
        2 * mean.max(1)
    } else {
        1
    };
    let mut caps = CapacityVector::uniform(&tree, Capacity::Unbounded, Capacity::Unbounded);
    let objects: Vec<Object> = tree.objects().collect();
    for o in objects {
        caps.set(o, draw_capacity(&mut rng, config.capacities, scaled_max));
    }
    Instance::new(tree, subtrees, caps)
}

/// Undirected simple graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(VertexId, VertexId)>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidConfig("graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v || u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraphEdge { u, v, vertex_count });
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(SimpleGraph {
            vertex_count,
            edges: set,
        })
    }

    /// Each pair is an edge independently with probability `edge_probability`.
    pub fn random(seed: u64, vertex_count: usize, edge_probability: f64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..vertex_count {
            for v in u + 1..vertex_count {
                if rng.gen_bool(edge_probability) {
                    edges.push((u, v));
                }
            }
        }
        SimpleGraph::new(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }
}

/// Star whose leaves are the graph's edges, with one sub-star per graph vertex.
///
/// Leaf `i + 1` stands for the `i`-th edge in ascending order. The sub-star of
/// vertex `v` is the center plus the leaves of the edges at `v`, so two
/// sub-stars share an edge exactly when their vertices are adjacent. The
/// center is unbounded and every other object has capacity 1, making packings
/// correspond to independent sets. Isolated vertices give the bare center.
pub fn mis_to_star(graph: &SimpleGraph) -> Result<Instance> {
    let m = graph.edge_count();
    let tree = Tree::from_parents(&vec![0; m + 1], 0)?;
    let mut caps = CapacityVector::uniform(&tree, Capacity::Finite(1), Capacity::Finite(1));
    caps.set(Object::Vertex(0), Capacity::Unbounded);
    let edges: Vec<_> = graph.edges().collect();
    let sets = (0..graph.vertex_count()).map(|v| {
        let leaves = edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(i, _)| i + 1);
        (std::iter::once(0).chain(leaves).collect::<Vec<_>>(), 1)
    });
    Instance::from_vertex_sets(tree, sets, caps)
}

/// One unit of flow from `source` to `sink` per unit of `demand`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Commodity {
    pub source: VertexId,
    pub sink: VertexId,
    pub demand: u64,
}

/// Multi-commodity flow on a tree: each commodity becomes its tree path with
/// the commodity's demand, vertices are unbounded and `edge_caps[v]` bounds the
/// edge above `v` (the root entry is ignored).
pub fn mcf_to_instance(tree: Tree, commodities: &[Commodity], edge_caps: Vec<Capacity>) -> Result<Instance> {
    let vertex_caps = vec![Capacity::Unbounded; tree.vertex_count()];
    let caps = CapacityVector::new(&tree, vertex_caps, edge_caps)?;
    let subtrees = commodities
        .iter()
        .enumerate()
        .map(|(index, c)| {
            if c.source == c.sink && tree.contains(c.source) {
                return Err(Error::DegenerateCommodity {
                    index,
                    vertex: c.source,
                });
            }
            Subtree::path(&tree, c.source, c.sink, c.demand).map_err(|e| Error::InvalidSubtree {
                index,
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Instance::new(tree, subtrees, caps)
}

/// Maximum k-colorable subgraph of a chordal graph given by a subtree
/// representation: vertex capacity `k`, unbounded edges.
pub fn chordal_mkc_to_instance(tree: Tree, representation: Vec<Subtree>, k: u64) -> Result<Instance> {
    if k == 0 {
        return Err(Error::InvalidConfig("k must be positive".into()));
    }
    let caps = CapacityVector::uniform(&tree, Capacity::Finite(k), Capacity::Unbounded);
    Instance::new(tree, representation, caps)
}

/// Star with center 0 and leaves `1..=m`; subtrees are the whole star
/// followed by the paths `0-j`; the center has capacity `m`, everything else 1.
///
/// With input-order tie-breaking the greedy takes the star first and nothing
/// else fits, while the `m` paths together are feasible.
pub fn tightness_instance(m: usize) -> Result<Instance> {
    if m == 0 {
        return Err(Error::InvalidConfig("tightness instance needs m >= 1".into()));
    }
    let tree = Tree::from_parents(&vec![0; m + 1], 0)?;
    let mut caps = CapacityVector::uniform(&tree, Capacity::Finite(1), Capacity::Finite(1));
    caps.set(Object::Vertex(0), Capacity::Finite(m as u64));
    let sets = std::iter::once((0..=m).collect::<Vec<_>>()).chain((1..=m).map(|j| vec![0, j]));
    Instance::from_vertex_sets(tree, sets.map(|s| (s, 1)), caps)
}
