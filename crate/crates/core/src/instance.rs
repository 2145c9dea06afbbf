//! Subtrees, capacities, instances and load accounting.

use std::fmt;

use crate::error::{Error, Result};
use crate::tree::{Object, Tree, VertexId};

/// Capacity of a single object. `Unbounded` orders above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Capacity {
    Finite(u64),
    Unbounded,
}

impl Capacity {
    pub fn admits(self, load: u64) -> bool {
        match self {
            Capacity::Finite(k) => load <= k,
            Capacity::Unbounded => true,
        }
    }

    /// Remaining room after `load`, clamped at zero.
    pub fn residual(self, load: u64) -> Capacity {
        match self {
            Capacity::Finite(k) => Capacity::Finite(k.saturating_sub(load)),
            Capacity::Unbounded => Capacity::Unbounded,
        }
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Capacity::Finite(k) => Some(k),
            Capacity::Unbounded => None,
        }
    }

    /// `min(self, bound)` as an integer.
    pub fn cap(self, bound: u64) -> u64 {
        match self {
            Capacity::Finite(k) => k.min(bound),
            Capacity::Unbounded => bound,
        }
    }
}

impl From<u64> for Capacity {
    fn from(k: u64) -> Self {
        Capacity::Finite(k)
    }
}

impl fmt::Display for Capacity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Capacity::Finite(k) => write!(f, "{k}"),
            Capacity::Unbounded => f.write_str("unbounded"),
        }
    }
}

/// One capacity per object. Edge entries are indexed by child vertex; the
/// root slot does not name an edge and is held at `Unbounded`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapacityVector {
    vertex: Vec<Capacity>,
    edge: Vec<Capacity>,
}

impl CapacityVector {
    pub fn new(tree: &Tree, vertex: Vec<Capacity>, mut edge: Vec<Capacity>) -> Result<Self> {
        let n = tree.vertex_count();
        for len in [vertex.len(), edge.len()] {
            if len != n {
                return Err(Error::CapacityShape { expected: n, got: len });
            }
        }
        edge[tree.root()] = Capacity::Unbounded;
        Ok(CapacityVector { vertex, edge })
    }

    pub fn uniform(tree: &Tree, vertex: Capacity, edge: Capacity) -> Self {
        let n = tree.vertex_count();
        let mut caps = CapacityVector {
            vertex: vec![vertex; n],
            edge: vec![edge; n],
        };
        caps.edge[tree.root()] = Capacity::Unbounded;
        caps
    }

    pub fn get(&self, object: Object) -> Capacity {
        match object {
            Object::Vertex(v) => self.vertex[v],
            Object::Edge(v) => self.edge[v],
        }
    }

    pub fn vertex(&self, v: VertexId) -> Capacity {
        self.vertex[v]
    }

    pub fn edge(&self, child: VertexId) -> Capacity {
        self.edge[child]
    }

    pub fn set(&mut self, object: Object, capacity: Capacity) {
        match object {
            Object::Vertex(v) => self.vertex[v] = capacity,
            Object::Edge(v) => self.edge[v] = capacity,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex.len()
    }

    pub(crate) fn push_vertex(&mut self, vertex: Capacity, edge: Capacity) {
        self.vertex.push(vertex);
        self.edge.push(edge);
    }
}

/// A connected set of tree vertices with a demand (multiplicity).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subtree {
    vertices: Vec<VertexId>,
    root: VertexId,
    nonroot_leaves: usize,
    /// `Some((a, b))` when every vertex has degree at most two.
    endpoints: Option<(VertexId, VertexId)>,
    demand: u64,
}

impl Subtree {
    pub fn new(tree: &Tree, vertices: impl IntoIterator<Item = VertexId>, demand: u64) -> Result<Self> {
        let mut vertices: Vec<VertexId> = vertices.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.is_empty() {
            return Err(Error::EmptySubtree);
        }
        if demand == 0 {
            return Err(Error::ZeroDemand);
        }
        if let Some(&v) = vertices.iter().find(|&&v| !tree.contains(v)) {
            return Err(Error::VertexOutOfRange { vertex: v });
        }

        let index_of = |v: VertexId| vertices.binary_search(&v).ok();
        let mut in_children = vec![0usize; vertices.len()];
        let mut root = None;
        for &v in &vertices {
            match tree.parent(v).and_then(index_of) {
                Some(pi) => in_children[pi] += 1,
                None if root.is_none() => root = Some(v),
                None => return Err(Error::NotConnected),
            }
        }
        // exactly one member lacks an in-set parent, so the set is connected
        let root = root.expect("nonempty set has a topmost vertex");

        let mut nonroot_leaves = 0;
        let mut ends = Vec::new();
        let mut is_path = true;
        for (i, &v) in vertices.iter().enumerate() {
            let degree = in_children[i] + usize::from(v != root);
            if v != root && in_children[i] == 0 {
                nonroot_leaves += 1;
            }
            if degree > 2 {
                is_path = false;
            }
            if degree <= 1 {
                ends.push(v);
            }
        }
        let endpoints = match (is_path, ends.as_slice()) {
            (true, [v]) => Some((*v, *v)),
            (true, [a, b]) => Some((*a, *b)),
            _ => None,
        };

        Ok(Subtree {
            vertices,
            root,
            nonroot_leaves,
            endpoints,
            demand,
        })
    }

    /// The tree path between `u` and `v`.
    pub fn path(tree: &Tree, u: VertexId, v: VertexId, demand: u64) -> Result<Self> {
        for x in [u, v] {
            if !tree.contains(x) {
                return Err(Error::VertexOutOfRange { vertex: x });
            }
        }
        Subtree::new(tree, tree.path(u, v), demand)
    }

    /// Sorted vertex ids.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    /// Leaves of the subtree other than its root.
    pub fn nonroot_leaf_count(&self) -> usize {
        self.nonroot_leaves
    }

    pub fn demand(&self) -> u64 {
        self.demand
    }

    pub fn with_demand(&self, demand: u64) -> Result<Self> {
        if demand == 0 {
            return Err(Error::ZeroDemand);
        }
        Ok(Subtree { demand, ..self.clone() })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains(&self, object: Object) -> bool {
        match object {
            Object::Vertex(v) => self.contains_vertex(v),
            Object::Edge(v) => v != self.root && self.contains_vertex(v),
        }
    }

    /// Objects of the subtree in ascending `Object` order.
    pub fn objects(&self) -> impl Iterator<Item = Object> + '_ {
        let root = self.root;
        self.vertices.iter().map(|&v| Object::Vertex(v)).chain(
            self.vertices
                .iter()
                .filter(move |&&v| v != root)
                .map(|&v| Object::Edge(v)),
        )
    }

    pub fn is_path(&self) -> bool {
        self.endpoints.is_some()
    }

    /// Endpoints of a path subtree (equal for a single vertex).
    pub fn path_endpoints(&self) -> Option<(VertexId, VertexId)> {
        self.endpoints
    }

    /// A path whose root is one of its endpoints.
    pub fn is_directed_path(&self) -> bool {
        self.is_path() && self.nonroot_leaves <= 1
    }

    /// A path with `vertex` as an internal vertex.
    pub fn has_internal_vertex(&self, vertex: VertexId) -> bool {
        match self.endpoints {
            Some((a, b)) => a != vertex && b != vertex && self.contains_vertex(vertex),
            None => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    tree: Tree,
    subtrees: Vec<Subtree>,
    capacities: CapacityVector,
}

impl Instance {
    /// Validates that every subtree was derived against `tree`.
    pub fn new(tree: Tree, subtrees: Vec<Subtree>, capacities: CapacityVector) -> Result<Self> {
        if capacities.vertex_count() != tree.vertex_count() {
            return Err(Error::CapacityShape {
                expected: tree.vertex_count(),
                got: capacities.vertex_count(),
            });
        }
        for (index, s) in subtrees.iter().enumerate() {
            let wrap = |source| Error::InvalidSubtree {
                index,
                source: Box::new(source),
            };
            let fresh = Subtree::new(&tree, s.vertices.iter().copied(), s.demand).map_err(wrap)?;
            if &fresh != s {
                return Err(wrap(Error::NotConnected));
            }
        }
        Ok(Instance {
            tree,
            subtrees,
            capacities,
        })
    }

    /// Builds subtrees from `(vertex set, demand)` pairs.
    pub fn from_vertex_sets<I, V>(tree: Tree, sets: I, capacities: CapacityVector) -> Result<Self>
    where
        I: IntoIterator<Item = (V, u64)>,
        V: IntoIterator<Item = VertexId>,
    {
        let subtrees = sets
            .into_iter()
            .enumerate()
            .map(|(index, (vs, d))| {
                Subtree::new(&tree, vs, d).map_err(|e| Error::InvalidSubtree {
                    index,
                    source: Box::new(e),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Instance::new(tree, subtrees, capacities)
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn subtrees(&self) -> &[Subtree] {
        &self.subtrees
    }

    pub fn subtree(&self, index: usize) -> Result<&Subtree> {
        self.subtrees.get(index).ok_or(Error::IndexOutOfRange {
            index,
            count: self.subtrees.len(),
        })
    }

    pub fn capacities(&self) -> &CapacityVector {
        &self.capacities
    }

    pub fn len(&self) -> usize {
        self.subtrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subtrees.is_empty()
    }

    /// Largest number of non-root leaves over all subtrees (0 when there are none).
    pub fn max_nonroot_leaves(&self) -> usize {
        self.subtrees.iter().map(Subtree::nonroot_leaf_count).max().unwrap_or(0)
    }

    /// The greedy's guaranteed approximation factor, `max(M, 1)`.
    pub fn approximation_factor(&self) -> u64 {
        self.max_nonroot_leaves().max(1) as u64
    }

    pub fn total_demand(&self) -> u64 {
        self.subtrees.iter().map(Subtree::demand).sum()
    }

    /// Same instance with every subtree replaced by `demand` unit copies,
    /// adjacent and in input order. Also returns the source index of each copy.
    pub fn expanded(&self) -> (Instance, Vec<usize>) {
        let mut subtrees = Vec::new();
        let mut source = Vec::new();
        for (i, s) in self.subtrees.iter().enumerate() {
            for _ in 0..s.demand {
                subtrees.push(Subtree { demand: 1, ..s.clone() });
                source.push(i);
            }
        }
        let instance = Instance {
            tree: self.tree.clone(),
            subtrees,
            capacities: self.capacities.clone(),
        };
        (instance, source)
    }

    pub fn with_capacities(&self, capacities: CapacityVector) -> Result<Instance> {
        Instance::new(self.tree.clone(), self.subtrees.clone(), capacities)
    }

    /// Sub-instance keeping only the listed subtrees, in the given order.
    pub fn restricted_to(&self, indices: &[usize]) -> Result<Instance> {
        let subtrees = indices
            .iter()
            .map(|&i| self.subtree(i).cloned())
            .collect::<Result<Vec<_>>>()?;
        Ok(Instance {
            tree: self.tree.clone(),
            subtrees,
            capacities: self.capacities.clone(),
        })
    }

    pub(crate) fn from_parts_unchecked(tree: Tree, subtrees: Vec<Subtree>, capacities: CapacityVector) -> Self {
        Instance {
            tree,
            subtrees,
            capacities,
        }
    }
}

/// Selected multiplicity per subtree index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Solution {
    multiplicity: Vec<u64>,
}

impl Solution {
    pub fn empty(subtree_count: usize) -> Self {
        Solution {
            multiplicity: vec![0; subtree_count],
        }
    }

    pub fn from_multiplicities(multiplicity: Vec<u64>) -> Self {
        Solution { multiplicity }
    }

    /// Selects each listed index once.
    pub fn from_indices(subtree_count: usize, indices: &[usize]) -> Self {
        let mut s = Solution::empty(subtree_count);
        for &i in indices {
            s.multiplicity[i] += 1;
        }
        s
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicity
    }

    pub fn get(&self, index: usize) -> u64 {
        self.multiplicity.get(index).copied().unwrap_or(0)
    }

    pub fn set(&mut self, index: usize, multiplicity: u64) {
        self.multiplicity[index] = multiplicity;
    }

    pub fn add(&mut self, index: usize, multiplicity: u64) {
        self.multiplicity[index] += multiplicity;
    }

    pub fn total(&self) -> u64 {
        self.multiplicity.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.multiplicity.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicity.is_empty()
    }

    /// Indices with nonzero multiplicity.
    pub fn selected(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.multiplicity
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| (i, m))
    }

    /// Checks the length and that no multiplicity exceeds its subtree's demand.
    pub fn validate(&self, instance: &Instance) -> Result<()> {
        if self.multiplicity.len() != instance.len() {
            return Err(Error::SelectionLength {
                expected: instance.len(),
                got: self.multiplicity.len(),
            });
        }
        for (index, (&m, s)) in self.multiplicity.iter().zip(instance.subtrees()).enumerate() {
            if m > s.demand() {
                return Err(Error::DemandExceeded {
                    index,
                    multiplicity: m,
                    demand: s.demand(),
                });
            }
        }
        Ok(())
    }
}

/// Load per object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loads {
    root: VertexId,
    vertex: Vec<u64>,
    edge: Vec<u64>,
}

impl Loads {
    pub fn zero(tree: &Tree) -> Self {
        Loads {
            root: tree.root(),
            vertex: vec![0; tree.vertex_count()],
            edge: vec![0; tree.vertex_count()],
        }
    }

    pub fn get(&self, object: Object) -> u64 {
        match object {
            Object::Vertex(v) => self.vertex[v],
            Object::Edge(v) => self.edge[v],
        }
    }

    pub fn add(&mut self, subtree: &Subtree, multiplicity: u64) {
        for &v in subtree.vertices() {
            self.vertex[v] += multiplicity;
            if v != subtree.root() {
                self.edge[v] += multiplicity;
            }
        }
    }

    pub fn remove(&mut self, subtree: &Subtree, multiplicity: u64) {
        for &v in subtree.vertices() {
            self.vertex[v] -= multiplicity;
            if v != subtree.root() {
                self.edge[v] -= multiplicity;
            }
        }
    }

    /// Maximum vertex load, `L_V`.
    pub fn max_vertex(&self) -> u64 {
        self.vertex.iter().copied().max().unwrap_or(0)
    }

    /// Maximum edge load, `L_E` (0 for a single-vertex tree).
    pub fn max_edge(&self) -> u64 {
        self.iter()
            .filter(|(o, _)| matches!(o, Object::Edge(_)))
            .map(|(_, l)| l)
            .max()
            .unwrap_or(0)
    }

    /// `(object, load)` for every object, in ascending object order.
    pub fn iter(&self) -> impl Iterator<Item = (Object, u64)> + '_ {
        let n = self.vertex.len();
        let root = self.root;
        (0..n).map(|v| (Object::Vertex(v), self.vertex[v])).chain(
            (0..n)
                .filter(move |&v| v != root)
                .map(|v| (Object::Edge(v), self.edge[v])),
        )
    }

    /// Smallest residual capacity over the objects of `subtree`.
    pub fn residual(&self, capacities: &CapacityVector, subtree: &Subtree) -> Capacity {
        subtree
            .objects()
            .map(|o| capacities.get(o).residual(self.get(o)))
            .min()
            .unwrap_or(Capacity::Unbounded)
    }

    /// First object of `subtree` (ascending order) with no residual capacity.
    pub fn first_saturated(&self, capacities: &CapacityVector, subtree: &Subtree) -> Option<Object> {
        subtree
            .objects()
            .find(|&o| capacities.get(o).residual(self.get(o)) == Capacity::Finite(0))
    }
}

pub fn load_vector(instance: &Instance, selection: &Solution) -> Result<Loads> {
    selection.validate(instance)?;
    let mut loads = Loads::zero(instance.tree());
    for (i, m) in selection.selected() {
        loads.add(&instance.subtrees()[i], m);
    }
    Ok(loads)
}

pub fn is_feasible(instance: &Instance, selection: &Solution) -> Result<bool> {
    let loads = load_vector(instance, selection)?;
    let feasible = loads.iter().all(|(o, l)| instance.capacities().get(o).admits(l));
    Ok(feasible)
}

/// Minimum of `k_o - load(o)` over the objects of subtree `index`; `Unbounded`
/// when every object of the subtree is unbounded.
pub fn residual_min_capacity(instance: &Instance, selection: &Solution, index: usize) -> Result<Capacity> {
    let subtree = instance.subtree(index)?;
    let loads = load_vector(instance, selection)?;
    Ok(loads.residual(instance.capacities(), subtree))
}

/// Objects with load above capacity and their excess, in ascending object order.
pub fn overloaded_objects(instance: &Instance, selection: &Solution) -> Result<Vec<(Object, u64)>> {
    let loads = load_vector(instance, selection)?;
    let excess = loads
        .iter()
        .filter_map(|(o, l)| match instance.capacities().get(o) {
            Capacity::Finite(k) if l > k => Some((o, l - k)),
            _ => None,
        })
        .collect();
    Ok(excess)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Tree {
        Tree::from_parents(&vec![0; leaves + 1], 0).unwrap()
    }

    fn star_instance(center_cap: u64, sets: Vec<Vec<usize>>) -> Instance {
        let t = star(3);
        let mut caps = CapacityVector::uniform(&t, Capacity::Unbounded, Capacity::Unbounded);
        caps.set(Object::Vertex(0), Capacity::Finite(center_cap));
        Instance::from_vertex_sets(t, sets.into_iter().map(|s| (s, 1)), caps).unwrap()
    }

    #[test]
    fn make_subtree_on_star() {
        let t = star(3);
        let whole = Subtree::new(&t, [0, 1, 2, 3], 1).unwrap();
        assert_eq!(whole.root(), 0);
        assert_eq!(whole.nonroot_leaf_count(), 3);
        assert!(!whole.is_path());

        let edge = Subtree::new(&t, [0, 1], 1).unwrap();
        assert_eq!(edge.root(), 0);
        assert_eq!(edge.nonroot_leaf_count(), 1);
        assert!(edge.is_directed_path());

        assert_eq!(Subtree::new(&t, [1, 2], 1).unwrap_err(), Error::NotConnected);
        assert_eq!(Subtree::new(&t, [], 1).unwrap_err(), Error::EmptySubtree);
        assert_eq!(Subtree::new(&t, [0], 0).unwrap_err(), Error::ZeroDemand);
        assert_eq!(
            Subtree::new(&t, [0, 9], 1).unwrap_err(),
            Error::VertexOutOfRange { vertex: 9 }
        );
    }

    #[test]
    fn leaf_counts() {
        // 0 - 1 - 2 - 3 chain
        let t = Tree::from_parents(&[0, 0, 1, 2], 0).unwrap();
        let single = Subtree::new(&t, [2], 1).unwrap();
        assert_eq!(single.nonroot_leaf_count(), 0);
        assert_eq!(single.path_endpoints(), Some((2, 2)));
        let chain = Subtree::new(&t, [1, 2, 3], 1).unwrap();
        assert_eq!(chain.nonroot_leaf_count(), 1);
        assert_eq!(chain.root(), 1);
        assert_eq!(chain.edge_count(), 2);
        assert_eq!(chain.path_endpoints(), Some((1, 3)));

        let t = star(3);
        let crossing = Subtree::new(&t, [1, 0, 2], 1).unwrap();
        assert_eq!(crossing.nonroot_leaf_count(), 2);
        assert!(crossing.has_internal_vertex(0));
        assert!(!crossing.is_directed_path());
    }

    #[test]
    fn subtree_objects_are_sorted() {
        let t = star(3);
        let s = Subtree::new(&t, [2, 0, 1], 1).unwrap();
        let objects: Vec<_> = s.objects().collect();
        assert_eq!(
            objects,
            vec![
                Object::Vertex(0),
                Object::Vertex(1),
                Object::Vertex(2),
                Object::Edge(1),
                Object::Edge(2)
            ]
        );
        assert!(s.contains(Object::Edge(2)));
        assert!(!s.contains(Object::Edge(3)));
    }

    #[test]
    fn loads_on_star() {
        let inst = star_instance(2, vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
        let empty = Solution::empty(3);
        let loads = load_vector(&inst, &empty).unwrap();
        assert!(loads.iter().all(|(_, l)| l == 0));
        assert!(is_feasible(&inst, &empty).unwrap());

        let two = Solution::from_indices(3, &[0, 1]);
        let loads = load_vector(&inst, &two).unwrap();
        assert_eq!(loads.get(Object::Vertex(0)), 2);
        assert_eq!(loads.get(Object::Edge(1)), 1);
        assert_eq!(loads.get(Object::Edge(2)), 1);
        assert_eq!(loads.get(Object::Vertex(3)), 0);
        assert_eq!(loads.max_vertex(), 2);
        assert_eq!(loads.max_edge(), 1);
        assert!(is_feasible(&inst, &two).unwrap());

        let three = Solution::from_indices(3, &[0, 1, 2]);
        assert!(!is_feasible(&inst, &three).unwrap());
        assert_eq!(overloaded_objects(&inst, &three).unwrap(), vec![(Object::Vertex(0), 1)]);
    }

    #[test]
    fn multiplicity_scales_loads() {
        let t = star(3);
        let caps = CapacityVector::uniform(&t, Capacity::Unbounded, Capacity::Unbounded);
        let inst = Instance::from_vertex_sets(t, [(vec![0, 1], 5)], caps).unwrap();
        let sel = Solution::from_multiplicities(vec![5]);
        let loads = load_vector(&inst, &sel).unwrap();
        assert_eq!(loads.get(Object::Vertex(0)), 5);
        assert_eq!(loads.get(Object::Edge(1)), 5);
    }

    #[test]
    fn selection_errors() {
        let inst = star_instance(2, vec![vec![0, 1]]);
        assert_eq!(
            load_vector(&inst, &Solution::empty(2)).unwrap_err(),
            Error::SelectionLength { expected: 1, got: 2 }
        );
        assert_eq!(
            load_vector(&inst, &Solution::from_multiplicities(vec![2])).unwrap_err(),
            Error::DemandExceeded {
                index: 0,
                multiplicity: 2,
                demand: 1
            }
        );
        assert!(matches!(
            residual_min_capacity(&inst, &Solution::empty(1), 3),
            Err(Error::IndexOutOfRange { index: 3, count: 1 })
        ));
    }

    #[test]
    fn zero_capacity_blocks() {
        let t = star(3);
        let mut caps = CapacityVector::uniform(&t, Capacity::Finite(4), Capacity::Finite(4));
        caps.set(Object::Edge(1), Capacity::Finite(0));
        let inst = Instance::from_vertex_sets(t, [(vec![0, 1], 1)], caps).unwrap();
        let sel = Solution::from_indices(1, &[0]);
        assert!(!is_feasible(&inst, &sel).unwrap());
        assert_eq!(overloaded_objects(&inst, &sel).unwrap(), vec![(Object::Edge(1), 1)]);
    }

    #[test]
    fn demand_excess_on_every_object() {
        let t = star(3);
        let caps = CapacityVector::uniform(&t, Capacity::Finite(1), Capacity::Finite(1));
        let inst = Instance::from_vertex_sets(t, [(vec![0, 1], 3)], caps).unwrap();
        let sel = Solution::from_multiplicities(vec![3]);
        assert_eq!(
            overloaded_objects(&inst, &sel).unwrap(),
            vec![(Object::Vertex(0), 2), (Object::Vertex(1), 2), (Object::Edge(1), 2)]
        );
    }

    #[test]
    fn residuals() {
        let t = star(3);
        let mut caps = CapacityVector::uniform(&t, Capacity::Finite(9), Capacity::Finite(9));
        caps.set(Object::Vertex(0), Capacity::Finite(3));
        caps.set(Object::Edge(1), Capacity::Finite(2));
        caps.set(Object::Vertex(1), Capacity::Finite(5));
        let inst = Instance::from_vertex_sets(t.clone(), [(vec![0, 1], 1), (vec![0, 2], 3)], caps).unwrap();
        assert_eq!(
            residual_min_capacity(&inst, &Solution::empty(2), 0).unwrap(),
            Capacity::Finite(2)
        );
        let sel = Solution::from_multiplicities(vec![0, 3]);
        assert_eq!(residual_min_capacity(&inst, &sel, 0).unwrap(), Capacity::Finite(0));

        let free = CapacityVector::uniform(&t, Capacity::Unbounded, Capacity::Unbounded);
        let inst = Instance::from_vertex_sets(t, [(vec![0, 1], 1)], free).unwrap();
        assert_eq!(
            residual_min_capacity(&inst, &Solution::empty(1), 0).unwrap(),
            Capacity::Unbounded
        );
    }

    #[test]
    fn instance_rejects_foreign_subtree() {
        let small = star(1);
        let big = star(3);
        let s = Subtree::new(&big, [0, 3], 1).unwrap();
        let caps = CapacityVector::uniform(&small, Capacity::Unbounded, Capacity::Unbounded);
        let err = Instance::new(small, vec![s], caps).unwrap_err();
        assert!(matches!(err, Error::InvalidSubtree { index: 0, .. }));
    }

    #[test]
    fn max_leaves_and_factor() {
        let t = star(3);
        let caps = CapacityVector::uniform(&t, Capacity::Unbounded, Capacity::Unbounded);
        let singles = Instance::from_vertex_sets(t.clone(), [(vec![1], 1), (vec![0], 1)], caps.clone()).unwrap();
        assert_eq!(singles.max_nonroot_leaves(), 0);
        assert_eq!(singles.approximation_factor(), 1);
        let whole = Instance::from_vertex_sets(t, [(vec![0, 1, 2, 3], 2)], caps).unwrap();
        assert_eq!(whole.max_nonroot_leaves(), 3);
        let (expanded, source) = whole.expanded();
        assert_eq!(expanded.len(), 2);
        assert_eq!(source, vec![0, 0]);
        assert!(expanded.subtrees().iter().all(|s| s.demand() == 1));
    }
}
