//! Rooted trees with integer vertex ids.
//!
//! Objects of a tree are its vertices and its edges. An edge is named by its
//! child endpoint, so `Object::Edge(v)` is the edge between `v` and its parent
//! and the root never names an edge.

use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// A vertex or an edge of the host tree.
///
/// The derived order puts every vertex before every edge, each group sorted by id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Object {
    Vertex(VertexId),
    /// Edge to the parent of the given child vertex.
    Edge(VertexId),
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Vertex(v) => write!(f, "vertex {v}"),
            Object::Edge(v) => write!(f, "edge {v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    root: VertexId,
    parent: Vec<VertexId>,
    children: Vec<Vec<VertexId>>,
    depth: Vec<usize>,
}

impl Tree {
    /// Builds a tree from a parent list where `parents[v]` is the parent of `v`
    /// and the root maps to itself. Children are kept in ascending id order.
    pub fn from_parents(parents: &[VertexId], root: VertexId) -> Result<Tree> {
        let n = parents.len();
        if n == 0 {
            return Err(Error::EmptyTree);
        }
        if root >= n {
            return Err(Error::RootOutOfRange { root, vertex_count: n });
        }
        if parents[root] != root {
            return Err(Error::RootHasParent {
                root,
                parent: parents[root],
            });
        }
        for (v, &p) in parents.iter().enumerate() {
            if p >= n {
                return Err(Error::ParentOutOfRange { vertex: v, parent: p });
            }
            if p == v && v != root {
                return Err(Error::DisconnectedVertex { vertex: v });
            }
        }

        // 0 = unseen, 1 = on the current walk, 2 = known to reach the root
        let mut state = vec![0u8; n];
        let mut depth = vec![0usize; n];
        state[root] = 2;
        let mut walk = Vec::new();
        for start in 0..n {
            let mut v = start;
            while state[v] == 0 {
                state[v] = 1;
                walk.push(v);
                v = parents[v];
            }
            if state[v] == 1 {
                return Err(Error::CycleDetected { vertex: v });
            }
            let mut d = depth[v];
            while let Some(u) = walk.pop() {
                d += 1;
                depth[u] = d;
                state[u] = 2;
            }
        }

        let mut children = vec![Vec::new(); n];
        for (v, &p) in parents.iter().enumerate() {
            if v != root {
                children[p].push(v);
            }
        }

        Ok(Tree {
            root,
            parent: parents.to_vec(),
            children,
            depth,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn edge_count(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    /// Parent list with the root mapping to itself.
    pub fn parents(&self) -> &[VertexId] {
        &self.parent
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        (v != self.root).then(|| self.parent[v])
    }

    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[v]
    }

    pub fn depth(&self, v: VertexId) -> usize {
        self.depth[v]
    }

    /// A vertex without children. A root with a single child is not a leaf here.
    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.children[v].is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v < self.vertex_count()
    }

    /// All objects: every vertex, then every edge, both by ascending id.
    pub fn objects(&self) -> impl Iterator<Item = Object> + '_ {
        let n = self.vertex_count();
        (0..n)
            .map(Object::Vertex)
            .chain((0..n).filter(move |&v| v != self.root).map(Object::Edge))
    }

    pub fn object_count(&self) -> usize {
        2 * self.vertex_count() - 1
    }

    /// Post-order with children visited by ascending id.
    pub fn post_order(&self) -> Vec<VertexId> {
        let mut order = Vec::with_capacity(self.vertex_count());
        let mut stack = vec![(self.root, 0usize)];
        while let Some((v, next)) = stack.pop() {
            if let Some(&c) = self.children[v].get(next) {
                stack.push((v, next + 1));
                stack.push((c, 0));
            } else {
                order.push(v);
            }
        }
        order
    }

    /// True when `ancestor` lies on the path from `v` to the root (inclusive).
    pub fn is_ancestor(&self, ancestor: VertexId, mut v: VertexId) -> bool {
        while self.depth[v] > self.depth[ancestor] {
            v = self.parent[v];
        }
        v == ancestor
    }

    pub fn lca(&self, mut u: VertexId, mut v: VertexId) -> VertexId {
        while self.depth[u] > self.depth[v] {
            u = self.parent[u];
        }
        while self.depth[v] > self.depth[u] {
            v = self.parent[v];
        }
        while u != v {
            u = self.parent[u];
            v = self.parent[v];
        }
        u
    }

    /// Vertices of the unique `u`–`v` path, in order from `u` to `v`.
    pub fn path(&self, u: VertexId, v: VertexId) -> Vec<VertexId> {
        let top = self.lca(u, v);
        let mut up = Vec::new();
        let mut x = u;
        while x != top {
            up.push(x);
            x = self.parent[x];
        }
        up.push(top);
        let mut down = Vec::new();
        let mut y = v;
        while y != top {
            down.push(y);
            y = self.parent[y];
        }
        up.extend(down.into_iter().rev());
        up
    }

    /// Leaves of the tree that are descendants of `v` (including `v` itself when it is a leaf).
    pub fn leaf_descendants(&self, v: VertexId) -> Vec<VertexId> {
        let mut leaves = Vec::new();
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            if self.is_leaf(x) {
                leaves.push(x);
            } else {
                stack.extend(self.children[x].iter().rev());
            }
        }
        leaves.sort_unstable();
        leaves
    }

    /// Returns a copy of the tree with a new leaf attached below `u`; the new
    /// vertex gets the next free id.
    pub fn with_pendant_leaf(&self, u: VertexId) -> (Tree, VertexId) {
        let mut tree = self.clone();
        let w = tree.parent.len();
        tree.parent.push(u);
        tree.children.push(Vec::new());
        tree.children[u].push(w);
        tree.depth.push(self.depth[u] + 1);
        (tree, w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let t = Tree::from_parents(&[0], 0).unwrap();
        assert_eq!(t.vertex_count(), 1);
        assert_eq!(t.edge_count(), 0);
        assert_eq!(t.objects().count(), 1);
        assert_eq!(t.post_order(), vec![0]);
    }

    #[test]
    fn star() {
        let t = Tree::from_parents(&[0, 0, 0, 0], 0).unwrap();
        assert_eq!(t.vertex_count(), 4);
        assert_eq!(t.edge_count(), 3);
        assert_eq!(t.children(0), &[1, 2, 3]);
        assert_eq!(t.post_order(), vec![1, 2, 3, 0]);
        assert_eq!(t.leaf_descendants(0), vec![1, 2, 3]);
    }

    #[test]
    fn cycle_is_rejected() {
        let err = Tree::from_parents(&[0, 2, 1], 0).unwrap_err();
        assert!(matches!(err, Error::CycleDetected { .. }), "{err:?}");
    }

    #[test]
    fn malformed_parent_lists() {
        assert_eq!(
            Tree::from_parents(&[1, 0], 0).unwrap_err(),
            Error::RootHasParent { root: 0, parent: 1 }
        );
        assert_eq!(
            Tree::from_parents(&[0, 1], 0).unwrap_err(),
            Error::DisconnectedVertex { vertex: 1 }
        );
        assert_eq!(
            Tree::from_parents(&[0, 5], 0).unwrap_err(),
            Error::ParentOutOfRange { vertex: 1, parent: 5 }
        );
        assert_eq!(Tree::from_parents(&[], 0).unwrap_err(), Error::EmptyTree);
    }

    #[test]
    fn paths_and_ancestry() {
        //      0
        //     / \
        //    1   2
        //   / \    \
        //  3   4    5
        let t = Tree::from_parents(&[0, 0, 0, 1, 1, 2], 0).unwrap();
        assert_eq!(t.path(3, 5), vec![3, 1, 0, 2, 5]);
        assert_eq!(t.path(4, 1), vec![4, 1]);
        assert_eq!(t.path(2, 2), vec![2]);
        assert_eq!(t.lca(3, 4), 1);
        assert!(t.is_ancestor(0, 5));
        assert!(t.is_ancestor(4, 4));
        assert!(!t.is_ancestor(1, 5));
        assert_eq!(t.post_order(), vec![3, 4, 1, 5, 2, 0]);
        assert_eq!(t.leaf_descendants(1), vec![3, 4]);
    }

    #[test]
    fn non_zero_root() {
        let t = Tree::from_parents(&[1, 1, 1], 1).unwrap();
        assert_eq!(t.root(), 1);
        assert_eq!(t.parent(1), None);
        assert_eq!(t.parent(2), Some(1));
        let objects: Vec<_> = t.objects().collect();
        assert_eq!(
            objects,
            vec![
                Object::Vertex(0),
                Object::Vertex(1),
                Object::Vertex(2),
                Object::Edge(0),
                Object::Edge(2)
            ]
        );
    }

    #[test]
    fn pendant_leaf() {
        let t = Tree::from_parents(&[0, 0], 0).unwrap();
        let (t2, w) = t.with_pendant_leaf(0);
        assert_eq!(w, 2);
        assert_eq!(t2.children(0), &[1, 2]);
        assert_eq!(t2, Tree::from_parents(&[0, 0, 0], 0).unwrap());
    }
}
