//! Bottom-up greedy packing.
//!
//! Subtrees are visited grouped by their root, with roots taken in a post-order
//! of the host tree. Each subtree is added with multiplicity
//! `min(demand, c)` where `c` is the smallest residual capacity over its
//! objects, so compact demands cost one visit regardless of their size.
//! The result is within a factor `max(M, 1)` of the optimum, where `M` is the
//! largest number of non-root leaves of a subtree.

use crate::error::{Error, Result};
use crate::instance::{Capacity, Instance, Loads, Solution};
use crate::tree::{Object, VertexId};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum VertexTraversal {
    /// Post-order with children visited by ascending id.
    #[default]
    PostOrderById,
    /// Explicit vertex order; must list every vertex after all of its descendants.
    Custom(Vec<VertexId>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum SameRootOrder {
    #[default]
    InputOrder,
    /// Fewer non-root leaves first, input order among equals.
    FewestNonRootLeavesFirst,
    /// Ranks subtrees by their position in a permutation of all subtree indices.
    Explicit(Vec<usize>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrderPolicy {
    pub vertex_traversal: VertexTraversal,
    pub same_root_order: SameRootOrder,
}

impl OrderPolicy {
    pub fn new(vertex_traversal: VertexTraversal, same_root_order: SameRootOrder) -> Self {
        OrderPolicy {
            vertex_traversal,
            same_root_order,
        }
    }

    pub fn fewest_leaves_first() -> Self {
        OrderPolicy::new(VertexTraversal::PostOrderById, SameRootOrder::FewestNonRootLeavesFirst)
    }

    pub fn explicit(permutation: Vec<usize>) -> Self {
        OrderPolicy::new(VertexTraversal::PostOrderById, SameRootOrder::Explicit(permutation))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    Accepted(u64),
    /// Not added; the object had no residual capacity at decision time.
    Rejected(Object),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyTrace {
    pub visit_order: Vec<usize>,
    /// Indexed by subtree index.
    pub decisions: Vec<Decision>,
}

impl GreedyTrace {
    /// The solution the recorded decisions describe.
    pub fn replay(&self) -> Solution {
        let mut s = Solution::empty(self.decisions.len());
        for (i, d) in self.decisions.iter().enumerate() {
            if let Decision::Accepted(m) = d {
                s.set(i, *m);
            }
        }
        s
    }
}

fn vertex_order(instance: &Instance, traversal: &VertexTraversal) -> Result<Vec<VertexId>> {
    let tree = instance.tree();
    let n = tree.vertex_count();
    match traversal {
        VertexTraversal::PostOrderById => Ok(tree.post_order()),
        VertexTraversal::Custom(order) => {
            let not_post = |reason: String| Error::NotPostOrder { reason };
            if order.len() != n {
                return Err(not_post(format!("{} vertices listed, tree has {n}", order.len())));
            }
            let mut position = vec![usize::MAX; n];
            for (i, &v) in order.iter().enumerate() {
                if v >= n {
                    return Err(not_post(format!("vertex {v} is not in the tree")));
                }
                if position[v] != usize::MAX {
                    return Err(not_post(format!("vertex {v} listed twice")));
                }
                position[v] = i;
            }
            for v in 0..n {
                if let Some(p) = tree.parent(v) {
                    if position[v] > position[p] {
                        return Err(not_post(format!("vertex {v} comes after its parent {p}")));
                    }
                }
            }
            Ok(order.clone())
        }
    }
}

/// Processing order of subtree indices under `policy`.
pub fn order_subtrees(instance: &Instance, policy: &OrderPolicy) -> Result<Vec<usize>> {
    let vertices = vertex_order(instance, &policy.vertex_traversal)?;
    let n = instance.len();

    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); instance.tree().vertex_count()];
    for (i, s) in instance.subtrees().iter().enumerate() {
        by_root[s.root()].push(i);
    }

    match &policy.same_root_order {
        SameRootOrder::InputOrder => {}
        SameRootOrder::FewestNonRootLeavesFirst => {
            let subtrees = instance.subtrees();
            for group in &mut by_root {
                // stable sort keeps input order among equal leaf counts
                group.sort_by_key(|&i| subtrees[i].nonroot_leaf_count());
            }
        }
        SameRootOrder::Explicit(permutation) => {
            if permutation.len() != n {
                return Err(Error::NotAPermutation { count: n });
            }
            let mut rank = vec![usize::MAX; n];
            for (r, &i) in permutation.iter().enumerate() {
                if i >= n || rank[i] != usize::MAX {
                    return Err(Error::NotAPermutation { count: n });
                }
                rank[i] = r;
            }
            for group in &mut by_root {
                group.sort_by_key(|&i| rank[i]);
            }
        }
    }

    Ok(vertices
        .into_iter()
        .flat_map(|v| std::mem::take(&mut by_root[v]))
        .collect())
}

/// Runs the bottom-up greedy and returns the packing with its decision trace.
pub fn bottom_up_greedy(instance: &Instance, policy: &OrderPolicy) -> Result<(Solution, GreedyTrace)> {
    let order = order_subtrees(instance, policy)?;
    let caps = instance.capacities();
    let mut loads = Loads::zero(instance.tree());
    let mut solution = Solution::empty(instance.len());
    let mut decisions = vec![Decision::Accepted(0); instance.len()];

    for &i in &order {
        let subtree = &instance.subtrees()[i];
        let room = match loads.residual(caps, subtree) {
            Capacity::Finite(c) => c,
            Capacity::Unbounded => u64::MAX,
        };
        let m = subtree.demand().min(room);
        if m == 0 {
            let blocking = loads
                .first_saturated(caps, subtree)
                .expect("zero residual implies a saturated object");
            decisions[i] = Decision::Rejected(blocking);
        } else {
            loads.add(subtree, m);
            solution.set(i, m);
            decisions[i] = Decision::Accepted(m);
        }
    }

    Ok((
        solution,
        GreedyTrace {
            visit_order: order,
            decisions,
        },
    ))
}

/// True when no subtree below its demand can take one more copy.
pub fn is_maximal(instance: &Instance, solution: &Solution) -> Result<bool> {
    let loads = crate::instance::load_vector(instance, solution)?;
    let caps = instance.capacities();
    Ok(instance
        .subtrees()
        .iter()
        .enumerate()
        .filter(|(i, s)| solution.get(*i) < s.demand())
        .all(|(_, s)| s.objects().any(|o| !caps.get(o).admits(loads.get(o) + 1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{is_feasible, CapacityVector, Subtree};
    use crate::tree::Tree;

    fn path_tree() -> Tree {
        // 0 - 1 - 2, rooted at 0
        Tree::from_parents(&[0, 0, 1], 0).unwrap()
    }

    fn unbounded(tree: &Tree) -> CapacityVector {
        CapacityVector::uniform(tree, Capacity::Unbounded, Capacity::Unbounded)
    }

    #[test]
    fn post_order_on_a_path() {
        let t = path_tree();
        let caps = unbounded(&t);
        let inst = Instance::from_vertex_sets(t, [(vec![2], 1), (vec![1, 2], 1), (vec![0, 1], 1)], caps).unwrap();
        // rooted at 2, at 1, at 0 respectively
        let order = order_subtrees(&inst, &OrderPolicy::default()).unwrap();
        assert_eq!(order, vec![0, 1, 2]);

        let reversed = Instance::from_vertex_sets(
            inst.tree().clone(),
            [(vec![0, 1], 1), (vec![1, 2], 1), (vec![2], 1)],
            inst.capacities().clone(),
        )
        .unwrap();
        assert_eq!(
            order_subtrees(&reversed, &OrderPolicy::default()).unwrap(),
            vec![2, 1, 0]
        );
    }

    #[test]
    fn fewest_leaves_first() {
        let t = Tree::from_parents(&[0, 0, 0, 0], 0).unwrap();
        let caps = unbounded(&t);
        let inst = Instance::from_vertex_sets(t, [(vec![0, 1, 2, 3], 1), (vec![0, 1], 1)], caps).unwrap();
        assert_eq!(order_subtrees(&inst, &OrderPolicy::default()).unwrap(), vec![0, 1]);
        assert_eq!(
            order_subtrees(&inst, &OrderPolicy::fewest_leaves_first()).unwrap(),
            vec![1, 0]
        );
    }

    #[test]
    fn singleton_and_empty() {
        let t = path_tree();
        let caps = unbounded(&t);
        let one = Instance::from_vertex_sets(t.clone(), [(vec![1], 1)], caps.clone()).unwrap();
        assert_eq!(order_subtrees(&one, &OrderPolicy::default()).unwrap(), vec![0]);

        let none = Instance::new(t, vec![], caps).unwrap();
        let (sol, trace) = bottom_up_greedy(&none, &OrderPolicy::default()).unwrap();
        assert_eq!(sol.total(), 0);
        assert!(trace.visit_order.is_empty());
    }

    #[test]
    fn invalid_policies() {
        let t = path_tree();
        let caps = unbounded(&t);
        let inst = Instance::from_vertex_sets(t, [(vec![1], 1), (vec![2], 1)], caps).unwrap();
        let bad = OrderPolicy::new(VertexTraversal::Custom(vec![0, 1, 2]), SameRootOrder::InputOrder);
        assert!(matches!(order_subtrees(&inst, &bad), Err(Error::NotPostOrder { .. })));
        let short = OrderPolicy::new(VertexTraversal::Custom(vec![2, 1]), SameRootOrder::InputOrder);
        assert!(matches!(order_subtrees(&inst, &short), Err(Error::NotPostOrder { .. })));
        let ok = OrderPolicy::new(VertexTraversal::Custom(vec![2, 1, 0]), SameRootOrder::InputOrder);
        assert!(order_subtrees(&inst, &ok).is_ok());
        for perm in [vec![0, 0], vec![0], vec![0, 2]] {
            assert_eq!(
                order_subtrees(&inst, &OrderPolicy::explicit(perm)),
                Err(Error::NotAPermutation { count: 2 })
            );
        }
    }

    #[test]
    fn custom_traversal_changes_visit_order() {
        //    0
        //   / \
        //  1   2
        let t = Tree::from_parents(&[0, 0, 0], 0).unwrap();
        let caps = unbounded(&t);
        let inst = Instance::from_vertex_sets(t, [(vec![1], 1), (vec![2], 1)], caps).unwrap();
        let custom = OrderPolicy::new(VertexTraversal::Custom(vec![2, 1, 0]), SameRootOrder::InputOrder);
        assert_eq!(order_subtrees(&inst, &custom).unwrap(), vec![1, 0]);
    }

    #[test]
    fn compact_demand_takes_min_of_demand_and_residual() {
        let t = path_tree();
        let mut caps = CapacityVector::uniform(&t, Capacity::Finite(10), Capacity::Finite(10));
        caps.set(Object::Edge(2), Capacity::Finite(4));
        let inst = Instance::from_vertex_sets(t, [(vec![0, 1, 2], 7)], caps).unwrap();
        let (sol, trace) = bottom_up_greedy(&inst, &OrderPolicy::default()).unwrap();
        assert_eq!(sol.total(), 4);
        assert_eq!(trace.decisions, vec![Decision::Accepted(4)]);
    }

    #[test]
    fn rejection_records_first_saturated_object() {
        let t = Tree::from_parents(&[0, 0, 0], 0).unwrap();
        let mut caps = CapacityVector::uniform(&t, Capacity::Finite(1), Capacity::Finite(1));
        caps.set(Object::Vertex(0), Capacity::Finite(5));
        let inst = Instance::from_vertex_sets(t, [(vec![0, 1], 1), (vec![0, 1, 2], 1)], caps).unwrap();
        let (sol, trace) = bottom_up_greedy(&inst, &OrderPolicy::default()).unwrap();
        assert_eq!(sol.multiplicities(), &[1, 0]);
        assert_eq!(trace.decisions[1], Decision::Rejected(Object::Vertex(1)));
        assert_eq!(trace.replay(), sol);
        assert!(is_maximal(&inst, &sol).unwrap());
    }

    #[test]
    fn tightness_orders() {
        let m = 4;
        let t = Tree::from_parents(&vec![0; m + 1], 0).unwrap();
        let mut caps = CapacityVector::uniform(&t, Capacity::Finite(1), Capacity::Finite(1));
        caps.set(Object::Vertex(0), Capacity::Finite(m as u64));
        let mut subtrees = vec![Subtree::new(&t, 0..=m, 1).unwrap()];
        subtrees.extend((1..=m).map(|j| Subtree::new(&t, [0, j], 1).unwrap()));
        let inst = Instance::new(t, subtrees, caps).unwrap();

        let (star_first, _) = bottom_up_greedy(&inst, &OrderPolicy::default()).unwrap();
        assert_eq!(star_first.total(), 1);
        assert_eq!(star_first.get(0), 1);

        let paths_first = OrderPolicy::explicit((1..=m).chain([0]).collect());
        let (sol, _) = bottom_up_greedy(&inst, &paths_first).unwrap();
        assert_eq!(sol.total(), m as u64);
        assert!(is_feasible(&inst, &sol).unwrap());
        // fewest leaves first also puts the paths first
        let (sol, _) = bottom_up_greedy(&inst, &OrderPolicy::fewest_leaves_first()).unwrap();
        assert_eq!(sol.total(), m as u64);
    }
}
