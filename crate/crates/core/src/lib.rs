//! Packing a maximum number of subtrees into a capacitated tree.
//!
//! A tree network has a capacity on every vertex and edge. Given a list of
//! subtrees (multicast requests, possibly with integer demands), select as
//! many as possible so that no vertex or edge carries more subtrees than its
//! capacity.
//!
//! - [`greedy`]: bottom-up greedy, within a factor `max(M, 1)` of optimal
//!   where `M` is the largest number of non-root leaves of a subtree.
//! - [`exact`]: branch-and-bound optimum for small instances and an exact
//!   solver for paths that are directed or share the tree root.
//! - [`gen`]: seeded random instances, the tightness family, and reductions
//!   from independent set, tree multi-commodity flow and chordal k-coloring.
//! - [`io`] and [`bench`](mod@bench): instance files and the approximation-ratio harness.

pub mod bench;
pub mod cli;
pub mod error;
pub mod exact;
pub mod gen;
pub mod greedy;
pub mod instance;
pub mod io;
pub mod tree;

pub use error::{Error, Result};
pub use exact::{brute_force_opt, solve_shared_vertex_paths, SolveBudget};
pub use greedy::{bottom_up_greedy, OrderPolicy};
pub use instance::{
    is_feasible, load_vector, overloaded_objects, residual_min_capacity, Capacity, CapacityVector, Instance, Loads,
    Solution, Subtree,
};
pub use tree::{Object, Tree, VertexId};
