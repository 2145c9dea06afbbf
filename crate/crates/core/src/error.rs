use thiserror::Error;

use crate::tree::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tree must have at least one vertex")]
    EmptyTree,
    #[error("root {root} is not a vertex of a tree with {vertex_count} vertices")]
    RootOutOfRange { root: VertexId, vertex_count: usize },
    #[error("root {root} has parent {parent}; the root must map to itself")]
    RootHasParent { root: VertexId, parent: VertexId },
    #[error("vertex {vertex} has parent {parent}, which is out of range")]
    ParentOutOfRange { vertex: VertexId, parent: VertexId },
    #[error("vertex {vertex} is its own parent but is not the root")]
    DisconnectedVertex { vertex: VertexId },
    #[error("cycle detected through vertex {vertex}")]
    CycleDetected { vertex: VertexId },

    #[error("subtree has no vertices")]
    EmptySubtree,
    #[error("subtree vertex {vertex} is not in the tree")]
    VertexOutOfRange { vertex: VertexId },
    #[error("subtree vertices do not induce a connected subgraph")]
    NotConnected,
    #[error("subtree demand must be positive")]
    ZeroDemand,
    #[error("subtree {index}: {source}")]
    InvalidSubtree {
        index: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("capacity vector covers {got} vertices, tree has {expected}")]
    CapacityShape { expected: usize, got: usize },

    #[error("selection has {got} entries, instance has {expected} subtrees")]
    SelectionLength { expected: usize, got: usize },
    #[error("subtree index {index} out of range ({count} subtrees)")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("subtree {index} selected {multiplicity} times, demand is {demand}")]
    DemandExceeded {
        index: usize,
        multiplicity: u64,
        demand: u64,
    },

    #[error("vertex order is not a post-order of the tree: {reason}")]
    NotPostOrder { reason: String },
    #[error("subtree permutation is not a bijection on 0..{count}")]
    NotAPermutation { count: usize },

    #[error("subtree {index} is not a path")]
    NotAPath { index: usize },
    #[error("path {index} is neither directed nor passes through the root as an internal vertex")]
    NotSharedVertexPath { index: usize },
    #[error("path {index} ends at {vertex}, which is not a leaf of the tree")]
    EndpointNotLeaf { index: usize, vertex: VertexId },
    #[error("laminar family violated by sets {first} and {second}")]
    NotLaminar { first: usize, second: usize },
    #[error("edge endpoint {node} is not a problem node")]
    UnknownNode { node: VertexId },
    #[error("search budget exceeded ({what}); best total found so far: {best_lower_bound}")]
    BudgetExceeded { what: &'static str, best_lower_bound: u64 },

    #[error("commodity {index} has identical endpoints {vertex}")]
    DegenerateCommodity { index: usize, vertex: VertexId },
    #[error("graph edge ({u}, {v}) is invalid for {vertex_count} vertices")]
    InvalidGraphEdge {
        u: VertexId,
        v: VertexId,
        vertex_count: usize,
    },
    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported format version {found} (expected {expected})")]
    FormatVersion { found: i64, expected: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
