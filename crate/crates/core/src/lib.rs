//! Exact solver for bicluster editing: decide whether a graph can be turned
//! into a disjoint union of complete bipartite components (plus isolated
//! vertices) with at most `k` edge insertions and deletions, and find a
//! smallest such edit set.
//!
//! The crate has four parts:
//!
//! * [`graph`] — graph values, editing semantics, and structure detection
//!   (bicliques, bicluster graphs, triangles, induced four-vertex paths).
//! * [`enumerate`] — exhaustive editing-set machinery for small graphs:
//!   all inclusion-minimal editing sets and brute-force minimum edit sets.
//!   This doubles as the independent oracle the solver is tested against.
//! * [`solver`] — the bounded search tree: branch on triangles and on the
//!   neighborhood of induced paths until the remainder is solvable in
//!   polynomial time.
//! * [`branching`] — the case analysis behind the search tree's branching
//!   rules: enumerate every neighbor configuration, compute its branching
//!   vector, and bound the branching numbers.

pub mod branching;
pub mod edit;
pub mod enumerate;
pub mod graph;
pub mod solver;

pub use edit::{EditSet, VertexPair};
pub use graph::{Graph, P4Occurrence};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },

    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("vertices {vertices:?} do not induce a path in this graph")]
    NotAnInducedP4 { vertices: [usize; 4] },

    #[error("graph on {n} vertices exceeds the enumeration bound {bound}")]
    EnumerationBound { n: usize, bound: usize },

    #[error("branching vector must not be empty")]
    EmptyBranchingVector,

    #[error("branching rule {rule} applied outside its precondition")]
    RuleMisapplied { rule: &'static str },

    #[error(
        "component {component:?} has at least 6 vertices but is not a biclique \
         although no branching rule applies"
    )]
    ReducedComponentNotBiclique { component: Vec<usize> },
}
