//! Testing whether a directed graph is singly-connected: at most one simple
//! path between every ordered pair of vertices.
//!
//! The test runs in three stages. [`scc::condense`] rejects graphs whose
//! strongly connected components are not simple cycles, or whose components
//! are joined by parallel edges, and otherwise returns the acyclic
//! condensation. [`reduce::reduce_degree_one`] contracts every vertex of
//! indegree or outdegree 1. [`check::sources_dfs_check`] then runs one DFS per
//! source of the reduced graph, stopping at the first non-tree edge. With `s`
//! sources and `t` sinks left after reduction the total work is
//! `O(s·t + m)`; [`check::is_singly_connected`] runs all three.
//!
//! A vertex is allowed on at most one simple cycle: a vertex with two
//! self-loops, or two distinct cycles through it, makes the graph not
//! singly-connected.
//!
//! [`oracle`] decides the same property from the definition, and [`hardness`]
//! holds the vertex-cover reductions to the edge- and vertex-removal problems
//! together with exact solvers for small instances.

pub mod bench;
pub mod check;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod hardness;
pub mod io;
pub mod oracle;
pub mod reduce;
pub mod scc;

pub use check::{
    is_singly_connected, naive_pipeline, naive_quadratic_check, sources_dfs_check, NotScWitness,
    ScVerdict, WitnessKind, WorkCounters,
};
pub use error::{Error, Result};
pub use graph::{DirectedGraph, EdgeId, UndirectedGraph, VertexId};
pub use oracle::{oracle_singly_connected, PathCount};
pub use reduce::{reduce_degree_one, ReducedGraph};
pub use scc::{condense, strongly_connected_components, Condensation, EarlyReject};
