//! Small named graphs used throughout the tests and examples.

use crate::graph::{DirectedGraph, UndirectedGraph};
use crate::io::{parse_directed, parse_undirected};

/// The eight-vertex DAG in which vertex 2 has indegree 1.
pub const CONTRACTION_EXAMPLE: &str = "\
# contraction example
8 10
0 1
1 2
3 1
2 4
3 6
2 5
6 5
7 4
0 7
1 7
";

/// The same DAG after contracting edge (1, 2).
pub const CONTRACTION_FIRST_STEP_EDGES: [(usize, usize); 9] = [
    (0, 1),
    (3, 1),
    (1, 4),
    (3, 6),
    (1, 5),
    (6, 5),
    (7, 4),
    (0, 7),
    (1, 7),
];

/// Vertex-cover instance on four vertices: e0 = {0,1}, e1 = {1,3},
/// e2 = {2,3}, e3 = {0,2}. {1, 2} is a minimum cover.
pub const COVER_EXAMPLE: &str = "\
4 4
0 1
1 3
2 3
0 2
";

pub fn contraction_example() -> DirectedGraph {
    parse_directed(CONTRACTION_EXAMPLE).expect("fixture parses")
}

pub fn cover_example() -> UndirectedGraph {
    parse_undirected(COVER_EXAMPLE).expect("fixture parses")
}

/// 0 -> 1, 0 -> 2, 1 -> 3, 2 -> 3.
pub fn diamond() -> DirectedGraph {
    DirectedGraph::from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
}
