//! Reference answers straight from the definition: a graph is singly-connected
//! when every ordered pair of distinct vertices is joined by at most one
//! simple path and every vertex lies on at most one simple cycle (a self-loop
//! counts as a cycle of length one). Parallel edges make distinct paths.
//!
//! Counts saturate at two. These routines know nothing about components or
//! contraction and exist to check the fast pipeline.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, EdgeId, VertexId};

/// Largest vertex count the public oracle entry points accept.
pub const ORACLE_VERTEX_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PathCount {
    Zero,
    One,
    TwoOrMore,
}

impl PathCount {
    fn from_count(c: usize) -> Self {
        match c {
            0 => PathCount::Zero,
            1 => PathCount::One,
            _ => PathCount::TwoOrMore,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    /// True if the edges exist in `g`, chain up, and visit no vertex twice
    /// (except a cycle returning to its start).
    pub fn is_valid_in(&self, g: &DirectedGraph) -> bool {
        if self.vertices.len() != self.edges.len() + 1 {
            return false;
        }
        for (i, &e) in self.edges.iter().enumerate() {
            if e >= g.edge_slots() || !g.is_edge_alive(e) {
                return false;
            }
            if g.endpoints(e) != (self.vertices[i], self.vertices[i + 1]) {
                return false;
            }
        }
        let closed = !self.edges.is_empty() && self.start() == self.end();
        let body = if closed {
            &self.vertices[..self.vertices.len() - 1]
        } else {
            &self.vertices[..]
        };
        let mut seen = body.to_vec();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == body.len()
    }
}

/// Two distinct simple paths with the same endpoints. When `from == to` they
/// are two distinct simple cycles through that vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPair {
    pub from: VertexId,
    pub to: VertexId,
    pub first: Path,
    pub second: Path,
}

impl PathPair {
    pub fn total_len(&self) -> usize {
        self.first.len() + self.second.len()
    }

    pub fn is_valid_in(&self, g: &DirectedGraph) -> bool {
        let ends = |p: &Path| p.start() == self.from && p.end() == self.to && !p.is_empty();
        self.first.is_valid_in(g)
            && self.second.is_valid_in(g)
            && ends(&self.first)
            && ends(&self.second)
            && self.first.edges != self.second.edges
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub singly_connected: bool,
    pub witness: Option<PathPair>,
}

fn guard(g: &DirectedGraph) -> Result<()> {
    if g.vertex_count() > ORACLE_VERTEX_LIMIT {
        return Err(Error::LimitExceeded {
            what: "oracle vertex",
            limit: ORACLE_VERTEX_LIMIT,
            actual: g.vertex_count(),
        });
    }
    Ok(())
}

fn count_paths_dfs(
    g: &DirectedGraph,
    at: VertexId,
    target: VertexId,
    on_path: &mut [bool],
    found: &mut usize,
) {
    for (_, w) in g.out_edges(at) {
        if *found >= 2 {
            return;
        }
        if w == target {
            *found += 1;
        } else if !on_path[w] {
            on_path[w] = true;
            count_paths_dfs(g, w, target, on_path, found);
            on_path[w] = false;
        }
    }
}

/// Number of simple paths `from -> to`, saturating at two.
pub fn count_simple_paths_capped(g: &DirectedGraph, from: VertexId, to: VertexId) -> Result<PathCount> {
    guard(g)?;
    if from == to {
        return Err(Error::Contract(
            "path counting needs distinct endpoints; use cycle counting for v = w".into(),
        ));
    }
    let mut on_path = vec![false; g.vertex_count()];
    on_path[from] = true;
    let mut found = 0;
    count_paths_dfs(g, from, to, &mut on_path, &mut found);
    Ok(PathCount::from_count(found))
}

/// Number of simple cycles through `v`, saturating at two.
pub fn count_simple_cycles_through_capped(g: &DirectedGraph, v: VertexId) -> Result<PathCount> {
    guard(g)?;
    let mut on_path = vec![false; g.vertex_count()];
    on_path[v] = true;
    let mut found = 0;
    count_paths_dfs(g, v, v, &mut on_path, &mut found);
    Ok(PathCount::from_count(found))
}

struct PathNode {
    vertex: VertexId,
    parent: usize,
    via: EdgeId,
}

fn unwind(nodes: &[PathNode], mut idx: usize, root: VertexId) -> Path {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    while idx != usize::MAX {
        let node = &nodes[idx];
        vertices.push(node.vertex);
        edges.push(node.via);
        idx = node.parent;
    }
    vertices.push(root);
    vertices.reverse();
    edges.reverse();
    Path { vertices, edges }
}

/// Grows every simple path out of `root` in breadth-first order and stops at
/// the first vertex reached a second time.
///
/// If no vertex is ever reached twice, the enumeration has produced every
/// simple path from `root` and each endpoint exactly once, so `root` is not
/// the start of any violating pair. Each path produced before stopping ends at
/// a fresh vertex, so at most `n + 1` paths are built.
fn converging_paths_from(g: &DirectedGraph, root: VertexId) -> Option<PathPair> {
    const NONE: usize = usize::MAX;
    let n = g.vertex_count();
    // reached[w]: node index of the first path ending at w. The root's own
    // entry records the first closed cycle.
    let mut reached = vec![NONE; n];
    let mut nodes: Vec<PathNode> = Vec::new();
    // `None` stands for the empty path at the root.
    let mut frontier: VecDeque<Option<usize>> = VecDeque::from([None]);
    while let Some(entry) = frontier.pop_front() {
        let at = entry.map_or(root, |i| nodes[i].vertex);
        for (e, w) in g.out_edges(at) {
            let on_path = w != root && {
                let mut cur = entry;
                let mut hit = false;
                while let Some(i) = cur {
                    if nodes[i].vertex == w {
                        hit = true;
                        break;
                    }
                    cur = (nodes[i].parent != NONE).then_some(nodes[i].parent);
                }
                hit
            };
            if on_path {
                continue;
            }
            nodes.push(PathNode {
                vertex: w,
                parent: entry.unwrap_or(NONE),
                via: e,
            });
            let idx = nodes.len() - 1;
            if reached[w] != NONE {
                return Some(PathPair {
                    from: root,
                    to: w,
                    first: unwind(&nodes, reached[w], root),
                    second: unwind(&nodes, idx, root),
                });
            }
            reached[w] = idx;
            if w != root {
                frontier.push_back(Some(idx));
            }
        }
    }
    None
}

/// First witness found scanning start vertices in ascending order. No size
/// guard: the search is polynomial (at most `n + 1` paths per start vertex).
pub fn first_converging_paths(g: &DirectedGraph) -> Option<PathPair> {
    (0..g.vertex_count()).find_map(|r| converging_paths_from(g, r))
}

/// Decision straight from the definition. On rejection the witness is the
/// breadth-first witness of smallest total length over all start vertices,
/// ties going to the smaller start vertex.
pub fn oracle_singly_connected(g: &DirectedGraph) -> Result<OracleVerdict> {
    guard(g)?;
    Ok(shortest_witness_verdict(g))
}

pub(crate) fn shortest_witness_verdict(g: &DirectedGraph) -> OracleVerdict {
    let witness = (0..g.vertex_count())
        .filter_map(|r| converging_paths_from(g, r))
        .min_by_key(|w| (w.total_len(), w.from));
    OracleVerdict {
        singly_connected: witness.is_none(),
        witness,
    }
}

/// Pairwise definition check via [`count_simple_paths_capped`] and
/// [`count_simple_cycles_through_capped`]. Exponential; for cross-checking the
/// breadth-first search on tiny graphs.
pub fn oracle_by_pair_counts(g: &DirectedGraph) -> Result<bool> {
    guard(g)?;
    let n = g.vertex_count();
    for v in 0..n {
        if count_simple_cycles_through_capped(g, v)? == PathCount::TwoOrMore {
            return Ok(false);
        }
        for w in 0..n {
            if v != w && count_simple_paths_capped(g, v, w)? == PathCount::TwoOrMore {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
