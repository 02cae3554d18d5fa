//! The single-connectedness test.
//!
//! [`is_singly_connected`] chains the three stages: [`condense`] (structural
//! early rejection), [`reduce_degree_one`] (contraction plus the parallel-edge
//! scan), and [`sources_dfs_check`], which runs one DFS per source of the
//! reduced graph and stops at the first edge reaching an already visited
//! vertex. In the reduced graph every internal vertex of a DFS tree branches,
//! and every leaf is a sink, so a tree has at most `2t - 1` vertices; the whole
//! test does `O(s·t + m)` work.
//!
//! [`naive_quadratic_check`] is the baseline that starts a DFS from every
//! vertex of the condensation.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, EdgeId, VertexId};
use crate::reduce::{reduce_degree_one, ReducedGraph};
use crate::scc::{condense, Condensation, EarlyReject};

/// Tallies of work actually performed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WorkCounters {
    pub dfs_vertex_visits: u64,
    pub dfs_edge_explorations: u64,
    pub reduction_edges_touched: u64,
    pub sources_processed: u64,
}

impl WorkCounters {
    pub fn total(&self) -> u64 {
        self.dfs_vertex_visits + self.dfs_edge_explorations + self.reduction_edges_touched
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    NonCycleScc,
    ParallelCondensationEdges,
    MultiEdgeAfterReduction,
    ConvergingDfsPaths,
}

/// Two DFS paths from `source` that meet at `meeting`. `path_a` is the tree
/// path to the last explored vertex extended by the offending edge; `path_b`
/// is the tree path to `meeting`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergingPaths {
    pub source: VertexId,
    pub meeting: VertexId,
    pub path_a: Vec<VertexId>,
    pub path_b: Vec<VertexId>,
    pub edges_a: Vec<EdgeId>,
    pub edges_b: Vec<EdgeId>,
}

impl ConvergingPaths {
    /// Both paths are simple paths of `g` from `source` to `meeting` and
    /// their final edges differ.
    pub fn is_valid_in(&self, g: &DirectedGraph) -> bool {
        let path_ok = |vs: &[VertexId], es: &[EdgeId]| {
            if vs.len() != es.len() + 1 || es.is_empty() {
                return false;
            }
            if vs[0] != self.source || *vs.last().unwrap() != self.meeting {
                return false;
            }
            let chained = es.iter().enumerate().all(|(i, &e)| {
                e < g.edge_slots() && g.is_edge_alive(e) && g.endpoints(e) == (vs[i], vs[i + 1])
            });
            let mut sorted = vs.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            chained && sorted.len() == vs.len()
        };
        path_ok(&self.path_a, &self.edges_a)
            && path_ok(&self.path_b, &self.edges_b)
            && self.edges_a.last() != self.edges_b.last()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotScWitness {
    Structural(EarlyReject),
    /// Parallel edges `tail -> head` in the reduced graph.
    MultiEdgeAfterReduction {
        tail: VertexId,
        head: VertexId,
        origin: Vec<Vec<VertexId>>,
    },
    /// Paths in reduced-graph coordinates; `origin` maps each reduced vertex
    /// to the original vertices merged into it.
    ConvergingDfsPaths {
        paths: ConvergingPaths,
        origin: Vec<Vec<VertexId>>,
    },
}

impl NotScWitness {
    pub fn kind(&self) -> WitnessKind {
        match self {
            NotScWitness::Structural(EarlyReject::NonCycleScc { .. }) => WitnessKind::NonCycleScc,
            NotScWitness::Structural(EarlyReject::ParallelCondensationEdges { .. }) => {
                WitnessKind::ParallelCondensationEdges
            }
            NotScWitness::MultiEdgeAfterReduction { .. } => WitnessKind::MultiEdgeAfterReduction,
            NotScWitness::ConvergingDfsPaths { .. } => WitnessKind::ConvergingDfsPaths,
        }
    }

    pub fn origin(&self) -> Option<&[Vec<VertexId>]> {
        match self {
            NotScWitness::Structural(_) => None,
            NotScWitness::MultiEdgeAfterReduction { origin, .. }
            | NotScWitness::ConvergingDfsPaths { origin, .. } => Some(origin),
        }
    }
}

fn join(vs: &[VertexId]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for NotScWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotScWitness::Structural(r) => write!(f, "{r}"),
            NotScWitness::MultiEdgeAfterReduction { tail, head, .. } => write!(
                f,
                "reduced graph has parallel edges {tail} -> {head}"
            ),
            NotScWitness::ConvergingDfsPaths { paths, .. } => write!(
                f,
                "DFS from source {} reaches {} twice: [{}] and [{}]",
                paths.source,
                paths.meeting,
                join(&paths.path_a),
                join(&paths.path_b)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScVerdict {
    pub singly_connected: bool,
    pub witness: Option<NotScWitness>,
    pub counters: WorkCounters,
    /// Sources and sinks of the graph the DFS stage ran on (zero if the
    /// pipeline stopped earlier).
    pub source_count: usize,
    pub sink_count: usize,
}

impl ScVerdict {
    fn accept(counters: WorkCounters, s: usize, t: usize) -> Self {
        ScVerdict {
            singly_connected: true,
            witness: None,
            counters,
            source_count: s,
            sink_count: t,
        }
    }

    fn reject(witness: NotScWitness, counters: WorkCounters, s: usize, t: usize) -> Self {
        ScVerdict {
            singly_connected: false,
            witness: Some(witness),
            counters,
            source_count: s,
            sink_count: t,
        }
    }
}

/// Per-vertex DFS bookkeeping shared by all roots of one check. Visited marks
/// are epoch stamps, so starting a new root costs O(1).
struct DfsState {
    stamp: Vec<u32>,
    parent_edge: Vec<EdgeId>,
    epoch: u32,
}

impl DfsState {
    fn new(n: usize) -> Self {
        DfsState {
            stamp: vec![0; n],
            parent_edge: vec![usize::MAX; n],
            epoch: 0,
        }
    }

    fn tree_path(&self, g: &DirectedGraph, root: VertexId, mut v: VertexId) -> (Vec<VertexId>, Vec<EdgeId>) {
        let mut vs = vec![v];
        let mut es = Vec::new();
        while v != root {
            let e = self.parent_edge[v];
            es.push(e);
            v = g.endpoints(e).0;
            vs.push(v);
        }
        vs.reverse();
        es.reverse();
        (vs, es)
    }

    /// DFS from `root`, returning converging paths at the first edge that
    /// reaches a vertex already visited from this root.
    fn run(&mut self, g: &DirectedGraph, root: VertexId, counters: &mut WorkCounters) -> Option<ConvergingPaths> {
        self.epoch += 1;
        let epoch = self.epoch;
        counters.sources_processed += 1;
        self.stamp[root] = epoch;
        counters.dfs_vertex_visits += 1;

        let mut stack = vec![(root, g.out_edges(root))];
        while let Some((u, edges)) = stack.last_mut() {
            let u = *u;
            let Some((e, x)) = edges.next() else {
                stack.pop();
                continue;
            };
            counters.dfs_edge_explorations += 1;
            if self.stamp[x] == epoch {
                let (mut path_a, mut edges_a) = self.tree_path(g, root, u);
                path_a.push(x);
                edges_a.push(e);
                let (path_b, edges_b) = self.tree_path(g, root, x);
                return Some(ConvergingPaths {
                    source: root,
                    meeting: x,
                    path_a,
                    path_b,
                    edges_a,
                    edges_b,
                });
            }
            self.stamp[x] = epoch;
            self.parent_edge[x] = e;
            counters.dfs_vertex_visits += 1;
            stack.push((x, g.out_edges(x)));
        }
        None
    }
}

/// Source-rooted DFS on a reduced graph.
pub fn sources_dfs_check(rg: &ReducedGraph) -> Result<ScVerdict> {
    let g = &rg.dag;
    if rg.has_multi_edge() || g.find_parallel_pair().is_some() {
        return Err(Error::Contract("reduced graph has parallel edges".into()));
    }
    if let Some(v) = (0..g.vertex_count())
        .find(|&v| g.is_vertex_alive(v) && (g.indegree(v) == 1 || g.outdegree(v) == 1))
    {
        return Err(Error::Contract(format!(
            "vertex {v} of the reduced graph has indegree or outdegree 1"
        )));
    }
    if !g.is_acyclic() {
        return Err(Error::Contract("reduced graph has a cycle".into()));
    }
    Ok(dfs_from_sources(rg, rg.origin.clone()))
}

fn dfs_from_sources(rg: &ReducedGraph, origin: Vec<Vec<VertexId>>) -> ScVerdict {
    let g = &rg.dag;
    let mut counters = WorkCounters {
        reduction_edges_touched: rg.edges_touched,
        ..Default::default()
    };
    let (s, t) = (rg.source_count, rg.sink_count);
    let mut state = DfsState::new(g.vertex_count());
    for r in g.sources() {
        if let Some(paths) = state.run(g, r, &mut counters) {
            return ScVerdict::reject(
                NotScWitness::ConvergingDfsPaths { paths, origin },
                counters,
                s,
                t,
            );
        }
    }
    ScVerdict::accept(counters, s, t)
}

/// Maps each reduced vertex to the original vertices behind it.
fn lift_origin(cond: &Condensation, reduced_origin: &[Vec<VertexId>]) -> Vec<Vec<VertexId>> {
    reduced_origin
        .iter()
        .map(|comps| {
            let mut vs: Vec<VertexId> = comps
                .iter()
                .flat_map(|&c| cond.members(c).iter().copied())
                .collect();
            vs.sort_unstable();
            vs
        })
        .collect()
}

/// Full test on any directed multigraph.
pub fn is_singly_connected(g: &DirectedGraph) -> ScVerdict {
    let cond = match condense(g) {
        Ok(c) => c,
        Err(reject) => {
            return ScVerdict::reject(NotScWitness::Structural(reject), WorkCounters::default(), 0, 0)
        }
    };
    let rg = reduce_degree_one(cond.dag.clone()).expect("condensation is acyclic");
    let origin = lift_origin(&cond, &rg.origin);
    if let Some((tail, head)) = rg.multi_edge {
        let counters = WorkCounters {
            reduction_edges_touched: rg.edges_touched,
            ..Default::default()
        };
        return ScVerdict::reject(
            NotScWitness::MultiEdgeAfterReduction { tail, head, origin },
            counters,
            rg.source_count,
            rg.sink_count,
        );
    }
    dfs_from_sources(&rg, origin)
}

/// Baseline: one DFS from every vertex of an acyclic graph, stopping at the
/// first forward or cross edge.
pub fn naive_quadratic_check(dag: &DirectedGraph) -> Result<ScVerdict> {
    if !dag.is_acyclic() {
        return Err(Error::Contract("naive check needs an acyclic input".into()));
    }
    let mut counters = WorkCounters::default();
    let mut state = DfsState::new(dag.vertex_count());
    let origin: Vec<Vec<VertexId>> = (0..dag.vertex_count()).map(|v| vec![v]).collect();
    let s = dag.sources().count();
    let t = dag.sinks().count();
    for r in 0..dag.vertex_count() {
        if !dag.is_vertex_alive(r) {
            continue;
        }
        if let Some(paths) = state.run(dag, r, &mut counters) {
            return Ok(ScVerdict::reject(
                NotScWitness::ConvergingDfsPaths { paths, origin },
                counters,
                s,
                t,
            ));
        }
    }
    Ok(ScVerdict::accept(counters, s, t))
}

/// [`condense`] followed by [`naive_quadratic_check`] on the condensation.
pub fn naive_pipeline(g: &DirectedGraph) -> ScVerdict {
    match condense(g) {
        Ok(cond) => {
            let mut v = naive_quadratic_check(&cond.dag).expect("condensation is acyclic");
            if let Some(NotScWitness::ConvergingDfsPaths { origin, .. }) = &mut v.witness {
                *origin = cond.components.members.clone();
            }
            v
        }
        Err(reject) => ScVerdict::reject(NotScWitness::Structural(reject), WorkCounters::default(), 0, 0),
    }
}

fn reduced_of(g: &DirectedGraph) -> Option<ReducedGraph> {
    condense(g)
        .ok()
        .map(|c| reduce_degree_one(c.dag).expect("condensation is acyclic"))
}

/// Recomputes the evidence behind a rejection of `g` and confirms it.
pub fn witness_holds(g: &DirectedGraph, witness: &NotScWitness) -> bool {
    match witness {
        NotScWitness::Structural(reject) => condense(g).err().as_ref() == Some(reject),
        NotScWitness::MultiEdgeAfterReduction { tail, head, .. } => reduced_of(g).is_some_and(|rg| {
            *tail < rg.dag.vertex_count() && rg.dag.successors(*tail).filter(|h| h == head).count() >= 2
        }),
        NotScWitness::ConvergingDfsPaths { paths, .. } => {
            reduced_of(g).is_some_and(|rg| paths.is_valid_in(&rg.dag))
        }
    }
}
