//! Vertex cover reduces to both removal problems.
//!
//! * ESC: fewest edges whose removal leaves a singly-connected graph.
//! * VSC: fewest vertices whose removal (with incident edges) does the same.
//!
//! [`reduce_vc_to_esc`] and [`reduce_vc_to_vsc`] build the gadget graphs; the
//! exact solvers below make the optimum equality checkable on small inputs.
//!
//! The ESC and VSC solvers branch on witnesses. Any feasible removal set must
//! hit every pair of converging paths, so the search picks a witness in the
//! current residual graph and branches on its elements, forbidding the
//! elements of earlier branches. Run with budgets 0, 1, 2, … this reaches
//! every feasible set of the optimum size exactly once, and the answer is the
//! lexicographically smallest of them: the same set an enumeration by
//! ascending size and then lexicographic order would return first.
//! Feasibility is decided by [`is_singly_connected`]; witnesses and the final
//! certificate come from the oracle's path search.

use std::fmt::Write as _;

use crate::check::is_singly_connected;
use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, EdgeId, UndirectedGraph, VertexId};
use crate::oracle::{first_converging_paths, PathPair};

pub const VC_VERTEX_LIMIT: usize = 20;
pub const ESC_EDGE_LIMIT: usize = 128;
pub const VSC_VERTEX_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    Esc,
    Vsc,
}

/// Gadget graph plus the maps from the vertex-cover instance into it.
///
/// ESC layout: vertex `v` becomes `v' = 2v`, `v'' = 2v + 1`; edge `i` becomes
/// `e' = 2|V| + 2i`, `e'' = 2|V| + 2i + 1`. Spine edges `(v', v'')` come first
/// in vertex order, then for each edge `{v, w}` (with `v < w`) the edges
/// `(e', v')`, `(e', w')`, `(v'', e'')`, `(w'', e'')`.
///
/// VSC layout: `v' = v`; `e' = |V| + 2i`, `e'' = |V| + 2i + 1`; per edge
/// `(e', v')`, `(e', w')`, `(v', e'')`, `(w', e'')`.
#[derive(Debug, Clone)]
pub struct ReductionArtifact {
    pub kind: GadgetKind,
    pub gadget: DirectedGraph,
    pub vertex_in: Vec<VertexId>,
    /// `v''` per vertex; empty for VSC.
    pub vertex_out: Vec<VertexId>,
    pub edge_in: Vec<VertexId>,
    pub edge_out: Vec<VertexId>,
    /// `(v', v'')` per vertex; empty for VSC.
    pub spine_edges: Vec<EdgeId>,
}

impl ReductionArtifact {
    /// Removal set induced by a vertex cover: spine edges for ESC, the
    /// vertices `v'` for VSC.
    pub fn lift_cover(&self, cover: &[VertexId]) -> Vec<usize> {
        let mut out: Vec<usize> = match self.kind {
            GadgetKind::Esc => cover.iter().map(|&v| self.spine_edges[v]).collect(),
            GadgetKind::Vsc => cover.iter().map(|&v| self.vertex_in[v]).collect(),
        };
        out.sort_unstable();
        out
    }

    /// Sidecar text: `v <id>: <gadget ids>` and `e <index>: <e'> <e''>`.
    pub fn mapping_text(&self) -> String {
        let mut out = String::new();
        for v in 0..self.vertex_in.len() {
            match self.kind {
                GadgetKind::Esc => {
                    writeln!(out, "v {v}: {} {}", self.vertex_in[v], self.vertex_out[v]).unwrap()
                }
                GadgetKind::Vsc => writeln!(out, "v {v}: {}", self.vertex_in[v]).unwrap(),
            }
        }
        for i in 0..self.edge_in.len() {
            writeln!(out, "e {i}: {} {}", self.edge_in[i], self.edge_out[i]).unwrap();
        }
        out
    }
}

pub fn reduce_vc_to_esc(g: &UndirectedGraph) -> ReductionArtifact {
    let nv = g.vertex_count();
    let ne = g.edge_count();
    let mut gadget = DirectedGraph::new(2 * nv + 2 * ne);
    let vertex_in: Vec<_> = (0..nv).map(|v| 2 * v).collect();
    let vertex_out: Vec<_> = (0..nv).map(|v| 2 * v + 1).collect();
    let edge_in: Vec<_> = (0..ne).map(|i| 2 * nv + 2 * i).collect();
    let edge_out: Vec<_> = (0..ne).map(|i| 2 * nv + 2 * i + 1).collect();
    let spine_edges = (0..nv)
        .map(|v| gadget.add_edge(vertex_in[v], vertex_out[v]))
        .collect();
    for (i, &(v, w)) in g.edges().iter().enumerate() {
        gadget.add_edge(edge_in[i], vertex_in[v]);
        gadget.add_edge(edge_in[i], vertex_in[w]);
        gadget.add_edge(vertex_out[v], edge_out[i]);
        gadget.add_edge(vertex_out[w], edge_out[i]);
    }
    ReductionArtifact {
        kind: GadgetKind::Esc,
        gadget,
        vertex_in,
        vertex_out,
        edge_in,
        edge_out,
        spine_edges,
    }
}

pub fn reduce_vc_to_vsc(g: &UndirectedGraph) -> ReductionArtifact {
    let nv = g.vertex_count();
    let ne = g.edge_count();
    let mut gadget = DirectedGraph::new(nv + 2 * ne);
    let vertex_in: Vec<_> = (0..nv).collect();
    let edge_in: Vec<_> = (0..ne).map(|i| nv + 2 * i).collect();
    let edge_out: Vec<_> = (0..ne).map(|i| nv + 2 * i + 1).collect();
    for (i, &(v, w)) in g.edges().iter().enumerate() {
        gadget.add_edge(edge_in[i], v);
        gadget.add_edge(edge_in[i], w);
        gadget.add_edge(v, edge_out[i]);
        gadget.add_edge(w, edge_out[i]);
    }
    ReductionArtifact {
        kind: GadgetKind::Vsc,
        gadget,
        vertex_in,
        vertex_out: Vec::new(),
        edge_in,
        edge_out,
        spine_edges: Vec::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSolution {
    /// Chosen vertex or edge ids, ascending.
    pub chosen: Vec<usize>,
    pub size: usize,
    /// The solution was re-verified by a checker independent of the search.
    pub certificate: bool,
}

/// Advances `c` to the next `k`-combination of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Smallest vertex cover by enumeration in order of size, then
/// lexicographically.
pub fn exact_min_vertex_cover(g: &UndirectedGraph) -> Result<ExactSolution> {
    let n = g.vertex_count();
    if n > VC_VERTEX_LIMIT {
        return Err(Error::LimitExceeded {
            what: "vertex cover vertex",
            limit: VC_VERTEX_LIMIT,
            actual: n,
        });
    }
    let edge_masks: Vec<u32> = g.edges().iter().map(|&(v, w)| (1 << v) | (1 << w)).collect();
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let mask = combo.iter().fold(0u32, |m, &v| m | (1 << v));
            if edge_masks.iter().all(|&e| e & mask != 0) {
                return Ok(ExactSolution {
                    certificate: g.is_cover(&combo),
                    size: k,
                    chosen: combo,
                });
            }
            if k == 0 || !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set covers every edge")
}

struct WitnessSearch<'a, R, W> {
    base: &'a DirectedGraph,
    residual: R,
    elements: W,
    forbidden: Vec<bool>,
    chosen: Vec<usize>,
    best: Option<Vec<usize>>,
}

impl<R, W> WitnessSearch<'_, R, W>
where
    R: Fn(&DirectedGraph, &[usize]) -> DirectedGraph,
    W: Fn(&PathPair) -> Vec<usize>,
{
    fn branch(&mut self, budget: usize) {
        let g = (self.residual)(self.base, &self.chosen);
        if is_singly_connected(&g).singly_connected {
            let mut set = self.chosen.clone();
            set.sort_unstable();
            if self.best.as_ref().is_none_or(|b| set < *b) {
                self.best = Some(set);
            }
            return;
        }
        if budget == 0 {
            return;
        }
        let witness = first_converging_paths(&g)
            .expect("fast check rejected a graph in which the oracle finds no witness");
        let mut elems = (self.elements)(&witness);
        let mut seen = Vec::with_capacity(elems.len());
        elems.retain(|x| {
            let fresh = !seen.contains(x);
            seen.push(*x);
            fresh
        });

        let mut newly_forbidden = Vec::new();
        for &x in &elems {
            if self.forbidden[x] {
                continue;
            }
            self.chosen.push(x);
            self.branch(budget - 1);
            self.chosen.pop();
            self.forbidden[x] = true;
            newly_forbidden.push(x);
        }
        for x in newly_forbidden {
            self.forbidden[x] = false;
        }
    }
}

fn solve_by_witness_branching<R, W>(g: &DirectedGraph, universe: usize, residual: R, elements: W) -> Vec<usize>
where
    R: Fn(&DirectedGraph, &[usize]) -> DirectedGraph,
    W: Fn(&PathPair) -> Vec<usize>,
{
    let mut search = WitnessSearch {
        base: g,
        residual,
        elements,
        forbidden: vec![false; universe],
        chosen: Vec::new(),
        best: None,
    };
    for budget in 0..=universe {
        search.branch(budget);
        if let Some(best) = search.best.take() {
            return best;
        }
    }
    unreachable!("removing everything leaves a singly-connected graph")
}

fn without_edges(g: &DirectedGraph, removed: &[EdgeId]) -> DirectedGraph {
    let mut h = g.clone();
    for &e in removed {
        h.remove_edge(e);
    }
    h
}

fn without_vertices(g: &DirectedGraph, removed: &[VertexId]) -> DirectedGraph {
    let mut h = g.clone();
    for &v in removed {
        h.remove_vertex(v);
    }
    h
}

/// Smallest edge set whose removal leaves `g` singly-connected. Chosen ids are
/// edge ids of `g`.
pub fn exact_min_esc(g: &DirectedGraph) -> Result<ExactSolution> {
    if g.edge_count() > ESC_EDGE_LIMIT {
        return Err(Error::LimitExceeded {
            what: "ESC edge",
            limit: ESC_EDGE_LIMIT,
            actual: g.edge_count(),
        });
    }
    let chosen = solve_by_witness_branching(g, g.edge_slots(), without_edges, |w| {
        w.first.edges.iter().chain(&w.second.edges).copied().collect()
    });
    let certificate = first_converging_paths(&without_edges(g, &chosen)).is_none();
    Ok(ExactSolution {
        size: chosen.len(),
        chosen,
        certificate,
    })
}

/// Smallest vertex set whose removal leaves `g` singly-connected.
pub fn exact_min_vsc(g: &DirectedGraph) -> Result<ExactSolution> {
    if g.vertex_count() > VSC_VERTEX_LIMIT {
        return Err(Error::LimitExceeded {
            what: "VSC vertex",
            limit: VSC_VERTEX_LIMIT,
            actual: g.vertex_count(),
        });
    }
    let chosen = solve_by_witness_branching(g, g.vertex_count(), without_vertices, |w| {
        w.first.vertices.iter().chain(&w.second.vertices).copied().collect()
    });
    let certificate = first_converging_paths(&without_vertices(g, &chosen)).is_none();
    Ok(ExactSolution {
        size: chosen.len(),
        chosen,
        certificate,
    })
}

/// Residual graph after removing a solution of the given kind.
pub fn residual(g: &DirectedGraph, kind: GadgetKind, chosen: &[usize]) -> DirectedGraph {
    match kind {
        GadgetKind::Esc => without_edges(g, chosen),
        GadgetKind::Vsc => without_vertices(g, chosen),
    }
}
