//! Directed multigraphs and simple undirected graphs over dense integer ids.
//!
//! [`DirectedGraph`] is the carrier used everywhere: for the input graph, its
//! condensation and the reduced graph. Parallel edges and self-loops are
//! ordinary edges, and degrees count multiplicity. Removing an edge or a
//! vertex only flips a liveness flag, so ids stay valid until
//! [`DirectedGraph::compact`] renumbers what is left.

use std::collections::HashSet;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct EdgeSlot {
    tail: VertexId,
    head: VertexId,
    alive: bool,
}

#[derive(Debug, Clone, Default)]
pub struct DirectedGraph {
    edges: Vec<EdgeSlot>,
    out_lists: Vec<Vec<EdgeId>>,
    in_lists: Vec<Vec<EdgeId>>,
    vertex_alive: Vec<bool>,
    indegree: Vec<usize>,
    outdegree: Vec<usize>,
    live_edges: usize,
}

impl DirectedGraph {
    pub fn new(vertex_count: usize) -> Self {
        DirectedGraph {
            edges: Vec::new(),
            out_lists: vec![Vec::new(); vertex_count],
            in_lists: vec![Vec::new(); vertex_count],
            vertex_alive: vec![true; vertex_count],
            indegree: vec![0; vertex_count],
            outdegree: vec![0; vertex_count],
            live_edges: 0,
        }
    }

    /// Builds a graph from `(tail, head)` pairs, in order.
    ///
    /// Panics if an endpoint is out of range.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = DirectedGraph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Number of vertex slots, dead ones included.
    pub fn vertex_count(&self) -> usize {
        self.vertex_alive.len()
    }

    pub fn live_vertex_count(&self) -> usize {
        self.vertex_alive.iter().filter(|&&a| a).count()
    }

    /// Number of live edges, counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    /// Upper bound (exclusive) on edge ids handed out so far.
    pub fn edge_slots(&self) -> usize {
        self.edges.len()
    }

    pub fn is_vertex_alive(&self, v: VertexId) -> bool {
        self.vertex_alive[v]
    }

    pub fn is_edge_alive(&self, e: EdgeId) -> bool {
        self.edges[e].alive
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.out_lists.push(Vec::new());
        self.in_lists.push(Vec::new());
        self.vertex_alive.push(true);
        self.indegree.push(0);
        self.outdegree.push(0);
        self.vertex_alive.len() - 1
    }

    pub fn add_edge(&mut self, tail: VertexId, head: VertexId) -> EdgeId {
        let n = self.vertex_count();
        assert!(
            tail < n && head < n,
            "edge ({tail}, {head}) out of range for {n} vertices"
        );
        assert!(
            self.vertex_alive[tail] && self.vertex_alive[head],
            "edge ({tail}, {head}) touches a removed vertex"
        );
        let id = self.edges.len();
        self.edges.push(EdgeSlot {
            tail,
            head,
            alive: true,
        });
        self.out_lists[tail].push(id);
        self.in_lists[head].push(id);
        self.outdegree[tail] += 1;
        self.indegree[head] += 1;
        self.live_edges += 1;
        id
    }

    /// Marks an edge dead. Returns `false` if it already was.
    pub fn remove_edge(&mut self, e: EdgeId) -> bool {
        let slot = &mut self.edges[e];
        if !slot.alive {
            return false;
        }
        slot.alive = false;
        let (u, v) = (slot.tail, slot.head);
        self.outdegree[u] -= 1;
        self.indegree[v] -= 1;
        self.live_edges -= 1;
        true
    }

    /// Marks a vertex dead together with every incident edge.
    pub fn remove_vertex(&mut self, v: VertexId) {
        if !self.vertex_alive[v] {
            return;
        }
        let incident: Vec<EdgeId> = self.out_lists[v]
            .iter()
            .chain(self.in_lists[v].iter())
            .copied()
            .collect();
        for e in incident {
            self.remove_edge(e);
        }
        self.vertex_alive[v] = false;
    }

    /// Endpoints of an edge (live or not).
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let s = self.edges[e];
        (s.tail, s.head)
    }

    pub fn indegree(&self, v: VertexId) -> usize {
        self.indegree[v]
    }

    pub fn outdegree(&self, v: VertexId) -> usize {
        self.outdegree[v]
    }

    /// Live out-edges of `v` as `(edge, head)`, in insertion order.
    pub fn out_edges(&self, v: VertexId) -> impl Iterator<Item = (EdgeId, VertexId)> + '_ {
        self.out_lists[v].iter().filter_map(move |&e| {
            let s = self.edges[e];
            s.alive.then_some((e, s.head))
        })
    }

    /// Live in-edges of `v` as `(edge, tail)`, in insertion order.
    pub fn in_edges(&self, v: VertexId) -> impl Iterator<Item = (EdgeId, VertexId)> + '_ {
        self.in_lists[v].iter().filter_map(move |&e| {
            let s = self.edges[e];
            s.alive.then_some((e, s.tail))
        })
    }

    pub fn successors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out_edges(v).map(|(_, h)| h)
    }

    pub fn predecessors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.in_edges(v).map(|(_, t)| t)
    }

    /// All live edges as `(edge, tail, head)`, ordered by ascending tail and
    /// then by insertion order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| self.out_edges(u).map(move |(e, v)| (e, u, v)))
    }

    /// Sorted list of live `(tail, head)` pairs, repeated by multiplicity.
    pub fn edge_multiset(&self) -> Vec<(VertexId, VertexId)> {
        let mut pairs: Vec<_> = self.edges().map(|(_, u, v)| (u, v)).collect();
        pairs.sort_unstable();
        pairs
    }

    /// Every edge flipped. Vertex ids, liveness and edge ids are kept.
    pub fn reverse(&self) -> DirectedGraph {
        DirectedGraph {
            edges: self
                .edges
                .iter()
                .map(|s| EdgeSlot {
                    tail: s.head,
                    head: s.tail,
                    alive: s.alive,
                })
                .collect(),
            out_lists: self.in_lists.clone(),
            in_lists: self.out_lists.clone(),
            vertex_alive: self.vertex_alive.clone(),
            indegree: self.outdegree.clone(),
            outdegree: self.indegree.clone(),
            live_edges: self.live_edges,
        }
    }

    /// Drops dead vertices and edges. Live vertices keep their relative order;
    /// the returned map sends each old id to its new id.
    pub fn compact(&self) -> (DirectedGraph, Vec<Option<VertexId>>) {
        let mut remap = vec![None; self.vertex_count()];
        let mut next = 0;
        for (v, slot) in remap.iter_mut().enumerate() {
            if self.vertex_alive[v] {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut g = DirectedGraph::new(next);
        for (_, u, v) in self.edges() {
            g.add_edge(remap[u].unwrap(), remap[v].unwrap());
        }
        (g, remap)
    }

    pub fn has_self_loop(&self) -> bool {
        self.edges().any(|(_, u, v)| u == v)
    }

    /// Kahn order over live vertices, or `None` if a cycle exists.
    pub fn topological_order(&self) -> Option<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut indeg = self.indegree.clone();
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<VertexId> = (0..n)
            .rev()
            .filter(|&v| self.vertex_alive[v] && indeg[v] == 0)
            .collect();
        while let Some(u) = stack.pop() {
            order.push(u);
            for w in self.successors(u) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        (order.len() == self.live_vertex_count()).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// First `(tail, head)` pair, in [`DirectedGraph::edges`] order, that
    /// occurs more than once.
    pub fn find_parallel_pair(&self) -> Option<(VertexId, VertexId)> {
        let mut last_tail = vec![usize::MAX; self.vertex_count()];
        for u in 0..self.vertex_count() {
            for v in self.successors(u) {
                if last_tail[v] == u {
                    return Some((u, v));
                }
                last_tail[v] = u;
            }
        }
        None
    }

    pub fn sources(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).filter(|&v| self.vertex_alive[v] && self.indegree[v] == 0)
    }

    pub fn sinks(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).filter(|&v| self.vertex_alive[v] && self.outdegree[v] == 0)
    }
}

/// Simple undirected graph: no self-loops, no duplicate edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UndirectedGraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    seen: HashSet<(VertexId, VertexId)>,
}

impl UndirectedGraph {
    pub fn new(vertex_count: usize) -> Self {
        UndirectedGraph {
            vertex_count,
            ..Default::default()
        }
    }

    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = UndirectedGraph::new(vertex_count);
        for (v, w) in edges {
            g.add_edge(v, w)?;
        }
        Ok(g)
    }

    /// Adds `{v, w}`. Edges are stored with the smaller endpoint first.
    pub fn add_edge(&mut self, v: VertexId, w: VertexId) -> Result<usize> {
        if v >= self.vertex_count || w >= self.vertex_count {
            return Err(Error::InvalidParameter(format!(
                "edge {{{v}, {w}}} out of range for {} vertices",
                self.vertex_count
            )));
        }
        if v == w {
            return Err(Error::InvalidParameter(format!("self-loop at {v}")));
        }
        let key = (v.min(w), v.max(w));
        if !self.seen.insert(key) {
            return Err(Error::InvalidParameter(format!(
                "duplicate edge {{{}, {}}}",
                key.0, key.1
            )));
        }
        self.edges.push(key);
        Ok(self.edges.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in insertion order, each as `(min, max)`.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn is_cover(&self, chosen: &[VertexId]) -> bool {
        let mut mark = vec![false; self.vertex_count];
        for &v in chosen {
            mark[v] = true;
        }
        self.edges.iter().all(|&(v, w)| mark[v] || mark[w])
    }
}
