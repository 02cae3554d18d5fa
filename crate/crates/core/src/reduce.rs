//! Degree-one contraction of an acyclic graph.
//!
//! A vertex with a single in-edge `(u, v)` is merged into `u`; a vertex with a
//! single out-edge `(v, w)` is merged into `w`. Both rules preserve single
//! connectedness. The reduced graph has no vertex of indegree or outdegree 1,
//! so every non-source has indegree ≥ 2 and every non-sink outdegree ≥ 2.
//!
//! Adjacency is kept in circular doubly linked lists threaded through the
//! edges, so merging `v` into `u` links `v`'s whole list into `u`'s in O(1).
//! Edges keep their original endpoints; a union-find over vertices resolves
//! an endpoint to the vertex that absorbed it.
//!
//! The two rules run in alternating phases until neither applies. One pass of
//! each is not enough: merging an outdegree-1 source into its successor lowers
//! that successor's indegree, possibly to 1. Parallel edges produced by a merge
//! are kept and reported by a single scan at the end.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, EdgeId, VertexId};

const NIL: usize = usize::MAX;

#[derive(Debug, Clone)]
pub struct ReducedGraph {
    pub dag: DirectedGraph,
    /// Input vertices merged into each reduced vertex, sorted.
    pub origin: Vec<Vec<VertexId>>,
    pub source_count: usize,
    pub sink_count: usize,
    /// First repeated `(tail, head)` pair of `dag`, if any.
    pub multi_edge: Option<(VertexId, VertexId)>,
    pub edges_touched: u64,
}

impl ReducedGraph {
    pub fn has_multi_edge(&self) -> bool {
        self.multi_edge.is_some()
    }
}

pub fn count_sources_sinks(rg: &ReducedGraph) -> (usize, usize) {
    (rg.dag.sources().count(), rg.dag.sinks().count())
}

/// Endpoint-linked adjacency used only while contracting.
struct SpliceGraph {
    tail: Vec<VertexId>,
    head: Vec<VertexId>,
    next_out: Vec<EdgeId>,
    prev_out: Vec<EdgeId>,
    next_in: Vec<EdgeId>,
    prev_in: Vec<EdgeId>,
    out_first: Vec<EdgeId>,
    in_first: Vec<EdgeId>,
    indegree: Vec<usize>,
    outdegree: Vec<usize>,
    absorbed_by: Vec<VertexId>,
    alive: Vec<bool>,
    touched: u64,
}

#[derive(Clone, Copy)]
enum Side {
    Out,
    In,
}

impl SpliceGraph {
    fn build(g: &DirectedGraph) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        let mut s = SpliceGraph {
            tail: Vec::with_capacity(m),
            head: Vec::with_capacity(m),
            next_out: Vec::with_capacity(m),
            prev_out: Vec::with_capacity(m),
            next_in: Vec::with_capacity(m),
            prev_in: Vec::with_capacity(m),
            out_first: vec![NIL; n],
            in_first: vec![NIL; n],
            indegree: vec![0; n],
            outdegree: vec![0; n],
            absorbed_by: (0..n).collect(),
            alive: (0..n).map(|v| g.is_vertex_alive(v)).collect(),
            touched: 0,
        };
        for (_, u, v) in g.edges() {
            let e = s.tail.len();
            s.tail.push(u);
            s.head.push(v);
            s.next_out.push(e);
            s.prev_out.push(e);
            s.next_in.push(e);
            s.prev_in.push(e);
            s.append(Side::Out, u, e);
            s.append(Side::In, v, e);
            s.outdegree[u] += 1;
            s.indegree[v] += 1;
            s.touched += 1;
        }
        s
    }

    fn links(&mut self, side: Side) -> (&mut Vec<EdgeId>, &mut Vec<EdgeId>, &mut Vec<EdgeId>) {
        match side {
            Side::Out => (&mut self.next_out, &mut self.prev_out, &mut self.out_first),
            Side::In => (&mut self.next_in, &mut self.prev_in, &mut self.in_first),
        }
    }

    /// Inserts the single-element ring `e` at the end of `v`'s list.
    fn append(&mut self, side: Side, v: VertexId, e: EdgeId) {
        let (next, prev, first) = self.links(side);
        let f = first[v];
        if f == NIL {
            first[v] = e;
            return;
        }
        let last = prev[f];
        next[last] = e;
        prev[e] = last;
        next[e] = f;
        prev[f] = e;
    }

    fn unlink(&mut self, side: Side, v: VertexId, e: EdgeId) {
        let (next, prev, first) = self.links(side);
        let (p, n) = (prev[e], next[e]);
        if n == e {
            first[v] = NIL;
        } else {
            next[p] = n;
            prev[n] = p;
            if first[v] == e {
                first[v] = n;
            }
        }
        next[e] = e;
        prev[e] = e;
    }

    /// Moves `from`'s whole list to the end of `into`'s list.
    fn splice(&mut self, side: Side, into: VertexId, from: VertexId) {
        let (next, prev, first) = self.links(side);
        let b = first[from];
        first[from] = NIL;
        if b == NIL {
            return;
        }
        let a = first[into];
        if a == NIL {
            first[into] = b;
            return;
        }
        let (a_last, b_last) = (prev[a], prev[b]);
        next[a_last] = b;
        prev[b] = a_last;
        next[b_last] = a;
        prev[a] = b_last;
    }

    fn find(&mut self, v: VertexId) -> VertexId {
        let mut root = v;
        while self.absorbed_by[root] != root {
            root = self.absorbed_by[root];
        }
        let mut cur = v;
        while self.absorbed_by[cur] != root {
            let next = self.absorbed_by[cur];
            self.absorbed_by[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges indegree-1 vertex `v` into its predecessor; returns it.
    fn merge_into_predecessor(&mut self, v: VertexId) -> VertexId {
        let e = self.in_first[v];
        let u = self.find(self.tail[e]);
        self.unlink(Side::In, v, e);
        self.unlink(Side::Out, u, e);
        self.splice(Side::Out, u, v);
        self.outdegree[u] = self.outdegree[u] + self.outdegree[v] - 1;
        self.retire(v, u);
        u
    }

    /// Merges outdegree-1 vertex `v` into its successor; returns it.
    fn merge_into_successor(&mut self, v: VertexId) -> VertexId {
        let e = self.out_first[v];
        let w = self.find(self.head[e]);
        self.unlink(Side::Out, v, e);
        self.unlink(Side::In, w, e);
        self.splice(Side::In, w, v);
        self.indegree[w] = self.indegree[w] + self.indegree[v] - 1;
        self.retire(v, w);
        w
    }

    fn retire(&mut self, v: VertexId, survivor: VertexId) {
        self.absorbed_by[v] = survivor;
        self.alive[v] = false;
        self.indegree[v] = 0;
        self.outdegree[v] = 0;
        // the removed edge and the splice
        self.touched += 2;
    }

    /// Live out-neighbours of `u` in list order, resolved to survivors.
    fn out_heads(&mut self, u: VertexId) -> Vec<VertexId> {
        let mut heads = Vec::with_capacity(self.outdegree[u]);
        let first = self.out_first[u];
        if first == NIL {
            return heads;
        }
        let mut e = first;
        loop {
            let h = self.head[e];
            heads.push(self.find(h));
            e = self.next_out[e];
            if e == first {
                break;
            }
        }
        heads
    }
}

fn pop_min(heap: &mut BinaryHeap<Reverse<VertexId>>) -> Option<VertexId> {
    heap.pop().map(|Reverse(v)| v)
}

/// Contracts every indegree-1 and outdegree-1 vertex of an acyclic graph.
///
/// Candidates are processed in ascending vertex id, indegree phase first.
pub fn reduce_degree_one(dag: DirectedGraph) -> Result<ReducedGraph> {
    if !dag.is_acyclic() {
        return Err(Error::Contract(
            "degree-one reduction needs an acyclic input".into(),
        ));
    }
    let n = dag.vertex_count();
    let present: Vec<bool> = (0..n).map(|v| dag.is_vertex_alive(v)).collect();
    let mut sg = SpliceGraph::build(&dag);
    drop(dag);

    let mut in_queue: BinaryHeap<Reverse<VertexId>> = (0..n)
        .filter(|&v| sg.alive[v] && sg.indegree[v] == 1)
        .map(Reverse)
        .collect();
    let mut out_queue: BinaryHeap<Reverse<VertexId>> = (0..n)
        .filter(|&v| sg.alive[v] && sg.outdegree[v] == 1)
        .map(Reverse)
        .collect();

    while !in_queue.is_empty() || !out_queue.is_empty() {
        while let Some(v) = pop_min(&mut in_queue) {
            if !sg.alive[v] || sg.indegree[v] != 1 {
                continue;
            }
            let u = sg.merge_into_predecessor(v);
            if sg.outdegree[u] == 1 {
                out_queue.push(Reverse(u));
            }
        }
        while let Some(v) = pop_min(&mut out_queue) {
            if !sg.alive[v] || sg.outdegree[v] != 1 {
                continue;
            }
            let w = sg.merge_into_successor(v);
            if sg.indegree[w] == 1 {
                in_queue.push(Reverse(w));
            }
        }
    }

    let mut new_id = vec![NIL; n];
    let mut count = 0;
    for (v, id) in new_id.iter_mut().enumerate() {
        if sg.alive[v] {
            *id = count;
            count += 1;
        }
    }

    let mut reduced = DirectedGraph::new(count);
    let mut last_tail = vec![NIL; count];
    let mut multi_edge = None;
    for u in 0..n {
        if !sg.alive[u] {
            continue;
        }
        for h in sg.out_heads(u) {
            let (nu, nh) = (new_id[u], new_id[h]);
            // one touch for the parallel-edge scan, one for the copy
            sg.touched += 2;
            if last_tail[nh] == nu && multi_edge.is_none() {
                multi_edge = Some((nu, nh));
            }
            last_tail[nh] = nu;
            reduced.add_edge(nu, nh);
        }
    }

    let mut origin = vec![Vec::new(); count];
    for v in (0..n).filter(|&v| present[v]) {
        let root = sg.find(v);
        origin[new_id[root]].push(v);
    }

    let source_count = reduced.sources().count();
    let sink_count = reduced.sinks().count();
    Ok(ReducedGraph {
        dag: reduced,
        origin,
        source_count,
        sink_count,
        multi_edge,
        edges_touched: sg.touched,
    })
}

/// One contraction step, for inspection: the smallest live vertex with
/// indegree 1 is merged into its predecessor, or failing that the smallest
/// with outdegree 1 into its successor. Vertex ids are kept; the absorbed
/// vertex becomes a dead slot. Returns `(absorbed, survivor, graph)`, or
/// `None` when the graph is already reduced.
pub fn contract_once(dag: &DirectedGraph) -> Option<(VertexId, VertexId, DirectedGraph)> {
    let live = || (0..dag.vertex_count()).filter(|&v| dag.is_vertex_alive(v));
    let (v, into_predecessor) = match live().find(|&v| dag.indegree(v) == 1) {
        Some(v) => (v, true),
        None => (live().find(|&v| dag.outdegree(v) == 1)?, false),
    };
    let mut g = dag.clone();
    let (e, survivor) = if into_predecessor {
        g.in_edges(v).next().expect("indegree is 1")
    } else {
        g.out_edges(v).next().expect("outdegree is 1")
    };
    g.remove_edge(e);
    let moved: Vec<(VertexId, VertexId)> = if into_predecessor {
        g.out_edges(v).map(|(_, w)| (survivor, w)).collect()
    } else {
        g.in_edges(v).map(|(_, u)| (u, survivor)).collect()
    };
    g.remove_vertex(v);
    for (a, b) in moved {
        g.add_edge(a, b);
    }
    Some((v, survivor, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{diamond, contraction_example, CONTRACTION_FIRST_STEP_EDGES};
    use crate::generators::butterfly;

    fn no_degree_one(g: &DirectedGraph) -> bool {
        (0..g.vertex_count()).all(|v| g.indegree(v) != 1 && g.outdegree(v) != 1)
    }

    #[test]
    fn rejects_cycles() {
        let g = DirectedGraph::from_edges(2, [(0, 1), (1, 0)]);
        assert!(matches!(reduce_degree_one(g), Err(Error::Contract(_))));
    }

    #[test]
    fn first_contraction_of_contraction_example() {
        // Drive a single merge by hand: vertex 2 is the smallest id with
        // indegree 1.
        let g = contraction_example();
        let mut sg = SpliceGraph::build(&g);
        let u = sg.merge_into_predecessor(2);
        assert_eq!(u, 1);
        let mut edges = Vec::new();
        for v in 0..8 {
            if sg.alive[v] {
                edges.extend(sg.out_heads(v).into_iter().map(|h| (v, h)));
            }
        }
        edges.sort_unstable();
        let mut expected = CONTRACTION_FIRST_STEP_EDGES.to_vec();
        expected.sort_unstable();
        assert_eq!(edges, expected);
        assert_eq!(sg.outdegree[1], 3);
        assert!(!sg.alive[2]);

        let (v, u, once) = contract_once(&g).unwrap();
        assert_eq!((v, u), (2, 1));
        assert_eq!(once.edge_multiset(), expected);
        assert!(contract_once(&butterfly(2).unwrap()).is_none());
    }

    #[test]
    fn contraction_example_full_reduction() {
        let rg = reduce_degree_one(contraction_example()).unwrap();
        // survivors 0, 1, 3, 4, 5 renumbered 0..5
        assert_eq!(rg.origin, vec![vec![0], vec![1, 2], vec![3, 6], vec![4, 7], vec![5]]);
        assert_eq!(
            rg.dag.edge_multiset(),
            vec![(0, 1), (0, 3), (1, 3), (1, 3), (1, 4), (2, 1), (2, 4)]
        );
        assert_eq!(rg.multi_edge, Some((1, 3)));
        assert_eq!((rg.source_count, rg.sink_count), (2, 2));
        assert_eq!(count_sources_sinks(&rg), (2, 2));
    }

    #[test]
    fn chain_collapses() {
        let rg = reduce_degree_one(DirectedGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)])).unwrap();
        assert_eq!(rg.dag.vertex_count(), 1);
        assert_eq!(rg.dag.edge_count(), 0);
        assert_eq!((rg.source_count, rg.sink_count), (1, 1));
        assert!(!rg.has_multi_edge());
        assert_eq!(rg.origin, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn diamond_produces_parallel_edges() {
        let rg = reduce_degree_one(diamond()).unwrap();
        assert_eq!(rg.dag.edge_multiset(), vec![(0, 1), (0, 1)]);
        assert!(rg.has_multi_edge());
    }

    #[test]
    fn source_with_single_out_edge_needs_a_second_round() {
        // 0 -> 2, 1 -> 2, 1 -> 3, 2 -> 3, 2 -> 4. Merging 0 into 2 leaves 2
        // with indegree 1, which only a second indegree phase removes.
        let g = DirectedGraph::from_edges(5, [(0, 2), (1, 2), (1, 3), (2, 3), (2, 4)]);
        let rg = reduce_degree_one(g).unwrap();
        assert!(rg.has_multi_edge() || no_degree_one(&rg.dag));
    }

    #[test]
    fn empty_graph() {
        let rg = reduce_degree_one(DirectedGraph::new(0)).unwrap();
        assert_eq!(count_sources_sinks(&rg), (0, 0));
    }

    #[test]
    fn butterfly_is_already_reduced() {
        let b = butterfly(2).unwrap();
        let rg = reduce_degree_one(b.clone()).unwrap();
        assert_eq!(rg.dag.edge_multiset(), b.edge_multiset());
        assert_eq!(count_sources_sinks(&rg), (4, 4));
        let b3 = reduce_degree_one(butterfly(3).unwrap()).unwrap();
        assert_eq!(count_sources_sinks(&b3), (8, 8));
    }

    #[test]
    fn idempotent_on_random_dags() {
        for seed in 0..300 {
            let g = crate::generators::random_dag(9, 0.35, seed).unwrap();
            let m = g.edge_count() as u64;
            let rg = reduce_degree_one(g).unwrap();
            assert!(rg.edges_touched <= 4 * m, "seed {seed}");
            if rg.has_multi_edge() {
                continue;
            }
            assert!(no_degree_one(&rg.dag), "seed {seed}");
            let again = reduce_degree_one(rg.dag.clone()).unwrap();
            assert_eq!(again.dag.edge_multiset(), rg.dag.edge_multiset());
            assert_eq!(again.dag.vertex_count(), rg.dag.vertex_count());
        }
    }
}
