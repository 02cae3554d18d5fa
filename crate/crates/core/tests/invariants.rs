use proptest::prelude::*;

use scx::io::{parse_directed, write_directed};
use scx::oracle::oracle_singly_connected;
use scx::{condense, is_singly_connected, reduce_degree_one, strongly_connected_components, DirectedGraph};

fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = DirectedGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m)
            .prop_map(move |edges| DirectedGraph::from_edges(n, edges))
    })
}

fn dag(max_n: usize, max_m: usize) -> impl Strategy<Value = DirectedGraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |pairs| {
            let edges = pairs
                .into_iter()
                .filter(|(u, v)| u != v)
                .map(|(u, v)| (u.min(v), u.max(v)));
            DirectedGraph::from_edges(n, edges)
        })
    })
}

fn reachable(g: &DirectedGraph, from: usize) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(v) = stack.pop() {
        for w in g.successors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

proptest! {
    #[test]
    fn reverse_is_an_involution(g in multigraph(12, 30)) {
        prop_assert_eq!(g.reverse().reverse().edge_multiset(), g.edge_multiset());
        let r = g.reverse();
        for v in 0..g.vertex_count() {
            prop_assert_eq!(r.indegree(v), g.outdegree(v));
            prop_assert_eq!(r.outdegree(v), g.indegree(v));
        }
    }

    #[test]
    fn serialization_round_trips(g in multigraph(12, 30)) {
        let text = write_directed(&g);
        let back = parse_directed(&text).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edge_multiset(), g.edge_multiset());
        prop_assert_eq!(write_directed(&back), text);
    }

    #[test]
    fn predecessors_transpose_successors(g in multigraph(12, 30)) {
        let mut out_pairs = Vec::new();
        let mut in_pairs = Vec::new();
        for v in 0..g.vertex_count() {
            out_pairs.extend(g.successors(v).map(|w| (v, w)));
            in_pairs.extend(g.predecessors(v).map(|u| (u, v)));
        }
        out_pairs.sort_unstable();
        in_pairs.sort_unstable();
        prop_assert_eq!(&out_pairs, &in_pairs);
        let total_out: usize = (0..g.vertex_count()).map(|v| g.outdegree(v)).sum();
        let total_in: usize = (0..g.vertex_count()).map(|v| g.indegree(v)).sum();
        prop_assert_eq!(total_out, g.edge_count());
        prop_assert_eq!(total_in, g.edge_count());
    }

    #[test]
    fn components_are_mutual_reachability(g in multigraph(10, 25)) {
        let comps = strongly_connected_components(&g);
        let reach: Vec<Vec<bool>> = (0..g.vertex_count()).map(|v| reachable(&g, v)).collect();
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                let same = comps.component_of[u] == comps.component_of[v];
                prop_assert_eq!(same, reach[u][v] && reach[v][u]);
            }
        }
    }

    #[test]
    fn condensation_is_sound(g in multigraph(10, 20)) {
        let sc = oracle_singly_connected(&g).unwrap().singly_connected;
        match condense(&g) {
            Ok(c) => {
                prop_assert!(c.dag.is_acyclic());
                prop_assert_eq!(c.dag.find_parallel_pair(), None);
                prop_assert_eq!(sc, oracle_singly_connected(&c.dag).unwrap().singly_connected);
            }
            Err(_) => prop_assert!(!sc),
        }
    }

    #[test]
    fn reduction_preserves_the_verdict(g in dag(9, 20)) {
        let before = oracle_singly_connected(&g).unwrap().singly_connected;
        let rg = reduce_degree_one(g.clone()).unwrap();
        prop_assert_eq!(before, oracle_singly_connected(&rg.dag).unwrap().singly_connected);
        prop_assert!(rg.edges_touched <= 3 * g.edge_count() as u64);
        if !rg.has_multi_edge() {
            for v in 0..rg.dag.vertex_count() {
                prop_assert!(rg.dag.indegree(v) != 1 && rg.dag.outdegree(v) != 1);
            }
        }
        let mut covered: Vec<usize> = rg.origin.iter().flatten().copied().collect();
        covered.sort_unstable();
        prop_assert_eq!(covered, (0..g.vertex_count()).collect::<Vec<_>>());
    }

    #[test]
    fn verdict_matches_oracle(g in multigraph(9, 18)) {
        let v = is_singly_connected(&g);
        prop_assert_eq!(v.singly_connected, oracle_singly_connected(&g).unwrap().singly_connected);
        prop_assert_eq!(v.singly_connected, v.witness.is_none());
    }
}
