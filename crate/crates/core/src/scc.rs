//! Strongly connected components and the condensation step.
//!
//! [`condense`] either proves the input is not singly-connected from its
//! component structure alone, or hands back the acyclic condensation on which
//! the rest of the test runs. The input is singly-connected exactly when every
//! nontrivial component is a simple directed cycle, no two edges join the same
//! ordered pair of components, and the condensation is singly-connected.
//!
//! Component ids are assigned in ascending order of each component's smallest
//! vertex. For an acyclic input every vertex is its own component, so the
//! condensation keeps the original vertex ids.

use std::collections::HashMap;
use std::fmt;

use crate::graph::{DirectedGraph, EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub component_of: Vec<usize>,
    /// Sorted members of each component.
    pub members: Vec<Vec<VertexId>>,
}

impl Components {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Iterative Tarjan. Removed vertex slots come out as singleton components.
pub fn strongly_connected_components(g: &DirectedGraph) -> Components {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut raw: Vec<Vec<VertexId>> = Vec::new();
    let mut counter = 0;

    // (vertex, successors still to scan)
    let mut call: Vec<(VertexId, Vec<VertexId>)> = Vec::new();
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        call.push((root, g.successors(root).collect::<Vec<_>>()));

        while let Some((v, pending)) = call.last_mut() {
            let v = *v;
            if let Some(w) = pending.pop() {
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, g.successors(w).collect()));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some((parent, _)) = call.last() {
                low[*parent] = low[*parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                raw.push(comp);
            }
        }
    }

    raw.sort_unstable_by_key(|c| c[0]);
    let mut component_of = vec![0; n];
    for (id, comp) in raw.iter().enumerate() {
        for &v in comp {
            component_of[v] = id;
        }
    }
    Components {
        component_of,
        members: raw,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    In,
    Out,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::In => "indegree",
            Direction::Out => "outdegree",
        })
    }
}

/// Structural reasons to answer "not singly-connected" before any DFS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EarlyReject {
    /// A component that is not a simple cycle: `vertex` has `degree` ≥ 2
    /// edges in the given direction that stay inside the component.
    NonCycleScc {
        component: usize,
        vertex: VertexId,
        direction: Direction,
        degree: usize,
    },
    /// Two original edges joining the same ordered pair of components.
    ParallelCondensationEdges {
        from_component: usize,
        to_component: usize,
        first: (VertexId, VertexId),
        second: (VertexId, VertexId),
    },
}

impl fmt::Display for EarlyReject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EarlyReject::NonCycleScc {
                component,
                vertex,
                direction,
                degree,
            } => write!(
                f,
                "component {component} is not a simple cycle: vertex {vertex} has internal {direction} {degree}"
            ),
            EarlyReject::ParallelCondensationEdges {
                from_component,
                to_component,
                first,
                second,
            } => write!(
                f,
                "edges {} -> {} and {} -> {} both join component {from_component} to component {to_component}",
                first.0, first.1, second.0, second.1
            ),
        }
    }
}

/// The acyclic, simple condensation of a graph.
#[derive(Debug, Clone)]
pub struct Condensation {
    pub dag: DirectedGraph,
    pub components: Components,
    /// Original edge behind each condensation edge, indexed by condensation
    /// edge id.
    pub edge_origin: Vec<EdgeId>,
}

impl Condensation {
    pub fn component_of(&self, v: VertexId) -> usize {
        self.components.component_of[v]
    }

    pub fn members(&self, c: usize) -> &[VertexId] {
        &self.components.members[c]
    }
}

pub fn condense(g: &DirectedGraph) -> Result<Condensation, EarlyReject> {
    let components = strongly_connected_components(g);
    let comp = &components.component_of;
    let n = g.vertex_count();

    let mut internal_in = vec![0usize; n];
    let mut internal_out = vec![0usize; n];
    for (_, u, v) in g.edges() {
        if comp[u] == comp[v] {
            internal_out[u] += 1;
            internal_in[v] += 1;
        }
    }
    for (direction, degrees) in [(Direction::In, &internal_in), (Direction::Out, &internal_out)] {
        if let Some(v) = (0..n).find(|&v| degrees[v] >= 2) {
            return Err(EarlyReject::NonCycleScc {
                component: comp[v],
                vertex: v,
                direction,
                degree: degrees[v],
            });
        }
    }

    let mut dag = DirectedGraph::new(components.len());
    let mut edge_origin = Vec::new();
    let mut seen: HashMap<(usize, usize), (VertexId, VertexId)> = HashMap::new();
    for (e, u, v) in g.edges() {
        let (cu, cv) = (comp[u], comp[v]);
        if cu == cv {
            continue;
        }
        if let Some(&first) = seen.get(&(cu, cv)) {
            return Err(EarlyReject::ParallelCondensationEdges {
                from_component: cu,
                to_component: cv,
                first,
                second: (u, v),
            });
        }
        seen.insert((cu, cv), (u, v));
        dag.add_edge(cu, cv);
        edge_origin.push(e);
    }

    Ok(Condensation {
        dag,
        components,
        edge_origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::contraction_example;

    /// Reachability closure by repeated relaxation.
    fn reach(g: &DirectedGraph) -> Vec<Vec<bool>> {
        let n = g.vertex_count();
        let mut r = vec![vec![false; n]; n];
        for (v, row) in r.iter_mut().enumerate() {
            row[v] = true;
        }
        loop {
            let mut changed = false;
            for a in 0..n {
                for (_, u, v) in g.edges() {
                    if r[a][u] && !r[a][v] {
                        r[a][v] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                return r;
            }
        }
    }

    fn brute_components(g: &DirectedGraph) -> Vec<Vec<VertexId>> {
        let r = reach(g);
        let n = g.vertex_count();
        let mut out: Vec<Vec<VertexId>> = Vec::new();
        for v in 0..n {
            if out.iter().any(|c| c.contains(&v)) {
                continue;
            }
            out.push((0..n).filter(|&w| r[v][w] && r[w][v]).collect());
        }
        out
    }

    #[test]
    fn three_cycle_is_one_component() {
        let g = DirectedGraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]);
        let c = strongly_connected_components(&g);
        assert_eq!(c.members, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn contraction_example_has_singletons() {
        let c = strongly_connected_components(&contraction_example());
        assert_eq!(c.len(), 8);
        assert_eq!(c.component_of, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn two_joined_two_cycles() {
        let g = DirectedGraph::from_edges(4, [(0, 1), (1, 0), (2, 3), (3, 2), (1, 2)]);
        let c = strongly_connected_components(&g);
        assert_eq!(c.members, brute_components(&g));
        assert_eq!(c.members, vec![vec![0, 1], vec![2, 3]]);
        let cond = condense(&g).unwrap();
        assert_eq!(cond.dag.edge_multiset(), vec![(0, 1)]);
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        for seed in 0..200 {
            let g = crate::generators::random_digraph(7, 0.25, seed).unwrap();
            let c = strongly_connected_components(&g);
            assert_eq!(c.members, brute_components(&g), "seed {seed}");
        }
    }

    #[test]
    fn cycle_with_entry_and_exit() {
        let g = DirectedGraph::from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 0), (1, 4)]);
        let cond = condense(&g).unwrap();
        assert_eq!(cond.dag.vertex_count(), 3);
        assert_eq!(cond.dag.edge_count(), 2);
        assert!(cond.dag.is_acyclic());
        assert_eq!(cond.members(0), &[0, 1, 2]);
    }

    #[test]
    fn chord_inside_two_cycle() {
        let g = DirectedGraph::from_edges(2, [(0, 1), (1, 0), (0, 1)]);
        assert_eq!(
            condense(&g).unwrap_err(),
            EarlyReject::NonCycleScc {
                component: 0,
                vertex: 1,
                direction: Direction::In,
                degree: 2
            }
        );
    }

    #[test]
    fn two_entries_into_a_cycle() {
        let g = DirectedGraph::from_edges(4, [(0, 1), (1, 2), (2, 0), (3, 0), (3, 1)]);
        assert_eq!(
            condense(&g).unwrap_err(),
            EarlyReject::ParallelCondensationEdges {
                from_component: 1,
                to_component: 0,
                first: (3, 0),
                second: (3, 1),
            }
        );
    }

    #[test]
    fn self_loops() {
        let one = DirectedGraph::from_edges(2, [(0, 0), (0, 1)]);
        let cond = condense(&one).unwrap();
        assert_eq!(cond.dag.edge_multiset(), vec![(0, 1)]);

        let two = DirectedGraph::from_edges(1, [(0, 0), (0, 0)]);
        assert!(matches!(
            condense(&two),
            Err(EarlyReject::NonCycleScc { vertex: 0, degree: 2, .. })
        ));
    }

    #[test]
    fn acyclic_input_keeps_ids() {
        let g = contraction_example();
        let cond = condense(&g).unwrap();
        assert_eq!(cond.dag.edge_multiset(), g.edge_multiset());
        let orig: Vec<_> = cond.edge_origin.iter().map(|&e| g.endpoints(e)).collect();
        let dag: Vec<_> = cond.dag.edges().map(|(_, u, v)| (u, v)).collect();
        assert_eq!(orig, dag);
    }
}
