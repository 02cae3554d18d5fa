//! Deterministic graph families.
//!
//! The random generators draw from ChaCha8 seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`. Each candidate edge consumes one `u64`;
//! its top 53 bits become a uniform `f64` in `[0, 1)` and the edge is kept when
//! that value is below `p`. Candidate order is fixed and documented per
//! generator, so a seed names the same graph on every platform.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, VertexId};

pub const MAX_BUTTERFLY_DIMENSION: u32 = 20;

/// Vertex counts and edge counts of the butterfly `B_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ButterflySpec {
    pub dimension: u32,
}

impl ButterflySpec {
    pub fn columns(&self) -> usize {
        1 << self.dimension
    }

    pub fn levels(&self) -> usize {
        self.dimension as usize + 1
    }

    pub fn vertex_count(&self) -> usize {
        self.columns() * self.levels()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.columns() * self.dimension as usize
    }

    pub fn source_count(&self) -> usize {
        self.columns()
    }

    pub fn sink_count(&self) -> usize {
        self.columns()
    }

    /// Id of the vertex at `(level, column)`.
    pub fn vertex(&self, level: usize, column: usize) -> VertexId {
        level * self.columns() + column
    }
}

/// Butterfly network `B_d`, oriented from level `d` (sources) down to level 0
/// (sinks). Vertex `(l, c)` has id `l * 2^d + c`; each `(l+1, c)` has edges to
/// `(l, c)` and `(l, c ^ 2^l)`.
pub fn butterfly(d: u32) -> Result<DirectedGraph> {
    if d == 0 || d > MAX_BUTTERFLY_DIMENSION {
        return Err(Error::InvalidParameter(format!(
            "butterfly dimension must be in 1..={MAX_BUTTERFLY_DIMENSION}, got {d}"
        )));
    }
    let spec = ButterflySpec { dimension: d };
    let mut g = DirectedGraph::new(spec.vertex_count());
    for level in (0..d as usize).rev() {
        for c in 0..spec.columns() {
            let from = spec.vertex(level + 1, c);
            g.add_edge(from, spec.vertex(level, c));
            g.add_edge(from, spec.vertex(level, c ^ (1 << level)));
        }
    }
    Ok(g)
}

/// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`; `n = 1` is a self-loop.
pub fn simple_cycle(n: usize) -> Result<DirectedGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("cycle length must be at least 1".into()));
    }
    Ok(DirectedGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))))
}

/// Directed path `0 -> 1 -> ... -> n-1`.
pub fn chain(n: usize) -> DirectedGraph {
    DirectedGraph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

struct Coin(ChaCha8Rng);

impl Coin {
    fn new(seed: u64) -> Self {
        Coin(ChaCha8Rng::seed_from_u64(seed))
    }

    fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    fn flip(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    fn below(&mut self, bound: usize) -> usize {
        (self.unit() * bound as f64) as usize
    }
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "edge probability must be in [0, 1], got {p}"
        )))
    }
}

/// Candidates `i -> j` for `i < j`, in lexicographic order of `(i, j)`.
pub fn random_dag(n: usize, p: f64, seed: u64) -> Result<DirectedGraph> {
    check_probability(p)?;
    let mut coin = Coin::new(seed);
    let mut g = DirectedGraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if coin.flip(p) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Candidates are all ordered pairs `i -> j` with `i != j`, lexicographic.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Result<DirectedGraph> {
    random_digraph_with(n, p, seed, false)
}

/// Like [`random_digraph`]; with `self_loops` the pairs `i -> i` are
/// candidates too.
pub fn random_digraph_with(n: usize, p: f64, seed: u64, self_loops: bool) -> Result<DirectedGraph> {
    check_probability(p)?;
    let mut coin = Coin::new(seed);
    let mut g = DirectedGraph::new(n);
    for i in 0..n {
        for j in 0..n {
            if (i != j || self_loops) && coin.flip(p) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// `m` edges with both endpoints drawn uniformly from `0..n`, so parallel
/// edges and self-loops occur. Each endpoint consumes one `u64`.
pub fn random_multigraph(n: usize, m: usize, seed: u64) -> Result<DirectedGraph> {
    if n == 0 && m > 0 {
        return Err(Error::InvalidParameter("edges need at least one vertex".into()));
    }
    let mut coin = Coin::new(seed);
    let mut g = DirectedGraph::new(n);
    for _ in 0..m {
        let u = coin.below(n);
        let v = coin.below(n);
        g.add_edge(u, v);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn butterfly_counts() {
        let b1 = butterfly(1).unwrap();
        assert_eq!((b1.vertex_count(), b1.edge_count()), (4, 4));
        assert_eq!(b1.edge_multiset(), vec![(2, 0), (2, 1), (3, 0), (3, 1)]);

        for (d, n, m) in [(2, 12, 16), (3, 32, 48)] {
            let g = butterfly(d).unwrap();
            let spec = ButterflySpec { dimension: d };
            assert_eq!((g.vertex_count(), g.edge_count()), (n, m));
            assert_eq!((spec.vertex_count(), spec.edge_count()), (n, m));
            assert_eq!(g.sources().count(), spec.source_count());
            assert_eq!(g.sinks().count(), spec.sink_count());
            assert!(g.find_parallel_pair().is_none());
        }
        assert!(butterfly(0).is_err());
        assert!(butterfly(21).is_err());
    }

    #[test]
    fn butterfly_st_exceeds_m_from_d3() {
        for d in 3..=12 {
            let s = ButterflySpec { dimension: d };
            assert!(s.source_count() * s.sink_count() > s.edge_count());
        }
    }

    #[test]
    fn cycles() {
        assert_eq!(simple_cycle(1).unwrap().edge_multiset(), vec![(0, 0)]);
        assert_eq!(simple_cycle(3).unwrap().edge_count(), 3);
        assert!(simple_cycle(0).is_err());
    }

    #[test]
    fn forced_probabilities() {
        assert_eq!(random_dag(5, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(
            random_dag(3, 1.0, 1).unwrap().edge_multiset(),
            vec![(0, 1), (0, 2), (1, 2)]
        );
        assert_eq!(random_digraph(4, 0.0, 9).unwrap().edge_count(), 0);
        assert_eq!(
            random_digraph(2, 1.0, 9).unwrap().edge_multiset(),
            vec![(0, 1), (1, 0)]
        );
        assert_eq!(random_digraph_with(2, 1.0, 9, true).unwrap().edge_count(), 4);
        assert!(random_dag(3, 1.5, 0).is_err());
        assert!(random_digraph(3, -0.1, 0).is_err());
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = random_dag(6, 0.5, 42).unwrap();
        let b = random_dag(6, 0.5, 42).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        let c = random_digraph(6, 0.5, 42).unwrap();
        let d = random_digraph(6, 0.5, 42).unwrap();
        assert_eq!(c.edges().collect::<Vec<_>>(), d.edges().collect::<Vec<_>>());
        let e = random_multigraph(5, 9, 3).unwrap();
        assert_eq!(e.edge_count(), 9);
        assert_eq!(e.edge_multiset(), random_multigraph(5, 9, 3).unwrap().edge_multiset());
    }
}
