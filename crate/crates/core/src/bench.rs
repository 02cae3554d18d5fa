//! Work-counter benchmarks comparing the source-rooted test with the
//! every-vertex baseline.

use std::fmt::Write as _;
use std::time::Instant;

use crate::check::{is_singly_connected, naive_pipeline};
use crate::error::Result;
use crate::generators::butterfly;
use crate::graph::DirectedGraph;

/// Default constant `c` in the work bound `refined_work <= c·(s·t + m)`.
pub const DEFAULT_WORK_CONSTANT: u64 = 8;

pub const CSV_HEADER: &str =
    "family,param,n,m,s,t,refined_work,naive_work,wall_refined_us,wall_naive_us";

/// Reads `SCX_WORK_CONSTANT`, falling back to [`DEFAULT_WORK_CONSTANT`].
pub fn work_constant() -> u64 {
    std::env::var("SCX_WORK_CONSTANT")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_WORK_CONSTANT)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub family: String,
    pub param: String,
    pub n: usize,
    pub m: usize,
    pub s: usize,
    pub t: usize,
    pub refined_work: u64,
    pub naive_work: u64,
    pub wall_refined_us: u128,
    pub wall_naive_us: u128,
    pub singly_connected: bool,
}

impl BenchRecord {
    pub fn work_bound(&self, c: u64) -> u64 {
        c * (self.s as u64 * self.t as u64 + self.m as u64)
    }

    pub fn within_bound(&self, c: u64) -> bool {
        self.refined_work <= self.work_bound(c)
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.family,
            self.param,
            self.n,
            self.m,
            self.s,
            self.t,
            self.refined_work,
            self.naive_work,
            self.wall_refined_us,
            self.wall_naive_us
        )
    }
}

pub fn measure(family: &str, param: &str, g: &DirectedGraph) -> BenchRecord {
    let started = Instant::now();
    let refined = is_singly_connected(g);
    let wall_refined_us = started.elapsed().as_micros();

    let started = Instant::now();
    let naive = naive_pipeline(g);
    let wall_naive_us = started.elapsed().as_micros();

    assert_eq!(
        refined.singly_connected, naive.singly_connected,
        "refined and naive checks disagree on {family} {param}"
    );
    BenchRecord {
        family: family.to_string(),
        param: param.to_string(),
        n: g.vertex_count(),
        m: g.edge_count(),
        s: refined.source_count,
        t: refined.sink_count,
        refined_work: refined.counters.total(),
        naive_work: naive.counters.total(),
        wall_refined_us,
        wall_naive_us,
        singly_connected: refined.singly_connected,
    }
}

pub fn bench_butterflies(min_d: u32, max_d: u32) -> Result<Vec<BenchRecord>> {
    (min_d..=max_d)
        .map(|d| Ok(measure("butterfly", &d.to_string(), &butterfly(d)?)))
        .collect()
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::new();
    writeln!(out, "{CSV_HEADER}").unwrap();
    for r in records {
        writeln!(out, "{}", r.csv_row()).unwrap();
    }
    out
}
