//! The `scx` command line.
//!
//! Exit codes: 0 singly-connected (or success), 1 not singly-connected,
//! 2 usage, input or limit errors. [`run`] takes its streams as arguments so
//! the commands can be driven in-process.

use std::fmt::Write as _;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{bench_butterflies, to_csv, work_constant};
use crate::check::{is_singly_connected, naive_pipeline, witness_holds, NotScWitness};
use crate::generators::{butterfly, random_dag, random_digraph, simple_cycle};
use crate::graph::DirectedGraph;
use crate::hardness::{
    exact_min_esc, exact_min_vertex_cover, exact_min_vsc, reduce_vc_to_esc, reduce_vc_to_vsc,
    ExactSolution,
};
use crate::io::{parse_directed, parse_undirected, write_directed};
use crate::oracle::{oracle_singly_connected, OracleVerdict, ORACLE_VERTEX_LIMIT};
use crate::reduce::reduce_degree_one;
use crate::scc::condense;

#[derive(Debug, Parser)]
#[command(name = "scx", version, about = "Single-connectedness testing for directed graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a directed edge list is singly-connected.
    Check {
        /// Edge-list file, or "-" for standard input.
        file: String,
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        stats: bool,
        /// Also run the every-vertex DFS baseline and compare.
        #[arg(long)]
        naive: bool,
        /// Also run the brute-force path oracle and compare (at most 16 vertices).
        #[arg(long)]
        oracle: bool,
    },
    /// Print a generated graph as an edge list.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Print the degree-one reduced condensation and its vertex mapping.
    Reduce {
        file: String,
        /// Write the mapping here instead of as trailing comments.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Build the vertex-cover gadget for ESC or VSC.
    Hardness {
        kind: GadgetArg,
        /// Undirected edge list.
        file: String,
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Solve vertex cover, ESC or VSC exactly on a small instance.
    Solve {
        kind: SolveArg,
        file: String,
        #[arg(long, required = true)]
        exact: bool,
    },
    /// Write work counters for a range of butterfly graphs as CSV.
    Bench {
        #[arg(long, value_enum)]
        family: BenchFamily,
        #[arg(long)]
        min: u32,
        #[arg(long)]
        max: u32,
        #[arg(long)]
        csv: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    Butterfly { d: u32 },
    Cycle { n: usize },
    Gnp { n: usize, p: f64, seed: u64 },
    Dag { n: usize, p: f64, seed: u64 },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GadgetArg {
    Esc,
    Vsc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SolveArg {
    Vc,
    Esc,
    Vsc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BenchFamily {
    Butterfly,
}

/// Result of one command: exit code plus what goes to each stream.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn read_input(file: &str, stdin: &mut dyn Read) -> Result<String, String> {
    if file == "-" {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| format!("reading standard input: {e}"))?;
        Ok(text)
    } else {
        fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))
    }
}

fn read_directed(file: &str, stdin: &mut dyn Read) -> Result<DirectedGraph, String> {
    let text = read_input(file, stdin)?;
    parse_directed(&text).map_err(|e| format!("{file}: {e}"))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn origin_lines(origin: &[Vec<usize>], prefix: &str) -> String {
    let mut out = String::new();
    for (r, members) in origin.iter().enumerate() {
        writeln!(out, "{prefix}{r}: {}", join(members)).unwrap();
    }
    out
}

fn oracle_pair_line(v: &OracleVerdict) -> Option<String> {
    v.witness.as_ref().map(|w| {
        format!(
            "paths {} -> {}: [{}] [{}]",
            w.from,
            w.to,
            join(&w.first.vertices),
            join(&w.second.vertices)
        )
    })
}

pub fn cmd_check(g: &DirectedGraph, witness: bool, stats: bool, naive: bool, oracle: bool) -> Outcome {
    if oracle && g.vertex_count() > ORACLE_VERTEX_LIMIT {
        return Outcome::fail(format!(
            "--oracle refuses graphs with more than {ORACLE_VERTEX_LIMIT} vertices (got {})",
            g.vertex_count()
        ));
    }
    let verdict = is_singly_connected(g);
    let mut out = String::new();
    writeln!(out, "singly-connected: {}", yes_no(verdict.singly_connected)).unwrap();
    let mut code = if verdict.singly_connected { 0 } else { 1 };

    if witness {
        if let Some(w) = &verdict.witness {
            if !witness_holds(g, w) {
                return Outcome::fail("internal error: witness failed re-validation");
            }
            writeln!(out, "witness: {w}").unwrap();
            if let NotScWitness::ConvergingDfsPaths { .. } | NotScWitness::MultiEdgeAfterReduction { .. } = w {
                out.push_str("origin:\n");
                out.push_str(&origin_lines(w.origin().unwrap(), "  "));
            }
            if g.vertex_count() <= ORACLE_VERTEX_LIMIT {
                let ov = oracle_singly_connected(g).expect("size checked");
                match (&ov.witness, oracle_pair_line(&ov)) {
                    (Some(pair), Some(line)) if pair.is_valid_in(g) => {
                        writeln!(out, "{line}").unwrap();
                    }
                    _ => return Outcome::fail("internal error: oracle found no valid witness"),
                }
            }
        }
    }
    if stats {
        let c = verdict.counters;
        writeln!(out, "dfs_vertex_visits: {}", c.dfs_vertex_visits).unwrap();
        writeln!(out, "dfs_edge_explorations: {}", c.dfs_edge_explorations).unwrap();
        writeln!(out, "reduction_edges_touched: {}", c.reduction_edges_touched).unwrap();
        writeln!(out, "sources_processed: {}", c.sources_processed).unwrap();
        writeln!(out, "reduced_sources: {}", verdict.source_count).unwrap();
        writeln!(out, "reduced_sinks: {}", verdict.sink_count).unwrap();
        writeln!(out, "total_work: {}", c.total()).unwrap();
    }
    let mut stderr = String::new();
    if naive {
        let nv = naive_pipeline(g);
        let agrees = nv.singly_connected == verdict.singly_connected;
        writeln!(
            out,
            "naive: {} ({}); work {}",
            yes_no(nv.singly_connected),
            if agrees { "agrees" } else { "DISAGREES" },
            nv.counters.total()
        )
        .unwrap();
        if !agrees {
            code = 2;
            stderr.push_str("error: naive baseline disagrees\n");
        }
    }
    if oracle {
        let ov = oracle_singly_connected(g).expect("size checked");
        let agrees = ov.singly_connected == verdict.singly_connected;
        writeln!(
            out,
            "oracle: {} ({})",
            yes_no(ov.singly_connected),
            if agrees { "agrees" } else { "DISAGREES" }
        )
        .unwrap();
        if !agrees {
            code = 2;
            stderr.push_str("error: oracle disagrees\n");
        }
    }
    Outcome {
        code,
        stdout: out,
        stderr,
    }
}

pub fn cmd_gen(family: &Family) -> Outcome {
    let g = match *family {
        Family::Butterfly { d } => butterfly(d),
        Family::Cycle { n } => simple_cycle(n),
        Family::Gnp { n, p, seed } => random_digraph(n, p, seed),
        Family::Dag { n, p, seed } => random_dag(n, p, seed),
    };
    match g {
        Ok(g) => Outcome::ok(write_directed(&g)),
        Err(e) => Outcome::fail(e),
    }
}

fn with_mapping(mut body: String, mapping: &str, map: Option<&PathBuf>) -> Result<String, String> {
    match map {
        Some(path) => {
            fs::write(path, mapping).map_err(|e| format!("{}: {e}", path.display()))?;
        }
        None => {
            for line in mapping.lines() {
                writeln!(body, "# {line}").unwrap();
            }
        }
    }
    Ok(body)
}

pub fn cmd_reduce(g: &DirectedGraph, map: Option<&PathBuf>) -> Outcome {
    let cond = match condense(g) {
        Ok(c) => c,
        Err(reject) => {
            return Outcome {
                code: 1,
                stdout: format!("not singly-connected: {reject}\n"),
                stderr: String::new(),
            }
        }
    };
    let rg = reduce_degree_one(cond.dag.clone()).expect("condensation is acyclic");
    let origin: Vec<Vec<usize>> = rg
        .origin
        .iter()
        .map(|comps| {
            let mut vs: Vec<usize> = comps.iter().flat_map(|&c| cond.members(c).to_vec()).collect();
            vs.sort_unstable();
            vs
        })
        .collect();

    let mut body = String::new();
    let mut code = 0;
    if let Some((u, v)) = rg.multi_edge {
        writeln!(body, "# not singly-connected: reduced graph has parallel edges {u} -> {v}").unwrap();
        code = 1;
    }
    body.push_str(&write_directed(&rg.dag));
    match with_mapping(body, &origin_lines(&origin, ""), map) {
        Ok(stdout) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome::fail(e),
    }
}

pub fn cmd_hardness(kind: GadgetArg, text: &str, map: Option<&PathBuf>) -> Outcome {
    let g = match parse_undirected(text) {
        Ok(g) => g,
        Err(e) => return Outcome::fail(e),
    };
    let artifact = match kind {
        GadgetArg::Esc => reduce_vc_to_esc(&g),
        GadgetArg::Vsc => reduce_vc_to_vsc(&g),
    };
    match with_mapping(write_directed(&artifact.gadget), &artifact.mapping_text(), map) {
        Ok(stdout) => Outcome::ok(stdout),
        Err(e) => Outcome::fail(e),
    }
}

fn solution_text(problem: &str, sol: &ExactSolution) -> String {
    let mut out = String::new();
    writeln!(out, "problem: {problem}").unwrap();
    writeln!(out, "size: {}", sol.size).unwrap();
    writeln!(out, "chosen: {}", join(&sol.chosen)).unwrap();
    writeln!(out, "certificate: {}", if sol.certificate { "ok" } else { "FAILED" }).unwrap();
    out
}

pub fn cmd_solve(kind: SolveArg, text: &str) -> Outcome {
    let result = match kind {
        SolveArg::Vc => parse_undirected(text)
            .and_then(|g| exact_min_vertex_cover(&g))
            .map(|s| solution_text("vc", &s)),
        SolveArg::Esc => parse_directed(text).and_then(|g| {
            let s = exact_min_esc(&g)?;
            let mut out = solution_text("esc", &s);
            for &e in &s.chosen {
                let (u, v) = g.endpoints(e);
                writeln!(out, "edge {e}: {u} -> {v}").unwrap();
            }
            Ok(out)
        }),
        SolveArg::Vsc => parse_directed(text)
            .and_then(|g| exact_min_vsc(&g))
            .map(|s| solution_text("vsc", &s)),
    };
    match result {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::fail(e),
    }
}

pub fn cmd_bench(min: u32, max: u32, csv: &PathBuf) -> Outcome {
    if min > max {
        return Outcome::fail(format!("--min {min} exceeds --max {max}"));
    }
    let records = match bench_butterflies(min, max) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(e),
    };
    if let Err(e) = fs::write(csv, to_csv(&records)) {
        return Outcome::fail(format!("{}: {e}", csv.display()));
    }
    let c = work_constant();
    let mut out = format!("wrote {} rows to {}\n", records.len(), csv.display());
    let mut code = 0;
    let mut stderr = String::new();
    for r in &records {
        if !r.within_bound(c) {
            code = 1;
            writeln!(
                stderr,
                "work bound violated for {} {}: {} > {}",
                r.family,
                r.param,
                r.refined_work,
                r.work_bound(c)
            )
            .unwrap();
        }
    }
    writeln!(out, "work bound c = {c}: {}", if code == 0 { "ok" } else { "violated" }).unwrap();
    Outcome { code, stdout: out, stderr }
}

pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    match &cli.command {
        Command::Check {
            file,
            witness,
            stats,
            naive,
            oracle,
        } => match read_directed(file, stdin) {
            Ok(g) => cmd_check(&g, *witness, *stats, *naive, *oracle),
            Err(e) => Outcome::fail(e),
        },
        Command::Gen { family } => cmd_gen(family),
        Command::Reduce { file, map } => match read_directed(file, stdin) {
            Ok(g) => cmd_reduce(&g, map.as_ref()),
            Err(e) => Outcome::fail(e),
        },
        Command::Hardness { kind, file, map } => match read_input(file, stdin) {
            Ok(text) => cmd_hardness(*kind, &text, map.as_ref()),
            Err(e) => Outcome::fail(e),
        },
        Command::Solve { kind, file, .. } => match read_input(file, stdin) {
            Ok(text) => cmd_solve(*kind, &text),
            Err(e) => Outcome::fail(e),
        },
        Command::Bench { min, max, csv, .. } => cmd_bench(*min, *max, csv),
    }
}

/// Parses `args` (program name first), runs the command and writes its
/// output. Returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let outcome = match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli, stdin),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    };
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = stderr.write_all(outcome.stderr.as_bytes());
    outcome.code
}
