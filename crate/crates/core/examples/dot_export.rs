//! Prints the reduced graph of an edge-list file (or the contraction
//! example) in DOT, labelling each vertex with the input vertices it absorbed.
//!
//! cargo run --example dot_export [FILE] | dot -Tsvg > reduced.svg

use std::collections::HashMap;

use scx::fixtures::CONTRACTION_EXAMPLE;
use scx::io::{parse_directed, to_dot};
use scx::{condense, reduce_degree_one};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => CONTRACTION_EXAMPLE.to_string(),
    };
    let g = parse_directed(&text)?;
    let cond = condense(&g).map_err(|e| e.to_string())?;
    let rg = reduce_degree_one(cond.dag.clone())?;
    let labels: HashMap<usize, String> = rg
        .origin
        .iter()
        .enumerate()
        .map(|(r, comps)| {
            let mut vs: Vec<usize> = comps.iter().flat_map(|&c| cond.members(c).to_vec()).collect();
            vs.sort_unstable();
            let names: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
            (r, format!("{{{}}}", names.join(",")))
        })
        .collect();
    print!("{}", to_dot(&rg.dag, Some(&labels)));
    Ok(())
}
