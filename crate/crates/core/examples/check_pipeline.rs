//! Runs the full test on a graph given as an edge-list file (or the built-in
//! contraction example) and prints each stage.
//!
//! cargo run --example check_pipeline [FILE]

use scx::fixtures::CONTRACTION_EXAMPLE;
use scx::io::parse_directed;
use scx::{condense, is_singly_connected, reduce_degree_one};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => CONTRACTION_EXAMPLE.to_string(),
    };
    let g = parse_directed(&text)?;
    println!("input: {} vertices, {} edges", g.vertex_count(), g.edge_count());

    match condense(&g) {
        Err(reject) => println!("condensation rejects: {reject}"),
        Ok(cond) => {
            println!("components: {}", cond.components.len());
            let rg = reduce_degree_one(cond.dag.clone())?;
            println!(
                "reduced: {} vertices, {} edges, s = {}, t = {}",
                rg.dag.vertex_count(),
                rg.dag.edge_count(),
                rg.source_count,
                rg.sink_count
            );
            for (r, members) in rg.origin.iter().enumerate() {
                println!("  reduced vertex {r} <- components {members:?}");
            }
        }
    }

    let verdict = is_singly_connected(&g);
    println!("singly-connected: {}", verdict.singly_connected);
    if let Some(w) = &verdict.witness {
        println!("witness: {w}");
    }
    println!("work: {:?} (total {})", verdict.counters, verdict.counters.total());
    Ok(())
}
