//! Writes one graph of each generator family as an edge list.
//!
//! cargo run --example generate_graphs

use scx::generators::{butterfly, chain, random_dag, random_digraph, simple_cycle, ButterflySpec};
use scx::io::write_directed;
use scx::is_singly_connected;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ButterflySpec { dimension: 2 };
    println!(
        "# butterfly d=2: {} vertices, {} edges, {} sources, {} sinks",
        spec.vertex_count(),
        spec.edge_count(),
        spec.source_count(),
        spec.sink_count()
    );
    let graphs = [
        ("butterfly 2", butterfly(2)?),
        ("cycle 5", simple_cycle(5)?),
        ("chain 4", chain(4)),
        ("gnp 6 0.25 1", random_digraph(6, 0.25, 1)?),
        ("dag 6 0.4 1", random_dag(6, 0.4, 1)?),
    ];
    for (name, g) in &graphs {
        println!("# {name}: singly-connected = {}", is_singly_connected(g).singly_connected);
        print!("{}", write_directed(g));
    }
    Ok(())
}
