//! Builds both vertex-cover gadgets for a small undirected graph and solves
//! all three problems exactly.
//!
//! cargo run --release --example hardness_gadgets [FILE]

use scx::fixtures::COVER_EXAMPLE;
use scx::hardness::{
    exact_min_esc, exact_min_vertex_cover, exact_min_vsc, reduce_vc_to_esc, reduce_vc_to_vsc,
};
use scx::io::parse_undirected;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => COVER_EXAMPLE.to_string(),
    };
    let g = parse_undirected(&text)?;
    let vc = exact_min_vertex_cover(&g)?;
    println!("minimum vertex cover: {:?} (size {})", vc.chosen, vc.size);

    let esc = reduce_vc_to_esc(&g);
    println!(
        "ESC gadget: {} vertices, {} edges",
        esc.gadget.vertex_count(),
        esc.gadget.edge_count()
    );
    let esc_opt = exact_min_esc(&esc.gadget)?;
    println!("  optimum {} edges {:?}", esc_opt.size, esc_opt.chosen);
    println!("  cover lifted to edges: {:?}", esc.lift_cover(&vc.chosen));

    let vsc = reduce_vc_to_vsc(&g);
    println!(
        "VSC gadget: {} vertices, {} edges",
        vsc.gadget.vertex_count(),
        vsc.gadget.edge_count()
    );
    let vsc_opt = exact_min_vsc(&vsc.gadget)?;
    println!("  optimum {} vertices {:?}", vsc_opt.size, vsc_opt.chosen);

    let agree = vc.size == esc_opt.size && esc_opt.size == vsc_opt.size;
    println!("optima agree: {agree}");
    Ok(())
}
