//! Applies degree-one contractions one at a time to the contraction example
//! and prints the graph after each step.
//!
//! cargo run --example contraction_steps

use scx::fixtures::contraction_example;
use scx::reduce::contract_once;

fn main() {
    let mut g = contraction_example();
    let mut step = 0;
    println!("start: {:?}", g.edge_multiset());
    while let Some((absorbed, survivor, next)) = contract_once(&g) {
        step += 1;
        println!("step {step}: merge {absorbed} into {survivor}");
        println!("  edges: {:?}", next.edge_multiset());
        if let Some((u, v)) = next.find_parallel_pair() {
            println!("  parallel edges {u} -> {v}: two distinct paths, not singly-connected");
        }
        g = next;
    }
    println!("no vertex of indegree or outdegree 1 remains after {step} steps");
}
