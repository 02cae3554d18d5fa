//! Cross-checks the fast test against the brute-force path oracle on seeded
//! random multigraphs and prints a disagreement count.
//!
//! cargo run --release --example oracle_crosscheck [COUNT]

use scx::generators::random_multigraph;
use scx::is_singly_connected;
use scx::oracle::oracle_singly_connected;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let count: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5000);
    let mut positive = 0;
    let mut disagreements = 0;
    for seed in 0..count {
        let n = 2 + (seed % 9) as usize;
        let g = random_multigraph(n, n + (seed % 4) as usize, seed)?;
        let fast = is_singly_connected(&g);
        let slow = oracle_singly_connected(&g)?;
        positive += usize::from(slow.singly_connected);
        if fast.singly_connected != slow.singly_connected {
            disagreements += 1;
            println!("seed {seed}: fast {} oracle {}", fast.singly_connected, slow.singly_connected);
        } else if let Some(pair) = slow.witness.filter(|_| seed < 3) {
            println!(
                "seed {seed}: {} -> {} via vertices {:?} / {:?}, edges {:?} / {:?}",
                pair.from, pair.to, pair.first.vertices, pair.second.vertices, pair.first.edges, pair.second.edges
            );
        }
    }
    println!("{count} graphs, {positive} singly-connected, {disagreements} disagreements");
    Ok(())
}
