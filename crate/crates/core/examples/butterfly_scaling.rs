//! Compares the source-rooted test with the every-vertex baseline on
//! butterfly graphs and prints the CSV table.
//!
//! cargo run --release --example butterfly_scaling [MAX_D]

use scx::bench::{bench_butterflies, to_csv, work_constant};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(9);
    let rows = bench_butterflies(2, max)?;
    print!("{}", to_csv(&rows));

    let c = work_constant();
    println!();
    println!("d  refined/prev  naive/refined  within c={c}");
    for (i, r) in rows.iter().enumerate() {
        let growth = match i {
            0 => "-".to_string(),
            _ => format!("{:.2}", r.refined_work as f64 / rows[i - 1].refined_work as f64),
        };
        println!(
            "{:<2} {:>12}  {:>13.2}  {}",
            r.param,
            growth,
            r.naive_work as f64 / r.refined_work as f64,
            r.within_bound(c)
        );
    }
    Ok(())
}
