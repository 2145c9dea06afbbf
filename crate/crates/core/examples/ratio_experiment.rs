//! Greedy against the exact optimum on seeded random path instances.
//!
//! `cargo run --release --example ratio_experiment -- [trials] [seed]`

use mstbl::bench::{run_ratio_experiment, ExactMethod};
use mstbl::gen::GenConfig;
use mstbl::SolveBudget;

fn main() -> mstbl::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|a| a.parse().ok()).unwrap_or(200);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(0);
    let config = GenConfig::default().with_seed(seed);
    let report = run_ratio_experiment(&config, trials, ExactMethod::Oracle, &SolveBudget::default())?;
    let csv = report.to_csv();
    for line in csv.lines().take(6) {
        println!("{line}");
    }
    println!("...");
    println!("{}", report.summary());

    let mut worst: Vec<_> = report
        .rows
        .iter()
        .filter_map(|r| r.ratio().map(|x| (x, r.seed)))
        .collect();
    worst.sort_by(|a, b| b.0.total_cmp(&a.0));
    for (ratio, seed) in worst.iter().take(3) {
        println!("seed {seed}: ratio {ratio:.3}");
    }
    Ok(())
}
