//! Maximum independent set as subtree packing on a star.

use mstbl::gen::{mis_to_star, SimpleGraph};
use mstbl::{brute_force_opt, SolveBudget};

fn main() -> mstbl::Result<()> {
    let petersen = SimpleGraph::new(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ],
    )?;
    let instance = mis_to_star(&petersen)?;
    println!(
        "Petersen graph: star with {} leaves, {} sub-stars",
        instance.tree().vertex_count() - 1,
        instance.len()
    );
    let opt = brute_force_opt(&instance, &SolveBudget::default())?;
    let chosen: Vec<usize> = opt.selected().map(|(v, _)| v).collect();
    println!("independent set {chosen:?} of size {}", opt.total());

    for seed in 0..5 {
        let graph = SimpleGraph::random(seed, 8, 0.4)?;
        let opt = brute_force_opt(&mis_to_star(&graph)?, &SolveBudget::default())?;
        println!(
            "G(8, 0.4) seed {seed}: {} edges, independence number {}",
            graph.edge_count(),
            opt.total()
        );
    }
    Ok(())
}
