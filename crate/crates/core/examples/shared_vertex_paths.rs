//! Exact packing of paths that are directed or run through the root.

use mstbl::exact::{build_endpoint_multigraph, leaf_augment};
use mstbl::gen::{random_instance, CapacityModel, GenConfig, Shape, SubtreeCount};
use mstbl::{bottom_up_greedy, brute_force_opt, solve_shared_vertex_paths, OrderPolicy, SolveBudget};

fn main() -> mstbl::Result<()> {
    let budget = SolveBudget::default();
    for seed in 0..8 {
        let instance = random_instance(&GenConfig {
            seed,
            tree_size: (8, 12),
            subtree_count: SubtreeCount::Range(6, 10),
            capacities: CapacityModel::Uniform { min: 1, max: 2 },
            demand: (1, 2),
            shape: Shape::RootCrossingPaths,
        })?;
        let crossing = instance.subtrees().iter().filter(|s| !s.is_directed_path()).count();
        let (greedy, _) = bottom_up_greedy(&instance, &OrderPolicy::default())?;
        let shared = solve_shared_vertex_paths(&instance, &budget)?;
        let opt = brute_force_opt(&instance, &budget)?;
        println!(
            "seed {seed}: {} paths ({crossing} through the root)  greedy {}  shared {}  brute force {}",
            instance.len(),
            greedy.total(),
            shared.total(),
            opt.total()
        );
    }

    let (seed, instance, through_root) = (0..)
        .map(|seed| {
            let instance = random_instance(&GenConfig {
                seed,
                tree_size: (7, 7),
                subtree_count: SubtreeCount::Range(5, 5),
                shape: Shape::RootCrossingPaths,
                ..GenConfig::default()
            })
            .expect("valid config");
            let through_root: Vec<usize> = (0..instance.len())
                .filter(|&i| !instance.subtrees()[i].is_directed_path())
                .collect();
            (seed, instance, through_root)
        })
        .find(|(_, _, through_root)| through_root.len() >= 3)
        .expect("some seed has three root-crossing paths");
    let (augmented, added) = leaf_augment(&instance.restricted_to(&through_root)?)?;
    let problem = build_endpoint_multigraph(&augmented)?;
    println!(
        "\nendpoint multigraph for seed {seed} ({} pendant leaves added)",
        added.len()
    );
    for e in &problem.edges {
        println!("  edge {}-{} x{}", e.u, e.v, e.multiplicity);
    }
    for set in &problem.laminar_sets {
        println!("  set {:?} bound {}", set.members, set.bound);
    }
    println!("  pairs through the root at most {}", problem.root_pair_bound);
    Ok(())
}
