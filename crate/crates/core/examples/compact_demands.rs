//! Demands are handled as multiplicities, so the greedy costs the same
//! whether a subtree is wanted once or a million times.

use std::time::Instant;

use mstbl::gen::{random_instance, CapacityModel, GenConfig, Shape, SubtreeCount};
use mstbl::{bottom_up_greedy, is_feasible, load_vector, OrderPolicy};

fn main() -> mstbl::Result<()> {
    let small = random_instance(&GenConfig {
        seed: 5,
        tree_size: (8, 8),
        subtree_count: SubtreeCount::Range(4, 4),
        capacities: CapacityModel::Uniform { min: 2, max: 6 },
        demand: (1, 4),
        shape: Shape::GeneralSubtrees,
    })?;
    let (compact, _) = bottom_up_greedy(&small, &OrderPolicy::default())?;
    let (expanded, source) = small.expanded();
    let (unit, _) = bottom_up_greedy(&expanded, &OrderPolicy::default())?;
    let mut per_source = vec![0; small.len()];
    for (copy, &i) in source.iter().enumerate() {
        per_source[i] += unit.get(copy);
    }
    println!(
        "demands         {:?}",
        small.subtrees().iter().map(|s| s.demand()).collect::<Vec<_>>()
    );
    println!("compact greedy  {:?}", compact.multiplicities());
    println!("unit copies     {per_source:?} ({} copies)", expanded.len());

    for max_demand in [1, 1_000, 1_000_000] {
        let instance = random_instance(&GenConfig {
            seed: 1,
            tree_size: (1000, 1000),
            subtree_count: SubtreeCount::Range(2000, 2000),
            capacities: CapacityModel::Uniform {
                min: max_demand,
                max: 3 * max_demand,
            },
            demand: (max_demand, max_demand),
            shape: Shape::GeneralSubtrees,
        })?;
        let start = Instant::now();
        let (solution, _) = bottom_up_greedy(&instance, &OrderPolicy::default())?;
        let took = start.elapsed();
        let loads = load_vector(&instance, &solution)?;
        println!(
            "demand {max_demand:>9}: total {:>12}  L_V {:>9}  feasible {}  {took:?}",
            solution.total(),
            loads.max_vertex(),
            is_feasible(&instance, &solution)?
        );
    }
    Ok(())
}
