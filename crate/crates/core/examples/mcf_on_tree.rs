//! Integral multicommodity flow on a tree network with edge capacities.

use mstbl::gen::{mcf_to_instance, Commodity};
use mstbl::{bottom_up_greedy, brute_force_opt, Capacity, OrderPolicy, SolveBudget, Tree};

fn main() -> mstbl::Result<()> {
    //        0
    //      /   \
    //     1     2
    //    / \     \
    //   3   4     5
    let tree = Tree::from_parents(&[0, 0, 0, 1, 1, 2], 0)?;
    let edge_caps = [0, 2, 1, 1, 1, 2].map(Capacity::Finite).to_vec();
    let commodities = [
        Commodity {
            source: 3,
            sink: 5,
            demand: 2,
        },
        Commodity {
            source: 4,
            sink: 5,
            demand: 1,
        },
        Commodity {
            source: 3,
            sink: 4,
            demand: 3,
        },
        Commodity {
            source: 1,
            sink: 2,
            demand: 1,
        },
    ];
    let instance = mcf_to_instance(tree, &commodities, edge_caps)?;
    let (greedy, _) = bottom_up_greedy(&instance, &OrderPolicy::default())?;
    let opt = brute_force_opt(&instance, &SolveBudget::default())?;
    println!("M = {}", instance.max_nonroot_leaves());
    println!("greedy flow  {} units {:?}", greedy.total(), greedy.multiplicities());
    println!("optimum flow {} units {:?}", opt.total(), opt.multiplicities());
    Ok(())
}
