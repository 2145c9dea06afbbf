//! Maximum k-colorable subgraph of a chordal graph from its subtree
//! representation: a vertex subset is k-colorable exactly when no tree vertex
//! lies in more than k of the chosen subtrees.

use mstbl::gen::chordal_mkc_to_instance;
use mstbl::{bottom_up_greedy, brute_force_opt, OrderPolicy, SolveBudget, Subtree, Tree};

fn main() -> mstbl::Result<()> {
    // host tree: a path 0-1-2-3-4-5 with an extra branch 2-6
    let tree = Tree::from_parents(&[0, 0, 1, 2, 3, 4, 2], 0)?;
    let sets: [&[usize]; 7] = [
        &[0, 1, 2],
        &[1, 2, 6],
        &[2, 3],
        &[2, 3, 4],
        &[3, 4, 5],
        &[6],
        &[1, 2, 3],
    ];
    let representation = sets
        .iter()
        .map(|s| Subtree::new(&tree, s.iter().copied(), 1))
        .collect::<mstbl::Result<Vec<_>>>()?;
    for k in 1..=4 {
        let instance = chordal_mkc_to_instance(tree.clone(), representation.clone(), k)?;
        let (greedy, _) = bottom_up_greedy(&instance, &OrderPolicy::default())?;
        let opt = brute_force_opt(&instance, &SolveBudget::default())?;
        let chosen: Vec<usize> = opt.selected().map(|(i, _)| i).collect();
        println!(
            "k={k}: greedy keeps {}, optimum keeps {} {chosen:?}",
            greedy.total(),
            opt.total()
        );
    }
    Ok(())
}
