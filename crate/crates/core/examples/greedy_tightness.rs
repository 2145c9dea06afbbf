//! The star family on which the bottom-up greedy is off by exactly M.

use mstbl::gen::tightness_instance;
use mstbl::greedy::Decision;
use mstbl::{bottom_up_greedy, brute_force_opt, OrderPolicy, SolveBudget};

fn main() -> mstbl::Result<()> {
    for m in 1..=6 {
        let instance = tightness_instance(m)?;
        let (greedy, trace) = bottom_up_greedy(&instance, &OrderPolicy::default())?;
        let opt = brute_force_opt(&instance, &SolveBudget::default())?;
        println!(
            "m={m}  M={}  greedy={}  opt={}  ratio={}",
            instance.max_nonroot_leaves(),
            greedy.total(),
            opt.total(),
            opt.total() / greedy.total()
        );
        if m == 3 {
            for &i in &trace.visit_order {
                match trace.decisions[i] {
                    Decision::Accepted(k) => println!("    subtree {i}: accepted x{k}"),
                    Decision::Rejected(o) => println!("    subtree {i}: rejected, {o} is full"),
                }
            }
        }
    }

    // visiting the paths before the star recovers the optimum
    let instance = tightness_instance(4)?;
    let (greedy, _) = bottom_up_greedy(&instance, &OrderPolicy::fewest_leaves_first())?;
    println!("fewest-leaves-first on m=4: greedy={}", greedy.total());
    Ok(())
}
