//! Writing, reading and checking instance files.

use mstbl::io::{parse_instance, serialize_instance};
use mstbl::{is_feasible, overloaded_objects, residual_min_capacity, Solution};

const TEXT: &str = r#"
format_version = 1
root = 0
parents = [0, 0, 0, 1]
vertex_capacities = ["unbounded", 2, 1, 1]
edge_capacities = [2, 1, "unbounded"]

[[subtrees]]
vertices = [0, 1, 3]
demand = 2

[[subtrees]]
vertices = [0, 2]

[[subtrees]]
vertices = [1, 3]
demand = 5
"#;

fn main() -> mstbl::Result<()> {
    let instance = parse_instance(TEXT)?;
    println!(
        "{} vertices, {} subtrees, M = {}",
        instance.tree().vertex_count(),
        instance.len(),
        instance.max_nonroot_leaves()
    );

    let selection = Solution::from_multiplicities(vec![1, 1, 0]);
    println!(
        "selection {:?} feasible: {}",
        selection.multiplicities(),
        is_feasible(&instance, &selection)?
    );
    for i in 0..instance.len() {
        println!(
            "  room left for subtree {i}: {}",
            residual_min_capacity(&instance, &selection, i)?
        );
    }

    let too_much = Solution::from_multiplicities(vec![2, 1, 1]);
    println!("selection {:?}:", too_much.multiplicities());
    for (object, excess) in overloaded_objects(&instance, &too_much)? {
        println!("  {object} over capacity by {excess}");
    }

    print!("\n{}", serialize_instance(&instance));
    match parse_instance(&TEXT.replace("[1, 3]", "[2, 3]")) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("\nrejected: {e}"),
    }
    Ok(())
}
