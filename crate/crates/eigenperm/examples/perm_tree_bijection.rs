//! The bijection between permutations with set-increasing
//! left-to-right-maximum blocks and cycle-labeled ordered trees.
//!
//! The running example is the 14-element word 3 1 2 5 4 11 7 6 8 12 14 13
//! 10 9. Its decomposition has segment lengths (3,2,4,1,4) and maximum
//! gaps (3,2,6,1,2); the tree's internal vertices, in walkaround order,
//! carry the cycles (4,3,2,1), (1), (4,2,1,3), (2,1), (3,1,2).
//!
//! Run with: cargo run --example perm_tree_bijection

use eigenperm::bijection::{perm_to_tree, tree_to_perm};
use eigenperm::perm::{lrmax_decompose, Permutation};

fn main() {
    let p: Permutation = "3 1 2 5 4 11 7 6 8 12 14 13 10 9".parse().unwrap();
    let d = lrmax_decompose(&p).unwrap();

    println!("word: {p}");
    print!("decomposition:");
    for s in &d.segments {
        print!(" {}", s.max);
        for v in &s.tail {
            print!(" {v}");
        }
        print!(" /");
    }
    println!();
    println!("segment lengths a = {:?}", d.segment_lengths());
    println!("maximum gaps    b = {:?}", d.max_gaps());

    let tree = perm_to_tree(&p).unwrap();
    println!("\ncycles at internal vertices (walkaround order):");
    for c in tree.preorder_cycles() {
        println!("  {c:?}");
    }
    println!("\ntree JSON:\n{}", serde_json::to_string_pretty(&tree).unwrap());

    let back = tree_to_perm(&tree).unwrap();
    assert_eq!(back, p);
    println!("\ninverse map recovers: {back}");

    // a word that fails the set-increasing condition has no tree
    let bad: Permutation = "3 2 4 1".parse().unwrap();
    match perm_to_tree(&bad) {
        Err(e) => println!("\n{bad} is rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
