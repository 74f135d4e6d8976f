//! Counting ordered trees exactly, by outdegree census and with weights.
//!
//! The census formula multinomial(n+1; r_0..r_n)/(n+1) counts trees with
//! r_i vertices of outdegree i. Weighting each internal vertex of
//! outdegree k by w_k and summing over all trees gives:
//!   - the next fixed-point term, when w is the fixed-point sequence;
//!   - the number of cycle-labeled trees (equivalently, of permutations
//!     with set-increasing blocks), when w_k = (k-1)!.
//!
//! Run with: cargo run --example weighted_trees

use eigenperm::lagrange::{fixed_point_sequence, CountSequence};
use eigenperm::partitions::factorial;
use eigenperm::tree::{enumerate_trees, tree_count_by_outdegree, weighted_tree_count, WeightedMode};

fn main() {
    println!("trees with 4 edges, grouped by outdegree census:");
    let mut census: std::collections::BTreeMap<Vec<usize>, u64> = Default::default();
    for t in enumerate_trees(4).unwrap() {
        *census.entry(t.outdegree_census().counts().to_vec()).or_default() += 1;
    }
    for (r, observed) in &census {
        let formula = tree_count_by_outdegree(
            &eigenperm::tree::OutdegreeSequence::new(r.clone()).unwrap(),
        );
        println!("  census {r:?}: enumerated {observed}, formula {formula}");
        assert_eq!(formula, (*observed).into());
    }
    println!("  total: {} (Catalan number)", census.values().sum::<u64>());

    println!("\nfixed-point weights reproduce the next term:");
    let fp = fixed_point_sequence(11).unwrap();
    for n in 1..=9 {
        let w = CountSequence::new(fp.terms()[..n].to_vec());
        let by_formula = weighted_tree_count(n, &w, WeightedMode::Formula).unwrap();
        let by_enum = weighted_tree_count(n, &w, WeightedMode::Enumerate).unwrap();
        assert_eq!(by_enum, by_formula);
        assert_eq!(&by_formula, fp.term(n + 1));
        println!("  n={n}: weighted count {by_formula} = a_{}", n + 1);
    }

    println!("\nfactorial weights count cycle-labeled trees:");
    let w = CountSequence::new((1..=7).map(|k| factorial(k - 1)).collect());
    for n in 1..=7 {
        let count = weighted_tree_count(n, &w, WeightedMode::Formula).unwrap();
        println!("  n={n}: {count}");
    }
}
