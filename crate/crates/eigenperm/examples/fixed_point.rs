//! The explicit fixed-point recurrence: a_1 = 1 and a_{n+1} given by a sum
//! over the partitions of n in frequency-count form, with an exact
//! multinomial weight per partition. The result coincides, term by term,
//! with the self-composition eigensequence computed by series arithmetic.
//!
//! Run with: cargo run --example fixed_point

use eigenperm::lagrange::fixed_point_sequence;
use eigenperm::partitions::partitions_freq;
use eigenperm::series::eigensequence;

fn main() {
    let n = 20;
    let fp = fixed_point_sequence(n).unwrap();
    println!("partition-sum fixed point, {n} terms:");
    for (i, t) in fp.terms().iter().enumerate() {
        println!("  a_{:<2} = {t}", i + 1);
    }

    let eig = eigensequence(n);
    assert_eq!(fp.to_series(), eig);
    println!("matches the series-computed eigensequence exactly.");

    println!("\npartitions of 5 in frequency form (r_1..r_5), generation order:");
    for p in partitions_freq(5) {
        println!("  {:?}", p.freqs());
    }
}
