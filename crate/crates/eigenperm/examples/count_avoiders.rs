//! Counting permutations that avoid the barred pattern: a 3241 occurrence
//! (positions i<j<k<l with p_k > p_i > p_j > p_l) is allowed only when it
//! extends to 35241, i.e. some entry between i and j exceeds p_k.
//!
//! Four independent methods agree: exhaustive search with the direct
//! checker, exhaustive search with the recursive block characterization,
//! the partition-sum recurrence, and the eigensequence coefficients.
//!
//! Run with: cargo run --example count_avoiders

use eigenperm::lagrange::fixed_point_sequence;
use eigenperm::perm::{count_avoiders, occurrences_3241, CheckMethod, Permutation};
use eigenperm::series::eigensequence;

fn main() {
    let p: Permutation = "3 5 2 4 1".parse().unwrap();
    println!("occurrences of 3241 in {p} (0-based index quadruples):");
    for occ in occurrences_3241(&p) {
        println!("  {occ:?}");
    }
    println!("the single occurrence extends via the 5, so {p} avoids.\n");

    println!("{:>3} {:>10} {:>10} {:>10} {:>10}", "n", "direct", "recursive", "recurrence", "eigen");
    let max_n = 8;
    let fp = fixed_point_sequence(max_n + 2).unwrap();
    let eig = eigensequence(max_n + 2);
    for n in 0..=max_n {
        let direct = count_avoiders(n, CheckMethod::Direct, max_n).unwrap();
        let recursive = count_avoiders(n, CheckMethod::Recursive, max_n).unwrap();
        let recurrence = fp.term(n + 1).clone();
        let by_eigen = eig.coeff(n + 1).numer().clone();
        assert!(direct == recursive && recursive == recurrence && recurrence == by_eigen);
        println!("{n:>3} {direct:>10} {recursive:>10} {recurrence:>10} {by_eigen:>10}");
    }
    println!("\nall four methods agree exactly.");
}
