//! The modified revert-reciprocal transform and self-composition are very
//! different maps, yet solving "modified transform of A = self-composition
//! of A" coefficient by coefficient pins down a unique unital sequence —
//! the self-composition eigensequence. Any other sequence makes the two
//! transforms differ.
//!
//! Run with: cargo run --example agreement

use eigenperm::coeff::coeff_int;
use eigenperm::series::{
    agreement_unique_solution, eigensequence, revert_reciprocal_modified, self_composition,
    TruncatedSeries,
};

fn join(s: &TruncatedSeries) -> String {
    s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() {
    let n = 15;
    let solved = agreement_unique_solution(n).unwrap();
    println!("unique agreement solution ({n} terms):");
    println!("  {}", join(&solved));
    assert_eq!(solved, eigensequence(n));
    println!("equals the eigensequence, exactly.\n");

    // change one entry and the transforms immediately disagree
    let mut coeffs = eigensequence(n).into_coeffs();
    coeffs[7] += coeff_int(1);
    let perturbed = TruncatedSeries::new(coeffs);
    let lhs = self_composition(&perturbed, n).unwrap();
    let rhs = revert_reciprocal_modified(&perturbed, n).unwrap();
    println!("after adding 1 to the 8th entry:");
    println!("  self-composition:   {}", join(&lhs));
    println!("  modified transform: {}", join(&rhs));
    let first_diff = (1..=n).find(|&k| lhs.coeff(k) != rhs.coeff(k)).unwrap();
    println!("  first disagreement at index {first_diff}");
    assert_ne!(lhs, rhs);
}
