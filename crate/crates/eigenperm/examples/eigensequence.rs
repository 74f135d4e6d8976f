//! The left-shift eigensequence for self-composition: the unique unital
//! sequence A with A(A(x)) = (A(x) - x)/x, i.e. composing the sequence
//! with itself shifts it left by one.
//!
//! Run with: cargo run --example eigensequence

use eigenperm::series::{eigensequence, left_shift, self_composition};

fn main() {
    let n = 12;
    let e = eigensequence(n);
    println!("first {n} terms:");
    println!("  {}", join(e.coeffs()));

    let shifted = left_shift(&e).unwrap();
    let composed = self_composition(&e, n - 1).unwrap();
    println!("self-composition (first {} terms):", n - 1);
    println!("  {}", join(composed.coeffs()));
    println!("left shift:");
    println!("  {}", join(shifted.coeffs()));
    assert_eq!(composed, shifted);
    println!("self-composition equals the left shift, exactly.");
}

fn join(coeffs: &[eigenperm::Coeff]) -> String {
    coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}
