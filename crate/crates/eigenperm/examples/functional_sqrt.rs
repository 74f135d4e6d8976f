//! Functional square root of self-composition: given B with positive
//! leading term that is a rational square, recover the series A with
//! A(A(x)) = B(x). Exact rationals only — an irrational square root is
//! reported, never approximated.
//!
//! Run with: cargo run --example functional_sqrt

use eigenperm::coeff::coeff_rat;
use eigenperm::series::{
    eigensequence, functional_sqrt, left_shift, self_composition, TruncatedSeries,
};

fn join(s: &TruncatedSeries) -> String {
    s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() {
    // round trip on an arbitrary unital integer series
    let a = TruncatedSeries::from_integers(&[1, -3, 2, 0, 5, -1, 4, 2]);
    let b = self_composition(&a, 8).unwrap();
    println!("A      = {}", join(&a));
    println!("A(A(x)) = {}", join(&b));
    let recovered = functional_sqrt(&b, 8).unwrap();
    println!("sqrt    = {}", join(&recovered));
    assert_eq!(recovered, a);

    // the left shift of the eigensequence pulls back to the eigensequence
    let e = eigensequence(13);
    let shifted = left_shift(&e).unwrap();
    let pulled = functional_sqrt(&shifted, 12).unwrap();
    assert_eq!(pulled, eigensequence(12));
    println!("\nsqrt of the shifted eigensequence is the eigensequence again:");
    println!("  {}", join(&pulled));

    // rational leading terms work when they are exact squares
    let b = TruncatedSeries::new(vec![coeff_rat(9, 4), coeff_rat(1, 2), coeff_rat(-3, 1)]);
    let a = functional_sqrt(&b, 3).unwrap();
    println!("\nleading term 9/4 has square root 3/2: sqrt = {}", join(&a));
    assert_eq!(self_composition(&a, 3).unwrap(), b);

    // and are rejected otherwise
    let b = TruncatedSeries::from_integers(&[2, 0, 0]);
    match functional_sqrt(&b, 3) {
        Err(e) => println!("leading term 2 is rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
