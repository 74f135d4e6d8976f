//! The revert-reciprocal transform B = (x/(1+A(x)))^<-1> and its modified,
//! invertible variant (the forced leading 1 deleted, entries shifted).
//! Two independent evaluation routes — truncated-series reversion and the
//! explicit partition sum — must produce identical integers.
//!
//! Run with: cargo run --example revert_reciprocal

use eigenperm::lagrange::{lagrange_revert_reciprocal, CountSequence};
use eigenperm::series::{
    eigensequence, revert_reciprocal, revert_reciprocal_modified, TruncatedSeries,
};

fn show(label: &str, values: &[String]) {
    println!("  {label}: {}", values.join(", "));
}

fn strings(s: &TruncatedSeries) -> Vec<String> {
    s.coeffs().iter().map(|c| c.to_string()).collect()
}

fn main() {
    let n = 10;

    // the transform of the zero sequence is the identity series
    let zeros = TruncatedSeries::zero(n);
    show("rr(0)", &strings(&revert_reciprocal(&zeros, n).unwrap()));

    // a = (1, 0, 0, ...) maps to the all-ones sequence
    let x = TruncatedSeries::from_integers(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
    show("rr(x)", &strings(&revert_reciprocal(&x, n).unwrap()));

    // the eigensequence is the unique fixed point
    let e = eigensequence(n);
    show("eigensequence", &strings(&e));
    show("rr(eigen)   ", &strings(&revert_reciprocal(&e, n).unwrap()));

    // modified transform: output k-th entry = rr output (k+1)-th entry
    show(
        "rr-mod(eigen)",
        &strings(&revert_reciprocal_modified(&e, n - 1).unwrap()),
    );

    // dual route on an arbitrary integer sequence
    let values = [3i64, -1, 4, 1, -5, 9, 2, -6, 5, 3];
    let by_series = revert_reciprocal(&TruncatedSeries::from_integers(&values), n).unwrap();
    let by_partitions =
        lagrange_revert_reciprocal(&CountSequence::from_integers(&values), n).unwrap();
    println!("\ninput {values:?}");
    show("series route   ", &strings(&by_series));
    show(
        "partition route",
        &by_partitions.terms().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
    );
    assert_eq!(by_partitions.to_series(), by_series);
    println!("both routes agree exactly.");
}
