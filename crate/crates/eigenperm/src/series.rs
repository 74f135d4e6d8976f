//! Truncated formal power series over exact rationals.
//!
//! A [`TruncatedSeries`] holds the coefficients c_1..c_N of a series
//! c_1 x + c_2 x^2 + ... + c_N x^N. The constant term is identically zero
//! and is not stored; indices are 1-based throughout, matching the usual
//! (a_n)_{n>=1} sequence convention.
//!
//! On top of composition and reversion this module provides the
//! revert-reciprocal transform A(x) -> (x/(1+A(x)))^<-1>, its modified
//! (invertible) variant that drops the forced leading 1 and shifts, the
//! left-shift eigensequence for self-composition (the unique unital A with
//! A(A(x)) = (A(x) - x)/x), a functional square root of self-composition,
//! and the solver showing that the modified transform and self-composition
//! agree only on that eigensequence.
//!
//! Everything is exact; re-running any operation yields identical
//! coefficients.

use num::{BigInt, One, Zero};

use crate::coeff::{rational_sqrt, Coeff};
use crate::error::{Error, Result};

/// Coefficients c_1..c_N of a formal power series with zero constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Coeff>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Coeff>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        TruncatedSeries {
            coeffs: values
                .iter()
                .map(|&v| Coeff::from_integer(BigInt::from(v)))
                .collect(),
        }
    }

    /// The zero series truncated at x^order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Coeff::zero(); order],
        }
    }

    /// The identity series x, padded with zeros to the given order.
    pub fn identity(order: usize) -> Self {
        let mut coeffs = vec![Coeff::zero(); order];
        if order >= 1 {
            coeffs[0] = Coeff::one();
        }
        TruncatedSeries { coeffs }
    }

    /// Truncation order N (the number of stored coefficients).
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of x^k, 1-based. Panics when k is 0 or exceeds the order.
    pub fn coeff(&self, k: usize) -> &Coeff {
        assert!(k >= 1 && k <= self.coeffs.len(), "coefficient index {k} out of range");
        &self.coeffs[k - 1]
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coeff> {
        self.coeffs
    }

    /// True when the first coefficient is 1.
    pub fn is_unital(&self) -> bool {
        !self.coeffs.is_empty() && self.coeffs[0].is_one()
    }

    /// The first n coefficients as a new series. Panics when n exceeds the order.
    pub fn prefix(&self, n: usize) -> Self {
        assert!(n <= self.coeffs.len());
        TruncatedSeries {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }
}

// Dense polynomials with a constant term (index = power) serve as
// intermediates for composition; all products are truncated at `cap`.
fn poly_mul_trunc(a: &[Coeff], b: &[Coeff], cap: usize) -> Vec<Coeff> {
    let mut out = vec![Coeff::zero(); cap + 1];
    for (i, ai) in a.iter().enumerate().take(cap + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(cap + 1 - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Coefficients of outer(inner(x)) through x^n, by Horner accumulation.
///
/// Requires both inputs to have order at least n; exact.
pub fn series_compose(
    outer: &TruncatedSeries,
    inner: &TruncatedSeries,
    n: usize,
) -> Result<TruncatedSeries> {
    for s in [outer, inner] {
        if s.order() < n {
            return Err(Error::OrderTooSmall {
                needed: n,
                have: s.order(),
            });
        }
    }
    if n == 0 {
        return Ok(TruncatedSeries::new(Vec::new()));
    }
    let mut y = vec![Coeff::zero(); n + 1];
    for k in 1..=n {
        y[k] = inner.coeff(k).clone();
    }
    // outer(y) = y*(o_1 + y*(o_2 + ... + y*o_n)); terms of outer beyond x^n
    // cannot reach x^n because y has valuation 1.
    let mut acc = vec![Coeff::zero(); n + 1];
    acc[0] = outer.coeff(n).clone();
    for k in (1..n).rev() {
        acc = poly_mul_trunc(&acc, &y, n);
        acc[0] += outer.coeff(k);
    }
    let res = poly_mul_trunc(&acc, &y, n);
    debug_assert!(res[0].is_zero());
    Ok(TruncatedSeries::new(res[1..].to_vec()))
}

/// Compositional inverse g of f through x^n: f(g(x)) = g(f(x)) = x.
///
/// Solved term by term: once g_1..g_{k-1} are fixed, the coefficient of
/// x^k in f(g(x)) is linear in g_k with pivot f_1. Powers of g are kept in
/// a triangular table so each new column costs O(k^2) coefficient products.
pub fn series_revert(f: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    if f.order() < n {
        return Err(Error::OrderTooSmall {
            needed: n,
            have: f.order(),
        });
    }
    if n == 0 {
        return Ok(TruncatedSeries::new(Vec::new()));
    }
    let f1 = f.coeff(1);
    if f1.is_zero() {
        return Err(Error::NonInvertible);
    }

    // t[j][k] = [x^k] g(x)^j for 1 <= j <= k <= n.
    let mut t = vec![vec![Coeff::zero(); n + 1]; n + 1];
    let mut g = vec![Coeff::zero(); n + 1];
    g[1] = f1.recip();
    t[1][1] = g[1].clone();

    for k in 2..=n {
        // Powers j >= 2 at x^k involve only g_1..g_{k-1}.
        for j in 2..=k {
            let mut s = Coeff::zero();
            for i in 1..=(k - j + 1) {
                if !g[i].is_zero() && !t[j - 1][k - i].is_zero() {
                    s += &g[i] * &t[j - 1][k - i];
                }
            }
            t[j][k] = s;
        }
        // [x^k] f(g) = f_1 g_k + sum_{j>=2} f_j [x^k] g^j must vanish.
        let mut s = Coeff::zero();
        for j in 2..=k {
            let fj = f.coeff(j);
            if !fj.is_zero() && !t[j][k].is_zero() {
                s += fj * &t[j][k];
            }
        }
        g[k] = -s / f1;
        t[1][k] = g[k].clone();
    }
    Ok(TruncatedSeries::new(g[1..].to_vec()))
}

/// a(a(x)) through x^n.
pub fn self_composition(a: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    series_compose(a, a, n)
}

/// Drop the first coefficient: (a_2, a_3, ..., a_N). Output order N-1.
pub fn left_shift(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    if a.order() < 2 {
        return Err(Error::OrderTooSmall {
            needed: 2,
            have: a.order(),
        });
    }
    Ok(TruncatedSeries::new(a.coeffs()[1..].to_vec()))
}

/// The revert-reciprocal transform B = (x/(1+A(x)))^<-1> through x^n.
///
/// The reciprocal of 1+A is expanded exactly, then the result is reverted.
/// B_1 is always 1, so the transform is unital-valued. Needs a_1..a_{n-1},
/// i.e. input order at least n-1.
pub fn revert_reciprocal(a: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    if a.order() + 1 < n {
        return Err(Error::OrderTooSmall {
            needed: n - 1,
            have: a.order(),
        });
    }
    if n == 0 {
        return Ok(TruncatedSeries::new(Vec::new()));
    }
    // recip[m] = [x^m] (1+A)^{-1}: recip[0] = 1, then convolution recurrence.
    let mut recip = vec![Coeff::zero(); n];
    recip[0] = Coeff::one();
    for m in 1..n {
        let mut s = Coeff::zero();
        for i in 1..=m.min(a.order()) {
            let ai = a.coeff(i);
            if !ai.is_zero() && !recip[m - i].is_zero() {
                s += ai * &recip[m - i];
            }
        }
        recip[m] = -s;
    }
    // f = x * (1+A)^{-1}, so f_k = recip[k-1] and f_1 = 1.
    let f = TruncatedSeries::new(recip);
    series_revert(&f, n)
}

/// Modified revert-reciprocal: the forced leading 1 of the transform is
/// deleted and the remaining entries shift down one index, which makes the
/// transform invertible. Output k-th entry = revert_reciprocal(a)[k+1].
pub fn revert_reciprocal_modified(a: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    let rr = revert_reciprocal(a, n + 1)?;
    debug_assert!(rr.is_unital());
    left_shift(&rr)
}

/// The left-shift eigensequence for self-composition: the unique unital
/// series with a_{k+1} = [x^k] A(A(x)), equivalently A(A(x)) = (A(x)-x)/x.
///
/// Each new coefficient of A(A(x)) depends only on earlier terms, so the
/// sequence is built iteratively; a triangular table of the powers of A
/// keeps the whole run at O(n^3) integer products. Entries are integers.
pub fn eigensequence(n: usize) -> TruncatedSeries {
    if n == 0 {
        return TruncatedSeries::new(Vec::new());
    }
    let mut a = vec![BigInt::zero(); n + 1];
    a[1] = BigInt::one();
    // t[j][k] = [x^k] A^j for 1 <= j <= k <= n-1.
    let m = n - 1;
    let mut t = vec![vec![BigInt::zero(); m + 1]; m + 1];
    for k in 1..=m {
        t[1][k] = a[k].clone();
        for j in 2..=k {
            let mut s = BigInt::zero();
            for i in 1..=(k - j + 1) {
                s += &a[i] * &t[j - 1][k - i];
            }
            t[j][k] = s;
        }
        let mut next = BigInt::zero();
        for j in 1..=k {
            next += &a[j] * &t[j][k];
        }
        a[k + 1] = next;
    }
    TruncatedSeries::new(a[1..].iter().cloned().map(Coeff::from_integer).collect())
}

/// Functional square root of self-composition: the series A with
/// A(A(x)) = b(x) through x^n, for b_1 a positive rational square.
///
/// a_1 is the positive rational square root of b_1; each later a_k solves a
/// linear equation with pivot a_1 + a_1^k > 0. Inputs whose leading term is
/// not a rational square are reported, never approximated.
pub fn functional_sqrt(b: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    if b.order() < n {
        return Err(Error::OrderTooSmall {
            needed: n,
            have: b.order(),
        });
    }
    if n == 0 {
        return Ok(TruncatedSeries::new(Vec::new()));
    }
    let b1 = b.coeff(1);
    if *b1 <= Coeff::zero() {
        return Err(Error::NonPositiveLeading(b1.to_string()));
    }
    let a1 = rational_sqrt(b1).ok_or_else(|| Error::NotARationalSquare(b1.to_string()))?;

    let mut a = vec![Coeff::zero(); n + 1];
    a[1] = a1.clone();
    let mut t = vec![vec![Coeff::zero(); n + 1]; n + 1];
    t[1][1] = a1.clone();
    let mut a1_pow = a1.clone();

    for k in 2..=n {
        a1_pow *= &a1;
        for j in 2..=k {
            let mut s = Coeff::zero();
            for i in 1..=(k - j + 1) {
                if !a[i].is_zero() && !t[j - 1][k - i].is_zero() {
                    s += &a[i] * &t[j - 1][k - i];
                }
            }
            t[j][k] = s;
        }
        debug_assert_eq!(t[k][k], a1_pow);
        // [x^k] A(A) = (a_1 + a_1^k) a_k + sum_{j=2}^{k-1} a_j [x^k] A^j.
        let mut mid = Coeff::zero();
        for j in 2..k {
            if !a[j].is_zero() && !t[j][k].is_zero() {
                mid += &a[j] * &t[j][k];
            }
        }
        let pivot = &a1 + &a1_pow;
        a[k] = (b.coeff(k) - mid) / pivot;
        t[1][k] = a[k].clone();
    }
    Ok(TruncatedSeries::new(a[1..].to_vec()))
}

/// Solve revert_reciprocal_modified(A) = self_composition(A) coefficient by
/// coefficient over unital series.
///
/// Both sides at index k are linear in a_k once a_1..a_{k-1} are fixed; the
/// combined pivot is a_1 + a_1^k - 1 = 1, so each step is uniquely
/// determined. The result is the self-composition eigensequence — the only
/// unital sequence on which the two transforms agree.
pub fn agreement_unique_solution(n: usize) -> Result<TruncatedSeries> {
    if n == 0 {
        return Ok(TruncatedSeries::new(Vec::new()));
    }
    let a1 = Coeff::one();
    let mut coeffs = vec![a1.clone()];
    let mut a1_pow = a1.clone();
    for k in 2..=n {
        a1_pow *= &a1;
        // Evaluate both transforms on the prefix with a_k set to 0; the
        // difference of the full equations is then pivot * a_k.
        let mut prefix_coeffs = coeffs.clone();
        prefix_coeffs.push(Coeff::zero());
        let prefix = TruncatedSeries::new(prefix_coeffs);
        let lhs = self_composition(&prefix, k)?;
        let rhs = revert_reciprocal_modified(&prefix, k)?;
        let pivot = &a1 + &a1_pow - Coeff::one();
        if pivot.is_zero() {
            return Err(Error::NonUniqueStep { index: k });
        }
        coeffs.push((rhs.coeff(k) - lhs.coeff(k)) / pivot);
    }
    Ok(TruncatedSeries::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::coeff_rat;

    // First terms of the self-composition eigensequence, also produced by
    // the partition-sum fixed point; cross-checked against brute-force
    // pattern-avoidance counts in the acceptance suite.
    pub(crate) const EIGEN10: [i64; 10] = [1, 1, 2, 6, 23, 104, 531, 2982, 18109, 117545];

    fn ts(values: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_integers(values)
    }

    #[test]
    fn compose_hand_expansion() {
        // (x+x^2) o (x+x^2) = x + 2x^2 + 2x^3 + O(x^4)
        let s = ts(&[1, 1, 0]);
        assert_eq!(series_compose(&s, &s, 3).unwrap(), ts(&[1, 2, 2]));
    }

    #[test]
    fn compose_identity_outer() {
        let id = TruncatedSeries::identity(5);
        let s = ts(&[3, -1, 4, 0, 2]);
        assert_eq!(series_compose(&id, &s, 5).unwrap(), s);
        assert_eq!(series_compose(&s, &id, 5).unwrap(), s);
    }

    #[test]
    fn compose_order_too_small() {
        let s = ts(&[1, 1]);
        assert!(matches!(
            series_compose(&s, &s, 3),
            Err(Error::OrderTooSmall { needed: 3, have: 2 })
        ));
    }

    #[test]
    fn revert_catalan() {
        // g - g^2 = x has the Catalan numbers as solution.
        let f = ts(&[1, -1, 0, 0]);
        assert_eq!(series_revert(&f, 4).unwrap(), ts(&[1, 1, 2, 5]));
    }

    #[test]
    fn revert_identity_and_scaling() {
        let id = TruncatedSeries::identity(4);
        assert_eq!(series_revert(&id, 4).unwrap(), id);
        let f = ts(&[2, 0, 0]);
        let g = series_revert(&f, 3).unwrap();
        assert_eq!(
            g,
            TruncatedSeries::new(vec![coeff_rat(1, 2), coeff_rat(0, 1), coeff_rat(0, 1)])
        );
    }

    #[test]
    fn revert_rejects_zero_leading_term() {
        let f = ts(&[0, 1, 0]);
        assert!(matches!(series_revert(&f, 3), Err(Error::NonInvertible)));
    }

    #[test]
    fn revert_round_trip_rational() {
        let f = TruncatedSeries::new(vec![
            coeff_rat(2, 3),
            coeff_rat(-1, 2),
            coeff_rat(5, 1),
            coeff_rat(0, 1),
            coeff_rat(7, 4),
        ]);
        let g = series_revert(&f, 5).unwrap();
        assert_eq!(series_compose(&f, &g, 5).unwrap(), TruncatedSeries::identity(5));
        assert_eq!(series_compose(&g, &f, 5).unwrap(), TruncatedSeries::identity(5));
    }

    #[test]
    fn left_shift_examples() {
        assert_eq!(left_shift(&ts(&[1, 1, 2, 6, 23])).unwrap(), ts(&[1, 2, 6, 23]));
        assert_eq!(left_shift(&ts(&[1, 0, 0])).unwrap(), ts(&[0, 0]));
        assert_eq!(left_shift(&ts(&[5, 7])).unwrap(), ts(&[7]));
        assert!(matches!(
            left_shift(&ts(&[5])),
            Err(Error::OrderTooSmall { needed: 2, have: 1 })
        ));
    }

    #[test]
    fn self_composition_fixes_identity() {
        let id = TruncatedSeries::identity(6);
        assert_eq!(self_composition(&id, 6).unwrap(), id);
    }

    #[test]
    fn eigensequence_first_terms() {
        assert_eq!(eigensequence(7), ts(&EIGEN10[..7]));
        assert_eq!(eigensequence(1), ts(&[1]));
        assert_eq!(eigensequence(10), ts(&EIGEN10));
    }

    #[test]
    fn eigensequence_self_composition_is_left_shift() {
        let e = eigensequence(8);
        let shifted = left_shift(&e).unwrap();
        assert_eq!(self_composition(&e, 7).unwrap(), shifted);
    }

    #[test]
    fn revert_reciprocal_of_zero_is_identity() {
        let b = revert_reciprocal(&TruncatedSeries::zero(5), 5).unwrap();
        assert_eq!(b, TruncatedSeries::identity(5));
    }

    #[test]
    fn revert_reciprocal_geometric() {
        // (x/(1+x))^<-1> = x/(1-x)
        let b = revert_reciprocal(&ts(&[1, 0, 0, 0]), 4).unwrap();
        assert_eq!(b, ts(&[1, 1, 1, 1]));
    }

    #[test]
    fn revert_reciprocal_fixed_point() {
        let e = eigensequence(7);
        assert_eq!(revert_reciprocal(&e, 7).unwrap(), e);
    }

    #[test]
    fn revert_reciprocal_is_unital_valued() {
        for vals in [&[-4, 2, 9, -1][..], &[0, 0, 3, 5], &[7, 7, 7, 7]] {
            let b = revert_reciprocal(&ts(vals), 4).unwrap();
            assert!(b.is_unital(), "input {vals:?}");
        }
    }

    #[test]
    fn modified_transform_examples() {
        let z = TruncatedSeries::zero(4);
        assert_eq!(revert_reciprocal_modified(&z, 4).unwrap(), TruncatedSeries::zero(4));
        assert_eq!(revert_reciprocal_modified(&ts(&[1, 0, 0]), 3).unwrap(), ts(&[1, 1, 1]));
        let e = eigensequence(8);
        assert_eq!(
            revert_reciprocal_modified(&e, 7).unwrap(),
            left_shift(&e).unwrap()
        );
    }

    #[test]
    fn functional_sqrt_identity() {
        let id = TruncatedSeries::identity(6);
        assert_eq!(functional_sqrt(&id, 6).unwrap(), id);
    }

    #[test]
    fn functional_sqrt_round_trip() {
        let a = ts(&[1, -3, 2, 0, 5, -1, 4, 2]);
        let b = self_composition(&a, 8).unwrap();
        assert_eq!(functional_sqrt(&b, 8).unwrap(), a);
    }

    #[test]
    fn functional_sqrt_recovers_eigensequence_from_shift() {
        let e16 = eigensequence(16);
        let shifted = left_shift(&e16).unwrap();
        assert_eq!(functional_sqrt(&shifted, 15).unwrap(), eigensequence(15));
    }

    #[test]
    fn functional_sqrt_rational_leading_term() {
        // b_1 = 1/4 has square root 1/2.
        let b = TruncatedSeries::new(vec![coeff_rat(1, 4), coeff_rat(0, 1)]);
        let a = functional_sqrt(&b, 2).unwrap();
        assert_eq!(*a.coeff(1), coeff_rat(1, 2));
    }

    #[test]
    fn functional_sqrt_error_paths() {
        assert!(matches!(
            functional_sqrt(&ts(&[2, 0]), 2),
            Err(Error::NotARationalSquare(_))
        ));
        assert!(matches!(
            functional_sqrt(&ts(&[-1, 0]), 2),
            Err(Error::NonPositiveLeading(_))
        ));
        assert!(matches!(
            functional_sqrt(&ts(&[0, 1]), 2),
            Err(Error::NonPositiveLeading(_))
        ));
    }

    #[test]
    fn agreement_solution_is_eigensequence() {
        assert_eq!(agreement_unique_solution(7).unwrap(), eigensequence(7));
        assert_eq!(agreement_unique_solution(1).unwrap(), ts(&[1]));
    }

    #[test]
    fn perturbed_prefix_breaks_agreement() {
        let mut coeffs = eigensequence(10).into_coeffs();
        coeffs[4] += Coeff::one();
        let a = TruncatedSeries::new(coeffs);
        let lhs = self_composition(&a, 10).unwrap();
        let rhs = revert_reciprocal_modified(&a, 10).unwrap();
        assert_ne!(lhs, rhs);
    }
}
