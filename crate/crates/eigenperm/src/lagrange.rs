//! Partition-sum form of the revert-reciprocal transform, via Lagrange
//! inversion, and its fixed-point recurrence.
//!
//! For an integer sequence (a_n) the transform output satisfies b_1 = 1 and
//!
//!   b_{k+1} = 1/(k+1) * sum over partitions 1^{r_1}...k^{r_k} of k of
//!             multinomial(k+1; k+1-sum r_i, r_1, ..., r_k) * prod a_i^{r_i}.
//!
//! The 1/(k+1) factor is distributed per partition: each divided multinomial
//! equals the number of ordered trees whose outdegree census extends the
//! partition with r_0 = k+1 - sum r_i, hence is a non-negative integer.
//! This keeps every intermediate an exact integer and makes the per-term
//! integrality checkable, which the code asserts.

use num::{BigInt, Integer, One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{multinomial, partitions_freq, PartitionFreq};
use crate::series::TruncatedSeries;

/// Largest n whose partitions are enumerated; p(n) grows sub-exponentially
/// and this keeps partition-based transforms at desk scale.
pub const PARTITION_ENVELOPE: usize = 50;

/// An integer sequence indexed from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSequence {
    terms: Vec<BigInt>,
}

impl CountSequence {
    pub fn new(terms: Vec<BigInt>) -> Self {
        CountSequence { terms }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        CountSequence {
            terms: values.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    /// k-th term, 1-based. Panics when k is 0 or exceeds the length.
    pub fn term(&self, k: usize) -> &BigInt {
        assert!(k >= 1 && k <= self.terms.len(), "term index {k} out of range");
        &self.terms[k - 1]
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// View as a truncated series with the same entries.
    pub fn to_series(&self) -> TruncatedSeries {
        TruncatedSeries::new(
            self.terms
                .iter()
                .cloned()
                .map(crate::coeff::Coeff::from_integer)
                .collect(),
        )
    }
}

// Ordered-tree count for the census extending the partition of k with
// r_0 = k+1 - (number of parts): multinomial(k+1; r_0, r_1..r_k)/(k+1).
fn partition_tree_count(k: usize, p: &PartitionFreq) -> BigInt {
    let r0 = k + 1 - p.part_count();
    let mut parts = Vec::with_capacity(p.freqs().len() + 1);
    parts.push(r0);
    parts.extend_from_slice(p.freqs());
    let m = multinomial(k + 1, &parts).expect("census parts sum to k+1");
    let (q, rem) = m.div_rem(&BigInt::from(k + 1));
    assert!(rem.is_zero(), "multinomial(k+1; census) must divide by k+1");
    q
}

// b_{k+1} from a_1..a_k (`values[i]` holds a_{i+1}).
fn transform_step(k: usize, values: &[BigInt]) -> BigInt {
    debug_assert!(values.len() >= k);
    let mut total = BigInt::zero();
    for p in partitions_freq(k) {
        let mut term = partition_tree_count(k, &p);
        for (i, &r) in p.freqs().iter().enumerate() {
            if r > 0 {
                term *= values[i].pow(r as u32);
            }
        }
        total += term;
    }
    total
}

/// Revert-reciprocal transform computed from the explicit partition sum:
/// b_1 = 1 and b_{k+1} as in the module formula, for 1 <= k <= n-1.
///
/// Independent of the series-based route; the two must agree on integer
/// inputs. Needs a_1..a_{n-1}, i.e. at least n-1 input terms.
pub fn lagrange_revert_reciprocal(a: &CountSequence, n: usize) -> Result<CountSequence> {
    if n >= 1 && n - 1 > PARTITION_ENVELOPE {
        return Err(Error::LimitExceeded {
            what: "partition-sum transform order",
            limit: PARTITION_ENVELOPE + 1,
            requested: n,
        });
    }
    if a.len() + 1 < n {
        return Err(Error::OrderTooSmall {
            needed: n - 1,
            have: a.len(),
        });
    }
    let mut out = Vec::with_capacity(n);
    if n >= 1 {
        out.push(BigInt::one());
    }
    for k in 1..n {
        out.push(transform_step(k, a.terms()));
    }
    Ok(CountSequence::new(out))
}

/// The unique fixed point of the transform: a_1 = 1 and each a_{k+1}
/// computed from a_1..a_k by the partition sum. Returns the first n terms.
pub fn fixed_point_sequence(n: usize) -> Result<CountSequence> {
    if n >= 1 && n - 1 > PARTITION_ENVELOPE {
        return Err(Error::LimitExceeded {
            what: "fixed-point sequence length",
            limit: PARTITION_ENVELOPE + 1,
            requested: n,
        });
    }
    let mut terms = Vec::with_capacity(n);
    if n >= 1 {
        terms.push(BigInt::one());
    }
    for k in 1..n {
        let next = transform_step(k, &terms);
        terms.push(next);
    }
    Ok(CountSequence::new(terms))
}
