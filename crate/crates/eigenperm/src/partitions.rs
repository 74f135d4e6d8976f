//! Integer partitions in frequency-count form and exact multinomials.
//!
//! A partition of n is written 1^{r_1} 2^{r_2} ... n^{r_n}; the vector
//! (r_1, ..., r_n) is its frequency form. Partitions are streamed lazily in
//! a fixed order: ascending lexicographic on the descending part lists,
//! comparing largest parts first, so [1,1,1] comes before [2,1] before [3].

use num::{BigInt, Integer, One, Zero};

use crate::error::{Error, Result};

/// A partition of n in frequency-count form: freqs[i-1] = r_i, the number
/// of parts equal to i. Always satisfies sum i*r_i = n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionFreq {
    n: usize,
    freqs: Vec<usize>,
}

impl PartitionFreq {
    fn from_parts(n: usize, parts: &[usize]) -> Self {
        let mut freqs = vec![0usize; n];
        for &p in parts {
            freqs[p - 1] += 1;
        }
        PartitionFreq { n, freqs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The frequency vector (r_1, ..., r_n).
    pub fn freqs(&self) -> &[usize] {
        &self.freqs
    }

    /// Total number of parts, sum of r_i.
    pub fn part_count(&self) -> usize {
        self.freqs.iter().sum()
    }
}

/// Lazy stream over all partitions of n in the documented order.
///
/// For n = 0 the stream holds the single empty partition.
pub fn partitions_freq(n: usize) -> Partitions {
    Partitions {
        n,
        parts: Some(vec![1; n]),
    }
}

pub struct Partitions {
    n: usize,
    parts: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = PartitionFreq;

    fn next(&mut self) -> Option<PartitionFreq> {
        let parts = self.parts.take()?;
        let item = PartitionFreq::from_parts(self.n, &parts);
        self.parts = successor(self.n, &parts);
        Some(item)
    }
}

// Next descending part list in ascending lex order (largest part compared
// first): bump the rightmost part that can grow, refill the tail with ones.
fn successor(n: usize, parts: &[usize]) -> Option<Vec<usize>> {
    for j in (0..parts.len()).rev() {
        let inc = parts[j] + 1;
        if j > 0 && inc > parts[j - 1] {
            continue;
        }
        let used: usize = parts[..j].iter().sum::<usize>() + inc;
        if used > n {
            continue;
        }
        let mut next = parts[..j].to_vec();
        next.push(inc);
        next.extend(std::iter::repeat_n(1, n - used));
        return Some(next);
    }
    None
}

/// Exact factorial.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Exact multinomial coefficient total! / prod(part!).
///
/// Errors when the parts do not sum to the total.
pub fn multinomial(total: usize, parts: &[usize]) -> Result<BigInt> {
    let sum: usize = parts.iter().sum();
    if sum != total {
        return Err(Error::PartsSumMismatch { total, sum });
    }
    let mut acc = factorial(total);
    for &p in parts {
        if p > 1 {
            let (q, r) = acc.div_rem(&factorial(p));
            debug_assert!(r.is_zero());
            acc = q;
        }
    }
    Ok(acc)
}
