//! Permutations as words of distinct positive integers: standardization,
//! decomposition at left-to-right maxima, and the barred-pattern avoidance
//! test checked two independent ways.
//!
//! A word avoids the barred pattern when every occurrence of the classical
//! pattern 3241 (indices i<j<k<l with p_k > p_i > p_j > p_l) extends to a
//! 35241 occurrence, i.e. some position h with i < h < j has p_h > p_k.
//! The second route uses the block characterization: the word's
//! left-to-right-maximum blocks must be set-increasing, and each block must
//! itself avoid the pattern.

use std::fmt;
use std::str::FromStr;

use num::BigInt;

use crate::error::{Error, Result};
use crate::rmq::MaxSparseTable;

/// A word of pairwise-distinct positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for &v in &word {
            if v == 0 {
                return Err(Error::InvalidPermutation("entries must be positive".into()));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidPermutation(format!("duplicate entry {v}")));
            }
        }
        Ok(Permutation { word })
    }

    pub(crate) fn new_unchecked(word: Vec<u32>) -> Self {
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// True when the support is exactly {1, ..., n}.
    pub fn is_standard(&self) -> bool {
        let n = self.word.len() as u32;
        self.word.iter().all(|&v| v <= n)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut word = Vec::new();
        for tok in s.split_whitespace() {
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("invalid permutation entry {tok:?}")))?;
            word.push(v);
        }
        Permutation::new(word)
    }
}

pub(crate) fn standardize_word(w: &[u32]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by_key(|&i| w[i]);
    let mut out = vec![0u32; w.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    out
}

/// Replace the smallest entry by 1, the second smallest by 2, and so on.
pub fn standardize(p: &Permutation) -> Permutation {
    Permutation::new_unchecked(standardize_word(p.word()))
}

/// One segment m L of the decomposition: a left-to-right maximum followed
/// by the word of smaller entries before the next maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub max: u32,
    pub tail: Vec<u32>,
}

/// Segmentation of a word at its left-to-right maxima, m_1 L_1 ... m_r L_r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRMaxDecomposition {
    pub segments: Vec<Segment>,
}

impl LRMaxDecomposition {
    /// Segment lengths a_i = |m_i L_i|.
    pub fn segment_lengths(&self) -> Vec<usize> {
        self.segments.iter().map(|s| 1 + s.tail.len()).collect()
    }

    /// The maxima m_1 < m_2 < ... < m_r.
    pub fn maxima(&self) -> Vec<u32> {
        self.segments.iter().map(|s| s.max).collect()
    }

    /// Gaps b_i = m_i - m_{i-1} with m_0 = 0.
    pub fn max_gaps(&self) -> Vec<u32> {
        let mut prev = 0;
        self.segments
            .iter()
            .map(|s| {
                let gap = s.max - prev;
                prev = s.max;
                gap
            })
            .collect()
    }

    /// Concatenate the segments back into the original word.
    pub fn reassemble(&self) -> Permutation {
        let mut word = Vec::new();
        for s in &self.segments {
            word.push(s.max);
            word.extend_from_slice(&s.tail);
        }
        Permutation::new_unchecked(word)
    }
}

pub(crate) fn lrmax_segments(w: &[u32]) -> Vec<(u32, Vec<u32>)> {
    let mut segments: Vec<(u32, Vec<u32>)> = Vec::new();
    let mut best = 0;
    for &v in w {
        if v > best {
            best = v;
            segments.push((v, Vec::new()));
        } else {
            segments.last_mut().expect("first entry is a maximum").1.push(v);
        }
    }
    segments
}

/// Decompose a nonempty word at its left-to-right maxima.
pub fn lrmax_decompose(p: &Permutation) -> Result<LRMaxDecomposition> {
    if p.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    let segments = lrmax_segments(p.word())
        .into_iter()
        .map(|(max, tail)| Segment { max, tail })
        .collect();
    Ok(LRMaxDecomposition { segments })
}

/// All occurrences of the pattern 3241: 0-based index quadruples i<j<k<l
/// with p_k > p_i > p_j > p_l, in lexicographic order.
pub fn occurrences_3241(p: &Permutation) -> Vec<[usize; 4]> {
    let w = p.word();
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if w[j] >= w[i] {
                continue;
            }
            for k in j + 1..n {
                if w[k] <= w[i] {
                    continue;
                }
                for l in k + 1..n {
                    if w[l] < w[j] {
                        out.push([i, j, k, l]);
                    }
                }
            }
        }
    }
    out
}

pub(crate) fn avoids_direct_word(w: &[u32]) -> bool {
    let n = w.len();
    if n < 4 {
        return true;
    }
    let table = MaxSparseTable::new(w);
    for i in 0..n {
        for j in i + 1..n {
            if w[j] >= w[i] {
                continue;
            }
            // Largest entry strictly between positions i and j; an
            // occurrence with this (i, j) extends iff that entry beats p_k.
            let gap_max = table.max(i + 1, j).unwrap_or(0);
            for k in j + 1..n {
                if w[k] <= w[i] || gap_max > w[k] {
                    continue;
                }
                for l in k + 1..n {
                    if w[l] < w[j] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Barred-pattern avoidance by the direct definition: every 3241
/// occurrence must extend to 35241 via some larger entry in the (i, j) gap.
pub fn avoids_barred_direct(p: &Permutation) -> bool {
    avoids_direct_word(p.word())
}

pub(crate) fn avoids_recursive_word(w: &[u32]) -> bool {
    if w.len() < 4 {
        return true;
    }
    let segments = lrmax_segments(w);
    if !blocks_set_increasing(&segments) {
        return false;
    }
    segments
        .iter()
        .filter(|(_, tail)| !tail.is_empty())
        .all(|(_, tail)| avoids_recursive_word(&standardize_word(tail)))
}

fn blocks_set_increasing(segments: &[(u32, Vec<u32>)]) -> bool {
    let mut prev_max: Option<u32> = None;
    for (_, tail) in segments {
        if tail.is_empty() {
            continue;
        }
        let lo = *tail.iter().min().unwrap();
        let hi = *tail.iter().max().unwrap();
        if let Some(pm) = prev_max {
            if pm >= lo {
                return false;
            }
        }
        prev_max = Some(hi);
    }
    true
}

/// Barred-pattern avoidance by the block characterization: nonempty
/// left-to-right-maximum blocks are set-increasing and each block,
/// standardized, avoids recursively.
pub fn avoids_barred_recursive(p: &Permutation) -> bool {
    avoids_recursive_word(p.word())
}

/// True when the nonempty blocks of the decomposition are set-increasing
/// (every entry of an earlier block is below every entry of a later one).
pub fn satisfies_condition_i(p: &Permutation) -> bool {
    blocks_set_increasing(&lrmax_segments(p.word()))
}

/// Which avoidance checker to use for counting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMethod {
    Direct,
    Recursive,
}

// Lexicographic successor; returns false once w is the last permutation.
pub(crate) fn next_permutation(w: &mut [u32]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Visit every permutation of [n] in lexicographic order.
pub fn for_each_standard_permutation<F: FnMut(&[u32])>(n: usize, mut f: F) {
    let mut w: Vec<u32> = (1..=n as u32).collect();
    loop {
        f(&w);
        if !next_permutation(&mut w) {
            return;
        }
    }
}

/// Number of permutations of [n] passing the selected avoidance checker.
///
/// Enumeration is exhaustive, so n is capped by `limit` (the CLI default
/// is 10, with 11 behind a long-run flag).
pub fn count_avoiders(n: usize, method: CheckMethod, limit: usize) -> Result<BigInt> {
    count_avoiders_with(n, method, limit, |_| {})
}

/// As [`count_avoiders`], reporting every visited permutation count to
/// `progress` in batches of 100000.
pub fn count_avoiders_with<F: FnMut(u64)>(
    n: usize,
    method: CheckMethod,
    limit: usize,
    mut progress: F,
) -> Result<BigInt> {
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "exhaustive permutation count",
            limit,
            requested: n,
        });
    }
    let check: fn(&[u32]) -> bool = match method {
        CheckMethod::Direct => avoids_direct_word,
        CheckMethod::Recursive => avoids_recursive_word,
    };
    let mut count: u64 = 0;
    let mut visited: u64 = 0;
    for_each_standard_permutation(n, |w| {
        if check(w) {
            count += 1;
        }
        visited += 1;
        if visited.is_multiple_of(100_000) {
            progress(visited);
        }
    });
    Ok(BigInt::from(count))
}

/// All permutations of [n] whose nonempty blocks are set-increasing.
pub fn condition_i_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_standard_permutation(n, |w| {
        if blocks_set_increasing(&lrmax_segments(w)) {
            out.push(Permutation::new_unchecked(w.to_vec()));
        }
    });
    out
}
