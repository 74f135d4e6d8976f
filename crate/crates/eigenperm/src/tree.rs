//! Ordered trees: lazy enumeration, exact counting by outdegree census,
//! and weighted counts over internal-vertex outdegrees.
//!
//! The number of ordered trees on n edges with outdegree sequence
//! (r_0, ..., r_n) — r_i vertices with i children — is
//! multinomial(n+1; r_0, ..., r_n) / (n+1), always an exact integer.

use num::{BigInt, Integer, One, Zero};

use crate::error::{Error, Result};
use crate::lagrange::CountSequence;
use crate::partitions::{multinomial, partitions_freq};

/// Largest edge count for exhaustive tree enumeration.
pub const MAX_ENUM_EDGES: usize = 12;
/// Largest edge count for enumerate-mode weighted counts.
pub const MAX_WEIGHTED_ENUM_EDGES: usize = 10;

/// An ordered (plane) tree: a vertex with an ordered list of subtrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedTree {
    pub children: Vec<OrderedTree>,
}

impl OrderedTree {
    pub fn leaf() -> Self {
        OrderedTree { children: Vec::new() }
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edge_count()).sum()
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.edge_count()
    }

    /// Census (r_0, ..., r_n) of vertex outdegrees, n = edge count.
    pub fn outdegree_census(&self) -> OutdegreeSequence {
        let n = self.edge_count();
        let mut r = vec![0usize; n + 1];
        fn walk(t: &OrderedTree, r: &mut [usize]) {
            r[t.children.len()] += 1;
            for c in &t.children {
                walk(c, r);
            }
        }
        walk(self, &mut r);
        OutdegreeSequence { r }
    }
}

/// Vertex-outdegree census (r_0, ..., r_n) of an ordered tree on n edges:
/// sum r_i = n+1 (vertices) and sum i*r_i = n (edges).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OutdegreeSequence {
    r: Vec<usize>,
}

impl OutdegreeSequence {
    pub fn new(r: Vec<usize>) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::InvalidCensus("census must contain r_0".into()));
        }
        let n = r.len() - 1;
        let vertices: usize = r.iter().sum();
        if vertices != n + 1 {
            return Err(Error::InvalidCensus(format!(
                "entries sum to {vertices}, expected {} vertices",
                n + 1
            )));
        }
        let edges: usize = r.iter().enumerate().map(|(i, &ri)| i * ri).sum();
        if edges != n {
            return Err(Error::InvalidCensus(format!(
                "weighted sum is {edges}, expected {n} edges"
            )));
        }
        Ok(OutdegreeSequence { r })
    }

    pub fn edges(&self) -> usize {
        self.r.len() - 1
    }

    pub fn counts(&self) -> &[usize] {
        &self.r
    }
}

/// Exact number of ordered trees with the given outdegree census.
pub fn tree_count_by_outdegree(r: &OutdegreeSequence) -> BigInt {
    let n = r.edges();
    let m = multinomial(n + 1, r.counts()).expect("census sums to n+1");
    let (q, rem) = m.div_rem(&BigInt::from(n + 1));
    assert!(rem.is_zero(), "multinomial(n+1; census) must divide by n+1");
    q
}

/// Stream every ordered tree with n edges exactly once.
///
/// Trees are encoded as balanced parenthesis words of the walkaround and
/// visited in lexicographic order with '(' before ')', so the depth-n path
/// comes first and the n-edge star last. Count = Catalan(n).
pub fn enumerate_trees(n: usize) -> Result<TreeStream> {
    if n > MAX_ENUM_EDGES {
        return Err(Error::LimitExceeded {
            what: "exhaustive tree enumeration",
            limit: MAX_ENUM_EDGES,
            requested: n,
        });
    }
    let mut word = vec![true; n];
    word.extend(std::iter::repeat_n(false, n));
    Ok(TreeStream { n, word: Some(word) })
}

pub struct TreeStream {
    n: usize,
    word: Option<Vec<bool>>,
}

impl Iterator for TreeStream {
    type Item = OrderedTree;

    fn next(&mut self) -> Option<OrderedTree> {
        let word = self.word.take()?;
        let tree = decode_walkaround(&word);
        self.word = next_balanced(self.n, &word);
        Some(tree)
    }
}

// Lexicographic successor among balanced words: flip the rightmost '('
// that still leaves a balanced completion, then append the least suffix
// (all remaining opens, then all remaining closes).
fn next_balanced(n: usize, word: &[bool]) -> Option<Vec<bool>> {
    let mut prefix_balance: Vec<isize> = Vec::with_capacity(word.len());
    let mut bal = 0isize;
    for &b in word {
        prefix_balance.push(bal);
        bal += if b { 1 } else { -1 };
    }
    let mut opens_before = word.iter().filter(|&&b| b).count();
    for i in (0..word.len()).rev() {
        if word[i] {
            opens_before -= 1;
        }
        if !word[i] {
            continue;
        }
        // Flipping position i to ')' needs positive balance before it and
        // must not exceed n closing parens overall.
        let closes_before = i - opens_before;
        if prefix_balance[i] < 1 || closes_before + 1 > n {
            continue;
        }
        let mut next = word[..i].to_vec();
        next.push(false);
        let opens_rem = n - opens_before;
        let closes_rem = n - closes_before - 1;
        next.extend(std::iter::repeat_n(true, opens_rem));
        next.extend(std::iter::repeat_n(false, closes_rem));
        return Some(next);
    }
    None
}

fn decode_walkaround(word: &[bool]) -> OrderedTree {
    let mut stack = vec![OrderedTree::leaf()];
    for &b in word {
        if b {
            stack.push(OrderedTree::leaf());
        } else {
            let done = stack.pop().expect("balanced word");
            stack.last_mut().expect("balanced word").children.push(done);
        }
    }
    debug_assert_eq!(stack.len(), 1);
    stack.pop().unwrap()
}

/// How to evaluate a weighted tree count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightedMode {
    /// Walk every tree and multiply the weights of its internal outdegrees.
    Enumerate,
    /// Sum tree_count(census) * prod w_i^{r_i} over all valid censuses
    /// (equivalently over the partitions of n formed by r_1..r_n).
    Formula,
}

/// Sum over ordered trees with n edges of prod_{internal v} w_{outdeg(v)}.
///
/// With the transform's fixed-point sequence as weights this yields its
/// next term; with w_k = (k-1)! it counts the trees' standard-cycle
/// labelings. Both evaluation modes are exact and must agree.
pub fn weighted_tree_count(n: usize, w: &CountSequence, mode: WeightedMode) -> Result<BigInt> {
    if n == 0 {
        return Ok(BigInt::one());
    }
    if w.len() < n {
        return Err(Error::WeightsTooShort {
            needed: n,
            have: w.len(),
        });
    }
    match mode {
        WeightedMode::Enumerate => {
            if n > MAX_WEIGHTED_ENUM_EDGES {
                return Err(Error::LimitExceeded {
                    what: "enumerate-mode weighted count",
                    limit: MAX_WEIGHTED_ENUM_EDGES,
                    requested: n,
                });
            }
            let mut total = BigInt::zero();
            for tree in enumerate_trees(n)? {
                total += tree_weight(&tree, w);
            }
            Ok(total)
        }
        WeightedMode::Formula => {
            if n > crate::lagrange::PARTITION_ENVELOPE {
                return Err(Error::LimitExceeded {
                    what: "formula-mode weighted count",
                    limit: crate::lagrange::PARTITION_ENVELOPE,
                    requested: n,
                });
            }
            let mut total = BigInt::zero();
            for p in partitions_freq(n) {
                let mut r = Vec::with_capacity(n + 1);
                r.push(n + 1 - p.part_count());
                r.extend_from_slice(p.freqs());
                let census = OutdegreeSequence::new(r).expect("partition census is valid");
                let mut term = tree_count_by_outdegree(&census);
                for (i, &ri) in p.freqs().iter().enumerate() {
                    if ri > 0 {
                        term *= w.term(i + 1).pow(ri as u32);
                    }
                }
                total += term;
            }
            Ok(total)
        }
    }
}

fn tree_weight(t: &OrderedTree, w: &CountSequence) -> BigInt {
    let k = t.children.len();
    if k == 0 {
        return BigInt::one();
    }
    let mut acc = w.term(k).clone();
    for c in &t.children {
        acc *= tree_weight(c, w);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::factorial;

    // Catalan numbers by the standard recurrence, independent of the stream.
    fn catalan_oracle(upto: usize) -> Vec<u64> {
        let mut c = vec![1u64];
        for n in 0..upto {
            let next: u64 = (0..=n).map(|i| c[i] * c[n - i]).sum();
            c.push(next);
        }
        c
    }

    #[test]
    fn enumeration_counts_are_catalan() {
        let cat = catalan_oracle(9);
        for n in 0..=8 {
            assert_eq!(enumerate_trees(n).unwrap().count() as u64, cat[n], "n = {n}");
        }
        assert_eq!(enumerate_trees(8).unwrap().count(), 1430);
        assert!(matches!(enumerate_trees(13), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        for n in 0..=7 {
            let trees: Vec<OrderedTree> = enumerate_trees(n).unwrap().collect();
            let mut seen = std::collections::HashSet::new();
            for t in &trees {
                assert_eq!(t.edge_count(), n);
                assert!(seen.insert(format!("{t:?}")));
            }
        }
    }

    #[test]
    fn census_invariants() {
        let star = OutdegreeSequence::new(vec![4, 0, 0, 0, 1]).unwrap();
        assert_eq!(tree_count_by_outdegree(&star), BigInt::one());

        let r = OutdegreeSequence::new(vec![2, 1, 1, 0]).unwrap();
        assert_eq!(tree_count_by_outdegree(&r), BigInt::from(3));

        assert!(matches!(
            OutdegreeSequence::new(vec![2, 2, 1, 0]),
            Err(Error::InvalidCensus(_))
        ));
        assert!(matches!(
            OutdegreeSequence::new(vec![3, 0, 1, 0]),
            Err(Error::InvalidCensus(_))
        ));
    }

    #[test]
    fn census_formula_matches_enumeration() {
        for n in 0..=6 {
            let mut observed: std::collections::HashMap<Vec<usize>, u64> =
                std::collections::HashMap::new();
            for t in enumerate_trees(n).unwrap() {
                *observed.entry(t.outdegree_census().counts().to_vec()).or_default() += 1;
            }
            let mut formula_total = BigInt::zero();
            for (census, count) in &observed {
                let r = OutdegreeSequence::new(census.clone()).unwrap();
                assert_eq!(tree_count_by_outdegree(&r), BigInt::from(*count));
                formula_total += BigInt::from(*count);
            }
            assert_eq!(formula_total, BigInt::from(catalan_oracle(n)[n]));
        }
    }

    #[test]
    fn sum_over_censuses_is_catalan() {
        // n = 3: the three valid censuses cover the 5 trees.
        let mut total = BigInt::zero();
        for p in partitions_freq(3) {
            let mut r = vec![4 - p.part_count()];
            r.extend_from_slice(p.freqs());
            total += tree_count_by_outdegree(&OutdegreeSequence::new(r).unwrap());
        }
        assert_eq!(total, BigInt::from(5));
    }

    #[test]
    fn weighted_unital_base_case() {
        let w = CountSequence::from_integers(&[1, 5, 7]);
        assert_eq!(
            weighted_tree_count(1, &w, WeightedMode::Enumerate).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            weighted_tree_count(0, &w, WeightedMode::Formula).unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn weighted_modes_agree() {
        let w = CountSequence::from_integers(&[2, -1, 3, 0, 5, 1, -2, 4]);
        for n in 0..=8 {
            assert_eq!(
                weighted_tree_count(n, &w, WeightedMode::Enumerate).unwrap(),
                weighted_tree_count(n, &w, WeightedMode::Formula).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn fixed_point_weights_reproduce_the_sequence() {
        let fp = crate::lagrange::fixed_point_sequence(10).unwrap();
        let w = CountSequence::new(fp.terms()[..5].to_vec());
        assert_eq!(
            weighted_tree_count(5, &w, WeightedMode::Enumerate).unwrap(),
            *fp.term(6)
        );
    }

    #[test]
    fn factorial_weights_count_cycle_labelings() {
        // sum over trees of prod (outdeg-1)! equals the number of
        // set-increasing permutations: 1, 2, 6, 23, 105 for n = 1..5.
        let w = CountSequence::new((1..=5).map(|k| factorial(k - 1)).collect());
        let expected = [1i64, 2, 6, 23, 105];
        for n in 1..=5 {
            assert_eq!(
                weighted_tree_count(n, &w, WeightedMode::Formula).unwrap(),
                BigInt::from(expected[n - 1]),
                "n = {n}"
            );
        }
    }

    #[test]
    fn weights_must_cover_outdegrees() {
        let w = CountSequence::from_integers(&[1, 1]);
        assert!(matches!(
            weighted_tree_count(5, &w, WeightedMode::Formula),
            Err(Error::WeightsTooShort { needed: 5, have: 2 })
        ));
    }
}
