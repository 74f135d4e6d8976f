//! Sparse-table range-maximum queries over a fixed word.
//!
//! rows[k][i] holds the maximum of w[i..i+2^k]; a query splits [lo, hi)
//! into two overlapping power-of-two blocks, so lookups are O(1) after
//! O(n log n) construction.

pub(crate) struct MaxSparseTable {
    rows: Vec<Vec<u32>>,
}

impl MaxSparseTable {
    pub fn new(w: &[u32]) -> Self {
        let n = w.len();
        let mut rows = vec![w.to_vec()];
        let mut len = 1;
        while len * 2 <= n {
            let prev = rows.last().unwrap();
            let row: Vec<u32> = (0..=n - 2 * len)
                .map(|i| prev[i].max(prev[i + len]))
                .collect();
            rows.push(row);
            len *= 2;
        }
        MaxSparseTable { rows }
    }

    /// Maximum over w[lo..hi), or None when the range is empty.
    pub fn max(&self, lo: usize, hi: usize) -> Option<u32> {
        if lo >= hi {
            return None;
        }
        let len = hi - lo;
        let k = usize::BITS as usize - 1 - len.leading_zeros() as usize;
        let block = 1usize << k;
        Some(self.rows[k][lo].max(self.rows[k][hi - block]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_naive_scan() {
        let w = [3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5];
        let table = MaxSparseTable::new(&w);
        for lo in 0..w.len() {
            for hi in lo..=w.len() {
                let naive = w[lo..hi].iter().copied().max();
                assert_eq!(table.max(lo, hi), naive, "range {lo}..{hi}");
            }
        }
    }

    #[test]
    fn empty_range() {
        let table = MaxSparseTable::new(&[2, 7]);
        assert_eq!(table.max(1, 1), None);
    }
}
