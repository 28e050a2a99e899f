//! Packed column masks for the input side of a truth table.
//!
//! For an `m`-variable table, column `i` is the indicator vector of the rows
//! on which `x_i = 1`, stored with the same packing as [`TruthTable`]. The
//! truth-table layer algorithm reduces every canalization test to popcounts
//! of `f` against these columns.
//!
//! Construction enumerates the `m * 2^m` input entries row by row, the same
//! way the input side of a truth table is materialized, and dominates a
//! single analysis pass from about ten variables on. [`MaskCache`] therefore
//! precomputes the columns for every size up to `n` once; the benchmark
//! harness compares that against rebuilding them on each pass.

use crate::truth_table::word_count;

/// The packed input columns of an `m`-variable truth table.
#[derive(Clone, Debug)]
pub struct ColumnMasks {
    m: usize,
    cols: Vec<Vec<u64>>,
}

impl ColumnMasks {
    /// Builds the columns for an `m`-variable table.
    pub fn build(m: usize) -> Self {
        let words = word_count(m);
        let cols = (1..=m)
            .map(|i| {
                let p = m - i; // bit position of x_i in the row index
                let mut col = vec![0u64; words];
                for r in 0..1usize << m {
                    if (r >> p) & 1 == 1 {
                        col[r >> 6] |= 1u64 << (r & 63);
                    }
                }
                col
            })
            .collect();
        ColumnMasks { m, cols }
    }

    pub fn var_count(&self) -> usize {
        self.m
    }

    /// The packed column of `x_i` (1-based).
    pub fn col(&self, i: usize) -> &[u64] {
        &self.cols[i - 1]
    }
}

/// Precomputed [`ColumnMasks`] for every table size `0..=n`.
///
/// Immutable after construction and therefore freely shared across threads;
/// rebuilding a cache of the same size yields identical masks.
#[derive(Clone, Debug)]
pub struct MaskCache {
    per_size: Vec<ColumnMasks>,
}

impl MaskCache {
    pub fn new(max_vars: usize) -> Self {
        MaskCache {
            per_size: (0..=max_vars).map(ColumnMasks::build).collect(),
        }
    }

    pub fn max_vars(&self) -> usize {
        self.per_size.len() - 1
    }

    pub fn masks(&self, m: usize) -> &ColumnMasks {
        &self.per_size[m]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_match_row_convention() {
        for m in 1..=8usize {
            let masks = ColumnMasks::build(m);
            for i in 1..=m {
                let col = masks.col(i);
                for r in 0..1usize << m {
                    let expected = (r >> (m - i)) & 1 == 1;
                    let got = (col[r >> 6] >> (r & 63)) & 1 == 1;
                    assert_eq!(got, expected, "m={m} i={i} r={r}");
                }
            }
        }
    }

    #[test]
    fn unused_tail_bits_are_zero() {
        let masks = ColumnMasks::build(3);
        for i in 1..=3 {
            assert_eq!(masks.col(i)[0] & !0xff, 0);
        }
    }

    #[test]
    fn cache_covers_all_sizes() {
        let cache = MaskCache::new(6);
        assert_eq!(cache.max_vars(), 6);
        for m in 1..=6 {
            assert_eq!(cache.masks(m).var_count(), m);
        }
    }
}
