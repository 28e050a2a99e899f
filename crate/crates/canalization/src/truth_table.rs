//! Truth table representation of Boolean functions as packed bit vectors.
//!
//! A function on `n` variables is stored as `2^n` output bits. Row `r`
//! encodes the assignment in which variable `x_j` (1-based) takes bit
//! `n - j` of `r`, so `x_1` is the most significant bit of the row index:
//! row 1 of a 3-variable table is the assignment `(0, 0, 1)`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported variable count. All layer-finding algorithms are
/// exponential in `n`, and a packed table at `n = 24` already occupies 2 MiB.
pub const MAX_VARS: usize = 24;

/// Bit masks keeping the positions whose index has bit `k` clear, for
/// `k = 0..6`. `KEEP_LOW[k]` selects alternating runs of `2^k` bits.
pub(crate) const KEEP_LOW: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// A Boolean function `f: {0,1}^n -> {0,1}` as a packed vector of `2^n` bits.
///
/// Bit `r` of the table (the output on row `r`) is bit `r % 64` of word
/// `r / 64`. Unused high bits of the last word are always zero, so equal
/// functions compare equal word-for-word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

pub(crate) fn word_count(n: usize) -> usize {
    (1usize << n).div_ceil(64)
}

/// Mask of the valid bits in the last word of an `n`-variable table.
pub(crate) fn tail_mask(n: usize) -> u64 {
    let rows = 1usize << n;
    if rows.is_multiple_of(64) {
        !0
    } else {
        (1u64 << (rows % 64)) - 1
    }
}

impl TruthTable {
    /// Constant function on `n` variables. `n = 0` is allowed and denotes a
    /// plain constant; parsers and generators require `n >= 1`.
    pub fn constant(n: usize, value: bool) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::VarCount { n, max: MAX_VARS });
        }
        let mut words = vec![if value { !0 } else { 0 }; word_count(n)];
        if value {
            *words.last_mut().unwrap() = tail_mask(n);
        }
        Ok(TruthTable { n, words })
    }

    /// Builds a table from `2^n` output bits in row order.
    pub fn from_bits(n: usize, bits: impl IntoIterator<Item = bool>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::VarCount { n, max: MAX_VARS });
        }
        let rows = 1usize << n;
        let mut words = vec![0u64; word_count(n)];
        let mut count = 0usize;
        for (r, bit) in bits.into_iter().enumerate() {
            if r >= rows {
                count += 1;
                continue;
            }
            if bit {
                words[r >> 6] |= 1u64 << (r & 63);
            }
            count += 1;
        }
        if count != rows {
            return Err(Error::LengthMismatch {
                expected: rows,
                got: count,
            });
        }
        Ok(TruthTable { n, words })
    }

    /// Builds a table by evaluating `f` on every assignment. The slice passed
    /// to `f` holds the values of `x_1, ..., x_n` in order.
    pub fn from_fn(n: usize, mut f: impl FnMut(&[bool]) -> bool) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::VarCount { n, max: MAX_VARS });
        }
        let mut assignment = vec![false; n];
        let mut words = vec![0u64; word_count(n)];
        for r in 0..1usize << n {
            for (j, a) in assignment.iter_mut().enumerate() {
                *a = (r >> (n - 1 - j)) & 1 == 1;
            }
            if f(&assignment) {
                words[r >> 6] |= 1u64 << (r & 63);
            }
        }
        Ok(TruthTable { n, words })
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), word_count(n));
        TruthTable { n, words }
    }

    pub fn var_count(&self) -> usize {
        self.n
    }

    /// Number of rows, `2^n`.
    pub fn rows(&self) -> usize {
        1usize << self.n
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Output bit on row `r`.
    pub fn bit(&self, r: usize) -> bool {
        (self.words[r >> 6] >> (r & 63)) & 1 == 1
    }

    /// Row index of an assignment of `x_1, ..., x_n`.
    pub fn row_of(&self, assignment: &[bool]) -> usize {
        assert_eq!(assignment.len(), self.n, "assignment length mismatch");
        assignment
            .iter()
            .fold(0usize, |acc, &b| (acc << 1) | b as usize)
    }

    /// Evaluates the function on an assignment of `x_1, ..., x_n`.
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.bit(self.row_of(assignment))
    }

    /// Number of rows on which the function is 1.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.weight() == 0 || self.weight() == self.rows() as u64
    }

    /// The constant value, if the function is constant.
    pub fn constant_value(&self) -> Option<bool> {
        match self.weight() {
            0 => Some(false),
            w if w == self.rows() as u64 => Some(true),
            _ => None,
        }
    }

    /// Bitwise complement of the function.
    pub fn complement(&self) -> TruthTable {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        *words.last_mut().unwrap() &= tail_mask(self.n);
        TruthTable {
            n: self.n,
            words,
        }
    }

    /// The subfunction obtained by fixing `x_var = value` (`var` is 1-based).
    /// Remaining variables keep their relative order, so the old `x_j` with
    /// `j > var` becomes `x_{j-1}` in the result; callers that need original
    /// labels keep their own index map.
    pub fn restrict(&self, var: usize, value: bool) -> Result<TruthTable> {
        if var == 0 || var > self.n {
            return Err(Error::VarIndex {
                index: var,
                n: self.n,
            });
        }
        let p = self.n - var;
        let out_n = self.n - 1;
        let mut out = Vec::with_capacity(word_count(out_n));
        if p >= 6 {
            // Whole words: rows come in alternating blocks of 2^(p-6) words.
            let block = 1usize << (p - 6);
            let offset = if value { block } else { 0 };
            for chunk in self.words.chunks(2 * block) {
                out.extend_from_slice(&chunk[offset..offset + block]);
            }
        } else {
            // Sub-word: gather alternating runs of 2^p bits out of each word;
            // every input word yields 32 output bits.
            let mut halves = self
                .words
                .iter()
                .map(|&w| compact_runs(w, p, value));
            while let Some(lo) = halves.next() {
                match halves.next() {
                    Some(hi) => out.push(lo | (hi << 32)),
                    None => out.push(lo),
                }
            }
        }
        debug_assert_eq!(out.len(), word_count(out_n));
        Ok(TruthTable {
            n: out_n,
            words: out,
        })
    }

    /// Whether the function depends on `x_var`.
    pub fn is_essential(&self, var: usize) -> Result<bool> {
        if var == 0 || var > self.n {
            return Err(Error::VarIndex {
                index: var,
                n: self.n,
            });
        }
        let p = self.n - var;
        if p >= 6 {
            let block = 1usize << (p - 6);
            for chunk in self.words.chunks(2 * block) {
                if chunk[..block] != chunk[block..] {
                    return Ok(true);
                }
            }
            Ok(false)
        } else {
            let shift = 1u32 << p;
            Ok(self
                .words
                .iter()
                .any(|&w| (w ^ (w >> shift)) & KEEP_LOW[p] != 0))
        }
    }

    /// Indices of the variables the function depends on, ascending.
    pub fn essential_vars(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| self.is_essential(i).unwrap())
            .collect()
    }

    /// The table as a string of `2^n` characters `0`/`1`, row 0 first.
    pub fn to_bit_string(&self) -> String {
        (0..self.rows())
            .map(|r| if self.bit(r) { '1' } else { '0' })
            .collect()
    }
}

/// Extracts the alternating runs of `2^p` bits selected by `value` and packs
/// them into the low 32 bits.
fn compact_runs(mut x: u64, p: usize, value: bool) -> u64 {
    if value {
        x >>= 1u32 << p;
    }
    x &= KEEP_LOW[p];
    for t in p..5 {
        x = (x | (x >> (1u32 << t))) & KEEP_LOW[t + 1];
    }
    x
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable({}, {})", self.n, self.to_bit_string())
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}
