//! Algebraic normal form: Boolean functions as XOR sums of square-free
//! monomials over the two-element field.
//!
//! Monomials are indexed by the subsets of `{1, ..., n}`; a monomial is kept
//! exactly when its coefficient is 1. Internally a subset is a `u32` bit
//! mask with bit `j - 1` standing for `x_j`, and a polynomial is a sorted,
//! duplicate-free vector of masks. Sums reduce by sorting and cancelling
//! equal pairs, which keeps the dense transforms and substitutions cheap.

use std::fmt;

use crate::error::{Error, Result};
use crate::truth_table::{word_count, TruthTable, KEEP_LOW, MAX_VARS};

/// A polynomial over the two-element field in at most [`MAX_VARS`] variables.
///
/// Equality is structural: both the variable count and the monomial set must
/// agree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AnfPolynomial {
    n: usize,
    /// Sorted ascending, no duplicates.
    monomials: Vec<u32>,
}

/// Sorts a multiset of monomial masks and cancels equal pairs (coefficients
/// are mod 2).
fn reduce_mod2(mut masks: Vec<u32>) -> Vec<u32> {
    masks.sort_unstable();
    let mut out = Vec::with_capacity(masks.len());
    let mut i = 0;
    while i < masks.len() {
        let mut run = 1;
        while i + run < masks.len() && masks[i + run] == masks[i] {
            run += 1;
        }
        if run % 2 == 1 {
            out.push(masks[i]);
        }
        i += run;
    }
    out
}

impl AnfPolynomial {
    pub fn zero(n: usize) -> Self {
        AnfPolynomial {
            n,
            monomials: Vec::new(),
        }
    }

    /// The constant polynomial 1 (the empty monomial).
    pub fn one(n: usize) -> Self {
        AnfPolynomial {
            n,
            monomials: vec![0],
        }
    }

    /// Builds a polynomial from monomials given as slices of 1-based variable
    /// indices. The empty slice denotes the constant term. Duplicate
    /// monomials cancel in pairs.
    pub fn from_monomials<'a>(
        n: usize,
        monomials: impl IntoIterator<Item = &'a [usize]>,
    ) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::VarCount { n, max: MAX_VARS });
        }
        let mut masks = Vec::new();
        for mono in monomials {
            let mut mask = 0u32;
            for &index in mono {
                if index == 0 || index > n {
                    return Err(Error::VarIndex { index, n });
                }
                mask |= 1 << (index - 1);
            }
            masks.push(mask);
        }
        Ok(AnfPolynomial {
            n,
            monomials: reduce_mod2(masks),
        })
    }

    /// Builds from a multiset of subset masks; equal pairs cancel.
    pub(crate) fn from_masks(n: usize, masks: Vec<u32>) -> Self {
        AnfPolynomial {
            n,
            monomials: reduce_mod2(masks),
        }
    }

    pub fn var_count(&self) -> usize {
        self.n
    }

    /// Monomials as subset bit masks (bit `j - 1` is `x_j`), ascending.
    pub fn monomial_masks(&self) -> &[u32] {
        &self.monomials
    }

    /// Monomials as sorted index vectors.
    pub fn monomials(&self) -> Vec<Vec<usize>> {
        self.monomials.iter().map(|&m| mask_vars(m)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.monomials == [0]
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.is_one()
    }

    /// Coefficient of the constant term.
    pub fn constant_term(&self) -> bool {
        self.monomials.first() == Some(&0)
    }

    /// Whether the monomial with the given subset mask has coefficient 1.
    pub fn has_monomial_mask(&self, mask: u32) -> bool {
        self.monomials.binary_search(&mask).is_ok()
    }

    /// Variables that occur in at least one monomial, ascending.
    pub fn support(&self) -> Vec<usize> {
        let union = self.monomials.iter().fold(0u32, |acc, m| acc | m);
        mask_vars(union)
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.n, "assignment length mismatch");
        let mask = assignment
            .iter()
            .enumerate()
            .fold(0u32, |acc, (j, &b)| acc | ((b as u32) << j));
        self.monomials.iter().filter(|&&m| m & !mask == 0).count() % 2 == 1
    }

    /// Substitutes the constant `value` for `x_var`. Remaining variables keep
    /// their original indices and the variable count is unchanged.
    pub fn substitute(&self, var: usize, value: bool) -> Result<AnfPolynomial> {
        if var == 0 || var > self.n {
            return Err(Error::VarIndex { index: var, n: self.n });
        }
        let bit = 1u32 << (var - 1);
        let mut masks = Vec::with_capacity(self.monomials.len());
        for &m in &self.monomials {
            if m & bit == 0 {
                masks.push(m);
            } else if value {
                masks.push(m & !bit);
            }
            // x_var = 0 kills the monomial
        }
        Ok(AnfPolynomial {
            n: self.n,
            monomials: reduce_mod2(masks),
        })
    }

    /// Adds the other polynomial (XOR of monomial sets).
    pub fn add(&self, other: &AnfPolynomial) -> AnfPolynomial {
        let mut masks = self.monomials.clone();
        masks.extend_from_slice(&other.monomials);
        AnfPolynomial {
            n: self.n.max(other.n),
            monomials: reduce_mod2(masks),
        }
    }

    /// Adds the constant 1.
    pub fn toggle_constant(&self) -> AnfPolynomial {
        let mut monomials = self.monomials.clone();
        if monomials.first() == Some(&0) {
            monomials.remove(0);
        } else {
            monomials.insert(0, 0);
        }
        AnfPolynomial {
            n: self.n,
            monomials,
        }
    }

    /// Relabels variables: `map[j - 1]` is the new index of the current `x_j`.
    pub(crate) fn remap_vars(&self, map: &[usize], new_n: usize) -> AnfPolynomial {
        if map.iter().enumerate().all(|(j, &v)| v == j + 1) {
            // Identity relabeling: only the variable count changes.
            return AnfPolynomial {
                n: new_n,
                monomials: self.monomials.clone(),
            };
        }
        let masks: Vec<u32> = self
            .monomials
            .iter()
            .map(|&m| {
                let mut out = 0u32;
                for (j, &target) in map.iter().enumerate() {
                    if m >> j & 1 == 1 {
                        out |= 1 << (target - 1);
                    }
                }
                out
            })
            .collect();
        AnfPolynomial {
            n: new_n,
            monomials: reduce_mod2(masks),
        }
    }

    /// Computes the polynomial of a truth table: the coefficient of the
    /// monomial indexed by `S` is the parity of `f` summed over the
    /// assignments supported inside `S`.
    pub fn from_table(f: &TruthTable) -> AnfPolynomial {
        let n = f.var_count();
        let mut words = f.words().to_vec();
        mobius_in_place(&mut words, n);
        let mut masks: Vec<u32> = Vec::new();
        for (w, &word) in words.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let row = ((w << 6) | b) as u32;
                masks.push(row_to_mask(row, n));
            }
        }
        masks.sort_unstable(); // already duplicate-free
        AnfPolynomial {
            n,
            monomials: masks,
        }
    }

    /// Evaluates the polynomial on every assignment. Inverse of
    /// [`AnfPolynomial::from_table`]; the transform is an involution over the
    /// two-element field.
    pub fn to_table(&self) -> TruthTable {
        let mut words = vec![0u64; word_count(self.n)];
        for &m in &self.monomials {
            let row = row_to_mask(m, self.n); // the mapping is its own inverse
            words[(row >> 6) as usize] |= 1u64 << (row & 63);
        }
        mobius_in_place(&mut words, self.n);
        TruthTable::from_words(self.n, words)
    }

    /// Renders the polynomial: monomials sorted by degree (descending) then
    /// lexicographically, variables joined by `*`, terms by ` + `. The zero
    /// polynomial renders as `0`.
    pub fn render(&self) -> String {
        if self.monomials.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<Vec<usize>> = self.monomials();
        terms.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        terms
            .iter()
            .map(|vars| {
                if vars.is_empty() {
                    "1".to_string()
                } else {
                    vars.iter()
                        .map(|v| format!("x{v}"))
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for AnfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn mask_vars(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|j| mask >> j & 1 == 1)
        .map(|j| j + 1)
        .collect()
}

/// Maps a row index to the subset mask of its 1-variables (and back): row bit
/// `n - j` holds `x_j`, monomial bit `j - 1` does.
fn row_to_mask(row: u32, n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        row.reverse_bits() >> (32 - n)
    }
}

/// In-place XOR subset-sum transform over the packed table: one butterfly
/// pass per variable.
fn mobius_in_place(words: &mut [u64], n: usize) {
    for (k, &mask) in KEEP_LOW.iter().enumerate().take(n.min(6)) {
        let shift = 1u32 << k;
        for w in words.iter_mut() {
            *w ^= (*w & mask) << shift;
        }
    }
    for k in 6..n {
        let block = 1usize << (k - 6);
        for chunk in words.chunks_mut(2 * block) {
            let (lo, hi) = chunk.split_at_mut(block);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h ^= *l;
            }
        }
    }
}

/// The polynomial of a truth table. Free-function alias for
/// [`AnfPolynomial::from_table`].
pub fn anf_from_tt(f: &TruthTable) -> AnfPolynomial {
    AnfPolynomial::from_table(f)
}

/// The truth table of a polynomial. Free-function alias for
/// [`AnfPolynomial::to_table`].
pub fn tt_from_anf(p: &AnfPolynomial) -> TruthTable {
    p.to_table()
}
