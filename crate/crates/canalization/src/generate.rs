//! Seeded random generators for benchmark inputs: nested canalizing
//! functions and non-canalizing functions.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::layers::find_layers_tt;
use crate::truth_table::{TruthTable, MAX_VARS};

/// A uniformly drawn nested canalizing function description: a random
/// canalizing order, random canalizing inputs and random canalized outputs,
/// with the default value complementing the last output. The distribution is
/// uniform over (order, inputs, outputs) triples, not over distinct NCFs.
/// Deterministic for a fixed seed.
pub fn random_ncf(n: usize, seed: u64) -> Result<TruthTable> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_ncf_with(n, &mut rng)
}

pub(crate) fn random_ncf_with(n: usize, rng: &mut ChaCha8Rng) -> Result<TruthTable> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::VarCount { n, max: MAX_VARS });
    }
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let inputs: Vec<bool> = (0..n).map(|_| rng.random()).collect();
    let outputs: Vec<bool> = (0..n).map(|_| rng.random()).collect();
    let default = !outputs[n - 1];
    TruthTable::from_fn(n, |assignment| {
        for (j, &var) in order.iter().enumerate() {
            if assignment[var - 1] == inputs[j] {
                return outputs[j];
            }
        }
        default
    })
}

/// A uniformly random truth table, resampled until the layer analysis finds
/// no canalizing variable (and the function is not constant). Rejection is
/// cheap because non-canalizing functions dominate from four variables on.
/// Deterministic for a fixed seed.
pub fn random_noncanalizing(n: usize, seed: u64) -> Result<TruthTable> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_noncanalizing_with(n, &mut rng)
}

pub(crate) fn random_noncanalizing_with(n: usize, rng: &mut ChaCha8Rng) -> Result<TruthTable> {
    if n < 4 {
        return Err(Error::BelowMinimum {
            operation: "random_noncanalizing",
            n,
            min: 4,
        });
    }
    if n > MAX_VARS {
        return Err(Error::VarCount { n, max: MAX_VARS });
    }
    loop {
        let f = TruthTable::from_fn(n, |_| rng.random())?;
        if f.is_constant() {
            continue;
        }
        if find_layers_tt(&f).depth() == 0 {
            return Ok(f);
        }
    }
}
