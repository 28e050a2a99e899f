//! Wall-clock comparison of the layer-finding algorithms on random inputs.
//!
//! For every requested size and both input classes the harness draws fresh
//! seeded functions and times three configurations on the same functions:
//! the truth-table algorithm rebuilding its input columns per pass, the same
//! algorithm reading them from a cache built before timing starts, and the
//! polynomial algorithm (the conversion to polynomial form happens outside
//! the timed region, as does all generation). Timed calls run strictly
//! one at a time on the current thread.

use std::fmt;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::anf::{anf_from_tt, AnfPolynomial};
use crate::error::Result;
use crate::generate::{random_ncf_with, random_noncanalizing_with};
use crate::layers::{find_layers_anf, find_layers_tt, find_layers_tt_cached};
use crate::masks::MaskCache;
use crate::truth_table::TruthTable;

/// Which layer-finding routine a record timed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Algorithm {
    /// [`find_layers_tt`] / [`find_layers_tt_cached`].
    TruthTable,
    /// [`find_layers_anf`].
    Anf,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::TruthTable => "tt",
            Algorithm::Anf => "anf",
        })
    }
}

/// The class of random inputs a record was measured on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FunctionClass {
    Ncf,
    NonCanalizing,
}

impl fmt::Display for FunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FunctionClass::Ncf => "ncf",
            FunctionClass::NonCanalizing => "noncanalizing",
        })
    }
}

/// Timing results for one (algorithm, class, size) configuration.
#[derive(Clone, Debug)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub class: FunctionClass,
    pub n: usize,
    /// Whether the truth-table algorithm read precomputed input columns.
    pub precompute: bool,
    pub trials: usize,
    pub mean_seconds: f64,
    pub median_seconds: f64,
    /// Wall time of each trial, in order.
    pub trial_seconds: Vec<f64>,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn median(sorted: &mut [f64]) -> f64 {
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    }
}

/// Runs the full comparison: for each `n` in `ns` and each class, `trials`
/// fresh functions are generated and each of the three configurations is
/// timed on all of them, yielding `3 * 2 * ns.len()` records. Identical
/// seeds regenerate identical functions.
pub fn run_benchmark(ns: &[usize], trials: usize, seed: u64) -> Result<Vec<BenchRecord>> {
    assert!(trials >= 1, "at least one trial per configuration");
    let max_n = ns.iter().copied().max().unwrap_or(0);
    let cache = MaskCache::new(max_n);
    let mut records = Vec::new();
    for &n in ns {
        for class in [FunctionClass::Ncf, FunctionClass::NonCanalizing] {
            let tables: Vec<TruthTable> = (0..trials)
                .map(|trial| {
                    let s = splitmix64(
                        seed ^ ((n as u64) << 32)
                            ^ ((matches!(class, FunctionClass::Ncf) as u64) << 24)
                            ^ trial as u64,
                    );
                    let mut rng = ChaCha8Rng::seed_from_u64(s);
                    match class {
                        FunctionClass::Ncf => random_ncf_with(n, &mut rng),
                        FunctionClass::NonCanalizing => random_noncanalizing_with(n, &mut rng),
                    }
                })
                .collect::<Result<_>>()?;
            let polys: Vec<AnfPolynomial> = tables.iter().map(anf_from_tt).collect();

            for (algorithm, precompute) in [
                (Algorithm::TruthTable, false),
                (Algorithm::TruthTable, true),
                (Algorithm::Anf, false),
            ] {
                // Warm up on the first input, untimed.
                run_once(algorithm, precompute, &tables[0], &polys[0], &cache);
                let trial_seconds: Vec<f64> = tables
                    .iter()
                    .zip(&polys)
                    .map(|(table, poly)| {
                        let start = Instant::now();
                        run_once(algorithm, precompute, table, poly, &cache);
                        start.elapsed().as_secs_f64()
                    })
                    .collect();
                let mean_seconds = trial_seconds.iter().sum::<f64>() / trials as f64;
                let median_seconds = median(&mut trial_seconds.clone());
                records.push(BenchRecord {
                    algorithm,
                    class,
                    n,
                    precompute,
                    trials,
                    mean_seconds,
                    median_seconds,
                    trial_seconds,
                });
            }
        }
    }
    Ok(records)
}

fn run_once(
    algorithm: Algorithm,
    precompute: bool,
    table: &TruthTable,
    poly: &AnfPolynomial,
    cache: &MaskCache,
) {
    match (algorithm, precompute) {
        (Algorithm::TruthTable, false) => {
            std::hint::black_box(find_layers_tt(std::hint::black_box(table)));
        }
        (Algorithm::TruthTable, true) => {
            std::hint::black_box(find_layers_tt_cached(std::hint::black_box(table), cache));
        }
        (Algorithm::Anf, _) => {
            std::hint::black_box(find_layers_anf(std::hint::black_box(poly)));
        }
    }
}

/// Serializes records as CSV with the columns
/// `algorithm,class,n,precompute,trial,seconds`: one row per trial, then one
/// summary row per record with `trial = -1` carrying the mean.
pub fn records_to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("algorithm,class,n,precompute,trial,seconds\n");
    for r in records {
        for (i, s) in r.trial_seconds.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{},{},{:.9}\n",
                r.algorithm,
                r.class,
                r.n,
                r.precompute,
                i + 1,
                s
            ));
        }
        out.push_str(&format!(
            "{},{},{},{},-1,{:.9}\n",
            r.algorithm, r.class, r.n, r.precompute, r.mean_seconds
        ));
    }
    out
}
