//! Benchmark-only crate; see `benches/layers.rs`. Shared input preparation
//! lives here so the bench target stays small.

use canalization::{anf_from_tt, random_ncf, random_noncanalizing, AnfPolynomial, TruthTable};

/// A deterministic benchmark input set: tables and their polynomial forms.
pub struct Inputs {
    pub tables: Vec<TruthTable>,
    pub polys: Vec<AnfPolynomial>,
}

pub fn ncf_inputs(n: usize, count: usize, seed: u64) -> Inputs {
    let tables: Vec<TruthTable> = (0..count)
        .map(|k| random_ncf(n, seed + k as u64).unwrap())
        .collect();
    let polys = tables.iter().map(anf_from_tt).collect();
    Inputs { tables, polys }
}

pub fn noncanalizing_inputs(n: usize, count: usize, seed: u64) -> Inputs {
    let tables: Vec<TruthTable> = (0..count)
        .map(|k| random_noncanalizing(n, seed + k as u64).unwrap())
        .collect();
    let polys = tables.iter().map(anf_from_tt).collect();
    Inputs { tables, polys }
}
