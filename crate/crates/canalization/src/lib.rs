//! Canalizing structure analysis for Boolean functions.
//!
//! A variable of a Boolean function is *canalizing* when one of its input
//! values fixes the function's output on its own. Peeling canalizing
//! variables off repeatedly stratifies the variables into *layers* and
//! leaves a *core* on the variables that never become canalizing; this
//! layered form is unique up to order inside a layer, and functions whose
//! variables all end up in layers are *nested canalizing* (NCFs). Many
//! rule sets in Boolean network models are of exactly this shape, which is
//! what makes the decomposition worth computing.
//!
//! The crate provides:
//!
//! * packed-bit [`TruthTable`]s and sparse [`AnfPolynomial`]s with
//!   conversions between them ([`anf_from_tt`], [`tt_from_anf`]);
//! * the layer decomposition from either representation
//!   ([`find_layers_tt`], [`find_layers_anf`]), a brute-force
//!   cross-validation oracle ([`find_layers_oracle`]), reconstruction
//!   ([`reconstruct`]) and complementation ([`negate_decomposition`]);
//! * the linear-check layer partition for NCFs with known canalizing order
//!   ([`fast_layer_partition`]);
//! * flat disjunctive normal forms of NCFs ([`dnf_from_layers`]);
//! * enumeration of all NCFs matching a partially prescribed structure
//!   ([`enumerate_ncfs`]);
//! * seeded random generators ([`random_ncf`], [`random_noncanalizing`]) and
//!   a timing harness ([`run_benchmark`]) comparing the algorithms with and
//!   without precomputed input columns;
//! * parsers for polynomial, logic-expression and raw-table formats
//!   ([`parse_anf`], [`parse_logic`], [`parse_table`]).
//!
//! ```
//! use canalization::{find_layers_tt, parse_logic};
//!
//! let f = parse_logic("x1 & (x2 | x3)", None).unwrap();
//! let d = find_layers_tt(&f);
//! assert_eq!(d.layer_vector(), vec![1, 2]);
//! assert!(d.is_nested_canalizing());
//! ```
//!
//! Everything operates on immutable values and is safe to call from multiple
//! threads. Truth tables are capped at 24 variables: every decomposition
//! algorithm is exponential in the variable count, and the cap keeps a
//! single table at 2 MiB.

mod anf;
mod benchmark;
mod dnf;
mod error;
mod generate;
mod layers;
mod masks;
mod ncf;
mod parse;
mod reveng;
mod truth_table;

pub use anf::{anf_from_tt, tt_from_anf, AnfPolynomial};
pub use benchmark::{records_to_csv, run_benchmark, Algorithm, BenchRecord, FunctionClass};
pub use dnf::{dnf_from_layers, verify_dnf, DnfExpression, Literal};
pub use error::{Error, Result};
pub use generate::{random_ncf, random_noncanalizing};
pub use layers::{
    canalizing_sets, dot_products, find_layers_anf, find_layers_oracle, find_layers_tt,
    find_layers_tt_cached, negate_decomposition, reconstruct, CanalizingSets, DotProducts, Layer,
    LayerDecomposition,
};
pub use masks::{ColumnMasks, MaskCache};
pub use ncf::{fast_layer_partition, normalize_ncf, FastPartition, NcfOrderInfo};
pub use parse::{
    parse_anf, parse_logic, parse_source, parse_table, split_function_lines, FunctionSource,
    ParsedFunction, SourceFormat,
};
pub use reveng::{enumerate_ncfs, first_layer_check, spec_match, ResolvedNcf, SpecLayer, StructureSpec};
pub use truth_table::{TruthTable, MAX_VARS};
