//! Layer partitioning of a nested canalizing function whose canalizing
//! variable order and inputs are already known.
//!
//! Once the polynomial coefficients of the input-shifted function are
//! available, deciding whether consecutive variables of the canalizing order
//! share a layer takes one coefficient equality per boundary, so the whole
//! partition needs exactly `n - 1` checks.
//!
//! The equalities are checked on the normalized function
//! `h(x) = f(x xor a) xor f(a)` (variables permuted into canalizing order,
//! each shifted by its canalizing input). On the raw coefficients of `f`
//! they fail on functions as small as a two-variable OR; normalizing fixes
//! the input convention and is validated exhaustively against the layer
//! engine in the tests.

use crate::anf::{anf_from_tt, AnfPolynomial};
use crate::error::{Error, Result};
use crate::layers::find_layers_tt;
use crate::truth_table::TruthTable;

/// A canalizing order for a nested canalizing function: the permutation
/// `order` lists the variables outermost first, `inputs[j]` and `outputs[j]`
/// are the canalizing input and canalized output of `order[j]`.
///
/// The outputs are not needed once the function is normalized; they are
/// carried for completeness and validated only for length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NcfOrderInfo {
    pub order: Vec<usize>,
    pub inputs: Vec<bool>,
    pub outputs: Vec<bool>,
}

impl NcfOrderInfo {
    fn validate(&self, n: usize) -> Result<()> {
        if self.order.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: self.order.len(),
            });
        }
        if self.inputs.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: self.inputs.len(),
            });
        }
        if self.outputs.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: self.outputs.len(),
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &self.order {
            if v == 0 || v > n {
                return Err(Error::InvalidOrderInfo(format!(
                    "variable x{v} outside 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidOrderInfo(format!(
                    "variable x{v} listed twice"
                )));
            }
            seen[v] = true;
        }
        Ok(())
    }
}

/// The result of the coefficient-equality partition, with the number of
/// equality checks that were performed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FastPartition {
    /// Layer sizes from outermost to innermost.
    pub layer_sizes: Vec<usize>,
    /// Always `n - 1` for an `n`-variable input.
    pub coefficient_checks: usize,
}

/// The polynomial of `h(x) = f(x xor a) xor f(a)` with the variables permuted
/// into canalizing order, so that every canalizing input becomes 0 and
/// `h(0, ..., 0) = 0`.
pub fn normalize_ncf(f: &TruthTable, info: &NcfOrderInfo) -> Result<AnfPolynomial> {
    let n = f.var_count();
    info.validate(n)?;
    // Assignment of the original variables at y = 0, i.e. all canalizing inputs.
    let mut base = vec![false; n];
    for (j, &v) in info.order.iter().enumerate() {
        base[v - 1] = info.inputs[j];
    }
    let f_at_base = f.evaluate(&base);
    let mut original = vec![false; n];
    let shifted = TruthTable::from_fn(n, |y| {
        for (j, &v) in info.order.iter().enumerate() {
            original[v - 1] = y[j] ^ info.inputs[j];
        }
        f.evaluate(&original) ^ f_at_base
    })?;
    Ok(anf_from_tt(&shifted))
}

/// Partitions the variables of an NCF into layers using the coefficient
/// equalities of its normalized polynomial: position `j` starts a new layer
/// exactly when
/// `c({1..j}) != c({1..j+1}) * c({j+2..n})`
/// fails to hold, and `n - 1` such equalities are checked in order.
///
/// The resulting partition is validated against [`find_layers_tt`]; a
/// mismatch means `info` does not describe a canalizing order of `f` and is
/// reported as an error carrying both vectors.
pub fn fast_layer_partition(f: &TruthTable, info: &NcfOrderInfo) -> Result<FastPartition> {
    let n = f.var_count();
    let h = normalize_ncf(f, info)?;
    let full: u32 = (1u32 << n) - 1;
    let mut checks = 0usize;
    let mut sizes = vec![1usize];
    for j in 1..n {
        let prefix = (1u32 << j) - 1; // {1, ..., j}
        let prefix_next = (1u32 << (j + 1)) - 1;
        let lhs = h.has_monomial_mask(prefix);
        let rhs = h.has_monomial_mask(prefix_next) && h.has_monomial_mask(full & !prefix_next);
        checks += 1;
        if lhs == rhs {
            *sizes.last_mut().unwrap() += 1; // same layer as the previous variable
        } else {
            sizes.push(1);
        }
    }
    let engine = find_layers_tt(f).layer_vector();
    if engine != sizes {
        return Err(Error::PartitionMismatch {
            computed: sizes,
            expected: engine,
        });
    }
    Ok(FastPartition {
        layer_sizes: sizes,
        coefficient_checks: checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layers::find_layers_tt;

    fn t(s: &str) -> TruthTable {
        let n = s.len().trailing_zeros() as usize;
        TruthTable::from_bits(n, s.chars().map(|c| c == '1')).unwrap()
    }

    fn info(order: &[usize], inputs: &[u8], outputs: &[u8]) -> NcfOrderInfo {
        NcfOrderInfo {
            order: order.to_vec(),
            inputs: inputs.iter().map(|&b| b == 1).collect(),
            outputs: outputs.iter().map(|&b| b == 1).collect(),
        }
    }

    fn masks(p: &AnfPolynomial) -> Vec<u32> {
        p.monomial_masks().to_vec()
    }

    #[test]
    fn normalize_or_to_plain_product() {
        // f(x1 + 1, x2 + 1) + f(1, 1) = x1 x2.
        let h = normalize_ncf(&t("0111"), &info(&[1, 2], &[1, 1], &[1, 1])).unwrap();
        assert_eq!(masks(&h), vec![0b11]);
    }

    #[test]
    fn normalize_and_is_already_normal() {
        let h = normalize_ncf(&t("0001"), &info(&[1, 2], &[0, 0], &[0, 0])).unwrap();
        assert_eq!(masks(&h), vec![0b11]);
    }

    #[test]
    fn normalize_three_variable_example() {
        // x1 and (x2 or x3) with inputs (0, 1, 1) normalizes to x1 + x1 x2 x3,
        // cross-checked by evaluating the shifted table directly.
        let f = t("00000111");
        let i = info(&[1, 2, 3], &[0, 1, 1], &[0, 1, 1]);
        let h = normalize_ncf(&f, &i).unwrap();
        assert_eq!(masks(&h), vec![0b001, 0b111]);
        let direct = TruthTable::from_fn(3, |y| {
            f.evaluate(&[y[0], !y[1], !y[2]]) ^ f.evaluate(&[false, true, true])
        })
        .unwrap();
        assert_eq!(h.to_table(), direct);
        assert!(!h.evaluate(&[false, false, false]));
    }

    #[test]
    fn normalize_rejects_length_mismatch() {
        let bad = NcfOrderInfo {
            order: vec![1, 2],
            inputs: vec![false],
            outputs: vec![false, false],
        };
        assert!(normalize_ncf(&t("0001"), &bad).is_err());
    }

    #[test]
    fn partition_of_and() {
        let p = fast_layer_partition(&t("0001"), &info(&[1, 2], &[0, 0], &[0, 0])).unwrap();
        assert_eq!(p.layer_sizes, vec![2]);
        assert_eq!(p.coefficient_checks, 1);
    }

    #[test]
    fn partition_of_three_variable_example() {
        let p = fast_layer_partition(
            &t("00000111"),
            &info(&[1, 2, 3], &[0, 1, 1], &[0, 1, 1]),
        )
        .unwrap();
        assert_eq!(p.layer_sizes, vec![1, 2]);
        assert_eq!(p.coefficient_checks, 2);
    }

    #[test]
    fn partition_of_single_variable() {
        let p = fast_layer_partition(&t("01"), &info(&[1], &[0], &[0])).unwrap();
        assert_eq!(p.layer_sizes, vec![1]);
        assert_eq!(p.coefficient_checks, 0);
    }

    #[test]
    fn partition_rejects_wrong_order_info() {
        // XOR is not nested canalizing at all, so any order info contradicts
        // the engine.
        let err = fast_layer_partition(&t("0110"), &info(&[1, 2], &[0, 0], &[0, 0]));
        assert!(matches!(err, Err(Error::PartitionMismatch { .. })));
    }

    #[test]
    fn partition_agrees_with_engine_on_small_ncfs() {
        for bits in 0..1u32 << 8 {
            let f = TruthTable::from_bits(3, (0..8).map(|r| bits >> r & 1 == 1)).unwrap();
            let d = find_layers_tt(&f);
            if !d.is_nested_canalizing() {
                continue;
            }
            let mut order = Vec::new();
            let mut inputs = Vec::new();
            let mut outputs = Vec::new();
            for layer in &d.layers {
                for &(v, a) in &layer.entries {
                    order.push(v);
                    inputs.push(a);
                    outputs.push(layer.output);
                }
            }
            let i = NcfOrderInfo {
                order,
                inputs,
                outputs,
            };
            let p = fast_layer_partition(&f, &i).unwrap();
            assert_eq!(p.layer_sizes, d.layer_vector(), "bits={bits}");
            assert_eq!(p.coefficient_checks, 2);
        }
    }
}
