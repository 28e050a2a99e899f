//! Reverse engineering: all nested canalizing functions matching a partially
//! prescribed canalizing structure.
//!
//! A structure spec assigns every variable to a layer and optionally pins
//! canalizing inputs and canalized outputs; unknown fields are left open.
//! Because the layered form determines the function uniquely, "all NCFs with
//! this structure" is exactly "all completions of the unknowns whose
//! reconstruction re-analyzes to the prescribed structure", so the
//! enumeration builds every completion, rebuilds its truth table, and keeps
//! the ones whose canonical decomposition honors every pinned field. The
//! re-analysis filter matters: a completion can collapse (layers merging or
//! a trailing singleton folding into its neighbor), in which case its true
//! structure is not the prescribed one.

use std::collections::BTreeMap;

use crate::anf::{anf_from_tt, AnfPolynomial};
use crate::error::{Error, Result};
use crate::layers::{find_layers_tt, reconstruct, Layer, LayerDecomposition};
use crate::truth_table::TruthTable;

/// One prescribed layer: its members with optional canalizing inputs, and an
/// optional canalized output.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecLayer {
    /// `(variable index, pinned canalizing input)`; `None` leaves the input
    /// open.
    pub members: Vec<(usize, Option<bool>)>,
    pub output: Option<bool>,
}

/// A partially specified canalizing structure. Layer membership is total:
/// every variable of `1..=n` belongs to exactly one layer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureSpec {
    pub n: usize,
    pub layers: Vec<SpecLayer>,
}

impl StructureSpec {
    /// Checks membership (total, no duplicates, indices in range) and that
    /// the pinned outputs admit an alternating completion.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidStructureSpec(msg));
        if self.layers.is_empty() {
            return fail("no layers".to_string());
        }
        let mut seen = vec![false; self.n + 1];
        let mut covered = 0usize;
        for layer in &self.layers {
            if layer.members.is_empty() {
                return fail("empty layer".to_string());
            }
            for &(index, _) in &layer.members {
                if index == 0 || index > self.n {
                    return fail(format!("variable x{index} outside 1..={}", self.n));
                }
                if seen[index] {
                    return fail(format!("variable x{index} appears twice"));
                }
                seen[index] = true;
                covered += 1;
            }
        }
        if covered != self.n {
            return fail(format!(
                "layers cover {covered} of {} variables; membership must be total",
                self.n
            ));
        }
        // Outputs must alternate, so each pinned output forces the output of
        // layer 1; two pins that disagree are contradictory.
        self.implied_first_output()?;
        Ok(())
    }

    /// The output of layer 1 forced by the pinned outputs, if any.
    fn implied_first_output(&self) -> Result<Option<bool>> {
        let mut implied: Option<(usize, bool)> = None;
        for (i, layer) in self.layers.iter().enumerate() {
            if let Some(out) = layer.output {
                let first = out ^ (i % 2 == 1);
                match implied {
                    None => implied = Some((i, first)),
                    Some((j, prev)) if prev != first => {
                        return Err(Error::InvalidStructureSpec(format!(
                            "outputs pinned on layers {} and {} cannot alternate",
                            j + 1,
                            i + 1
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(implied.map(|(_, b)| b))
    }
}

/// One enumerated function together with its fully resolved structure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResolvedNcf {
    pub polynomial: AnfPolynomial,
    pub table: TruthTable,
    /// The spec with every unknown input and output filled in from the
    /// canonical decomposition of `table`.
    pub resolved: StructureSpec,
}

/// Whether `x_var` is canalizing in the first layer of `p` with the given
/// input, decided by factoring.
///
/// For input 0 the test is whether `x_var` divides `p - p(0, ..., 0)`; for
/// input 1 the variable is first shifted by `x_var -> x_var + 1` and the
/// constant term of the shifted polynomial (the value of `p` at the unit
/// assignment) subtracted. Constant polynomials are not canalizing. When the
/// polynomial depends on a single variable both inputs pass the factoring
/// test; the unique layered form keeps the input whose canalized output is 0,
/// and this function answers accordingly.
pub fn first_layer_check(p: &AnfPolynomial, var: usize, input: bool) -> bool {
    if var == 0 || var > p.var_count() || p.is_constant() {
        return false;
    }
    if !divisibility_test(p, var, input) {
        return false;
    }
    if divisibility_test(p, var, !input) {
        // Single essential variable: keep the input that canalizes to 0.
        return p.substitute(var, input).unwrap().is_zero();
    }
    true
}

fn divisibility_test(p: &AnfPolynomial, var: usize, input: bool) -> bool {
    let bit = 1u32 << (var - 1);
    let shifted = if input {
        // x -> x + 1 splits every monomial containing x into the pair with
        // and without it; pairs produced twice cancel.
        let mut masks = Vec::with_capacity(2 * p.monomial_masks().len());
        for &m in p.monomial_masks() {
            masks.push(m);
            if m & bit != 0 {
                masks.push(m & !bit);
            }
        }
        AnfPolynomial::from_masks(p.var_count(), masks)
    } else {
        p.clone()
    };
    // Drop the constant term and require every remaining monomial to contain
    // the variable.
    let reduced = if shifted.constant_term() {
        shifted.toggle_constant()
    } else {
        shifted
    };
    !reduced.is_zero() && reduced.monomial_masks().iter().all(|m| m & bit != 0)
}

const ENUMERATION_MAX: usize = 12;

/// Enumerates every nested canalizing function whose canonical structure
/// agrees with the spec on all pinned fields, together with the resolved
/// unknowns. Results are deduplicated and ordered lexicographically by truth
/// table.
pub fn enumerate_ncfs(spec: &StructureSpec) -> Result<Vec<ResolvedNcf>> {
    spec.validate()?;
    if spec.n > ENUMERATION_MAX {
        return Err(Error::LimitExceeded {
            operation: "enumerate_ncfs",
            n: spec.n,
            max: ENUMERATION_MAX,
        });
    }
    let first_outputs: Vec<bool> = match spec.implied_first_output()? {
        Some(b) => vec![b],
        None => vec![false, true],
    };
    // Positions of the unknown inputs, completed by the bits of a counter.
    let open: Vec<(usize, usize)> = spec
        .layers
        .iter()
        .enumerate()
        .flat_map(|(li, layer)| {
            layer
                .members
                .iter()
                .enumerate()
                .filter(|(_, (_, input))| input.is_none())
                .map(move |(mi, _)| (li, mi))
        })
        .collect();

    let mut by_table: BTreeMap<String, ResolvedNcf> = BTreeMap::new();
    for first in &first_outputs {
        for completion in 0..1u64 << open.len() {
            let mut layers: Vec<Layer> = Vec::with_capacity(spec.layers.len());
            for (li, layer) in spec.layers.iter().enumerate() {
                let mut entries: Vec<(usize, bool)> = layer
                    .members
                    .iter()
                    .enumerate()
                    .map(|(mi, &(var, input))| {
                        let value = input.unwrap_or_else(|| {
                            let slot = open.iter().position(|&x| x == (li, mi)).unwrap();
                            completion >> slot & 1 == 1
                        });
                        (var, value)
                    })
                    .collect();
                entries.sort_unstable();
                layers.push(Layer {
                    entries,
                    output: first ^ (li % 2 == 1),
                });
            }
            let candidate = LayerDecomposition {
                n: spec.n,
                layers,
                core: AnfPolynomial::one(spec.n),
                b: *first,
                fictitious: vec![],
            };
            let table = reconstruct(&candidate).expect("completed spec is well-formed");
            let canonical = find_layers_tt(&table);
            if !decomposition_matches(&canonical, spec) {
                continue;
            }
            let resolved = StructureSpec {
                n: spec.n,
                layers: canonical
                    .layers
                    .iter()
                    .map(|l| SpecLayer {
                        members: l.entries.iter().map(|&(v, a)| (v, Some(a))).collect(),
                        output: Some(l.output),
                    })
                    .collect(),
            };
            by_table.entry(table.to_bit_string()).or_insert(ResolvedNcf {
                polynomial: anf_from_tt(&table),
                table,
                resolved,
            });
        }
    }
    Ok(by_table.into_values().collect())
}

/// Whether the canonical decomposition of `f` is nested canalizing and agrees
/// with every pinned field of the spec (layer count, membership, inputs,
/// outputs). Functions on a different variable count never match.
pub fn spec_match(f: &TruthTable, spec: &StructureSpec) -> bool {
    f.var_count() == spec.n && decomposition_matches(&find_layers_tt(f), spec)
}

fn decomposition_matches(d: &LayerDecomposition, spec: &StructureSpec) -> bool {
    if !d.is_nested_canalizing() || d.layers.len() != spec.layers.len() {
        return false;
    }
    for (have, want) in d.layers.iter().zip(&spec.layers) {
        if let Some(out) = want.output {
            if have.output != out {
                return false;
            }
        }
        if have.entries.len() != want.members.len() {
            return false;
        }
        for &(var, input) in &want.members {
            match have.entries.iter().find(|&&(v, _)| v == var) {
                None => return false,
                Some(&(_, a)) => {
                    if let Some(pinned) = input {
                        if a != pinned {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}
