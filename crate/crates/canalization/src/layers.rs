//! Canalizing layer decomposition of Boolean functions.
//!
//! Every Boolean function can be written uniquely (up to order within a
//! layer) as a nested product of extended monomials and a core polynomial:
//!
//! ```text
//! f = M_1 (M_2 ( ... (M_r * P + 1) ... ) + 1) + b,    M_i = prod (x + a)
//! ```
//!
//! Layer `i` collects the variables that become canalizing once the
//! variables of layers `1..i` take their non-canalizing inputs; the core
//! holds the variables that never do. This module computes the decomposition
//! three ways — from a packed truth table, from a polynomial, and by a
//! deliberately naive definitional scan used to cross-check the other two —
//! and rebuilds the function from a decomposition.
//!
//! Convention for the stored core: for a non-canalizing residual the core is
//! the residual subfunction itself, evaluated at the non-canalizing inputs of
//! all layer variables and kept in original variable indices (this is how the
//! factored examples are usually written). When the residual is constant the
//! core is the canonical constant 1, and the residual value is determined by
//! `b` and the number of layers. Variables the function does not depend on
//! belong to no layer and no core; they are reported separately.

use std::fmt;

use crate::anf::{anf_from_tt, AnfPolynomial};
use crate::error::{Error, Result};
use crate::masks::{ColumnMasks, MaskCache};
use crate::truth_table::{word_count, TruthTable};

/// One layer: the variables that become canalizing at the same stage,
/// with their canalizing inputs, plus the shared canalized output.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Layer {
    /// `(variable index, canalizing input)`, ascending by index, no
    /// duplicates, nonempty.
    pub entries: Vec<(usize, bool)>,
    /// The canalized output of every variable in this layer.
    pub output: bool,
}

impl Layer {
    pub fn size(&self) -> usize {
        self.entries.len()
    }
}

/// The unique layered form of a Boolean function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LayerDecomposition {
    pub n: usize,
    /// Layers from outermost to innermost; empty for non-canalizing
    /// functions.
    pub layers: Vec<Layer>,
    /// Core polynomial over the never-canalizing variables, in original
    /// indices. Equals the whole function when there are no layers.
    pub core: AnfPolynomial,
    /// The additive constant of the nested form; equals the canalized output
    /// of layer 1 when layers exist, and 0 otherwise.
    pub b: bool,
    /// Variables the function does not depend on, ascending.
    pub fictitious: Vec<usize>,
}

impl LayerDecomposition {
    /// Canalizing depth: the total number of layer variables.
    pub fn depth(&self) -> usize {
        self.layers.iter().map(Layer::size).sum()
    }

    /// Layer sizes `(k_1, ..., k_r)` from outermost to innermost.
    pub fn layer_vector(&self) -> Vec<usize> {
        self.layers.iter().map(Layer::size).collect()
    }

    /// A function is nested canalizing exactly when every variable ends up in
    /// a layer (the core is then the constant 1).
    pub fn is_nested_canalizing(&self) -> bool {
        self.n >= 1 && self.depth() == self.n
    }

    /// Checks the structural invariants: the layers partition `1..=n`
    /// together with the core support and the fictitious set, consecutive
    /// outputs alternate, and `b` matches the first layer.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidDecomposition(msg));
        let mut seen = vec![false; self.n + 1];
        let mut claim = |index: usize, what: &str| -> Result<()> {
            if index == 0 || index > self.n {
                return fail(format!("{what} variable x{index} outside 1..={}", self.n));
            }
            if seen[index] {
                return fail(format!("variable x{index} appears twice"));
            }
            seen[index] = true;
            Ok(())
        };
        for layer in &self.layers {
            if layer.entries.is_empty() {
                return fail("empty layer".to_string());
            }
            for pair in layer.entries.windows(2) {
                if pair[0].0 >= pair[1].0 {
                    return fail("layer entries not sorted by variable index".to_string());
                }
            }
            for &(index, _) in &layer.entries {
                claim(index, "layer")?;
            }
        }
        for index in self.core.support() {
            claim(index, "core")?;
        }
        for &index in &self.fictitious {
            claim(index, "fictitious")?;
        }
        if let Some(missing) = (1..=self.n).find(|&i| !seen[i]) {
            return fail(format!("variable x{missing} not covered"));
        }
        for pair in self.layers.windows(2) {
            if pair[0].output == pair[1].output {
                return fail("consecutive layers share a canalized output".to_string());
            }
        }
        match self.layers.first() {
            Some(first) if first.output != self.b => {
                fail("b differs from the canalized output of layer 1".to_string())
            }
            None if self.b => fail("b must be 0 when there are no layers".to_string()),
            _ => {
                if !self.layers.is_empty() && self.core.is_constant() && !self.core.is_one() {
                    fail("constant core must be 1 when layers exist".to_string())
                } else if self.core.var_count() != self.n {
                    fail("core polynomial uses a different variable count".to_string())
                } else {
                    Ok(())
                }
            }
        }
    }
}

impl fmt::Display for LayerDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, layer) in self.layers.iter().enumerate() {
            write!(f, "layer {}: output {}:", i + 1, layer.output as u8)?;
            for &(index, input) in &layer.entries {
                write!(f, " x{index}={}", input as u8)?;
            }
            writeln!(f)?;
        }
        writeln!(f, "core: {}", self.core)
    }
}

/// The four index sets of canalizing variables, split by canalizing input
/// `a` and canalized output `b`.
///
/// `i` lies in the `a -> b` set exactly when every row with `x_i = a` has
/// `f = b`. For a function with a single essential variable both an
/// `a -> b` and an `(1-a) -> (1-b)` membership hold at once; every other
/// non-constant function canalizes to at most one output value.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CanalizingSets {
    pub zero_to_zero: Vec<usize>,
    pub one_to_zero: Vec<usize>,
    pub zero_to_one: Vec<usize>,
    pub one_to_one: Vec<usize>,
}

/// The dot products of `f` (and its complement) against every input column
/// (and its complement). `x_i = a` canalizes `f` to `b` exactly when the
/// corresponding entry equals `2^(n-1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DotProducts {
    /// `<f, t_i>` per variable.
    pub f_dot_t: Vec<u64>,
    /// `<f, 1 - t_i>`.
    pub f_dot_not_t: Vec<u64>,
    /// `<1 - f, t_i>`.
    pub not_f_dot_t: Vec<u64>,
    /// `<1 - f, 1 - t_i>`.
    pub not_f_dot_not_t: Vec<u64>,
}

fn dot(f: &TruthTable, col: &[u64]) -> u64 {
    f.words()
        .iter()
        .zip(col)
        .map(|(w, c)| (w & c).count_ones() as u64)
        .sum()
}

/// Computes all four dot-product vectors of `f` against the input columns.
/// Only one popcount pass per variable is needed; the other three products
/// follow from the function weight and the column weight `2^(n-1)`.
pub fn dot_products(f: &TruthTable) -> DotProducts {
    let masks = ColumnMasks::build(f.var_count());
    dot_products_with(f, &masks)
}

fn dot_products_with(f: &TruthTable, masks: &ColumnMasks) -> DotProducts {
    let n = f.var_count();
    let mut out = DotProducts {
        f_dot_t: Vec::with_capacity(n),
        f_dot_not_t: Vec::with_capacity(n),
        not_f_dot_t: Vec::with_capacity(n),
        not_f_dot_not_t: Vec::with_capacity(n),
    };
    if n == 0 {
        return out;
    }
    let weight = f.weight();
    let half = 1u64 << (n - 1);
    for i in 1..=n {
        let c = dot(f, masks.col(i));
        out.f_dot_t.push(c);
        out.f_dot_not_t.push(weight - c);
        out.not_f_dot_t.push(half - c);
        out.not_f_dot_not_t.push(half - (weight - c));
    }
    out
}

/// The canalizing variable sets of a non-constant function.
pub fn canalizing_sets(f: &TruthTable) -> Result<CanalizingSets> {
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let masks = ColumnMasks::build(f.var_count());
    Ok(canalizing_sets_with(f, &masks))
}

fn canalizing_sets_with(f: &TruthTable, masks: &ColumnMasks) -> CanalizingSets {
    let n = f.var_count();
    let weight = f.weight();
    let half = 1u64 << (n - 1);
    let mut sets = CanalizingSets::default();
    for i in 1..=n {
        // c = <f, t_i>; the other three dot products follow from c, the
        // function weight and the column weight 2^(n-1), so each of the four
        // equals-2^(n-1) tests reduces to one comparison.
        let c = dot(f, masks.col(i));
        if c == weight {
            sets.zero_to_zero.push(i); // <1-f, 1-t_i> = half - (weight - c)
        }
        if c == 0 {
            sets.one_to_zero.push(i); // <1-f, t_i> = half - c
        }
        if weight - c == half {
            sets.zero_to_one.push(i); // <f, 1-t_i> = weight - c
        }
        if c == half {
            sets.one_to_one.push(i); // <f, t_i> = c
        }
    }
    sets
}

/// The canalizing entries of the current layer, if any: all `(variable,
/// input)` pairs canalizing to the preferred output, plus that output.
/// Output 0 is preferred, which pins the unique decomposition of the two
/// single-variable functions that canalize to both outputs.
fn extract_layer(f: &TruthTable, masks: &ColumnMasks) -> Option<(Vec<(usize, bool)>, bool)> {
    let sets = canalizing_sets_with(f, masks);
    let mut zero_out: Vec<(usize, bool)> = Vec::new();
    for &i in &sets.zero_to_zero {
        zero_out.push((i, false));
    }
    for &i in &sets.one_to_zero {
        zero_out.push((i, true));
    }
    if !zero_out.is_empty() {
        zero_out.sort_unstable();
        return Some((zero_out, false));
    }
    let mut one_out: Vec<(usize, bool)> = Vec::new();
    for &i in &sets.zero_to_one {
        one_out.push((i, false));
    }
    for &i in &sets.one_to_one {
        one_out.push((i, true));
    }
    if !one_out.is_empty() {
        one_out.sort_unstable();
        return Some((one_out, true));
    }
    None
}

enum MaskSource<'a> {
    Fresh,
    Cached(&'a MaskCache),
}

impl MaskSource<'_> {
    fn masks(&self, m: usize) -> std::borrow::Cow<'_, ColumnMasks> {
        match self {
            // Rebuilt on every pass, like initializing the input columns anew.
            MaskSource::Fresh => std::borrow::Cow::Owned(ColumnMasks::build(m)),
            MaskSource::Cached(cache) => std::borrow::Cow::Borrowed(cache.masks(m)),
        }
    }
}

/// Computes the layer decomposition from the truth table, peeling one full
/// layer per pass: the canalizing variables found by the dot-product tests
/// are recorded and then fixed to their non-canalizing inputs.
pub fn find_layers_tt(f: &TruthTable) -> LayerDecomposition {
    find_layers_tt_impl(f, MaskSource::Fresh)
}

/// Same as [`find_layers_tt`] but reads the input columns from a prebuilt
/// cache instead of rebuilding them on each pass. The cache must cover
/// `f.var_count()` sizes.
pub fn find_layers_tt_cached(f: &TruthTable, cache: &MaskCache) -> LayerDecomposition {
    assert!(
        cache.max_vars() >= f.var_count(),
        "mask cache too small for this function"
    );
    find_layers_tt_impl(f, MaskSource::Cached(cache))
}

fn find_layers_tt_impl(f: &TruthTable, source: MaskSource) -> LayerDecomposition {
    let n = f.var_count();
    let mut current = f.clone();
    // index_map[j - 1] = original index of the current x_j
    let mut index_map: Vec<usize> = (1..=n).collect();
    let mut layers: Vec<Layer> = Vec::new();

    loop {
        if let Some(value) = current.constant_value() {
            return finish_constant_residual(n, layers, value, index_map);
        }
        let masks = source.masks(current.var_count());
        let Some((entries, output)) = extract_layer(&current, masks.as_ref()) else {
            // Non-canalizing residual: it becomes the core, in original labels.
            let core = anf_from_tt(&current).remap_vars(&index_map, n);
            return finish_with_core(n, layers, core, index_map);
        };
        layers.push(Layer {
            entries: entries
                .iter()
                .map(|&(i, a)| (index_map[i - 1], a))
                .collect(),
            output,
        });
        // Fix every layer variable to its non-canalizing input, highest local
        // index first so the remaining positions stay valid.
        for &(i, a) in entries.iter().rev() {
            current = current.restrict(i, !a).unwrap();
            index_map.remove(i - 1);
        }
    }
}

fn finish_constant_residual(
    n: usize,
    layers: Vec<Layer>,
    value: bool,
    remaining: Vec<usize>,
) -> LayerDecomposition {
    // Everything still unprocessed is fictitious. With layers present the
    // canonical core is the constant 1; a constant function is its own core.
    let (core, b) = if layers.is_empty() {
        let core = if value {
            AnfPolynomial::one(n)
        } else {
            AnfPolynomial::zero(n)
        };
        (core, false)
    } else {
        (AnfPolynomial::one(n), layers[0].output)
    };
    LayerDecomposition {
        n,
        layers,
        core,
        b,
        fictitious: remaining,
    }
}

fn finish_with_core(
    n: usize,
    layers: Vec<Layer>,
    core: AnfPolynomial,
    remaining: Vec<usize>,
) -> LayerDecomposition {
    let support = core.support();
    let fictitious = remaining
        .into_iter()
        .filter(|i| !support.contains(i))
        .collect();
    let b = layers.first().map(|l| l.output).unwrap_or(false);
    LayerDecomposition {
        n,
        layers,
        core,
        b,
        fictitious,
    }
}

/// Computes the layer decomposition from the polynomial by successive
/// substitution: a variable joins the current layer when one of its
/// substitutions collapses the polynomial to a constant, and the whole layer
/// is then substituted at the non-canalizing inputs.
pub fn find_layers_anf(p: &AnfPolynomial) -> LayerDecomposition {
    let n = p.var_count();
    let mut current = p.clone();
    let mut layer_vars: Vec<usize> = Vec::new();
    let mut layers: Vec<Layer> = Vec::new();

    loop {
        let support = current.support();
        if support.is_empty() {
            let remaining = (1..=n).filter(|i| !layer_vars.contains(i)).collect();
            return finish_constant_residual(n, layers, current.is_one(), remaining);
        }
        // (variable, input, canalized output) for every collapsing substitution
        let mut candidates: Vec<(usize, bool, bool)> = Vec::new();
        for &i in &support {
            for a in [false, true] {
                let g = current.substitute(i, a).unwrap();
                if g.is_constant() {
                    candidates.push((i, a, g.is_one()));
                }
            }
        }
        if candidates.is_empty() {
            let remaining = (1..=n).filter(|i| !layer_vars.contains(i)).collect();
            return finish_with_core(n, layers, current, remaining);
        }
        // Same output preference as the truth-table route.
        let output = !candidates.iter().any(|&(_, _, out)| !out);
        let entries: Vec<(usize, bool)> = candidates
            .iter()
            .filter(|&&(_, _, out)| out == output)
            .map(|&(i, a, _)| (i, a))
            .collect();
        for &(i, a) in &entries {
            current = current.substitute(i, !a).unwrap();
            layer_vars.push(i);
        }
        layers.push(Layer { entries, output });
    }
}

/// Definitional brute-force oracle: checks every `(variable, input)` pair by
/// scanning all rows, with no packed-word shortcuts. Exists to cross-validate
/// the two production algorithms, hence the deliberately small size limit.
pub fn find_layers_oracle(f: &TruthTable) -> Result<LayerDecomposition> {
    const ORACLE_MAX: usize = 12;
    let n = f.var_count();
    if n > ORACLE_MAX {
        return Err(Error::LimitExceeded {
            operation: "find_layers_oracle",
            n,
            max: ORACLE_MAX,
        });
    }
    let mut rows: Vec<bool> = (0..f.rows()).map(|r| f.bit(r)).collect();
    let mut m = n;
    let mut index_map: Vec<usize> = (1..=n).collect();
    let mut layers: Vec<Layer> = Vec::new();

    loop {
        if rows.iter().all(|&v| v) || rows.iter().all(|&v| !v) {
            return Ok(finish_constant_residual(n, layers, rows[0], index_map));
        }
        let mut candidates: Vec<(usize, bool, bool)> = Vec::new();
        for i in 1..=m {
            let p = m - i;
            for a in [false, true] {
                let mut fixed: Option<bool> = None;
                let mut canalizes = true;
                for (r, &v) in rows.iter().enumerate() {
                    if (r >> p) & 1 == (a as usize) {
                        match fixed {
                            None => fixed = Some(v),
                            Some(b) if b == v => {}
                            Some(_) => {
                                canalizes = false;
                                break;
                            }
                        }
                    }
                }
                if canalizes {
                    candidates.push((i, a, fixed.unwrap()));
                }
            }
        }
        if candidates.is_empty() {
            let residual =
                TruthTable::from_bits(m, rows.iter().copied()).unwrap();
            let core = anf_from_tt(&residual).remap_vars(&index_map, n);
            return Ok(finish_with_core(n, layers, core, index_map));
        }
        let output = !candidates.iter().any(|&(_, _, out)| !out);
        let entries: Vec<(usize, bool)> = candidates
            .iter()
            .filter(|&&(_, _, out)| out == output)
            .map(|&(i, a, _)| (i, a))
            .collect();
        layers.push(Layer {
            entries: entries
                .iter()
                .map(|&(i, a)| (index_map[i - 1], a))
                .collect(),
            output,
        });
        for &(i, a) in entries.iter().rev() {
            let p = m - i;
            let keep = !a as usize;
            rows = (0..rows.len())
                .filter(|r| (r >> p) & 1 == keep)
                .map(|r| rows[r])
                .collect();
            index_map.remove(i - 1);
            m -= 1;
        }
    }
}

/// Rebuilds the truth table of a decomposition by evaluating the nested
/// form. Rows on which no layer fires take the core value; with layers
/// present and a constant core the nested `+1`s make that value
/// `b + r (mod 2)`.
///
/// Accepts any decomposition satisfying the partition and alternation
/// invariants, including non-canonical ones (a trailing singleton layer with
/// constant core evaluates fine; its canonical form simply merges layers).
pub fn reconstruct(d: &LayerDecomposition) -> Result<TruthTable> {
    d.validate()?;
    let n = d.n;
    let words = word_count(n);
    let masks = ColumnMasks::build(n);
    let mut assigned = vec![0u64; words];
    let mut result = vec![0u64; words];
    for layer in &d.layers {
        // Rows on which this layer fires: some variable at its canalizing input.
        let mut fired = vec![0u64; words];
        for &(index, input) in &layer.entries {
            let col = masks.col(index);
            for (w, &c) in fired.iter_mut().zip(col) {
                *w |= if input { c } else { !c };
            }
        }
        for w in 0..words {
            let new = fired[w] & !assigned[w];
            if layer.output {
                result[w] |= new;
            }
            assigned[w] |= new;
        }
    }
    let rest_value = if d.layers.is_empty() {
        None // take the core table directly
    } else if d.core.is_one() {
        Some((d.b as usize + d.layers.len()) % 2 == 1)
    } else {
        None
    };
    match rest_value {
        Some(true) => {
            for w in 0..words {
                result[w] |= !assigned[w];
            }
        }
        Some(false) => {}
        None => {
            let core_tt = d.core.to_table();
            for (w, &c) in core_tt.words().iter().enumerate() {
                result[w] |= c & !assigned[w];
            }
        }
    }
    let tail = crate::truth_table::tail_mask(n);
    *result.last_mut().unwrap() &= tail;
    Ok(TruthTable::from_words(n, result))
}

/// The decomposition of the complement function: `b` and every layer output
/// flip, and a layerless core gains a constant 1. The reconstruction of the
/// result is the bitwise complement of the reconstruction of `d`.
pub fn negate_decomposition(d: &LayerDecomposition) -> LayerDecomposition {
    let mut out = d.clone();
    if out.layers.is_empty() {
        out.core = out.core.toggle_constant();
        return out;
    }
    for layer in &mut out.layers {
        layer.output = !layer.output;
    }
    out.b = !out.b;
    if !out.core.is_constant() {
        out.core = out.core.toggle_constant();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::tt_from_anf;

    fn t(s: &str) -> TruthTable {
        let n = s.len().trailing_zeros() as usize;
        TruthTable::from_bits(n, s.chars().map(|c| c == '1')).unwrap()
    }

    fn poly(n: usize, monos: &[&[usize]]) -> AnfPolynomial {
        AnfPolynomial::from_monomials(n, monos.iter().copied()).unwrap()
    }

    fn layer(entries: &[(usize, bool)], output: bool) -> Layer {
        Layer {
            entries: entries.to_vec(),
            output,
        }
    }

    /// The worked 3-variable function x1 and (x2 or x3).
    fn worked_example() -> TruthTable {
        t("00000111")
    }

    #[test]
    fn dot_products_match_worked_example() {
        let d = dot_products(&worked_example());
        assert_eq!(d.f_dot_t, vec![3, 2, 2]);
        assert_eq!(d.f_dot_not_t, vec![0, 1, 1]);
        assert_eq!(d.not_f_dot_t, vec![1, 2, 2]);
        assert_eq!(d.not_f_dot_not_t, vec![4, 3, 3]);
    }

    #[test]
    fn canalizing_sets_worked_example() {
        let s = canalizing_sets(&worked_example()).unwrap();
        assert_eq!(s.zero_to_zero, vec![1]);
        assert!(s.one_to_zero.is_empty());
        assert!(s.zero_to_one.is_empty());
        assert!(s.one_to_one.is_empty());

        // Subfunction x2 or x3 as a 2-variable table.
        let g = t("0111");
        let s = canalizing_sets(&g).unwrap();
        assert!(s.zero_to_one.is_empty());
        assert_eq!(s.one_to_one, vec![1, 2]);
    }

    #[test]
    fn canalizing_sets_xor_empty() {
        let s = canalizing_sets(&t("0110")).unwrap();
        assert_eq!(s, CanalizingSets::default());
    }

    #[test]
    fn dot_products_of_zero_variable_constant() {
        let d = dot_products(&TruthTable::constant(0, true).unwrap());
        assert!(d.f_dot_t.is_empty());
    }

    #[test]
    fn canalizing_sets_rejects_constant() {
        assert_eq!(
            canalizing_sets(&t("1111")).unwrap_err(),
            Error::ConstantFunction
        );
    }

    #[test]
    fn canalizing_sets_single_variable_hits_both_outputs() {
        // f = x1 canalizes with 0 -> 0 and 1 -> 1; the layer extraction
        // prefers output 0, which fixes the unique form.
        let s = canalizing_sets(&t("0011")).unwrap();
        assert_eq!(s.zero_to_zero, vec![1]);
        assert_eq!(s.one_to_one, vec![1]);
    }

    #[test]
    fn sets_match_definitional_scan_exhaustive_n3() {
        for bits in 1..(1u32 << 8) - 1 {
            let f = TruthTable::from_bits(3, (0..8).map(|r| bits >> r & 1 == 1)).unwrap();
            if f.is_constant() {
                continue;
            }
            let s = canalizing_sets(&f).unwrap();
            for i in 1..=3usize {
                for (a, b, got) in [
                    (false, false, &s.zero_to_zero),
                    (true, false, &s.one_to_zero),
                    (false, true, &s.zero_to_one),
                    (true, true, &s.one_to_one),
                ] {
                    let expected = (0..8usize)
                        .filter(|r| (r >> (3 - i)) & 1 == a as usize)
                        .all(|r| f.bit(r) == b);
                    assert_eq!(got.contains(&i), expected, "bits={bits} i={i} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn layers_of_worked_example() {
        let d = find_layers_tt(&worked_example());
        assert_eq!(
            d.layers,
            vec![
                layer(&[(1, false)], false),
                layer(&[(2, true), (3, true)], true),
            ]
        );
        assert!(d.core.is_one());
        assert_eq!(d.depth(), 3);
        assert_eq!(d.layer_vector(), vec![1, 2]);
        assert!(d.is_nested_canalizing());
        assert!(!d.b);
        assert!(d.fictitious.is_empty());
    }

    /// The 7-variable example (x1+1) x2 [(x3+1) x4 (x5 x6 + x7 + 1) + 1].
    fn seven_var_example() -> TruthTable {
        TruthTable::from_fn(7, |v| {
            let m1 = !v[0] & v[1];
            let m2 = !v[2] & v[3];
            let core = (v[4] & v[5]) ^ v[6] ^ true;
            m1 & ((m2 & core) ^ true)
        })
        .unwrap()
    }

    #[test]
    fn layers_of_seven_var_example() {
        let d = find_layers_tt(&seven_var_example());
        assert_eq!(
            d.layers,
            vec![
                layer(&[(1, true), (2, false)], false),
                layer(&[(3, true), (4, false)], true),
            ]
        );
        assert_eq!(d.layer_vector(), vec![2, 2]);
        assert_eq!(d.core, poly(7, &[&[5, 6], &[7]]));
        assert!(!d.b);
        assert!(d.fictitious.is_empty());
    }

    #[test]
    fn layers_of_constant() {
        let d = find_layers_tt(&t("0000"));
        assert!(d.layers.is_empty());
        assert!(d.core.is_zero());
        assert!(!d.b);
        assert_eq!(d.fictitious, vec![1, 2]);
    }

    #[test]
    fn anf_route_factored_example() {
        // x1*x2 + x1 + 1 has the single layer {x1 -> 0, x2 -> 1} with output 1.
        let d = find_layers_anf(&poly(2, &[&[1, 2], &[1], &[]]));
        assert_eq!(d.layers, vec![layer(&[(1, false), (2, true)], true)]);
        assert!(d.core.is_one());
        assert_eq!(d.layer_vector(), vec![2]);
        assert!(d.b);
    }

    #[test]
    fn anf_route_xor_has_no_layers() {
        let p = poly(2, &[&[1], &[2]]);
        let d = find_layers_anf(&p);
        assert!(d.layers.is_empty());
        assert_eq!(d.core, p);
        assert!(!d.b);
    }

    #[test]
    fn anf_route_two_layer_example() {
        // x1x2x3x4 + x1x2x3 + x2x3x4 + x2x3 + x4 factors as
        // (x4+1)((x1+1)x2x3 + 1) + 1.
        let p = poly(4, &[&[1, 2, 3, 4], &[1, 2, 3], &[2, 3, 4], &[2, 3], &[4]]);
        let d = find_layers_anf(&p);
        assert_eq!(
            d.layers,
            vec![
                layer(&[(4, true)], true),
                layer(&[(1, true), (2, false), (3, false)], false),
            ]
        );
        assert!(d.core.is_one());
        assert!(d.b);
        assert_eq!(d.layer_vector(), vec![1, 3]);
        // Same answer through the truth table.
        assert_eq!(find_layers_tt(&tt_from_anf(&p)), d);
    }

    #[test]
    fn oracle_single_variable_exceptional_case() {
        let d = find_layers_oracle(&t("01")).unwrap();
        assert_eq!(d.layers, vec![layer(&[(1, false)], false)]);
        assert!(d.core.is_one());
        assert!(!d.b);
    }

    #[test]
    fn oracle_majority_has_no_layers() {
        let d = find_layers_oracle(&t("00010111")).unwrap();
        assert!(d.layers.is_empty());
        assert_eq!(d.depth(), 0);
    }

    #[test]
    fn oracle_rejects_large_inputs() {
        let f = TruthTable::constant(13, false).unwrap();
        assert!(matches!(
            find_layers_oracle(&f),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn fictitious_variables_are_reported() {
        // f = x1 and x3 on four variables: x2 and x4 are fictitious.
        let f = TruthTable::from_fn(4, |v| v[0] && v[2]).unwrap();
        let d = find_layers_tt(&f);
        assert_eq!(d.layers, vec![layer(&[(1, false), (3, false)], false)]);
        assert_eq!(d.fictitious, vec![2, 4]);
        assert_eq!(reconstruct(&d).unwrap(), f);
    }

    #[test]
    fn reconstruct_seven_var_example() {
        let f = seven_var_example();
        assert_eq!(reconstruct(&find_layers_tt(&f)).unwrap(), f);
    }

    #[test]
    fn reconstruct_layerless_is_identity() {
        let p = poly(2, &[&[1], &[2]]);
        let d = find_layers_anf(&p);
        assert_eq!(reconstruct(&d).unwrap(), tt_from_anf(&p));
    }

    #[test]
    fn reconstruct_worked_decomposition() {
        let d = LayerDecomposition {
            n: 3,
            layers: vec![
                layer(&[(1, false)], false),
                layer(&[(2, true), (3, true)], true),
            ],
            core: AnfPolynomial::one(3),
            b: false,
            fictitious: vec![],
        };
        assert_eq!(reconstruct(&d).unwrap().to_bit_string(), "00000111");
    }

    #[test]
    fn reconstruct_rejects_broken_alternation() {
        let d = LayerDecomposition {
            n: 2,
            layers: vec![layer(&[(1, false)], false), layer(&[(2, false)], false)],
            core: AnfPolynomial::one(2),
            b: false,
            fictitious: vec![],
        };
        assert!(matches!(
            reconstruct(&d),
            Err(Error::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn reconstruct_rejects_broken_partition() {
        let d = LayerDecomposition {
            n: 2,
            layers: vec![layer(&[(1, false)], false)],
            core: AnfPolynomial::one(2),
            b: false,
            fictitious: vec![],
        };
        assert!(matches!(
            reconstruct(&d),
            Err(Error::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn reconstruct_accepts_noncanonical_trailing_singleton() {
        // Layers ({x1 -> 0}, 0), ({x2 -> 0}, 1) with core 1 is not canonical
        // (the canonical form of this function has one layer of size two) but
        // still evaluates: x1 (x2 + 1).
        let d = LayerDecomposition {
            n: 2,
            layers: vec![layer(&[(1, false)], false), layer(&[(2, false)], true)],
            core: AnfPolynomial::one(2),
            b: false,
            fictitious: vec![],
        };
        let f = reconstruct(&d).unwrap();
        assert_eq!(f, TruthTable::from_fn(2, |v| v[0] && !v[1]).unwrap());
        let canonical = find_layers_tt(&f);
        assert_eq!(canonical.layer_vector(), vec![2]);
    }

    #[test]
    fn negate_and_to_nand() {
        let and = find_layers_tt(&t("0001"));
        let nand = negate_decomposition(&and);
        assert_eq!(nand.layers, vec![layer(&[(1, false), (2, false)], true)]);
        assert!(nand.b);
        assert_eq!(reconstruct(&nand).unwrap(), t("0001").complement());
    }

    #[test]
    fn negate_layerless_toggles_core() {
        let d = find_layers_anf(&poly(2, &[&[1], &[2]]));
        let neg = negate_decomposition(&d);
        assert_eq!(neg.core, poly(2, &[&[1], &[2], &[]]));
        assert!(!neg.b);
        assert_eq!(reconstruct(&neg).unwrap(), t("0110").complement());
    }

    #[test]
    fn negate_two_layer_example_matches_reanalysis() {
        let p = poly(4, &[&[1, 2, 3, 4], &[1, 2, 3], &[2, 3, 4], &[2, 3], &[4]]);
        let f = tt_from_anf(&p);
        let neg = negate_decomposition(&find_layers_tt(&f));
        assert!(!neg.b);
        assert_eq!(reconstruct(&neg).unwrap(), f.complement());
        // This function has several essential variables, so the mechanical
        // flip is also the canonical decomposition of the complement.
        assert_eq!(neg, find_layers_tt(&f.complement()));
    }

    #[test]
    fn negate_is_an_involution() {
        for s in ["0001", "0111", "0110", "1101", "0000"] {
            let d = find_layers_tt(&t(s));
            assert_eq!(negate_decomposition(&negate_decomposition(&d)), d);
        }
    }

    #[test]
    fn cached_and_fresh_masks_agree() {
        let cache = MaskCache::new(6);
        let mut state = 7u64;
        for _ in 0..200 {
            let f = TruthTable::from_fn(6, |_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                state >> 23 & 1 == 1
            })
            .unwrap();
            assert_eq!(find_layers_tt(&f), find_layers_tt_cached(&f, &cache));
        }
    }

    #[test]
    fn outputs_alternate_and_partition_holds() {
        let mut state = 99u64;
        for _ in 0..500 {
            let f = TruthTable::from_fn(5, |_| {
                state = state.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
                state >> 17 & 1 == 1
            })
            .unwrap();
            let d = find_layers_tt(&f);
            d.validate().unwrap();
            assert_eq!(reconstruct(&d).unwrap(), f);
        }
    }
}
