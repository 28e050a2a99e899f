//! Disjunctive normal forms of nested canalizing functions, read directly
//! off the layer decomposition.
//!
//! Write `M_i` for the conjunction that holds when every variable of layer
//! `i` avoids its canalizing input, and `!M_i` for the disjunction that holds
//! when some variable of layer `i` takes it. The function is 1 exactly when
//! the outermost firing layer has canalized output 1, or no layer fires and
//! the residual constant is 1. Terms for inner layers do not need to mention
//! the output-1 layers above them (any such firing is covered by that
//! layer's own term), which yields the two-level form
//!
//! ```text
//! f = OR over layers d with output 1 of ( !M_d AND (AND of M_j for
//!     output-0 layers j < d) )                            [plus]
//!     AND of M_j over all output-0 layers, when b + r is odd
//! ```
//!
//! The trailing term is the residual case; `b + r` odd is exactly when the
//! value on the no-layer-fires rows is 1. For `b = 0` every term carries
//! `M_1`; for `b = 1` the first term is the bare disjunction `!M_1`.
//! Distributing each `!M_d` over its conjunction flattens the expression
//! into clauses of literals.

use std::fmt;

use crate::error::{Error, Result};
use crate::layers::LayerDecomposition;
use crate::masks::ColumnMasks;
use crate::truth_table::{tail_mask, word_count, TruthTable};

/// A literal: a variable, possibly negated.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "!x{}", self.var)
        }
    }
}

/// A disjunction of conjunctions of literals.
///
/// No clause mentions a variable twice. An empty clause list is the constant
/// 0; a single empty clause is the constant 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DnfExpression {
    pub n: usize,
    pub clauses: Vec<Vec<Literal>>,
}

impl DnfExpression {
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().any(|clause| {
            clause
                .iter()
                .all(|lit| assignment[lit.var - 1] == lit.positive)
        })
    }

    /// The truth table of the expression on `n` variables.
    pub fn to_table(&self) -> TruthTable {
        let words = word_count(self.n);
        let masks = ColumnMasks::build(self.n);
        let mut result = vec![0u64; words];
        for clause in &self.clauses {
            let mut conj = vec![tail_mask(self.n); words];
            if words > 1 {
                for w in conj.iter_mut().take(words - 1) {
                    *w = !0;
                }
            }
            for lit in clause {
                for (c, &m) in conj.iter_mut().zip(masks.col(lit.var)) {
                    *c &= if lit.positive { m } else { !m };
                }
            }
            for (r, c) in result.iter_mut().zip(&conj) {
                *r |= c;
            }
        }
        *result.last_mut().unwrap() &= tail_mask(self.n);
        TruthTable::from_words(self.n, result)
    }

    /// Renders clauses joined by `" | "` and literals by `" & "`, with `!`
    /// for negation.
    pub fn render(&self) -> String {
        self.clauses
            .iter()
            .map(|clause| {
                clause
                    .iter()
                    .map(|lit| lit.to_string())
                    .collect::<Vec<_>>()
                    .join(" & ")
            })
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

impl fmt::Display for DnfExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Builds the flat DNF of a nested canalizing function from its layer
/// decomposition. Rejects decompositions that are not nested canalizing
/// (depth below the variable count or a non-constant core).
///
/// A factor `(x + a)` of `M_i` contributes the literal `x != a` to the
/// conjunction form of `M_i` and the literal `x = a` to the disjunction
/// `!M_i`. Clause counts are fully determined by the layer sizes: each
/// output-1 layer `d` contributes `k_d` clauses, the residual term one.
pub fn dnf_from_layers(d: &LayerDecomposition) -> Result<DnfExpression> {
    d.validate()?;
    if !d.is_nested_canalizing() || !d.core.is_one() {
        return Err(Error::NotNestedCanalizing);
    }
    let r = d.layers.len();
    let predicted: usize = d
        .layers
        .iter()
        .filter(|l| l.output)
        .map(|l| l.size())
        .sum::<usize>()
        + usize::from((d.b as usize + r) % 2 == 1);

    let mut clauses: Vec<Vec<Literal>> = Vec::with_capacity(predicted);
    for (i, layer) in d.layers.iter().enumerate() {
        if !layer.output {
            continue;
        }
        // M_j literals of the output-0 layers outside this one.
        let base: Vec<Literal> = d.layers[..i]
            .iter()
            .filter(|l| !l.output)
            .flat_map(|l| l.entries.iter().map(|&(var, a)| Literal {
                var,
                positive: !a,
            }))
            .collect();
        for &(var, a) in &layer.entries {
            let mut clause = base.clone();
            clause.push(Literal { var, positive: a });
            clauses.push(clause);
        }
    }
    if (d.b as usize + r) % 2 == 1 {
        // No layer fires and the residual constant is 1.
        let clause: Vec<Literal> = d
            .layers
            .iter()
            .filter(|l| !l.output)
            .flat_map(|l| l.entries.iter().map(|&(var, a)| Literal {
                var,
                positive: !a,
            }))
            .collect();
        clauses.push(clause);
    }
    assert_eq!(clauses.len(), predicted, "clause count bookkeeping is off");
    Ok(DnfExpression { n: d.n, clauses })
}

/// Whether the expression evaluates identically to `f` on all rows. Returns
/// false when the expression mentions variables outside `1..=f.var_count()`.
pub fn verify_dnf(e: &DnfExpression, f: &TruthTable) -> bool {
    let n = f.var_count();
    if e
        .clauses
        .iter()
        .flatten()
        .any(|lit| lit.var == 0 || lit.var > n)
    {
        return false;
    }
    let widened = DnfExpression {
        n,
        clauses: e.clauses.clone(),
    };
    widened.to_table() == *f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::{tt_from_anf, AnfPolynomial};
    use crate::layers::{find_layers_tt, negate_decomposition, Layer};
    use crate::truth_table::TruthTable;

    fn t(s: &str) -> TruthTable {
        let n = s.len().trailing_zeros() as usize;
        TruthTable::from_bits(n, s.chars().map(|c| c == '1')).unwrap()
    }

    fn poly(n: usize, monos: &[&[usize]]) -> AnfPolynomial {
        AnfPolynomial::from_monomials(n, monos.iter().copied()).unwrap()
    }

    fn clause_strings(e: &DnfExpression) -> Vec<String> {
        e.clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(" & ")
            })
            .collect()
    }

    /// First worked example: M1 = (x1+1)(x3+1), M2 = x2 (x4+1), b = 0.
    fn example_one() -> TruthTable {
        tt_from_anf(&poly(
            4,
            &[
                &[1, 2, 3, 4],
                &[1, 2, 3],
                &[1, 2, 4],
                &[2, 3, 4],
                &[1, 2],
                &[1, 3],
                &[2, 3],
                &[2, 4],
                &[1],
                &[2],
                &[3],
                &[],
            ],
        ))
    }

    /// Second worked example: M1 = x4+1, M2 = (x1+1) x2 x3, b = 1.
    fn example_two() -> TruthTable {
        tt_from_anf(&poly(
            4,
            &[&[1, 2, 3, 4], &[1, 2, 3], &[2, 3, 4], &[2, 3], &[4]],
        ))
    }

    #[test]
    fn dnf_of_example_one() {
        let f = example_one();
        let e = dnf_from_layers(&find_layers_tt(&f)).unwrap();
        assert_eq!(
            clause_strings(&e),
            vec!["!x1 & !x3 & !x2", "!x1 & !x3 & x4"]
        );
        assert!(verify_dnf(&e, &f));
    }

    #[test]
    fn dnf_of_example_two() {
        let f = example_two();
        let e = dnf_from_layers(&find_layers_tt(&f)).unwrap();
        assert_eq!(clause_strings(&e), vec!["x4", "!x1 & x2 & x3"]);
        assert_eq!(e.render(), "x4 | !x1 & x2 & x3");
        assert!(verify_dnf(&e, &f));
    }

    #[test]
    fn dnf_of_and_is_single_clause() {
        let e = dnf_from_layers(&find_layers_tt(&t("0001"))).unwrap();
        assert_eq!(clause_strings(&e), vec!["x1 & x2"]);
    }

    #[test]
    fn dnf_rejects_non_ncf() {
        let d = find_layers_tt(&t("0110"));
        assert_eq!(
            dnf_from_layers(&d).unwrap_err(),
            Error::NotNestedCanalizing
        );
        // Canalizing but not nested canalizing: majority-like residual.
        let d = find_layers_tt(&t("0000000100010111"));
        assert!(dnf_from_layers(&d).is_err());
    }

    #[test]
    fn verify_dnf_edge_cases() {
        let empty = DnfExpression { n: 2, clauses: vec![] };
        assert!(verify_dnf(&empty, &t("0000")));

        let x1 = DnfExpression {
            n: 2,
            clauses: vec![vec![Literal {
                var: 1,
                positive: true,
            }]],
        };
        assert!(!verify_dnf(&x1, &t("0110")));

        let true_dnf = DnfExpression {
            n: 2,
            clauses: vec![vec![]],
        };
        assert!(verify_dnf(&true_dnf, &t("1111")));
    }

    #[test]
    fn clause_count_matches_layer_sizes() {
        // Three layers, b = 0: output-1 layer of size 2 plus the residual
        // term (b + r odd) gives 3 clauses.
        let d = LayerDecomposition {
            n: 4,
            layers: vec![
                Layer {
                    entries: vec![(1, false)],
                    output: false,
                },
                Layer {
                    entries: vec![(2, true), (3, true)],
                    output: true,
                },
                Layer {
                    entries: vec![(4, false)],
                    output: false,
                },
            ],
            core: AnfPolynomial::one(4),
            b: false,
            fictitious: vec![],
        };
        let f = crate::layers::reconstruct(&d).unwrap();
        let canonical = find_layers_tt(&f);
        let e = dnf_from_layers(&canonical).unwrap();
        let expected: usize = canonical
            .layers
            .iter()
            .filter(|l| l.output)
            .map(|l| l.size())
            .sum::<usize>()
            + usize::from((canonical.b as usize + canonical.layers.len()) % 2 == 1);
        assert_eq!(e.clauses.len(), expected);
        assert!(verify_dnf(&e, &f));
    }

    #[test]
    fn negation_duality() {
        for f in [example_one(), example_two(), t("0001"), t("0111")] {
            let d = find_layers_tt(&f);
            let neg = negate_decomposition(&d);
            let e = dnf_from_layers(&neg).unwrap();
            assert!(verify_dnf(&e, &f.complement()));
        }
    }

    #[test]
    fn sound_on_all_three_variable_ncfs() {
        for bits in 0..1u32 << 8 {
            let f = TruthTable::from_bits(3, (0..8).map(|r| bits >> r & 1 == 1)).unwrap();
            let d = find_layers_tt(&f);
            if !d.is_nested_canalizing() {
                continue;
            }
            let e = dnf_from_layers(&d).unwrap();
            assert!(verify_dnf(&e, &f), "bits={bits}");
        }
    }
}
