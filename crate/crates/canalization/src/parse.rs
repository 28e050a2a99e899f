//! Text formats for Boolean functions.
//!
//! Three formats are supported:
//!
//! * `anf` — sums of monomials over the two-element field:
//!   `poly := term ('+' term)*`, `term := '0' | '1' | var ('*' var)*`,
//!   `var := 'x' digits` (1-based). Whitespace is ignored, `-` is a synonym
//!   of `+`, duplicate monomials cancel in pairs, and repeated variables in
//!   a term reduce (squares are square-free). Juxtaposition (`x1x2`) is a
//!   syntax error; the `*` is required.
//! * `logic` — expressions over `|`, `&`, `!` (or `~`), parentheses and the
//!   constants `0`/`1`, with the usual precedence `!` over `&` over `|`.
//! * `table` — the output column as a string of `2^n` characters `0`/`1`,
//!   row 0 leftmost.
//!
//! The variable count is inferred as the largest index mentioned unless an
//! explicit count is supplied (to keep trailing fictitious variables).
//! Function files hold one function per line, optionally prefixed with
//! `name:`.

use std::str::FromStr;

use crate::anf::AnfPolynomial;
use crate::error::{Error, Result};
use crate::masks::ColumnMasks;
use crate::truth_table::{tail_mask, word_count, TruthTable, MAX_VARS};

/// The three accepted textual formats.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SourceFormat {
    Anf,
    Logic,
    Table,
}

impl FromStr for SourceFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "anf" => Ok(SourceFormat::Anf),
            "logic" => Ok(SourceFormat::Logic),
            "table" => Ok(SourceFormat::Table),
            other => Err(Error::parse(0, format!("unknown format `{other}`"))),
        }
    }
}

/// One textual function: an optional name, the format it is written in, and
/// the body.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FunctionSource {
    pub name: Option<String>,
    pub format: SourceFormat,
    pub body: String,
}

/// A parsed function in whichever representation its format produces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParsedFunction {
    Table(TruthTable),
    Polynomial(AnfPolynomial),
}

impl ParsedFunction {
    pub fn var_count(&self) -> usize {
        match self {
            ParsedFunction::Table(t) => t.var_count(),
            ParsedFunction::Polynomial(p) => p.var_count(),
        }
    }

    pub fn into_table(self) -> TruthTable {
        match self {
            ParsedFunction::Table(t) => t,
            ParsedFunction::Polynomial(p) => p.to_table(),
        }
    }
}

/// Parses one function body in the given format.
pub fn parse_source(source: &FunctionSource, vars: Option<usize>) -> Result<ParsedFunction> {
    match source.format {
        SourceFormat::Anf => parse_anf(&source.body, vars).map(ParsedFunction::Polynomial),
        SourceFormat::Logic => parse_logic(&source.body, vars).map(ParsedFunction::Table),
        SourceFormat::Table => parse_table(&source.body).map(ParsedFunction::Table),
    }
}

/// Splits a function file into sources: one function per non-blank line, with
/// an optional `name:` prefix before the first colon.
pub fn split_function_lines(text: &str, format: SourceFormat) -> Vec<FunctionSource> {
    text.lines()
        .filter(|line| !line.trim().is_empty())
        .map(|line| match line.split_once(':') {
            Some((name, body)) => FunctionSource {
                name: Some(name.trim().to_string()),
                format,
                body: body.trim().to_string(),
            },
            None => FunctionSource {
                name: None,
                format,
                body: line.trim().to_string(),
            },
        })
        .collect()
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// Parses `x<digits>` with the `x` already peeked.
    fn variable(&mut self) -> Result<usize> {
        let start = self.pos;
        self.pos += 1; // the 'x'
        let digits_start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(Error::parse(start, "expected digits after `x`"));
        }
        let text = std::str::from_utf8(&self.bytes[digits_start..self.pos]).unwrap();
        let index: usize = text
            .parse()
            .map_err(|_| Error::parse(digits_start, "variable index too large"))?;
        if index == 0 {
            return Err(Error::parse(start, "variable indices are 1-based"));
        }
        if index > MAX_VARS {
            return Err(Error::parse(
                start,
                format!("variable index {index} exceeds the supported maximum {MAX_VARS}"),
            ));
        }
        Ok(index)
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(Error::parse(
                self.pos,
                format!("unexpected `{}`", c as char),
            )),
        }
    }
}

fn resolve_vars(max_seen: usize, vars: Option<usize>) -> Result<usize> {
    match vars {
        None => Ok(max_seen),
        Some(n) if n >= max_seen && n <= MAX_VARS => Ok(n),
        Some(n) if n > MAX_VARS => Err(Error::VarCount { n, max: MAX_VARS }),
        Some(n) => Err(Error::parse(
            0,
            format!("explicit variable count {n} is below the largest index {max_seen}"),
        )),
    }
}

/// Parses a polynomial in `anf` format.
pub fn parse_anf(text: &str, vars: Option<usize>) -> Result<AnfPolynomial> {
    let mut s = Scanner::new(text);
    let mut terms: Vec<Option<u32>> = Vec::new(); // None = the zero term
    let mut max_seen = 0usize;
    loop {
        match s.peek() {
            Some(b'1') => {
                s.bump();
                terms.push(Some(0));
            }
            Some(b'0') => {
                s.bump();
                terms.push(None);
            }
            Some(b'x') => {
                let mut mask = 0u32;
                let v = s.variable()?;
                max_seen = max_seen.max(v);
                mask |= 1 << (v - 1);
                while s.eat(b'*') {
                    if s.peek() != Some(b'x') {
                        return Err(Error::parse(s.pos, "expected a variable after `*`"));
                    }
                    let v = s.variable()?;
                    max_seen = max_seen.max(v);
                    mask |= 1 << (v - 1);
                }
                terms.push(Some(mask));
            }
            Some(c) => {
                return Err(Error::parse(
                    s.pos,
                    format!("expected a term, found `{}`", c as char),
                ))
            }
            None => return Err(Error::parse(s.pos, "expected a term")),
        }
        match s.peek() {
            Some(b'+') | Some(b'-') => {
                s.bump(); // subtraction equals addition here
            }
            _ => break,
        }
    }
    s.expect_end()?;
    let n = resolve_vars(max_seen, vars)?;
    let masks: Vec<u32> = terms.into_iter().flatten().collect();
    Ok(AnfPolynomial::from_masks(n, masks))
}

enum LogicNode {
    Const(bool),
    Var(usize),
    Not(Box<LogicNode>),
    And(Box<LogicNode>, Box<LogicNode>),
    Or(Box<LogicNode>, Box<LogicNode>),
}

/// Parses a `logic` expression and evaluates it into a truth table.
pub fn parse_logic(text: &str, vars: Option<usize>) -> Result<TruthTable> {
    let mut s = Scanner::new(text);
    let mut max_seen = 0usize;
    let node = logic_or(&mut s, &mut max_seen)?;
    s.expect_end()?;
    let n = resolve_vars(max_seen, vars)?;
    // Evaluate over packed rows: every subexpression becomes a bit vector.
    let masks = ColumnMasks::build(n);
    let words = eval_logic(&node, &masks, word_count(n), tail_mask(n));
    Ok(TruthTable::from_words(n, words))
}

fn logic_or(s: &mut Scanner, max_seen: &mut usize) -> Result<LogicNode> {
    let mut node = logic_and(s, max_seen)?;
    while s.eat(b'|') {
        let rhs = logic_and(s, max_seen)?;
        node = LogicNode::Or(Box::new(node), Box::new(rhs));
    }
    Ok(node)
}

fn logic_and(s: &mut Scanner, max_seen: &mut usize) -> Result<LogicNode> {
    let mut node = logic_not(s, max_seen)?;
    while s.eat(b'&') {
        let rhs = logic_not(s, max_seen)?;
        node = LogicNode::And(Box::new(node), Box::new(rhs));
    }
    Ok(node)
}

fn logic_not(s: &mut Scanner, max_seen: &mut usize) -> Result<LogicNode> {
    if s.eat(b'!') || s.eat(b'~') {
        Ok(LogicNode::Not(Box::new(logic_not(s, max_seen)?)))
    } else {
        logic_atom(s, max_seen)
    }
}

fn logic_atom(s: &mut Scanner, max_seen: &mut usize) -> Result<LogicNode> {
    match s.peek() {
        Some(b'0') => {
            s.bump();
            Ok(LogicNode::Const(false))
        }
        Some(b'1') => {
            s.bump();
            Ok(LogicNode::Const(true))
        }
        Some(b'x') => {
            let v = s.variable()?;
            *max_seen = (*max_seen).max(v);
            Ok(LogicNode::Var(v))
        }
        Some(b'(') => {
            s.bump();
            let node = logic_or(s, max_seen)?;
            if !s.eat(b')') {
                return Err(Error::parse(s.pos, "expected `)`"));
            }
            Ok(node)
        }
        Some(c) => Err(Error::parse(
            s.pos,
            format!("expected a variable, constant or `(`, found `{}`", c as char),
        )),
        None => Err(Error::parse(s.pos, "unexpected end of expression")),
    }
}

fn eval_logic(node: &LogicNode, masks: &ColumnMasks, words: usize, tail: u64) -> Vec<u64> {
    match node {
        LogicNode::Const(false) => vec![0; words],
        LogicNode::Const(true) => {
            let mut v = vec![!0u64; words];
            *v.last_mut().unwrap() = tail;
            v
        }
        LogicNode::Var(i) => masks.col(*i).to_vec(),
        LogicNode::Not(inner) => {
            let mut v = eval_logic(inner, masks, words, tail);
            for w in v.iter_mut() {
                *w = !*w;
            }
            *v.last_mut().unwrap() &= tail;
            v
        }
        LogicNode::And(a, b) => {
            let mut v = eval_logic(a, masks, words, tail);
            for (w, r) in v.iter_mut().zip(eval_logic(b, masks, words, tail)) {
                *w &= r;
            }
            v
        }
        LogicNode::Or(a, b) => {
            let mut v = eval_logic(a, masks, words, tail);
            for (w, r) in v.iter_mut().zip(eval_logic(b, masks, words, tail)) {
                *w |= r;
            }
            v
        }
    }
}

/// Parses a `table` body: a binary string of length `2^n` for some `n >= 1`.
pub fn parse_table(text: &str) -> Result<TruthTable> {
    let trimmed = text.trim();
    let len = trimmed.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::parse(
            0,
            format!("table length {len} is not a power of two (>= 2)"),
        ));
    }
    let n = len.trailing_zeros() as usize;
    if n > MAX_VARS {
        return Err(Error::VarCount { n, max: MAX_VARS });
    }
    let mut bits = Vec::with_capacity(len);
    for (i, c) in trimmed.char_indices() {
        match c {
            '0' => bits.push(false),
            '1' => bits.push(true),
            other => {
                return Err(Error::parse(
                    i,
                    format!("expected `0` or `1`, found `{other}`"),
                ))
            }
        }
    }
    TruthTable::from_bits(n, bits)
}
