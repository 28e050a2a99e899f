//! The structure-spec file format for `canalize enumerate`.
//!
//! One layer per non-blank line, outermost first:
//!
//! ```text
//! layer output=<0|1|?>: x<i>=<0|1|?>, x<j>=<0|1|?>, ...
//! ```
//!
//! `?` leaves a canalized output or canalizing input open. Every variable of
//! the function must appear in exactly one layer; the variable count is the
//! largest index mentioned.

use canalization::{SpecLayer, StructureSpec};

use crate::CliError;

fn bad(line_no: usize, message: impl Into<String>) -> CliError {
    CliError::usage(format!("spec line {}: {}", line_no, message.into()))
}

fn parse_tristate(text: &str, line_no: usize, what: &str) -> Result<Option<bool>, CliError> {
    match text {
        "0" => Ok(Some(false)),
        "1" => Ok(Some(true)),
        "?" => Ok(None),
        other => Err(bad(
            line_no,
            format!("{what} must be 0, 1 or ?, found `{other}`"),
        )),
    }
}

pub fn parse_structure_spec(text: &str) -> Result<StructureSpec, CliError> {
    let mut layers = Vec::new();
    let mut max_var = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let rest = line
            .strip_prefix("layer")
            .ok_or_else(|| bad(line_no, "expected the line to start with `layer`"))?
            .trim_start();
        let rest = rest
            .strip_prefix("output=")
            .ok_or_else(|| bad(line_no, "expected `output=<0|1|?>`"))?;
        let (output_text, members_text) = rest
            .split_once(':')
            .ok_or_else(|| bad(line_no, "expected `:` after the output"))?;
        let output = parse_tristate(output_text.trim(), line_no, "output")?;
        let mut members = Vec::new();
        for piece in members_text.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                return Err(bad(line_no, "empty member entry"));
            }
            let (var_text, input_text) = piece
                .split_once('=')
                .ok_or_else(|| bad(line_no, format!("expected `x<i>=<0|1|?>`, found `{piece}`")))?;
            let var: usize = var_text
                .trim()
                .strip_prefix('x')
                .and_then(|digits| digits.parse().ok())
                .ok_or_else(|| {
                    bad(line_no, format!("expected a variable like x3, found `{var_text}`"))
                })?;
            if var == 0 {
                return Err(bad(line_no, "variable indices are 1-based"));
            }
            let input = parse_tristate(input_text.trim(), line_no, "input")?;
            max_var = max_var.max(var);
            members.push((var, input));
        }
        layers.push(SpecLayer { members, output });
    }
    if layers.is_empty() {
        return Err(CliError::usage("spec file contains no layers"));
    }
    Ok(StructureSpec { n: max_var, layers })
}
