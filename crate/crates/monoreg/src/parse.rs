//! Plain-text ideal files.
//!
//! Format, one item per line:
//!
//! ```text
//! # comment lines and trailing comments start with '#'
//! vars: x,y,z
//! x^2*y
//! z^3
//! ```
//!
//! The first non-empty, non-comment line declares the variables. Every
//! following non-empty line is one generator: a `*`-separated product of
//! `name` or `name^k` factors with `k ≥ 1`. The literal line `1` (the unit
//! monomial) is rejected — the unit ideal is outside the domain. A file with
//! no generator lines denotes the zero ideal.

use std::fmt;

use thiserror::Error;

use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, RingContext};

/// A parse failure with 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingVarsHeader,
    EmptyVarList,
    BadVarName(String),
    DuplicateVar(String),
    UnknownVar(String),
    BadExponent(String),
    UnitMonomial,
    EmptyFactor,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MissingVarsHeader => {
                write!(f, "expected a `vars:` header before any generators")
            }
            ParseErrorKind::EmptyVarList => write!(f, "the variable list is empty"),
            ParseErrorKind::BadVarName(n) => write!(f, "invalid variable name {n:?}"),
            ParseErrorKind::DuplicateVar(n) => write!(f, "duplicate variable {n:?}"),
            ParseErrorKind::UnknownVar(n) => write!(f, "unknown variable {n:?}"),
            ParseErrorKind::BadExponent(s) => {
                write!(f, "exponent must be a positive integer, got {s:?}")
            }
            ParseErrorKind::UnitMonomial => {
                write!(f, "the unit monomial 1 would generate the unit ideal")
            }
            ParseErrorKind::EmptyFactor => write!(f, "empty factor in monomial"),
        }
    }
}

fn err<T>(line: usize, column: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, column, kind })
}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses an ideal file. See the module docs for the grammar.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, ParseError> {
    let mut ctx: Option<RingContext> = None;
    let mut gens: Vec<Monomial> = Vec::new();

    for (line_idx, raw_line) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let body = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        if body.trim().is_empty() {
            continue;
        }

        match &ctx {
            None => {
                let trimmed = body.trim_start();
                let indent = body.len() - trimmed.len();
                let Some(list) = trimmed.strip_prefix("vars:") else {
                    return err(line_no, indent + 1, ParseErrorKind::MissingVarsHeader);
                };
                if list.trim().is_empty() {
                    return err(line_no, indent + 6, ParseErrorKind::EmptyVarList);
                }
                let mut names: Vec<String> = Vec::new();
                for piece in list.split(',') {
                    let name = piece.trim();
                    let col = indent + 6 + (piece.as_ptr() as usize - list.as_ptr() as usize);
                    if !valid_var_name(name) {
                        return err(line_no, col + 1, ParseErrorKind::BadVarName(name.to_string()));
                    }
                    if names.iter().any(|n| n == name) {
                        return err(line_no, col + 1, ParseErrorKind::DuplicateVar(name.to_string()));
                    }
                    names.push(name.to_string());
                }
                ctx = Some(RingContext::with_names(names));
            }
            Some(ring) => {
                gens.push(parse_monomial_line(body, line_no, ring)?);
            }
        }
    }

    let Some(ring) = ctx else {
        return err(1, 1, ParseErrorKind::MissingVarsHeader);
    };
    Ok(MonomialIdeal::new(ring, gens).expect("unit generators are rejected during parsing"))
}

fn parse_monomial_line(
    body: &str,
    line_no: usize,
    ring: &RingContext,
) -> Result<Monomial, ParseError> {
    let trimmed = body.trim();
    let start_col = body.len() - body.trim_start().len() + 1;
    if trimmed == "1" {
        return err(line_no, start_col, ParseErrorKind::UnitMonomial);
    }
    let mut exps = vec![0u32; ring.num_vars()];
    // Track columns by walking the original slice.
    let mut col = start_col;
    for factor in trimmed.split('*') {
        let factor_col = col;
        col += factor.len() + 1; // +1 for the '*'
        let f = factor.trim();
        if f.is_empty() {
            return err(line_no, factor_col, ParseErrorKind::EmptyFactor);
        }
        let (name, exp) = match f.split_once('^') {
            None => (f, 1u32),
            Some((name, exp_str)) => {
                let exp: u32 = match exp_str.trim().parse() {
                    Ok(e) if e >= 1 => e,
                    _ => {
                        return err(
                            line_no,
                            factor_col,
                            ParseErrorKind::BadExponent(exp_str.trim().to_string()),
                        );
                    }
                };
                (name.trim(), exp)
            }
        };
        let Some(index) = ring.var_index(name) else {
            return err(line_no, factor_col, ParseErrorKind::UnknownVar(name.to_string()));
        };
        exps[index] += exp;
    }
    Ok(Monomial::new(exps))
}

/// Renders an ideal in the file format: the `vars:` header then one minimal
/// generator per line. [`parse_ideal`] of the output reproduces the ideal
/// exactly, including the ring context.
pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    let ctx = ideal.context();
    let mut out = format!("vars: {}\n", ctx.var_names().join(","));
    for g in ideal.generators() {
        out.push_str(&g.render(ctx));
        out.push('\n');
    }
    out
}
