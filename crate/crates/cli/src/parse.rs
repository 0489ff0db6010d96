//! The ideal file format.
//!
//! ```text
//! ring: x0 x1 x2
//! char: 32749
//! ideal:
//! x0^2*x1 - x2^3
//! 3*x0*x1
//! ```
//!
//! Variable names match `[a-zA-Z][a-zA-Z0-9_]*`. Terms are
//! `c*v1^e1*v2^e2...` with optional coefficient and exponents, joined by
//! `+`/`-`; whitespace inside a polynomial is insignificant. Blank lines
//! are skipped. Every polynomial gets its own line.

use std::sync::Arc;

use segre_core::{FieldContext, FieldElement, Ideal, Monomial, Polynomial, PolynomialRing};

use crate::error::{CliError, ParseError};

/// A parsed-but-unresolved input file: the polynomial bodies stay as
/// text so the characteristic can be overridden before coefficients are
/// reduced.
#[derive(Debug, Clone)]
pub struct IdealFile {
    pub variables: Vec<String>,
    pub characteristic: u64,
    /// Polynomial source lines with their 1-based line numbers.
    pub polynomials: Vec<(usize, String)>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse(ParseError {
        line,
        column,
        message: message.into(),
    })
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits the file into its three sections.
pub fn parse_ideal_file(text: &str) -> Result<IdealFile, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (ln, ring_line) = lines
        .next()
        .ok_or_else(|| err(1, 1, "empty input, expected `ring:` line"))?;
    let Some(names) = ring_line.strip_prefix("ring:") else {
        return Err(err(ln, 1, "expected `ring: <name>...`"));
    };
    let variables: Vec<String> = names.split_whitespace().map(str::to_string).collect();
    if variables.is_empty() {
        return Err(err(ln, 1, "ring declares no variables"));
    }
    for v in &variables {
        if !valid_name(v) {
            return Err(err(ln, 1, format!("invalid variable name `{v}`")));
        }
    }

    let (ln, char_line) = lines
        .next()
        .ok_or_else(|| err(ln + 1, 1, "expected `char: <prime>` line"))?;
    let Some(char_text) = char_line.strip_prefix("char:") else {
        return Err(err(ln, 1, "expected `char: <prime>`"));
    };
    let characteristic: u64 = char_text
        .trim()
        .parse()
        .map_err(|_| err(ln, 1, format!("invalid characteristic `{}`", char_text.trim())))?;

    let (ln, ideal_line) = lines
        .next()
        .ok_or_else(|| err(ln + 1, 1, "expected `ideal:` line"))?;
    if ideal_line != "ideal:" {
        return Err(err(ln, 1, "expected `ideal:`"));
    }

    let polynomials: Vec<(usize, String)> =
        lines.map(|(n, l)| (n, l.to_string())).collect();
    if polynomials.is_empty() {
        return Err(err(ln, 1, "ideal has no generators"));
    }

    Ok(IdealFile {
        variables,
        characteristic,
        polynomials,
    })
}

/// Resolves a parsed file into a ring and an ideal, optionally overriding
/// the characteristic.
pub fn build_ideal(
    file: &IdealFile,
    char_override: Option<u64>,
) -> Result<(Arc<PolynomialRing>, Ideal), CliError> {
    let p = char_override.unwrap_or(file.characteristic);
    let field = FieldContext::new(p)
        .map_err(|e| CliError::Validation(format!("characteristic {p}: {e}")))?;
    let ring = PolynomialRing::new(file.variables.clone(), field)?;
    let mut generators = Vec::with_capacity(file.polynomials.len());
    for (line_no, text) in &file.polynomials {
        let poly = parse_polynomial(text, *line_no, &ring)?;
        if poly.is_zero() {
            return Err(CliError::Validation(format!(
                "line {line_no}: generator is the zero polynomial"
            )));
        }
        generators.push(poly);
    }
    Ok((Arc::clone(&ring), Ideal::new(&ring, generators)?))
}

/// Errors unless every generator is homogeneous, naming the offender.
pub fn require_homogeneous(file: &IdealFile, ideal: &Ideal) -> Result<(), CliError> {
    for ((line_no, text), g) in file.polynomials.iter().zip(ideal.generators()) {
        if !g.is_homogeneous() {
            return Err(CliError::Validation(format!(
                "line {line_no}: generator `{text}` is not homogeneous"
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Number(u64),
    Ident(String),
}

fn tokenize(text: &str, line_no: usize) -> Result<Vec<(usize, Token)>, CliError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                tokens.push((col, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((col, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((col, Token::Star));
                i += 1;
            }
            '^' => {
                tokens.push((col, Token::Caret));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let value: u64 = digits.parse().map_err(|_| {
                    err(line_no, start + 1, format!("number `{digits}` is too large"))
                })?;
                tokens.push((start + 1, Token::Number(value)));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                tokens.push((start + 1, Token::Ident(chars[start..i].iter().collect())));
            }
            other => {
                return Err(err(
                    line_no,
                    col,
                    format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    Ok(tokens)
}

/// Parses one polynomial line in the given ring.
pub fn parse_polynomial(
    text: &str,
    line_no: usize,
    ring: &Arc<PolynomialRing>,
) -> Result<Polynomial, CliError> {
    let tokens = tokenize(text, line_no)?;
    if tokens.is_empty() {
        return Err(err(line_no, 1, "empty polynomial"));
    }
    let field = *ring.field();
    let mut terms: Vec<(FieldElement, Monomial)> = Vec::new();
    let mut pos = 0usize;

    while pos < tokens.len() {
        // Sign (mandatory between terms, optional before the first).
        let mut negative = false;
        loop {
            match tokens.get(pos) {
                Some((_, Token::Plus)) => pos += 1,
                Some((_, Token::Minus)) => {
                    negative = !negative;
                    pos += 1;
                }
                _ => break,
            }
        }
        let (coeff, monomial) = parse_term(&tokens, &mut pos, text, line_no, ring)?;
        let signed = if negative { field.neg(coeff) } else { coeff };
        terms.push((signed, monomial));
        // Next token, if any, must start a new term with an explicit sign.
        if let Some((col, tok)) = tokens.get(pos) {
            if !matches!(tok, Token::Plus | Token::Minus) {
                return Err(err(
                    line_no,
                    *col,
                    format!("expected `+` or `-` before next term, found {tok:?}"),
                ));
            }
        }
    }

    Ok(Polynomial::from_term_list(ring, terms)?)
}

fn parse_term(
    tokens: &[(usize, Token)],
    pos: &mut usize,
    text: &str,
    line_no: usize,
    ring: &Arc<PolynomialRing>,
) -> Result<(FieldElement, Monomial), CliError> {
    let field = *ring.field();
    let Some((col, tok)) = tokens.get(*pos) else {
        return Err(err(line_no, text.len() + 1, "expected a term"));
    };
    let mut coeff = field.one();
    let mut exps = vec![0u32; ring.num_vars()];

    // Optional leading coefficient.
    if let Token::Number(n) = tok {
        coeff = field.element(*n);
        *pos += 1;
        // Either end of term or `*` followed by variables.
        if matches!(tokens.get(*pos), Some((_, Token::Star))) {
            *pos += 1;
            parse_factors(tokens, pos, line_no, ring, &mut exps)?;
        } else if matches!(tokens.get(*pos), Some((_, Token::Caret))) {
            return Err(err(line_no, *col, "exponent on a coefficient"));
        }
    } else {
        parse_factors(tokens, pos, line_no, ring, &mut exps)?;
    }

    let monomial = ring
        .monomial(&exps)
        .map_err(|e| err(line_no, *col, e.to_string()))?;
    Ok((coeff, monomial))
}

fn parse_factors(
    tokens: &[(usize, Token)],
    pos: &mut usize,
    line_no: usize,
    ring: &Arc<PolynomialRing>,
    exps: &mut [u32],
) -> Result<(), CliError> {
    loop {
        let Some((col, tok)) = tokens.get(*pos) else {
            return Err(err(line_no, 1, "expected a variable"));
        };
        let Token::Ident(name) = tok else {
            return Err(err(line_no, *col, format!("expected a variable, found {tok:?}")));
        };
        let var = ring
            .variables()
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| err(line_no, *col, format!("undeclared variable `{name}`")))?;
        *pos += 1;
        let mut exp = 1u64;
        if matches!(tokens.get(*pos), Some((_, Token::Caret))) {
            *pos += 1;
            match tokens.get(*pos) {
                Some((_, Token::Number(e))) => {
                    exp = *e;
                    *pos += 1;
                }
                Some((ecol, other)) => {
                    return Err(err(
                        line_no,
                        *ecol,
                        format!("expected an integer exponent, found {other:?}"),
                    ));
                }
                None => return Err(err(line_no, col + name.len(), "expected an exponent")),
            }
        }
        let new = exps[var] as u64 + exp;
        if new > (1 << 15) {
            return Err(err(
                line_no,
                *col,
                format!("exponent {new} exceeds the per-variable limit 2^15"),
            ));
        }
        exps[var] = new as u32;
        if matches!(tokens.get(*pos), Some((_, Token::Star))) {
            *pos += 1;
            continue;
        }
        return Ok(());
    }
}

/// Renders an ideal back into the file format.
pub fn render_ideal_file(variables: &[String], characteristic: u64, polys: &[Polynomial]) -> String {
    let mut out = String::new();
    out.push_str("ring:");
    for v in variables {
        out.push(' ');
        out.push_str(v);
    }
    out.push('\n');
    out.push_str(&format!("char: {characteristic}\n"));
    out.push_str("ideal:\n");
    for p in polys {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}
