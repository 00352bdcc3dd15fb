//! Plain-text code files.
//!
//! ```text
//! # optional comments start with '#'
//! 3 2 6
//! 2 1 3 2 1 3
//! ```
//!
//! The first non-comment line holds `n k N`; the remaining tokens are the
//! `N` transition elements, 1-indexed.

use circuit_core::{CircuitCode, TransitionSequence};

use crate::error::CliError;

const ELEMENTS_PER_LINE: usize = 30;

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(before, _)| before)
}

fn parse_number(token: &str, line: usize, what: &str) -> Result<u64, CliError> {
    token.parse::<u64>().map_err(|_| CliError::Parse {
        line,
        message: format!("expected {what}, found {token:?}"),
    })
}

/// Parses a code file. Closure and simplicity are checked; the claimed
/// spread is not.
pub fn parse_code_file(text: &str) -> Result<CircuitCode, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.trim().is_empty());

    let (header_line, header) = lines.next().ok_or(CliError::Parse {
        line: 1,
        message: "missing header line".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(CliError::Parse {
            line: header_line,
            message: format!("header must be `n k N`, found {} fields", fields.len()),
        });
    }
    let n = parse_number(fields[0], header_line, "dimension")? as usize;
    let k = parse_number(fields[1], header_line, "spread")? as usize;
    let len = parse_number(fields[2], header_line, "length")? as usize;
    if n == 0 || n > circuit_core::MAX_DIMENSION {
        return Err(CliError::Parse {
            line: header_line,
            message: format!(
                "dimension {n} is outside 1..={}",
                circuit_core::MAX_DIMENSION
            ),
        });
    }

    let mut elements = Vec::with_capacity(len);
    for (line, body) in lines {
        for token in body.split_whitespace() {
            let e = parse_number(token, line, "transition element")?;
            if e == 0 {
                return Err(CliError::Parse {
                    line,
                    message: "transition elements are 1-indexed".into(),
                });
            }
            if e > n as u64 {
                return Err(CliError::ElementOutOfRange {
                    element: e,
                    dimension: n,
                });
            }
            elements.push(e as u8);
        }
    }
    if elements.len() != len {
        return Err(CliError::LengthMismatch {
            expected: len,
            found: elements.len(),
        });
    }
    Ok(CircuitCode::new(n, k, TransitionSequence::new(elements)?)?)
}

/// Normalized file text: header line, then the body in rows of 30.
pub fn serialize_code(code: &CircuitCode) -> String {
    let mut out = format!("{} {} {}\n", code.dimension(), code.spread(), code.len());
    for row in code.sequence().elements().chunks(ELEMENTS_PER_LINE) {
        let row: Vec<String> = row.iter().map(u8::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
