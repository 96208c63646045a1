//! Text formats.
//!
//! `.hs` — syndrome former:
//!
//! ```text
//! # a c L_h
//! 3 1 6
//! 0 1
//! 0 3
//! 0 5
//! ```
//!
//! `.hx` — polynomial matrix, one line per row of `H(x)`; each entry is a
//! comma-separated ascending exponent list or `-` for a null term:
//!
//! ```text
//! # c a
//! 2 3
//! 0 -   0,4
//! 1 0,2 -
//! ```
//!
//! Comments start with `#` and run to the end of the line; blank lines are
//! ignored. Serialization always emits LF line endings.

use std::fmt::Write as _;

use crate::error::{ParseError, Result};
use crate::matrix::{PolyMatrix, SyndromeFormer, WindowMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Hs,
    Hx,
}

/// A whitespace-delimited token with its 1-based position.
#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

/// Non-blank lines with comments removed, each split into tokens.
fn content_lines(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (i, ch) in body
            .char_indices()
            .chain(std::iter::once((body.len(), ' ')))
        {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &body[s..i],
                        line: n + 1,
                        column: s + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push(tokens);
        }
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn parse_u32(text: &str, line: usize, column: usize) -> Result<u32, ParseError> {
    text.parse::<u32>().map_err(|_| {
        syntax(
            line,
            column,
            format!("expected a non-negative integer, found `{text}`"),
        )
    })
}

/// Parses a strictly ascending list; `values` yields `(text, column)`.
fn ascending<'a>(
    values: impl Iterator<Item = (&'a str, usize)>,
    line: usize,
) -> Result<Vec<u32>, ParseError> {
    let mut out: Vec<u32> = Vec::new();
    for (text, column) in values {
        let v = parse_u32(text, line, column)?;
        if let Some(&prev) = out.last() {
            if v == prev || out.contains(&v) {
                return Err(ParseError::DuplicateIndex {
                    line,
                    column,
                    value: v,
                });
            }
            if v < prev {
                return Err(syntax(
                    line,
                    column,
                    format!("{v} follows {prev}; indices must ascend"),
                ));
            }
        }
        out.push(v);
    }
    Ok(out)
}

fn header(lines: &[Vec<Token<'_>>], arity: usize, what: &str) -> Result<Vec<u32>, ParseError> {
    let first = lines
        .first()
        .ok_or_else(|| syntax(1, 1, format!("missing `{what}` header")))?;
    if first.len() != arity {
        let t = first[0];
        return Err(syntax(t.line, t.column, format!("header must be `{what}`")));
    }
    first
        .iter()
        .map(|t| parse_u32(t.text, t.line, t.column))
        .collect()
}

/// Guesses the format from the header arity.
pub fn detect_format(text: &str) -> Option<Format> {
    match content_lines(text).first().map(Vec::len) {
        Some(3) => Some(Format::Hs),
        Some(2) => Some(Format::Hx),
        _ => None,
    }
}

pub fn parse_hs(text: &str) -> Result<SyndromeFormer> {
    let lines = content_lines(text);
    let h = header(&lines, 3, "a c L_h")?;
    let (a, c, l_h) = (h[0], h[1], h[2]);
    let body = &lines[1..];
    if body.len() != a as usize {
        return Err(ParseError::InconsistentDimensions(format!(
            "header declares a={a} but {} support lines follow",
            body.len()
        ))
        .into());
    }
    let mut rows = Vec::with_capacity(body.len());
    for tokens in body {
        let line = tokens[0].line;
        let row = ascending(tokens.iter().map(|t| (t.text, t.column)), line)?;
        if let Some(&last) = row.last() {
            if last >= l_h {
                return Err(ParseError::InconsistentDimensions(format!(
                    "line {line}: index {last} is outside [0, {l_h})"
                ))
                .into());
            }
        }
        rows.push(row);
    }
    SyndromeFormer::new(c, l_h, rows)
}

pub fn parse_hx(text: &str) -> Result<PolyMatrix> {
    let lines = content_lines(text);
    let h = header(&lines, 2, "c a")?;
    let (c, a) = (h[0], h[1]);
    let body = &lines[1..];
    if body.len() != c as usize {
        return Err(ParseError::InconsistentDimensions(format!(
            "header declares c={c} but {} rows follow",
            body.len()
        ))
        .into());
    }
    let mut entries = Vec::with_capacity(body.len());
    for tokens in body {
        let line = tokens[0].line;
        if tokens.len() != a as usize {
            return Err(ParseError::InconsistentDimensions(format!(
                "line {line}: {} entries, header declares a={a}",
                tokens.len()
            ))
            .into());
        }
        let mut row = Vec::with_capacity(tokens.len());
        for t in tokens {
            if t.text == "-" {
                row.push(Vec::new());
                continue;
            }
            let mut offset = 0;
            let parts = t.text.split(',').map(|p| {
                let col = t.column + offset;
                offset += p.len() + 1;
                (p, col)
            });
            row.push(ascending(parts, line)?);
        }
        entries.push(row);
    }
    PolyMatrix::new(entries)
}

pub fn serialize_hs(hs: &SyndromeFormer) -> String {
    let mut s = format!("{} {} {}\n", hs.a(), hs.c(), hs.l_h());
    for row in hs.rows() {
        s.push_str(&join(row, " "));
        s.push('\n');
    }
    s
}

pub fn serialize_hx(p: &PolyMatrix) -> String {
    let mut s = format!("{} {}\n", p.c(), p.a());
    for row in p.entries() {
        let cells: Vec<String> = row
            .iter()
            .map(|e| {
                if e.is_empty() {
                    "-".to_string()
                } else {
                    join(e, ",")
                }
            })
            .collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

fn join(values: &[u32], sep: &str) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

/// MacKay alist export (columns are variables, rows are checks; indices
/// are 1-based and short lists are zero-padded to the maximum weight).
pub fn to_alist(w: &WindowMatrix) -> String {
    let cols = w.columns();
    let rows = w.rows();
    let max_col = cols.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", cols.len(), rows.len());
    let _ = writeln!(s, "{max_col} {max_row}");
    let weights = |lists: &[Vec<u32>]| {
        join(
            &lists.iter().map(|l| l.len() as u32).collect::<Vec<_>>(),
            " ",
        )
    };
    let _ = writeln!(s, "{}", weights(cols));
    let _ = writeln!(s, "{}", weights(&rows));
    let padded = |list: &[u32], width: usize| {
        let mut v: Vec<u32> = list.iter().map(|x| x + 1).collect();
        v.resize(width, 0);
        join(&v, " ")
    };
    for col in cols {
        let _ = writeln!(s, "{}", padded(col, max_col));
    }
    for row in &rows {
        let _ = writeln!(s, "{}", padded(row, max_row));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn parse_hs_with_comments() {
        let hs = parse_hs("# prop1\n2 1 4\n0 1 # row 0\n\n0 3\n").unwrap();
        assert_eq!(hs.rows(), &[vec![0, 1], vec![0, 3]]);
        assert_eq!(serialize_hs(&hs), "2 1 4\n0 1\n0 3\n");
    }

    #[test]
    fn parse_hs_row_count_mismatch() {
        let err = parse_hs("3 1 6\n0 1\n0 3\n0 5\n0 2\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse(ParseError::InconsistentDimensions(_))
        ));
    }

    #[test]
    fn parse_hs_positions() {
        let err = parse_hs("2 1 4\n0 1\n0 x3\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse(ParseError::Syntax {
                line: 3,
                column: 3,
                message: "expected a non-negative integer, found `x3`".into()
            })
        );
        let err = parse_hs("2 1 4\n0 1\n0  3 3\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse(ParseError::DuplicateIndex {
                line: 3,
                column: 6,
                value: 3
            })
        );
    }

    #[test]
    fn parse_hx_duplicate_exponent() {
        let err = parse_hx("1 2\n0,0 1\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse(ParseError::DuplicateIndex {
                line: 2,
                column: 3,
                value: 0
            })
        );
    }

    #[test]
    fn parse_hx_null_terms() {
        let p = parse_hx("2 3\n0 - 0,4\n1 0,2 -\n").unwrap();
        assert_eq!(p.entry(0, 1), &[] as &[u32]);
        assert_eq!(p.entry(1, 1), &[0, 2]);
        assert_eq!(serialize_hx(&p), "2 3\n0 - 0,4\n1 0,2 -\n");
    }

    #[test]
    fn parse_hx_entry_count_mismatch() {
        let err = parse_hx("2 3\n0 - 0,4\n1 0,2\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse(ParseError::InconsistentDimensions(_))
        ));
    }

    #[test]
    fn detect() {
        assert_eq!(detect_format("# x\n3 1 6\n"), Some(Format::Hs));
        assert_eq!(detect_format("2 3\n"), Some(Format::Hx));
        assert_eq!(detect_format(""), None);
    }

    #[test]
    fn alist_of_toy_window() {
        let hs = SyndromeFormer::new(1, 3, vec![vec![0, 1], vec![0, 2]]).unwrap();
        let alist = to_alist(&hs.expand_window(3));
        let expected = "6 3\n2 4\n2 2 2 1 1 1\n2 3 4\n1 2\n1 3\n2 3\n2 0\n3 0\n3 0\n1 2 0 0\n1 3 4 0\n2 3 5 6\n";
        assert_eq!(alist, expected);
    }
}
