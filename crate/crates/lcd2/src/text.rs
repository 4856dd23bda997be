//! Plain-text formats for matrices and column-multiplicity tuples.
//!
//! Matrices are written row by row, rows separated by `;` and entries by
//! `,`, e.g. `1,0,1;0,1,w`. Tuples are `a1,a2,a3,a4,a5`, optionally prefixed
//! by a zero-column segment: `a0=1;1,0,2,1,1`.

use lcd2_core::{ATuple, Matrix, F4};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("row {row}, entry {col}: `{text}` is not one of 0, 1, w, w2")]
    Element { row: usize, col: usize, text: String },
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("expected 5 multiplicities, found {0}")]
    TupleArity(usize),
    #[error("`{0}` is not a nonnegative integer")]
    Count(String),
    #[error("expected `a0=<count>` before `;`, found `{0}`")]
    ZeroPrefix(String),
}

pub fn parse_matrix(s: &str) -> Result<Matrix, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut rows: Vec<Vec<F4>> = Vec::new();
    for (i, row) in s.split(';').enumerate() {
        let entries = row
            .split(',')
            .enumerate()
            .map(|(j, t)| {
                t.parse::<F4>().map_err(|_| ParseError::Element {
                    row: i + 1,
                    col: j + 1,
                    text: t.trim().to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(first) = rows.first() {
            if first.len() != entries.len() {
                return Err(ParseError::Ragged {
                    row: i + 1,
                    expected: first.len(),
                    found: entries.len(),
                });
            }
        }
        rows.push(entries);
    }
    Ok(Matrix::from_rows(&rows).expect("row lengths checked"))
}

pub fn format_matrix(m: &Matrix) -> String {
    m.row_iter()
        .map(|r| r.iter().map(|x| x.symbol()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

fn parse_count(t: &str) -> Result<u32, ParseError> {
    let t = t.trim();
    t.parse::<u32>().map_err(|_| ParseError::Count(t.to_string()))
}

pub fn parse_atuple(s: &str) -> Result<ATuple, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    let (a0, body) = match s.split_once(';') {
        Some((head, body)) => {
            let count = head
                .trim()
                .strip_prefix("a0=")
                .ok_or_else(|| ParseError::ZeroPrefix(head.trim().to_string()))?;
            (parse_count(count)?, body)
        }
        None => (0, s),
    };
    let parts: Vec<&str> = body.split(',').collect();
    if parts.len() != 5 {
        return Err(ParseError::TupleArity(parts.len()));
    }
    let mut a = [0u32; 5];
    for (slot, t) in a.iter_mut().zip(parts) {
        *slot = parse_count(t)?;
    }
    Ok(ATuple::with_zero_columns(a0, a))
}

pub fn format_atuple(a: &ATuple) -> String {
    let body = a.a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    if a.a0 > 0 {
        format!("a0={};{body}", a.a0)
    } else {
        body
    }
}
