//! Reading and writing matrices.
//!
//! Two interchangeable forms are accepted everywhere a matrix comes in:
//!
//! * Text: a header line `rows cols` followed by `rows * cols`
//!   whitespace-separated quaternion literals in row-major order, e.g.
//!
//!   ```text
//!   2 2
//!   0 j
//!   i 0
//!   ```
//!
//! * JSON: `{"rows": 2, "cols": 2, "entries": [[w,x,y,z], ...]}` with
//!   entries again row-major, each quaternion a 4-tuple of components.
//!
//! [`parse_qmatrix`] sniffs the form from the first non-space byte.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quat::Quaternion;
use crate::scalar::Scalar;
use crate::vector::QVector;

#[derive(Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
struct MatrixForm<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Quaternion<T>>,
}

/// Parses either accepted form, deciding by whether the input starts
/// with `{`.
pub fn parse_qmatrix<T: Scalar + DeserializeOwned>(input: &str) -> Result<QMatrix<T>> {
    if input.trim_start().starts_with('{') {
        parse_qmatrix_json(input)
    } else {
        parse_qmatrix_text(input)
    }
}

pub fn parse_qmatrix_text<T: Scalar>(input: &str) -> Result<QMatrix<T>> {
    let mut tokens = input.split_whitespace();
    let mut dim = |name: &str| -> Result<usize> {
        tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("missing {name} in matrix header")))?
            .parse()
            .map_err(|_| Error::Parse(format!("invalid {name} in matrix header")))
    };
    let rows = dim("row count")?;
    let cols = dim("column count")?;
    let want = rows * cols;
    let mut entries = Vec::with_capacity(want);
    for token in tokens.by_ref() {
        if entries.len() == want {
            return Err(Error::Parse(format!(
                "expected {want} entries for a {rows}x{cols} matrix, found more"
            )));
        }
        entries.push(token.parse::<Quaternion<T>>()?);
    }
    if entries.len() < want {
        return Err(Error::Parse(format!(
            "expected {want} entries for a {rows}x{cols} matrix, found {}",
            entries.len()
        )));
    }
    QMatrix::from_flat(rows, cols, entries)
}

pub fn parse_qmatrix_json<T: Scalar + DeserializeOwned>(input: &str) -> Result<QMatrix<T>> {
    let form: MatrixForm<T> =
        serde_json::from_str(input).map_err(|e| Error::Parse(format!("matrix json: {e}")))?;
    QMatrix::from_flat(form.rows, form.cols, form.entries)
}

/// Renders the JSON form, compact and stable for a given matrix.
pub fn write_qmatrix_json<T: Scalar + Serialize>(m: &QMatrix<T>) -> String {
    let form = MatrixForm {
        rows: m.rows(),
        cols: m.cols(),
        entries: m.entries().to_vec(),
    };
    serde_json::to_string(&form).expect("matrix serialization cannot fail")
}

/// Renders the text form, one row per line.
pub fn write_qmatrix_text<T: Scalar>(m: &QMatrix<T>) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|q| q.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Parses a comma-separated list of quaternion literals into a vector,
/// e.g. `1+i, j, -k`.
pub fn parse_qvector_list<T: Scalar>(input: &str) -> Result<QVector<T>> {
    let entries = input
        .split(',')
        .map(|tok| tok.trim().parse::<Quaternion<T>>())
        .collect::<Result<Vec<_>>>()?;
    if entries.is_empty() {
        return Err(Error::Parse("empty vector literal".into()));
    }
    Ok(QVector::from_vec(entries))
}
