//! JSON structure-constant files.
//!
//! Every structure map is a list of sparse tuples: some basis indices followed
//! by a coefficient, written as a string in the ring grammar (bare integers
//! are accepted too). Each file kind decides how the indices place an entry
//! in the matrix. Omitted entries are zero.

use std::path::Path;

use serde_json::{json, Value};
use thiserror::Error;

use crate::linmap::LinMap;
use crate::ring::{ParseError, Ring, RingTag};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("missing field `{0}`")]
    Missing(&'static str),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("field `{field}`, entry {entry}: {source}")]
    Coefficient {
        field: String,
        entry: usize,
        source: ParseError,
    },
    #[error("data is over `{found}` but `{expected}` was requested")]
    RingMismatch { expected: RingTag, found: RingTag },
}

impl FormatError {
    pub(crate) fn field(field: &str, message: impl Into<String>) -> Self {
        FormatError::Field {
            field: field.to_string(),
            message: message.into(),
        }
    }
}

pub fn read_json(path: &Path) -> Result<Value, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

/// The `"ring"` field; absent means rational.
pub fn ring_tag(doc: &Value) -> Result<RingTag, FormatError> {
    match doc.get("ring") {
        None => Ok(RingTag::Rational),
        Some(Value::String(s)) => s
            .parse()
            .map_err(|_| FormatError::field("ring", format!("unknown ring `{s}`"))),
        Some(_) => Err(FormatError::field("ring", "expected a string")),
    }
}

pub(crate) fn expect_ring<R: Ring>(doc: &Value) -> Result<(), FormatError> {
    let found = ring_tag(doc)?;
    if found != R::TAG {
        return Err(FormatError::RingMismatch {
            expected: R::TAG,
            found,
        });
    }
    Ok(())
}

pub(crate) fn usize_field(doc: &Value, field: &'static str) -> Result<usize, FormatError> {
    let v = doc.get(field).ok_or(FormatError::Missing(field))?;
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| FormatError::field(field, "expected a nonnegative integer"))
}

/// `"basis"` labels, defaulting to `<prefix>0, <prefix>1, …`.
pub(crate) fn labels(doc: &Value, rank: usize, prefix: &str) -> Result<Vec<String>, FormatError> {
    match doc.get("basis") {
        None => Ok((0..rank).map(|i| format!("{prefix}{i}")).collect()),
        Some(Value::Array(items)) if items.len() == rank => items
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| FormatError::field("basis", "labels must be strings"))
            })
            .collect(),
        Some(_) => Err(FormatError::field(
            "basis",
            format!("expected {rank} labels"),
        )),
    }
}

fn coefficient<R: Ring>(v: &Value, field: &str, entry: usize) -> Result<R, FormatError> {
    let parsed = match v {
        Value::String(s) => R::parse(s),
        Value::Number(n) => R::parse(&n.to_string()),
        _ => {
            return Err(FormatError::field(
                field,
                format!("entry {entry}: bad coefficient"),
            ))
        }
    };
    parsed.map_err(|source| FormatError::Coefficient {
        field: field.to_string(),
        entry,
        source,
    })
}

/// Reads `[[i₁, …, i_arity, coeff], …]` and places each tuple via `place`,
/// which returns `(row, col)`.
pub(crate) fn read_map<R, F>(
    doc: &Value,
    field: &str,
    arity: usize,
    cod: usize,
    dom: usize,
    place: F,
) -> Result<LinMap<R>, FormatError>
where
    R: Ring,
    F: Fn(&[usize]) -> (usize, usize),
{
    let items = match doc.get(field) {
        None => return Ok(LinMap::zero(cod, dom)),
        Some(Value::Array(items)) => items,
        Some(_) => return Err(FormatError::field(field, "expected an array")),
    };
    let mut entries = Vec::with_capacity(items.len());
    for (k, item) in items.iter().enumerate() {
        let tuple = item
            .as_array()
            .filter(|t| t.len() == arity + 1)
            .ok_or_else(|| {
                FormatError::field(field, format!("entry {k}: expected {} items", arity + 1))
            })?;
        let idx = tuple[..arity]
            .iter()
            .map(|v| v.as_u64().map(|n| n as usize))
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(|| FormatError::field(field, format!("entry {k}: bad index")))?;
        let c: R = coefficient(&tuple[arity], field, k)?;
        let (row, col) = place(&idx);
        entries.push((row, col, c));
    }
    LinMap::from_entries(cod, dom, entries).map_err(|e| FormatError::field(field, e.to_string()))
}

/// Inverse of [`read_map`]: `unplace(row, col)` gives the index tuple.
pub(crate) fn write_map<R, F>(map: &LinMap<R>, unplace: F) -> Value
where
    R: Ring,
    F: Fn(usize, usize) -> Vec<usize>,
{
    let mut rows: Vec<(Vec<usize>, String)> = map
        .entries()
        .map(|(i, j, x)| (unplace(i, j), x.to_string()))
        .collect();
    rows.sort();
    Value::Array(
        rows.into_iter()
            .map(|(idx, c)| {
                let mut t: Vec<Value> = idx.into_iter().map(|i| json!(i)).collect();
                t.push(json!(c));
                Value::Array(t)
            })
            .collect(),
    )
}

/// Plain `[[row, col, coeff], …]`.
pub(crate) fn read_plain<R: Ring>(
    doc: &Value,
    field: &str,
    cod: usize,
    dom: usize,
) -> Result<LinMap<R>, FormatError> {
    read_map(doc, field, 2, cod, dom, |t| (t[0], t[1]))
}

pub(crate) fn write_plain<R: Ring>(map: &LinMap<R>) -> Value {
    write_map(map, |i, j| vec![i, j])
}
