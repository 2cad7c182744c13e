//! Reading JSON inputs, with field-level diagnostics.

use std::fmt;
use std::path::Path;

use octad::hyperelliptic::BranchData;
use octad::linalg::RationalMatrix;
use octad::octad::{OctadParameters, FREE_NAMES};
use octad::quadric::{QuadricNet, SymmetricQuadric};
use octad::rational::{parse_rational, Rational};
use serde_json::Value;

/// A malformed or invalid input, reported with exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<octad::Error> for InputError {
    fn from(e: octad::Error) -> Self {
        InputError(e.to_string())
    }
}

pub type InputResult<T> = Result<T, InputError>;

fn err<T>(msg: impl Into<String>) -> InputResult<T> {
    Err(InputError(msg.into()))
}

/// Inline JSON wins over `--input`; `-` reads stdin.
pub fn load(inline: Option<&str>, path: Option<&Path>, what: &str) -> InputResult<Option<Value>> {
    let text = match (inline, path) {
        (Some(s), _) => s.to_string(),
        (None, Some(p)) if p == Path::new("-") => {
            std::io::read_to_string(std::io::stdin()).map_err(|e| InputError(format!("stdin: {e}")))?
        }
        (None, Some(p)) => std::fs::read_to_string(p)
            .map_err(|e| InputError(format!("{}: {e}", p.display())))?,
        (None, None) => return Ok(None),
    };
    serde_json::from_str(&text)
        .map(Some)
        .map_err(|e| InputError(format!("{what}: invalid JSON at line {}, column {}: {e}", e.line(), e.column())))
}

pub fn rational(v: &Value, field: &str) -> InputResult<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| InputError(format!("field `{field}`: {e}"))),
        other => err(format!("field `{field}`: expected a \"p/q\" string, found {other}")),
    }
}

pub fn rational_list(v: &Value, field: &str) -> InputResult<Vec<Rational>> {
    let Value::Array(items) = v else {
        return err(format!("field `{field}`: expected a list"));
    };
    items
        .iter()
        .enumerate()
        .map(|(i, x)| rational(x, &format!("{field}[{i}]")))
        .collect()
}

pub fn matrix(v: &Value, field: &str, rows: usize, cols: usize) -> InputResult<RationalMatrix> {
    let Value::Array(rs) = v else {
        return err(format!("field `{field}`: expected a list of rows"));
    };
    if rs.len() != rows {
        return err(format!("field `{field}`: expected {rows} rows, found {}", rs.len()));
    }
    let mut out = Vec::with_capacity(rows);
    for (i, r) in rs.iter().enumerate() {
        let row = rational_list(r, &format!("{field}[{i}]"))?;
        if row.len() != cols {
            return err(format!("field `{field}[{i}]`: expected {cols} entries, found {}", row.len()));
        }
        out.push(row);
    }
    Ok(RationalMatrix::from_rows(out)?)
}

/// `{"s11": "...", ..., "s32": "..."}` or `{"free": [six values]}`.
pub fn free_parameters(v: &Value) -> InputResult<[Rational; 6]> {
    let Value::Object(map) = v else {
        return err("parameters: expected an object with s11, s21, s31, s12, s22, s32 or `free`");
    };
    let values = if let Some(free) = map.get("free") {
        rational_list(free, "free")?
    } else {
        FREE_NAMES
            .iter()
            .map(|name| match map.get(*name) {
                Some(x) => rational(x, name),
                None => err(format!("parameters: missing field `{name}`")),
            })
            .collect::<InputResult<Vec<_>>>()?
    };
    values
        .try_into()
        .map_err(|v: Vec<Rational>| InputError(format!("field `free`: expected 6 values, found {}", v.len())))
}

/// One parameter object, or a list of them.
pub fn parameter_points(v: &Value) -> InputResult<(Vec<[Rational; 6]>, bool)> {
    match v {
        Value::Array(items) => Ok((
            items
                .iter()
                .enumerate()
                .map(|(i, x)| free_parameters(x).map_err(|e| InputError(format!("item {i}: {e}"))))
                .collect::<InputResult<Vec<_>>>()?,
            true,
        )),
        other => Ok((vec![free_parameters(other)?], false)),
    }
}

pub fn close(free: [Rational; 6]) -> InputResult<OctadParameters> {
    Ok(OctadParameters::close(free)?)
}

/// `{"quadrics": [Q1, Q2, Q3]}` or `[Q1, Q2, Q3]`, each a 4×4 list of rows.
pub fn net(v: &Value) -> InputResult<QuadricNet> {
    let list = match v {
        Value::Object(map) => map
            .get("quadrics")
            .ok_or_else(|| InputError("net: missing field `quadrics`".into()))?,
        other => other,
    };
    let Value::Array(qs) = list else {
        return err("field `quadrics`: expected a list of three 4x4 matrices");
    };
    if qs.len() != 3 {
        return err(format!("field `quadrics`: expected 3 matrices, found {}", qs.len()));
    }
    let mut out = Vec::with_capacity(3);
    for (i, q) in qs.iter().enumerate() {
        let field = format!("quadrics[{i}]");
        let m = matrix(q, &field, 4, 4)?;
        out.push(SymmetricQuadric::new(m).map_err(|e| InputError(format!("field `{field}`: {e}")))?);
    }
    let [a, b, c]: [SymmetricQuadric; 3] = out.try_into().expect("three");
    Ok(QuadricNet::new([a, b, c])?)
}

/// `{"theta": M}` or `M`, a 3×3 list of rows.
pub fn theta(v: &Value) -> InputResult<RationalMatrix> {
    let m = match v {
        Value::Object(map) => map
            .get("theta")
            .ok_or_else(|| InputError("missing field `theta`".into()))?,
        other => other,
    };
    matrix(m, "theta", 3, 3)
}

/// `{"lambdas": [...]}` or a bare list of 8 values.
pub fn lambdas(v: &Value) -> InputResult<BranchData> {
    let l = match v {
        Value::Object(map) => map
            .get("lambdas")
            .ok_or_else(|| InputError("missing field `lambdas`".into()))?,
        other => other,
    };
    Ok(BranchData::new(rational_list(l, "lambdas")?)?)
}
