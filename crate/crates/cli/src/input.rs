//! Reading JSON arguments given inline or as a path to a file.

use std::path::Path;

use num_traits::Zero;
use ribbonlab::exact::{parse_rational, RatMatrix, Rational};
use ribbonlab::poly::BinaryForm;
use ribbonlab::Error;
use serde_json::Value;

/// An argument that parses as JSON is taken literally; otherwise it names a file.
pub fn json_arg(arg: &str) -> Result<Value, Error> {
    if let Ok(v) = serde_json::from_str(arg) {
        return Ok(v);
    }
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
        return serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")));
    }
    Err(Error::Parse(format!("not inline JSON and not a readable file: {arg}")))
}

/// Rationals may be written as strings ("-3/4") or as JSON integers.
pub fn rational(v: &Value) -> Result<Rational, Error> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(|k| Rational::from_integer(k.into()))
            .ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
        _ => Err(Error::Parse(format!("expected a rational, got {v}"))),
    }
}

pub fn rational_list(v: &Value) -> Result<Vec<Rational>, Error> {
    v.as_array().ok_or_else(|| Error::Parse(format!("expected a list, got {v}")))?.iter().map(rational).collect()
}

pub fn matrix(v: &Value) -> Result<RatMatrix, Error> {
    let rows = v.as_array().ok_or_else(|| Error::Parse("matrix must be a list of rows".into()))?;
    let rows: Vec<Vec<Rational>> = rows.iter().map(rational_list).collect::<Result<_, _>>()?;
    if rows.is_empty() {
        return Err(Error::Parse("empty matrix".into()));
    }
    RatMatrix::from_rows(rows)
}

/// A binary form: a coefficient list (`[c_0, ..]`, `c_a` on `x0^a x1^(n-a)`)
/// or an object `{"degree": n, "coeffs": [..]}`.
pub fn binary_form(v: &Value) -> Result<BinaryForm, Error> {
    let coeffs = match v.get("coeffs") {
        Some(c) => rational_list(c)?,
        None => rational_list(v)?,
    };
    if coeffs.is_empty() {
        return Err(Error::Parse("binary form needs coefficients".into()));
    }
    if let Some(n) = v.get("degree").and_then(Value::as_u64) {
        if n as usize + 1 != coeffs.len() {
            return Err(Error::DegreeMismatch { expected: n as usize, found: coeffs.len() - 1 });
        }
    }
    if coeffs.iter().all(Zero::is_zero) {
        return Err(Error::Precondition("binary form is zero".into()));
    }
    Ok(BinaryForm::from_coeffs(coeffs))
}
