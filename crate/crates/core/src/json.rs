//! JSON wire formats. Rationals are strings `"p/q"` (or `"p"`).

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::Error;
use crate::exact::{format_rational, parse_rational, Coeff, Rational, TruncatedScalar};
use crate::poly::{Monomial, WPoly};

pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        format_rational(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}

pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(format_rational).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| parse_rational(s).map_err(D::Error::custom)).collect()
    }
}

pub mod rational_matrix {
    use super::*;

    pub fn serialize<S: Serializer>(m: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        m.iter().map(|r| r.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let m = Vec::<Vec<String>>::deserialize(d)?;
        m.iter()
            .map(|r| r.iter().map(|s| parse_rational(s).map_err(D::Error::custom)).collect())
            .collect()
    }
}

pub fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

/// Coefficients that have a JSON form: rationals as strings, truncated
/// scalars as arrays of strings (pi-adic digits).
pub trait JsonCoeff: Coeff {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> crate::Result<Self>;
}

impl JsonCoeff for Rational {
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }

    fn from_json(v: &Value) -> crate::Result<Self> {
        let s = v.as_str().ok_or_else(|| Error::Parse(format!("expected a rational string, got {v}")))?;
        parse_rational(s)
    }
}

impl JsonCoeff for TruncatedScalar {
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(|c| c.to_json()).collect())
    }

    fn from_json(v: &Value) -> crate::Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse(format!("expected an array of digits, got {v}")))?;
        if arr.is_empty() {
            return Err(Error::Parse("empty digit array".into()));
        }
        Ok(TruncatedScalar::from_coeffs(arr.iter().map(Rational::from_json).collect::<crate::Result<_>>()?))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    u: Vec<u16>,
    v: Vec<u16>,
    c: Value,
}

/// `[{"u": [..], "v": [..], "c": ..}, ..]`, terms in increasing monomial order.
pub fn wpoly_to_json<C: JsonCoeff>(p: &WPoly<C>) -> Value {
    let g = p.g();
    let terms: Vec<TermJson> = p
        .terms()
        .map(|(m, c)| TermJson { u: m.exps()[..g].to_vec(), v: m.exps()[g..].to_vec(), c: c.to_json() })
        .collect();
    serde_json::to_value(terms).expect("terms serialize")
}

pub fn wpoly_from_json<C: JsonCoeff>(g: usize, v: &Value) -> crate::Result<WPoly<C>> {
    if g < 3 {
        return Err(Error::InvalidGenus(g));
    }
    let terms: Vec<TermJson> = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let mut out = WPoly::zero(g);
    for t in terms {
        if t.u.len() != g || t.v.len() != g - 2 {
            return Err(Error::Parse(format!(
                "term has {} u- and {} v-exponents, expected {} and {}",
                t.u.len(),
                t.v.len(),
                g,
                g - 2
            )));
        }
        let mut e = t.u;
        e.extend(t.v);
        out.add_term(Monomial(e), C::from_json(&t.c)?);
    }
    Ok(out)
}

/// Genus implied by the first term, if any.
pub fn infer_genus(v: &Value) -> Option<usize> {
    v.as_array()?.first()?.get("u")?.as_array().map(|a| a.len())
}
