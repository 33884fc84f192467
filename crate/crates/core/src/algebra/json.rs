//! JSON encodings. Big integers are always decimal strings; object keys
//! come out in lexicographic order because `serde_json::Map` is ordered.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::epoly::EPolynomial;
use super::laurent::LaurentClass;
use super::ring::Ring;
use super::series::SeriesPrefix;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn bigint_to_json(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => BigInt::from_str(s.trim()).map_err(|_| parse_err(format!("not a decimal integer: {s:?}"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(BigInt::from_str(&n.to_string()).expect("integer literal")),
        other => Err(parse_err(format!("expected a decimal integer string, got {other}"))),
    }
}

/// A coefficient ring with a JSON encoding and a series tag.
pub trait CoeffJson: Ring {
    const RING_TAG: &'static str;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl CoeffJson for BigInt {
    const RING_TAG: &'static str = "Z";
    fn to_json(&self) -> Value {
        bigint_to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self> {
        bigint_from_json(v)
    }
}

impl CoeffJson for BigRational {
    const RING_TAG: &'static str = "Q";
    fn to_json(&self) -> Value {
        Value::String(if self.is_integer() { self.numer().to_string() } else { self.to_string() })
    }
    fn from_json(v: &Value) -> Result<Self> {
        if let Value::String(s) = v {
            if let Some((n, d)) = s.split_once('/') {
                let n = BigInt::from_str(n.trim()).map_err(|_| parse_err(format!("bad numerator in {s:?}")))?;
                let d = BigInt::from_str(d.trim()).map_err(|_| parse_err(format!("bad denominator in {s:?}")))?;
                if d == BigInt::from(0) {
                    return Err(parse_err(format!("zero denominator in {s:?}")));
                }
                return Ok(BigRational::new(n, d));
            }
        }
        Ok(BigRational::from_integer(bigint_from_json(v)?))
    }
}

fn terms_to_json(p: &EPolynomial) -> Value {
    Value::Array(
        p.terms()
            .map(|((u, v), c)| json!({"u": u, "v": v, "c": bigint_to_json(c)}))
            .collect(),
    )
}

fn terms_from_json(v: &Value) -> Result<EPolynomial> {
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("polynomial needs a \"terms\" array"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let exp = |key: &str| -> Result<u32> {
            t.get(key)
                .and_then(Value::as_u64)
                .and_then(|e| u32::try_from(e).ok())
                .ok_or_else(|| parse_err(format!("term needs a non-negative integer {key:?}")))
        };
        let c = bigint_from_json(t.get("c").ok_or_else(|| parse_err("term needs \"c\""))?)?;
        out.push((exp("u")?, exp("v")?, c));
    }
    Ok(EPolynomial::from_terms(out))
}

impl CoeffJson for EPolynomial {
    const RING_TAG: &'static str = "ZuvPoly";
    fn to_json(&self) -> Value {
        json!({ "terms": terms_to_json(self) })
    }
    fn from_json(v: &Value) -> Result<Self> {
        terms_from_json(v)
    }
}

impl CoeffJson for LaurentClass {
    const RING_TAG: &'static str = "Laurent";
    fn to_json(&self) -> Value {
        json!({ "lpow": self.lpow(), "terms": terms_to_json(self.numerator()) })
    }
    fn from_json(v: &Value) -> Result<Self> {
        let lpow = match v.get("lpow") {
            None => 0,
            Some(l) => l
                .as_u64()
                .and_then(|e| u32::try_from(e).ok())
                .ok_or_else(|| parse_err("\"lpow\" must be a non-negative integer"))?,
        };
        Ok(LaurentClass::new(terms_from_json(v)?, lpow))
    }
}

pub fn series_to_json<R: CoeffJson>(s: &SeriesPrefix<R>) -> Value {
    json!({
        "ring": R::RING_TAG,
        "coeffs": s.coeffs().iter().map(CoeffJson::to_json).collect::<Vec<_>>(),
    })
}

pub fn unipoly_to_json<R: CoeffJson>(p: &UniPoly<R>) -> Value {
    Value::Array(p.coeffs().iter().map(CoeffJson::to_json).collect())
}

pub fn unipoly_from_json<R: CoeffJson>(v: &Value) -> Result<UniPoly<R>> {
    let items = v.as_array().ok_or_else(|| parse_err("polynomial must be a coefficient array"))?;
    Ok(UniPoly::new(items.iter().map(R::from_json).collect::<Result<_>>()?))
}

fn coeff_list<R: CoeffJson>(items: &[Value]) -> Result<SeriesPrefix<R>> {
    if items.is_empty() {
        return Err(parse_err("series needs at least one coefficient"));
    }
    Ok(SeriesPrefix::new(items.iter().map(R::from_json).collect::<Result<_>>()?))
}

/// A series read from JSON whose ring is only known at runtime.
#[derive(Clone, Debug, PartialEq)]
pub enum AnySeries {
    Z(SeriesPrefix<BigInt>),
    Q(SeriesPrefix<BigRational>),
    Poly(SeriesPrefix<EPolynomial>),
    Laurent(SeriesPrefix<LaurentClass>),
}

impl AnySeries {
    pub fn from_json(v: &Value) -> Result<Self> {
        let ring = v.get("ring").and_then(Value::as_str).ok_or_else(|| parse_err("series needs a \"ring\" tag"))?;
        let items = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| parse_err("series needs a \"coeffs\" array"))?;
        match ring {
            "Z" => coeff_list(items).map(Self::Z),
            "Q" => coeff_list(items).map(Self::Q),
            "ZuvPoly" => coeff_list(items).map(Self::Poly),
            "Laurent" => coeff_list(items).map(Self::Laurent),
            other => Err(parse_err(format!("unknown ring tag {other:?}"))),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Self::Z(s) => series_to_json(s),
            Self::Q(s) => series_to_json(s),
            Self::Poly(s) => series_to_json(s),
            Self::Laurent(s) => series_to_json(s),
        }
    }

    pub fn ring_tag(&self) -> &'static str {
        match self {
            Self::Z(_) => BigInt::RING_TAG,
            Self::Q(_) => BigRational::RING_TAG,
            Self::Poly(_) => EPolynomial::RING_TAG,
            Self::Laurent(_) => LaurentClass::RING_TAG,
        }
    }
}
