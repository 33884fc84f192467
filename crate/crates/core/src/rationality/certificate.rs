use serde_json::{json, Value};

use crate::algebra::json::{unipoly_from_json, unipoly_to_json, CoeffJson};
use crate::algebra::{Ring, SeriesPrefix, UniPoly};
use crate::error::{Error, Result};

/// Witness that `f = h / g`, checked through `t^verified_to`.
///
/// Only certificates with a unit `g(0)` are accepted: then `g` is a
/// non-zerodivisor in `R[[t]]` and `g x = h` has exactly one solution.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalCertificate<R> {
    pub g: UniPoly<R>,
    pub h: UniPoly<R>,
    pub verified_to: usize,
}

impl<R: Ring> RationalCertificate<R> {
    pub fn new(g: UniPoly<R>, h: UniPoly<R>, verified_to: usize) -> Self {
        Self { g, h, verified_to }
    }

    /// Same rational function: `g1 h2 == g2 h1`.
    pub fn same_function(&self, other: &Self) -> bool {
        self.g.times(&other.h) == other.g.times(&self.h)
    }
}

impl<R: CoeffJson> RationalCertificate<R> {
    pub fn to_json(&self) -> Value {
        json!({
            "ring": R::RING_TAG,
            "g": unipoly_to_json(&self.g),
            "h": unipoly_to_json(&self.h),
            "verified_to": self.verified_to,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        if let Some(tag) = v.get("ring").and_then(Value::as_str) {
            if tag != R::RING_TAG {
                return Err(Error::Parse(format!("certificate ring {tag:?} does not match series ring {:?}", R::RING_TAG)));
            }
        }
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("certificate needs {k:?}")));
        let verified_to = field("verified_to")?
            .as_u64()
            .ok_or_else(|| Error::Parse("\"verified_to\" must be a non-negative integer".into()))?;
        Ok(Self::new(unipoly_from_json(field("g")?)?, unipoly_from_json(field("h")?)?, verified_to as usize))
    }
}

/// Checks `g f = h` through order `min(K, verified_to)`.
pub fn check_global<R: Ring>(f: &SeriesPrefix<R>, cert: &RationalCertificate<R>) -> Result<bool> {
    if !cert.g.coeff(0).is_unit() {
        return Err(Error::NonUnitLeadingTerm);
    }
    let limit = f.order().min(cert.verified_to);
    let product = f.mul_poly(&cert.g, limit);
    Ok(product.iter().enumerate().all(|(n, c)| *c == cert.h.coeff(n)))
}
