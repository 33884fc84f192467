use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::json::CoeffJson;
use crate::algebra::{BigRational, Ring, SeriesPrefix};
use crate::error::{Error, Result};
use crate::zeta::{specialize, Specialize, SpecializationMap};

use super::certificate::RationalCertificate;
use super::reconstruct::reconstruct_certificate;

#[derive(Clone, Debug, PartialEq)]
pub enum PointwiseVerdict {
    /// The specialized prefix has a certificate with `deg g <= d_max`.
    Rational(RationalCertificate<BigRational>),
    /// No certificate; a nonzero `(d_max+1)`-window Hankel determinant at
    /// `offset` backs the negative answer for this prefix.
    NoCertificate { window: usize, offset: usize, det: BigRational },
    /// No certificate and no nonzero determinant to show for it.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointwiseEntry {
    pub map: SpecializationMap,
    pub verdict: PointwiseVerdict,
}

/// Sampled evidence only: a finite set of homomorphisms, each checked on a
/// finite prefix.
#[derive(Clone, Debug, PartialEq)]
pub struct PointwiseReport {
    pub d_max: usize,
    pub prefix_order: usize,
    pub entries: Vec<PointwiseEntry>,
}

impl PointwiseReport {
    pub fn all_rational(&self) -> bool {
        self.entries.iter().all(|e| matches!(e.verdict, PointwiseVerdict::Rational(_)))
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                let point = json!([e.map.u0.to_string(), e.map.v0.to_string()]);
                match &e.verdict {
                    PointwiseVerdict::Rational(c) => json!({"point": point, "verdict": "rational", "certificate": c.to_json()}),
                    PointwiseVerdict::NoCertificate { window, offset, det } => json!({
                        "point": point,
                        "verdict": "no-certificate",
                        "witness": {"window": window, "i": offset, "det": det.to_json()},
                    }),
                    PointwiseVerdict::Inconclusive => json!({"point": point, "verdict": "inconclusive"}),
                }
            })
            .collect();
        json!({"d_max": self.d_max, "K": self.prefix_order, "entries": entries})
    }
}

fn judge(f: &SeriesPrefix<BigRational>, d_max: usize) -> PointwiseVerdict {
    if let Some(cert) = reconstruct_certificate(f, d_max) {
        return PointwiseVerdict::Rational(cert);
    }
    let window = d_max + 1;
    let k = f.order();
    if 2 * (window - 1) > k {
        return PointwiseVerdict::Inconclusive;
    }
    (0..=k - 2 * (window - 1))
        .rev()
        .find_map(|i| {
            let det = f.hankel_det(i, window).expect("window fits");
            (!det.is_zero()).then_some(PointwiseVerdict::NoCertificate { window, offset: i, det })
        })
        .unwrap_or(PointwiseVerdict::Inconclusive)
}

/// Specializes `f` at each map and tries to reconstruct a certificate with
/// `deg g <= d_max` over the rationals.
pub fn pointwise_test<R: Specialize>(f: &SeriesPrefix<R>, maps: &[SpecializationMap], d_max: usize) -> Result<PointwiseReport> {
    if maps.is_empty() {
        return Err(Error::InvalidParams("pointwise test needs at least one specialization map".into()));
    }
    let entries = maps
        .par_iter()
        .map(|map| {
            let s = specialize(f, map)?;
            Ok(PointwiseEntry { map: map.clone(), verdict: judge(&s, d_max) })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PointwiseReport { d_max, prefix_order: f.order(), entries })
}
