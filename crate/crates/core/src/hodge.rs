//! Hodge diamonds as stand-ins for smooth projective classes.
//!
//! Diamonds are formal data: nothing checks that a variety with the given
//! Hodge numbers exists. Characteristic zero is assumed throughout.

use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::algebra::EPolynomial;
use crate::error::{Error, Result};

/// Hodge numbers `h[p][q] = h^{p,q}` of a connected smooth projective
/// variety of dimension `dim`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HodgeDiamond {
    dim: usize,
    h: Vec<Vec<u64>>,
}

impl HodgeDiamond {
    /// Validates connectedness, conjugation symmetry and Serre duality.
    pub fn new(h: Vec<Vec<u64>>) -> Result<Self> {
        let n = h.len();
        if n == 0 {
            return Err(Error::InvalidDiamond("empty grid".into()));
        }
        if let Some(p) = h.iter().position(|row| row.len() != n) {
            return Err(Error::InvalidDiamond(format!("row {p} has {} entries, expected {n}", h[p].len())));
        }
        let d = n - 1;
        if h[0][0] != 1 {
            return Err(Error::InvalidDiamond(format!("connectedness violated: h^{{0,0}} = {}, expected 1", h[0][0])));
        }
        for p in 0..=d {
            for q in 0..=d {
                if h[p][q] != h[q][p] {
                    return Err(Error::InvalidDiamond(format!(
                        "conjugation symmetry violated: h^{{{p},{q}}} = {} but h^{{{q},{p}}} = {}",
                        h[p][q], h[q][p]
                    )));
                }
                if h[p][q] != h[d - p][d - q] {
                    return Err(Error::InvalidDiamond(format!(
                        "Serre duality violated: h^{{{p},{q}}} = {} but h^{{{},{}}} = {}",
                        h[p][q],
                        d - p,
                        d - q,
                        h[d - p][d - q]
                    )));
                }
            }
        }
        Ok(Self { dim: d, h })
    }

    pub fn point() -> Self {
        Self { dim: 0, h: vec![vec![1]] }
    }

    pub fn projective_space(n: usize) -> Self {
        let h = (0..=n).map(|p| (0..=n).map(|q| u64::from(p == q)).collect()).collect();
        Self { dim: n, h }
    }

    /// Smooth projective curve of genus `g`.
    pub fn curve(g: u64) -> Self {
        Self { dim: 1, h: vec![vec![1, g], vec![g, 1]] }
    }

    /// Surface with irregularity `q`, geometric genus `p_g` and `h^{1,1}`.
    pub fn surface(q: u64, p_g: u64, h11: u64) -> Result<Self> {
        if h11 == 0 {
            return Err(Error::InvalidParams("a projective surface has h^{1,1} >= 1 (hyperplane class)".into()));
        }
        Ok(Self { dim: 2, h: vec![vec![1, q, p_g], vec![q, h11, q], vec![p_g, q, 1]] })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hpq(&self, p: usize, q: usize) -> u64 {
        self.h.get(p).and_then(|r| r.get(q)).copied().unwrap_or(0)
    }

    pub fn grid(&self) -> &[Vec<u64>] {
        &self.h
    }

    /// Geometric genus `h^{d,0}`.
    pub fn geometric_genus(&self) -> u64 {
        self.h[self.dim][0]
    }

    /// Künneth: `h^{p,q}(A x B) = sum h^{p1,q1}(A) h^{p2,q2}(B)`.
    pub fn product(&self, other: &Self) -> Self {
        let d = self.dim + other.dim;
        let mut h = vec![vec![0u64; d + 1]; d + 1];
        for (p1, row1) in self.h.iter().enumerate() {
            for (q1, &a) in row1.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (p2, row2) in other.h.iter().enumerate() {
                    for (q2, &b) in row2.iter().enumerate() {
                        h[p1 + p2][q1 + q2] += a * b;
                    }
                }
            }
        }
        Self { dim: d, h }
    }

    /// Hodge–Deligne polynomial `sum (-1)^{p+q} h^{p,q} u^p v^q`.
    pub fn e_polynomial(&self) -> EPolynomial {
        EPolynomial::from_terms(self.h.iter().enumerate().flat_map(|(p, row)| {
            row.iter().enumerate().map(move |(q, &n)| {
                let c = BigInt::from(n);
                (p as u32, q as u32, if (p + q) % 2 == 0 { c } else { -c })
            })
        }))
    }

    /// `sum (-1)^{p+q} h^{p,q}`
    pub fn euler_characteristic(&self) -> BigInt {
        self.h
            .iter()
            .enumerate()
            .flat_map(|(p, row)| row.iter().enumerate().map(move |(q, &n)| (p + q, n)))
            .map(|(w, n)| if w % 2 == 0 { BigInt::from(n) } else { -BigInt::from(n) })
            .sum()
    }

    pub fn genus_polynomial(&self) -> GenusPolynomial {
        GenusPolynomial::new(self.h.iter().map(|row| BigInt::from(row[0])).collect())
    }

    /// Compares `h_{X x P^n}(s)` with `h_X(s)`; always true for valid diamonds.
    pub fn stable_invariance_check(&self, n: usize) -> bool {
        self.product(&Self::projective_space(n)).genus_polynomial() == self.genus_polynomial()
    }

    /// Random valid diamond with `dim <= max_dim` and entries `<= max_entry`.
    pub fn random<G: rand::Rng>(rng: &mut G, max_dim: usize, max_entry: u64) -> Self {
        let d = rng.gen_range(0..=max_dim);
        let mut h = vec![vec![0u64; d + 1]; d + 1];
        for p in 0..=d {
            for q in p..=d {
                // Fill one representative per symmetry orbit.
                let (sp, sq) = (d - q, d - p);
                if (sp, sq) < (p, q) {
                    continue;
                }
                let val = if (p, q) == (0, 0) { 1 } else { rng.gen_range(0..=max_entry) };
                for (a, b) in [(p, q), (q, p), (d - p, d - q), (d - q, d - p)] {
                    h[a][b] = val;
                }
            }
        }
        Self::new(h).expect("generator respects the diamond symmetries")
    }

    /// Parses `{"dim": d, "hpq": [[...], ...]}`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidDiamond(m.to_string());
        let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("missing non-negative integer \"dim\""))?;
        let rows = v.get("hpq").and_then(Value::as_array).ok_or_else(|| bad("missing \"hpq\" grid"))?;
        let h: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| bad("\"hpq\" rows must be arrays"))?
                    .iter()
                    .map(|x| x.as_u64().ok_or_else(|| bad("Hodge numbers must be non-negative integers")))
                    .collect()
            })
            .collect::<Result<_>>()?;
        if h.len() as u64 != dim + 1 {
            return Err(Error::InvalidDiamond(format!("\"dim\" is {dim} but the grid has {} rows", h.len())));
        }
        Self::new(h)
    }

    pub fn to_json(&self) -> Value {
        json!({ "dim": self.dim, "hpq": self.h })
    }
}

impl fmt::Debug for HodgeDiamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HodgeDiamond(dim={}, h={:?})", self.dim, self.h)
    }
}

/// `h_Y(s) = 1 + h^{1,0} s + ... + h^{d,0} s^d`.
///
/// The coefficient list is not trimmed: its length is `dim + 1`, so the last
/// entry is the geometric genus even when that is zero. Equality pads the
/// shorter list with zeros.
#[derive(Clone, Debug)]
pub struct GenusPolynomial {
    coeffs: Vec<BigInt>,
}

impl GenusPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Formal degree (the dimension it was built for).
    pub fn formal_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Top coefficient, `P_g`.
    pub fn geometric_genus(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn times(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::from(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

impl PartialEq for GenusPolynomial {
    fn eq(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i) == other.coeff(i))
    }
}

impl Eq for GenusPolynomial {}

impl fmt::Display for GenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}s"),
                _ => format!("{c}s^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
