//! Classes in `Z[u, v][(uv)^-1]`, the image of the ring with the Lefschetz
//! class inverted.

use std::fmt;

use super::epoly::EPolynomial;
use super::ring::Ring;

/// `numerator / (uv)^lpow`, normalized so that `uv` does not divide the
/// numerator while `lpow > 0`. Zero is the empty numerator with `lpow = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentClass {
    numerator: EPolynomial,
    lpow: u32,
}

impl LaurentClass {
    pub fn new(numerator: EPolynomial, lpow: u32) -> Self {
        let mut out = Self { numerator, lpow };
        out.normalize();
        out
    }

    pub fn numerator(&self) -> &EPolynomial {
        &self.numerator
    }

    pub fn lpow(&self) -> u32 {
        self.lpow
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.lpow = 0;
            return;
        }
        let k = self.numerator.lefschetz_valuation().min(self.lpow);
        if k > 0 {
            self.numerator = self.numerator.unshift_lefschetz(k);
            self.lpow -= k;
        }
    }

    /// Returns an equal class; normalization is idempotent.
    pub fn normalized(&self) -> Self {
        Self::new(self.numerator.clone(), self.lpow)
    }

    /// Multiplies by `(uv)^k`; negative `k` divides.
    pub fn mul_lpow(&self, k: i64) -> Self {
        if k >= 0 {
            let k = u32::try_from(k).expect("Lefschetz exponent out of range");
            let absorbed = k.min(self.lpow);
            let rest = k - absorbed;
            Self::new(self.numerator.shift(rest, rest), self.lpow - absorbed)
        } else {
            let k = u32::try_from(-k).expect("Lefschetz exponent out of range");
            Self::new(self.numerator.clone(), self.lpow + k)
        }
    }

    /// Numerator rewritten over the common denominator `(uv)^target`,
    /// `target >= lpow`.
    pub(crate) fn numerator_over(&self, target: u32) -> EPolynomial {
        let d = target - self.lpow;
        self.numerator.shift(d, d)
    }
}

impl From<EPolynomial> for LaurentClass {
    fn from(p: EPolynomial) -> Self {
        Self { numerator: p, lpow: 0 }
    }
}

impl Ring for LaurentClass {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        EPolynomial::one().into()
    }
    fn from_i64(n: i64) -> Self {
        EPolynomial::constant(n).into()
    }
    fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let l = self.lpow.max(rhs.lpow);
        Self::new(self.numerator_over(l).plus(&rhs.numerator_over(l)), l)
    }
    fn minus(&self, rhs: &Self) -> Self {
        let l = self.lpow.max(rhs.lpow);
        Self::new(self.numerator_over(l).minus(&rhs.numerator_over(l)), l)
    }
    fn times(&self, rhs: &Self) -> Self {
        Self::new(self.numerator.times(&rhs.numerator), self.lpow + rhs.lpow)
    }
    fn negated(&self) -> Self {
        Self { numerator: self.numerator.negated(), lpow: self.lpow }
    }
    /// Units are `±(uv)^k`, `k` any integer.
    fn unit_inverse(&self) -> Option<Self> {
        let k = self.numerator.lefschetz_valuation();
        let core = self.numerator.unshift_lefschetz(k);
        let sign = core.unit_inverse()?;
        Some(Self::new(sign, k).mul_lpow(i64::from(self.lpow)))
    }
    fn determinant(rows: &[Vec<Self>]) -> Self {
        crate::algebra::det::laurent_det(rows)
    }
}

impl fmt::Display for LaurentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lpow {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({})/(uv)", self.numerator),
            n => write!(f, "({})/(uv)^{n}", self.numerator),
        }
    }
}

impl fmt::Debug for LaurentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentClass({self})")
    }
}
