//! Sparse bivariate integer polynomials in `u`, `v`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::ring::{IntegralDomain, Ring};

/// Exponent pair `(p, q)` for the monomial `u^p v^q`.
pub type Monomial = (u32, u32);

/// Dense accumulation is used when the product's exponent box has at most
/// this many cells.
const DENSE_PRODUCT_LIMIT: usize = 1 << 22;

/// Sparse polynomial in `Z[u, v]`.
///
/// Terms are kept in lexicographic `(p, q)` order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl EPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial<C: Into<BigInt>>(p: u32, q: u32, c: C) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((p, q), c);
        }
        Self { terms }
    }

    /// The Lefschetz class image `uv`.
    pub fn lefschetz() -> Self {
        Self::monomial(1, 1, 1)
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::new();
        for (p, q, c) in terms {
            out.add_term((p, q), c.into());
        }
        out
    }

    fn add_term(&mut self, key: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, p: u32, q: u32) -> BigInt {
        self.terms.get(&(p, q)).cloned().unwrap_or_default()
    }

    pub fn degree_u(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn degree_v(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    /// Largest `k` with `(uv)^k` dividing `self`; zero for the zero polynomial.
    pub fn lefschetz_valuation(&self) -> u32 {
        self.terms.keys().map(|&(p, q)| p.min(q)).min().unwrap_or(0)
    }

    /// Multiplies by the monomial `u^dp v^dq`.
    pub fn shift(&self, dp: u32, dq: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(p, q), c)| ((p + dp, q + dq), c.clone())).collect(),
        }
    }

    /// Divides by `(uv)^k`; the caller guarantees divisibility.
    pub(crate) fn unshift_lefschetz(&self, k: u32) -> Self {
        debug_assert!(self.lefschetz_valuation() >= k || self.terms.is_empty());
        Self {
            terms: self.terms.iter().map(|(&(p, q), c)| ((p - k, q - k), c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::new();
        }
        Self { terms: self.terms.iter().map(|(k, c)| (*k, c * s)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(1);
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }

    /// Evaluates at integer `(u, v)`.
    pub fn eval(&self, u: &BigInt, v: &BigInt) -> BigInt {
        if self.terms.is_empty() {
            return BigInt::zero();
        }
        let up = powers(u, self.degree_u());
        let vp = powers(v, self.degree_v());
        self.terms
            .iter()
            .fold(BigInt::zero(), |acc, (&(p, q), c)| acc + c * &up[p as usize] * &vp[q as usize])
    }

    fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    fn mul_sparse(&self, rhs: &Self) -> Self {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (&(p1, q1), c1) in &self.terms {
            for (&(p2, q2), c2) in &rhs.terms {
                *acc.entry((p1 + p2, q1 + q2)).or_default() += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Self { terms: acc }
    }

    fn mul_dense(&self, rhs: &Self, du: usize, dv: usize) -> Self {
        let width = dv + 1;
        let mut acc = vec![BigInt::zero(); (du + 1) * width];
        for (&(p1, q1), c1) in &self.terms {
            for (&(p2, q2), c2) in &rhs.terms {
                let idx = (p1 + p2) as usize * width + (q1 + q2) as usize;
                acc[idx] += c1 * c2;
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (((idx / width) as u32, (idx % width) as u32), c))
            .collect();
        Self { terms }
    }
}

fn powers(x: &BigInt, max: u32) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(BigInt::one());
    for i in 0..max as usize {
        out.push(&out[i] * x);
    }
    out
}

impl Ring for EPolynomial {
    fn zero() -> Self {
        Self::new()
    }
    fn one() -> Self {
        Self::constant(1)
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(n)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.terms.is_empty() || rhs.terms.is_empty() {
            return Self::new();
        }
        let du = (self.degree_u() + rhs.degree_u()) as usize;
        let dv = (self.degree_v() + rhs.degree_v()) as usize;
        let cells = (du + 1).saturating_mul(dv + 1);
        let pairs = self.terms.len().saturating_mul(rhs.terms.len());
        if cells <= DENSE_PRODUCT_LIMIT && cells <= pairs.saturating_mul(8) {
            self.mul_dense(rhs, du, dv)
        } else {
            self.mul_sparse(rhs)
        }
    }
    fn negated(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_constant() && self.coeff(0, 0).abs() == BigInt::one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn determinant(rows: &[Vec<Self>]) -> Self {
        crate::algebra::det::bareiss(rows)
    }
}

impl IntegralDomain for EPolynomial {
    /// Exact multivariate division by repeated leading-term cancellation.
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let ((dp, dq), dc) = divisor.leading()?;
        let dc = dc.clone();
        let mut rem = self.terms.clone();
        let mut quotient = BTreeMap::new();
        while let Some((&(p, q), c)) = rem.iter().next_back() {
            if p < dp || q < dq {
                return None;
            }
            let (qc, r) = c.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let (tp, tq) = (p - dp, q - dq);
            for (&(p2, q2), c2) in &divisor.terms {
                let key = (p2 + tp, q2 + tq);
                let entry = rem.entry(key).or_default();
                *entry -= &qc * c2;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quotient.insert((tp, tq), qc);
        }
        Some(Self { terms: quotient })
    }
}

impl From<i64> for EPolynomial {
    fn from(n: i64) -> Self {
        Self::constant(n)
    }
}

impl fmt::Display for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(p, q), c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == BigInt::one();
            if !unit || (p == 0 && q == 0) {
                write!(f, "{mag}")?;
            }
            for (var, e) in [("u", p), ("v", q)] {
                match e {
                    0 => {}
                    1 => write!(f, "{var}")?,
                    _ => write!(f, "{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p1() -> EPolynomial {
        EPolynomial::from_terms([(0, 0, 1), (1, 1, 1)])
    }

    #[test]
    fn binomial_square() {
        let sq = p1().times(&p1());
        assert_eq!(sq, EPolynomial::from_terms([(0, 0, 1), (1, 1, 2), (2, 2, 1)]));
        assert_eq!(sq.to_string(), "1 + 2uv + u^2v^2");
    }

    #[test]
    fn zero_absorbs() {
        assert!(p1().times(&EPolynomial::new()).is_zero());
        assert_eq!(EPolynomial::from_terms([(1, 2, 3), (1, 2, -3)]), EPolynomial::new());
    }

    #[test]
    fn exact_division() {
        let a = EPolynomial::from_terms([(0, 0, 1), (1, 0, -2), (0, 1, -2), (1, 1, 1)]);
        let prod = a.times(&p1());
        assert_eq!(prod.exact_div(&p1()), Some(a.clone()));
        assert_eq!(prod.exact_div(&a), Some(p1()));
        assert_eq!(p1().exact_div(&EPolynomial::monomial(1, 0, 1)), None);
        assert_eq!(EPolynomial::constant(3).exact_div(&EPolynomial::constant(2)), None);
        assert_eq!(EPolynomial::new().exact_div(&a), Some(EPolynomial::new()));
    }

    #[test]
    fn evaluation() {
        let a = EPolynomial::from_terms([(0, 0, 1), (1, 0, -2), (0, 1, -2), (1, 1, 1)]);
        assert_eq!(a.eval(&BigInt::from(2), &BigInt::from(3)), BigInt::from(-3));
    }

    fn arb_poly() -> impl Strategy<Value = EPolynomial> {
        prop::collection::vec((0u32..4, 0u32..4, -5i64..6), 0..6).prop_map(EPolynomial::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.times(&b), b.times(&a));
            prop_assert_eq!(a.plus(&b), b.plus(&a));
            prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
            prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
            prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
            prop_assert_eq!(a.minus(&a), EPolynomial::new());
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn dense_and_sparse_products_agree(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let du = (a.degree_u() + b.degree_u()) as usize;
            let dv = (a.degree_v() + b.degree_v()) as usize;
            prop_assert_eq!(a.mul_dense(&b, du, dv), a.mul_sparse(&b));
        }

        #[test]
        fn division_inverts_product(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(a.times(&b).exact_div(&b), Some(a));
        }
    }
}
