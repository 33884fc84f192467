//! Minimal ring hierarchy used by the series and determinant code.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic.
///
/// Methods take references so that big coefficients are never moved or
/// cloned implicitly.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;

    /// Multiplicative inverse when `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;

    fn is_unit(&self) -> bool {
        self.unit_inverse().is_some()
    }

    /// Determinant of a square matrix given as rows.
    fn determinant(rows: &[Vec<Self>]) -> Self {
        crate::algebra::det::det_by_permutations(rows)
    }
}

/// A ring without zero divisors that can divide exactly.
pub trait IntegralDomain: Ring {
    /// `self / divisor` when the quotient exists in the ring.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

pub trait Field: IntegralDomain {
    fn inverse(&self) -> Option<Self> {
        self.unit_inverse()
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn determinant(rows: &[Vec<Self>]) -> Self {
        crate::algebra::det::bareiss(rows)
    }
}

impl IntegralDomain for BigInt {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        Zero::is_zero(&r).then_some(q)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn determinant(rows: &[Vec<Self>]) -> Self {
        crate::algebra::det::bareiss(rows)
    }
}

impl IntegralDomain for BigRational {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            None
        } else {
            Some(self / divisor)
        }
    }
}

impl Field for BigRational {}

/// Binomial coefficient C(n, k) for arbitrary integer `n` and `k >= 0`,
/// using the falling-factorial definition (so C(n, 0) = 1 for every n).
pub fn binomial(n: &BigInt, k: u64) -> BigInt {
    let mut k = k;
    if !n.is_negative() {
        let kb = BigInt::from(k);
        if &kb > n {
            return Zero::zero();
        }
        // C(n, k) = C(n, n - k)
        let rest = n - &kb;
        if rest < kb {
            k = u64::try_from(&rest).expect("smaller than k");
        }
    }
    let mut acc = <BigInt as One>::one();
    for j in 0..k {
        acc = acc * (n - BigInt::from(j)) / BigInt::from(j + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&BigInt::from(4), 2), BigInt::from(6));
        assert_eq!(binomial(&BigInt::from(6), 5), BigInt::from(6));
        // multisets of size 3 over 2 symbols: aaa aab abb bbb
        assert_eq!(binomial(&BigInt::from(2 + 3 - 1), 3), BigInt::from(4));
        assert_eq!(binomial(&BigInt::from(-1), 0), BigInt::from(1));
        assert_eq!(binomial(&BigInt::from(3), 5), BigInt::from(0));
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![<BigInt as One>::one()];
        for n in 1..40u64 {
            let mut next = vec![<BigInt as One>::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(&BigInt::from(n), k as u64), v);
            }
        }
    }

    #[test]
    fn integer_units() {
        assert!(BigInt::from(-1).is_unit());
        assert!(!BigInt::from(2).is_unit());
        assert_eq!(BigInt::from(12).exact_div(&BigInt::from(4)), Some(BigInt::from(3)));
        assert_eq!(BigInt::from(12).exact_div(&BigInt::from(5)), None);
    }
}
