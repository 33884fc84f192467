use super::ring::Ring;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Coefficients `a_0, ..., a_K` of a power series truncated after `t^K`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesPrefix<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> SeriesPrefix<R> {
    /// Panics on an empty coefficient list; a prefix always holds `a_0`.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series prefix needs at least a_0");
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Truncation order `K`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SeriesPrefix<S> {
        SeriesPrefix::new(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> std::result::Result<S, E>) -> std::result::Result<SeriesPrefix<S>, E> {
        Ok(SeriesPrefix::new(self.coeffs.iter().map(f).collect::<std::result::Result<_, _>>()?))
    }

    /// Expansion of `h / g` through `t^order`; `g(0)` must be a unit.
    pub fn from_quotient(h: &UniPoly<R>, g: &UniPoly<R>, order: usize) -> Result<Self> {
        let inv = g.coeff(0).unit_inverse().ok_or(Error::NonUnitLeadingTerm)?;
        let mut out: Vec<R> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = h.coeff(n);
            for k in 1..=n.min(g.coeffs().len().saturating_sub(1)) {
                acc = acc.minus(&g.coeffs()[k].times(&out[n - k]));
            }
            out.push(acc.times(&inv));
        }
        Ok(Self::new(out))
    }

    /// Coefficients of `p * f` through `t^order` (order clamped to `K`).
    pub fn mul_poly(&self, p: &UniPoly<R>, order: usize) -> Vec<R> {
        let order = order.min(self.order());
        (0..=order)
            .map(|n| {
                p.coeffs()
                    .iter()
                    .take(n + 1)
                    .enumerate()
                    .fold(R::zero(), |acc, (k, c)| acc.plus(&c.times(&self.coeffs[n - k])))
            })
            .collect()
    }

    /// The `size x size` Hankel matrix `M[r][c] = a_{offset + r + c}`.
    pub fn hankel_matrix(&self, offset: usize, size: usize) -> Result<Vec<Vec<R>>> {
        if size == 0 {
            return Ok(Vec::new());
        }
        let needed = offset + 2 * (size - 1);
        if needed > self.order() {
            return Err(Error::InsufficientPrefix { needed, available: self.order() });
        }
        Ok((0..size)
            .map(|r| (0..size).map(|c| self.coeffs[offset + r + c].clone()).collect())
            .collect())
    }

    /// Determinant of the Hankel window starting at `a_offset`.
    pub fn hankel_det(&self, offset: usize, size: usize) -> Result<R> {
        Ok(R::determinant(&self.hankel_matrix(offset, size)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::det::det_by_permutations;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn z(v: &[i64]) -> SeriesPrefix<BigInt> {
        SeriesPrefix::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn hankel_examples() {
        let ones = z(&[1; 8]);
        for i in 0..=5 {
            assert_eq!(ones.hankel_det(i, 2).unwrap(), BigInt::from(0));
        }
        assert_eq!(z(&[1, 1, 2]).hankel_det(0, 2).unwrap(), BigInt::from(1));
        let geo = SeriesPrefix::new((0..10).map(|i| BigInt::from(2).pow(i)).collect());
        for i in 0..=7 {
            assert_eq!(geo.hankel_det(i, 2).unwrap(), BigInt::from(0));
        }
    }

    #[test]
    fn window_past_prefix_is_rejected() {
        assert_eq!(
            z(&[1, 1, 2]).hankel_det(1, 2),
            Err(Error::InsufficientPrefix { needed: 3, available: 2 })
        );
    }

    #[test]
    fn quotient_expansion() {
        let g = UniPoly::new(vec![BigInt::from(1), BigInt::from(-1), BigInt::from(-1)]);
        let fib = SeriesPrefix::from_quotient(&UniPoly::one(), &g, 7).unwrap();
        assert_eq!(fib, z(&[1, 1, 2, 3, 5, 8, 13, 21]));
        let bad = UniPoly::new(vec![BigInt::from(2)]);
        assert_eq!(SeriesPrefix::from_quotient(&UniPoly::one(), &bad, 3), Err(Error::NonUnitLeadingTerm));
    }

    proptest! {
        #[test]
        fn hankel_det_matches_leibniz(v in prop::collection::vec(-20i64..21, 9), size in 1usize..5, offset in 0usize..2) {
            let f = z(&v);
            prop_assume!(offset + 2 * (size - 1) <= f.order());
            let m = f.hankel_matrix(offset, size).unwrap();
            prop_assert_eq!(f.hankel_det(offset, size).unwrap(), det_by_permutations(&m));
        }
    }
}
