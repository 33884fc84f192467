//! Coefficients of `zeta_X(t) = sum [Sym^n X] t^n` under the E-realization.
//!
//! For a smooth projective `X` the symmetric-product generating identity
//! gives
//!
//! ```text
//! zeta_X(t) = prod_{p,q} (1 - u^p v^q t)^{-(-1)^{p+q} h^{p,q}}
//! ```
//!
//! so each `h^{p,q}` with `p + q` even contributes `h^{p,q}` geometric
//! factors and each odd one contributes `h^{p,q}` linear factors.

use num_bigint::BigInt;
use num_rational::BigRational;

use serde_json::{json, Value};

use crate::algebra::json::CoeffJson;
use crate::algebra::{EPolynomial, LaurentClass, Ring, SeriesPrefix, UniPoly};
use crate::error::{Error, Result};
use crate::hodge::HodgeDiamond;

/// Truncation order used when the caller does not pick one.
pub const DEFAULT_ORDER: usize = 32;

/// A zeta-function prefix together with the diamond it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaPrefix<R = EPolynomial> {
    pub source: HodgeDiamond,
    pub coeffs: SeriesPrefix<R>,
}

impl<R: CoeffJson> ZetaPrefix<R> {
    pub fn order(&self) -> usize {
        self.coeffs.order()
    }

    /// `{"diamond": ..., "K": k, "coeffs": [...]}`
    pub fn to_json(&self) -> Value {
        json!({
            "diamond": self.source.to_json(),
            "K": self.order(),
            "ring": R::RING_TAG,
            "coeffs": self.coeffs.coeffs().iter().map(CoeffJson::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Multiplies a prefix in place by `(1 - m t)^{-1}`: `b_n = a_n + m b_{n-1}`.
fn divide_by_linear(coeffs: &mut [EPolynomial], p: u32, q: u32) {
    for n in 1..coeffs.len() {
        let carry = coeffs[n - 1].shift(p, q);
        coeffs[n] = coeffs[n].plus(&carry);
    }
}

/// Multiplies a prefix in place by `(1 - m t)`: `b_n = a_n - m a_{n-1}`.
fn multiply_by_linear(coeffs: &mut [EPolynomial], p: u32, q: u32) {
    for n in (1..coeffs.len()).rev() {
        let carry = coeffs[n - 1].shift(p, q);
        coeffs[n] = coeffs[n].minus(&carry);
    }
}

/// `[Sym^n X]` for `n = 0..=order`, by factor-by-factor multiplication
/// truncated at `t^order`.
pub fn sym_coefficients(x: &HodgeDiamond, order: usize) -> ZetaPrefix {
    let mut coeffs = vec![EPolynomial::zero(); order + 1];
    coeffs[0] = EPolynomial::one();
    for (p, row) in x.grid().iter().enumerate() {
        for (q, &h) in row.iter().enumerate() {
            let (p, q) = (p as u32, q as u32);
            for _ in 0..h {
                if (p + q) % 2 == 0 {
                    divide_by_linear(&mut coeffs, p, q);
                } else {
                    multiply_by_linear(&mut coeffs, p, q);
                }
            }
        }
    }
    ZetaPrefix { source: x.clone(), coeffs: SeriesPrefix::new(coeffs) }
}

/// Numerator and denominator of the realized zeta function as polynomials
/// in `t`: `zeta_X(t) = numerator / denominator`, denominator(0) = 1.
pub fn zeta_rational_form(x: &HodgeDiamond) -> (UniPoly<EPolynomial>, UniPoly<EPolynomial>) {
    let mut num = UniPoly::one();
    let mut den = UniPoly::one();
    for (p, row) in x.grid().iter().enumerate() {
        for (q, &h) in row.iter().enumerate() {
            let factor = UniPoly::one_minus(EPolynomial::monomial(p as u32, q as u32, 1)).pow(h as u32);
            if (p + q) % 2 == 0 {
                den = den.times(&factor);
            } else {
                num = num.times(&factor);
            }
        }
    }
    (num, den)
}

/// Multiplies every coefficient by `(uv)^{-n}`. Negative `n` multiplies by
/// `(uv)^{|n|}`, so `invert_l(invert_l(z, n), -n) == z`.
pub fn invert_l<R>(z: &ZetaPrefix<R>, n: i64) -> ZetaPrefix<LaurentClass>
where
    R: Ring + Into<LaurentClass>,
{
    ZetaPrefix { source: z.source.clone(), coeffs: z.coeffs.map(|c| c.clone().into().mul_lpow(-n)) }
}

/// Evaluation `u -> u0`, `v -> v0` into the rationals. This is a ring
/// homomorphism on `Z[u, v]`, and on the Laurent ring whenever `u0 v0 != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpecializationMap {
    pub u0: BigInt,
    pub v0: BigInt,
}

impl SpecializationMap {
    pub fn new(u0: i64, v0: i64) -> Self {
        Self { u0: BigInt::from(u0), v0: BigInt::from(v0) }
    }
}

impl std::fmt::Display for SpecializationMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.u0, self.v0)
    }
}

/// Coefficient rings that can be pushed through a [`SpecializationMap`].
pub trait Specialize: Ring {
    fn specialize(&self, map: &SpecializationMap) -> Result<BigRational>;
}

impl Specialize for BigInt {
    fn specialize(&self, _: &SpecializationMap) -> Result<BigRational> {
        Ok(BigRational::from_integer(self.clone()))
    }
}

impl Specialize for BigRational {
    fn specialize(&self, _: &SpecializationMap) -> Result<BigRational> {
        Ok(self.clone())
    }
}

impl Specialize for EPolynomial {
    fn specialize(&self, map: &SpecializationMap) -> Result<BigRational> {
        Ok(BigRational::from_integer(self.eval(&map.u0, &map.v0)))
    }
}

impl Specialize for LaurentClass {
    fn specialize(&self, map: &SpecializationMap) -> Result<BigRational> {
        let num = self.numerator().eval(&map.u0, &map.v0);
        if self.lpow() == 0 {
            return Ok(BigRational::from_integer(num));
        }
        let l = &map.u0 * &map.v0;
        if l.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(BigRational::new(num, num_traits::pow(l, self.lpow() as usize)))
    }
}

/// Coefficientwise specialization of a prefix.
pub fn specialize<R: Specialize>(series: &SeriesPrefix<R>, map: &SpecializationMap) -> Result<SeriesPrefix<BigRational>> {
    series.try_map(|c| c.specialize(map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn poly(t: &[(u32, u32, i64)]) -> EPolynomial {
        EPolynomial::from_terms(t.iter().copied())
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn point_zeta_is_geometric() {
        let z = sym_coefficients(&HodgeDiamond::point(), 3);
        assert_eq!(z.coeffs.coeffs(), vec![EPolynomial::one(); 4].as_slice());
    }

    #[test]
    fn projective_line() {
        let z = sym_coefficients(&HodgeDiamond::projective_space(1), 2);
        assert_eq!(
            z.coeffs.coeffs(),
            &[poly(&[(0, 0, 1)]), poly(&[(0, 0, 1), (1, 1, 1)]), poly(&[(0, 0, 1), (1, 1, 1), (2, 2, 1)])]
        );
    }

    #[test]
    fn genus_two_first_coefficient() {
        let z = sym_coefficients(&HodgeDiamond::curve(2), 1);
        assert_eq!(z.coeffs.coeffs()[1], poly(&[(0, 0, 1), (1, 0, -2), (0, 1, -2), (1, 1, 1)]));
    }

    #[test]
    fn projective_plane_second_coefficient() {
        // Sym^2 P^2: complete homogeneous h_2(1, uv, u^2v^2)
        let z = sym_coefficients(&HodgeDiamond::projective_space(2), 2);
        assert_eq!(z.coeffs.coeffs()[2], poly(&[(0, 0, 1), (1, 1, 1), (2, 2, 2), (3, 3, 1), (4, 4, 1)]));
    }

    #[test]
    fn generated_prefix_matches_rational_form() {
        for x in [HodgeDiamond::curve(3), HodgeDiamond::surface(1, 2, 5).unwrap()] {
            let z = sym_coefficients(&x, 12);
            let (num, den) = zeta_rational_form(&x);
            assert_eq!(SeriesPrefix::from_quotient(&num, &den, 12).unwrap(), z.coeffs);
        }
    }

    #[test]
    fn curve_certificate_identity() {
        for g in 0..4u32 {
            let z = sym_coefficients(&HodgeDiamond::curve(u64::from(g)), 20);
            let den = UniPoly::one_minus(EPolynomial::one()).times(&UniPoly::one_minus(EPolynomial::lefschetz()));
            let num = UniPoly::one_minus(poly(&[(1, 0, 1)]))
                .pow(g)
                .times(&UniPoly::one_minus(poly(&[(0, 1, 1)])).pow(g));
            let prod = z.coeffs.mul_poly(&den, 20);
            for (n, c) in prod.iter().enumerate() {
                assert_eq!(c, &num.coeff(n), "g={g} n={n}");
            }
        }
    }

    #[test]
    fn invert_l_examples() {
        let z = sym_coefficients(&HodgeDiamond::projective_space(1), 4);
        let same = invert_l(&z, 0);
        assert_eq!(same.coeffs, z.coeffs.map(|c| LaurentClass::from(c.clone())));
        let inv = invert_l(&z, 1);
        assert_eq!(inv.coeffs.coeffs()[1], LaurentClass::new(poly(&[(0, 0, 1), (1, 1, 1)]), 1));
        assert_eq!(invert_l(&inv, -1), same);
    }

    #[test]
    fn specialization_examples() {
        let z = sym_coefficients(&HodgeDiamond::projective_space(1), 6);
        let s = specialize(&z.coeffs, &SpecializationMap::new(1, 1)).unwrap();
        assert_eq!(s.coeffs(), (1..=7).map(q).collect::<Vec<_>>().as_slice());
        let c2 = HodgeDiamond::curve(2).e_polynomial();
        assert_eq!(c2.specialize(&SpecializationMap::new(2, 3)).unwrap(), q(-3));
        let inv = invert_l(&z, 2);
        assert_eq!(specialize(&inv.coeffs, &SpecializationMap::new(0, 5)), Err(Error::ZeroDenominator));
        // lpow-free classes specialize fine even at uv = 0
        assert!(specialize(&invert_l(&z, 0).coeffs, &SpecializationMap::new(0, 5)).is_ok());
    }

    #[test]
    fn euler_characteristics_of_curve_symmetric_products() {
        // chi(Sym^n C_g) is the t^n coefficient of (1-t)^{2g-2}.
        for g in 0..5u64 {
            let z = sym_coefficients(&HodgeDiamond::curve(g), 10);
            let s = specialize(&z.coeffs, &SpecializationMap::new(1, 1)).unwrap();
            let expected = SeriesPrefix::from_quotient(
                &UniPoly::one_minus(BigInt::one()).pow((2 * g).saturating_sub(2) as u32),
                &UniPoly::one_minus(BigInt::one()).pow(if g == 0 { 2 } else { 0 }),
                10,
            )
            .unwrap();
            assert_eq!(s, expected.map(|c| BigRational::from_integer(c.clone())), "g={g}");
        }
    }

    fn arb_diamond() -> impl Strategy<Value = HodgeDiamond> {
        any::<u64>().prop_map(|seed| HodgeDiamond::random(&mut ChaCha8Rng::seed_from_u64(seed), 3, 3))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn first_coefficients(x in arb_diamond()) {
            let z = sym_coefficients(&x, 3);
            prop_assert_eq!(&z.coeffs.coeffs()[0], &EPolynomial::one());
            prop_assert_eq!(&z.coeffs.coeffs()[1], &x.e_polynomial());
        }

        #[test]
        fn specialization_commutes_with_invert_l(x in arb_diamond(), n in 0i64..4, u0 in 1i64..5, v0 in -4i64..5) {
            prop_assume!(v0 != 0);
            let map = SpecializationMap::new(u0, v0);
            let z = sym_coefficients(&x, 4);
            let plain = specialize(&z.coeffs, &map).unwrap();
            let inverted = specialize(&invert_l(&z, n).coeffs, &map).unwrap();
            let scale = num_traits::pow(q(u0 * v0), n as usize).recip();
            for (a, b) in plain.coeffs().iter().zip(inverted.coeffs()) {
                prop_assert_eq!(a * &scale, b.clone());
            }
        }

        #[test]
        fn specialization_is_a_homomorphism(x in arb_diamond(), y in arb_diamond(), u0 in -4i64..5, v0 in -4i64..5) {
            let map = SpecializationMap::new(u0, v0);
            let (a, b) = (x.e_polynomial(), y.e_polynomial());
            let (sa, sb) = (a.specialize(&map).unwrap(), b.specialize(&map).unwrap());
            prop_assert_eq!(a.times(&b).specialize(&map).unwrap(), &sa * &sb);
            prop_assert_eq!(a.plus(&b).specialize(&map).unwrap(), sa + sb);
        }
    }
}
