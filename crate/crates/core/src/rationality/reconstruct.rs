use crate::algebra::{Field, SeriesPrefix, UniPoly};

use super::certificate::RationalCertificate;

/// Shortest linear recurrence generating `seq`.
///
/// Returns the connection polynomial `C` (with `C(0) = 1`) and the linear
/// complexity `L`: `sum_{i=0}^{L} C_i a_{n-i} = 0` for `L <= n < seq.len()`.
pub fn berlekamp_massey<F: Field>(seq: &[F]) -> (UniPoly<F>, usize) {
    let mut c: Vec<F> = vec![F::one()];
    let mut b: Vec<F> = vec![F::one()];
    let mut l = 0usize;
    let mut gap = 1usize;
    let mut last_disc = F::one();
    for n in 0..seq.len() {
        let mut disc = seq[n].clone();
        for i in 1..c.len().min(n + 1) {
            disc = disc.plus(&c[i].times(&seq[n - i]));
        }
        if disc.is_zero() {
            gap += 1;
            continue;
        }
        let coef = disc.times(&last_disc.inverse().expect("last discrepancy is nonzero"));
        let mut next = c.clone();
        if next.len() < b.len() + gap {
            next.resize(b.len() + gap, F::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            next[i + gap] = next[i + gap].minus(&coef.times(bi));
        }
        if 2 * l <= n {
            b = std::mem::replace(&mut c, next);
            l = n + 1 - l;
            last_disc = disc;
            gap = 1;
        } else {
            c = next;
            gap += 1;
        }
    }
    (UniPoly::new(c), l)
}

/// Reduced certificate `f = h / g` with `g(0) = 1` and `deg g <= d_max`.
///
/// The pair comes from the minimal recurrence of the prefix. It is only
/// accepted when the prefix determines it uniquely, i.e. `2L <= K + 1` for
/// linear complexity `L = max(deg g, deg h + 1)`. `None` means no such
/// pair is determined by the available terms.
pub fn reconstruct_certificate<F: Field>(f: &SeriesPrefix<F>, d_max: usize) -> Option<RationalCertificate<F>> {
    let (g, l) = berlekamp_massey(f.coeffs());
    let deg_g = g.degree().unwrap_or(0);
    if deg_g > d_max || 2 * l > f.order() + 1 {
        return None;
    }
    let h = if l == 0 {
        UniPoly::zero()
    } else {
        UniPoly::new(f.mul_poly(&g, l - 1))
    };
    let cert = RationalCertificate::new(g, h, f.order());
    debug_assert_eq!(super::check_global(f, &cert), Ok(true));
    Some(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BigInt, BigRational, Ring};
    use crate::rationality::check_global;
    use crate::zeta::{specialize, sym_coefficients, SpecializationMap};
    use crate::hodge::HodgeDiamond;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qp(v: &[i64]) -> UniPoly<BigRational> {
        UniPoly::new(v.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn geometric_sequence() {
        let f = SeriesPrefix::new((0..10).map(|i| q(1 << i)).collect());
        let cert = reconstruct_certificate(&f, 2).unwrap();
        assert_eq!(cert.g, qp(&[1, -2]));
        assert_eq!(cert.h, qp(&[1]));
    }

    #[test]
    fn specialized_projective_line() {
        let z = sym_coefficients(&HodgeDiamond::projective_space(1), 12);
        let f = specialize(&z.coeffs, &SpecializationMap::new(2, 2)).unwrap();
        let cert = reconstruct_certificate(&f, 2).unwrap();
        assert_eq!(cert.g, qp(&[1, -1]).times(&qp(&[1, -4])));
        assert_eq!(cert.h, qp(&[1]));
    }

    #[test]
    fn zero_series_and_polynomials() {
        let zero = SeriesPrefix::new(vec![q(0); 6]);
        let cert = reconstruct_certificate(&zero, 0).unwrap();
        assert!(cert.h.is_zero());
        // 3 + t^2 is a polynomial: g = 1, h = 3 + t^2
        let poly = SeriesPrefix::new([3, 0, 1, 0, 0, 0, 0].iter().map(|&x| q(x)).collect());
        let cert = reconstruct_certificate(&poly, 0).unwrap();
        assert_eq!((cert.g.clone(), cert.h.clone()), (qp(&[1]), qp(&[3, 0, 1])));
    }

    /// Exhaustive linear-algebra oracle: is there `g` with `deg g <= d`,
    /// `g(0) = 1`, and `g f` vanishing in degrees `e+1..=K`?
    fn recurrence_exists(a: &[BigRational], d: usize, e: usize) -> bool {
        let k = a.len() - 1;
        // unknowns g_1..g_d; equation per n in e+1..=k:
        //   a_n + sum_j g_j a_{n-j} = 0
        let mut rows: Vec<Vec<BigRational>> = (e + 1..=k)
            .map(|n| {
                let mut row: Vec<BigRational> =
                    (1..=d).map(|j| if j <= n { a[n - j].clone() } else { q(0) }).collect();
                row.push(-a[n].clone());
                row
            })
            .collect();
        // Gaussian elimination, then look for an inconsistent row.
        let mut r = 0;
        for col in 0..d {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && !row[col].is_zero() {
                    let factor = &row[col] / &pivot_row[col];
                    for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                        *x -= &factor * p;
                    }
                }
            }
            r += 1;
        }
        rows.iter().all(|row| !row[..d].iter().all(Ring::is_zero) || row[d].is_zero())
    }

    #[test]
    fn truncated_exponential_has_no_short_recurrence() {
        let mut fact = BigInt::from(1);
        let coeffs: Vec<BigRational> = (0..=10)
            .map(|n| {
                if n > 0 {
                    fact *= BigInt::from(n);
                }
                BigRational::new(BigInt::from(1), fact.clone())
            })
            .collect();
        // Any certificate determined by 11 terms has L <= 5, so deg g <= 3
        // forces deg h <= 4.
        for d in 0..=3 {
            assert!(!recurrence_exists(&coeffs, d, 4), "oracle found an order-{d} recurrence");
        }
        assert_eq!(reconstruct_certificate(&SeriesPrefix::new(coeffs), 3), None);
    }

    fn arb_rational_function() -> impl Strategy<Value = (UniPoly<BigRational>, UniPoly<BigRational>)> {
        (
            prop::collection::vec(-4i64..5, 0..5),
            prop::collection::vec(-4i64..5, 0..4),
        )
            .prop_map(|(gt, h)| {
                let mut g = vec![1];
                g.extend(gt);
                (qp(&g), qp(&h))
            })
    }

    proptest! {
        #[test]
        fn round_trip((g, h) in arb_rational_function()) {
            let f = SeriesPrefix::from_quotient(&h, &g, 8).unwrap();
            let cert = reconstruct_certificate(&f, 4).expect("deg g <= 4, deg h <= 3 fits in 9 terms");
            prop_assert_eq!(check_global(&f, &cert), Ok(true));
            prop_assert!(cert.same_function(&RationalCertificate::new(g, h, 8)));
        }

        #[test]
        fn agrees_with_recurrence_oracle(v in prop::collection::vec(-3i64..4, 9), d in 0usize..4) {
            let a: Vec<BigRational> = v.iter().map(|&x| q(x)).collect();
            // With 9 terms an accepted pair has L <= 4: deg g <= d, deg h <= 3.
            let found = reconstruct_certificate(&SeriesPrefix::new(a.clone()), d);
            prop_assert_eq!(found.is_some(), recurrence_exists(&a, d, 3));
            if let Some(cert) = &found {
                prop_assert!(cert.g.degree().unwrap_or(0) <= d);
                prop_assert!(cert.h.degree().is_none_or(|e| e <= 3));
            }
        }

        #[test]
        fn kronecker_direction(v in prop::collection::vec(-3i64..4, 1..5), g_tail in prop::collection::vec(-3i64..4, 1..4)) {
            let mut g = vec![1];
            g.extend(g_tail);
            let f = SeriesPrefix::from_quotient(&qp(&v), &qp(&g), 16).unwrap();
            let cert = reconstruct_certificate(&f, 4).unwrap();
            let d = cert.g.degree().unwrap_or(0);
            let e = cert.h.degree().unwrap_or(0);
            let reports = crate::rationality::determinantal_test(&f, d + 3).unwrap();
            for j in 0..3 {
                let r = &reports[d + j];
                let bound = (e + 1).saturating_sub(d + j);
                prop_assert!(r.entries.iter().filter(|x| x.offset >= bound).all(|x| x.is_zero()));
            }
        }

        #[test]
        fn converse_probe(v in prop::collection::vec(-3i64..4, 1..4), g_tail in prop::collection::vec(-3i64..4, 1..4)) {
            let mut g = vec![1];
            g.extend(g_tail);
            let f = SeriesPrefix::from_quotient(&qp(&v), &qp(&g), 18).unwrap();
            let reports = crate::rationality::determinantal_test(&f, 4).unwrap();
            // Only a long vanishing run counts as evidence.
            let run = |r: &crate::rationality::HankelReport<BigRational>| {
                r.first_stable_offset.map_or(0, |n| (r.entries.len() as i64 - n - 1) as usize)
            };
            let Some(r) = reports.iter().find(|r| run(r) >= 2 * r.window + 2) else {
                return Ok(());
            };
            let s = r.window;
            let n = (r.first_stable_offset.unwrap() + 1) as usize;
            let tail = SeriesPrefix::new(f.coeffs()[n..].to_vec());
            prop_assert!(reconstruct_certificate(&tail, s - 1).is_some(), "window {s} from offset {n}");
        }
    }
}
