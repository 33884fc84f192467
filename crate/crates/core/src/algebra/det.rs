//! Exact determinants: signed permutation sums, fraction-free elimination,
//! and evaluation/interpolation for bivariate polynomial matrices.

use num_bigint::BigInt;
use num_rational::BigRational;

use rayon::prelude::*;

use super::epoly::EPolynomial;
use super::laurent::LaurentClass;
use super::ring::{IntegralDomain, Ring};

/// How to evaluate a determinant over `Z[u, v]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetStrategy {
    /// Fraction-free elimination with exact polynomial division.
    Bareiss,
    /// Integer determinants on a grid of points followed by interpolation.
    EvalInterp,
    /// Leibniz expansion; factorial cost, intended for cross-checks.
    Permutations,
}

fn assert_square<R>(rows: &[Vec<R>]) {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
}

/// Leibniz formula: sum over permutations of signed products.
pub fn det_by_permutations<R: Ring>(rows: &[Vec<R>]) -> R {
    assert_square(rows);
    let n = rows.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc = R::zero();
    loop {
        let mut term = R::one();
        for (r, &c) in perm.iter().enumerate() {
            term = term.times(&rows[r][c]);
        }
        if permutation_is_odd(&perm) {
            acc = acc.minus(&term);
        } else {
            acc = acc.plus(&term);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    acc
}

/// Parity by inversion count.
pub fn permutation_is_odd(perm: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Advances to the next permutation in lexicographic order; returns false
/// after the last one.
pub fn next_permutation<T: Ord>(perm: &mut [T]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Fraction-free Gaussian elimination. Every division is exact in an
/// integral domain.
pub fn bareiss<R: IntegralDomain>(rows: &[Vec<R>]) -> R {
    assert_square(rows);
    let n = rows.len();
    if n == 0 {
        return R::one();
    }
    let mut m: Vec<Vec<R>> = rows.to_vec();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            for j in k + 1..n {
                let num = row[j].times(&pivot_row[k]).minus(&row[k].times(&pivot_row[j]));
                row[j] = num.exact_div(&prev).expect("Bareiss division must be exact");
            }
            row[k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.negated()
    } else {
        det
    }
}

/// Determinant over `Z[u, v]` with an explicit strategy.
pub fn poly_det_with(rows: &[Vec<EPolynomial>], strategy: DetStrategy) -> EPolynomial {
    match strategy {
        DetStrategy::Bareiss => bareiss(rows),
        DetStrategy::EvalInterp => det_eval_interp(rows),
        DetStrategy::Permutations => det_by_permutations(rows),
    }
}

/// Degree bound from row maxima; a determinant term picks one entry per row.
fn degree_bound(rows: &[Vec<EPolynomial>], deg: impl Fn(&EPolynomial) -> u32) -> usize {
    let by_rows: usize = rows.iter().map(|r| r.iter().map(&deg).max().unwrap_or(0) as usize).sum();
    let n = rows.len();
    let by_cols: usize = (0..n).map(|c| rows.iter().map(|r| deg(&r[c])).max().unwrap_or(0) as usize).sum();
    by_rows.min(by_cols)
}

/// Evaluates the matrix at `(du+1)(dv+1)` integer points, takes integer
/// determinants, and interpolates the result back into `Z[u, v]`.
pub fn det_eval_interp(rows: &[Vec<EPolynomial>]) -> EPolynomial {
    assert_square(rows);
    if rows.is_empty() {
        return EPolynomial::one();
    }
    let du = degree_bound(rows, EPolynomial::degree_u);
    let dv = degree_bound(rows, EPolynomial::degree_v);
    let values: Vec<Vec<BigInt>> = (0..=du)
        .into_par_iter()
        .map(|i| {
            let u = BigInt::from(i);
            (0..=dv)
                .map(|j| {
                    let v = BigInt::from(j);
                    let m: Vec<Vec<BigInt>> =
                        rows.iter().map(|r| r.iter().map(|e| e.eval(&u, &v)).collect()).collect();
                    bareiss(&m)
                })
                .collect()
        })
        .collect();
    // Interpolate in v for each fixed u, then in u for each v-degree.
    let v_coeffs: Vec<Vec<BigInt>> = values.iter().map(|row| interpolate_at_naturals(row)).collect();
    let mut terms = Vec::new();
    for q in 0..=dv {
        let column: Vec<BigInt> = v_coeffs.iter().map(|c| c[q].clone()).collect();
        for (p, c) in interpolate_at_naturals(&column).into_iter().enumerate() {
            terms.push((p as u32, q as u32, c));
        }
    }
    EPolynomial::from_terms(terms)
}

/// Monomial coefficients of the unique polynomial of degree `< len` taking
/// `values[x]` at `x = 0, 1, ..., len-1`. The polynomial must have integer
/// coefficients.
pub fn interpolate_at_naturals(values: &[BigInt]) -> Vec<BigInt> {
    let d = values.len();
    // Forward differences give Newton coefficients over falling factorials.
    let mut diffs: Vec<BigInt> = values.to_vec();
    let mut newton = Vec::with_capacity(d);
    for k in 0..d {
        newton.push(diffs[0].clone());
        for i in 0..d - k - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    let mut coeffs = vec![BigRational::zero(); d];
    // falling = x(x-1)...(x-k+1) in monomial form
    let mut falling: Vec<BigInt> = vec![BigInt::one()];
    let mut factorial = BigInt::one();
    for (k, delta) in newton.iter().enumerate() {
        if k > 0 {
            factorial *= BigInt::from(k);
        }
        let scale = BigRational::new(delta.clone(), factorial.clone());
        for (i, f) in falling.iter().enumerate() {
            coeffs[i] += &scale * BigRational::from_integer(f.clone());
        }
        let shift = BigInt::from(k);
        let mut next = vec![BigInt::zero(); falling.len() + 1];
        for (i, f) in falling.iter().enumerate() {
            next[i + 1] += f;
            next[i] -= f * &shift;
        }
        falling = next;
    }
    coeffs
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolated determinant has a non-integer coefficient");
            c.to_integer()
        })
        .collect()
}

/// Clears denominators to a common power of `uv`, takes the polynomial
/// determinant, and divides back.
pub fn laurent_det(rows: &[Vec<LaurentClass>]) -> LaurentClass {
    assert_square(rows);
    let l = rows.iter().flatten().map(LaurentClass::lpow).max().unwrap_or(0);
    let polys: Vec<Vec<EPolynomial>> =
        rows.iter().map(|r| r.iter().map(|c| c.numerator_over(l)).collect()).collect();
    LaurentClass::new(bareiss(&polys), l * rows.len() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_integer_determinants() {
        assert_eq!(bareiss(&ints(&[&[1, 1], &[1, 2]])), BigInt::from(1));
        assert_eq!(bareiss(&ints(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(bareiss(&ints(&[&[0, 0], &[1, 0]])), BigInt::from(0));
        assert_eq!(bareiss(&ints(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])), BigInt::from(6));
        assert_eq!(bareiss::<BigInt>(&[]), BigInt::from(1));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        // 3 - 2x + x^3
        let vals: Vec<BigInt> = (0..4i64).map(|x| BigInt::from(3 - 2 * x + x * x * x)).collect();
        let c = interpolate_at_naturals(&vals);
        assert_eq!(c, vec![3, -2, 0, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
    }

    #[test]
    fn permutation_order_and_parity() {
        let mut p = vec![0, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[1], vec![0, 2, 1]);
        let odd: Vec<bool> = seen.iter().map(|p| permutation_is_odd(p)).collect();
        assert_eq!(odd, vec![false, true, true, false, false, true]);
    }

    fn arb_int_matrix() -> impl Strategy<Value = Vec<Vec<BigInt>>> {
        (1usize..5).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec((-9i64..10).prop_map(BigInt::from), n), n)
        })
    }

    fn arb_poly() -> impl Strategy<Value = EPolynomial> {
        prop::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..4).prop_map(EPolynomial::from_terms)
    }

    fn arb_poly_matrix() -> impl Strategy<Value = Vec<Vec<EPolynomial>>> {
        (1usize..4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(arb_poly(), n), n))
    }

    proptest! {
        #[test]
        fn bareiss_matches_leibniz(m in arb_int_matrix()) {
            prop_assert_eq!(bareiss(&m), det_by_permutations(&m));
        }

        #[test]
        fn row_scaling_is_linear(m in arb_int_matrix(), row in 0usize..4, k in -5i64..6) {
            let row = row % m.len();
            let mut scaled = m.clone();
            for x in scaled[row].iter_mut() {
                *x *= k;
            }
            prop_assert_eq!(bareiss(&scaled), bareiss(&m) * BigInt::from(k));
        }

        #[test]
        fn polynomial_strategies_agree(m in arb_poly_matrix()) {
            let leibniz = poly_det_with(&m, DetStrategy::Permutations);
            prop_assert_eq!(poly_det_with(&m, DetStrategy::Bareiss), leibniz.clone());
            prop_assert_eq!(poly_det_with(&m, DetStrategy::EvalInterp), leibniz);
        }
    }
}
