//! Exact characteristic polynomials of integer matrices, by evaluating
//! `det(xI - A)` at `x = 0, …, n` with fraction-free elimination and
//! interpolating.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::poly::IntPolynomial;

/// Determinant by Bareiss elimination; exact over the integers.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for i in 0..n - 1 {
        if a[i][i].is_zero() {
            match (i + 1..n).find(|&r| !a[r][i].is_zero()) {
                Some(r) => {
                    a.swap(i, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for r in i + 1..n {
            for c in i + 1..n {
                let v = (&a[r][c] * &a[i][i] - &a[r][i] * &a[i][c]) / &prev;
                a[r][c] = v;
            }
        }
        prev = a[i][i].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `det(xI - A)` for a square integer matrix.
pub fn charpoly_oracle(a: &[Vec<i64>]) -> Result<IntPolynomial> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidParameter("matrix is not square".into()));
    }
    let samples: Vec<BigInt> = (0..=n)
        .map(|x| {
            let m = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let d = if i == j { x as i64 } else { 0 };
                            BigInt::from(d - a[i][j])
                        })
                        .collect()
                })
                .collect();
            bareiss_det(m)
        })
        .collect();
    Ok(interpolate(&samples))
}

/// The polynomial of degree `≤ n` through `(i, values[i])`, `0 ≤ i ≤ n`,
/// via Newton's forward differences.
fn interpolate(values: &[BigInt]) -> IntPolynomial {
    let mut diffs: Vec<BigRational> = values.iter().cloned().map(BigRational::from_integer).collect();
    let n = diffs.len();
    for level in 1..n {
        for i in (level..n).rev() {
            diffs[i] = (&diffs[i] - &diffs[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // p(x) = Σ diffs[i] · x(x-1)…(x-i+1), accumulated by Horner.
    let mut acc: Vec<BigRational> = Vec::new();
    for i in (0..n).rev() {
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (j, c) in acc.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * BigRational::from_integer(BigInt::from(i));
        }
        next[0] += &diffs[i];
        acc = next;
    }
    IntPolynomial::new(
        acc.into_iter()
            .map(|c| {
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect(),
    )
}
