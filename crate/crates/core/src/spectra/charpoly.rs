//! Characteristic polynomials of weighted paths, cycles and spider-web
//! graphs (of the underlying non-oriented adjacency matrices).

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::families::{check_k, check_m};

use super::poly::IntPolynomial;

/// `P_i`, the characteristic polynomial of a path on `i` vertices with edge
/// weight `k`: `P_0 = 1`, `P_1 = x`, `P_i = x P_{i-1} - k² P_{i-2}`.
/// Its roots are `2k cos(tπ/(i+1))` for `1 ≤ t ≤ i`.
pub fn path_charpoly(i: usize, k: u64) -> IntPolynomial {
    let k2 = BigInt::from(k) * BigInt::from(k);
    let mut prev = IntPolynomial::one();
    if i == 0 {
        return prev;
    }
    let mut cur = IntPolynomial::x();
    for _ in 2..=i {
        let next = cur.shift_up().sub(&prev.scale(&k2));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `Q`, the characteristic polynomial of the weight-`k` oriented `M`-cycle
/// made symmetric: `2k^M (T_M(x/2k) - 1) = ∏_l (x - 2k cos(2πl/M))`. The
/// scaled Chebyshev polynomials `S_n = 2k^n T_n(x/2k)` satisfy `S_0 = 2`,
/// `S_1 = x`, `S_{n+1} = x S_n - k² S_{n-1}`.
pub fn cycle_charpoly(m: usize, k: u64) -> IntPolynomial {
    assert!(m >= 1, "cycle length must be at least 1");
    let k2 = BigInt::from(k) * BigInt::from(k);
    let mut prev = IntPolynomial::from_i64s(&[2]);
    let mut cur = IntPolynomial::x();
    for _ in 1..m {
        let next = cur.shift_up().sub(&prev.scale(&k2));
        prev = std::mem::replace(&mut cur, next);
    }
    let twice_km = BigInt::from(2) * BigInt::from(k).pow(m as u32);
    cur.sub(&IntPolynomial::constant(twice_km))
}

/// A product `∏ f_i^{e_i}`, kept factored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredCharPoly {
    pub factors: Vec<(IntPolynomial, BigUint)>,
}

impl FactoredCharPoly {
    pub fn total_degree(&self) -> BigUint {
        self.factors
            .iter()
            .map(|(f, e)| BigUint::from(f.degree().unwrap_or(0)) * e)
            .sum()
    }

    /// Multiplies everything out, refusing when the degree exceeds `cap`.
    pub fn expand(&self, cap: usize) -> Result<IntPolynomial> {
        let degree = self.total_degree();
        if degree > BigUint::from(cap) {
            return Err(Error::InvalidParameter(format!(
                "expansion of degree {degree} exceeds the cap {cap}"
            )));
        }
        let mut acc = IntPolynomial::one();
        for (f, e) in &self.factors {
            if e.is_zero() {
                continue;
            }
            acc = acc.mul(&f.pow(e.to_u64().expect("bounded by the cap")));
        }
        Ok(acc)
    }
}

/// Default cap for [`FactoredCharPoly::expand`].
pub const EXPAND_CAP: usize = 5000;

/// Characteristic polynomial of the underlying graph of `S_{k,N,M}`:
/// `Q · P_N^{M(k-1)} · ∏_{i=1}^{N-1} P_i^{M(k-1)²k^{N-i-1}}`.
pub fn spiderweb_charpoly(k: usize, n: usize, m: usize) -> Result<FactoredCharPoly> {
    check_k(k)?;
    check_m(m)?;
    let kk = k as u64;
    let mut factors = vec![(cycle_charpoly(m, kk), BigUint::from(1u32))];
    if n >= 1 {
        let base = BigUint::from(m) * BigUint::from(k - 1);
        factors.push((path_charpoly(n, kk), base.clone()));
        for i in 1..n {
            let e = &base * BigUint::from(k - 1) * BigUint::from(k).pow((n - i - 1) as u32);
            factors.push((path_charpoly(i, kk), e));
        }
    }
    Ok(FactoredCharPoly { factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_path_polynomials() {
        assert_eq!(path_charpoly(1, 2), IntPolynomial::x());
        assert_eq!(path_charpoly(2, 2), IntPolynomial::from_i64s(&[-4, 0, 1]));
        assert_eq!(path_charpoly(3, 2), IntPolynomial::from_i64s(&[0, -8, 0, 1]));
    }

    #[test]
    fn small_cycle_polynomials() {
        assert_eq!(cycle_charpoly(1, 2), IntPolynomial::from_i64s(&[-4, 1]));
        assert_eq!(cycle_charpoly(2, 2), IntPolynomial::from_i64s(&[-16, 0, 1]));
    }

    #[test]
    fn cycle_polynomial_matches_root_product() {
        for k in 2..=3u64 {
            for m in 1..=12usize {
                let q = cycle_charpoly(m, k);
                for x in [-3.3, -0.7, 0.0, 1.1, 2.9] {
                    let prod: f64 = (0..m)
                        .map(|l| {
                            x - 2.0 * k as f64 * (2.0 * std::f64::consts::PI * l as f64 / m as f64).cos()
                        })
                        .product();
                    let got = q.eval_f64(x);
                    assert!((got - prod).abs() <= 1e-9 * prod.abs().max(1.0), "m={m} x={x}");
                }
            }
        }
    }

    #[test]
    fn spider_web_polynomial_examples() {
        let p = spiderweb_charpoly(2, 1, 1).unwrap().expand(EXPAND_CAP).unwrap();
        assert_eq!(p, IntPolynomial::from_i64s(&[0, -4, 1]));
        let q = spiderweb_charpoly(2, 2, 2).unwrap().expand(EXPAND_CAP).unwrap();
        let want = IntPolynomial::from_i64s(&[-16, 0, 1])
            .mul(&IntPolynomial::from_i64s(&[-4, 0, 1]).pow(2))
            .mul(&IntPolynomial::from_i64s(&[0, 0, 1]));
        assert_eq!(q, want);
    }

    #[test]
    fn total_degree_grid() {
        for k in 2..=3 {
            for n in 0..=4 {
                for m in 1..=6 {
                    let d = spiderweb_charpoly(k, n, m).unwrap().total_degree();
                    assert_eq!(d, BigUint::from(m * k.pow(n as u32)));
                }
            }
        }
    }

    #[test]
    fn expansion_cap_is_enforced() {
        assert!(spiderweb_charpoly(3, 8, 1).unwrap().expand(EXPAND_CAP).is_err());
    }
}
