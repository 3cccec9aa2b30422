//! Atomic spectral measures with exact keys.
//!
//! An atom is keyed by a reduced fraction `p/q ∈ [0, 1]` and sits at
//! `2k cos(pπ/q)`; `0/1` is `2k` and `1/1` is `-2k`. Weights are exact
//! rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::families::{check_k, check_m};

/// A reduced fraction `p/q` with `0 ≤ p ≤ q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomKey {
    pub p: u64,
    pub q: u64,
}

impl AtomKey {
    pub fn new(p: u64, q: u64) -> Self {
        assert!(q > 0 && p <= q, "atom key must satisfy 0 ≤ p ≤ q, q > 0");
        let g = p.gcd(&q);
        AtomKey { p: p / g, q: q / g }
    }

    pub fn value(self, k: u64) -> f64 {
        2.0 * k as f64 * (self.p as f64 * std::f64::consts::PI / self.q as f64).cos()
    }

    /// Orders atoms by increasing position, i.e. decreasing `p/q`.
    pub fn position_cmp(&self, other: &AtomKey) -> Ordering {
        (other.p as u128 * self.q as u128).cmp(&(self.p as u128 * other.q as u128))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralMeasure {
    pub k: u64,
    pub atoms: BTreeMap<AtomKey, BigRational>,
}

impl SpectralMeasure {
    pub fn new(k: u64) -> Self {
        SpectralMeasure {
            k,
            atoms: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, key: AtomKey, weight: BigRational) {
        if weight.is_zero() {
            return;
        }
        let slot = self.atoms.entry(key).or_insert_with(BigRational::zero);
        *slot += weight;
    }

    pub fn total_mass(&self) -> BigRational {
        self.atoms.values().cloned().sum()
    }

    /// `(position, weight)` pairs in increasing position.
    pub fn numeric_atoms(&self) -> Vec<(f64, f64)> {
        let mut keys: Vec<&AtomKey> = self.atoms.keys().collect();
        keys.sort_by(|a, b| a.position_cmp(b));
        keys.into_iter()
            .map(|key| (key.value(self.k), to_f64(&self.atoms[key])))
            .collect()
    }
}

pub(crate) fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Kolmogorov distance `sup_x |F_a(x) - F_b(x)|` between two atomic
/// measures, computed exactly by sweeping the atoms in increasing position.
pub fn measure_distance_exact(a: &SpectralMeasure, b: &SpectralMeasure) -> Result<BigRational> {
    if a.k != b.k {
        return Err(Error::InvalidParameter(format!(
            "measures for k = {} and k = {} are not comparable",
            a.k, b.k
        )));
    }
    let mut keys: Vec<AtomKey> = a.atoms.keys().chain(b.atoms.keys()).copied().collect();
    keys.sort_by(|x, y| x.position_cmp(y));
    keys.dedup();
    let zero = BigRational::zero();
    let mut fa = BigRational::zero();
    let mut fb = BigRational::zero();
    let mut best = BigRational::zero();
    for key in keys {
        fa += a.atoms.get(&key).unwrap_or(&zero);
        fb += b.atoms.get(&key).unwrap_or(&zero);
        let d = (&fa - &fb).abs();
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

pub fn measure_distance(a: &SpectralMeasure, b: &SpectralMeasure) -> Result<f64> {
    measure_distance_exact(a, b).map(|d| to_f64(&d))
}

/// Eigenvalue multiplicities of the underlying graph of `S_{k,N,M}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormSpectrum {
    pub k: u64,
    pub vertex_count: BigUint,
    pub multiplicities: BTreeMap<AtomKey, BigUint>,
}

impl ClosedFormSpectrum {
    pub fn total(&self) -> BigUint {
        self.multiplicities.values().sum()
    }

    pub fn measure(&self) -> SpectralMeasure {
        let mut m = SpectralMeasure::new(self.k);
        let denom = BigInt::from(self.vertex_count.clone());
        for (&key, mult) in &self.multiplicities {
            m.add(key, BigRational::new(BigInt::from(mult.clone()), denom.clone()));
        }
        m
    }

    /// Every eigenvalue repeated by multiplicity, sorted increasingly.
    /// Refuses spectra with more than `cap` eigenvalues.
    pub fn eigenvalues(&self, cap: usize) -> Result<Vec<f64>> {
        if self.total() > BigUint::from(cap) {
            return Err(Error::InvalidParameter(format!(
                "spectrum has more than {cap} eigenvalues"
            )));
        }
        let mut out = Vec::new();
        for (key, mult) in &self.multiplicities {
            let v = key.value(self.k);
            out.extend(std::iter::repeat_n(v, mult.to_usize().unwrap()));
        }
        out.sort_by(f64::total_cmp);
        Ok(out)
    }
}

/// Closed-form spectrum of the underlying graph of `S_{k,N,M}`: `2k` once,
/// `-2k` once when `M` is even, and for reduced `p/q` with `1 ≤ p < q`
/// multiplicity `M(k-1)² Σ_{j=1}^{⌊N/q⌋} k^{N-jq} + M(k-1)·r₁ + 2·r₂`,
/// where `r₁ = [q | N+1]` and `r₂ = [2q | Mp]`. Denominators run up to
/// `max(N+1, M)`, which covers every cycle eigenvalue `2k cos(2πl/M)`.
pub fn closed_form_spectrum(k: usize, n: usize, m: usize) -> Result<ClosedFormSpectrum> {
    check_k(k)?;
    check_m(m)?;
    let kb = BigUint::from(k);
    let mut multiplicities = BTreeMap::new();
    multiplicities.insert(AtomKey::new(0, 1), BigUint::one());
    if m.is_multiple_of(2) {
        multiplicities.insert(AtomKey::new(1, 1), BigUint::one());
    }
    let path_coeff = BigUint::from(m) * BigUint::from(k - 1) * BigUint::from(k - 1);
    let top_coeff = BigUint::from(m) * BigUint::from(k - 1);
    let q_max = (n as u64 + 1).max(m as u64);
    for q in 2..=q_max {
        let mut inner = BigUint::zero();
        for j in 1..=(n as u64 / q) {
            inner += kb.pow((n as u64 - j * q) as u32);
        }
        let r1 = (n as u64 + 1).is_multiple_of(q);
        for p in 1..q {
            if p.gcd(&q) != 1 {
                continue;
            }
            let r2 = (m as u64 * p).is_multiple_of(2 * q);
            let mut mult = &path_coeff * &inner;
            if r1 {
                mult += &top_coeff;
            }
            if r2 {
                mult += 2u32;
            }
            if !mult.is_zero() {
                multiplicities.insert(AtomKey::new(p, q), mult);
            }
        }
    }
    Ok(ClosedFormSpectrum {
        k: k as u64,
        vertex_count: BigUint::from(m) * kb.pow(n as u32),
        multiplicities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(k: usize, n: usize, m: usize) -> Vec<f64> {
        closed_form_spectrum(k, n, m).unwrap().eigenvalues(10_000).unwrap()
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
    }

    #[test]
    fn small_spectra() {
        assert!(close(
            &values(2, 2, 2),
            &[-4.0, -2.0, -2.0, 0.0, 0.0, 2.0, 2.0, 4.0]
        ));
        assert!(close(&values(2, 1, 2), &[-4.0, 0.0, 0.0, 4.0]));
        assert!(close(&values(2, 1, 1), &[0.0, 4.0]));
    }

    #[test]
    fn totals_and_minus_2k() {
        for k in 2..=3 {
            for n in 0..=4 {
                for m in 1..=6 {
                    let s = closed_form_spectrum(k, n, m).unwrap();
                    assert_eq!(s.total(), s.vertex_count, "k={k} n={n} m={m}");
                    assert_eq!(
                        s.multiplicities.contains_key(&AtomKey::new(1, 1)),
                        m % 2 == 0
                    );
                }
            }
        }
    }

    #[test]
    fn distance_examples() {
        let mut a = SpectralMeasure::new(2);
        a.add(AtomKey::new(0, 1), BigRational::one());
        let mut b = SpectralMeasure::new(2);
        b.add(AtomKey::new(1, 1), BigRational::one());
        assert_eq!(measure_distance(&a, &a).unwrap(), 0.0);
        assert_eq!(measure_distance(&a, &b).unwrap(), 1.0);
        assert_eq!(measure_distance(&b, &a).unwrap(), 1.0);
    }

    #[test]
    fn measures_have_unit_mass() {
        let m = closed_form_spectrum(3, 3, 4).unwrap().measure();
        assert_eq!(m.total_mass(), BigRational::one());
    }
}
