//! The spectral measure of `Cay(L_k, X_k ∪ X_k⁻¹)`, truncated at a
//! maximal denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::Result;
use crate::families::check_k;
use crate::spectra::{AtomKey, SpectralMeasure};

/// Atoms at `2k cos(pπ/q)` for `2 ≤ q ≤ q_max` and `p` coprime to `q`,
/// each of weight `(k-1)²/(k^q - 1)`. The full measure has mass 1; the
/// truncation misses `O(q_max k^{-q_max})`.
pub fn kesten_measure(k: usize, q_max: u64) -> Result<SpectralMeasure> {
    check_k(k)?;
    let kb = BigInt::from(k);
    let num = BigInt::from(k - 1) * BigInt::from(k - 1);
    let mut m = SpectralMeasure::new(k as u64);
    for q in 2..=q_max {
        let weight = BigRational::new(num.clone(), kb.pow(q as u32) - 1);
        for p in (1..q).filter(|p| p.gcd(&q) == 1) {
            m.add(AtomKey::new(p, q), weight.clone());
        }
    }
    Ok(m)
}
