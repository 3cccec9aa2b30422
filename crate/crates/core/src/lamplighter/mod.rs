//! The lamplighter group `Z/k ≀ Z`, its action on the `k`-ary tree and on
//! spider-web vertices, and the graphs these actions produce.
//!
//! An element is a pair `(f, s)`: a finitely supported lamp configuration
//! `f: Z → Z/k` and a shift `s ∈ Z`, multiplied as
//! `(f, s)(f', s') = (f + τ_s f', s + s')` with `(τ_s f')(j) = f'(j - s)`.
//! So `b = (0, 1)`, `c = (δ_0, 0)` and `b^i c b^{-i} = (δ_i, 0)`.

mod action;
mod graphs;
mod kesten;
mod subgroups;

pub use action::{act_level, act_letter_level, sw_action};
pub use graphs::{
    cayley_ball, finite_quotient_cayley, schreier_level_graph, sw_action_graph, CayleyBall,
};
pub use kesten::kesten_measure;
pub use subgroups::{
    in_h, in_w, normality_report, subgroup_triple, NormalityReport, SubgroupTriple,
};

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LampElement {
    k: u32,
    lamps: BTreeMap<i64, u32>,
    shift: i64,
}

impl LampElement {
    pub fn identity(k: u32) -> Self {
        assert!(k >= 2, "lamplighter modulus must be at least 2");
        LampElement {
            k,
            lamps: BTreeMap::new(),
            shift: 0,
        }
    }

    /// Builds an element from arbitrary integer lamp values, reducing them
    /// mod `k` and dropping zeros.
    pub fn from_parts(k: u32, lamps: impl IntoIterator<Item = (i64, i64)>, shift: i64) -> Self {
        let mut e = LampElement::identity(k);
        for (pos, value) in lamps {
            e.add_lamp(pos, value);
        }
        e.shift = shift;
        e
    }

    pub fn b(k: u32) -> Self {
        LampElement::from_parts(k, [], 1)
    }

    pub fn c(k: u32) -> Self {
        LampElement::from_parts(k, [(0, 1)], 0)
    }

    /// `c̄_r = c^r b`.
    pub fn cbar(k: u32, r: u32) -> Self {
        LampElement::from_parts(k, [(0, r as i64)], 1)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Nonzero lamps, by position.
    pub fn lamps(&self) -> &BTreeMap<i64, u32> {
        &self.lamps
    }

    pub fn lamp(&self, pos: i64) -> u32 {
        self.lamps.get(&pos).copied().unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.lamps.is_empty()
    }

    fn add_lamp(&mut self, pos: i64, value: i64) {
        let k = self.k as i64;
        let v = (self.lamp(pos) as i64 + value).rem_euclid(k) as u32;
        if v == 0 {
            self.lamps.remove(&pos);
        } else {
            self.lamps.insert(pos, v);
        }
    }

    pub fn multiply(&self, other: &LampElement) -> Result<LampElement> {
        if self.k != other.k {
            return Err(Error::InvalidParameter(format!(
                "cannot multiply elements of L_{} and L_{}",
                self.k, other.k
            )));
        }
        let mut out = self.clone();
        for (&pos, &v) in &other.lamps {
            out.add_lamp(pos + self.shift, v as i64);
        }
        out.shift += other.shift;
        Ok(out)
    }

    pub fn inverse(&self) -> LampElement {
        LampElement::from_parts(
            self.k,
            self.lamps
                .iter()
                .map(|(&pos, &v)| (pos - self.shift, -(v as i64))),
            -self.shift,
        )
    }

    pub fn pow(&self, n: i64) -> LampElement {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = LampElement::identity(self.k);
        for _ in 0..n.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// `self · x · self⁻¹`.
    pub fn conjugate(&self, x: &LampElement) -> LampElement {
        &(self * x) * &self.inverse()
    }

    /// Exponent sum with respect to `X_k = {c̄_r}`; every `c̄_r` carries one
    /// `b`, so this is the shift.
    pub fn exp_x(&self) -> i64 {
        self.shift
    }

    /// Writes `self = ∏ (b^i c b^{-i})^{r_i} · b^s` as `(lamps, s)`.
    pub fn normal_form(&self) -> (Vec<(i64, u32)>, i64) {
        (
            self.lamps.iter().map(|(&p, &v)| (p, v)).collect(),
            self.shift,
        )
    }

    /// Random element with lamps in `[-window, window]` and shift in
    /// `[-window, window]`.
    pub fn random<R: Rng + ?Sized>(k: u32, window: i64, rng: &mut R) -> LampElement {
        let mut lamps = Vec::new();
        for pos in -window..=window {
            if rng.random_bool(0.5) {
                lamps.push((pos, rng.random_range(0..k as i64)));
            }
        }
        LampElement::from_parts(k, lamps, rng.random_range(-window..=window))
    }
}

impl std::ops::Mul for &LampElement {
    type Output = LampElement;

    /// Panics if the moduli differ; see [`LampElement::multiply`].
    fn mul(self, rhs: &LampElement) -> LampElement {
        self.multiply(rhs).expect("lamplighter moduli must agree")
    }
}

impl fmt::Display for LampElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = self
            .lamps
            .iter()
            .map(|(p, v)| match (*p, *v) {
                (0, 1) => "c".to_string(),
                (0, v) => format!("c^{v}"),
                (p, 1) => format!("b^{p} c b^{}", -p),
                (p, v) => format!("b^{p} c^{v} b^{}", -p),
            })
            .collect();
        if self.shift != 0 {
            parts.push(format!("b^{}", self.shift));
        }
        write!(f, "{}", parts.join(" · "))
    }
}

/// A generator of `L_k` in either presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    B,
    C,
    CBar(u32),
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: Generator) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inv(generator: Generator) -> Self {
        Letter {
            generator,
            inverse: true,
        }
    }

    pub fn element(self, k: u32) -> LampElement {
        let g = match self.generator {
            Generator::B => LampElement::b(k),
            Generator::C => LampElement::c(k),
            Generator::CBar(r) => LampElement::cbar(k, r),
        };
        if self.inverse {
            g.inverse()
        } else {
            g
        }
    }

    /// Contribution to the `X_k` exponent sum.
    pub fn exp_x(self) -> i64 {
        let e = match self.generator {
            Generator::B | Generator::CBar(_) => 1,
            Generator::C => 0,
        };
        if self.inverse {
            -e
        } else {
            e
        }
    }

    pub fn inverted(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.generator {
            Generator::B => write!(f, "b")?,
            Generator::C => write!(f, "c")?,
            Generator::CBar(r) => write!(f, "cbar{r}")?,
        }
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in the generators, read left to right as a product.
pub type Word = Vec<Letter>;

pub fn evaluate(word: &[Letter], k: u32) -> LampElement {
    word.iter()
        .fold(LampElement::identity(k), |acc, l| &acc * &l.element(k))
}

pub fn word_exp_x(word: &[Letter]) -> i64 {
    word.iter().map(|l| l.exp_x()).sum()
}

pub fn invert_word(word: &[Letter]) -> Word {
    word.iter().rev().map(|l| l.inverted()).collect()
}

/// `w^n` for `n ≥ 0`.
pub fn power_word(word: &[Letter], n: usize) -> Word {
    word.iter().copied().cycle().take(word.len() * n).collect()
}

/// `[x, y] = x⁻¹ y⁻¹ x y`.
pub fn commutator_word(x: &[Letter], y: &[Letter]) -> Word {
    let mut w = invert_word(x);
    w.extend(invert_word(y));
    w.extend_from_slice(x);
    w.extend_from_slice(y);
    w
}

fn b_power(n: i64) -> Word {
    let letter = if n >= 0 {
        Letter::new(Generator::B)
    } else {
        Letter::inv(Generator::B)
    };
    vec![letter; n.unsigned_abs() as usize]
}

/// Relators `c^k` and `[c, b^n c b^{-n}]` for `1 ≤ n ≤ n_max`.
pub fn classical_relators(k: u32, n_max: i64) -> Vec<Word> {
    let c = vec![Letter::new(Generator::C)];
    let mut out = vec![power_word(&c, k as usize)];
    for n in 1..=n_max {
        let mut conj = b_power(n);
        conj.extend_from_slice(&c);
        conj.extend(b_power(-n));
        out.push(commutator_word(&c, &conj));
    }
    out
}

/// Relators over `X_k`: `(c̄_1 b⁻¹)^k`, `(c̄_1 b⁻¹)^i b c̄_i⁻¹` for
/// `2 ≤ i ≤ k-1`, and `[c̄_1 b⁻¹, b^n c̄_1 b^{-n-1}]` for `1 ≤ n ≤ n_max`.
pub fn cbar_relators(k: u32, n_max: i64) -> Vec<Word> {
    let c = vec![Letter::new(Generator::CBar(1)), Letter::inv(Generator::B)];
    let mut out = vec![power_word(&c, k as usize)];
    for i in 2..k {
        let mut w = power_word(&c, i as usize);
        w.push(Letter::new(Generator::B));
        w.push(Letter::inv(Generator::CBar(i)));
        out.push(w);
    }
    for n in 1..=n_max {
        let mut conj = b_power(n);
        conj.push(Letter::new(Generator::CBar(1)));
        conj.extend(b_power(-n - 1));
        out.push(commutator_word(&c, &conj));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn c_to_the_k_is_trivial() {
        for k in 2..=6 {
            assert!(LampElement::c(k).pow(k as i64).is_identity());
        }
    }

    #[test]
    fn relators_evaluate_to_identity() {
        for k in [2, 3, 6] {
            for w in classical_relators(k, 8).iter().chain(&cbar_relators(k, 8)) {
                assert!(evaluate(w, k).is_identity(), "k={k}");
            }
        }
    }

    #[test]
    fn cbar1_times_b_inverse_is_c() {
        let w = [Letter::new(Generator::CBar(1)), Letter::inv(Generator::B)];
        assert_eq!(evaluate(&w, 2), LampElement::c(2));
    }

    #[test]
    fn exp_x_of_relator_word_is_zero() {
        let w = power_word(&[Letter::new(Generator::CBar(1)), Letter::inv(Generator::B)], 3);
        assert_eq!(word_exp_x(&w), 0);
        assert_eq!(Letter::new(Generator::CBar(1)).exp_x(), 1);
    }

    #[test]
    fn conjugating_c_by_b_moves_the_lamp() {
        let b = LampElement::b(3);
        let x = b.conjugate(&LampElement::c(3));
        assert_eq!(x, LampElement::from_parts(3, [(1, 1)], 0));
    }

    #[test]
    fn group_laws_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = LampElement::random(3, 4, &mut rng);
            let b = LampElement::random(3, 4, &mut rng);
            let c = LampElement::random(3, 4, &mut rng);
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert!((&a * &a.inverse()).is_identity());
            assert!((&a.inverse() * &a).is_identity());
        }
    }

    #[test]
    fn mismatched_moduli_are_rejected() {
        assert!(LampElement::b(2).multiply(&LampElement::b(3)).is_err());
    }
}
