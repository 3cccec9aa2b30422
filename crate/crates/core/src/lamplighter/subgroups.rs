//! The subgroups `W_{N,M}` and `H_{N,M}`, bounded normality searches and
//! subgroup triples `(s, H⁰, v)`.
//!
//! Membership of a subgroup is undecidable by finite search in general, so
//! the searches below only look at elements of the Cayley ball of a given
//! radius and report "none within bound" rather than a proof.

use crate::error::Result;

use super::action::act_level;
use super::graphs::cayley_ball;
use super::LampElement;

/// `g ∈ W_{N,M}`: `g` fixes `0^N` and its `X_k` exponent sum is `0 mod M`.
pub fn in_w(g: &LampElement, n: usize, m: usize) -> bool {
    let zero = vec![0; n];
    act_level(g, &zero) == zero && g.exp_x().rem_euclid(m as i64) == 0
}

/// `g ∈ H_{N,M}`: shift `≡ 0 mod M`, and for every residue class mod `N`
/// the lamp values at positions in that class sum to `0 mod k`.
pub fn in_h(g: &LampElement, n: usize, m: usize) -> bool {
    if g.shift().rem_euclid(m as i64) != 0 {
        return false;
    }
    if n == 0 {
        return true;
    }
    let k = g.k() as u64;
    let mut sums = vec![0u64; n];
    for (&p, &v) in g.lamps() {
        sums[p.rem_euclid(n as i64) as usize] += v as u64;
    }
    sums.iter().all(|s| s % k == 0)
}

/// A conjugate `g h g⁻¹` that leaves the subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityWitness {
    pub conjugator: LampElement,
    pub member: LampElement,
    pub conjugate: LampElement,
}

#[derive(Debug, Clone)]
pub struct NormalityReport {
    pub bound: usize,
    pub members_checked: usize,
    pub conjugates_checked: usize,
    pub witness: Option<NormalityWitness>,
}

impl NormalityReport {
    /// No violation was found within the bound.
    pub fn is_normal_evidence(&self) -> bool {
        self.witness.is_none()
    }
}

/// Conjugates every member of the radius-`bound` Cayley ball by
/// `b^{±1}` and `c^{±1}` and stops at the first conjugate outside the
/// subgroup.
pub fn normality_report<F>(pred: F, k: usize, bound: usize) -> Result<NormalityReport>
where
    F: Fn(&LampElement) -> bool,
{
    let ball = cayley_ball(k, bound)?;
    let k32 = k as u32;
    let conjugators = [
        LampElement::b(k32),
        LampElement::b(k32).inverse(),
        LampElement::c(k32),
        LampElement::c(k32).inverse(),
    ];
    let mut report = NormalityReport {
        bound,
        members_checked: 0,
        conjugates_checked: 0,
        witness: None,
    };
    for h in ball.elements.iter().filter(|h| pred(h)) {
        report.members_checked += 1;
        for g in &conjugators {
            report.conjugates_checked += 1;
            let x = g.conjugate(h);
            if !pred(&x) {
                report.witness = Some(NormalityWitness {
                    conjugator: g.clone(),
                    member: h.clone(),
                    conjugate: x,
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Triple `(s, H⁰, v)` of a subgroup: `sZ` is its image in `Z`,
/// `H⁰` its intersection with the lamp group, and `v b^s` a member.
#[derive(Debug, Clone)]
pub struct SubgroupTriple {
    pub s: i64,
    pub v: LampElement,
    /// Members of `H⁰` seen in the search ball.
    pub base_sample: Vec<LampElement>,
}

/// Reads off the triple from the members in the radius-`bound` ball. `s`
/// is the least positive shift seen (0 if none); `v` is the identity when
/// `b^s` is a member.
pub fn subgroup_triple<F>(pred: F, k: usize, bound: usize) -> Result<SubgroupTriple>
where
    F: Fn(&LampElement) -> bool,
{
    let ball = cayley_ball(k, bound)?;
    let k32 = k as u32;
    let members: Vec<&LampElement> = ball.elements.iter().filter(|h| pred(h)).collect();
    let s = members
        .iter()
        .map(|h| h.shift())
        .filter(|&s| s > 0)
        .min()
        .unwrap_or(0);
    let bs = LampElement::b(k32).pow(s);
    let v = if pred(&bs) {
        LampElement::identity(k32)
    } else {
        let h = members
            .iter()
            .find(|h| h.shift() == s)
            .expect("a member realizes the minimal shift");
        h.multiply(&bs.inverse())?
    };
    Ok(SubgroupTriple {
        s,
        v,
        base_sample: members
            .into_iter()
            .filter(|h| h.shift() == 0)
            .cloned()
            .collect(),
    })
}
