//! Statistics of rooted balls in finite graphs, compared against balls of
//! the lamplighter Cayley graph.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::ball::{ball, rooted_distance, BallMode, RootedBall};
use crate::error::Result;
use crate::graph::Graph;
use crate::lamplighter::{cayley_ball, kesten_measure};
use crate::products::tensor;
use crate::spectra::{closed_form_spectrum, measure_distance};

/// Leaf cap used when canonicalising balls.
pub const BALL_LEAF_CAP: u64 = 200_000;

/// Denominator cutoff of the Kesten measure used as the spectral reference.
pub const KESTEN_QMAX: u64 = 30;

/// Frequencies of isomorphism classes of `r`-balls, keyed by canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallDistribution {
    pub radius: usize,
    pub classes: BTreeMap<String, u64>,
    pub total: u64,
}

impl BallDistribution {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn frequency(&self, class: &str) -> Ratio<u64> {
        Ratio::new(self.classes.get(class).copied().unwrap_or(0), self.total.max(1))
    }

    pub fn is_dirac(&self) -> bool {
        self.classes.len() == 1
    }
}

/// Buckets the `r`-ball of every vertex by rooted isomorphism class.
pub fn empirical_root_measure(g: &Graph, r: usize, mode: BallMode) -> Result<BallDistribution> {
    let mut classes = BTreeMap::new();
    for v in 0..g.vertex_count() {
        let key = ball(g, v, r)?.canonical(mode, BALL_LEAF_CAP)?;
        *classes.entry(key).or_insert(0) += 1;
    }
    Ok(BallDistribution {
        radius: r,
        classes,
        total: g.vertex_count() as u64,
    })
}

/// Fraction of vertices of `g` whose `r`-ball is isomorphic, as a rooted
/// oriented unlabelled graph, to the `r`-ball of `reference`.
pub fn match_fraction(g: &Graph, r: usize, reference: &RootedBall) -> Result<Ratio<u64>> {
    let target = ball(&reference.graph, reference.root, r)?.canonical(BallMode::ORIENTED, BALL_LEAF_CAP)?;
    let dist = empirical_root_measure(g, r, BallMode::ORIENTED)?;
    Ok(dist.frequency(&target))
}

/// Two rooted pairs whose products are compared.
#[derive(Debug, Clone)]
pub struct ProductSample {
    pub g: (Graph, usize),
    pub h: (Graph, usize),
    pub p: (Graph, usize),
    pub q: (Graph, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    /// `d((g⊗p, (v,x)), (h⊗q, (w,y)))`.
    pub product: Ratio<u64>,
    /// `max(d((g,v),(h,w)), d((p,x),(q,y)))`.
    pub bound: Ratio<u64>,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.product <= self.bound
    }
}

/// Checks that the distance between rooted products is at most the larger
/// distance between the factors, in the oriented metric.
pub fn product_distance_bound_check(samples: &[ProductSample]) -> Result<Vec<BoundCheck>> {
    let mode = BallMode::ORIENTED;
    samples
        .iter()
        .map(|s| {
            let gp = tensor(&s.g.0, &s.p.0)?;
            let hq = tensor(&s.h.0, &s.q.0)?;
            let product = rooted_distance(
                &gp,
                s.g.1 * s.p.0.vertex_count() + s.p.1,
                &hq,
                s.h.1 * s.q.0.vertex_count() + s.q.1,
                mode,
            )?;
            let left = rooted_distance(&s.g.0, s.g.1, &s.h.0, s.h.1, mode)?;
            let right = rooted_distance(&s.p.0, s.p.1, &s.q.0, s.q.1, mode)?;
            Ok(BoundCheck {
                product,
                bound: left.max(right),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub match_fraction: f64,
    pub spectral_distance: f64,
}

pub const CONVERGENCE_CSV_HEADER: &str = "N,M,r,match_fraction,spectral_distance";

impl ConvergenceRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.n, self.m, self.r, self.match_fraction, self.spectral_distance
        )
    }
}

/// Rows for one `(N, M)`: match fractions of `S_{k,N,M}` against the
/// Cayley ball for `r ≤ r_max`, and the distance of its spectral measure
/// to the Kesten measure (the same on every row).
pub fn convergence_rows(
    k: usize,
    n: usize,
    m: usize,
    r_max: usize,
    reference: &RootedBall,
) -> Result<Vec<ConvergenceRow>> {
    let g = crate::families::spider_web_m(k, n, m)?;
    let kesten = kesten_measure(k, KESTEN_QMAX)?;
    let spectral_distance = measure_distance(&closed_form_spectrum(k, n, m)?.measure(), &kesten)?;
    (0..=r_max)
        .map(|r| {
            let f = match_fraction(&g, r, reference)?;
            Ok(ConvergenceRow {
                n,
                m,
                r,
                match_fraction: *f.numer() as f64 / *f.denom() as f64,
                spectral_distance,
            })
        })
        .collect()
}

/// [`convergence_rows`] for every pair, in order.
pub fn convergence_report(
    k: usize,
    pairs: &[(usize, usize)],
    r_max: usize,
) -> Result<Vec<ConvergenceRow>> {
    let reference = cayley_ball(k, r_max)?.ball;
    let mut rows = Vec::new();
    for &(n, m) in pairs {
        rows.extend(convergence_rows(k, n, m, r_max, &reference)?);
    }
    Ok(rows)
}
