//! Rooted balls and the distance between marked graphs.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::morphisms::{canonical_form, find_iso, IsoConfig, IsoKind, Search};

/// Balls larger than this are refused.
pub const BALL_VERTEX_CAP: usize = 10_000;

/// The radius-`r` ball around a root. Vertex 0 is the root and
/// `vertex_map[i]` is the vertex of the parent graph at position `i`.
#[derive(Debug, Clone)]
pub struct RootedBall {
    pub graph: Graph,
    pub root: usize,
    pub radius: usize,
    pub vertex_map: Vec<usize>,
}

/// How balls are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BallMode {
    /// Compare orientations; otherwise compare underlying graphs.
    pub oriented: bool,
    /// Compare labels and weights.
    pub labeled: bool,
}

impl BallMode {
    pub const ORIENTED: BallMode = BallMode {
        oriented: true,
        labeled: false,
    };

    fn prepare(self, g: &Graph) -> Result<Graph> {
        if self.oriented || !g.is_oriented() {
            Ok(g.clone())
        } else {
            g.underlying()
        }
    }

    fn kind(self) -> IsoKind {
        if self.labeled {
            IsoKind::Strong
        } else {
            IsoKind::Weak
        }
    }
}

/// Vertices within distance `r` of `root` in the underlying graph, in BFS
/// order, with the edges that lie on some path of length `≤ r` from the
/// root: both ends in the ball and one end at distance `< r`.
pub fn ball(g: &Graph, root: usize, r: usize) -> Result<RootedBall> {
    if root >= g.vertex_count() {
        return Err(Error::InvalidParameter(format!("root {root} out of range")));
    }
    let dist = g.distances_from(root, Some(r));
    let mut order: Vec<usize> = (0..g.vertex_count()).filter(|&v| dist[v].is_some()).collect();
    if order.len() > BALL_VERTEX_CAP {
        return Err(Error::InvalidParameter(format!(
            "ball of radius {r} has more than {BALL_VERTEX_CAP} vertices"
        )));
    }
    order.sort_by_key(|&v| (dist[v], v != root, v));
    let sub = g.subgraph(&order, |e| {
        dist[e.src].unwrap().min(dist[e.dst].unwrap()) < r
    })?;
    Ok(RootedBall {
        graph: sub.graph,
        root: 0,
        radius: r,
        vertex_map: sub.vertex_map,
    })
}

impl RootedBall {
    /// Canonical string of the ball as a rooted graph under `mode`.
    pub fn canonical(&self, mode: BallMode, leaf_cap: u64) -> Result<String> {
        let g = mode.prepare(&self.graph)?;
        canonical_form(&g, mode.kind(), Some(self.root), leaf_cap)
    }

    /// Rooted isomorphism test; `None` when the search gives up.
    pub fn is_isomorphic(&self, other: &RootedBall, mode: BallMode) -> Result<Option<bool>> {
        let g = mode.prepare(&self.graph)?;
        let h = mode.prepare(&other.graph)?;
        let config = IsoConfig {
            vertex_cap: BALL_VERTEX_CAP,
            ..IsoConfig::default()
        };
        Ok(
            match find_iso(&g, &h, mode.kind(), Some((self.root, other.root)), &config)? {
                Search::Found(_) => Some(true),
                Search::NotFound => Some(false),
                Search::Undecided => None,
            },
        )
    }
}

/// Distance `1/(1+r)` between rooted graphs, where `r` is the largest
/// radius at which the balls agree; `0` if they agree at every radius.
/// Radii are tried in turn until both balls stop growing.
pub fn rooted_distance(
    g: &Graph,
    u: usize,
    h: &Graph,
    v: usize,
    mode: BallMode,
) -> Result<Ratio<u64>> {
    let mut prev_sizes = None;
    for r in 0.. {
        let a = ball(g, u, r)?;
        let b = ball(h, v, r)?;
        match a.is_isomorphic(&b, mode)? {
            Some(true) => {}
            Some(false) => return Ok(Ratio::new(1, r.max(1) as u64)),
            None => {
                return Err(Error::Undecided(format!(
                    "ball isomorphism at radius {r} exceeded the search cap"
                )))
            }
        }
        let sizes = (
            a.graph.vertex_count(),
            a.graph.edge_count(),
            b.graph.vertex_count(),
            b.graph.edge_count(),
        );
        if prev_sizes == Some(sizes) {
            return Ok(Ratio::new(0, 1));
        }
        prev_sizes = Some(sizes);
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle_m, de_bruijn};

    #[test]
    fn ball_sizes_in_a_cycle() {
        let g = cycle_m(10).unwrap();
        let b = ball(&g, 3, 2).unwrap();
        assert_eq!(b.graph.vertex_count(), 5);
        assert_eq!(b.graph.edge_count(), 4);
        assert_eq!(b.vertex_map[0], 3);
        assert_eq!(ball(&g, 0, 0).unwrap().graph.edge_count(), 0);
        assert_eq!(ball(&g, 0, 5).unwrap().graph.edge_count(), 10);
    }

    #[test]
    fn distance_to_self_is_zero() {
        let g = de_bruijn(2, 2).unwrap();
        assert_eq!(rooted_distance(&g, 1, &g, 1, BallMode::ORIENTED).unwrap(), Ratio::new(0, 1));
    }

    #[test]
    fn cycles_of_different_length() {
        let a = cycle_m(5).unwrap();
        let b = cycle_m(7).unwrap();
        // balls agree up to radius 2, then the 5-cycle closes up
        assert_eq!(rooted_distance(&a, 0, &b, 0, BallMode::ORIENTED).unwrap(), Ratio::new(1, 3));
    }

    #[test]
    fn de_bruijn_roots() {
        let a = de_bruijn(2, 1).unwrap();
        let b = de_bruijn(2, 2).unwrap();
        // "0" has a 1-ball on two vertices, "00" on three
        let d = rooted_distance(&a, 0, &b, 0, BallMode::ORIENTED).unwrap();
        assert_eq!(d, Ratio::new(1, 1));
    }
}
