//! Graph morphisms, their verification, and the search engines built on
//! them: isomorphism, automorphism orbits, coverings, Euler and Hamilton
//! circuits.

mod coverings;
mod iso;
mod orbits;
mod paths;
mod witnesses;

pub use coverings::{drop_first_symbol_map, prefix_truncation_map, slice_projection_map};
pub use iso::{canonical_form, find_iso, IsoConfig, Search};
pub use orbits::{automorphism_orbits, is_vertex_transitive, Transitivity};
pub use paths::{
    closed_path_census, eulerian_circuit, hamiltonian_cycle, hamiltonian_from_line_graph,
    verify_eulerian_circuit, verify_hamiltonian_cycle, DerangementFilter,
};
pub use witnesses::{gamma_bruijn_iso, transitivity_witnesses, TransitivityWitnesses};

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};

/// Whether labels (and weights) must be preserved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsoKind {
    Weak,
    Strong,
}

impl IsoKind {
    pub fn as_str(self) -> &'static str {
        match self {
            IsoKind::Weak => "weak",
            IsoKind::Strong => "strong",
        }
    }
}

impl std::str::FromStr for IsoKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weak" => Ok(IsoKind::Weak),
            "strong" => Ok(IsoKind::Strong),
            other => Err(Error::InvalidParameter(format!("unknown morphism kind `{other}`"))),
        }
    }
}

/// A pair of maps on vertex and edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMorphism {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

impl GraphMorphism {
    pub fn identity(g: &Graph) -> Self {
        GraphMorphism {
            vertex_map: (0..g.vertex_count()).collect(),
            edge_map: (0..g.edge_count()).collect(),
        }
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &GraphMorphism) -> GraphMorphism {
        GraphMorphism {
            vertex_map: self.vertex_map.iter().map(|&v| then.vertex_map[v]).collect(),
            edge_map: self.edge_map.iter().map(|&e| then.edge_map[e]).collect(),
        }
    }

    /// Inverse of a bijective morphism.
    pub fn inverse(&self) -> Result<GraphMorphism> {
        Ok(GraphMorphism {
            vertex_map: invert(&self.vertex_map, "vertex")?,
            edge_map: invert(&self.edge_map, "edge")?,
        })
    }

    pub fn is_bijective(&self, g: &Graph, h: &Graph) -> bool {
        self.vertex_map.len() == h.vertex_count()
            && self.edge_map.len() == h.edge_count()
            && is_permutation(&self.vertex_map)
            && is_permutation(&self.edge_map)
            && self.vertex_map.len() == g.vertex_count()
    }

    /// Checks that this is a morphism `g → h`: ι and τ commute with the maps,
    /// the involution is respected for Serre graphs, and labels and weights
    /// are preserved when `kind` is strong.
    pub fn check(&self, g: &Graph, h: &Graph, kind: IsoKind) -> Result<()> {
        if g.kind() != h.kind() {
            return Err(Error::KindMismatch {
                expected: g.kind().as_str(),
                found: h.kind().as_str(),
            });
        }
        if self.vertex_map.len() != g.vertex_count() || self.edge_map.len() != g.edge_count() {
            return Err(Error::NotMorphism("maps do not cover the source graph".into()));
        }
        if let Some(&v) = self.vertex_map.iter().find(|&&v| v >= h.vertex_count()) {
            return Err(Error::NotMorphism(format!("vertex image {v} out of range")));
        }
        if let Some(&e) = self.edge_map.iter().find(|&&e| e >= h.edge_count()) {
            return Err(Error::NotMorphism(format!("edge image {e} out of range")));
        }
        for e in g.edges() {
            let f = h.edge(self.edge_map[e.id]);
            if f.src != self.vertex_map[e.src] || f.dst != self.vertex_map[e.dst] {
                return Err(Error::NotMorphism(format!(
                    "edge {} does not commute with endpoints",
                    e.id
                )));
            }
            if g.kind() == GraphKind::Serre {
                let inv = e.inverse.expect("Serre edge has an inverse");
                if f.inverse != Some(self.edge_map[inv]) {
                    return Err(Error::NotMorphism(format!(
                        "edge {} does not commute with the involution",
                        e.id
                    )));
                }
            }
            if kind == IsoKind::Strong && (f.label != e.label || f.weight != e.weight) {
                return Err(Error::NotMorphism(format!(
                    "edge {} changes label or weight",
                    e.id
                )));
            }
        }
        Ok(())
    }

    pub fn is_morphism(&self, g: &Graph, h: &Graph, kind: IsoKind) -> bool {
        self.check(g, h, kind).is_ok()
    }

    pub fn is_isomorphism(&self, g: &Graph, h: &Graph, kind: IsoKind) -> bool {
        self.is_morphism(g, h, kind) && self.is_bijective(g, h)
    }

    /// True iff every star map is a bijection. Stars are taken in the Serre
    /// sense, so for oriented graphs both outgoing and incoming edges count.
    /// Errors if this is not a (weak) morphism.
    pub fn is_covering(&self, g: &Graph, h: &Graph) -> Result<bool> {
        self.check(g, h, IsoKind::Weak)?;
        let stars: [fn(&Graph, usize) -> &[usize]; 2] = [Graph::out_edges, Graph::in_edges];
        let oriented = g.is_oriented();
        for v in 0..g.vertex_count() {
            let w = self.vertex_map[v];
            for (i, star) in stars.iter().enumerate() {
                if i == 1 && !oriented {
                    break;
                }
                let source = star(g, v);
                let target = star(h, w);
                if source.len() != target.len() {
                    return Ok(false);
                }
                let image: HashSet<usize> = source.iter().map(|&e| self.edge_map[e]).collect();
                if image.len() != source.len() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn is_permutation(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    for &x in map {
        if x >= map.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

fn invert(map: &[usize], what: &str) -> Result<Vec<usize>> {
    if !is_permutation(map) {
        return Err(Error::NotIsomorphic(format!("{what} map is not a bijection")));
    }
    let mut inv = vec![0; map.len()];
    for (i, &x) in map.iter().enumerate() {
        inv[x] = i;
    }
    Ok(inv)
}

/// A morphism together with the graphs it relates and the kind it was
/// verified for. `root` records a pair of marked vertices when the
/// isomorphism is rooted.
#[derive(Debug, Clone)]
pub struct IsoWitness {
    pub source: Graph,
    pub target: Graph,
    pub morphism: GraphMorphism,
    pub kind: IsoKind,
    pub root: Option<(usize, usize)>,
}

impl IsoWitness {
    /// Builds a witness, failing unless the morphism is a verified
    /// isomorphism of the requested kind.
    pub fn new(
        source: Graph,
        target: Graph,
        morphism: GraphMorphism,
        kind: IsoKind,
        root: Option<(usize, usize)>,
    ) -> Result<Self> {
        let w = IsoWitness {
            source,
            target,
            morphism,
            kind,
            root,
        };
        w.verify()?;
        Ok(w)
    }

    /// Rechecks every vertex and edge.
    pub fn verify(&self) -> Result<()> {
        self.morphism.check(&self.source, &self.target, self.kind)?;
        if !self.morphism.is_bijective(&self.source, &self.target) {
            return Err(Error::NotIsomorphic("maps are not bijective".into()));
        }
        if let Some((a, b)) = self.root {
            if self.morphism.vertex_map.get(a) != Some(&b) {
                return Err(Error::NotIsomorphic("root is not preserved".into()));
            }
        }
        Ok(())
    }

    pub fn inverse(&self) -> Result<IsoWitness> {
        IsoWitness::new(
            self.target.clone(),
            self.source.clone(),
            self.morphism.inverse()?,
            self.kind,
            self.root.map(|(a, b)| (b, a)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle_m, de_bruijn};

    #[test]
    fn identity_is_a_strong_isomorphism() {
        let g = de_bruijn(2, 2).unwrap();
        let id = GraphMorphism::identity(&g);
        assert!(id.is_isomorphism(&g, &g, IsoKind::Strong));
        assert!(id.is_covering(&g, &g).unwrap());
    }

    #[test]
    fn rotation_of_cycle_is_an_automorphism() {
        let g = cycle_m(5).unwrap();
        let rot = GraphMorphism {
            vertex_map: (0..5).map(|i| (i + 2) % 5).collect(),
            edge_map: (0..5).map(|i| (i + 2) % 5).collect(),
        };
        assert!(rot.is_isomorphism(&g, &g, IsoKind::Strong));
        let inv = rot.inverse().unwrap();
        assert_eq!(rot.then(&inv), GraphMorphism::identity(&g));
    }

    #[test]
    fn broken_edge_map_is_rejected() {
        let g = cycle_m(3).unwrap();
        let bad = GraphMorphism {
            vertex_map: vec![0, 1, 2],
            edge_map: vec![1, 0, 2],
        };
        assert!(bad.check(&g, &g, IsoKind::Weak).is_err());
        assert!(bad.is_covering(&g, &g).is_err());
    }

    #[test]
    fn serre_morphism_must_respect_involution() {
        let g = cycle_m(3).unwrap().underlying().unwrap();
        let mut m = GraphMorphism::identity(&g);
        assert!(m.is_isomorphism(&g, &g, IsoKind::Strong));
        m.edge_map[3] = 0;
        assert!(m.check(&g, &g, IsoKind::Weak).is_err());
    }
}
