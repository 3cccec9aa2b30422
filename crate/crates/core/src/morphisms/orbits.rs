//! Automorphism orbits by seeded isomorphism searches.

use petgraph::unionfind::UnionFind;

use crate::error::Result;
use crate::graph::Graph;

use super::iso::{equitable_colors, search_morphism, IsoConfig, Search};
use super::IsoKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transitivity {
    Transitive,
    NotTransitive,
    Undecided,
}

impl Transitivity {
    pub fn as_str(self) -> &'static str {
        match self {
            Transitivity::Transitive => "transitive",
            Transitivity::NotTransitive => "not transitive",
            Transitivity::Undecided => "undecided",
        }
    }
}

/// Orbits of the automorphism group on vertices, each sorted, listed by
/// smallest member. Every automorphism found along the way merges all of
/// its cycles, so transitive graphs need few searches.
pub fn automorphism_orbits(
    g: &Graph,
    kind: IsoKind,
    config: &IsoConfig,
) -> Result<Search<Vec<Vec<usize>>>> {
    let n = g.vertex_count();
    let colors = equitable_colors(g, kind);
    let mut uf = UnionFind::<usize>::new(n);
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..n {
        let mut placed = false;
        for &r in &reps {
            if colors[r] != colors[v] {
                continue;
            }
            if uf.equiv(r, v) {
                placed = true;
                break;
            }
            match search_morphism(g, g, kind, Some((r, v)), config)? {
                Search::Found(m) => {
                    for (a, &b) in m.vertex_map.iter().enumerate() {
                        uf.union(a, b);
                    }
                    placed = true;
                    break;
                }
                Search::NotFound => {}
                Search::Undecided => return Ok(Search::Undecided),
            }
        }
        if !placed {
            reps.push(v);
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut index = std::collections::HashMap::new();
    for v in 0..n {
        let root = uf.find(v);
        let slot = *index.entry(root).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbits[slot].push(v);
    }
    Ok(Search::Found(orbits))
}

pub fn is_vertex_transitive(g: &Graph, kind: IsoKind, config: &IsoConfig) -> Result<Transitivity> {
    if g.vertex_count() <= 1 {
        return Ok(Transitivity::Transitive);
    }
    let colors = equitable_colors(g, kind);
    if colors.iter().any(|&c| c != colors[0]) {
        return Ok(Transitivity::NotTransitive);
    }
    Ok(match automorphism_orbits(g, kind, config)? {
        Search::Found(orbits) if orbits.len() == 1 => Transitivity::Transitive,
        Search::Found(_) => Transitivity::NotTransitive,
        _ => Transitivity::Undecided,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle_m, spider_web_m};

    fn transitivity(g: &Graph) -> Transitivity {
        is_vertex_transitive(g, IsoKind::Weak, &IsoConfig::default()).unwrap()
    }

    #[test]
    fn cycles_are_transitive() {
        for m in 1..=6 {
            assert_eq!(transitivity(&cycle_m(m).unwrap()), Transitivity::Transitive);
        }
    }

    #[test]
    fn spider_web_examples() {
        assert_eq!(
            transitivity(&spider_web_m(2, 2, 2).unwrap()),
            Transitivity::Transitive
        );
        assert_eq!(
            transitivity(&spider_web_m(2, 2, 1).unwrap()),
            Transitivity::NotTransitive
        );
    }

    #[test]
    fn de_bruijn_orbits_separate_loops() {
        let g = spider_web_m(2, 2, 1).unwrap();
        let orbits = automorphism_orbits(&g, IsoKind::Weak, &IsoConfig::default())
            .unwrap()
            .found()
            .unwrap();
        assert!(orbits.contains(&vec![0, 3]));
    }
}
