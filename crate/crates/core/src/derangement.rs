//! Derangements of paths and graphs, and the components of `Γ ⊗ C_M`.
//!
//! A Serre graph is oriented by keeping the lower edge id of every pair.
//! The derangement of a path counts edges traversed along that orientation
//! minus edges traversed against it.

use std::collections::{HashMap, VecDeque};

use num_integer::Integer;
use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::families::{check_m, cycle_m};
use crate::graph::{Graph, GraphKind};
use crate::morphisms::{GraphMorphism, IsoKind, IsoWitness};
use crate::products::tensor;

/// `+1` on the lower edge id of each pair of a Serre graph, `-1` on the
/// other.
pub fn orientation_signs(g: &Graph) -> Result<Vec<i8>> {
    g.expect_kind(GraphKind::Serre)?;
    Ok(g.edges()
        .iter()
        .map(|e| if e.id < e.inverse.expect("Serre edges are paired") { 1 } else { -1 })
        .collect())
}

/// Vertex classes of the underlying graph, each sorted, ordered by least
/// vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut uf = UnionFind::<usize>::new(n);
    for e in g.edges() {
        uf.union(e.src, e.dst);
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for v in 0..n {
        let root = uf.find(v);
        let i = *slot.entry(root).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[i].push(v);
    }
    blocks
}

/// A path in a Serre graph: a start vertex and composable edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub start: usize,
    pub edges: Vec<usize>,
}

impl Path {
    pub fn new(g: &Graph, start: usize, edges: Vec<usize>) -> Result<Self> {
        g.expect_kind(GraphKind::Serre)?;
        if start >= g.vertex_count() {
            return Err(Error::InvalidParameter(format!("vertex {start} out of range")));
        }
        let mut at = start;
        for &e in &edges {
            if e >= g.edge_count() || g.edge(e).src != at {
                return Err(Error::InvalidParameter(format!(
                    "edge {e} does not continue the path at vertex {at}"
                )));
            }
            at = g.edge(e).dst;
        }
        Ok(Path { start, edges })
    }

    pub fn end(&self, g: &Graph) -> usize {
        self.edges.last().map_or(self.start, |&e| g.edge(e).dst)
    }

    pub fn is_closed(&self, g: &Graph) -> bool {
        self.end(g) == self.start
    }

    /// No edge is immediately followed by its inverse.
    pub fn is_reduced(&self, g: &Graph) -> bool {
        self.edges.windows(2).all(|w| g.inverse(w[0]) != Some(w[1]))
    }

    /// `p̄`: the inverse edges in reverse order.
    pub fn reversed(&self, g: &Graph) -> Path {
        Path {
            start: self.end(g),
            edges: self
                .edges
                .iter()
                .rev()
                .map(|&e| g.inverse(e).expect("Serre edges are paired"))
                .collect(),
        }
    }

    /// `p` followed by `q`; `None` unless `q` starts where `p` ends.
    pub fn concat(&self, g: &Graph, q: &Path) -> Option<Path> {
        (self.end(g) == q.start).then(|| Path {
            start: self.start,
            edges: self.edges.iter().chain(&q.edges).copied().collect(),
        })
    }

    pub fn signature(&self, g: &Graph) -> Result<Vec<i8>> {
        let signs = orientation_signs(g)?;
        Ok(self.edges.iter().map(|&e| signs[e]).collect())
    }
}

pub fn path_derangement(g: &Graph, p: &Path) -> Result<i64> {
    Ok(p.signature(g)?.into_iter().map(i64::from).sum())
}

/// Signed edge list `(src, dst)` of the chosen orientation.
fn oriented_pairs(g: &Graph) -> Vec<(usize, usize)> {
    match g.kind() {
        GraphKind::Oriented => g.edges().iter().map(|e| (e.src, e.dst)).collect(),
        GraphKind::Serre => g
            .edges()
            .iter()
            .filter(|e| e.id < e.inverse.expect("Serre edges are paired"))
            .map(|e| (e.src, e.dst))
            .collect(),
    }
}

/// Potentials `ρ(w)` = derangement of a spanning-tree path from the least
/// vertex of each component, and the component index of each vertex.
fn potentials(g: &Graph) -> (Vec<i64>, Vec<usize>, usize) {
    let n = g.vertex_count();
    let pairs = oriented_pairs(g);
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for &(s, d) in &pairs {
        adj[s].push((d, 1));
        adj[d].push((s, -1));
    }
    let mut pot = vec![0i64; n];
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = count;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(w, s) in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = count;
                    pot[w] = pot[v] + s;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    (pot, comp, count)
}

/// Derangement of every component (ordered as in [`components`]): the gcd
/// of the derangements of the fundamental cycles of a spanning tree.
pub fn component_derangements(g: &Graph) -> Vec<u64> {
    let (pot, comp, count) = potentials(g);
    let mut out = vec![0u64; count];
    for (s, d) in oriented_pairs(g) {
        let cycle = (pot[s] + 1 - pot[d]).unsigned_abs();
        out[comp[s]] = out[comp[s]].gcd(&cycle);
    }
    out
}

/// `der(Γ)`: the non-negative generator of the closed-path derangements.
/// Disconnected graphs are rejected with the per-component values.
pub fn graph_derangement(g: &Graph) -> Result<u64> {
    let per_component = component_derangements(g);
    match per_component.as_slice() {
        [] => Ok(0),
        [d] => Ok(*d),
        _ => Err(Error::Disconnected { per_component }),
    }
}

/// A component count that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl std::fmt::Display for Count {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => write!(f, "infinite"),
        }
    }
}

/// Number of components of `Γ ⊗ C_M` by two formulas. `canonical` is
/// `gcd(der, M)` (and `M` when `der ≡ 0`); `residue_formula` is `|[der]|`
/// with the representative in `(-M/2, M/2]`. They differ when
/// `gcd(der, M) ≠ |[der]|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPrediction {
    pub derangement: u64,
    /// `None` for the infinite line.
    pub m: Option<u64>,
    pub canonical: Count,
    pub residue_formula: Count,
}

impl ComponentPrediction {
    pub fn discrepancy(&self) -> bool {
        self.canonical != self.residue_formula
    }
}

/// Predicts the component count of `g ⊗ C_M` (`m = None` for the line).
pub fn predict_components(g: &Graph, m: Option<u64>) -> Result<ComponentPrediction> {
    let der = graph_derangement(g)?;
    let (canonical, residue_formula) = match m {
        None => {
            let c = if der == 0 { Count::Infinite } else { Count::Finite(der) };
            (c, c)
        }
        Some(0) => return Err(Error::InvalidParameter("M must be at least 1".into())),
        Some(m) => {
            if der % m == 0 {
                (Count::Finite(m), Count::Finite(m))
            } else {
                let r = der % m;
                let rep = if 2 * r > m { m - r } else { r };
                (Count::Finite(der.gcd(&m)), Count::Finite(rep))
            }
        }
    };
    Ok(ComponentPrediction {
        derangement: der,
        m,
        canonical,
        residue_formula,
    })
}

/// The component of `(v, 0)` in `g ⊗ C_M` with vertices in BFS order.
pub fn root_component(g: &Graph, v: usize, m: usize) -> Result<crate::graph::Subgraph> {
    let t = tensor(g, &cycle_m(m)?)?;
    let root = v * m;
    let dist = t.distances_from(root, None);
    let mut order: Vec<usize> = (0..t.vertex_count()).filter(|&w| dist[w].is_some()).collect();
    order.sort_by_key(|&w| (dist[w], w));
    t.induced_subgraph(&order)
}

/// For `der(g) ≡ 0 mod M`, the rooted isomorphism `w ↦ (w, rank(w))` from
/// `g` onto the component of `(v, 0)` in `g ⊗ C_M`, where `rank(w)` is
/// the derangement of any path `v → w`, taken mod `M`.
pub fn tensor_cycle_iso(g: &Graph, v: usize, m: usize) -> Result<IsoWitness> {
    g.expect_kind(GraphKind::Oriented)?;
    check_m(m)?;
    if v >= g.vertex_count() {
        return Err(Error::InvalidParameter(format!("vertex {v} out of range")));
    }
    let der = graph_derangement(g)?;
    if der % m as u64 != 0 {
        return Err(Error::NotIsomorphic(format!(
            "derangement {der} is not divisible by M = {m}"
        )));
    }
    let (pot, _, _) = potentials(g);
    let mm = m as i64;
    let rank: Vec<usize> = pot.iter().map(|p| (p - pot[v]).rem_euclid(mm) as usize).collect();
    let comp = root_component(g, v, m)?;
    let vertex_pos: HashMap<usize, usize> =
        comp.vertex_map.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let edge_pos: HashMap<usize, usize> =
        comp.edge_map.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let lookup = |map: &HashMap<usize, usize>, id: usize| {
        map.get(&id).copied().ok_or_else(|| {
            Error::NotIsomorphic(format!("{id} lies outside the root component"))
        })
    };
    let vertex_map = (0..g.vertex_count())
        .map(|w| lookup(&vertex_pos, w * m + rank[w]))
        .collect::<Result<Vec<_>>>()?;
    let edge_map = g
        .edges()
        .iter()
        .map(|e| lookup(&edge_pos, e.id * m + rank[e.src]))
        .collect::<Result<Vec<_>>>()?;
    IsoWitness::new(
        g.clone(),
        comp.graph,
        GraphMorphism {
            vertex_map,
            edge_map,
        },
        IsoKind::Strong,
        Some((v, 0)),
    )
}
