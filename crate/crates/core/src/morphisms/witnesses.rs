//! Explicit isomorphisms and automorphisms built without search.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::families::{check_k, check_m, de_bruijn, pow, spider_web_m};
use crate::graph::Graph;
use crate::lamplighter::schreier_level_graph;
use crate::products::{de_bruijn_line_iso, gamma_line_iso, line_graph, line_map};

use super::{GraphMorphism, IsoKind, IsoWitness};

/// Weak isomorphism `Γ_{k,N} → B_{k,N}`, built by induction: the roses
/// match loop `c̄_i` with `R_i`, and level `N` is
/// `β ∘ L(φ_{N-1}) ∘ γ⁻¹` where `γ: L(Γ_{N-1}) → Γ_N` and
/// `β: L(B_{N-1}) → B_N` are the explicit line-graph isomorphisms.
pub fn gamma_bruijn_iso(k: usize, n: usize) -> Result<IsoWitness> {
    check_k(k)?;
    let gamma0 = schreier_level_graph(k, 0)?;
    let mut phi = GraphMorphism::identity(&gamma0);
    for level in 1..=n {
        let gamma = gamma_line_iso(k, level - 1)?;
        let beta = de_bruijn_line_iso(k, level - 1)?;
        let lg = line_graph(&schreier_level_graph(k, level - 1)?)?;
        let lb = line_graph(&de_bruijn(k, level - 1)?)?;
        let lphi = line_map(&phi, &lg, &lb)?;
        phi = gamma.morphism.inverse()?.then(&lphi).then(&beta.morphism);
    }
    IsoWitness::new(
        schreier_level_graph(k, n)?,
        de_bruijn(k, n)?,
        phi,
        IsoKind::Weak,
        None,
    )
}

/// Two automorphisms of `S_{k,N,M}` whose generated group is transitive.
#[derive(Debug, Clone)]
pub struct TransitivityWitnesses {
    pub graph: Graph,
    /// Slice rotation `(x, j) ↦ (x, j+1)`.
    pub rotation: GraphMorphism,
    /// Adds 1 to symbol `x_{N-t}` on slice `t` for `0 ≤ t < N`; edges
    /// leaving slice `M-1` shift their label.
    pub psi: GraphMorphism,
    /// Size of the orbit of `(0^N, 0)` under the two maps.
    pub orbit_size: usize,
}

pub fn transitivity_witnesses(k: usize, n: usize, m: usize) -> Result<TransitivityWitnesses> {
    check_k(k)?;
    check_m(m)?;
    if m < n {
        return Err(Error::InvalidParameter(format!(
            "the construction needs M ≥ N, got N = {n}, M = {m}"
        )));
    }
    let graph = spider_web_m(k, n, m)?;
    let size = pow(k, n)?;
    let total = graph.vertex_count();
    let rot_vertex = |v: usize| ((v / size + 1) % m) * size + v % size;
    let rotation = GraphMorphism {
        vertex_map: (0..total).map(rot_vertex).collect(),
        edge_map: (0..graph.edge_count())
            .map(|e| rot_vertex(e / k) * k + e % k)
            .collect(),
    };
    let psi_vertex = |v: usize| {
        let (j, x) = (v / size, v % size);
        if j < n {
            // Symbol x_{N-j} sits at base-k place j from the right.
            let place = pow(k, j).expect("k^j ≤ k^N");
            let digit = (x / place) % k;
            let bumped = x - digit * place + ((digit + 1) % k) * place;
            j * size + bumped
        } else {
            v
        }
    };
    let psi = GraphMorphism {
        vertex_map: (0..total).map(psi_vertex).collect(),
        edge_map: (0..graph.edge_count())
            .map(|e| {
                let (v, y) = (e / k, e % k);
                let y = if v / size == m - 1 { (y + 1) % k } else { y };
                psi_vertex(v) * k + y
            })
            .collect(),
    };
    for map in [&rotation, &psi] {
        IsoWitness::new(graph.clone(), graph.clone(), map.clone(), IsoKind::Weak, None)?;
    }
    let mut seen = vec![false; total];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut orbit_size = 1;
    while let Some(v) = queue.pop_front() {
        for w in [rotation.vertex_map[v], psi.vertex_map[v]] {
            if !seen[w] {
                seen[w] = true;
                orbit_size += 1;
                queue.push_back(w);
            }
        }
    }
    Ok(TransitivityWitnesses {
        graph,
        rotation,
        psi,
        orbit_size,
    })
}
