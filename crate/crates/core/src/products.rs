//! Tensor products, line graphs, and explicit line-graph isomorphisms.
//!
//! Tensor vertex `(v, w)` has id `v·|W| + w` and edge `(e, f)` has id
//! `e·|F| + f`. Line-graph vertices are the edges of the base graph, and
//! each line-graph edge remembers the pair `(e, f)` it comes from.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::families::{check_k, cycle_m, de_bruijn, pow, spider_web_m};
use crate::graph::{Edge, Graph, GraphBuilder, GraphKind, Vertex};
use crate::lamplighter::schreier_level_graph;
use crate::morphisms::{GraphMorphism, IsoKind, IsoWitness};

fn pair_label(a: Option<&str>, b: Option<&str>) -> Option<String> {
    match (a, b) {
        (Some(a), Some(b)) => Some(format!("({a},{b})")),
        (Some(a), None) | (None, Some(a)) => Some(a.to_string()),
        (None, None) => None,
    }
}

/// Categorical product: `(e, f): (ι e, ι f) → (τ e, τ f)`. Labels are
/// paired, or kept as is when only one factor is labelled (so the product
/// with an unlabelled cycle keeps the first factor's labels). Weights
/// multiply. Serre products use the involution `(ē, f̄)`.
pub fn tensor(g: &Graph, h: &Graph) -> Result<Graph> {
    g.expect_kind(h.kind())?;
    let nh = h.vertex_count();
    let mh = h.edge_count();
    let vertices = (0..g.vertex_count() * nh)
        .map(|id| {
            let (v, w) = (id / nh, id % nh);
            let name = match (g.name(v), h.name(w)) {
                (None, None) => None,
                _ => Some(format!("({},{})", g.display_name(v), h.display_name(w))),
            };
            Vertex { id, name }
        })
        .collect();
    let mut edges = Vec::with_capacity(g.edge_count() * mh);
    for e in g.edges() {
        for f in h.edges() {
            edges.push(Edge {
                id: e.id * mh + f.id,
                src: e.src * nh + f.src,
                dst: e.dst * nh + f.dst,
                label: pair_label(e.label.as_deref(), f.label.as_deref()),
                weight: e.weight * f.weight,
                inverse: match (e.inverse, f.inverse) {
                    (Some(a), Some(b)) => Some(a * mh + b),
                    _ => None,
                },
            });
        }
    }
    let t = Graph::new(g.kind(), vertices, edges)?;
    Ok(if g.is_segment() || h.is_segment() {
        t.into_segment()
    } else {
        t
    })
}

/// `φ₁ ⊗ φ₂ : g₁ ⊗ g₂ → h₁ ⊗ h₂`, where `h2` is the target of `φ₂`.
pub fn tensor_morphism(f1: &GraphMorphism, f2: &GraphMorphism, h2: &Graph) -> GraphMorphism {
    let (n2, m2) = (f2.vertex_map.len(), f2.edge_map.len());
    let (tn, tm) = (h2.vertex_count(), h2.edge_count());
    GraphMorphism {
        vertex_map: (0..f1.vertex_map.len() * n2)
            .map(|id| f1.vertex_map[id / n2] * tn + f2.vertex_map[id % n2])
            .collect(),
        edge_map: (0..f1.edge_map.len() * m2)
            .map(|id| f1.edge_map[id / m2] * tm + f2.edge_map[id % m2])
            .collect(),
    }
}

/// Disjoint union; vertices and edges of `h` are shifted past those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    g.expect_kind(h.kind())?;
    let (n, m) = (g.vertex_count(), g.edge_count());
    let vertices = g
        .vertices()
        .iter()
        .cloned()
        .chain(h.vertices().iter().map(|v| Vertex {
            id: v.id + n,
            name: v.name.clone(),
        }))
        .collect();
    let edges = g
        .edges()
        .iter()
        .cloned()
        .chain(h.edges().iter().map(|e| Edge {
            id: e.id + m,
            src: e.src + n,
            dst: e.dst + n,
            inverse: e.inverse.map(|i| i + m),
            ..e.clone()
        }))
        .collect();
    Graph::new(g.kind(), vertices, edges)
}

/// `L(g)` with back-references: `pairs[i] = (e, f)` for line-graph edge `i`.
#[derive(Debug, Clone)]
pub struct LineGraph {
    pub graph: Graph,
    pub pairs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl LineGraph {
    /// Line-graph edge from `e` to `f`, if `f` directly follows `e`.
    pub fn edge_between(&self, e: usize, f: usize) -> Option<usize> {
        self.index.get(&(e, f)).copied()
    }
}

/// Line graph of an oriented graph: one vertex per edge and an edge
/// `e → f` labelled like `f` whenever `τ(e) = ι(f)`.
pub fn line_graph(g: &Graph) -> Result<LineGraph> {
    g.expect_kind(GraphKind::Oriented)?;
    let mut b = GraphBuilder::oriented();
    for e in g.edges() {
        b.add_vertex(e.label.clone().map(|l| format!("{}:{l}", g.display_name(e.src))));
    }
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    for e in g.edges() {
        for &f in g.out_edges(e.dst) {
            let id = b.add_edge(e.id, f, g.edge(f).label.clone());
            index.insert((e.id, f), id);
            pairs.push((e.id, f));
        }
    }
    Ok(LineGraph {
        graph: b.build()?,
        pairs,
        index,
    })
}

/// Image of a morphism `φ: g → h` under the line-graph functor.
pub fn line_map(phi: &GraphMorphism, lg: &LineGraph, lh: &LineGraph) -> Result<GraphMorphism> {
    let edge_map = lg
        .pairs
        .iter()
        .map(|&(e, f)| {
            lh.edge_between(phi.edge_map[e], phi.edge_map[f])
                .ok_or_else(|| Error::NotMorphism(format!("edges {e}, {f} stop composing")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GraphMorphism {
        vertex_map: phi.edge_map.clone(),
        edge_map,
    })
}

/// Weak isomorphism `L(g ⊗ h) → L(g) ⊗ L(h)`: consecutive edges of the
/// product are exactly pairs of consecutive edges of the factors.
pub fn line_tensor_iso(g: &Graph, h: &Graph) -> Result<IsoWitness> {
    let gh = tensor(g, h)?;
    let source = line_graph(&gh)?;
    let lg = line_graph(g)?;
    let lh = line_graph(h)?;
    let target = tensor(&lg.graph, &lh.graph)?;
    let mh = h.edge_count();
    let lmh = lh.graph.edge_count();
    let edge_map = source
        .pairs
        .iter()
        .map(|&(a, b)| {
            let (e, f) = (a / mh, a % mh);
            let (e2, f2) = (b / mh, b % mh);
            let x = lg.edge_between(e, e2).expect("factor edges compose");
            let y = lh.edge_between(f, f2).expect("factor edges compose");
            x * lmh + y
        })
        .collect();
    let morphism = GraphMorphism {
        vertex_map: (0..source.graph.vertex_count()).collect(),
        edge_map,
    };
    IsoWitness::new(source.graph, target, morphism, IsoKind::Weak, None)
}

/// Strong isomorphism `S_{k,N,M} → B_{k,N} ⊗ C_M`, `(x, j) ↦ (x, j)`.
pub fn spider_web_tensor_iso(k: usize, n: usize, m: usize) -> Result<IsoWitness> {
    let source = spider_web_m(k, n, m)?;
    let target = tensor(&de_bruijn(k, n)?, &cycle_m(m)?)?;
    let size = pow(k, n)?;
    let morphism = GraphMorphism {
        vertex_map: (0..source.vertex_count())
            .map(|id| (id % size) * m + id / size)
            .collect(),
        edge_map: (0..source.edge_count())
            .map(|id| {
                let (vertex, y) = (id / k, id % k);
                ((vertex % size) * k + y) * m + vertex / size
            })
            .collect(),
    };
    IsoWitness::new(source, target, morphism, IsoKind::Strong, None)
}

/// Weak isomorphism `L(B_{k,N}) → B_{k,N+1}` sending the edge
/// `(x_1 … x_N, R_y)` to the word `x_1 … x_N y`.
pub fn de_bruijn_line_iso(k: usize, n: usize) -> Result<IsoWitness> {
    let base = de_bruijn(k, n)?;
    let lg = line_graph(&base)?;
    let target = de_bruijn(k, n + 1)?;
    let morphism = GraphMorphism {
        vertex_map: (0..base.edge_count()).collect(),
        edge_map: lg.pairs.iter().map(|&(e, f)| e * k + f % k).collect(),
    };
    IsoWitness::new(lg.graph, target, morphism, IsoKind::Weak, None)
}

/// Weak isomorphism `L(Γ_{k,N}) → Γ_{k,N+1}` sending `(x, c̄_i)` to the
/// word `i x_1 … x_N`; an edge labelled `c̄_j` out of `(x, c̄_i)` goes to
/// the edge labelled `c̄_{j-i}`.
pub fn gamma_line_iso(k: usize, n: usize) -> Result<IsoWitness> {
    check_k(k)?;
    let base = schreier_level_graph(k, n)?;
    let lg = line_graph(&base)?;
    let target = schreier_level_graph(k, n + 1)?;
    let size = pow(k, n)?;
    let vertex_of = |e: usize| (e % k) * size + e / k;
    let morphism = GraphMorphism {
        vertex_map: (0..base.edge_count()).map(vertex_of).collect(),
        edge_map: lg
            .pairs
            .iter()
            .map(|&(e, f)| {
                let (i, j) = (e % k, f % k);
                vertex_of(e) * k + (j + k - i) % k
            })
            .collect(),
    };
    IsoWitness::new(lg.graph, target, morphism, IsoKind::Weak, None)
}
