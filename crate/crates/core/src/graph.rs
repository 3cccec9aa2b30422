//! Multigraphs in the Serre formalism.
//!
//! A [`Graph`] is either *oriented* (edges carry only an initial and a
//! terminal vertex) or *Serre* (every half-edge `e` has a formal inverse
//! `ē` with `ι(ē) = τ(e)`, `ē̄ = e` and `ē ≠ e`). Loops and multiple edges are
//! allowed. Vertices and edges are identified by dense indices; names and
//! labels are display metadata that strong morphisms are required to
//! preserve.

use std::collections::{HashMap, VecDeque};

use nalgebra::DMatrix;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Oriented,
    Serre,
}

impl GraphKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Oriented => "oriented",
            GraphKind::Serre => "serre",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Vertex {
    pub id: usize,
    pub name: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub id: usize,
    pub src: usize,
    pub dst: usize,
    pub label: Option<String>,
    pub weight: f64,
    pub inverse: Option<usize>,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.src == self.dst
    }
}

/// Label carried by the formal inverse of an edge labelled `label`.
pub fn invert_label(label: &str) -> String {
    match label.strip_suffix("^-1") {
        Some(base) => base.to_string(),
        None => format!("{label}^-1"),
    }
}

#[derive(Debug, Clone)]
pub struct Graph {
    kind: GraphKind,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
    segment: bool,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.vertices == other.vertices
            && self.edges == other.edges
            && self.segment == other.segment
    }
}

impl Graph {
    pub fn new(kind: GraphKind, vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        let n = vertices.len();
        for (i, v) in vertices.iter().enumerate() {
            if v.id != i {
                return Err(Error::InvalidGraph(format!(
                    "vertex at position {i} has id {}",
                    v.id
                )));
            }
        }
        let mut out_edges = vec![Vec::new(); n];
        let mut in_edges = vec![Vec::new(); n];
        for (j, e) in edges.iter().enumerate() {
            if e.id != j {
                return Err(Error::InvalidGraph(format!(
                    "edge at position {j} has id {}",
                    e.id
                )));
            }
            if e.src >= n || e.dst >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {j} has an endpoint outside 0..{n}"
                )));
            }
            if !e.weight.is_finite() {
                return Err(Error::InvalidGraph(format!("edge {j} has a non-finite weight")));
            }
            out_edges[e.src].push(j);
            in_edges[e.dst].push(j);
        }
        match kind {
            GraphKind::Oriented => {
                if let Some(e) = edges.iter().find(|e| e.inverse.is_some()) {
                    return Err(Error::InvalidGraph(format!(
                        "oriented graph edge {} has an inverse",
                        e.id
                    )));
                }
            }
            GraphKind::Serre => {
                for e in &edges {
                    let inv = e.inverse.ok_or_else(|| {
                        Error::InvalidGraph(format!("edge {} has no inverse", e.id))
                    })?;
                    if inv == e.id {
                        return Err(Error::InvalidGraph(format!(
                            "edge {} is its own inverse",
                            e.id
                        )));
                    }
                    let f = edges.get(inv).ok_or_else(|| {
                        Error::InvalidGraph(format!("edge {} has a dangling inverse", e.id))
                    })?;
                    if f.inverse != Some(e.id) {
                        return Err(Error::InvalidGraph(format!(
                            "inverse of edge {} is not an involution",
                            e.id
                        )));
                    }
                    if f.src != e.dst || f.dst != e.src {
                        return Err(Error::InvalidGraph(format!(
                            "edge {} and its inverse have mismatched endpoints",
                            e.id
                        )));
                    }
                    if f.weight != e.weight {
                        return Err(Error::InvalidGraph(format!(
                            "edge {} and its inverse carry different weights",
                            e.id
                        )));
                    }
                }
            }
        }
        Ok(Graph {
            kind,
            vertices,
            edges,
            out_edges,
            in_edges,
            segment: false,
        })
    }

    pub fn empty(kind: GraphKind) -> Self {
        Graph::new(kind, Vec::new(), Vec::new()).expect("empty graph is valid")
    }

    /// Marks this graph as a finite window of an infinite line-like object.
    pub fn into_segment(mut self) -> Self {
        self.segment = true;
        self
    }

    pub fn is_segment(&self) -> bool {
        self.segment
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn is_oriented(&self) -> bool {
        self.kind == GraphKind::Oriented
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.vertices[v].name.as_deref()
    }

    /// Name of `v`, falling back to its numeric id.
    pub fn display_name(&self, v: usize) -> String {
        self.name(v).map(str::to_string).unwrap_or_else(|| v.to_string())
    }

    pub fn find_vertex(&self, name: &str) -> Option<usize> {
        self.vertices
            .iter()
            .position(|v| v.name.as_deref() == Some(name))
    }

    /// Edges with initial vertex `v` (the star of `v`).
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_edges[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_edges[v].len()
    }

    /// Number of edges with initial vertex `v`. For a Serre graph a loop pair
    /// `{e, ē}` contributes 2.
    pub fn degree(&self, v: usize) -> usize {
        self.out_degree(v)
    }

    pub fn inverse(&self, e: usize) -> Option<usize> {
        self.edges[e].inverse
    }

    pub fn is_labeled(&self) -> bool {
        self.edges.iter().any(|e| e.label.is_some())
    }

    pub fn is_weighted(&self) -> bool {
        self.edges.iter().any(|e| e.weight != 1.0)
    }

    /// Underlying Serre graph: every edge `e` gets a formal inverse `ē`
    /// with id `e + |E|` and label `l(e)^-1`.
    pub fn underlying(&self) -> Result<Graph> {
        self.expect_kind(GraphKind::Oriented)?;
        let m = self.edges.len();
        let mut edges = Vec::with_capacity(2 * m);
        for e in &self.edges {
            edges.push(Edge {
                inverse: Some(e.id + m),
                ..e.clone()
            });
        }
        for e in &self.edges {
            edges.push(Edge {
                id: e.id + m,
                src: e.dst,
                dst: e.src,
                label: e.label.as_deref().map(invert_label),
                weight: e.weight,
                inverse: Some(e.id),
            });
        }
        let mut g = Graph::new(GraphKind::Serre, self.vertices.clone(), edges)?;
        g.segment = self.segment;
        Ok(g)
    }

    /// Picks one half-edge from each pair `{e, ē}`. `keep_first(e, ē)` is
    /// called once per pair with `e.id < ē.id`; when it returns `false`
    /// the inverse is kept instead. Returns the oriented graph and, for
    /// each of its edges, the half-edge of `self` it came from.
    pub fn choose_orientation<F>(&self, keep_first: F) -> Result<(Graph, Vec<usize>)>
    where
        F: Fn(&Edge, &Edge) -> bool,
    {
        self.expect_kind(GraphKind::Serre)?;
        let mut chosen = Vec::with_capacity(self.edges.len() / 2);
        for e in &self.edges {
            let inv = e.inverse.ok_or_else(|| {
                Error::InvalidGraph(format!("edge {} has no inverse", e.id))
            })?;
            if e.id < inv {
                let f = &self.edges[inv];
                chosen.push(if keep_first(e, f) { e.id } else { inv });
            }
        }
        let edges = chosen
            .iter()
            .enumerate()
            .map(|(i, &old)| Edge {
                id: i,
                inverse: None,
                ..self.edges[old].clone()
            })
            .collect();
        let mut g = Graph::new(GraphKind::Oriented, self.vertices.clone(), edges)?;
        g.segment = self.segment;
        Ok((g, chosen))
    }

    /// Orientation keeping the lower edge id of each pair.
    pub fn canonical_orientation(&self) -> Result<(Graph, Vec<usize>)> {
        self.choose_orientation(|_, _| true)
    }

    /// `a[i][j]` is the total weight of edges `i → j`.
    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        let n = self.vertex_count();
        let mut a = DMatrix::zeros(n, n);
        for e in &self.edges {
            a[(e.src, e.dst)] += e.weight;
        }
        a
    }

    /// Adjacency matrix with integer entries, or `None` if some weight is
    /// not an integer.
    pub fn integer_adjacency(&self) -> Option<Vec<Vec<i64>>> {
        let n = self.vertex_count();
        let mut a = vec![vec![0i64; n]; n];
        for e in &self.edges {
            if e.weight.fract() != 0.0 {
                return None;
            }
            a[e.src][e.dst] += e.weight as i64;
        }
        Some(a)
    }

    /// Distances from `root` in the underlying non-oriented graph, or `None`
    /// for unreachable vertices (and vertices beyond `limit`).
    pub fn distances_from(&self, root: usize, limit: Option<usize>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            if limit.is_some_and(|l| d >= l) {
                continue;
            }
            let nbrs = self.out_edges[v]
                .iter()
                .map(|&e| self.edges[e].dst)
                .chain(self.in_edges[v].iter().map(|&e| self.edges[e].src));
            for w in nbrs {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Subgraph on `vertices` (in the given order) keeping the edges accepted
    /// by `keep`. For Serre graphs `keep` must accept `e` iff it accepts `ē`.
    pub fn subgraph<F>(&self, vertices: &[usize], keep: F) -> Result<Subgraph>
    where
        F: Fn(&Edge) -> bool,
    {
        let mut index = HashMap::with_capacity(vertices.len());
        let verts: Vec<Vertex> = vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                index.insert(v, i);
                Vertex {
                    id: i,
                    name: self.vertices[v].name.clone(),
                }
            })
            .collect();
        let mut edge_map = Vec::new();
        let mut new_id = HashMap::new();
        for e in &self.edges {
            if index.contains_key(&e.src) && index.contains_key(&e.dst) && keep(e) {
                new_id.insert(e.id, edge_map.len());
                edge_map.push(e.id);
            }
        }
        let mut edges = Vec::with_capacity(edge_map.len());
        for (i, &old) in edge_map.iter().enumerate() {
            let e = &self.edges[old];
            let inverse = match e.inverse {
                Some(inv) => Some(*new_id.get(&inv).ok_or_else(|| {
                    Error::InvalidGraph(format!("edge filter splits the pair of edge {old}"))
                })?),
                None => None,
            };
            edges.push(Edge {
                id: i,
                src: index[&e.src],
                dst: index[&e.dst],
                label: e.label.clone(),
                weight: e.weight,
                inverse,
            });
        }
        Ok(Subgraph {
            graph: Graph::new(self.kind, verts, edges)?,
            vertex_map: vertices.to_vec(),
            edge_map,
        })
    }

    /// Subgraph induced on `vertices`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Subgraph> {
        self.subgraph(vertices, |_| true)
    }

    /// Same graph with every label removed.
    pub fn unlabeled(&self) -> Graph {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.label = None;
        }
        g
    }

    pub(crate) fn expect_kind(&self, kind: GraphKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                expected: kind.as_str(),
                found: self.kind.as_str(),
            })
        }
    }
}

/// A subgraph together with maps back into its parent (new id → old id).
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

/// Incremental construction of graphs with dense ids.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    kind: GraphKind,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl GraphBuilder {
    pub fn new(kind: GraphKind) -> Self {
        GraphBuilder {
            kind,
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn oriented() -> Self {
        Self::new(GraphKind::Oriented)
    }

    pub fn serre() -> Self {
        Self::new(GraphKind::Serre)
    }

    pub fn with_vertices(mut self, n: usize) -> Self {
        for _ in 0..n {
            self.add_vertex(None);
        }
        self
    }

    pub fn add_vertex(&mut self, name: Option<String>) -> usize {
        let id = self.vertices.len();
        self.vertices.push(Vertex { id, name });
        id
    }

    pub fn add_edge(&mut self, src: usize, dst: usize, label: Option<String>) -> usize {
        self.add_weighted_edge(src, dst, label, 1.0)
    }

    pub fn add_weighted_edge(
        &mut self,
        src: usize,
        dst: usize,
        label: Option<String>,
        weight: f64,
    ) -> usize {
        let id = self.edges.len();
        self.edges.push(Edge {
            id,
            src,
            dst,
            label,
            weight,
            inverse: None,
        });
        id
    }

    /// Adds `e: src → dst` and its inverse; returns `(e, ē)`.
    pub fn add_edge_pair(
        &mut self,
        src: usize,
        dst: usize,
        label: Option<String>,
        weight: f64,
    ) -> (usize, usize) {
        let inv_label = label.as_deref().map(invert_label);
        let e = self.add_weighted_edge(src, dst, label, weight);
        let f = self.add_weighted_edge(dst, src, inv_label, weight);
        self.edges[e].inverse = Some(f);
        self.edges[f].inverse = Some(e);
        (e, f)
    }

    pub fn build(self) -> Result<Graph> {
        Graph::new(self.kind, self.vertices, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        let mut b = GraphBuilder::oriented().with_vertices(3);
        for i in 0..3 {
            b.add_edge(i, (i + 1) % 3, None);
        }
        b.build().unwrap()
    }

    #[test]
    fn underlying_of_empty_is_empty() {
        let g = Graph::empty(GraphKind::Oriented).underlying().unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.kind(), GraphKind::Serre);
    }

    #[test]
    fn underlying_triangle_has_six_half_edges() {
        let g = triangle().underlying().unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!((0..3).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn loop_pair_contributes_two_to_degree() {
        let mut b = GraphBuilder::serre().with_vertices(1);
        b.add_edge_pair(0, 0, Some("a".into()), 1.0);
        let g = b.build().unwrap();
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.edge(1).label.as_deref(), Some("a^-1"));
    }

    #[test]
    fn rejects_broken_involutions() {
        let e = |id, src, dst, inverse| Edge {
            id,
            src,
            dst,
            label: None,
            weight: 1.0,
            inverse,
        };
        let v = |id| Vertex { id, name: None };
        let fixed_point = Graph::new(GraphKind::Serre, vec![v(0)], vec![e(0, 0, 0, Some(0))]);
        assert!(fixed_point.is_err());
        let not_involutive = Graph::new(
            GraphKind::Serre,
            vec![v(0), v(1)],
            vec![e(0, 0, 1, Some(1)), e(1, 1, 0, Some(2)), e(2, 1, 0, Some(1))],
        );
        assert!(not_involutive.is_err());
        let wrong_ends = Graph::new(
            GraphKind::Serre,
            vec![v(0), v(1)],
            vec![e(0, 0, 1, Some(1)), e(1, 0, 1, Some(0))],
        );
        assert!(wrong_ends.is_err());
        let missing = Graph::new(GraphKind::Serre, vec![v(0)], vec![e(0, 0, 0, None)]);
        assert!(missing.is_err());
    }

    #[test]
    fn orientation_round_trip_on_triangle() {
        let g = triangle();
        let (back, chosen) = g.underlying().unwrap().canonical_orientation().unwrap();
        assert_eq!(chosen, vec![0, 1, 2]);
        assert_eq!(back, g);
    }

    #[test]
    fn choose_orientation_requires_serre() {
        assert!(triangle().canonical_orientation().is_err());
    }

    #[test]
    fn adjacency_of_cycle_is_a_permutation() {
        let a = triangle().integer_adjacency().unwrap();
        assert_eq!(a, vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
    }

    #[test]
    fn subgraph_keeps_pairs_together() {
        let g = triangle().underlying().unwrap();
        let s = g.induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(s.graph.edge_count(), 2);
        assert_eq!(s.graph.edge(0).inverse, Some(1));
        let split = g.subgraph(&[0, 1, 2], |e| e.id == 0);
        assert!(split.is_err());
    }
}
