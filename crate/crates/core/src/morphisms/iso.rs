//! Isomorphism search by colour refinement and individualization.
//!
//! Both graphs are refined together as one disjoint union, so a colour class
//! that is unbalanced between the two sides proves non-isomorphism for the
//! current branch. Edges carry keys: all zero for weak searches, interned
//! `(label, weight)` for strong ones (paired with the inverse's key on Serre
//! graphs). A branch ending in a discrete colouring yields a vertex map; the
//! edge map is then assigned greedily and the whole morphism is verified.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{GraphMorphism, IsoKind, IsoWitness};

#[derive(Debug, Clone, Copy)]
pub struct IsoConfig {
    /// Larger graphs are reported as undecided without searching.
    pub vertex_cap: usize,
    /// Maximum number of individualization nodes per search.
    pub node_cap: u64,
}

impl Default for IsoConfig {
    fn default() -> Self {
        IsoConfig {
            vertex_cap: 512,
            node_cap: 2_000_000,
        }
    }
}

/// Outcome of an exhaustive search with a resource cap.
#[derive(Debug, Clone, PartialEq)]
pub enum Search<T> {
    Found(T),
    NotFound,
    Undecided,
}

impl<T> Search<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::NotFound => Search::NotFound,
            Search::Undecided => Search::Undecided,
        }
    }
}

type EdgeKey = (Option<String>, u64, Option<String>, u64);

fn raw_key(g: &Graph, e: usize, kind: IsoKind) -> EdgeKey {
    if kind == IsoKind::Weak {
        return (None, 0, None, 0);
    }
    let edge = g.edge(e);
    match edge.inverse {
        Some(inv) => {
            let f = g.edge(inv);
            (
                edge.label.clone(),
                edge.weight.to_bits(),
                f.label.clone(),
                f.weight.to_bits(),
            )
        }
        None => (edge.label.clone(), edge.weight.to_bits(), None, 0),
    }
}

/// Ranks the distinct keys of all edges of `graphs` in sorted order, so
/// that key ids depend only on the key values present.
fn intern_keys(graphs: &[&Graph], kind: IsoKind) -> (Vec<Vec<u32>>, Vec<EdgeKey>) {
    let raw: Vec<Vec<EdgeKey>> = graphs
        .iter()
        .map(|g| (0..g.edge_count()).map(|e| raw_key(g, e, kind)).collect())
        .collect();
    let mut table: Vec<EdgeKey> = raw.iter().flatten().cloned().collect();
    table.sort();
    table.dedup();
    let index: HashMap<&EdgeKey, u32> = table
        .iter()
        .enumerate()
        .map(|(i, k)| (k, i as u32))
        .collect();
    let keys = raw
        .iter()
        .map(|ks| ks.iter().map(|k| index[k]).collect())
        .collect();
    (keys, table)
}

/// Adjacency of a disjoint union, as `(neighbour, key)` lists.
struct Union {
    out: Vec<Vec<(usize, u32)>>,
    inn: Vec<Vec<(usize, u32)>>,
}

impl Union {
    fn new(parts: &[(&Graph, &[u32])]) -> Self {
        let total: usize = parts.iter().map(|(g, _)| g.vertex_count()).sum();
        let mut out = vec![Vec::new(); total];
        let mut inn = vec![Vec::new(); total];
        let mut offset = 0;
        for (g, keys) in parts {
            for e in g.edges() {
                out[offset + e.src].push((offset + e.dst, keys[e.id]));
                inn[offset + e.dst].push((offset + e.src, keys[e.id]));
            }
            offset += g.vertex_count();
        }
        Union { out, inn }
    }

    fn len(&self) -> usize {
        self.out.len()
    }

    /// Refines `colors` to the coarsest equitable partition below it.
    /// Colours are renumbered `0..` in signature order, which is canonical.
    fn refine(&self, colors: &mut [u32]) {
        let n = self.len();
        let mut classes = count_distinct(colors);
        loop {
            let mut sigs: Vec<(u32, Vec<(u32, u32)>, Vec<(u32, u32)>, usize)> = (0..n)
                .map(|v| {
                    let mut o: Vec<(u32, u32)> =
                        self.out[v].iter().map(|&(u, k)| (colors[u], k)).collect();
                    let mut i: Vec<(u32, u32)> =
                        self.inn[v].iter().map(|&(u, k)| (colors[u], k)).collect();
                    o.sort_unstable();
                    i.sort_unstable();
                    (colors[v], o, i, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut next = 0u32;
            for idx in 0..n {
                if idx > 0 {
                    let (a, b) = (&sigs[idx - 1], &sigs[idx]);
                    if (a.0, &a.1, &a.2) != (b.0, &b.1, &b.2) {
                        next += 1;
                    }
                }
                colors[sigs[idx].3] = next;
            }
            let now = if n == 0 { 0 } else { next as usize + 1 };
            if now == classes {
                return;
            }
            classes = now;
        }
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Colour with the fewest members (more than `1`) in `range`, lowest colour
/// first among ties.
fn target_cell(colors: &[u32], range: std::ops::Range<usize>) -> Option<u32> {
    let mut counts: HashMap<u32, usize> = HashMap::new();
    for &c in &colors[range] {
        *counts.entry(c).or_default() += 1;
    }
    counts
        .into_iter()
        .filter(|&(_, n)| n > 1)
        .min_by_key(|&(c, n)| (n, c))
        .map(|(c, _)| c)
}

fn individualize(colors: &[u32], picks: &[usize]) -> Vec<u32> {
    let mut next: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
    for &v in picks {
        next[v] = 2 * colors[v];
    }
    next
}

struct Capped;

struct PairSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    kind: IsoKind,
    keys_g: Vec<u32>,
    keys_h: Vec<u32>,
    union: Union,
    nodes: u64,
    node_cap: u64,
}

impl PairSearch<'_> {
    fn balanced(&self, colors: &[u32]) -> bool {
        let n = self.g.vertex_count();
        let mut a = colors[..n].to_vec();
        let mut b = colors[n..].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    fn run(&mut self, mut colors: Vec<u32>) -> std::result::Result<Option<GraphMorphism>, Capped> {
        self.union.refine(&mut colors);
        if !self.balanced(&colors) {
            return Ok(None);
        }
        let n = self.g.vertex_count();
        let Some(cell) = target_cell(&colors, 0..n) else {
            return Ok(self.complete(&colors));
        };
        let v = (0..n).find(|&v| colors[v] == cell).unwrap();
        let candidates: Vec<usize> = (n..self.union.len())
            .filter(|&w| colors[w] == cell)
            .collect();
        for w in candidates {
            self.nodes += 1;
            if self.nodes > self.node_cap {
                return Err(Capped);
            }
            if let Some(m) = self.run(individualize(&colors, &[v, w]))? {
                return Ok(Some(m));
            }
        }
        Ok(None)
    }

    /// Turns a discrete balanced colouring into a verified morphism.
    fn complete(&self, colors: &[u32]) -> Option<GraphMorphism> {
        let n = self.g.vertex_count();
        let mut by_color = vec![usize::MAX; n];
        for w in 0..self.h.vertex_count() {
            by_color[colors[n + w] as usize] = w;
        }
        let vertex_map: Vec<usize> = (0..n).map(|v| by_color[colors[v] as usize]).collect();
        let edge_map = assign_edges(self.g, self.h, &vertex_map, &self.keys_g, &self.keys_h)?;
        let m = GraphMorphism {
            vertex_map,
            edge_map,
        };
        m.is_isomorphism(self.g, self.h, self.kind).then_some(m)
    }
}

/// Greedy edge assignment above a vertex bijection, pairing inverses
/// together on Serre graphs.
pub(crate) fn assign_edges(
    g: &Graph,
    h: &Graph,
    vertex_map: &[usize],
    keys_g: &[u32],
    keys_h: &[u32],
) -> Option<Vec<usize>> {
    let mut buckets: HashMap<(usize, usize, u32), Vec<usize>> = HashMap::new();
    for f in h.edges().iter().rev() {
        buckets
            .entry((f.src, f.dst, keys_h[f.id]))
            .or_default()
            .push(f.id);
    }
    let mut used = vec![false; h.edge_count()];
    let mut edge_map = vec![usize::MAX; g.edge_count()];
    for e in g.edges() {
        if edge_map[e.id] != usize::MAX {
            continue;
        }
        let bucket = buckets.get_mut(&(vertex_map[e.src], vertex_map[e.dst], keys_g[e.id]))?;
        let f = loop {
            let f = bucket.pop()?;
            if !used[f] {
                break f;
            }
        };
        used[f] = true;
        edge_map[e.id] = f;
        if let Some(inv) = e.inverse {
            let finv = h.edge(f).inverse?;
            if used[finv] || edge_map[inv] != usize::MAX {
                return None;
            }
            used[finv] = true;
            edge_map[inv] = finv;
        }
    }
    Some(edge_map)
}

/// Coarsest equitable colouring of `g`; vertices in different classes lie
/// in different automorphism orbits.
pub(crate) fn equitable_colors(g: &Graph, kind: IsoKind) -> Vec<u32> {
    let (mut keys, _) = intern_keys(&[g], kind);
    let keys = keys.pop().unwrap();
    let union = Union::new(&[(g, &keys)]);
    let mut colors = vec![0u32; g.vertex_count()];
    union.refine(&mut colors);
    colors
}

/// Searches for an isomorphism `g → h` of the given kind, optionally
/// sending `root.0` to `root.1`. The search is exhaustive: `NotFound` is a
/// proof of non-isomorphism, and exceeding a cap gives `Undecided`.
pub fn find_iso(
    g: &Graph,
    h: &Graph,
    kind: IsoKind,
    root: Option<(usize, usize)>,
    config: &IsoConfig,
) -> Result<Search<IsoWitness>> {
    Ok(search_morphism(g, h, kind, root, config)?.map(|m| IsoWitness {
        source: g.clone(),
        target: h.clone(),
        morphism: m,
        kind,
        root,
    }))
}

pub(crate) fn search_morphism(
    g: &Graph,
    h: &Graph,
    kind: IsoKind,
    root: Option<(usize, usize)>,
    config: &IsoConfig,
) -> Result<Search<GraphMorphism>> {
    g.expect_kind(h.kind())?;
    if let Some((a, b)) = root {
        if a >= g.vertex_count() || b >= h.vertex_count() {
            return Err(Error::InvalidParameter("root vertex out of range".into()));
        }
    }
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(Search::NotFound);
    }
    if g.vertex_count() > config.vertex_cap {
        return Ok(Search::Undecided);
    }
    let (mut keys, _) = intern_keys(&[g, h], kind);
    let keys_h = keys.pop().unwrap();
    let keys_g = keys.pop().unwrap();
    let union = Union::new(&[(g, &keys_g), (h, &keys_h)]);
    let n = g.vertex_count();
    let mut colors = vec![1u32; 2 * n];
    if let Some((a, b)) = root {
        colors[a] = 0;
        colors[n + b] = 0;
    }
    let mut search = PairSearch {
        g,
        h,
        kind,
        keys_g,
        keys_h,
        union,
        nodes: 0,
        node_cap: config.node_cap,
    };
    Ok(match search.run(colors) {
        Ok(Some(m)) => Search::Found(m),
        Ok(None) => Search::NotFound,
        Err(Capped) => Search::Undecided,
    })
}

/// Canonical serialization of a (optionally rooted) graph: two graphs get
/// the same string iff they are isomorphic of the given kind, preserving
/// roots. Explores every leaf of the individualization tree; exceeding
/// `leaf_cap` leaves is an error.
pub fn canonical_form(
    g: &Graph,
    kind: IsoKind,
    root: Option<usize>,
    leaf_cap: u64,
) -> Result<String> {
    let (mut keys, table) = intern_keys(&[g], kind);
    let keys = keys.pop().unwrap();
    let union = Union::new(&[(g, &keys)]);
    let n = g.vertex_count();
    let mut colors = vec![1u32; n];
    if let Some(r) = root {
        colors[r] = 0;
    }
    let mut best: Option<Vec<(u32, u32, u32)>> = None;
    let mut leaves = 0u64;
    let mut stack = vec![colors];
    while let Some(mut colors) = stack.pop() {
        union.refine(&mut colors);
        match target_cell(&colors, 0..n) {
            Some(cell) => {
                for v in (0..n).filter(|&v| colors[v] == cell) {
                    stack.push(individualize(&colors, &[v]));
                }
            }
            None => {
                leaves += 1;
                if leaves > leaf_cap {
                    return Err(Error::Undecided(format!(
                        "canonical form needs more than {leaf_cap} leaves"
                    )));
                }
                let mut edges: Vec<(u32, u32, u32)> = g
                    .edges()
                    .iter()
                    .map(|e| (colors[e.src], colors[e.dst], keys[e.id]))
                    .collect();
                edges.sort_unstable();
                if best.as_ref().is_none_or(|b| edges < *b) {
                    best = Some(edges);
                }
            }
        }
    }
    let mut out = format!(
        "{}|{}|{}|",
        g.kind().as_str(),
        n,
        root.map(|_| "rooted").unwrap_or("free")
    );
    for (label, w, inv_label, iw) in &table {
        out.push_str(&format!("{label:?}:{w}:{inv_label:?}:{iw};"));
    }
    out.push('|');
    for (a, b, k) in best.unwrap_or_default() {
        out.push_str(&format!("{a},{b},{k};"));
    }
    Ok(out)
}
