//! Explicit maps between graph families that are (or fail to be) coverings.
//! Each constructor returns `(source, target, map)`.

use crate::error::{Error, Result};
use crate::families::{de_bruijn, pow, spider_web_m};
use crate::graph::Graph;
use crate::lamplighter::schreier_level_graph;

use super::GraphMorphism;

/// `Γ_{k,N+1} → Γ_{k,N}` forgetting the last symbol. The tree action is
/// triangular, so this commutes with every generator.
pub fn prefix_truncation_map(k: usize, n: usize) -> Result<(Graph, Graph, GraphMorphism)> {
    let source = schreier_level_graph(k, n + 1)?;
    let target = schreier_level_graph(k, n)?;
    let vertex_map: Vec<usize> = (0..source.vertex_count()).map(|v| v / k).collect();
    let edge_map = (0..source.edge_count())
        .map(|e| vertex_map[e / k] * k + e % k)
        .collect();
    Ok((
        source,
        target,
        GraphMorphism {
            vertex_map,
            edge_map,
        },
    ))
}

/// `S_{k,N,iM} → S_{k,N,M}`, identity on words and slices reduced mod `M`.
pub fn slice_projection_map(
    k: usize,
    n: usize,
    m: usize,
    i: usize,
) -> Result<(Graph, Graph, GraphMorphism)> {
    if i == 0 {
        return Err(Error::InvalidParameter("multiplier must be at least 1".into()));
    }
    let source = spider_web_m(k, n, i * m)?;
    let target = spider_web_m(k, n, m)?;
    let size = pow(k, n)?;
    let vertex_map: Vec<usize> = (0..source.vertex_count())
        .map(|v| ((v / size) % m) * size + v % size)
        .collect();
    let edge_map = (0..source.edge_count())
        .map(|e| vertex_map[e / k] * k + e % k)
        .collect();
    Ok((
        source,
        target,
        GraphMorphism {
            vertex_map,
            edge_map,
        },
    ))
}

/// `B_{k,N+1} → B_{k,N}` dropping the first symbol. It is a morphism but
/// not a covering: two edges enter `x_2 … x_{N+1}` with the same image.
pub fn drop_first_symbol_map(k: usize, n: usize) -> Result<(Graph, Graph, GraphMorphism)> {
    let source = de_bruijn(k, n + 1)?;
    let target = de_bruijn(k, n)?;
    let size = pow(k, n)?;
    let vertex_map: Vec<usize> = (0..source.vertex_count()).map(|v| v % size).collect();
    let edge_map = (0..source.edge_count())
        .map(|e| vertex_map[e / k] * k + e % k)
        .collect();
    Ok((
        source,
        target,
        GraphMorphism {
            vertex_map,
            edge_map,
        },
    ))
}
