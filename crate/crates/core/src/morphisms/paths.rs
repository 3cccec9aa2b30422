//! Euler circuits, Hamilton cycles and closed-path censuses.

use crate::derangement::{components, orientation_signs};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::products::{line_graph, LineGraph};

use super::iso::Search;

/// Eulerian circuit of an oriented graph as a list of edge ids, found by
/// Hierholzer's algorithm. Requires in-degree = out-degree everywhere and
/// all edges in one connected component.
pub fn eulerian_circuit(g: &Graph) -> Result<Vec<usize>> {
    g.expect_kind(GraphKind::Oriented)?;
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.in_degree(v) != g.out_degree(v)) {
        return Err(Error::Unbalanced(v));
    }
    if g.edge_count() == 0 {
        return Ok(Vec::new());
    }
    let blocks = components(g);
    let with_edges: Vec<&Vec<usize>> = blocks
        .iter()
        .filter(|b| b.iter().any(|&v| g.out_degree(v) > 0))
        .collect();
    if with_edges.len() > 1 {
        return Err(Error::Disconnected {
            per_component: with_edges.iter().map(|b| b.len() as u64).collect(),
        });
    }
    let start = g.edge(0).src;
    let mut next = vec![0usize; g.vertex_count()];
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut circuit = Vec::with_capacity(g.edge_count());
    while let Some(&(v, via)) = stack.last() {
        if next[v] < g.out_degree(v) {
            let e = g.out_edges(v)[next[v]];
            next[v] += 1;
            stack.push((g.edge(e).dst, Some(e)));
        } else {
            stack.pop();
            if let Some(e) = via {
                circuit.push(e);
            }
        }
    }
    circuit.reverse();
    Ok(circuit)
}

/// Replays `circuit`: consecutive edges compose, it closes up, and it uses
/// every edge exactly once.
pub fn verify_eulerian_circuit(g: &Graph, circuit: &[usize]) -> bool {
    if circuit.len() != g.edge_count() {
        return false;
    }
    let mut seen = vec![false; g.edge_count()];
    for &e in circuit {
        if e >= g.edge_count() || seen[e] {
            return false;
        }
        seen[e] = true;
    }
    closes_up(g, circuit)
}

fn closes_up(g: &Graph, path: &[usize]) -> bool {
    path.iter()
        .zip(path.iter().cycle().skip(1))
        .all(|(&a, &b)| g.edge(a).dst == g.edge(b).src)
}

/// Hamiltonian cycle as a list of edge ids starting at vertex 0, found by
/// depth-first backtracking over at most `cap` extension steps.
pub fn hamiltonian_cycle(g: &Graph, cap: u64) -> Result<Search<Vec<usize>>> {
    g.expect_kind(GraphKind::Oriented)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Search::NotFound);
    }
    let mut visited = vec![false; n];
    visited[0] = true;
    let mut path = Vec::with_capacity(n);
    let mut steps = 0u64;
    // Each frame is (vertex, index of the next out-edge to try).
    let mut frames: Vec<(usize, usize)> = vec![(0, 0)];
    while let Some(&mut (v, ref mut i)) = frames.last_mut() {
        if path.len() == n - 1 {
            if let Some(&e) = g.out_edges(v).iter().find(|&&e| g.edge(e).dst == 0) {
                path.push(e);
                return Ok(Search::Found(path));
            }
        }
        let out = g.out_edges(v);
        if *i >= out.len() {
            frames.pop();
            if let Some(e) = path.pop() {
                visited[g.edge(e).dst] = false;
            }
            continue;
        }
        let e = out[*i];
        *i += 1;
        let w = g.edge(e).dst;
        if visited[w] {
            continue;
        }
        steps += 1;
        if steps > cap {
            return Ok(Search::Undecided);
        }
        visited[w] = true;
        path.push(e);
        frames.push((w, 0));
    }
    Ok(Search::NotFound)
}

/// Replays a Hamiltonian cycle given as edge ids.
pub fn verify_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> bool {
    if cycle.len() != g.vertex_count() || cycle.iter().any(|&e| e >= g.edge_count()) {
        return false;
    }
    let mut seen = vec![false; g.vertex_count()];
    for &e in cycle {
        let v = g.edge(e).src;
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    closes_up(g, cycle)
}

/// A Hamiltonian cycle of `L(g)` read off an Eulerian circuit of `g`:
/// consecutive circuit edges are consecutive vertices of the line graph.
pub fn hamiltonian_from_line_graph(g: &Graph) -> Result<(LineGraph, Vec<usize>)> {
    let circuit = eulerian_circuit(g)?;
    let lg = line_graph(g)?;
    let cycle = circuit
        .iter()
        .zip(circuit.iter().cycle().skip(1))
        .map(|(&a, &b)| {
            lg.edge_between(a, b)
                .ok_or_else(|| Error::InvalidGraph("circuit edges do not compose".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((lg, cycle))
}

/// Which derangements a census counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerangementFilter {
    Any,
    Zero,
    NonZero,
    Equals(i64),
}

impl DerangementFilter {
    fn accepts(self, d: i64) -> bool {
        match self {
            DerangementFilter::Any => true,
            DerangementFilter::Zero => d == 0,
            DerangementFilter::NonZero => d != 0,
            DerangementFilter::Equals(x) => d == x,
        }
    }
}

/// Number of closed paths of length `len` at `v` in the underlying graph of
/// `g` whose derangement passes `filter`. With `reduced`, paths containing
/// a backtrack `e ē` are excluded (cyclically, the last edge followed by the
/// first is not checked).
pub fn closed_path_census(
    g: &Graph,
    v: usize,
    len: usize,
    filter: DerangementFilter,
    reduced: bool,
) -> Result<u64> {
    let serre = match g.kind() {
        GraphKind::Oriented => g.underlying()?,
        GraphKind::Serre => g.clone(),
    };
    if v >= serre.vertex_count() {
        return Err(Error::InvalidParameter(format!("vertex {v} out of range")));
    }
    let signs = orientation_signs(&serre)?;
    let mut count = 0u64;
    let mut stack: Vec<(usize, usize, i64, Option<usize>)> = vec![(v, 0, 0, None)];
    while let Some((at, depth, der, last)) = stack.pop() {
        if depth == len {
            if at == v && filter.accepts(der) {
                count += 1;
            }
            continue;
        }
        for &e in serre.out_edges(at) {
            if reduced && last.is_some_and(|l| serre.inverse(l) == Some(e)) {
                continue;
            }
            stack.push((
                serre.edge(e).dst,
                depth + 1,
                der + signs[e] as i64,
                Some(e),
            ));
        }
    }
    Ok(count)
}
