//! Constructors for de Bruijn, cycle, spider-web and theta graphs.
//!
//! Words `x_1 … x_N` over `{0, …, k-1}` are indexed as base-`k` numbers with
//! `x_1` the most significant digit. Spider-web vertex `(x, j)` has id
//! `j·k^N + index(x)` and its edge labelled `R_y` has id `vertex·k + y`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Length of a cycle: finite, or the infinite line seen through the window
/// `[-w, w]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Length {
    Finite(usize),
    Infinite { window: usize },
}

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidParameter(format!("alphabet size k = {k} must be at least 2")))
    } else {
        Ok(())
    }
}

pub(crate) fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::InvalidParameter("cycle length M must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `k^n`, or an error if it does not fit comfortably in memory-indexable
/// sizes.
pub fn pow(k: usize, n: usize) -> Result<usize> {
    u32::try_from(n)
        .ok()
        .and_then(|n| k.checked_pow(n))
        .filter(|&p| p <= 1 << 26)
        .ok_or_else(|| Error::InvalidParameter(format!("{k}^{n} is too large")))
}

/// Digits `x_1 … x_n` of `index` in base `k`.
pub fn word_digits(index: usize, k: usize, n: usize) -> Vec<usize> {
    let mut digits = vec![0; n];
    let mut rest = index;
    for d in digits.iter_mut().rev() {
        *d = rest % k;
        rest /= k;
    }
    digits
}

pub fn word_index(digits: &[usize], k: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * k + d)
}

/// Display form of a word: one character per symbol for `k ≤ 36`,
/// dot-separated numbers otherwise.
pub fn word_name(digits: &[usize], k: usize) -> String {
    if k <= 36 {
        digits
            .iter()
            .map(|&d| char::from_digit(d as u32, 36).unwrap())
            .collect()
    } else {
        digits
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Oriented de Bruijn graph: `x_1 … x_N --R_y--> x_2 … x_N y`.
/// For `N = 0` this is the rose with `k` loops.
pub fn de_bruijn(k: usize, n: usize) -> Result<Graph> {
    check_k(k)?;
    let size = pow(k, n)?;
    let mut b = GraphBuilder::oriented();
    for v in 0..size {
        b.add_vertex(Some(word_name(&word_digits(v, k, n), k)));
    }
    for v in 0..size {
        for y in 0..k {
            b.add_edge(v, (v * k + y) % size, Some(format!("R_{y}")));
        }
    }
    b.build()
}

/// The rose: one vertex with `k` loops labelled `R_0 … R_{k-1}`.
pub fn rose(k: usize) -> Result<Graph> {
    de_bruijn(k, 0)
}

/// Oriented cycle `0 → 1 → … → M-1 → 0`, or the path on `[-w, w]` marked
/// as a segment of the infinite line.
pub fn cycle(length: Length) -> Result<Graph> {
    match length {
        Length::Finite(m) => {
            check_m(m)?;
            let mut b = GraphBuilder::oriented();
            for i in 0..m {
                b.add_vertex(Some(i.to_string()));
            }
            for i in 0..m {
                b.add_edge(i, (i + 1) % m, None);
            }
            b.build()
        }
        Length::Infinite { window } => {
            if window == 0 {
                return Err(Error::InvalidParameter("window must be at least 1".into()));
            }
            let w = window as i64;
            let mut b = GraphBuilder::oriented();
            for i in -w..=w {
                b.add_vertex(Some(i.to_string()));
            }
            for i in 0..2 * window {
                b.add_edge(i, i + 1, None);
            }
            Ok(b.build()?.into_segment())
        }
    }
}

/// Shorthand for a finite cycle.
pub fn cycle_m(m: usize) -> Result<Graph> {
    cycle(Length::Finite(m))
}

/// Spider-web graph: `(x_1 … x_N, j) --R_y--> (x_2 … x_N y, j+1)` with
/// slices taken mod `M`. With an infinite length, slices run over the
/// window `[-w, w]` and edges leaving the window are dropped.
pub fn spider_web(k: usize, n: usize, length: Length) -> Result<Graph> {
    check_k(k)?;
    let size = pow(k, n)?;
    let (slices, offset, wraps) = match length {
        Length::Finite(m) => {
            check_m(m)?;
            (m, 0i64, true)
        }
        Length::Infinite { window } => {
            if window == 0 {
                return Err(Error::InvalidParameter("window must be at least 1".into()));
            }
            (2 * window + 1, -(window as i64), false)
        }
    };
    let mut b = GraphBuilder::oriented();
    for j in 0..slices {
        for v in 0..size {
            let name = format!(
                "({},{})",
                word_name(&word_digits(v, k, n), k),
                j as i64 + offset
            );
            b.add_vertex(Some(name));
        }
    }
    for j in 0..slices {
        if !wraps && j + 1 == slices {
            break;
        }
        let next = (j + 1) % slices;
        for v in 0..size {
            for y in 0..k {
                b.add_edge(
                    j * size + v,
                    next * size + (v * k + y) % size,
                    Some(format!("R_{y}")),
                );
            }
        }
    }
    let g = b.build()?;
    Ok(if wraps { g } else { g.into_segment() })
}

/// Shorthand for a finite spider-web graph.
pub fn spider_web_m(k: usize, n: usize, m: usize) -> Result<Graph> {
    spider_web(k, n, Length::Finite(m))
}

/// Weighted theta graph with a single loop; see [`theta_graph_m`].
pub fn theta_graph(k: usize, n: usize) -> Result<Graph> {
    theta_graph_m(k, n, 1)
}

/// Disjoint union of an oriented `M`-cycle, `M(k-1)²k^{N-i-2}` oriented
/// paths of length `i` for `0 ≤ i ≤ N-2`, and `M(k-1)` paths of length
/// `N-1`; every edge has weight `k`. It has `M·k^N` vertices.
pub fn theta_graph_m(k: usize, n: usize, m: usize) -> Result<Graph> {
    check_k(k)?;
    check_m(m)?;
    pow(k, n)?;
    let weight = k as f64;
    let mut b = GraphBuilder::oriented();
    for i in 0..m {
        b.add_vertex(Some(format!("c{i}")));
    }
    for i in 0..m {
        b.add_weighted_edge(i, (i + 1) % m, None, weight);
    }
    let mut path_id = 0;
    let mut add_paths = |b: &mut GraphBuilder, count: usize, len: usize| {
        for _ in 0..count {
            b.add_vertex(Some(format!("p{path_id}.0")));
            for t in 1..=len {
                let v = b.add_vertex(Some(format!("p{path_id}.{t}")));
                b.add_weighted_edge(v - 1, v, None, weight);
            }
            path_id += 1;
        }
    };
    if n >= 2 {
        for i in 0..=n - 2 {
            let count = m * (k - 1) * (k - 1) * pow(k, n - i - 2)?;
            add_paths(&mut b, count, i);
        }
    }
    if n >= 1 {
        add_paths(&mut b, m * (k - 1), n - 1);
    }
    b.build()
}

/// Random oriented multigraph with `n` vertices and `m` edges, loops and
/// parallel edges allowed.
pub fn random_oriented<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut b = GraphBuilder::oriented().with_vertices(n);
    if n > 0 {
        for _ in 0..m {
            let src = rng.random_range(0..n);
            let dst = rng.random_range(0..n);
            b.add_edge(src, dst, None);
        }
    }
    b.build().expect("random graph is valid")
}
