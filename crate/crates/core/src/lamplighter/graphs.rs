//! Schreier graphs, finite Cayley quotients and Cayley balls of `L_k`.

use std::collections::{HashMap, VecDeque};

use crate::ball::RootedBall;
use crate::error::{Error, Result};
use crate::families::{check_k, check_m, pow, word_digits, word_index, word_name};
use crate::graph::{Graph, GraphBuilder};

use super::action::{act_letter_level, sw_action};
use super::{Generator, LampElement, Letter};

fn digits_u32(index: usize, k: usize, n: usize) -> Vec<u32> {
    word_digits(index, k, n).into_iter().map(|d| d as u32).collect()
}

fn index_u32(digits: &[u32], k: usize) -> usize {
    word_index(&digits.iter().map(|&d| d as usize).collect::<Vec<_>>(), k)
}

fn check_k32(k: usize) -> Result<u32> {
    check_k(k)?;
    u32::try_from(k).map_err(|_| Error::InvalidParameter(format!("k = {k} is too large")))
}

/// `Γ_{k,N}`: the action of `L_k` on words of length `N` with edges
/// `x → c̄_r · x` labelled `cbar_r` (edge id `index(x)·k + r`).
pub fn schreier_level_graph(k: usize, n: usize) -> Result<Graph> {
    let k32 = check_k32(k)?;
    let size = pow(k, n)?;
    let mut b = GraphBuilder::oriented();
    for v in 0..size {
        b.add_vertex(Some(word_name(&word_digits(v, k, n), k)));
    }
    for v in 0..size {
        let x = digits_u32(v, k, n);
        for r in 0..k32 {
            let y = act_letter_level(Letter::new(Generator::CBar(r)), &x, k32);
            b.add_edge(v, index_u32(&y, k), Some(format!("cbar_{r}")));
        }
    }
    b.build()
}

/// Graph of the action on spider-web vertices with respect to
/// `X⁻¹ = {c̄_r⁻¹}`: `(x, j) → (x_2 … x_N (x_1 + r), j + 1)`.
pub fn sw_action_graph(k: usize, n: usize, m: usize) -> Result<Graph> {
    let k32 = check_k32(k)?;
    check_m(m)?;
    let size = pow(k, n)?;
    let inverses: Vec<LampElement> = (0..k32).map(|r| LampElement::cbar(k32, r).inverse()).collect();
    let mut b = GraphBuilder::oriented();
    for j in 0..m {
        for v in 0..size {
            b.add_vertex(Some(format!("({},{j})", word_name(&word_digits(v, k, n), k))));
        }
    }
    for j in 0..m {
        for v in 0..size {
            let x = digits_u32(v, k, n);
            for (r, g) in inverses.iter().enumerate() {
                let (y, j2) = sw_action(g, &x, j, m);
                b.add_edge(
                    j * size + v,
                    j2 * size + index_u32(&y, k),
                    Some(format!("cbar_{r}^-1")),
                );
            }
        }
    }
    b.build()
}

/// Cayley graph of `(⊕_{i=1}^N Z/k) ⋊ Z/Nl` with generators `c^i b`.
/// Element `(a, s)` has id `s·k^N + index(a)`; right multiplication by
/// `c^i b` adds `i` to coordinate `s mod N` and increments `s`.
pub fn finite_quotient_cayley(k: usize, n: usize, l: usize) -> Result<Graph> {
    check_k(k)?;
    if n == 0 || l == 0 {
        return Err(Error::InvalidParameter("need N ≥ 1 and l ≥ 1".into()));
    }
    let size = pow(k, n)?;
    let period = n * l;
    let mut b = GraphBuilder::oriented();
    for s in 0..period {
        for a in 0..size {
            b.add_vertex(Some(format!("({},{s})", word_name(&word_digits(a, k, n), k))));
        }
    }
    for s in 0..period {
        for a in 0..size {
            let digits = word_digits(a, k, n);
            for i in 0..k {
                let mut next = digits.clone();
                next[s % n] = (next[s % n] + i) % k;
                b.add_edge(
                    s * size + a,
                    ((s + 1) % period) * size + word_index(&next, k),
                    Some(format!("cbar_{i}")),
                );
            }
        }
    }
    b.build()
}

/// Radius-`r` ball of `Cay(L_k, X_k)` at the identity, together with the
/// group element at each vertex.
#[derive(Debug, Clone)]
pub struct CayleyBall {
    pub ball: RootedBall,
    pub elements: Vec<LampElement>,
}

/// Breadth-first search from the identity over `X_k ∪ X_k⁻¹`. Edges
/// `g → g c̄_i` are kept when one endpoint is at distance `< r`, matching
/// [`crate::ball::ball`].
pub fn cayley_ball(k: usize, r: usize) -> Result<CayleyBall> {
    let k32 = check_k32(k)?;
    let gens: Vec<LampElement> = (0..k32).map(|i| LampElement::cbar(k32, i)).collect();
    let inverses: Vec<LampElement> = gens.iter().map(|g| g.inverse()).collect();
    let mut index: HashMap<LampElement, usize> = HashMap::new();
    let mut elements = vec![LampElement::identity(k32)];
    let mut dist = vec![0usize];
    index.insert(elements[0].clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        if dist[v] == r {
            continue;
        }
        for g in gens.iter().chain(&inverses) {
            let h = &elements[v] * g;
            if !index.contains_key(&h) {
                index.insert(h.clone(), elements.len());
                elements.push(h);
                dist.push(dist[v] + 1);
                queue.push_back(elements.len() - 1);
            }
        }
        if elements.len() > 1_000_000 {
            return Err(Error::InvalidParameter(format!("Cayley ball of radius {r} is too large")));
        }
    }
    let mut b = GraphBuilder::oriented();
    for e in &elements {
        b.add_vertex(Some(e.to_string()));
    }
    for (v, g) in elements.iter().enumerate() {
        for (i, x) in gens.iter().enumerate() {
            if let Some(&w) = index.get(&(g * x)) {
                if dist[v].min(dist[w]) < r {
                    b.add_edge(v, w, Some(format!("cbar_{i}")));
                }
            }
        }
    }
    Ok(CayleyBall {
        ball: RootedBall {
            graph: b.build()?,
            root: 0,
            radius: r,
            vertex_map: (0..elements.len()).collect(),
        },
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{de_bruijn, spider_web_m};
    use crate::morphisms::{find_iso, IsoConfig, IsoKind};

    fn weakly_iso(g: &Graph, h: &Graph) -> bool {
        find_iso(g, h, IsoKind::Weak, None, &IsoConfig::default())
            .unwrap()
            .is_found()
    }

    #[test]
    fn gamma_2_1_is_complete_with_loops() {
        let g = schreier_level_graph(2, 1).unwrap();
        assert_eq!(g.integer_adjacency().unwrap(), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn gamma_2_2_edge_list() {
        let g = schreier_level_graph(2, 2).unwrap();
        let edges: Vec<(String, String, String)> = g
            .edges()
            .iter()
            .map(|e| {
                (
                    g.display_name(e.src),
                    g.display_name(e.dst),
                    e.label.clone().unwrap(),
                )
            })
            .collect();
        let expect = [
            ("00", "00", "cbar_0"),
            ("00", "10", "cbar_1"),
            ("01", "01", "cbar_0"),
            ("01", "11", "cbar_1"),
            ("10", "11", "cbar_0"),
            ("10", "01", "cbar_1"),
            ("11", "10", "cbar_0"),
            ("11", "00", "cbar_1"),
        ];
        let expect: Vec<(String, String, String)> = expect
            .iter()
            .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()))
            .collect();
        assert_eq!(edges, expect);
    }

    #[test]
    fn gamma_is_weakly_de_bruijn() {
        for n in 0..=3 {
            assert!(weakly_iso(
                &schreier_level_graph(2, n).unwrap(),
                &de_bruijn(2, n).unwrap()
            ));
        }
    }

    #[test]
    fn sw_action_graph_is_weakly_spider_web() {
        for n in 0..=2 {
            for m in 1..=3 {
                assert!(weakly_iso(
                    &sw_action_graph(2, n, m).unwrap(),
                    &spider_web_m(2, n, m).unwrap()
                ));
            }
        }
    }

    #[test]
    fn finite_quotients() {
        let g = finite_quotient_cayley(2, 2, 1).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert!(weakly_iso(&g, &spider_web_m(2, 2, 2).unwrap()));
        assert!(weakly_iso(
            &finite_quotient_cayley(2, 1, 3).unwrap(),
            &spider_web_m(2, 1, 3).unwrap()
        ));
    }

    #[test]
    fn small_cayley_balls() {
        let b0 = cayley_ball(2, 0).unwrap();
        assert_eq!((b0.ball.graph.vertex_count(), b0.ball.graph.edge_count()), (1, 0));
        let b1 = cayley_ball(2, 1).unwrap();
        assert_eq!(b1.ball.graph.vertex_count(), 5);
        assert_eq!(b1.ball.graph.edge_count(), 4);
        let b3 = cayley_ball(3, 3).unwrap();
        let g = &b3.ball.graph;
        let interior = g.distances_from(0, None);
        for v in 0..g.vertex_count() {
            if interior[v].unwrap() < 3 {
                assert_eq!((g.out_degree(v), g.in_degree(v)), (3, 3));
            }
        }
    }
}
