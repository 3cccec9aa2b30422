use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spiderweb_core::derangement::{
    component_derangements, components, graph_derangement, orientation_signs, path_derangement,
    predict_components, root_component, tensor_cycle_iso, Count, Path,
};
use spiderweb_core::families::{cycle_m, de_bruijn, random_oriented, spider_web_m};
use spiderweb_core::products::tensor;
use spiderweb_core::{Error, Graph};

fn connected_random(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.random_range(1..=max_n);
        let g = random_oriented(n, rng.random_range(n.saturating_sub(1)..=2 * n), rng);
        if components(&g).len() == 1 {
            return g;
        }
    }
}

/// Whether `g` maps onto the oriented `d`-cycle, found by propagating
/// residues along edges in both directions.
fn maps_to_cycle(g: &Graph, d: i64) -> bool {
    let mut h: Vec<Option<i64>> = vec![None; g.vertex_count()];
    h[0] = Some(0);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        let hv = h[v].unwrap();
        let next = g.out_edges(v).iter().map(|&e| (g.edge(e).dst, hv + 1))
            .chain(g.in_edges(v).iter().map(|&e| (g.edge(e).src, hv - 1)));
        for (w, want) in next {
            match h[w] {
                None => {
                    h[w] = Some(want.rem_euclid(d));
                    stack.push(w);
                }
                Some(x) if x != want.rem_euclid(d) => return false,
                Some(_) => {}
            }
        }
    }
    true
}

/// The derangement as the largest cycle `g` maps onto, or 0 when it maps
/// onto cycles longer than any of its own closed paths could wrap.
fn derangement_by_homomorphism(g: &Graph) -> u64 {
    let bound = g.edge_count() as i64 + 1;
    if maps_to_cycle(g, bound) {
        return 0;
    }
    (1..bound).rev().find(|&d| maps_to_cycle(g, d)).unwrap() as u64
}

/// Every closed path at `v` of length at most `len`, walked in the
/// underlying graph.
fn closed_paths(u: &Graph, v: usize, len: usize) -> Vec<Path> {
    let mut out = Vec::new();
    let mut stack = vec![(v, Vec::new())];
    while let Some((at, edges)) = stack.pop() {
        if at == v && !edges.is_empty() {
            out.push(Path::new(u, v, edges.clone()).unwrap());
        }
        if edges.len() < len {
            for &e in u.out_edges(at) {
                let mut next = edges.clone();
                next.push(e);
                stack.push((u.edge(e).dst, next));
            }
        }
    }
    out
}

#[test]
fn derangement_matches_homomorphism_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let g = connected_random(&mut rng, 8);
        assert_eq!(graph_derangement(&g).unwrap(), derangement_by_homomorphism(&g));
    }
}

#[test]
fn closed_path_derangements_generate_the_graph_derangement() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let g = connected_random(&mut rng, 4);
        if g.edge_count() > 6 {
            continue;
        }
        let u = g.underlying().unwrap();
        let mut gcd = 0u64;
        for p in closed_paths(&u, 0, 2 * g.vertex_count() + 1) {
            gcd = num_gcd(gcd, path_derangement(&u, &p).unwrap().unsigned_abs());
        }
        assert_eq!(gcd, graph_derangement(&g).unwrap());
    }
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { num_gcd(b, a % b) }
}

#[test]
fn known_derangements() {
    assert_eq!(graph_derangement(&de_bruijn(2, 3).unwrap()).unwrap(), 1);
    assert_eq!(graph_derangement(&cycle_m(6).unwrap()).unwrap(), 6);
    assert_eq!(graph_derangement(&spider_web_m(2, 2, 4).unwrap()).unwrap(), 4);
    let two = tensor(&cycle_m(4).unwrap(), &cycle_m(6).unwrap()).unwrap();
    assert_eq!(component_derangements(&two), vec![12, 12]);
    assert!(matches!(graph_derangement(&two), Err(Error::Disconnected { .. })));
}

#[test]
fn signs_pair_up() {
    let u = de_bruijn(2, 2).unwrap().underlying().unwrap();
    let s = orientation_signs(&u).unwrap();
    for e in u.edges() {
        assert_eq!(s[e.id], -s[u.inverse(e.id).unwrap()]);
    }
}

#[test]
fn component_prediction_matches_union_find() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut graphs: Vec<Graph> = (1..=9).map(|d| cycle_m(d).unwrap()).collect();
    graphs.extend((0..3).map(|n| de_bruijn(2, n).unwrap()));
    graphs.extend((0..30).map(|_| connected_random(&mut rng, 7)));
    for g in &graphs {
        for m in 1..=12 {
            let p = predict_components(g, Some(m)).unwrap();
            let actual = components(&tensor(g, &cycle_m(m as usize).unwrap()).unwrap()).len() as u64;
            assert_eq!(p.canonical, Count::Finite(actual));
        }
    }
}

#[test]
fn residue_formula_undercounts_for_cycle_four_times_ten() {
    let p = predict_components(&cycle_m(4).unwrap(), Some(10)).unwrap();
    assert_eq!((p.canonical, p.residue_formula), (Count::Finite(2), Count::Finite(4)));
    assert!(p.discrepancy());
}

#[test]
fn tensor_with_cycle_recovers_the_graph_exactly_when_m_divides() {
    for d in 1..=8 {
        let g = cycle_m(d).unwrap();
        for m in 1..=8 {
            let ok = tensor_cycle_iso(&g, 0, m);
            assert_eq!(ok.is_ok(), d % m == 0, "d = {d}, M = {m}");
            if let Ok(w) = ok {
                w.verify().unwrap();
                assert_eq!(root_component(&g, 0, m).unwrap().graph.vertex_count(), d);
            }
        }
    }
}

proptest! {
    #[test]
    fn closed_path_derangements_form_a_subgroup(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = connected_random(&mut rng, 5);
        let u = g.underlying().unwrap();
        let der = graph_derangement(&g).unwrap() as i64;
        let paths = closed_paths(&u, 0, 4);
        for p in paths.iter().take(20) {
            let dp = path_derangement(&u, p).unwrap();
            prop_assert_eq!(path_derangement(&u, &p.reversed(&u)).unwrap(), -dp);
            if der == 0 {
                prop_assert_eq!(dp, 0);
            } else {
                prop_assert_eq!(dp % der, 0);
            }
            for q in paths.iter().take(5) {
                let pq = p.concat(&u, q).unwrap();
                prop_assert_eq!(path_derangement(&u, &pq).unwrap(), dp + path_derangement(&u, q).unwrap());
            }
        }
    }
}
