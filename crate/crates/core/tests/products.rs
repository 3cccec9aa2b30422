use spiderweb_core::families::{cycle_m, de_bruijn, spider_web_m};
use spiderweb_core::morphisms::{find_iso, IsoConfig, Search};
use spiderweb_core::products::{
    de_bruijn_line_iso, disjoint_union, gamma_line_iso, line_graph, line_tensor_iso, spider_web_tensor_iso, tensor,
};
use spiderweb_core::IsoKind;

#[test]
fn tensor_multiplies_counts_and_projects() {
    let (g, h) = (de_bruijn(2, 2).unwrap(), cycle_m(3).unwrap());
    let t = tensor(&g, &h).unwrap();
    assert_eq!(t.vertex_count(), 12);
    assert_eq!(t.edge_count(), g.edge_count() * h.edge_count());
    for e in t.edges() {
        let (a, b) = (e.id / h.edge_count(), e.id % h.edge_count());
        assert_eq!(e.src, g.edge(a).src * 3 + h.edge(b).src);
        assert_eq!(e.dst, g.edge(a).dst * 3 + h.edge(b).dst);
    }
}

#[test]
fn spider_web_is_tensor_with_cycle() {
    for k in 2..=3 {
        for n in 0..=3 {
            for m in 1..=4 {
                let w = spider_web_tensor_iso(k, n, m).unwrap();
                w.verify().unwrap();
                assert_eq!(w.kind, IsoKind::Strong);
            }
        }
    }
}

#[test]
fn one_slice_spider_web_is_de_bruijn() {
    for n in 0..=3 {
        let s = find_iso(&spider_web_m(2, n, 1).unwrap(), &de_bruijn(2, n).unwrap(), IsoKind::Strong, None, &IsoConfig::default()).unwrap();
        assert!(s.is_found());
    }
}

#[test]
fn line_graph_of_de_bruijn_is_next_level() {
    for (k, n) in [(2, 0), (2, 3), (3, 2)] {
        let lg = line_graph(&de_bruijn(k, n).unwrap()).unwrap();
        assert_eq!(lg.graph.vertex_count(), k.pow(n as u32 + 1));
        for (i, &(e, f)) in lg.pairs.iter().enumerate() {
            assert_eq!(lg.edge_between(e, f), Some(i));
        }
        de_bruijn_line_iso(k, n).unwrap().verify().unwrap();
        gamma_line_iso(k, n).unwrap().verify().unwrap();
    }
}

#[test]
fn line_graph_commutes_with_tensor() {
    for (n, m) in [(1, 2), (2, 3), (3, 1)] {
        line_tensor_iso(&de_bruijn(2, n).unwrap(), &cycle_m(m).unwrap()).unwrap().verify().unwrap();
    }
}

#[test]
fn tensor_distributes_over_disjoint_union() {
    let (a, b, c) = (cycle_m(2).unwrap(), cycle_m(3).unwrap(), de_bruijn(2, 1).unwrap());
    let left = tensor(&disjoint_union(&a, &b).unwrap(), &c).unwrap();
    let right = disjoint_union(&tensor(&a, &c).unwrap(), &tensor(&b, &c).unwrap()).unwrap();
    let s = find_iso(&left, &right, IsoKind::Weak, None, &IsoConfig::default()).unwrap();
    assert!(matches!(s, Search::Found(_)));
}
