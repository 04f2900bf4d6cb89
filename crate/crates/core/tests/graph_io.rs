mod common;

use common::arb_multigraph;
use pmavoid_core::graph::{boundary, delete_edges, subgraph_distance};
use pmavoid_core::io::{emit, emit_graph6, emit_sparse6, parse_graph6, parse_sparse6};
use pmavoid_core::{named, EdgeSet, Multigraph, ParseErrorKind, VertexSet};
use proptest::prelude::*;

fn sorted_pairs(g: &Multigraph) -> Vec<(usize, usize)> {
    let mut v: Vec<_> = g.edges().map(|(_, u, w)| (u.min(w), u.max(w))).collect();
    v.sort_unstable();
    v
}

/// Reference graph6 decoder written from the format description.
fn reference_graph6(s: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes: Vec<u8> = s.bytes().map(|b| b - 63).collect();
    let n = bytes[0] as usize;
    let bits: Vec<bool> = bytes[1..].iter().flat_map(|&b| (0..6).rev().map(move |i| b >> i & 1 == 1)).collect();
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    (n, edges)
}

#[test]
fn k4_and_petersen_decode() {
    let k4 = parse_graph6("C~").unwrap();
    assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
    let p = named::petersen();
    let text = emit_graph6(&p);
    let decoded = parse_graph6(&text).unwrap();
    let (n, mut edges) = reference_graph6(&text);
    edges.sort_unstable();
    assert_eq!(n, 10);
    assert_eq!(sorted_pairs(&decoded), edges);
    assert!(decoded.is_cubic());
    assert_eq!(parse_graph6("").unwrap_err(), pmavoid_core::Error::Parse { offset: 0, kind: ParseErrorKind::Truncated });
}

#[test]
fn boundary_and_distance_examples() {
    let p = named::petersen();
    assert!(boundary(&p, &VertexSet::new()).unwrap().is_empty());
    assert!(boundary(&p, &VertexSet::full(10)).unwrap().is_empty());
    assert_eq!(boundary(&p, &(0..5).collect()).unwrap().len(), 5);
    assert_eq!(subgraph_distance(&p, &VertexSet::from([0]), &VertexSet::from([0, 3])).unwrap(), Some(0));
    let far = (1..10).find(|&v| !p.neighbors(0).any(|w| w == v)).unwrap();
    assert_eq!(subgraph_distance(&p, &VertexSet::from([0]), &VertexSet::from([far])).unwrap(), Some(2));
}

#[test]
fn deleting_edges_keeps_the_rest() {
    let p = named::petersen();
    let at0: EdgeSet = p.incident(0).iter().map(|&(_, e)| e).collect();
    let d = delete_edges(&p, &at0).unwrap();
    assert_eq!(d.graph.degree(0), 0);
    assert_eq!(d.graph.edge_count(), 12);
}

proptest! {
    #[test]
    fn sparse6_round_trips_multigraphs(g in arb_multigraph(70, 60)) {
        let back = parse_sparse6(&emit_sparse6(&g)).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(sorted_pairs(&back), sorted_pairs(&g));
    }

    #[test]
    fn graph6_round_trips_simple_graphs(g in arb_multigraph(70, 80)) {
        let mut pairs = sorted_pairs(&g);
        pairs.dedup();
        let simple = Multigraph::new(g.vertex_count(), pairs.clone()).unwrap();
        let back = parse_graph6(&emit_graph6(&simple)).unwrap();
        prop_assert_eq!(sorted_pairs(&back), pairs);
        prop_assert_eq!(parse_graph6(&emit(&simple)).unwrap(), back);
    }

    #[test]
    fn boundary_is_complement_invariant(g in arb_multigraph(12, 30), mask in any::<u16>()) {
        let n = g.vertex_count();
        let w: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let rest: VertexSet = (0..n).filter(|&v| !w.contains(v)).collect();
        prop_assert_eq!(boundary(&g, &w).unwrap(), boundary(&g, &rest).unwrap());
    }
}
