mod common;

use common::{brute_matching_number, catalogue};
use pmavoid_core::connectivity::cyclic_edge_connectivity;
use pmavoid_core::construction::{build_counterexample, ConstructionParams};
use pmavoid_core::graph::{boundary, distances_from};
use pmavoid_core::independent::is_independent;
use pmavoid_core::lm::validate_lm_certificate;
use pmavoid_core::matching::perfect_matching_avoiding;
use pmavoid_core::preclusion::{
    check_obstructions, classify, IndependentWitness, independent_witness_exact, verify_moreover_bound, ObstructionVerdict,
    PreclusionVerdict, DEFAULT_MIS_CAP,
};
use pmavoid_core::twofactor::{
    analyze_4path, build_path_witness, build_path_witness_with_cap, detect_position_p1, extends_to_two_factor,
    verify_vertex_seven_circuit, zaslavsky_partition, SevenCircuitChecker,
};
use pmavoid_core::{named, EdgeSet, Error, Multigraph, PathSpec, VertexSet};

/// Every path with `len` edges, each listed once (lower first vertex).
fn paths(g: &Multigraph, len: usize) -> Vec<PathSpec> {
    fn extend(g: &Multigraph, vs: &mut Vec<usize>, es: &mut Vec<usize>, len: usize, out: &mut Vec<PathSpec>) {
        if es.len() == len {
            if vs[0] < vs[len] {
                out.push(PathSpec::new(g, vs.clone(), es.clone()).unwrap());
            }
            return;
        }
        let last = *vs.last().unwrap();
        for &(w, e) in g.incident(last) {
            if !vs.contains(&w) {
                vs.push(w);
                es.push(e);
                extend(g, vs, es, len, out);
                vs.pop();
                es.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in g.vertices() {
        extend(g, &mut vec![v], &mut Vec::new(), len, &mut out);
    }
    out
}

fn star_at(g: &Multigraph, v: usize) -> EdgeSet {
    g.incident(v).iter().map(|&(_, e)| e).collect()
}

#[test]
fn classify_examples() {
    let p = named::petersen();
    for a in 0..15 {
        for b in a + 1..15 {
            let c = classify(&p, &EdgeSet::from([a, b]), 3, 0).unwrap();
            assert!(c.verdict.has_matching());
        }
    }
    let c = classify(&p, &star_at(&p, 0), 3, 1).unwrap();
    match c.verdict {
        PreclusionVerdict::LmIsolated { certificate } => assert!(certificate.steps.is_empty()),
        other => panic!("{other:?}"),
    }
    assert!(independent_witness_exact(&named::cycle(6), &EdgeSet::new(), DEFAULT_MIS_CAP).unwrap().is_none());
    let star = independent_witness_exact(&named::star(3), &EdgeSet::new(), DEFAULT_MIS_CAP).unwrap().unwrap();
    assert_eq!(star.independent, VertexSet::from([1, 2, 3]));
    assert!(!verify_moreover_bound(&named::star(3), &EdgeSet::new(), &star, 0).unwrap());
}

#[test]
fn obstruction_examples() {
    let p = named::petersen();
    let r = check_obstructions(&p, &star_at(&p, 4), 3).unwrap();
    assert_eq!(r.verdict, ObstructionVerdict::CommonVertex { vertex: 4 });
    let k33 = named::k33();
    let pm = perfect_matching_avoiding(&k33, &EdgeSet::new()).unwrap().unwrap().edges;
    assert_eq!(check_obstructions(&k33, &pm, 3).unwrap().verdict, ObstructionVerdict::HasMatching);
}

#[test]
fn obstructions_agree_with_matchings_on_small_catalogue_graphs() {
    let mut bipartite_cases = 0;
    for g in catalogue("cubic_le14.g6").into_iter().filter(|g| g.vertex_count() <= 10) {
        if !cyclic_edge_connectivity(&g).value.at_least(4) {
            continue;
        }
        let m = g.edge_count();
        for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    let x = EdgeSet::from([a, b, c]);
                    let verdict = check_obstructions(&g, &x, 3).unwrap().verdict;
                    let has = 2 * brute_matching_number(&g, &x) == g.vertex_count();
                    assert_eq!(verdict.has_matching(), has, "{g:?} {x:?}");
                    if let ObstructionVerdict::BipartiteSamePartition { partition } = verdict {
                        bipartite_cases += 1;
                        for e in x.iter() {
                            let (u, v) = g.endpoints(e);
                            assert!(partition.side1.contains(u) && partition.side1.contains(v));
                        }
                        let classified = classify(&g, &x, 3, 1).unwrap().verdict;
                        if let PreclusionVerdict::LargeIndependent { witness } = classified {
                            assert!(witness.complement_induced_edges.is_empty());
                        }
                    }
                }
            }
        }
    }
    assert!(bipartite_cases > 0);
}

#[test]
fn counterexample_paths_do_not_extend() {
    let c = build_counterexample(&ConstructionParams::canonical()).unwrap();
    let g = &c.graph;
    for (p, set) in [(&c.p1, c.witness_for_p1()), (&c.p2, c.witness_for_p2())] {
        assert!(extends_to_two_factor(g, p).unwrap().is_none());
        assert_eq!(set.len(), 23);
        assert!(is_independent(g, &p.edge_set(), &set));
    }
    // Both certificates exist here; LM is tried first.
    let x1 = c.p1.edge_set();
    match classify(g, &x1, 3, 5).unwrap().verdict {
        PreclusionVerdict::LmIsolated { certificate } => {
            validate_lm_certificate(g, &certificate, &x1, 3).unwrap();
        }
        other => panic!("{other:?}"),
    }
    let witness = IndependentWitness::new(g, &x1, c.witness_for_p1()).unwrap();
    assert!(verify_moreover_bound(g, &x1, &witness, 5).unwrap());
    let w1 = build_path_witness_with_cap(g, &c.p1, 64).unwrap();
    let w2 = build_path_witness_with_cap(g, &c.p2, 64).unwrap();
    assert_eq!(w1.independent, c.witness_for_p1());
    assert!(c.x[1..6].iter().all(|&v| w1.independent.contains(v)));
    assert!(c.y[1..6].iter().all(|&v| w2.independent.contains(v)));
    w1.validate(g).unwrap();
    let part = zaslavsky_partition(g, &w1, &w2).unwrap();
    assert_eq!(boundary(g, &part.side1).unwrap(), w1.y.symmetric_difference(&w2.y));
    assert!(zaslavsky_partition(g, &w1, &w1).unwrap().side1.is_empty());
    assert!(matches!(build_path_witness(g, &c.p1), Err(Error::CapExceeded { .. })));
}

#[test]
fn extension_is_a_matching_question() {
    for g in catalogue("cubic_le14.g6").into_iter().filter(|g| g.vertex_count() <= 10) {
        let two_edge_connected = pmavoid_core::connectivity::edge_connectivity(&g).unwrap() >= 2;
        for len in 1..=4 {
            for p in paths(&g, len) {
                let tf = extends_to_two_factor(&g, &p).unwrap();
                let pm = perfect_matching_avoiding(&g, &p.edge_set()).unwrap();
                assert_eq!(tf.is_some(), pm.is_some());
                if let Some(tf) = tf {
                    assert!(tf.is_two_factor_of(&g) && tf.contains_path(&p));
                } else {
                    assert!(!(two_edge_connected && len <= 2));
                }
            }
        }
    }
}

#[test]
fn petersen_three_paths() {
    let g = named::petersen();
    let ps = paths(&g, 3);
    assert_eq!(ps.len(), 60);
    for p in &ps {
        assert!(extends_to_two_factor(&g, p).unwrap().is_some());
        assert!(matches!(build_path_witness(&g, p), Err(Error::Precondition(_))));
    }
    for p in &ps {
        for q in &ps {
            if p != q {
                assert_eq!(detect_position_p1(&g, p, q).unwrap(), None);
            }
        }
    }
}

#[test]
fn four_path_certificates_on_the_catalogue() {
    let mut seen = [0usize; 2];
    for g in catalogue("cubic_le14.g6") {
        if !cyclic_edge_connectivity(&g).value.at_least(4) {
            continue;
        }
        for p in paths(&g, 4) {
            if extends_to_two_factor(&g, &p).unwrap().is_some() {
                continue;
            }
            let Ok(w) = build_path_witness(&g, &p) else { continue };
            w.validate(&g).unwrap();
            let l = p.len();
            assert!((l - 2..=l).contains(&w.path_edges_in_y.len()), "{w:?}");
            if let Ok(cert) = analyze_4path(&g, &p) {
                assert!([4, 5].contains(&cert.intersection_size));
                if cert.claims_hold() {
                    seen[cert.intersection_size - 4] += 1;
                }
            }
        }
    }
    assert!(seen.iter().sum::<usize>() > 0, "{seen:?}");
}

#[test]
fn coxeter_vertices_avoid_seven_circuits() {
    let g = named::coxeter();
    let checker = SevenCircuitChecker::new(&g).unwrap();
    for v in g.vertices() {
        let tf = checker.check(v).unwrap();
        assert!(tf.is_two_factor_of(&g));
        // Walk the circuit through v independently.
        let mut len = 0;
        let (mut prev, mut cur) = (usize::MAX, v);
        loop {
            let next = g
                .incident(cur)
                .iter()
                .filter(|&&(_, e)| tf.edges.contains(e))
                .map(|&(w, _)| w)
                .find(|&w| w != prev)
                .unwrap();
            len += 1;
            prev = cur;
            cur = next;
            if cur == v {
                break;
            }
        }
        assert_ne!(len, 7);
        assert_eq!(len, tf.circuit_length_through(&g, v));
    }
    assert!(matches!(verify_vertex_seven_circuit(&named::petersen(), 0), Err(Error::Hypothesis(_))));
    assert!(distances_from(&g, [0]).iter().all(|d| d.unwrap() <= 4));
}
