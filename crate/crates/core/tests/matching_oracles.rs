mod common;

use common::{arb_multigraph, brute_matching_number, random_multigraph, random_subset};
use pmavoid_core::graph::delete_edges;
use pmavoid_core::matching::{
    gallai_edmonds, matching_number, max_deficiency_barrier, maximum_matching, odd_components, perfect_matching_avoiding,
};
use pmavoid_core::{named, EdgeSet, Multigraph, VertexSet};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Largest `oc(G - S) - |S|` over all vertex subsets.
fn brute_max_deficiency(g: &Multigraph) -> i64 {
    let n = g.vertex_count();
    (0u32..1 << n)
        .map(|mask| {
            let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            odd_components(g, &s).len() as i64 - s.len() as i64
        })
        .max()
        .unwrap()
}

#[test]
fn petersen_avoids_every_pair_of_edges() {
    let p = named::petersen();
    for a in 0..15 {
        for b in a + 1..15 {
            let x = EdgeSet::from([a, b]);
            let m = perfect_matching_avoiding(&p, &x).unwrap().expect("matching exists");
            assert!(m.is_perfect_in(&p));
            assert!(m.edges.is_disjoint(&x));
        }
    }
}

#[test]
fn small_examples() {
    assert_eq!(matching_number(&named::k4()), 2);
    assert_eq!(matching_number(&named::petersen()), 5);
    assert_eq!(matching_number(&named::star(3)), 1);
    let star = gallai_edmonds(&named::star(3));
    assert_eq!(star.a, VertexSet::from([0]));
    assert_eq!(star.d, VertexSet::from([1, 2, 3]));
    let p3 = gallai_edmonds(&named::path(3));
    assert_eq!(p3.d, VertexSet::from([0, 2]));
    assert_eq!(p3.a, VertexSet::from([1]));
    let theta = named::theta();
    let m = perfect_matching_avoiding(&theta, &EdgeSet::from([0])).unwrap().unwrap();
    assert!(!m.edges.contains(0));
}

#[test]
fn petersen_minus_a_star_has_a_deficiency_two_barrier() {
    let p = named::petersen();
    let x: EdgeSet = p.incident(0).iter().map(|&(_, e)| e).collect();
    let h = delete_edges(&p, &x).unwrap().graph;
    assert!(perfect_matching_avoiding(&p, &x).unwrap().is_none());
    let b = max_deficiency_barrier(&h);
    assert_eq!(b.deficiency, 2);
    assert_eq!(b.deficiency, brute_max_deficiency(&h));
    assert!(b.odd_components.iter().any(|c| c == &VertexSet::from([0])));
}

#[test]
fn berge_tutte_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(7);
    for round in 0..400 {
        let n = 2 + round % 11;
        let g = random_multigraph(&mut rng, n, round % 17);
        let nu = matching_number(&g);
        assert_eq!(nu, brute_matching_number(&g, &EdgeSet::new()));
        let b = max_deficiency_barrier(&g);
        assert_eq!(b.deficiency, (n - 2 * nu) as i64);
        assert_eq!(b.deficiency, brute_max_deficiency(&g));
    }
}

#[test]
fn avoiding_agrees_with_dp_on_cubic_graphs() {
    let mut rng = StdRng::seed_from_u64(11);
    for g in [named::petersen(), named::cube(), named::prism(5), named::heawood(), named::k33()] {
        for _ in 0..60 {
            let x = random_subset(&mut rng, g.edge_count(), 0.2);
            let dp = brute_matching_number(&g, &x);
            let found = perfect_matching_avoiding(&g, &x).unwrap();
            assert_eq!(found.is_some(), 2 * dp == g.vertex_count());
        }
    }
}

proptest! {
    #[test]
    fn maximum_matching_is_valid_and_maximum(g in arb_multigraph(14, 28)) {
        let m = maximum_matching(&g);
        prop_assert!(m.is_matching_in(&g));
        prop_assert_eq!(m.len(), brute_matching_number(&g, &EdgeSet::new()));
    }

    #[test]
    fn gallai_edmonds_partitions_the_vertices(g in arb_multigraph(12, 20)) {
        let ge = gallai_edmonds(&g);
        let n = g.vertex_count();
        prop_assert_eq!(ge.d.len() + ge.a.len() + ge.c.len(), n);
        prop_assert!(ge.d.is_disjoint(&ge.a) && ge.a.is_disjoint(&ge.c));
        // Deleting a D vertex keeps the matching number.
        let nu = matching_number(&g);
        for v in ge.d.iter() {
            let x: EdgeSet = g.incident(v).iter().map(|&(_, e)| e).collect();
            prop_assert_eq!(brute_matching_number(&g, &x), nu);
        }
    }
}
