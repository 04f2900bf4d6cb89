#![allow(dead_code)]

use std::path::PathBuf;

use pmavoid_core::{io, EdgeSet, Multigraph};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::Rng;

pub fn catalogue(name: &str) -> Vec<Multigraph> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    io::read_catalogue(&text).into_iter().map(|r| r.expect("catalogue line parses")).collect()
}

pub fn random_multigraph(rng: &mut StdRng, n: usize, m: usize) -> Multigraph {
    let edges: Vec<(usize, usize)> = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (u, v)
        })
        .collect();
    Multigraph::new(n, edges).unwrap()
}

pub fn random_subset(rng: &mut StdRng, m: usize, p: f64) -> EdgeSet {
    (0..m).filter(|_| rng.gen_bool(p)).collect()
}

pub fn arb_multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n - 1), 0..=max_m).prop_map(move |pairs| {
            let edges = pairs.into_iter().map(|(u, v)| (u, if v >= u { v + 1 } else { v }));
            Multigraph::new(n, edges).unwrap()
        })
    })
}

/// Matching number by dynamic programming over vertex subsets.
pub fn brute_matching_number(g: &Multigraph, x: &EdgeSet) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    let mut nbr = vec![0u32; n];
    for (e, u, v) in g.edges() {
        if !x.contains(e) {
            nbr[u] |= 1 << v;
            nbr[v] |= 1 << u;
        }
    }
    let mut memo = vec![u8::MAX; 1 << n];
    fn go(rest: u32, nbr: &[u32], memo: &mut [u8]) -> u8 {
        if rest == 0 {
            return 0;
        }
        if memo[rest as usize] != u8::MAX {
            return memo[rest as usize];
        }
        let v = rest.trailing_zeros() as usize;
        let without = rest & !(1 << v);
        let mut best = go(without, nbr, memo);
        let mut cand = nbr[v] & without;
        while cand != 0 {
            let w = cand.trailing_zeros();
            cand &= cand - 1;
            best = best.max(1 + go(without & !(1 << w), nbr, memo));
        }
        memo[rest as usize] = best;
        best
    }
    go(((1u64 << n) - 1) as u32, &nbr, &mut memo) as usize
}

/// Whether the edges outside `removed` leave a cycle on the vertex mask.
pub fn has_cycle(g: &Multigraph, removed: &[bool], side: &[bool]) -> bool {
    // A forest on k vertices with c components has k - c edges.
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for (e, u, v) in g.edges() {
        if removed[e] || !side[u] || !side[v] {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return true;
        }
        parent[a] = b;
    }
    false
}
