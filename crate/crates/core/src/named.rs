//! A handful of well-known small graphs used as fixtures and reference inputs.

use crate::graph::Multigraph;

fn build(n: usize, edges: Vec<(usize, usize)>) -> Multigraph {
    Multigraph::new(n, edges).expect("named graphs are well formed")
}

/// `K_2^3`: two vertices joined by three parallel edges.
pub fn theta() -> Multigraph {
    build(2, vec![(0, 1), (0, 1), (0, 1)])
}

pub fn k4() -> Multigraph {
    complete(4)
}

pub fn complete(n: usize) -> Multigraph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    build(n, e)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut e = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            e.push((u, v));
        }
    }
    build(a + b, e)
}

pub fn k33() -> Multigraph {
    complete_bipartite(3, 3)
}

pub fn cycle(n: usize) -> Multigraph {
    build(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

pub fn path(n: usize) -> Multigraph {
    build(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// Star with centre `0` and `leaves` leaves.
pub fn star(leaves: usize) -> Multigraph {
    build(leaves + 1, (1..=leaves).map(|i| (0, i)).collect())
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Multigraph {
    generalized_petersen(5, 2)
}

/// `GP(n, k)`: outer cycle `0..n`, inner vertices `n..2n` joined with step `k`.
pub fn generalized_petersen(n: usize, k: usize) -> Multigraph {
    let mut e = Vec::new();
    for i in 0..n {
        e.push((i, (i + 1) % n));
    }
    for i in 0..n {
        e.push((i, i + n));
    }
    for i in 0..n {
        let j = (i + k) % n;
        if 2 * k == n && j < i {
            continue;
        }
        e.push((i + n, j + n));
    }
    build(2 * n, e)
}

/// Heawood graph: 14-cycle with chords `i -- i+5` at even `i`.
pub fn heawood() -> Multigraph {
    let mut e: Vec<_> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for i in (0..14).step_by(2) {
        e.push((i, (i + 5) % 14));
    }
    build(14, e)
}

/// Coxeter graph on 28 vertices: three 7-cycles with steps 1, 2 and 3
/// (`a`, `b`, `c`) and centres `d_i` joined to `a_i`, `b_i`, `c_i`.
pub fn coxeter() -> Multigraph {
    let a = |i: usize| i % 7;
    let b = |i: usize| 7 + i % 7;
    let c = |i: usize| 14 + i % 7;
    let d = |i: usize| 21 + i % 7;
    let mut e = Vec::new();
    for i in 0..7 {
        e.push((a(i), a(i + 1)));
        e.push((b(i), b(i + 2)));
        e.push((c(i), c(i + 3)));
        e.push((d(i), a(i)));
        e.push((d(i), b(i)));
        e.push((d(i), c(i)));
    }
    build(28, e)
}

/// Prism over an `n`-cycle: rims `0..n` and `n..2n` joined by rungs.
pub fn prism(n: usize) -> Multigraph {
    let mut e = Vec::new();
    for i in 0..n {
        e.push((i, (i + 1) % n));
        e.push((n + i, n + (i + 1) % n));
        e.push((i, n + i));
    }
    build(2 * n, e)
}

/// 3-dimensional cube.
pub fn cube() -> Multigraph {
    let mut e = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                e.push((v, v | bit));
            }
        }
    }
    build(8, e)
}
