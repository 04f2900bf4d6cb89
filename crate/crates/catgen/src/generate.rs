//! Connected cubic multigraphs by edge insertion.
//!
//! Inserting an edge subdivides two edges (or one edge twice) and joins the
//! two new vertices. Graphs with a bridge come from inserting between two
//! disjoint smaller graphs. Together these reach every connected loopless
//! cubic multigraph, and the published counts are checked to confirm it.

use std::collections::BTreeSet;

use pmavoid_core::connectivity::girth;
use pmavoid_core::Multigraph;
use rayon::prelude::*;

use crate::canon::{canonical_code, from_code};

/// Number of connected loopless cubic multigraphs on `n` vertices.
pub const MULTIGRAPH_COUNTS: [(usize, usize); 8] =
    [(2, 1), (4, 2), (6, 6), (8, 20), (10, 91), (12, 509), (14, 3608), (16, 31856)];
/// Number of connected simple cubic graphs on `n` vertices.
pub const SIMPLE_COUNTS: [(usize, usize); 8] =
    [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85), (14, 509), (16, 4060), (18, 41301)];
/// Number of connected cubic graphs of girth at least 4.
pub const GIRTH4_COUNTS: [(usize, usize); 8] =
    [(4, 0), (6, 1), (8, 2), (10, 6), (12, 22), (14, 110), (16, 792), (18, 7805)];
/// Number of connected cubic graphs of girth at least 5.
pub const GIRTH5_COUNTS: [(usize, usize); 6] = [(10, 1), (12, 2), (14, 9), (16, 49), (18, 455), (20, 5783)];

pub fn expected(table: &[(usize, usize)], n: usize) -> Option<usize> {
    table.iter().find(|&&(k, _)| k == n).map(|&(_, c)| c)
}

/// All graphs obtained from `g` by one edge insertion. With `split = Some(k)`
/// the graph is a disjoint union and only insertions joining the first `k`
/// edges to the rest are produced.
pub fn insertions(g: &Multigraph, split: Option<usize>) -> impl Iterator<Item = Multigraph> + '_ {
    let n = g.vertex_count();
    let m = g.edge_count();
    let (s, t) = (n, n + 1);
    let pairs: Box<dyn Iterator<Item = (usize, usize)>> = match split {
        None => Box::new((0..m).flat_map(move |e| (e..m).map(move |f| (e, f)))),
        Some(k) => Box::new((0..k).flat_map(move |e| (k..m).map(move |f| (e, f)))),
    };
    pairs.map(move |(e, f)| {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .filter(|&(id, _, _)| id != e && id != f)
            .map(|(_, u, v)| (u, v))
            .collect();
        let (u, v) = g.endpoints(e);
        if e == f {
            edges.extend([(u, s), (s, t), (s, t), (t, v)]);
        } else {
            let (p, q) = g.endpoints(f);
            edges.extend([(u, s), (s, v), (p, t), (t, q), (s, t)]);
        }
        Multigraph::new(n + 2, edges).expect("insertion adds no loops")
    })
}

fn disjoint_union(a: &Multigraph, b: &Multigraph) -> Multigraph {
    let k = a.vertex_count();
    let edges = a.edge_list().iter().copied().chain(b.edge_list().iter().map(|&(u, v)| (u + k, v + k)));
    Multigraph::new(k + b.vertex_count(), edges).expect("union of loopless graphs")
}

/// `levels[i]` holds graphs on `2i + 2` vertices.
pub type Levels = Vec<Vec<Multigraph>>;

/// The next level above `levels`: isomorphism classes of children that pass
/// `keep`, in canonical form and sorted by canonical code.
pub fn grow(levels: &[Vec<Multigraph>], keep: impl Fn(&Multigraph) -> bool + Sync) -> Vec<Multigraph> {
    let n = 2 * levels.len() + 2;
    let mut parents: Vec<(Multigraph, Option<usize>)> =
        levels.last().into_iter().flatten().map(|g| (g.clone(), None)).collect();
    let total = levels.len().saturating_sub(1);
    for i in (0..total).take_while(|&i| 2 * i < total) {
        let j = total - 1 - i;
        for (x, a) in levels[i].iter().enumerate() {
            let start = if i == j { x } else { 0 };
            for b in &levels[j][start..] {
                parents.push((disjoint_union(a, b), Some(a.edge_count())));
            }
        }
    }
    let codes: BTreeSet<Vec<u8>> = parents
        .par_iter()
        .flat_map_iter(|(g, split)| {
            insertions(g, *split)
                .filter(|h| keep(h))
                .map(|h| canonical_code(&h))
                .collect::<BTreeSet<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    codes.iter().map(|c| from_code(n, c)).collect()
}

pub fn girth_at_least(g: &Multigraph, k: usize) -> bool {
    girth(g).at_least(k)
}

/// The levels `2, 4, .., max_n` of connected loopless cubic multigraphs.
pub fn multigraph_levels(max_n: usize) -> Levels {
    let theta = Multigraph::new(2, [(0, 1); 3]).expect("theta graph");
    let mut levels = vec![vec![theta]];
    while levels.len() * 2 < max_n {
        let next = grow(&levels, |_| true);
        levels.push(next);
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_levels_match_published_counts() {
        let levels = multigraph_levels(12);
        for level in &levels {
            let n = level[0].vertex_count();
            assert_eq!(Some(level.len()), expected(&MULTIGRAPH_COUNTS, n), "n = {n}");
            let simple = level.iter().filter(|g| g.is_simple()).count();
            assert_eq!(simple, expected(&SIMPLE_COUNTS, n).unwrap_or(0), "n = {n}");
            assert!(level.iter().all(|g| g.is_cubic() && g.is_connected()));
        }
    }
}
