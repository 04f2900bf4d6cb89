//! Exact maximum independent sets by branch and bound on bitsets.

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph, VertexSet};

/// Largest vertex count the bitset search supports at all.
pub const HARD_CAP: usize = 128;

type Bits = u128;

fn bits_iter(mut b: Bits) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if b == 0 {
            None
        } else {
            let v = b.trailing_zeros() as usize;
            b &= b - 1;
            Some(v)
        }
    })
}

struct Search {
    adj: Vec<Bits>,
    prefer: Bits,
    best: Bits,
    best_key: (u32, u32),
}

impl Search {
    fn key(&self, set: Bits) -> (u32, u32) {
        (set.count_ones(), (set & self.prefer).count_ones())
    }

    /// Upper bound on the independence number of the candidates: a greedy
    /// clique cover, each clique contributing at most one vertex.
    fn cover_bound(&self, mut cand: Bits) -> u32 {
        let mut cliques = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            let mut clique_cand = cand & self.adj[v];
            cand &= !(1 << v);
            while clique_cand != 0 {
                let w = clique_cand.trailing_zeros() as usize;
                cand &= !(1 << w);
                clique_cand &= self.adj[w];
            }
            cliques += 1;
        }
        cliques
    }

    fn recurse(&mut self, current: Bits, mut cand: Bits) {
        // Candidates with no candidate neighbour belong to every maximum
        // extension; taking them first never changes the optimum.
        let mut current = current;
        for v in bits_iter(cand) {
            if self.adj[v] & cand == 0 {
                current |= 1 << v;
                cand &= !(1 << v);
            }
        }
        if cand == 0 {
            let key = self.key(current);
            if key > self.best_key {
                self.best_key = key;
                self.best = current;
            }
            return;
        }
        let (size, pref) = self.key(current);
        let size_ub = size + self.cover_bound(cand);
        let pref_ub = pref + (cand & self.prefer).count_ones();
        if (size_ub, pref_ub) <= self.best_key {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        self.recurse(current | 1 << v, cand & !(1 << v) & !self.adj[v]);
        self.recurse(current, cand & !(1 << v));
    }
}

/// A maximum independent set of `G - X`. Among maximum sets it maximizes
/// the number of vertices from `prefer`, then is lexicographically smallest.
pub fn maximum_independent_set(g: &Multigraph, x: &EdgeSet, prefer: &VertexSet, cap: usize) -> Result<VertexSet> {
    let n = g.vertex_count();
    let cap = cap.min(HARD_CAP);
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    g.check_edges(x)?;
    g.check_vertices(prefer)?;
    let mut adj = vec![0 as Bits; n];
    for (e, u, v) in g.edges() {
        if !x.contains(e) {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let mut search = Search {
        adj,
        prefer: prefer.iter().fold(0, |b, v| b | 1 << v),
        best: 0,
        best_key: (0, 0),
    };
    let all = if n == 0 { 0 } else { Bits::MAX >> (HARD_CAP - n) };
    search.recurse(0, all);
    Ok(bits_iter(search.best).collect())
}

/// Whether `set` is independent in `G - X`.
pub fn is_independent(g: &Multigraph, x: &EdgeSet, set: &VertexSet) -> bool {
    g.edges()
        .all(|(e, u, v)| x.contains(e) || !(set.contains(u) && set.contains(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn brute(g: &Multigraph) -> usize {
        let n = g.vertex_count();
        (0u32..1 << n)
            .filter(|&m| g.edges().all(|(_, u, v)| m >> u & 1 == 0 || m >> v & 1 == 0))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn matches_brute_force_on_named_graphs() {
        for g in [named::petersen(), named::cube(), named::k4(), named::cycle(7), named::star(5)] {
            let i = maximum_independent_set(&g, &EdgeSet::new(), &VertexSet::new(), 64).unwrap();
            assert!(is_independent(&g, &EdgeSet::new(), &i));
            assert_eq!(i.len(), brute(&g));
        }
    }

    #[test]
    fn lexicographically_smallest_among_ties() {
        let c6 = named::cycle(6);
        let i = maximum_independent_set(&c6, &EdgeSet::new(), &VertexSet::new(), 64).unwrap();
        assert_eq!(i, VertexSet::from([0, 2, 4]));
        let j = maximum_independent_set(&c6, &EdgeSet::new(), &VertexSet::from([1]), 64).unwrap();
        assert_eq!(j, VertexSet::from([1, 3, 5]));
    }

    #[test]
    fn deleted_edges_are_ignored() {
        let g = named::path(2);
        let i = maximum_independent_set(&g, &EdgeSet::from([0]), &VertexSet::new(), 64).unwrap();
        assert_eq!(i.len(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        let g = named::coxeter();
        assert_eq!(
            maximum_independent_set(&g, &EdgeSet::new(), &VertexSet::new(), 24),
            Err(Error::CapExceeded { n: 28, cap: 24 })
        );
    }
}
