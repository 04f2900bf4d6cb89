//! Maximum matching (Edmonds' blossom algorithm), perfect matchings avoiding a
//! prescribed edge set, the Gallai–Edmonds decomposition and Tutte barriers.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{delete_edges, EdgeSet, Multigraph, VertexSet};

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: EdgeSet,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Whether the edges are pairwise disjoint in `g`.
    pub fn is_matching_in(&self, g: &Multigraph) -> bool {
        let mut used = vec![false; g.vertex_count()];
        for e in self.edges.iter() {
            if !g.has_edge(e) {
                return false;
            }
            let (u, v) = g.endpoints(e);
            if used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }

    pub fn is_perfect_in(&self, g: &Multigraph) -> bool {
        self.is_matching_in(g) && 2 * self.edges.len() == g.vertex_count()
    }
}

/// Tutte barrier: a vertex set `s` with the odd components of `G - s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Barrier {
    pub s: VertexSet,
    #[serde(rename = "oddComponents")]
    pub odd_components: Vec<VertexSet>,
    /// `oc(G - S) - |S|`.
    pub deficiency: i64,
}

impl Barrier {
    /// Computes the odd components of `G - s` from scratch.
    pub fn of(g: &Multigraph, s: VertexSet) -> Self {
        let odd_components = odd_components(g, &s);
        let deficiency = odd_components.len() as i64 - s.len() as i64;
        Self {
            s,
            odd_components,
            deficiency,
        }
    }
}

/// Gallai–Edmonds decomposition: `d` are the vertices missed by some maximum
/// matching, `a` their neighbours outside `d`, `c` the rest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeDecomposition {
    pub d: VertexSet,
    pub a: VertexSet,
    pub c: VertexSet,
}

/// Odd-order components of `G - s`.
pub fn odd_components(g: &Multigraph, s: &VertexSet) -> Vec<VertexSet> {
    let mut alive = vec![true; g.vertex_count()];
    for v in s.iter() {
        alive[v] = false;
    }
    g.components_within(&alive)
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .map(|c| c.into_iter().collect())
        .collect()
}

pub(crate) fn deficiency(g: &Multigraph, s: &VertexSet) -> i64 {
    odd_components(g, s).len() as i64 - s.len() as i64
}

const NONE: usize = usize::MAX;

/// Blossom search state over a simple neighbour structure.
struct Blossom<'g> {
    g: &'g Multigraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    even: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Multigraph) -> Self {
        let n = g.vertex_count();
        Self {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            even: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn reset_forest(&mut self) {
        let n = self.g.vertex_count();
        self.parent.iter_mut().for_each(|p| *p = NONE);
        self.even.iter_mut().for_each(|u| *u = false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        debug_assert_eq!(self.base.len(), n);
    }

    fn lca(&self, mut a: usize, mut b: usize) -> Option<usize> {
        let mut seen = vec![false; self.g.vertex_count()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return Some(b);
            }
            if self.mate[b] == NONE {
                return None;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn contract(&mut self, v: usize, to: usize) -> bool {
        let Some(cur) = self.lca(v, to) else {
            return false;
        };
        self.in_blossom.iter_mut().for_each(|b| *b = false);
        self.mark_path(v, cur, to);
        self.mark_path(to, cur, v);
        for i in 0..self.g.vertex_count() {
            if self.in_blossom[self.base[i]] {
                self.base[i] = cur;
                if !self.even[i] {
                    self.even[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
        true
    }

    fn is_root(&self, v: usize) -> bool {
        self.mate[v] == NONE && self.even[v]
    }

    /// Grows an alternating forest from `roots`; returns the free endpoint of
    /// an augmenting path, if one is found.
    fn grow(&mut self, roots: &[usize]) -> Option<usize> {
        self.reset_forest();
        for &r in roots {
            self.even[r] = true;
            self.queue.push_back(r);
        }
        while let Some(v) = self.queue.pop_front() {
            for &(to, _) in self.g.incident(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_even = self.is_root(to) || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE);
                if to_even {
                    if !self.contract(v, to) {
                        // Two different trees touch: only possible when the
                        // matching is not maximum, which callers exclude.
                        debug_assert!(false, "augmenting path between trees");
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.even[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(&mut self) {
        for root in 0..self.g.vertex_count() {
            if self.mate[root] == NONE {
                if let Some(end) = self.grow(&[root]) {
                    self.augment(end);
                }
            }
        }
    }

    fn matching(&self) -> Matching {
        let mut edges = EdgeSet::new();
        for u in 0..self.g.vertex_count() {
            let v = self.mate[u];
            if v != NONE && u < v {
                let e = self.g.edges_between(u, v).min().expect("matched vertices are adjacent");
                edges.insert(e);
            }
        }
        Matching { edges }
    }
}

/// A maximum-cardinality matching. Roots are scanned in increasing vertex
/// order and neighbours in edge order, so the result depends only on the
/// input; between parallel edges the lowest id is used.
pub fn maximum_matching(g: &Multigraph) -> Matching {
    let mut b = Blossom::new(g);
    b.run();
    b.matching()
}

/// Size of a maximum matching.
pub fn matching_number(g: &Multigraph) -> usize {
    maximum_matching(g).len()
}

/// A perfect matching of `g` using no edge of `x`, if one exists.
pub fn perfect_matching_avoiding(g: &Multigraph, x: &EdgeSet) -> Result<Option<Matching>> {
    let del = delete_edges(g, x)?;
    let m = maximum_matching(&del.graph);
    if 2 * m.len() != g.vertex_count() {
        return Ok(None);
    }
    Ok(Some(Matching {
        edges: del.original_edges(&m.edges),
    }))
}

/// Gallai–Edmonds decomposition from a single maximum matching: the even
/// vertices of the alternating forest grown from all exposed vertices at once
/// form `d`.
pub fn gallai_edmonds(g: &Multigraph) -> GeDecomposition {
    let mut b = Blossom::new(g);
    b.run();
    let exposed: Vec<usize> = g.vertices().filter(|&v| b.mate[v] == NONE).collect();
    let found = b.grow(&exposed);
    debug_assert!(found.is_none(), "matching is maximum");
    let d: VertexSet = g.vertices().filter(|&v| b.even[v]).collect();
    let a: VertexSet = g
        .vertices()
        .filter(|&v| !d.contains(v) && g.neighbors(v).any(|w| d.contains(w)))
        .collect();
    let c = g.vertices().filter(|&v| !d.contains(v) && !a.contains(v)).collect();
    GeDecomposition { d, a, c }
}

/// A barrier of maximum deficiency, enlarged greedily.
///
/// Starts from the Gallai–Edmonds set `A` (which attains the maximum
/// deficiency) and keeps absorbing vertices of non-singleton components of
/// `G - S` while the deficiency does not drop. Neighbours of leaves of a
/// component are tried first, then the remaining vertices of the component.
pub fn max_deficiency_barrier(g: &Multigraph) -> Barrier {
    let ge = gallai_edmonds(g);
    let mut s = ge.a;
    let mut def = deficiency(g, &s);
    loop {
        let mut grown = false;
        let mut alive = vec![true; g.vertex_count()];
        for v in s.iter() {
            alive[v] = false;
        }
        'components: for comp in g.components_within(&alive) {
            if comp.len() < 2 {
                continue;
            }
            for w in absorption_order(g, &comp, &alive) {
                let mut trial = s.clone();
                trial.insert(w);
                let d2 = deficiency(g, &trial);
                if d2 >= def {
                    s = trial;
                    def = d2;
                    grown = true;
                    break 'components;
                }
            }
        }
        if !grown {
            break;
        }
    }
    Barrier::of(g, s)
}

/// Vertices of a component in the order they are tried for absorption:
/// neighbours of leaves first, then everything else, each group by id.
fn absorption_order(g: &Multigraph, comp: &[usize], alive: &[bool]) -> Vec<usize> {
    let inner_degree = |v: usize| g.neighbors(v).filter(|&w| alive[w]).count();
    let mut first: Vec<usize> = Vec::new();
    for &u in comp {
        if inner_degree(u) == 1 {
            if let Some(w) = g.neighbors(u).find(|&w| alive[w]) {
                first.push(w);
            }
        }
    }
    first.sort_unstable();
    first.dedup();
    let rest: Vec<usize> = comp.iter().copied().filter(|v| !first.contains(v)).collect();
    first.extend(rest);
    first
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    /// Exhaustive maximum matching size by recursion on the lowest unmatched vertex.
    fn brute_matching_number(g: &Multigraph) -> usize {
        fn go(g: &Multigraph, used: &mut Vec<bool>, from: usize) -> usize {
            let Some(v) = (from..g.vertex_count()).find(|&v| !used[v]) else {
                return 0;
            };
            used[v] = true;
            let mut best = go(g, used, v + 1);
            let nbrs: Vec<usize> = g.neighbors(v).collect();
            for w in nbrs {
                if !used[w] {
                    used[w] = true;
                    best = best.max(1 + go(g, used, v + 1));
                    used[w] = false;
                }
            }
            used[v] = false;
            best
        }
        go(g, &mut vec![false; g.vertex_count()], 0)
    }

    #[test]
    fn small_maximum_matchings() {
        assert_eq!(maximum_matching(&named::k4()).len(), 2);
        let p = maximum_matching(&named::petersen());
        assert_eq!(p.len(), 5);
        assert_eq!(brute_matching_number(&named::petersen()), 5);
        assert!(p.is_perfect_in(&named::petersen()));
        assert_eq!(maximum_matching(&named::star(3)).len(), 1);
    }

    #[test]
    fn blossom_needed() {
        // Two triangles joined by an edge, plus pendant vertices.
        let g = Multigraph::new(8, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (0, 6), (4, 7)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), brute_matching_number(&g));
        assert_eq!(brute_matching_number(&g), 4);
    }

    #[test]
    fn avoiding_sets() {
        let g = named::petersen();
        let at0: EdgeSet = g.incident(0).iter().map(|&(_, e)| e).collect();
        assert_eq!(perfect_matching_avoiding(&g, &at0).unwrap(), None);
        let theta = named::theta();
        let m = perfect_matching_avoiding(&theta, &EdgeSet::from([0])).unwrap().unwrap();
        assert_eq!(m.edges, EdgeSet::from([1]));
    }

    #[test]
    fn gallai_edmonds_examples() {
        let ge = gallai_edmonds(&named::petersen());
        assert!(ge.d.is_empty() && ge.a.is_empty());
        let ge = gallai_edmonds(&named::star(3));
        assert_eq!(ge.d, VertexSet::from([1, 2, 3]));
        assert_eq!(ge.a, VertexSet::from([0]));
        let ge = gallai_edmonds(&named::path(3));
        assert_eq!(ge.d, VertexSet::from([0, 2]));
        assert_eq!(ge.a, VertexSet::from([1]));
    }

    #[test]
    fn barriers() {
        let b = max_deficiency_barrier(&named::star(3));
        assert_eq!(b.s, VertexSet::from([0]));
        assert_eq!(b.deficiency, 2);
        let b = max_deficiency_barrier(&named::petersen());
        assert_eq!(b.deficiency, 0);
    }
}
