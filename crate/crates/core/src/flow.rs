//! Unit-capacity max-flow (Dinic) on undirected multigraphs, used for
//! minimum edge cuts between vertex sets.

use std::collections::VecDeque;

use crate::graph::{Multigraph, VertexSet};

struct Arc {
    to: usize,
    cap: u32,
}

pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    head: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        Self {
            arcs: Vec::new(),
            head: vec![Vec::new(); n],
            level: vec![0; n],
            iter: vec![0; n],
        }
    }

    /// Undirected edge of capacity `cap` in each direction.
    fn add_undirected(&mut self, u: usize, v: usize, cap: u32) {
        self.head[u].push(self.arcs.len());
        self.arcs.push(Arc { to: v, cap });
        self.head[v].push(self.arcs.len());
        self.arcs.push(Arc { to: u, cap });
    }

    fn add_directed(&mut self, u: usize, v: usize, cap: u32) {
        self.head[u].push(self.arcs.len());
        self.arcs.push(Arc { to: v, cap });
        self.head[v].push(self.arcs.len());
        self.arcs.push(Arc { to: u, cap: 0 });
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &a in &self.head[v] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && self.level[arc.to] < 0 {
                    self.level[arc.to] = self.level[v] + 1;
                    q.push_back(arc.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, f: u32) -> u32 {
        if v == t {
            return f;
        }
        while self.iter[v] < self.head[v].len() {
            let a = self.head[v][self.iter[v]];
            let (to, cap) = (self.arcs[a].to, self.arcs[a].cap);
            if cap > 0 && self.level[v] < self.level[to] {
                let d = self.dfs(to, t, f.min(cap));
                if d > 0 {
                    self.arcs[a].cap -= d;
                    self.arcs[a ^ 1].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    /// Max flow from `s` to `t`, stopping early once it exceeds `limit`.
    fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow <= limit && self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, u32::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &a in &self.head[v] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    q.push_back(arc.to);
                }
            }
        }
        seen
    }
}

/// Minimum number of edges separating the disjoint sets `a` and `b`, with the
/// source side of one minimum cut. Stops early (returning a value above
/// `limit`, side unspecified) once the flow exceeds `limit`.
pub(crate) fn min_cut_between(g: &Multigraph, a: &[bool], b: &[bool], limit: usize) -> (usize, Vec<bool>) {
    let n = g.vertex_count();
    let (s, t) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for (_, u, v) in g.edges() {
        net.add_undirected(u, v, 1);
    }
    let big = g.edge_count() as u32 + 1;
    for v in 0..n {
        if a[v] {
            net.add_directed(s, v, big);
        }
        if b[v] {
            net.add_directed(v, t, big);
        }
    }
    let limit = limit.min(u32::MAX as usize - 1) as u32;
    let f = net.max_flow(s, t, limit);
    let mut side = net.reachable(s);
    side.truncate(n);
    (f as usize, side)
}

/// Minimum edge cut between two disjoint vertex sets, with the source side.
pub fn min_edge_cut(g: &Multigraph, a: &VertexSet, b: &VertexSet) -> (usize, VertexSet) {
    let n = g.vertex_count();
    let (f, side) = min_cut_between(g, &a.mask(n), &b.mask(n), usize::MAX);
    (f, (0..n).filter(|&v| side[v]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn cut_between_single_vertices() {
        let g = named::petersen();
        let (f, side) = min_edge_cut(&g, &VertexSet::from([0]), &VertexSet::from([7]));
        assert_eq!(f, 3);
        assert!(side.contains(0) && !side.contains(7));
        let theta = named::theta();
        assert_eq!(min_edge_cut(&theta, &VertexSet::from([0]), &VertexSet::from([1])).0, 3);
    }
}
