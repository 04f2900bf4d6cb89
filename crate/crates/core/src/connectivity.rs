//! Girth, edge-connectivity and cyclic edge-connectivity.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::flow::min_cut_between;
use crate::graph::{boundary_mask, bipartition, EdgeSet, Multigraph, VertexSet};

/// A natural number or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Connectivity {
    Finite(usize),
    Infinite,
}

impl Connectivity {
    pub fn is_finite(self) -> bool {
        matches!(self, Self::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Self::Finite(v) => Some(v),
            Self::Infinite => None,
        }
    }

    /// `self >= h` with infinity above every number.
    pub fn at_least(self, h: usize) -> bool {
        match self {
            Self::Finite(v) => v >= h,
            Self::Infinite => true,
        }
    }
}

impl From<Option<usize>> for Connectivity {
    fn from(v: Option<usize>) -> Self {
        v.map_or(Self::Infinite, Self::Finite)
    }
}

impl PartialOrd for Connectivity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Connectivity {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Self::Finite(a), Self::Finite(b)) => a.cmp(b),
            (Self::Finite(_), Self::Infinite) => Ordering::Less,
            (Self::Infinite, Self::Finite(_)) => Ordering::Greater,
            (Self::Infinite, Self::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(v) => write!(f, "{v}"),
            Self::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Connectivity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Self::Finite(v) => s.serialize_u64(*v as u64),
            Self::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Connectivity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Self::Finite(v as usize)),
            Raw::Str(s) if s == "inf" => Ok(Self::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("expected a number or \"inf\", got {s}"))),
        }
    }
}

/// Minimum cycle-separating edge cut together with its two sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicConnectivityReport {
    pub value: Connectivity,
    #[serde(rename = "witnessCut")]
    pub witness_cut: Option<EdgeSet>,
    #[serde(rename = "sideWithCycle1")]
    pub side_with_cycle1: Option<VertexSet>,
    #[serde(rename = "sideWithCycle2")]
    pub side_with_cycle2: Option<VertexSet>,
}

/// Shortest cycle through `v` in the subgraph induced by `alive`, as a
/// vertex sequence.
pub(crate) fn shortest_cycle_through(g: &Multigraph, alive: &[bool], v: usize) -> Option<Vec<usize>> {
    const ROOT: usize = usize::MAX;
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![(usize::MAX, usize::MAX); n];
    let mut branch = vec![ROOT; n];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    let mut best: Option<(usize, usize, usize)> = None;
    while let Some(a) = queue.pop_front() {
        if best.is_some_and(|(len, _, _)| 2 * dist[a] + 1 >= len) {
            break;
        }
        for &(b, e) in g.incident(a) {
            if !alive[b] {
                continue;
            }
            if dist[b] == usize::MAX {
                dist[b] = dist[a] + 1;
                parent[b] = (a, e);
                branch[b] = if a == v { e } else { branch[a] };
                queue.push_back(b);
            } else if e != parent[a].1 && e != parent[b].1 && branch[a] != branch[b] {
                let len = dist[a] + dist[b] + 1;
                if best.is_none_or(|(l, _, _)| len < l) {
                    best = Some((len, a, b));
                }
            }
        }
    }
    let (_, a, b) = best?;
    let mut left = vec![a];
    while *left.last().unwrap() != v {
        left.push(parent[*left.last().unwrap()].0);
    }
    left.reverse();
    let mut x = b;
    while x != v {
        left.push(x);
        x = parent[x].0;
    }
    Some(left)
}

/// A shortest cycle of the subgraph induced by `alive`.
pub(crate) fn shortest_cycle(g: &Multigraph, alive: &[bool]) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for v in g.vertices().filter(|&v| alive[v]) {
        if let Some(c) = shortest_cycle_through(g, alive, v) {
            if best.as_ref().is_none_or(|b| c.len() < b.len()) {
                best = Some(c);
            }
        }
    }
    best
}

/// Length of a shortest circuit; parallel edges form circuits of length 2.
pub fn girth(g: &Multigraph) -> Connectivity {
    let alive = vec![true; g.vertex_count()];
    shortest_cycle(g, &alive).map(|c| c.len()).into()
}

/// Global minimum edge cut.
pub fn edge_connectivity(g: &Multigraph) -> Result<usize> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    let mut source = vec![false; n];
    source[0] = true;
    let mut best = usize::MAX;
    for t in 1..n {
        let mut sink = vec![false; n];
        sink[t] = true;
        let (f, _) = min_cut_between(g, &source, &sink, best);
        best = best.min(f);
        if best == 0 {
            break;
        }
    }
    Ok(best)
}

/// Shortest cycles through each vertex, through each edge, and a shortest
/// cycle avoiding each of those; deduplicated by vertex set.
fn candidate_cycles(g: &Multigraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let all = vec![true; n];
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut first: Vec<Vec<usize>> = Vec::new();
    let mut push = |c: Vec<usize>, out: &mut Vec<Vec<usize>>| {
        let mut key = c;
        key.sort_unstable();
        if seen.insert(key.clone()) {
            out.push(key);
        }
    };
    for v in 0..n {
        if let Some(c) = shortest_cycle_through(g, &all, v) {
            push(c, &mut first);
        }
    }
    for (e, u, w) in g.edges() {
        if let Some(p) = shortest_path_avoiding_edge(g, u, w, e) {
            push(p, &mut first);
        }
    }
    let mut more = Vec::new();
    for c in &first {
        let mut alive = all.clone();
        for &v in c {
            alive[v] = false;
        }
        if let Some(d) = shortest_cycle(g, &alive) {
            push(d, &mut more);
        }
    }
    first
        .into_iter()
        .chain(more)
        .map(|c| {
            let mut m = vec![false; n];
            for v in c {
                m[v] = true;
            }
            m
        })
        .collect()
}

fn shortest_path_avoiding_edge(g: &Multigraph, from: usize, to: usize, skip: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(a) = queue.pop_front() {
        for &(b, e) in g.incident(a) {
            if e == skip || seen[b] {
                continue;
            }
            seen[b] = true;
            parent[b] = a;
            if b == to {
                let mut path = vec![to];
                let mut x = to;
                while x != from {
                    x = parent[x];
                    path.push(x);
                }
                return Some(path);
            }
            queue.push_back(b);
        }
    }
    None
}

/// Exhaustive search for a cycle-separating cut with at most `budget` edges.
/// Enumerates connected vertex sets containing vertex 0 by deciding frontier
/// vertices one at a time; both sides of a minimum cycle-separating cut can
/// be taken connected, so this finds the minimum if it is within budget.
pub(crate) struct CutSearch<'g> {
    g: &'g Multigraph,
    in_s: Vec<bool>,
    out: Vec<bool>,
    budget: usize,
    best: Option<(usize, Vec<bool>)>,
}

impl<'g> CutSearch<'g> {
    pub(crate) fn run(g: &'g Multigraph, budget: usize) -> Option<(usize, Vec<bool>)> {
        let n = g.vertex_count();
        if n == 0 {
            return None;
        }
        let mut search = Self {
            g,
            in_s: vec![false; n],
            out: vec![false; n],
            budget,
            best: None,
        };
        search.in_s[0] = true;
        search.recurse(0);
        search.best
    }

    fn recurse(&mut self, cut: usize) {
        if self.is_done() || cut > self.budget {
            return;
        }
        let g = self.g;
        let frontier = g
            .vertices()
            .find(|&w| !self.in_s[w] && !self.out[w] && g.neighbors(w).any(|u| self.in_s[u]));
        let Some(w) = frontier else {
            if cut <= self.budget && self.both_sides_cyclic() {
                self.best = Some((cut, self.in_s.clone()));
                self.budget = cut.saturating_sub(1);
            }
            return;
        };
        let to_out = g.neighbors(w).filter(|&u| self.out[u]).count();
        let to_in = g.neighbors(w).filter(|&u| self.in_s[u]).count();
        if cut + to_out <= self.budget && !self.is_done() {
            self.in_s[w] = true;
            self.recurse(cut + to_out);
            self.in_s[w] = false;
        }
        if cut + to_in <= self.budget && !self.is_done() {
            self.out[w] = true;
            self.recurse(cut + to_in);
            self.out[w] = false;
        }
    }

    fn is_done(&self) -> bool {
        self.best.as_ref().is_some_and(|(c, _)| *c == 0)
    }

    fn both_sides_cyclic(&self) -> bool {
        let rest: Vec<bool> = self.in_s.iter().map(|&b| !b).collect();
        self.g.has_cycle_within(&self.in_s) && self.g.has_cycle_within(&rest)
    }
}

/// Minimum number of edges whose removal separates two subgraphs that both
/// contain a circuit; infinite when no such cut exists (`K_2^3`, `K_4`,
/// `K_{3,3}`, and every graph without two disjoint cycles).
///
/// An upper bound comes from max-flow between pairs of vertex-disjoint
/// short cycles; the bounded cut enumeration then certifies that nothing
/// smaller exists.
pub fn cyclic_edge_connectivity(g: &Multigraph) -> CyclicConnectivityReport {
    let mut best = flow_upper_bound(g);
    let budget = match &best {
        Some((0, _)) => None,
        Some((v, _)) => Some(v - 1),
        None => Some(g.edge_count()),
    };
    if let Some(budget) = budget {
        if let Some(found) = CutSearch::run(g, budget) {
            best = Some(found);
        }
    }
    match best {
        None => CyclicConnectivityReport {
            value: Connectivity::Infinite,
            witness_cut: None,
            side_with_cycle1: None,
            side_with_cycle2: None,
        },
        Some((value, side)) => {
            let n = g.vertex_count();
            CyclicConnectivityReport {
                value: Connectivity::Finite(value),
                witness_cut: Some(boundary_mask(g, &side)),
                side_with_cycle1: Some((0..n).filter(|&v| side[v]).collect()),
                side_with_cycle2: Some((0..n).filter(|&v| !side[v]).collect()),
            }
        }
    }
}

/// Best cycle-separating cut found by max-flow between vertex-disjoint
/// candidate cycles; always an upper bound on the cyclic edge-connectivity.
fn flow_upper_bound(g: &Multigraph) -> Option<(usize, Vec<bool>)> {
    let cycles = candidate_cycles(g);
    let mut best: Option<(usize, Vec<bool>)> = None;
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let (a, b) = (&cycles[i], &cycles[j]);
            if a.iter().zip(b).any(|(x, y)| *x && *y) {
                continue;
            }
            let limit = best.as_ref().map_or(usize::MAX, |(v, _)| v.saturating_sub(1));
            let (f, side) = min_cut_between(g, a, b, limit);
            if best.as_ref().is_none_or(|(v, _)| f < *v) {
                best = Some((f, side));
                if f == 0 {
                    return best;
                }
            }
        }
    }
    best
}

/// Upper bound on the cyclic edge-connectivity from max-flow between
/// vertex-disjoint candidate cycles alone (no enumeration).
pub fn cyclic_connectivity_flow_bound(g: &Multigraph) -> Connectivity {
    flow_upper_bound(g).map(|(v, _)| v).into()
}

/// Smallest order of a cubic graph of girth `g`.
pub fn moore_lower_bound(g: usize) -> Result<usize> {
    if g < 3 {
        return Err(Error::GirthTooSmall(g));
    }
    Ok(if g % 2 == 1 {
        3 * (1usize << ((g - 1) / 2)) - 2
    } else {
        (1usize << (g / 2 + 1)) - 2
    })
}

/// Whether `g` is one of the three cubic graphs without a cycle-separating
/// cut: `K_2^3`, `K_4` or `K_{3,3}`.
pub fn is_small_exception(g: &Multigraph) -> bool {
    if !g.is_cubic() || !g.is_connected() {
        return false;
    }
    match g.vertex_count() {
        2 => true,
        4 => g.is_simple(),
        6 => g.is_simple() && bipartite(g),
        _ => false,
    }
}

fn bipartite(g: &Multigraph) -> bool {
    bipartition(g).is_some()
}

/// Outcome of testing "cyclically `c`-edge-connected cubic graphs have no
/// circuit shorter than `c`" on one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum GirthCheck {
    /// `K_2^3`, `K_4` or `K_{3,3}`.
    Exception,
    /// Hypothesis met and the girth bound holds.
    Holds { girth: Connectivity },
    /// The graph is not cyclically `c`-edge-connected; nothing to check.
    HypothesisNotMet { cyclic: Connectivity },
    /// Hypothesis met but a shorter circuit exists.
    Violated { girth: Connectivity, cyclic: Connectivity },
}

impl GirthCheck {
    pub fn holds(self) -> bool {
        matches!(self, Self::Exception | Self::Holds { .. })
    }
}

pub fn check_girth_hypothesis(g: &Multigraph, c: usize) -> Result<GirthCheck> {
    if !g.is_cubic() {
        return Err(Error::NotRegular(3));
    }
    if is_small_exception(g) {
        return Ok(GirthCheck::Exception);
    }
    let cyclic = cyclic_edge_connectivity(g).value;
    if !cyclic.at_least(c) {
        return Ok(GirthCheck::HypothesisNotMet { cyclic });
    }
    let gi = girth(g);
    Ok(if gi.at_least(c) {
        GirthCheck::Holds { girth: gi }
    } else {
        GirthCheck::Violated { girth: gi, cyclic }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn girths() {
        assert_eq!(girth(&named::theta()), Connectivity::Finite(2));
        assert_eq!(girth(&named::petersen()), Connectivity::Finite(5));
        assert_eq!(girth(&named::heawood()), Connectivity::Finite(6));
        assert_eq!(girth(&named::coxeter()), Connectivity::Finite(7));
        assert_eq!(girth(&named::path(5)), Connectivity::Infinite);
        assert_eq!(girth(&named::star(4)), Connectivity::Infinite);
    }

    #[test]
    fn edge_connectivities() {
        assert_eq!(edge_connectivity(&named::k4()), Ok(3));
        assert_eq!(edge_connectivity(&named::petersen()), Ok(3));
        assert_eq!(edge_connectivity(&named::path(4)), Ok(1));
        assert_eq!(edge_connectivity(&Multigraph::new(1, []).unwrap()), Err(Error::TooFewVertices(1)));
        assert_eq!(edge_connectivity(&Multigraph::new(3, [(0, 1)]).unwrap()), Ok(0));
    }

    #[test]
    fn cyclic_connectivity_small_cases() {
        for g in [named::k33(), named::k4(), named::theta()] {
            let r = cyclic_edge_connectivity(&g);
            assert_eq!(r.value, Connectivity::Infinite);
            assert!(r.witness_cut.is_none());
        }
        assert_eq!(cyclic_edge_connectivity(&named::petersen()).value, Connectivity::Finite(5));
        assert_eq!(cyclic_edge_connectivity(&named::prism(3)).value, Connectivity::Finite(3));
        assert_eq!(cyclic_edge_connectivity(&named::cube()).value, Connectivity::Finite(4));
        assert_eq!(cyclic_edge_connectivity(&named::heawood()).value, Connectivity::Finite(6));
    }

    #[test]
    fn disconnected_cycles_have_empty_cut() {
        let g = Multigraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let r = cyclic_edge_connectivity(&g);
        assert_eq!(r.value, Connectivity::Finite(0));
        assert!(r.witness_cut.unwrap().is_empty());
    }

    #[test]
    fn moore_bounds() {
        assert_eq!(moore_lower_bound(5), Ok(10));
        assert_eq!(moore_lower_bound(6), Ok(14));
        assert_eq!(moore_lower_bound(7), Ok(22));
        assert_eq!(moore_lower_bound(3), Ok(4));
        assert_eq!(moore_lower_bound(2), Err(Error::GirthTooSmall(2)));
    }

    #[test]
    fn girth_hypothesis() {
        assert_eq!(
            check_girth_hypothesis(&named::petersen(), 5),
            Ok(GirthCheck::Holds {
                girth: Connectivity::Finite(5)
            })
        );
        assert_eq!(
            check_girth_hypothesis(&named::petersen(), 6),
            Ok(GirthCheck::HypothesisNotMet {
                cyclic: Connectivity::Finite(5)
            })
        );
        assert_eq!(check_girth_hypothesis(&named::k4(), 100), Ok(GirthCheck::Exception));
        assert_eq!(check_girth_hypothesis(&named::path(3), 3), Err(Error::NotRegular(3)));
    }

    #[test]
    fn connectivity_serializes_infinity() {
        assert_eq!(serde_json::to_string(&Connectivity::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&Connectivity::Finite(5)).unwrap(), "5");
        let back: Connectivity = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(back, Connectivity::Infinite);
    }
}
