//! Extending paths of cubic graphs to 2-factors, and the certificates that
//! explain when this is impossible.

use serde::{Deserialize, Serialize};

use crate::connectivity::cyclic_edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::{distances_from, EdgeSet, Multigraph, Partition, PathSpec, VertexSet};
use crate::independent::{is_independent, maximum_independent_set};
use crate::matching::perfect_matching_avoiding;
use crate::signed::{cut_from_bipartite_pair, parity_colouring};

/// Default vertex cap for the exact independent-set search behind witnesses.
pub const DEFAULT_WITNESS_CAP: usize = 24;

/// A spanning 2-regular subgraph, as an edge set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoFactor {
    pub edges: EdgeSet,
}

impl TwoFactor {
    /// Whether every vertex of `g` meets exactly two of the edges.
    pub fn is_two_factor_of(&self, g: &Multigraph) -> bool {
        let mut deg = vec![0usize; g.vertex_count()];
        for e in self.edges.iter() {
            if !g.has_edge(e) {
                return false;
            }
            let (u, v) = g.endpoints(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.iter().all(|&d| d == 2)
    }

    /// Length of the circuit through `v`, walking the factor's edges.
    pub fn circuit_length_through(&self, g: &Multigraph, v: usize) -> usize {
        let mut prev_edge = usize::MAX;
        let mut cur = v;
        let mut len = 0;
        loop {
            let Some(&(next, e)) = g
                .incident(cur)
                .iter()
                .find(|&&(_, e)| e != prev_edge && self.edges.contains(e))
            else {
                return len;
            };
            len += 1;
            prev_edge = e;
            cur = next;
            if cur == v {
                return len;
            }
        }
    }

    pub fn contains_path(&self, p: &PathSpec) -> bool {
        p.edges().iter().all(|&e| self.edges.contains(e))
    }
}

fn require_cubic(g: &Multigraph) -> Result<()> {
    if g.is_cubic() {
        Ok(())
    } else {
        Err(Error::NotRegular(3))
    }
}

fn check_path(g: &Multigraph, p: &PathSpec) -> Result<()> {
    PathSpec::new(g, p.vertices().to_vec(), p.edges().to_vec()).map(|_| ())
}

/// A 2-factor containing `P`: the complement of a perfect matching that
/// avoids `E(P)`.
pub fn extends_to_two_factor(g: &Multigraph, p: &PathSpec) -> Result<Option<TwoFactor>> {
    require_cubic(g)?;
    check_path(g, p)?;
    let Some(m) = perfect_matching_avoiding(g, &p.edge_set())? else {
        return Ok(None);
    };
    Ok(Some(TwoFactor {
        edges: g.edge_set().difference(&m.edges),
    }))
}

/// The independent-set certificate of a path that does not extend to a
/// 2-factor, with its edge set `Y` split by distance from the path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    #[serde(rename = "P")]
    pub path: PathSpec,
    /// Independent in `G - E(P)`, more than half the vertices.
    #[serde(rename = "I")]
    pub independent: VertexSet,
    /// Edges inside `V - I` plus path edges inside `I`; `G - Y` is bipartite
    /// with sides `I` and `V - I`.
    #[serde(rename = "Y")]
    pub y: EdgeSet,
    #[serde(rename = "pathEdgesInY")]
    pub path_edges_in_y: EdgeSet,
    /// Non-path edges of `Y` within distance `4l - 9` of the path.
    #[serde(rename = "closeEdges")]
    pub close_edges: EdgeSet,
    /// Edges of `Y` at distance at least `4l - 8`.
    #[serde(rename = "distantEdges")]
    pub distant_edges: EdgeSet,
}

impl PathWitness {
    /// Recomputes `Y` and its split from `I` and checks the invariants.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        check_path(g, &self.path)?;
        let fresh = witness_from_set(g, &self.path, self.independent.clone())?;
        if &fresh != self {
            return Err(Error::InvalidWitness("Y or its split does not match I".into()));
        }
        Ok(())
    }

    /// `|V(P) ∩ I|`.
    pub fn path_overlap(&self) -> usize {
        self.path.vertices().iter().filter(|&&v| self.independent.contains(v)).count()
    }
}

fn witness_from_set(g: &Multigraph, p: &PathSpec, independent: VertexSet) -> Result<PathWitness> {
    let pe = p.edge_set();
    g.check_vertices(&independent)?;
    if !is_independent(g, &pe, &independent) {
        return Err(Error::InvalidWitness("I is not independent in G - E(P)".into()));
    }
    if 2 * independent.len() <= g.vertex_count() {
        return Err(Error::InvalidWitness("I does not contain more than half the vertices".into()));
    }
    if let Some(&v) = p.inner_vertices().iter().find(|&&v| !independent.contains(v)) {
        return Err(Error::InvalidWitness(format!("inner path vertex {v} is not in I")));
    }
    let y: EdgeSet = g
        .edges()
        .filter(|&(e, u, v)| {
            let (iu, iv) = (independent.contains(u), independent.contains(v));
            (!iu && !iv) || (iu && iv && pe.contains(e))
        })
        .map(|(e, _, _)| e)
        .collect();
    let l = p.len() as i64;
    let dist = distances_from(g, p.vertices().iter().copied());
    let edge_dist = |e: usize| {
        let (u, v) = g.endpoints(e);
        [dist[u], dist[v]].into_iter().flatten().min().map_or(i64::MAX, |d| d as i64)
    };
    let path_edges_in_y = y.intersection(&pe);
    let mut close_edges = EdgeSet::new();
    let mut distant_edges = EdgeSet::new();
    for e in y.difference(&pe).iter() {
        let d = edge_dist(e);
        if d <= 4 * l - 9 {
            close_edges.insert(e);
        } else {
            distant_edges.insert(e);
        }
    }
    Ok(PathWitness {
        path: p.clone(),
        independent,
        y,
        path_edges_in_y,
        close_edges,
        distant_edges,
    })
}

/// Builds the certificate of a non-extendable path: a maximum independent
/// set of `G - E(P)` with the largest overlap with `V(P)`, lexicographically
/// smallest among those, then pushed onto the inner path vertices by
/// swapping `p_i` for its off-path neighbour where needed.
pub fn build_path_witness(g: &Multigraph, p: &PathSpec) -> Result<PathWitness> {
    build_path_witness_with_cap(g, p, DEFAULT_WITNESS_CAP)
}

pub fn build_path_witness_with_cap(g: &Multigraph, p: &PathSpec, cap: usize) -> Result<PathWitness> {
    if extends_to_two_factor(g, p)?.is_some() {
        return Err(Error::Precondition("the path extends to a 2-factor".into()));
    }
    let pe = p.edge_set();
    let mut i = maximum_independent_set(g, &pe, &p.vertex_set(), cap)?;
    if 2 * i.len() <= g.vertex_count() {
        return Err(Error::Hypothesis(format!(
            "largest independent set of G - E(P) has {} of {} vertices",
            i.len(),
            g.vertex_count()
        )));
    }
    let vs = p.vertices();
    for &pk in vs.iter().skip(1).take(vs.len().saturating_sub(2)) {
        if i.contains(pk) {
            continue;
        }
        let off_path = g
            .incident(pk)
            .iter()
            .find(|&&(_, e)| !pe.contains(e))
            .map(|&(w, _)| w)
            .expect("inner vertex of a cubic graph has an edge off the path");
        i.remove(off_path);
        i.insert(pk);
    }
    witness_from_set(g, p, i)
}

/// A partition whose edge cut is `Y(P) Δ Y(Q)`.
pub fn zaslavsky_partition(g: &Multigraph, wp: &PathWitness, wq: &PathWitness) -> Result<Partition> {
    wp.validate(g)?;
    wq.validate(g)?;
    cut_from_bipartite_pair(g, &wp.y, &wq.y).map(|(p, _)| p)
}

/// Two 3-paths sharing their middle edge whose four ends admit the
/// colouring obstruction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P1Witness {
    /// `(v2, v3)` in the orientation of the first path.
    #[serde(rename = "sharedEdge")]
    pub shared_edge: (usize, usize),
    /// Proper 2-colouring of `G - {v2, v3}`; `side1` holds `v1` and `v4`.
    pub colouring: Partition,
}

/// Detects two 3-paths `v1v2v3v4`, `w1w2w3w4` with `v2v3 = w2w3`, four
/// distinct ends, and a proper 2-colouring of `G - {v2, v3}` giving `v1`,
/// `v4` one colour and `w1`, `w4` the other.
pub fn detect_position_p1(g: &Multigraph, p: &PathSpec, q: &PathSpec) -> Result<Option<P1Witness>> {
    check_path(g, p)?;
    check_path(g, q)?;
    if p.len() != 3 || q.len() != 3 {
        return Err(Error::InvalidPath("expected paths of length 3".into()));
    }
    if p.edges()[1] != q.edges()[1] {
        return Ok(None);
    }
    let v = p.vertices();
    let q = if q.vertices()[1] == v[1] { q.clone() } else { q.reversed() };
    let w = q.vertices();
    let ends = VertexSet::from([v[0], v[3], w[0], w[3]]);
    if ends.len() != 4 {
        return Ok(None);
    }
    let (v2, v3) = (v[1], v[2]);
    let m = g.edge_count();
    let mut edges = g.edge_list().to_vec();
    // Constraint edges: v1 ~ v4 and w1 ~ w4 equal, v1 ~ w1 different.
    edges.extend([(v[0], v[3]), (w[0], w[3]), (v[0], w[0])]);
    let aux = Multigraph::new(g.vertex_count(), edges)?;
    let colour = parity_colouring(&aux, |e| match e.checked_sub(m) {
        None => {
            let (a, b) = g.endpoints(e);
            (![a, b].iter().any(|&x| x == v2 || x == v3)).then_some(true)
        }
        Some(0 | 1) => Some(false),
        Some(_) => Some(true),
    });
    let Some(colour) = colour else {
        return Ok(None);
    };
    let c1 = colour[v[0]];
    let rest = g.vertices().filter(|&x| x != v2 && x != v3);
    let (side1, side2): (Vec<usize>, Vec<usize>) = rest.partition(|&x| colour[x] == c1);
    Ok(Some(P1Witness {
        shared_edge: (v2, v3),
        colouring: Partition {
            side1: side1.into_iter().collect(),
            side2: side2.into_iter().collect(),
        },
    }))
}

/// Structure of a non-extendable 4-path's certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourPathCertificate {
    /// The path, oriented so that `v5` is the end outside `I` when the
    /// overlap is 4.
    pub path: PathSpec,
    #[serde(rename = "intersectionSize")]
    pub intersection_size: usize,
    /// The single edge inside `V - I` when the overlap is 5.
    pub r: Option<usize>,
    #[serde(rename = "Xi")]
    pub xi: EdgeSet,
    /// `J ∪ {v2}` or `J ∪ {v2, v4}`, with `J = V - I`.
    pub side: VertexSet,
    /// `r` shares no vertex with the path (overlap 5 only).
    #[serde(rename = "rAwayFromPath")]
    pub r_away_from_path: Option<bool>,
    /// `G - Xi` is bipartite with `side` as one side.
    pub bipartite: bool,
    /// Every `Xi` edge has both ends in one side (overlap 5 only).
    #[serde(rename = "sameSide")]
    pub same_side: Option<bool>,
}

impl FourPathCertificate {
    pub fn claims_hold(&self) -> bool {
        self.bipartite && self.r_away_from_path != Some(false) && self.same_side != Some(false)
    }
}

/// The edge at `v` that is not on the path.
fn off_path_edge(g: &Multigraph, pe: &EdgeSet, v: usize) -> usize {
    g.incident(v)
        .iter()
        .map(|&(_, e)| e)
        .find(|&e| !pe.contains(e))
        .expect("cubic vertex has an edge off a path")
}

/// Analyses a 4-path that does not extend to a 2-factor: builds its
/// witness, reads off the overlap with `I`, and checks the bipartition
/// obtained by deleting `Xi`.
pub fn analyze_4path(g: &Multigraph, p: &PathSpec) -> Result<FourPathCertificate> {
    if p.len() != 4 {
        return Err(Error::InvalidPath("expected a path of length 4".into()));
    }
    let w = build_path_witness(g, p)?;
    let overlap = w.path_overlap();
    let i = &w.independent;
    let path = match overlap {
        4 if i.contains(p.vertices()[0]) => p.clone(),
        4 => p.reversed(),
        5 => p.clone(),
        _ => {
            return Err(Error::Hypothesis(format!(
                "path overlaps its independent set in {overlap} vertices"
            )))
        }
    };
    let v = path.vertices();
    let pe = path.edge_set();
    let j: VertexSet = g.vertices().filter(|&x| !i.contains(x)).collect();
    let e22 = off_path_edge(g, &pe, v[1]);
    let (xi, side, r) = if overlap == 4 {
        let e34 = path.edges()[2];
        (EdgeSet::from([e22, e34]), j.union(&VertexSet::from([v[1]])), None)
    } else {
        let inside_j: Vec<usize> = w.y.difference(&pe).iter().collect();
        if inside_j.len() != 1 {
            return Err(Error::Hypothesis(format!(
                "V - I induces {} edges, expected one",
                inside_j.len()
            )));
        }
        let r = inside_j[0];
        let e44 = off_path_edge(g, &pe, v[3]);
        (EdgeSet::from([e22, e44, r]), j.union(&VertexSet::from([v[1], v[3]])), Some(r))
    };
    let bipartite = g
        .edges()
        .all(|(e, a, b)| xi.contains(e) || side.contains(a) != side.contains(b));
    let (r_away_from_path, same_side) = match r {
        Some(r) => {
            let (a, b) = g.endpoints(r);
            let away = !path.vertex_set().contains(a) && !path.vertex_set().contains(b);
            let ends: Vec<bool> = xi
                .iter()
                .flat_map(|e| {
                    let (a, b) = g.endpoints(e);
                    [side.contains(a), side.contains(b)]
                })
                .collect();
            let same = ends.iter().all(|&s| s == ends[0]);
            (Some(away), Some(same))
        }
        None => (None, None),
    };
    Ok(FourPathCertificate {
        path,
        intersection_size: overlap,
        r,
        xi,
        side,
        r_away_from_path,
        bipartite,
        same_side,
    })
}

/// Finds 2-factors avoiding a 7-circuit through a given vertex, after
/// checking once that the graph is cubic and cyclically 7-edge-connected.
pub struct SevenCircuitChecker<'g> {
    g: &'g Multigraph,
}

impl<'g> SevenCircuitChecker<'g> {
    pub fn new(g: &'g Multigraph) -> Result<Self> {
        require_cubic(g)?;
        let c = cyclic_edge_connectivity(g).value;
        if !c.at_least(7) {
            return Err(Error::Hypothesis(format!("cyclic edge-connectivity {c} is below 7")));
        }
        Ok(Self { g })
    }

    /// A 2-factor whose circuit through `v` is not a 7-circuit. Tries to
    /// extend 4-paths from `v` to vertices at distance 4 (any circuit
    /// through such a path has length at least 8), then falls back to
    /// enumerating perfect matchings.
    pub fn check(&self, v: usize) -> Result<TwoFactor> {
        let g = self.g;
        if !g.has_vertex(v) {
            return Err(Error::InvalidVertex(v));
        }
        for p in paths_to_distance_four(g, v) {
            if let Some(tf) = extends_to_two_factor(g, &p)? {
                if tf.circuit_length_through(g, v) != 7 {
                    return Ok(tf);
                }
            }
        }
        let mut matched = vec![false; g.vertex_count()];
        let mut chosen = Vec::new();
        exhaustive_search(g, v, &mut matched, &mut chosen)
            .ok_or_else(|| Error::NotFound(format!("every 2-factor puts vertex {v} on a 7-circuit")))
    }
}

/// Shortest paths of length 4 from `v`, as vertex sequences.
fn paths_to_distance_four(g: &Multigraph, v: usize) -> Vec<PathSpec> {
    let dist = distances_from(g, [v]);
    let mut out = Vec::new();
    let mut stack = vec![(vec![v], vec![])];
    while let Some((vs, es)) = stack.pop() {
        let last = *vs.last().unwrap();
        if vs.len() == 5 {
            out.push(PathSpec::new(g, vs, es).expect("walk along increasing distance is a path"));
            continue;
        }
        for &(w, e) in g.incident(last).iter().rev() {
            if dist[w] == Some(vs.len()) {
                let mut nv = vs.clone();
                let mut ne: Vec<usize> = es.clone();
                nv.push(w);
                ne.push(e);
                stack.push((nv, ne));
            }
        }
    }
    out
}

fn exhaustive_search(g: &Multigraph, v: usize, matched: &mut [bool], chosen: &mut Vec<usize>) -> Option<TwoFactor> {
    let Some(u) = matched.iter().position(|&m| !m) else {
        let m: EdgeSet = chosen.iter().copied().collect();
        let tf = TwoFactor {
            edges: g.edge_set().difference(&m),
        };
        return (tf.circuit_length_through(g, v) != 7).then_some(tf);
    };
    for &(w, e) in g.incident(u) {
        if matched[w] || w == u {
            continue;
        }
        matched[u] = true;
        matched[w] = true;
        chosen.push(e);
        let found = exhaustive_search(g, v, matched, chosen);
        chosen.pop();
        matched[u] = false;
        matched[w] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// One-shot form of [`SevenCircuitChecker`].
pub fn verify_vertex_seven_circuit(g: &Multigraph, v: usize) -> Result<TwoFactor> {
    SevenCircuitChecker::new(g)?.check(v)
}
