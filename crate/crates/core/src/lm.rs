//! Leaf-matching (LM) reduction: repeatedly delete a degree-1 vertex
//! together with its neighbour until an isolated vertex appears.
//!
//! An LM step preserves the existence of a perfect matching, so an isolated
//! vertex certifies that none exists. Every routine here works on `G - X`
//! while reporting cut sizes in the host graph `G`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::connectivity::cyclic_edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::{boundary_size, EdgeSet, Multigraph};

/// A sequence of LM steps ending in an isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LmCertificate {
    /// `(v_i, w_i)`: the degree-1 vertex and its neighbour removed at step `i`.
    pub steps: Vec<(usize, usize)>,
    pub isolated: usize,
    /// `|∂_G(U_t)|` for `U_t = {v_1, w_1, ..., v_t, w_t}`.
    #[serde(rename = "cutProfile")]
    pub cut_profile: Vec<usize>,
}

/// The residual graph `(G - X) - U`, tracked by an alive mask.
struct Residual<'g> {
    g: &'g Multigraph,
    removed_edge: Vec<bool>,
    alive: Vec<bool>,
}

impl<'g> Residual<'g> {
    fn new(g: &'g Multigraph, x: &EdgeSet) -> Result<Self> {
        g.check_edges(x)?;
        Ok(Self {
            g,
            removed_edge: x.mask(g.edge_count()),
            alive: vec![true; g.vertex_count()],
        })
    }

    fn live_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.g
            .incident(v)
            .iter()
            .filter(|&&(w, e)| self.alive[w] && !self.removed_edge[e])
            .map(|&(w, _)| w)
    }

    fn degree(&self, v: usize) -> usize {
        self.live_edges(v).count()
    }

    /// The unique live neighbour of `v` when `v` has degree 1.
    fn leaf_partner(&self, v: usize) -> Option<usize> {
        let mut it = self.live_edges(v);
        match (it.next(), it.next()) {
            (Some(w), None) => Some(w),
            _ => None,
        }
    }

    fn first_isolated(&self) -> Option<usize> {
        self.g.vertices().find(|&v| self.alive[v] && self.degree(v) == 0)
    }

    fn leaves(&self) -> Vec<(usize, usize)> {
        self.g
            .vertices()
            .filter(|&v| self.alive[v])
            .filter_map(|v| self.leaf_partner(v).map(|w| (v, w)))
            .collect()
    }

    fn key(&self) -> Vec<u64> {
        let mut key = vec![0u64; self.alive.len().div_ceil(64)];
        for (v, &a) in self.alive.iter().enumerate() {
            if a {
                key[v / 64] |= 1 << (v % 64);
            }
        }
        key
    }
}

/// Cut sizes `|∂_G(U_t)|` along a step sequence.
pub fn cut_profile(g: &Multigraph, steps: &[(usize, usize)]) -> Vec<usize> {
    let mut in_u = vec![false; g.vertex_count()];
    steps
        .iter()
        .map(|&(v, w)| {
            in_u[v] = true;
            in_u[w] = true;
            boundary_size(g, &in_u)
        })
        .collect()
}

fn certificate(g: &Multigraph, steps: Vec<(usize, usize)>, isolated: usize) -> LmCertificate {
    let cut_profile = cut_profile(g, &steps);
    LmCertificate {
        steps,
        isolated,
        cut_profile,
    }
}

/// Greedy LM reduction on `G` itself.
pub fn lm_reduce_greedy(g: &Multigraph) -> Option<LmCertificate> {
    lm_reduce_greedy_avoiding(g, &EdgeSet::new()).expect("empty edge set is valid")
}

/// Greedy LM reduction on `G - X`, always reducing at the lowest-id
/// degree-1 vertex.
pub fn lm_reduce_greedy_avoiding(g: &Multigraph, x: &EdgeSet) -> Result<Option<LmCertificate>> {
    let mut r = Residual::new(g, x)?;
    let mut steps = Vec::new();
    loop {
        if let Some(u) = r.first_isolated() {
            return Ok(Some(certificate(g, steps, u)));
        }
        let next = g.vertices().find_map(|v| {
            if r.alive[v] {
                r.leaf_partner(v).map(|w| (v, w))
            } else {
                None
            }
        });
        let Some((v, w)) = next else {
            return Ok(None);
        };
        r.alive[v] = false;
        r.alive[w] = false;
        steps.push((v, w));
    }
}

/// Exhaustive LM reduction on `G` itself.
pub fn lm_reduce_exhaustive(g: &Multigraph) -> Option<LmCertificate> {
    lm_reduce_exhaustive_avoiding(g, &EdgeSet::new()).expect("empty edge set is valid")
}

/// Searches every order of LM operations on `G - X`, memoizing failed
/// residual vertex sets. Returns a certificate iff some order isolates a
/// vertex.
pub fn lm_reduce_exhaustive_avoiding(g: &Multigraph, x: &EdgeSet) -> Result<Option<LmCertificate>> {
    let mut r = Residual::new(g, x)?;
    let mut failed = HashSet::new();
    let mut steps = Vec::new();
    Ok(search(&mut r, &mut failed, &mut steps).map(|u| certificate(g, steps, u)))
}

fn search(r: &mut Residual<'_>, failed: &mut HashSet<Vec<u64>>, steps: &mut Vec<(usize, usize)>) -> Option<usize> {
    if let Some(u) = r.first_isolated() {
        return Some(u);
    }
    if !failed.insert(r.key()) {
        return None;
    }
    for (v, w) in r.leaves() {
        r.alive[v] = false;
        r.alive[w] = false;
        steps.push((v, w));
        if let Some(u) = search(r, failed, steps) {
            return Some(u);
        }
        steps.pop();
        r.alive[v] = true;
        r.alive[w] = true;
    }
    None
}

/// Clauses of the structural lemma on LM sequences of length at least two
/// in `d`-regular cyclically `(d+1)`-edge-connected graphs with `|X| = d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LmStructure {
    /// (i) every edge of `X` meets `{v_1, v_2}`.
    #[serde(rename = "xMeetsV2")]
    pub x_meets_v2: bool,
    /// (ii) `|∂U_1| <= 2d - 2` and `|∂U_t| <= 2d` for `t >= 2`.
    #[serde(rename = "cutBounds")]
    pub cut_bounds: bool,
    /// (iii) edges at `V_t` lie in `X` or go to `W_t`, for every `t`.
    #[serde(rename = "vEdgesToW")]
    pub v_edges_to_w: bool,
}

impl LmStructure {
    pub fn all_hold(&self) -> bool {
        self.x_meets_v2 && self.cut_bounds && self.v_edges_to_w
    }
}

/// Outcome of a successful certificate replay.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LmValidationReport {
    pub steps: usize,
    pub isolated: usize,
    /// Present when the structural lemma's hypotheses hold for this instance.
    pub structure: Option<LmStructure>,
}

/// Replays certificates against one host graph, computing the graph-level
/// hypotheses (regularity, parity, cyclic connectivity) once.
pub struct LmValidator<'g> {
    g: &'g Multigraph,
    d: usize,
    structural: bool,
}

impl<'g> LmValidator<'g> {
    pub fn new(g: &'g Multigraph, d: usize) -> Self {
        let structural = g.is_regular(d)
            && g.vertex_count().is_multiple_of(2)
            && cyclic_edge_connectivity(g).value.at_least(d + 1);
        Self { g, d, structural }
    }

    /// Whether `G` is `d`-regular, of even order and cyclically
    /// `(d+1)`-edge-connected.
    pub fn graph_hypotheses_hold(&self) -> bool {
        self.structural
    }

    /// Replays `cert` on `G - X`, failing at the first step whose vertex is
    /// not a degree-1 vertex with the named neighbour.
    pub fn validate(&self, cert: &LmCertificate, x: &EdgeSet) -> Result<LmValidationReport> {
        let g = self.g;
        let mut r = Residual::new(g, x)?;
        let fail = |step: usize, reason: String| Error::LmReplay { step, reason };
        for (i, &(v, w)) in cert.steps.iter().enumerate() {
            if !g.has_vertex(v) || !g.has_vertex(w) {
                return Err(fail(i, format!("({v}, {w}) is not a pair of vertices")));
            }
            if let Some(u) = r.first_isolated() {
                return Err(fail(i, format!("vertex {u} is already isolated")));
            }
            if !r.alive[v] || !r.alive[w] {
                return Err(fail(i, format!("({v}, {w}) uses a removed vertex")));
            }
            if r.degree(v) != 1 {
                return Err(fail(i, format!("vertex {v} has degree {} in the residual graph", r.degree(v))));
            }
            if r.leaf_partner(v) != Some(w) {
                return Err(fail(i, format!("{w} is not the neighbour of {v}")));
            }
            r.alive[v] = false;
            r.alive[w] = false;
        }
        let end = cert.steps.len();
        let u = cert.isolated;
        if !g.has_vertex(u) || !r.alive[u] || r.degree(u) != 0 {
            return Err(fail(end, format!("vertex {u} is not isolated after the last step")));
        }
        if cert.cut_profile != cut_profile(g, &cert.steps) {
            return Err(fail(end, "cut profile does not match the steps".into()));
        }
        let structure = (self.structural && x.len() == self.d && cert.steps.len() >= 2).then(|| self.structure(cert, x));
        Ok(LmValidationReport {
            steps: end,
            isolated: u,
            structure,
        })
    }

    fn structure(&self, cert: &LmCertificate, x: &EdgeSet) -> LmStructure {
        let g = self.g;
        let d = self.d;
        let (v1, v2) = (cert.steps[0].0, cert.steps[1].0);
        let x_meets_v2 = x.iter().all(|e| {
            let (a, b) = g.endpoints(e);
            [a, b].iter().any(|&p| p == v1 || p == v2)
        });
        let cut_bounds = cert
            .cut_profile
            .iter()
            .enumerate()
            .all(|(t, &c)| c <= if t == 0 { 2 * d - 2 } else { 2 * d });
        let mut in_v = vec![false; g.vertex_count()];
        let mut in_w = vec![false; g.vertex_count()];
        let mut v_edges_to_w = true;
        for &(v, w) in &cert.steps {
            in_v[v] = true;
            in_w[w] = true;
            let ok = g
                .vertices()
                .filter(|&a| in_v[a])
                .all(|a| g.incident(a).iter().all(|&(b, e)| x.contains(e) || in_w[b]));
            v_edges_to_w &= ok;
        }
        LmStructure {
            x_meets_v2,
            cut_bounds,
            v_edges_to_w,
        }
    }
}

/// One-shot validation; see [`LmValidator`] to amortize the hypothesis checks.
pub fn validate_lm_certificate(g: &Multigraph, cert: &LmCertificate, x: &EdgeSet, d: usize) -> Result<LmValidationReport> {
    LmValidator::new(g, d).validate(cert, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn isolated_vertex_needs_no_steps() {
        let g = Multigraph::new(3, [(0, 1)]).unwrap();
        let c = lm_reduce_greedy(&g).unwrap();
        assert!(c.steps.is_empty());
        assert_eq!(c.isolated, 2);
        assert_eq!(lm_reduce_exhaustive(&g).unwrap().steps.len(), 0);
    }

    #[test]
    fn path_on_three_vertices() {
        let g = named::path(3);
        let c = lm_reduce_greedy(&g).unwrap();
        assert_eq!(c.steps, vec![(0, 1)]);
        assert_eq!(c.isolated, 2);
        assert_eq!(c.cut_profile, vec![1]);
    }

    #[test]
    fn cubic_graphs_have_no_leaves() {
        for g in [named::petersen(), named::k4(), named::theta()] {
            assert_eq!(lm_reduce_greedy(&g), None);
            assert_eq!(lm_reduce_exhaustive(&g), None);
        }
    }

    #[test]
    fn star_isolates_a_leaf() {
        let c = lm_reduce_exhaustive(&named::star(3)).unwrap();
        assert_eq!(c.steps.len(), 1);
        assert_eq!(c.isolated, 2);
    }

    #[test]
    fn star_of_edges_at_a_vertex() {
        let g = named::petersen();
        let x: EdgeSet = g.incident(0).iter().map(|&(_, e)| e).collect();
        let c = lm_reduce_greedy_avoiding(&g, &x).unwrap().unwrap();
        assert_eq!(c.steps.len(), 0);
        assert_eq!(c.isolated, 0);
        let report = validate_lm_certificate(&g, &c, &x, 3).unwrap();
        assert_eq!(report.steps, 0);
        assert_eq!(report.structure, None);
    }

    #[test]
    fn broken_order_is_reported_at_first_bad_step() {
        let g = named::path(5);
        let c = lm_reduce_greedy(&g).unwrap();
        assert_eq!(c.steps, vec![(0, 1), (2, 3)]);
        let swapped = LmCertificate {
            steps: vec![(2, 3), (0, 1)],
            ..c.clone()
        };
        let err = validate_lm_certificate(&g, &swapped, &EdgeSet::new(), 2).unwrap_err();
        assert!(matches!(err, Error::LmReplay { step: 0, .. }));
        assert!(validate_lm_certificate(&g, &c, &EdgeSet::new(), 2).is_ok());
    }

    #[test]
    fn parallel_edges_are_not_leaves() {
        let g = Multigraph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        let c = lm_reduce_greedy(&g).unwrap();
        assert_eq!(c.steps, vec![(2, 1)]);
        assert_eq!(c.isolated, 0);
    }
}
