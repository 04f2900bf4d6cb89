//! Deciding whether `G - X` has a perfect matching, and explaining why not.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bipartition, delete_edges, EdgeSet, Multigraph, Partition, VertexSet};
use crate::independent::{is_independent, maximum_independent_set};
use crate::lm::{lm_reduce_exhaustive_avoiding, LmCertificate};
use crate::matching::{max_deficiency_barrier, odd_components, perfect_matching_avoiding, Barrier, Matching};

/// Default vertex cap for the exact independent-set fallback.
pub const DEFAULT_MIS_CAP: usize = 24;

/// An independent set of `G - X` covering more than half the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentWitness {
    #[serde(rename = "I")]
    pub independent: VertexSet,
    /// Edges of `G - X` with both ends outside `I`.
    #[serde(rename = "complementInducedEdges")]
    pub complement_induced_edges: EdgeSet,
}

impl IndependentWitness {
    /// Builds and checks a witness.
    pub fn new(g: &Multigraph, x: &EdgeSet, independent: VertexSet) -> Result<Self> {
        g.check_edges(x)?;
        g.check_vertices(&independent)?;
        if !is_independent(g, x, &independent) {
            return Err(Error::InvalidWitness("set is not independent in G - X".into()));
        }
        if 2 * independent.len() <= g.vertex_count() {
            return Err(Error::InvalidWitness(format!(
                "{} of {} vertices is not more than half",
                independent.len(),
                g.vertex_count()
            )));
        }
        let complement_induced_edges = complement_edges(g, x, &independent);
        Ok(Self {
            independent,
            complement_induced_edges,
        })
    }

    /// Re-derives the witness from `I` and compares.
    pub fn validate(&self, g: &Multigraph, x: &EdgeSet) -> Result<()> {
        let fresh = Self::new(g, x, self.independent.clone())?;
        if fresh.complement_induced_edges != self.complement_induced_edges {
            return Err(Error::InvalidWitness("complement edge list is wrong".into()));
        }
        Ok(())
    }
}

fn complement_edges(g: &Multigraph, x: &EdgeSet, i: &VertexSet) -> EdgeSet {
    g.edges()
        .filter(|&(e, u, v)| !x.contains(e) && !i.contains(u) && !i.contains(v))
        .map(|(e, _, _)| e)
        .collect()
}

/// Why `G - X` does or does not have a perfect matching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "camelCase")]
pub enum PreclusionVerdict {
    HasMatching { matching: Matching },
    #[serde(rename = "lmIsolated")]
    LmIsolated { certificate: LmCertificate },
    LargeIndependent { witness: IndependentWitness },
    /// No perfect matching, certified only by a Tutte barrier; possible
    /// when the graph is outside the classification's hypotheses.
    TutteBarrier { barrier: Barrier },
}

impl PreclusionVerdict {
    pub fn has_matching(&self) -> bool {
        matches!(self, Self::HasMatching { .. })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Self::HasMatching { .. } => "hasMatching",
            Self::LmIsolated { .. } => "lmIsolated",
            Self::LargeIndependent { .. } => "largeIndependent",
            Self::TutteBarrier { .. } => "tutteBarrier",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    #[serde(flatten)]
    pub verdict: PreclusionVerdict,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub mis_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            mis_cap: DEFAULT_MIS_CAP,
        }
    }
}

/// Classifies `G - X`: a perfect matching, an LM certificate, or a large
/// independent set. The equivalence with "no perfect matching" is only
/// promised for `d`-regular graphs of even order that are cyclically
/// `(d - 1 + 2k)`-edge-connected with `|X| = d - 1 + k`.
pub fn classify(g: &Multigraph, x: &EdgeSet, d: usize, k: usize) -> Result<Classification> {
    classify_with(g, x, d, k, ClassifyOptions::default())
}

pub fn classify_with(g: &Multigraph, x: &EdgeSet, d: usize, k: usize, opts: ClassifyOptions) -> Result<Classification> {
    g.check_edges(x)?;
    let mut warnings = Vec::new();
    if !g.is_regular(d) {
        warnings.push(format!("graph is not {d}-regular"));
    }
    if x.len() + 1 != d + k {
        warnings.push(format!("|X| = {} differs from d - 1 + k = {}", x.len(), (d + k).saturating_sub(1)));
    }
    let verdict = if let Some(matching) = perfect_matching_avoiding(g, x)? {
        PreclusionVerdict::HasMatching { matching }
    } else if let Some(certificate) = lm_reduce_exhaustive_avoiding(g, x)? {
        PreclusionVerdict::LmIsolated { certificate }
    } else {
        no_matching_without_lm(g, x, opts, &mut warnings)?
    };
    Ok(Classification { verdict, warnings })
}

fn no_matching_without_lm(
    g: &Multigraph,
    x: &EdgeSet,
    opts: ClassifyOptions,
    warnings: &mut Vec<String>,
) -> Result<PreclusionVerdict> {
    let h = delete_edges(g, x)?.graph;
    let barrier = max_deficiency_barrier(&h);
    let singletons = odd_components(&h, &barrier.s).iter().all(|c| c.len() == 1);
    let covered: usize = barrier.s.len() + barrier.odd_components.len();
    if singletons && covered == g.vertex_count() {
        let rest: VertexSet = g.vertices().filter(|&v| !barrier.s.contains(v)).collect();
        if let Ok(witness) = IndependentWitness::new(g, x, rest) {
            return Ok(PreclusionVerdict::LargeIndependent { witness });
        }
    }
    match independent_witness_exact(g, x, opts.mis_cap) {
        Ok(Some(witness)) => Ok(PreclusionVerdict::LargeIndependent { witness }),
        Ok(None) => Ok(PreclusionVerdict::TutteBarrier { barrier }),
        Err(Error::CapExceeded { n, cap }) => {
            warnings.push(format!("independent-set search skipped: {n} vertices above cap {cap}"));
            Ok(PreclusionVerdict::TutteBarrier { barrier })
        }
        Err(e) => Err(e),
    }
}

/// A maximum independent set of `G - X` when it covers more than half the
/// vertices.
pub fn independent_witness_exact(g: &Multigraph, x: &EdgeSet, cap: usize) -> Result<Option<IndependentWitness>> {
    let i = maximum_independent_set(g, x, &VertexSet::new(), cap)?;
    if 2 * i.len() > g.vertex_count() {
        IndependentWitness::new(g, x, i).map(Some)
    } else {
        Ok(None)
    }
}

/// Whether the vertices outside the witness induce at most `k - 1` edges
/// of `G - X`; always false for `k = 0`.
pub fn verify_moreover_bound(g: &Multigraph, x: &EdgeSet, w: &IndependentWitness, k: usize) -> Result<bool> {
    w.validate(g, x)?;
    Ok(k >= 1 && w.complement_induced_edges.len() < k)
}

/// Structural classification for `|X| = d`: a vertex meeting every edge of
/// `X`, or a bipartition of `G - X` holding every edge of `X` inside one side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "camelCase")]
pub enum ObstructionVerdict {
    HasMatching,
    CommonVertex { vertex: usize },
    /// `side1` holds both ends of every edge of `X`.
    BipartiteSamePartition { partition: Partition },
}

impl ObstructionVerdict {
    pub fn has_matching(&self) -> bool {
        matches!(self, Self::HasMatching)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    #[serde(flatten)]
    pub verdict: ObstructionVerdict,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
}

/// Checks the two structural obstructions without running a matching
/// algorithm.
pub fn check_obstructions(g: &Multigraph, x: &EdgeSet, d: usize) -> Result<ObstructionReport> {
    g.check_edges(x)?;
    let mut warnings = Vec::new();
    if x.len() != d {
        warnings.push(format!("|X| = {} differs from d = {d}", x.len()));
    }
    if !g.is_regular(d) {
        warnings.push(format!("graph is not {d}-regular"));
    }
    let verdict = if let Some(vertex) = common_vertex(g, x) {
        ObstructionVerdict::CommonVertex { vertex }
    } else if let Some(partition) = same_side_bipartition(g, x)? {
        ObstructionVerdict::BipartiteSamePartition { partition }
    } else {
        ObstructionVerdict::HasMatching
    };
    Ok(ObstructionReport { verdict, warnings })
}

/// Lowest-id vertex incident with every edge of `X` (`None` for empty `X`).
fn common_vertex(g: &Multigraph, x: &EdgeSet) -> Option<usize> {
    let first = x.first()?;
    let (a, b) = g.endpoints(first);
    let mut cands = [a, b];
    cands.sort_unstable();
    cands.into_iter().find(|&v| {
        x.iter().all(|e| {
            let (p, q) = g.endpoints(e);
            p == v || q == v
        })
    })
}

/// A bipartition of `G - X` with every `X` endpoint in `side1`, choosing the
/// orientation of each component of `G - X` independently.
fn same_side_bipartition(g: &Multigraph, x: &EdgeSet) -> Result<Option<Partition>> {
    let h = delete_edges(g, x)?.graph;
    let Some(base) = bipartition(&h) else {
        return Ok(None);
    };
    let n = g.vertex_count();
    let mut side1 = base.side1.clone();
    for comp in h.components() {
        let ends: Vec<usize> = x
            .iter()
            .flat_map(|e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .filter(|v| comp.contains(v))
            .collect();
        let Some(&first) = ends.first() else { continue };
        let colour = base.side1.contains(first);
        if ends.iter().any(|&v| base.side1.contains(v) != colour) {
            return Ok(None);
        }
        if !colour {
            for &v in &comp {
                if !side1.remove(v) {
                    side1.insert(v);
                }
            }
        }
    }
    Ok(Some(Partition::from_side1(n, side1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn star_at(g: &Multigraph, v: usize) -> EdgeSet {
        g.incident(v).iter().map(|&(_, e)| e).collect()
    }

    #[test]
    fn petersen_two_edges_has_matching() {
        let g = named::petersen();
        let c = classify(&g, &EdgeSet::from([0, 7]), 3, 0).unwrap();
        assert!(c.verdict.has_matching());
        assert!(c.warnings.is_empty());
    }

    #[test]
    fn petersen_star_is_lm_isolated() {
        let g = named::petersen();
        let c = classify(&g, &star_at(&g, 0), 3, 1).unwrap();
        match c.verdict {
            PreclusionVerdict::LmIsolated { certificate } => {
                assert!(certificate.steps.is_empty());
                assert_eq!(certificate.isolated, 0);
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn exact_witness_examples() {
        assert_eq!(independent_witness_exact(&named::cycle(6), &EdgeSet::new(), 24).unwrap(), None);
        let w = independent_witness_exact(&named::star(3), &EdgeSet::new(), 24).unwrap().unwrap();
        assert_eq!(w.independent, VertexSet::from([1, 2, 3]));
        assert!(!verify_moreover_bound(&named::star(3), &EdgeSet::new(), &w, 0).unwrap());
        assert!(verify_moreover_bound(&named::star(3), &EdgeSet::new(), &w, 1).unwrap());
    }

    #[test]
    fn invalid_witness_is_an_error() {
        let g = named::path(3);
        let bogus = IndependentWitness {
            independent: VertexSet::from([0, 1]),
            complement_induced_edges: EdgeSet::new(),
        };
        assert!(matches!(
            verify_moreover_bound(&g, &EdgeSet::new(), &bogus, 3),
            Err(Error::InvalidWitness(_))
        ));
    }

    #[test]
    fn obstruction_examples() {
        let g = named::petersen();
        let r = check_obstructions(&g, &star_at(&g, 4), 3).unwrap();
        assert_eq!(r.verdict, ObstructionVerdict::CommonVertex { vertex: 4 });

        let k33 = named::k33();
        let pm: EdgeSet = k33
            .edges()
            .filter(|&(_, u, v)| v == u + 3)
            .map(|(e, _, _)| e)
            .collect();
        assert_eq!(pm.len(), 3);
        let r = check_obstructions(&k33, &pm, 3).unwrap();
        assert_eq!(r.verdict, ObstructionVerdict::HasMatching);
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn same_side_orientation_per_component() {
        // Two disjoint edges plus X joining 1 to 2: flipping the second
        // component puts both X ends on one side.
        let g = Multigraph::new(4, [(0, 1), (2, 3), (1, 2)]).unwrap();
        let x = EdgeSet::from([2]);
        let p = same_side_bipartition(&g, &x).unwrap().unwrap();
        assert!(p.side1.contains(1) && p.side1.contains(2));
    }
}
