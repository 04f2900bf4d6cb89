//! Signed graphs and switching.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{boundary, EdgeSet, Multigraph, Partition, VertexSet};
use crate::io;

/// A multigraph whose edges in `negative` carry sign `-1`.
///
/// Serialized as `{"base": <graph6 or sparse6>, "negative": [ids]}`, the ids
/// numbering edges in the order the encoded base decodes to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    pub base: Multigraph,
    pub negative: EdgeSet,
}

impl SignedGraph {
    pub fn new(base: Multigraph, negative: EdgeSet) -> Result<Self> {
        base.check_edges(&negative)?;
        Ok(Self { base, negative })
    }

    pub fn all_negative(base: Multigraph) -> Self {
        let negative = base.edge_set();
        Self { base, negative }
    }

    /// Switching at every vertex of `w`: `Σ' = Σ Δ ∂(W)`.
    pub fn switch(&self, w: &VertexSet) -> Result<Self> {
        let cut = boundary(&self.base, w)?;
        Ok(Self {
            base: self.base.clone(),
            negative: self.negative.symmetric_difference(&cut),
        })
    }
}

#[derive(Serialize, Deserialize)]
struct SignedGraphRepr {
    base: String,
    negative: EdgeSet,
}

/// Maps each edge id of `g` to its id in `decoded`, which has the same
/// edges with multiplicity in some other order.
fn edge_renumbering(g: &Multigraph, decoded: &Multigraph) -> Vec<usize> {
    let key = |(u, v): (usize, usize)| (u.min(v), u.max(v));
    let mut pool: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (e, u, v) in decoded.edges().collect::<Vec<_>>().into_iter().rev() {
        pool.entry(key((u, v))).or_default().push(e);
    }
    g.edges()
        .map(|(_, u, v)| pool.get_mut(&key((u, v))).and_then(Vec::pop).expect("same edge multiset"))
        .collect()
}

impl Serialize for SignedGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let base = io::emit(&self.base);
        let decoded = io::parse_graph6(&base).map_err(serde::ser::Error::custom)?;
        let map = edge_renumbering(&self.base, &decoded);
        let negative = self.negative.iter().map(|e| map[e]).collect();
        SignedGraphRepr { base, negative }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SignedGraphRepr::deserialize(d)?;
        let base = io::parse_graph6(&repr.base).map_err(serde::de::Error::custom)?;
        Self::new(base, repr.negative).map_err(serde::de::Error::custom)
    }
}

pub fn switch(sg: &SignedGraph, w: &VertexSet) -> Result<SignedGraph> {
    sg.switch(w)
}

/// 2-colouring under per-edge parity constraints: `Some(true)` forces the
/// ends apart, `Some(false)` together, `None` leaves the edge free. The
/// lowest vertex of each part connected through constrained edges gets
/// colour 0.
pub(crate) fn parity_colouring(g: &Multigraph, constraint: impl Fn(usize) -> Option<bool>) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut colour = vec![u8::MAX; n];
    for root in 0..n {
        if colour[root] != u8::MAX {
            continue;
        }
        colour[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.incident(v) {
                let Some(differ) = constraint(e) else { continue };
                let want = colour[v] ^ differ as u8;
                if colour[w] == u8::MAX {
                    colour[w] = want;
                    queue.push_back(w);
                } else if colour[w] != want {
                    return None;
                }
            }
        }
    }
    Some(colour)
}

/// A vertex set `W` with `∂(W) = D`, excluding the lowest vertex of every
/// component, or `None` when `D` is not an edge cut.
pub fn cut_side(g: &Multigraph, d: &EdgeSet) -> Result<Option<VertexSet>> {
    g.check_edges(d)?;
    let mask = d.mask(g.edge_count());
    Ok(parity_colouring(g, |e| Some(mask[e])).map(|c| g.vertices().filter(|&v| c[v] == 1).collect()))
}

/// A switching set taking `sg1` to `sg2`, in canonical form, if the two
/// signed graphs are switching equivalent.
pub fn switching_equivalent(sg1: &SignedGraph, sg2: &SignedGraph) -> Result<Option<VertexSet>> {
    if sg1.base != sg2.base {
        return Err(Error::BaseMismatch);
    }
    cut_side(&sg1.base, &sg1.negative.symmetric_difference(&sg2.negative))
}

/// Bipartitions of `G - A` and `G - B` related through a cut partition:
/// `V_1^B = V_1^A Δ V_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCorrespondence {
    #[serde(rename = "aSide1")]
    pub a_side1: VertexSet,
    #[serde(rename = "bSide1")]
    pub b_side1: VertexSet,
}

/// For `G - A` and `G - B` bipartite, a partition `(V_1, V_2)` whose edge
/// cut is exactly `A Δ B`.
///
/// The correspondence is returned when some bipartition of `G - A` keeps
/// every edge of `A \ B` inside a side; then `V_1^A Δ V_1` is a bipartition
/// of `G - B` and both sides of the identity hold. Otherwise no choice of
/// bipartitions satisfies it (a 4-cycle with `A`, `B` opposite edges is the
/// smallest example) and only the cut is returned.
pub fn cut_from_bipartite_pair(
    g: &Multigraph,
    a: &EdgeSet,
    b: &EdgeSet,
) -> Result<(Partition, Option<PartitionCorrespondence>)> {
    g.check_edges(a)?;
    g.check_edges(b)?;
    let m = g.edge_count();
    let (am, bm) = (a.mask(m), b.mask(m));
    if parity_colouring(g, |e| (!am[e]).then_some(true)).is_none() {
        return Err(Error::NotBipartite("G - A"));
    }
    if parity_colouring(g, |e| (!bm[e]).then_some(true)).is_none() {
        return Err(Error::NotBipartite("G - B"));
    }
    let v1 = cut_side(g, &a.symmetric_difference(b))?.ok_or(Error::NotACut)?;
    let n = g.vertex_count();
    let correspondence = parity_colouring(g, |e| match (am[e], bm[e]) {
        (false, _) => Some(true),
        (true, false) => Some(false),
        (true, true) => None,
    })
    .map(|c| {
        let a_side1: VertexSet = (0..n).filter(|&v| c[v] == 0).collect();
        let b_side1 = a_side1.symmetric_difference(&v1);
        PartitionCorrespondence { a_side1, b_side1 }
    });
    Ok((Partition::from_side1(n, v1), correspondence))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn switching_examples() {
        let sg = SignedGraph::all_negative(named::k4());
        assert_eq!(sg.switch(&VertexSet::new()).unwrap(), sg);
        assert_eq!(sg.switch(&VertexSet::full(4)).unwrap(), sg);
        let s = sg.switch(&VertexSet::from([0])).unwrap();
        assert_eq!(s.negative.len(), 3);
        assert!(sg.base.incident(0).iter().all(|&(_, e)| !s.negative.contains(e)));
    }

    #[test]
    fn equivalence_examples() {
        let g = named::petersen();
        let sg = SignedGraph::all_negative(g.clone());
        assert_eq!(switching_equivalent(&sg, &sg).unwrap(), Some(VertexSet::new()));
        let other = sg.switch(&VertexSet::from([4])).unwrap();
        assert_eq!(switching_equivalent(&sg, &other).unwrap(), Some(VertexSet::from([4])));
        // The canonical set avoids vertex 0, so switching at 0 shows up as its complement.
        let at0 = sg.switch(&VertexSet::from([0])).unwrap();
        assert_eq!(switching_equivalent(&sg, &at0).unwrap(), Some((1..10).collect()));

        let c5 = named::cycle(5);
        let one = SignedGraph::new(c5.clone(), EdgeSet::from([0])).unwrap();
        let none = SignedGraph::new(c5, EdgeSet::new()).unwrap();
        assert_eq!(switching_equivalent(&one, &none).unwrap(), None);
        assert_eq!(switching_equivalent(&one, &sg), Err(Error::BaseMismatch));
    }

    #[test]
    fn parallel_pair_with_mixed_signs() {
        let g = named::theta();
        let mixed = SignedGraph::new(g.clone(), EdgeSet::from([0])).unwrap();
        let plus = SignedGraph::new(g, EdgeSet::new()).unwrap();
        assert_eq!(switching_equivalent(&mixed, &plus).unwrap(), None);
    }

    #[test]
    fn cut_from_equal_sets_is_empty() {
        let g = named::cube();
        let (p, corr) = cut_from_bipartite_pair(&g, &EdgeSet::new(), &EdgeSet::new()).unwrap();
        assert!(p.side1.is_empty());
        let corr = corr.unwrap();
        assert_eq!(corr.a_side1, corr.b_side1);
    }

    #[test]
    fn four_cycle_with_opposite_edges() {
        let g = named::cycle(4);
        let (p, corr) = cut_from_bipartite_pair(&g, &EdgeSet::from([0]), &EdgeSet::from([2])).unwrap();
        assert_eq!(p.side1.len(), 2);
        assert_eq!(boundary(&g, &p.side1).unwrap(), EdgeSet::from([0, 2]));
        assert_eq!(corr, None);
    }

    #[test]
    fn serde_round_trip_renumbers_edges() {
        // Edge order deliberately differs from the decoded order.
        let g = Multigraph::new(3, [(1, 2), (0, 1), (0, 1), (2, 0)]).unwrap();
        let sg = SignedGraph::new(g, EdgeSet::from([0, 2])).unwrap();
        let json = serde_json::to_string(&sg).unwrap();
        let back: SignedGraph = serde_json::from_str(&json).unwrap();
        let neg_pairs = |s: &SignedGraph| {
            let mut v: Vec<_> = s
                .negative
                .iter()
                .map(|e| {
                    let (a, b) = s.base.endpoints(e);
                    (a.min(b), a.max(b))
                })
                .collect();
            v.sort_unstable();
            v
        };
        assert_eq!(neg_pairs(&back), neg_pairs(&sg));
        assert_eq!(back.base.edge_count(), 4);
    }

    #[test]
    fn errors() {
        let g = named::cycle(4);
        assert_eq!(
            cut_from_bipartite_pair(&g, &EdgeSet::from([0]), &EdgeSet::new()),
            Err(Error::NotACut)
        );
        let k4 = named::k4();
        assert_eq!(
            cut_from_bipartite_pair(&k4, &EdgeSet::new(), &EdgeSet::new()),
            Err(Error::NotBipartite("G - A"))
        );
    }
}
