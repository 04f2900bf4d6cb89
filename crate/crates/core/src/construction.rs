//! Cubic graphs with two far-apart 6-paths, neither of which lies in a
//! 2-factor.
//!
//! Start from a bipartite subcubic host `H` with sides `M` and `N`, where
//! `N` is cubic and `M` has exactly eighteen degree-2 vertices split into
//! `a_1..a_9` and `b_1..b_9`. Two gadget paths `x_1..x_7` and `y_1..y_7`
//! are attached to the `a`s and `b`s so that every vertex ends with degree 3.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bipartition, Multigraph, PathSpec, VertexSet};

/// The host graph and the labelling of its degree-2 vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub host: Multigraph,
    pub a: [usize; 9],
    pub b: [usize; 9],
    /// The cubic side of the host's bipartition.
    #[serde(rename = "nSide")]
    pub n_side: VertexSet,
}

impl ConstructionParams {
    /// Host obtained by subdividing every edge of a 12-vertex cubic graph
    /// (the hexagonal prism): `N` is the original twelve vertices, `M` the
    /// eighteen subdivision vertices, `a` the first nine and `b` the rest.
    pub fn canonical() -> Self {
        Self::subdivision(&crate::named::prism(6))
    }

    /// Subdivides every edge of a cubic graph with eighteen edges.
    pub fn subdivision(base: &Multigraph) -> Self {
        let n = base.vertex_count();
        let m = base.edge_count();
        let mut edges = Vec::with_capacity(2 * m);
        for (e, u, v) in base.edges() {
            edges.push((u, n + e));
            edges.push((n + e, v));
        }
        let host = Multigraph::new(n + m, edges).expect("subdivision of a loopless graph");
        let sub: Vec<usize> = (n..n + m).collect();
        let mut a = [0; 9];
        let mut b = [0; 9];
        for i in 0..9 {
            a[i] = sub.get(i).copied().unwrap_or(usize::MAX);
            b[i] = sub.get(9 + i).copied().unwrap_or(usize::MAX);
        }
        Self {
            host,
            a,
            b,
            n_side: (0..n).collect(),
        }
    }

    /// Checks the degree and bipartiteness requirements on the host.
    pub fn validate(&self) -> Result<()> {
        let h = &self.host;
        let bad = |msg: String| Err(Error::Precondition(msg));
        h.check_vertices(&self.n_side)?;
        let ab: VertexSet = self.a.iter().chain(&self.b).copied().collect();
        if ab.len() != 18 {
            return bad("a and b must be eighteen distinct vertices".into());
        }
        h.check_vertices(&ab)?;
        if !ab.is_disjoint(&self.n_side) {
            return bad("a and b must lie on the M side".into());
        }
        if bipartition(h).is_none() {
            return bad("host is not bipartite".into());
        }
        for (_, u, v) in h.edges() {
            if self.n_side.contains(u) == self.n_side.contains(v) {
                return bad(format!("edge {u}-{v} does not join M and N"));
            }
        }
        for v in h.vertices() {
            let want = if ab.contains(v) { 2 } else { 3 };
            if h.degree(v) != want {
                return bad(format!("vertex {v} has degree {}, expected {want}", h.degree(v)));
            }
        }
        Ok(())
    }
}

/// The constructed graph with both gadget paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph: Multigraph,
    pub p1: PathSpec,
    pub p2: PathSpec,
    pub x: [usize; 7],
    pub y: [usize; 7],
    #[serde(rename = "nSide")]
    pub n_side: VertexSet,
}

impl Counterexample {
    /// `{x_1..x_7} ∪ N ∪ {y_1, y_3, y_5, y_7}`, independent in `G - E(P_1)`.
    pub fn witness_for_p1(&self) -> VertexSet {
        gadget_witness(&self.x, &self.y, &self.n_side)
    }

    /// `{y_1..y_7} ∪ N ∪ {x_1, x_3, x_5, x_7}`, independent in `G - E(P_2)`.
    pub fn witness_for_p2(&self) -> VertexSet {
        gadget_witness(&self.y, &self.x, &self.n_side)
    }
}

fn gadget_witness(full: &[usize; 7], odd: &[usize; 7], n_side: &VertexSet) -> VertexSet {
    let mut s = n_side.clone();
    s.extend(full.iter().copied());
    s.extend(odd.iter().step_by(2).copied());
    s
}

pub fn build_counterexample(params: &ConstructionParams) -> Result<Counterexample> {
    params.validate()?;
    let h = &params.host;
    let base = h.vertex_count();
    let x: [usize; 7] = std::array::from_fn(|i| base + i);
    let y: [usize; 7] = std::array::from_fn(|i| base + 7 + i);
    let mut edges = h.edge_list().to_vec();
    for (gadget, ends) in [(&x, &params.a), (&y, &params.b)] {
        edges.push((ends[0], gadget[0]));
        edges.push((ends[7], gadget[6]));
        edges.push((ends[8], gadget[6]));
        for i in 0..6 {
            edges.push((ends[i + 1], gadget[i]));
            edges.push((gadget[i + 1], gadget[i]));
        }
    }
    let graph = Multigraph::new(base + 14, edges)?;
    let p1 = PathSpec::from_vertices(&graph, &x)?;
    let p2 = PathSpec::from_vertices(&graph, &y)?;
    Ok(Counterexample {
        graph,
        p1,
        p2,
        x,
        y,
        n_side: params.n_side.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::independent::is_independent;

    #[test]
    fn canonical_instance_is_cubic_on_44_vertices() {
        let c = build_counterexample(&ConstructionParams::canonical()).unwrap();
        assert_eq!(c.graph.vertex_count(), 44);
        assert!(c.graph.is_cubic());
        assert_eq!(c.p1.len(), 6);
        let w1 = c.witness_for_p1();
        assert_eq!(w1.len(), 23);
        assert!(is_independent(&c.graph, &c.p1.edge_set(), &w1));
        let w2 = c.witness_for_p2();
        assert!(is_independent(&c.graph, &c.p2.edge_set(), &w2));
    }

    #[test]
    fn rejects_bad_hosts() {
        let mut p = ConstructionParams::canonical();
        p.b[8] = p.a[0];
        assert!(matches!(build_counterexample(&p), Err(Error::Precondition(_))));
        let small = ConstructionParams::subdivision(&crate::named::petersen());
        assert!(matches!(small.validate(), Err(Error::Precondition(_))));
    }
}
