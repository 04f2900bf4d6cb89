//! Immutable multigraph with stable edge identifiers and the basic queries
//! shared by every other module.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

macro_rules! id_set {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(BTreeSet<usize>);

        impl $name {
            pub fn new() -> Self {
                Self(BTreeSet::new())
            }

            /// All ids in `0..n`.
            pub fn full(n: usize) -> Self {
                Self((0..n).collect())
            }

            pub fn insert(&mut self, id: usize) -> bool {
                self.0.insert(id)
            }

            pub fn remove(&mut self, id: usize) -> bool {
                self.0.remove(&id)
            }

            pub fn contains(&self, id: usize) -> bool {
                self.0.contains(&id)
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
                self.0.iter().copied()
            }

            pub fn first(&self) -> Option<usize> {
                self.0.first().copied()
            }

            pub fn last(&self) -> Option<usize> {
                self.0.last().copied()
            }

            pub fn to_vec(&self) -> Vec<usize> {
                self.iter().collect()
            }

            pub fn union(&self, other: &Self) -> Self {
                Self(self.0.union(&other.0).copied().collect())
            }

            pub fn intersection(&self, other: &Self) -> Self {
                Self(self.0.intersection(&other.0).copied().collect())
            }

            pub fn difference(&self, other: &Self) -> Self {
                Self(self.0.difference(&other.0).copied().collect())
            }

            pub fn symmetric_difference(&self, other: &Self) -> Self {
                Self(self.0.symmetric_difference(&other.0).copied().collect())
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.0.is_subset(&other.0)
            }

            pub fn is_disjoint(&self, other: &Self) -> bool {
                self.0.is_disjoint(&other.0)
            }

            /// Dense membership mask over `0..n`; ids `>= n` are ignored.
            pub fn mask(&self, n: usize) -> Vec<bool> {
                let mut m = vec![false; n];
                for id in self.iter().filter(|&id| id < n) {
                    m[id] = true;
                }
                m
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                Self(iter.into_iter().collect())
            }
        }

        impl<const N: usize> From<[usize; N]> for $name {
            fn from(ids: [usize; N]) -> Self {
                ids.into_iter().collect()
            }
        }

        impl Extend<usize> for $name {
            fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
                self.0.extend(iter)
            }
        }

        impl<'a> IntoIterator for &'a $name {
            type Item = usize;
            type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, usize>>;

            fn into_iter(self) -> Self::IntoIter {
                self.0.iter().copied()
            }
        }
    };
}

id_set!(
    /// A set of vertex ids, serialized as a sorted list.
    VertexSet
);
id_set!(
    /// A set of edge ids, serialized as a sorted list.
    EdgeSet
);

/// Undirected multigraph on vertices `0..n`. Parallel edges are allowed,
/// self-loops are not. Edge `i` is the `i`-th pair given at construction.
///
/// Serialized as `{"n": count, "edges": [[u, v], ...]}`, keeping edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<GraphRepr> for Multigraph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        Self::new(r.n, r.edges)
    }
}

impl From<Multigraph> for GraphRepr {
    fn from(g: Multigraph) -> Self {
        Self { n: g.n, edges: g.edges }
    }
}

impl Multigraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= n {
                return Err(Error::InvalidVertex(u));
            }
            if v >= n {
                return Err(Error::InvalidVertex(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(Self { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Endpoints of edge `e` in the order they were given.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edges.iter().enumerate().map(|(id, &(u, v))| (id, u, v))
    }

    pub fn edge_list(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `(neighbour, edge id)` pairs at `v`, one per incident edge.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges_between(&self, u: usize, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().filter(move |&&(w, _)| w == v).map(|&(_, e)| e)
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        v < self.n
    }

    pub fn has_edge(&self, e: usize) -> bool {
        e < self.edges.len()
    }

    pub fn check_vertices(&self, w: &VertexSet) -> Result<()> {
        match w.iter().find(|&v| v >= self.n) {
            Some(v) => Err(Error::InvalidVertex(v)),
            None => Ok(()),
        }
    }

    pub fn check_edges(&self, x: &EdgeSet) -> Result<()> {
        match x.iter().find(|&e| e >= self.edges.len()) {
            Some(e) => Err(Error::InvalidEdge(e)),
            None => Ok(()),
        }
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|a| a.len() == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }

    /// Connected components, each sorted, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&vec![true; self.n])
    }

    /// Components of the subgraph induced by the vertices flagged in `alive`.
    pub fn components_within(&self, alive: &[bool]) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if !alive[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &(w, _) in &self.adj[v] {
                    if alive[w] && comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Edges with both ends in `w`.
    pub fn induced_edges(&self, w: &VertexSet) -> EdgeSet {
        let m = w.mask(self.n);
        self.edges()
            .filter(|&(_, u, v)| m[u] && m[v])
            .map(|(e, _, _)| e)
            .collect()
    }

    /// Whether the subgraph induced by the flagged vertices contains a cycle.
    pub fn has_cycle_within(&self, alive: &[bool]) -> bool {
        let vertices = alive.iter().filter(|&&a| a).count();
        let edges = self.edges.iter().filter(|&&(u, v)| alive[u] && alive[v]).count();
        edges + self.components_within(alive).len() > vertices
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    /// Removes the vertices of `w` and every edge touching them.
    pub fn delete_vertices(&self, w: &VertexSet) -> Result<VertexDeletion> {
        self.check_vertices(w)?;
        let gone = w.mask(self.n);
        let mut new_id = vec![usize::MAX; self.n];
        let mut to_original = Vec::new();
        for v in 0..self.n {
            if !gone[v] {
                new_id[v] = to_original.len();
                to_original.push(v);
            }
        }
        let mut edge_to_original = Vec::new();
        let mut edges = Vec::new();
        for (e, u, v) in self.edges() {
            if !gone[u] && !gone[v] {
                edges.push((new_id[u], new_id[v]));
                edge_to_original.push(e);
            }
        }
        let graph = Multigraph::new(to_original.len(), edges)?;
        Ok(VertexDeletion {
            graph,
            vertex_to_original: to_original,
            edge_to_original,
        })
    }
}

/// Result of [`Multigraph::delete_vertices`]: the smaller graph and the maps
/// from its ids back to the host ids.
#[derive(Clone, Debug)]
pub struct VertexDeletion {
    pub graph: Multigraph,
    pub vertex_to_original: Vec<usize>,
    pub edge_to_original: Vec<usize>,
}

/// Result of [`delete_edges`]: same vertex set, survivors renumbered densely.
#[derive(Clone, Debug)]
pub struct EdgeDeletion {
    pub graph: Multigraph,
    /// `to_original[e]` is the host id of edge `e` of `graph`.
    pub to_original: Vec<usize>,
}

impl EdgeDeletion {
    pub fn original_edges(&self, x: &EdgeSet) -> EdgeSet {
        x.iter().map(|e| self.to_original[e]).collect()
    }
}

/// A path `p0 p1 ... pm` together with the edge ids joining consecutive vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathSpec {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl PathSpec {
    pub fn new(g: &Multigraph, vertices: Vec<usize>, edges: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("no vertices".into()));
        }
        if edges.len() + 1 != vertices.len() {
            return Err(Error::InvalidPath(format!(
                "{} vertices need {} edges, got {}",
                vertices.len(),
                vertices.len() - 1,
                edges.len()
            )));
        }
        for &v in &vertices {
            if !g.has_vertex(v) {
                return Err(Error::InvalidVertex(v));
            }
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::InvalidPath("repeated vertex".into()));
        }
        for (i, &e) in edges.iter().enumerate() {
            if !g.has_edge(e) {
                return Err(Error::InvalidEdge(e));
            }
            let (a, b) = g.endpoints(e);
            let (p, q) = (vertices[i], vertices[i + 1]);
            if !((a == p && b == q) || (a == q && b == p)) {
                return Err(Error::InvalidPath(format!("edge {e} does not join {p} and {q}")));
            }
        }
        Ok(Self { vertices, edges })
    }

    /// Builds a path from its vertex sequence, taking the lowest-id edge
    /// between consecutive vertices.
    pub fn from_vertices(g: &Multigraph, vertices: &[usize]) -> Result<Self> {
        let mut edges = Vec::with_capacity(vertices.len().saturating_sub(1));
        for w in vertices.windows(2) {
            if !g.has_vertex(w[0]) {
                return Err(Error::InvalidVertex(w[0]));
            }
            if !g.has_vertex(w[1]) {
                return Err(Error::InvalidVertex(w[1]));
            }
            let e = g
                .edges_between(w[0], w[1])
                .min()
                .ok_or_else(|| Error::InvalidPath(format!("{} and {} are not adjacent", w[0], w[1])))?;
            edges.push(e);
        }
        Self::new(g, vertices.to_vec(), edges)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }

    pub fn inner_vertices(&self) -> &[usize] {
        let k = self.vertices.len();
        if k <= 2 {
            &[]
        } else {
            &self.vertices[1..k - 1]
        }
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.reverse();
        edges.reverse();
        Self { vertices, edges }
    }

    /// Orientation with the smaller end vertex first, so that a path and its
    /// reverse compare equal.
    pub fn canonical(&self) -> Self {
        if self.vertices.last() < self.vertices.first() {
            self.reversed()
        } else {
            self.clone()
        }
    }
}

/// A split of a vertex set into two disjoint sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub side1: VertexSet,
    pub side2: VertexSet,
}

impl Partition {
    /// Side 2 is `0..n` minus `side1`.
    pub fn from_side1(n: usize, side1: VertexSet) -> Self {
        let side2 = (0..n).filter(|&v| !side1.contains(v)).collect();
        Self { side1, side2 }
    }

    pub fn same_side(&self, u: usize, v: usize) -> bool {
        (self.side1.contains(u) && self.side1.contains(v)) || (self.side2.contains(u) && self.side2.contains(v))
    }

    pub fn swapped(&self) -> Self {
        Self {
            side1: self.side2.clone(),
            side2: self.side1.clone(),
        }
    }
}

/// Edges of `g` with exactly one end in `w`.
pub fn boundary(g: &Multigraph, w: &VertexSet) -> Result<EdgeSet> {
    g.check_vertices(w)?;
    let m = w.mask(g.vertex_count());
    Ok(boundary_mask(g, &m))
}

pub(crate) fn boundary_mask(g: &Multigraph, m: &[bool]) -> EdgeSet {
    g.edges().filter(|&(_, u, v)| m[u] != m[v]).map(|(e, _, _)| e).collect()
}

pub(crate) fn boundary_size(g: &Multigraph, m: &[bool]) -> usize {
    g.edge_list().iter().filter(|&&(u, v)| m[u] != m[v]).count()
}

/// BFS distances from every vertex of `sources`; `None` marks unreachable.
pub fn distances_from(g: &Multigraph, sources: impl IntoIterator<Item = usize>) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    for s in sources {
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap_or(0);
        for w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Minimum shortest-path length between a vertex of `a` and a vertex of `b`;
/// `None` stands for infinity.
pub fn subgraph_distance(g: &Multigraph, a: &VertexSet, b: &VertexSet) -> Result<Option<usize>> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    g.check_vertices(a)?;
    g.check_vertices(b)?;
    let dist = distances_from(g, a.iter());
    Ok(b.iter().filter_map(|v| dist[v]).min())
}

/// Proper 2-colouring of every component, lowest vertex of a component
/// coloured `0`. `None` if some component has an odd cycle.
pub fn two_colouring(g: &Multigraph) -> Option<Vec<u8>> {
    let mut colour = vec![u8::MAX; g.vertex_count()];
    for s in g.vertices() {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if colour[w] == colour[v] {
                    return None;
                }
            }
        }
    }
    Some(colour)
}

/// A proper 2-colouring as a partition; the lowest vertex of each component
/// goes to `side1`.
pub fn bipartition(g: &Multigraph) -> Option<Partition> {
    let colour = two_colouring(g)?;
    let side1 = g.vertices().filter(|&v| colour[v] == 0).collect();
    Some(Partition::from_side1(g.vertex_count(), side1))
}

/// `G - X`, keeping all vertices; surviving edges keep their relative order.
pub fn delete_edges(g: &Multigraph, x: &EdgeSet) -> Result<EdgeDeletion> {
    g.check_edges(x)?;
    let gone = x.mask(g.edge_count());
    let mut to_original = Vec::with_capacity(g.edge_count() - x.len());
    let mut edges = Vec::with_capacity(g.edge_count() - x.len());
    for (e, u, v) in g.edges() {
        if !gone[e] {
            to_original.push(e);
            edges.push((u, v));
        }
    }
    let graph = Multigraph::new(g.vertex_count(), edges)?;
    Ok(EdgeDeletion { graph, to_original })
}
