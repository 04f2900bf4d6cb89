//! Canonical labelling of small multigraphs by individualisation and
//! colour refinement.

use pmavoid_core::Multigraph;

/// Own colour, sorted (neighbour colour, multiplicity) pairs, vertex.
type Signature = (usize, Vec<(usize, u8)>, usize);

/// Adjacency multiplicities; `m[u * n + v]` edges join `u` and `v`.
struct Adjacency {
    n: usize,
    m: Vec<u8>,
    nbrs: Vec<Vec<usize>>,
}

impl Adjacency {
    fn of(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let mut m = vec![0u8; n * n];
        for (_, u, v) in g.edges() {
            m[u * n + v] += 1;
            m[v * n + u] += 1;
        }
        let nbrs = (0..n)
            .map(|u| (0..n).filter(|&v| m[u * n + v] > 0).collect())
            .collect();
        Self { n, m, nbrs }
    }

    /// Upper triangle under `order`, where `order[i]` is the vertex placed at
    /// position `i`.
    fn code(&self, order: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for j in 1..n {
            for i in 0..j {
                out.push(self.m[order[i] * n + order[j]]);
            }
        }
        out
    }

    /// Refines `colour` (a rank per vertex) until equitable. Colours stay
    /// ordered consistently with the input, so the result depends only on
    /// the isomorphism class of the coloured graph.
    fn refine(&self, colour: &mut Vec<usize>) {
        let n = self.n;
        loop {
            let mut sig: Vec<Signature> = (0..n)
                .map(|v| {
                    let mut s: Vec<(usize, u8)> = self.nbrs[v].iter().map(|&w| (colour[w], self.m[v * n + w])).collect();
                    s.sort_unstable();
                    (colour[v], s, v)
                })
                .collect();
            sig.sort_unstable();
            let mut next = vec![0; n];
            let mut rank = 0;
            for i in 0..n {
                if i > 0 && (sig[i].0 != sig[i - 1].0 || sig[i].1 != sig[i - 1].1) {
                    rank = i;
                }
                next[sig[i].2] = rank;
            }
            let classes = |c: &[usize]| {
                let mut c = c.to_vec();
                c.sort_unstable();
                c.dedup();
                c.len()
            };
            let done = classes(&next) == classes(colour);
            *colour = next;
            if done {
                return;
            }
        }
    }

    fn search(&self, mut colour: Vec<usize>, best: &mut Option<Vec<u8>>) {
        self.refine(&mut colour);
        let n = self.n;
        let mut count = vec![0usize; n];
        for &c in &colour {
            count[c] += 1;
        }
        // First non-singleton class, in colour order.
        let Some(target) = (0..n).find(|&c| count[c] > 1) else {
            let mut order = vec![0; n];
            for v in 0..n {
                order[colour[v]] = v;
            }
            let code = self.code(&order);
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
            }
            return;
        };
        for v in (0..n).filter(|&v| colour[v] == target) {
            let mut c = colour.clone();
            for (w, cw) in c.iter_mut().enumerate() {
                if *cw == target && w != v {
                    *cw = target + 1;
                } else if *cw > target {
                    *cw += 1;
                }
            }
            self.search(c, best);
        }
    }
}

/// A string identifying the isomorphism class of `g`.
pub fn canonical_code(g: &Multigraph) -> Vec<u8> {
    let adj = Adjacency::of(g);
    if adj.n < 2 {
        return Vec::new();
    }
    let mut best = None;
    adj.search(vec![0; adj.n], &mut best);
    best.expect("search reaches a discrete colouring")
}

/// The graph whose upper-triangle adjacency code is `code`.
pub fn from_code(n: usize, code: &[u8]) -> Multigraph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            for _ in 0..code[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Multigraph::new(n, edges).expect("codes never contain loops")
}
