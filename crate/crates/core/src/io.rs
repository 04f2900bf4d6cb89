//! graph6 / sparse6 codecs and a plain edge-list reader.
//!
//! graph6 and sparse6 follow the formats documented with nauty. Decoded
//! graph6 edges are numbered in lexicographic `(u, v)` order with `u < v`;
//! sparse6 edges keep their encoded order (sorted by larger endpoint, which is
//! how encoders emit them). Edge-list files keep line order.

use crate::error::{Error, ParseErrorKind, Result};
use crate::graph::Multigraph;

const BIAS: u8 = 63;

fn perr(offset: usize, kind: ParseErrorKind) -> Error {
    Error::Parse { offset, kind }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn next(&mut self) -> Result<u8> {
        let b = *self
            .bytes
            .get(self.pos)
            .ok_or_else(|| perr(self.base + self.pos, ParseErrorKind::Truncated))?;
        if !(63..=126).contains(&b) {
            return Err(perr(self.base + self.pos, ParseErrorKind::InvalidByte));
        }
        self.pos += 1;
        Ok(b - BIAS)
    }

    fn offset(&self) -> usize {
        self.base + self.pos
    }

    /// Decodes the `N(n)` vertex-count field.
    fn vertex_count(&mut self) -> Result<usize> {
        let start = self.offset();
        let first = *self
            .bytes
            .get(self.pos)
            .ok_or_else(|| perr(start, ParseErrorKind::Truncated))?;
        if first != 126 {
            return Ok(self.next()? as usize);
        }
        self.pos += 1;
        let words = if self.bytes.get(self.pos) == Some(&126) {
            self.pos += 1;
            6
        } else {
            3
        };
        let mut n = 0usize;
        for _ in 0..words {
            n = (n << 6) | self.next()? as usize;
        }
        let in_range = if words == 3 { n > 62 } else { n > 258_047 };
        if !in_range {
            return Err(perr(start, ParseErrorKind::MalformedHeader));
        }
        Ok(n)
    }
}

fn strip_header<'a>(text: &'a str, header: &str) -> (&'a str, usize) {
    match text.strip_prefix(header) {
        Some(rest) => (rest, header.len()),
        None => (text, 0),
    }
}

/// Parses one graph6 or sparse6 line (sparse6 is recognised by its leading `:`).
pub fn parse_graph6(text: &str) -> Result<Multigraph> {
    let line = text.trim_end_matches(['\n', '\r']);
    if line.starts_with(">>sparse6<<") || line.starts_with(':') {
        return parse_sparse6(line);
    }
    let (body, skip) = strip_header(line, ">>graph6<<");
    let mut cur = Cursor {
        bytes: body.as_bytes(),
        pos: 0,
        base: skip,
    };
    let n = cur.vertex_count()?;
    let bits = n * n.saturating_sub(1) / 2;
    let words = bits.div_ceil(6);
    let mut edges = Vec::new();
    let mut k = 0usize;
    let (mut i, mut j) = (0usize, 1usize);
    for _ in 0..words {
        let w = cur.next()?;
        for shift in (0..6).rev() {
            if k < bits {
                if (w >> shift) & 1 == 1 {
                    edges.push((i, j));
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
                k += 1;
            }
        }
    }
    if cur.pos != cur.bytes.len() {
        return Err(perr(cur.offset(), ParseErrorKind::TrailingData));
    }
    edges.sort_unstable();
    Multigraph::new(n, edges)
}

/// Parses a sparse6 line (leading `:`); parallel edges are preserved.
pub fn parse_sparse6(text: &str) -> Result<Multigraph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (line, skip) = strip_header(line, ">>sparse6<<");
    let body = line
        .strip_prefix(':')
        .ok_or_else(|| perr(skip, ParseErrorKind::MalformedHeader))?;
    let mut cur = Cursor {
        bytes: body.as_bytes(),
        pos: 0,
        base: skip + 1,
    };
    let n = cur.vertex_count()?;
    let k = bits_for(n.saturating_sub(1));
    let mut bits = Vec::new();
    while cur.pos < cur.bytes.len() {
        let w = cur.next()?;
        bits.extend((0..6).rev().map(|s| (w >> s) & 1));
    }
    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut p = 0usize;
    while p + 1 + k <= bits.len() {
        let b = bits[p];
        let mut x = 0usize;
        for t in 0..k {
            x = (x << 1) | bits[p + 1 + t] as usize;
        }
        p += 1 + k;
        if b == 1 {
            v += 1;
        }
        if v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            if x == v {
                return Err(perr(skip + 1, ParseErrorKind::SelfLoop));
            }
            edges.push((x, v));
        }
    }
    Multigraph::new(n, edges)
}

fn bits_for(mut x: usize) -> usize {
    let mut k = 0;
    while x > 0 {
        k += 1;
        x >>= 1;
    }
    k
}

fn push_vertex_count(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + BIAS) as char);
    } else if n <= 258_047 {
        out.push('~');
        for s in [12, 6, 0] {
            out.push((((n >> s) & 63) as u8 + BIAS) as char);
        }
    } else {
        out.push_str("~~");
        for s in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> s) & 63) as u8 + BIAS) as char);
        }
    }
}

fn push_bits(out: &mut String, bits: &[u8]) {
    for chunk in bits.chunks(6) {
        let mut w = 0u8;
        for i in 0..6 {
            w = (w << 1) | chunk.get(i).copied().unwrap_or(0);
        }
        out.push((w + BIAS) as char);
    }
}

/// graph6 encoding of a simple graph; parallel edges collapse to one.
pub fn emit_graph6(g: &Multigraph) -> String {
    let n = g.vertex_count();
    let mut adj = vec![false; n * n];
    for (_, u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut bits = Vec::with_capacity(n * n / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(adj[i * n + j] as u8);
        }
    }
    let mut out = String::new();
    push_vertex_count(&mut out, n);
    push_bits(&mut out, &bits);
    out
}

/// sparse6 encoding (with the leading `:`), keeping parallel edges.
pub fn emit_sparse6(g: &Multigraph) -> String {
    let n = g.vertex_count();
    let k = bits_for(n.saturating_sub(1));
    let mut edges: Vec<(usize, usize)> = g.edges().map(|(_, a, b)| (a.max(b), a.min(b))).collect();
    edges.sort_unstable();
    let mut bits: Vec<u8> = Vec::new();
    let put = |bits: &mut Vec<u8>, b: u8, x: usize| {
        bits.push(b);
        for t in (0..k).rev() {
            bits.push(((x >> t) & 1) as u8);
        }
    };
    let mut cur = 0usize;
    for &(v, u) in &edges {
        if v == cur {
            put(&mut bits, 0, u);
        } else if v == cur + 1 {
            put(&mut bits, 1, u);
            cur = v;
        } else {
            put(&mut bits, 1, v);
            put(&mut bits, 0, u);
            cur = v;
        }
    }
    let rem = (6 - bits.len() % 6) % 6;
    let special = k < 6 && n == 1 << k && rem > k && edges.last().is_some_and(|&(v, _)| v == n - 2);
    if special {
        bits.push(0);
        bits.extend(std::iter::repeat_n(1, rem - 1));
    } else {
        bits.extend(std::iter::repeat_n(1, rem));
    }
    let mut out = String::from(":");
    push_vertex_count(&mut out, n);
    push_bits(&mut out, &bits);
    out
}

/// graph6 for simple graphs, sparse6 when parallel edges are present.
pub fn emit(g: &Multigraph) -> String {
    if g.is_simple() {
        emit_graph6(g)
    } else {
        emit_sparse6(g)
    }
}

/// Plain edge list: one `u v` pair per line, 0-indexed; blank lines and
/// `#` comments are skipped. A line `n <count>` may fix the vertex count,
/// otherwise it is one more than the largest id.
pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut edges = Vec::new();
    let mut declared: Option<usize> = None;
    let mut offset = 0usize;
    for raw in text.split_inclusive('\n') {
        let line = raw.split('#').next().unwrap_or("").trim();
        let here = offset;
        offset += raw.len();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() == 2 && fields[0] == "n" {
            let n = fields[1].parse().map_err(|_| perr(here, ParseErrorKind::MalformedHeader))?;
            declared = Some(n);
            continue;
        }
        if fields.len() != 2 {
            return Err(perr(here, ParseErrorKind::BadEdgeLine));
        }
        let u: usize = fields[0].parse().map_err(|_| perr(here, ParseErrorKind::BadEdgeLine))?;
        let v: usize = fields[1].parse().map_err(|_| perr(here, ParseErrorKind::BadEdgeLine))?;
        if u == v {
            return Err(perr(here, ParseErrorKind::SelfLoop));
        }
        if declared.is_some_and(|n| u.max(v) >= n) {
            return Err(perr(here, ParseErrorKind::VertexOutOfRange));
        }
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Multigraph::new(n, edges)
}

/// Reads a catalogue: either one graph6/sparse6 graph per line, or (when the
/// first data line contains whitespace) a single edge-list graph. Errors carry
/// the 1-based line number.
pub fn read_catalogue(text: &str) -> Vec<std::result::Result<Multigraph, (usize, Error)>> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Vec::new(),
        Some(l) if l.contains(char::is_whitespace) || l.chars().all(|c| c.is_ascii_digit()) => {
            vec![parse_edge_list(text).map_err(|e| (1, e))]
        }
        Some(_) => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
            .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| (i + 1, e)))
            .collect(),
    }
}
