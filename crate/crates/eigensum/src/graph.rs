//! Simple labeled graphs stored as symmetric bit matrices.
//!
//! A [`Graph`] is an undirected, loop-free graph on vertices `0..n` with an
//! adjacency bitset per vertex. All operations are immutable: they take the
//! inputs by reference and return a freshly built graph, so values can be
//! shared freely across threads.
//!
//! Blow-up vertex layout is fixed and part of the contract: vertex `u` of the
//! original graph expands to the block `u*t .. (u+1)*t`, and `add_isolated`
//! appends its new vertices after all existing ones. Downstream eigenvalue
//! comparisons rely on this layout only through vertex counts, but the codec
//! and witness strings depend on it bit for bit.

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Undirected loop-free graph on `0..n`.
///
/// Equality is bitwise: two graphs are equal exactly when they have the same
/// order and the same edge set. Unused tail bits in each row are kept at zero
/// so derived `PartialEq` is sound.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        let stride = n.div_ceil(WORD);
        Graph {
            n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for w in 0..g.stride {
                g.bits[u * g.stride + w] = !0u64;
            }
            g.mask_row_tail(u);
            g.clear(u, u);
        }
        g
    }

    /// Graph on `n` vertices with the given edges. Rejects loops and
    /// out-of-range endpoints; duplicate edges are harmless.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::EdgeList {
                    line: 0,
                    msg: format!("loop at vertex {u}"),
                });
            }
            g.set(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return false;
        }
        self.bits[u * self.stride + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        assert!(u < self.n, "vertex out of range");
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        let twice: usize = (0..self.n).map(|u| self.degree(u)).sum();
        twice / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degrees sorted ascending; handy as a cheap isomorphism-ish fingerprint
    /// in tests.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        d.sort_unstable();
        d
    }

    /// Complement within the same vertex set: edges and non-edges swap, loops
    /// stay absent. An involution, bit for bit.
    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for u in 0..self.n {
            for w in 0..self.stride {
                g.bits[u * self.stride + w] = !self.bits[u * self.stride + w];
            }
            g.mask_row_tail(u);
            g.clear(u, u);
        }
        g
    }

    /// Both graphs side by side with no edges between them; `self` keeps its
    /// labels, `other` is shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set(u, v);
        }
        for (u, v) in other.edges() {
            g.set(self.n + u, self.n + v);
        }
        g
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set(u, self.n + v);
            }
        }
        g
    }

    /// Appends `count` isolated vertices.
    pub fn add_isolated(&self, count: usize) -> Graph {
        let mut g = Graph::empty(self.n + count);
        for (u, v) in self.edges() {
            g.set(u, v);
        }
        g
    }

    /// Replaces every vertex by an independent set of `t` vertices; block
    /// `u*t..(u+1)*t` plays the role of vertex `u`, and blocks are completely
    /// joined exactly when the original vertices were adjacent.
    pub fn blowup_independent(&self, t: usize) -> Result<Graph> {
        if t == 0 {
            return Err(Error::ZeroBlowup);
        }
        let mut g = Graph::empty(self.n * t);
        for (u, v) in self.edges() {
            for a in 0..t {
                for b in 0..t {
                    g.set(u * t + a, v * t + b);
                }
            }
        }
        Ok(g)
    }

    /// Replaces every vertex by a clique of `t` vertices, with the same block
    /// layout and joining rule as [`Graph::blowup_independent`]. Equals the
    /// complement of the independent blow-up of the complement.
    pub fn blowup_clique(&self, t: usize) -> Result<Graph> {
        let mut g = self.blowup_independent(t)?;
        for u in 0..self.n {
            for a in 0..t {
                for b in a + 1..t {
                    g.set(u * t + a, u * t + b);
                }
            }
        }
        Ok(g)
    }

    /// Subgraph induced by `keep`, relabeled to `0..keep.len()` in the kept
    /// order. Rejects out-of-range members.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Graph> {
        let members = keep.members();
        if let Some(&v) = members.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let mut g = Graph::empty(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Deletes one vertex; the rest keep their relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let keep = VertexSet::new((0..self.n).filter(|&u| u != v).collect());
        self.induced_subgraph(&keep)
    }

    /// Deletes a set of vertices; the rest keep their relative order.
    pub fn delete_vertices(&self, drop: &VertexSet) -> Result<Graph> {
        if drop.is_empty() {
            return Err(Error::EmptyDeletionSet);
        }
        if let Some(&v) = drop.members().iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if drop.len() == self.n {
            return Err(Error::NothingLeft);
        }
        let keep = VertexSet::new((0..self.n).filter(|&u| !drop.contains(u)).collect());
        self.induced_subgraph(&keep)
    }

    /// Copy of the graph with one pair flipped: edge becomes non-edge and
    /// vice versa.
    pub fn with_edge_toggled(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n || u == v {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let mut g = self.clone();
        if g.has_edge(u, v) {
            g.clear(u, v);
            g.clear(v, u);
        } else {
            g.set(u, v);
        }
        Ok(g)
    }

    /// True when the graph contains no clique on `r` vertices. Exact
    /// backtracking search; capped at 64 vertices so the single-word bitset
    /// arithmetic stays exact and the worst case stays affordable.
    pub fn is_kr_free(&self, r: usize) -> Result<bool> {
        if r < 2 {
            return Err(Error::CliqueOrderTooSmall { r });
        }
        if self.n > WORD {
            return Err(Error::PredicateTooLarge { n: self.n });
        }
        if r > self.n {
            return Ok(true);
        }
        let rows = self.small_rows();
        let all = if self.n == WORD {
            !0u64
        } else {
            (1u64 << self.n) - 1
        };
        Ok(!has_clique(&rows, all, r))
    }

    /// True when the vertices split into at most `r` independent parts.
    /// Exact backtracking coloring with first-use symmetry breaking; capped
    /// at 64 vertices like [`Graph::is_kr_free`].
    pub fn is_r_partite(&self, r: usize) -> Result<bool> {
        if r < 1 {
            return Err(Error::PartCountTooSmall { r });
        }
        if self.n > WORD {
            return Err(Error::PredicateTooLarge { n: self.n });
        }
        if r >= self.n {
            return Ok(true);
        }
        let rows = self.small_rows();
        let mut parts = vec![0u64; r];
        Ok(color(&rows, &mut parts, 0, 0))
    }

    /// Dense row-major adjacency matrix, for the eigensolver.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for u in 0..n {
            for v in u + 1..n {
                if self.has_edge(u, v) {
                    a[u * n + v] = 1.0;
                    a[v * n + u] = 1.0;
                }
            }
        }
        a
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.stride..(u + 1) * self.stride]
    }

    /// Adjacency rows as single words; requires `n <= 64`.
    fn small_rows(&self) -> Vec<u64> {
        debug_assert!(self.n <= WORD);
        (0..self.n)
            .map(|u| if self.stride == 0 { 0 } else { self.bits[u * self.stride] })
            .collect()
    }

    fn set(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.stride + v / WORD] |= 1u64 << (v % WORD);
        self.bits[v * self.stride + u / WORD] |= 1u64 << (u % WORD);
    }

    fn clear(&mut self, u: usize, v: usize) {
        self.bits[u * self.stride + v / WORD] &= !(1u64 << (v % WORD));
    }

    fn mask_row_tail(&mut self, u: usize) {
        let rem = self.n % WORD;
        if rem != 0 && self.stride > 0 {
            self.bits[u * self.stride + self.stride - 1] &= (1u64 << rem) - 1;
        }
    }
}

/// Is there a clique of size `need` inside the candidate set? Candidates are
/// consumed in ascending vertex order, so each clique is visited once.
fn has_clique(rows: &[u64], cand: u64, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    let mut c = cand;
    while (c.count_ones() as usize) >= need {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        if has_clique(rows, c & rows[v], need - 1) {
            return true;
        }
    }
    false
}

/// Proper coloring search over `parts.len()` classes. A vertex may open at
/// most one new class (the first unused), which prunes color permutations.
fn color(rows: &[u64], parts: &mut [u64], v: usize, used: usize) -> bool {
    if v == rows.len() {
        return true;
    }
    let limit = (used + 1).min(parts.len());
    for c in 0..limit {
        if rows[v] & parts[c] == 0 {
            parts[c] |= 1u64 << v;
            if color(rows, parts, v + 1, used.max(c + 1)) {
                return true;
            }
            parts[c] &= !(1u64 << v);
        }
    }
    false
}

/// Duplicate-free vertex subset kept in strictly increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    /// Builds a set from any list of vertices; order and duplicates are
    /// normalized away.
    pub fn new(mut members: Vec<usize>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}
