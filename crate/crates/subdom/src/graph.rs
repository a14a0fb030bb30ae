//! Simple undirected graphs with bitmask adjacency rows, plus degree
//! sequences with prefix sums.

use std::fmt;

use thiserror::Error;

const WORD_BITS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("permutation is not a bijection on 0..{order}")]
    BadPermutation { order: usize },
}

/// A set of vertices stored as machine-word bitmask blocks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(nbits: usize) -> Self {
        VertexSet {
            nbits,
            words: vec![0; nbits.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(nbits: usize) -> Self {
        let mut s = Self::empty(nbits);
        for w in &mut s.words {
            *w = u64::MAX;
        }
        s.clear_padding();
        s
    }

    fn clear_padding(&mut self) {
        let rem = self.nbits % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Number of vertices in the universe this set ranges over.
    pub fn universe(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.nbits);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.nbits);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.nbits && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.nbits
    }

    /// In-place union with another set over the same universe.
    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.nbits, other.nbits, "vertex sets over different universes");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(w, o)| w & o != 0)
    }

    /// Lowest vertex index not in the set, if any.
    pub fn first_absent(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != u64::MAX {
                let v = i * WORD_BITS + (!w).trailing_zeros() as usize;
                if v < self.nbits {
                    return Some(v);
                }
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = i * WORD_BITS;
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(base + v)
            })
        })
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The set as a single word; only meaningful for universes of at most 64.
    pub fn as_word(&self) -> u64 {
        debug_assert!(self.nbits <= WORD_BITS);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn from_word(nbits: usize, word: u64) -> Self {
        debug_assert!(nbits <= WORD_BITS);
        let mut s = Self::empty(nbits);
        if let Some(w) = s.words.first_mut() {
            *w = word;
        }
        s.clear_padding();
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is one bitmask row per vertex; rows stay symmetric and
/// loop-free by construction, and the edge count is cached. Graphs are
/// immutable once built, so sharing them across threads is safe.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// The graph on `n` vertices with no edges. `n = 0` is allowed.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, order: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.m += 1;
        }
        Ok(())
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Open neighborhood of `v` as a bitmask; `v` itself is never a member.
    ///
    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        assert!(v < self.n, "vertex {v} out of range for graph on {} vertices", self.n);
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// True iff every vertex has degree at least one. Vacuously true for
    /// the empty graph.
    pub fn is_isolate_free(&self) -> bool {
        self.adj.iter().all(|row| !row.is_empty())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::count).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::count).min().unwrap_or(0)
    }

    /// Vertex degrees sorted non-increasing, with prefix sums.
    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_graph(self)
    }

    /// Disjoint union: vertices of `other` are relabeled by an offset of
    /// `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::edgeless(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("edges of a valid graph stay valid");
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)
                .expect("offset edges stay in range");
        }
        g
    }

    /// The graph with vertex `v` relabeled to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || !perm.iter().all(|&p| p < self.n && !std::mem::replace(&mut seen[p], true)) {
            return Err(GraphError::BadPermutation { order: self.n });
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Checks the representation invariants: symmetry, no loops, cached
    /// edge count. Intended for tests and debug assertions.
    pub fn check_invariants(&self) -> bool {
        let mut bits = 0usize;
        for u in 0..self.n {
            if self.adj[u].contains(u) {
                return false;
            }
            for v in self.adj[u].iter() {
                if v >= self.n || !self.adj[v].contains(u) {
                    return false;
                }
            }
            bits += self.adj[u].count();
        }
        bits == 2 * self.m
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=[", self.n, self.m)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DegreeSequenceError {
    #[error("degree {degree} impossible in a simple graph on {order} vertices")]
    DegreeOutOfRange { degree: usize, order: usize },
    #[error("degree sum {sum} is odd; no graph realizes this sequence")]
    OddDegreeSum { sum: u64 },
}

/// Vertex degrees in non-increasing order together with their prefix sums.
///
/// `prefix[k]` is the sum of the `k` largest degrees, so `prefix[0] = 0`
/// and `prefix[n]` equals twice the edge count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
    prefix: Vec<u64>,
}

impl DegreeSequence {
    pub fn from_graph(g: &Graph) -> Self {
        let raw: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        Self::from_raw(raw, g.order())
    }

    /// Builds a sequence from unsorted degrees, e.g. read from a file.
    /// Degrees must fit a simple graph and sum to an even number.
    pub fn from_degrees(degrees: Vec<usize>) -> Result<Self, DegreeSequenceError> {
        let n = degrees.len();
        let cap = n.saturating_sub(1);
        for &d in &degrees {
            if d > cap {
                return Err(DegreeSequenceError::DegreeOutOfRange { degree: d, order: n });
            }
        }
        let sum: u64 = degrees.iter().map(|&d| d as u64).sum();
        if sum % 2 != 0 {
            return Err(DegreeSequenceError::OddDegreeSum { sum });
        }
        Ok(Self::from_raw(degrees, n))
    }

    // Counting sort on the range [0, n-1] keeps construction linear in n.
    fn from_raw(raw: Vec<usize>, n: usize) -> Self {
        let mut count = vec![0usize; n.max(1)];
        for &d in &raw {
            count[d] += 1;
        }
        let mut degrees = Vec::with_capacity(n);
        for d in (0..count.len()).rev() {
            degrees.resize(degrees.len() + count[d], d);
        }
        let mut prefix = Vec::with_capacity(n + 1);
        let mut acc = 0u64;
        prefix.push(0);
        for &d in &degrees {
            acc += d as u64;
            prefix.push(acc);
        }
        DegreeSequence { degrees, prefix }
    }

    /// Number of vertices the sequence ranges over.
    pub fn order(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `prefix()[k]` = sum of the `k` largest degrees; length is `order() + 1`.
    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.first().copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.last().copied().unwrap_or(0)
    }

    /// Half the degree sum.
    pub fn edge_count(&self) -> u64 {
        self.prefix[self.order()] / 2
    }

    pub fn is_isolate_free(&self) -> bool {
        self.degrees.last().map_or(true, |&d| d >= 1)
    }

    /// Degree sequence of the disjoint union of the two source graphs:
    /// the sorted merge of both multisets.
    pub fn merge(&self, other: &DegreeSequence) -> DegreeSequence {
        let mut degrees = Vec::with_capacity(self.order() + other.order());
        let (mut i, mut j) = (0, 0);
        while i < self.degrees.len() && j < other.degrees.len() {
            if self.degrees[i] >= other.degrees[j] {
                degrees.push(self.degrees[i]);
                i += 1;
            } else {
                degrees.push(other.degrees[j]);
                j += 1;
            }
        }
        degrees.extend_from_slice(&self.degrees[i..]);
        degrees.extend_from_slice(&other.degrees[j..]);
        let mut prefix = Vec::with_capacity(degrees.len() + 1);
        let mut acc = 0u64;
        prefix.push(0);
        for &d in &degrees {
            acc += d as u64;
            prefix.push(acc);
        }
        DegreeSequence { degrees, prefix }
    }
}
