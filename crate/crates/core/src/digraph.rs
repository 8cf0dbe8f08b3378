//! Oriented graphs and tournaments.
//!
//! Vertices are the dense integers `0..n`. Adjacency is stored as packed
//! out-neighbor rows; in-neighbor rows are the transpose, built on first use
//! and cached.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bits::{self, words_for, VertexSet};
use crate::undirected::UndirectedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("antiparallel pair {0}->{1} and {1}->{0}")]
    Antiparallel(usize, usize),
    #[error("duplicate edge {0}->{1}")]
    DuplicateEdge(usize, usize),
    #[error("pair {{{0}, {1}}} carries no edge; not a tournament")]
    MissingPair(usize, usize),
    #[error("isomorphism search refuses {n} vertices (limit {limit})")]
    TooLargeForIsomorphism { n: usize, limit: usize },
    #[error("tournament code needs n <= {limit}, got {n}")]
    CodeTooWide { n: usize, limit: usize },
    #[error("blowup factor must be at least 1")]
    ZeroBlowup,
}

/// An oriented graph: no self-loops and no antiparallel pairs.
pub struct Digraph {
    n: usize,
    words: usize,
    out: Vec<u64>,
    edge_count: usize,
    inn: OnceLock<Vec<u64>>,
}

impl Clone for Digraph {
    fn clone(&self) -> Self {
        Digraph {
            n: self.n,
            words: self.words,
            out: self.out.clone(),
            edge_count: self.edge_count,
            inn: self.inn.clone(),
        }
    }
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.out == other.out
    }
}

impl Eq for Digraph {}

impl Hash for Digraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.out.hash(state);
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// How `fill_to_tournament` orients pairs that carry no edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FillStrategy {
    /// `u -> v` whenever `u < v`.
    #[default]
    Lexicographic,
    /// One fair coin per missing pair, visited in lexicographic pair order.
    SeededRandom(u64),
}

/// Direction of a vertex added complete to an existing digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    /// The new vertex points at every old vertex.
    Source,
    /// Every old vertex points at the new vertex.
    Sink,
}

impl Digraph {
    /// The edgeless digraph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Digraph {
            n,
            words,
            out: vec![0; n * words],
            edge_count: 0,
            inn: OnceLock::new(),
        }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut d = Digraph::empty(n);
        for (u, v) in edges {
            d.insert_edge(u, v)?;
        }
        Ok(d)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        if self.has_edge(v, u) {
            return Err(GraphError::Antiparallel(u, v));
        }
        bits::set(&mut self.out[u * self.words..(u + 1) * self.words], v);
        self.edge_count += 1;
        self.inn = OnceLock::new();
        Ok(())
    }

    /// A copy with extra edges installed.
    pub fn with_edges(
        &self,
        extra: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut d = self.clone();
        for (u, v) in extra {
            d.insert_edge(u, v)?;
        }
        Ok(d)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::get(self.out_row(u), v)
    }

    /// True when either orientation of `{u, v}` is present.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) || self.has_edge(v, u)
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub(crate) fn out_row(&self, u: usize) -> &[u64] {
        &self.out[u * self.words..(u + 1) * self.words]
    }

    pub(crate) fn in_row(&self, u: usize) -> &[u64] {
        let inn = self.inn.get_or_init(|| {
            let mut inn = vec![0u64; self.n * self.words];
            for (u, v) in self.edges() {
                bits::set(&mut inn[v * self.words..(v + 1) * self.words], u);
            }
            inn
        });
        &inn[u * self.words..(u + 1) * self.words]
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.out_row(u))
    }

    pub fn in_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.in_row(u))
    }

    pub fn out_degree(&self, u: usize) -> usize {
        bits::count(self.out_row(u))
    }

    pub fn in_degree(&self, u: usize) -> usize {
        bits::count(self.in_row(u))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.out_degree(u) + self.in_degree(u)
    }

    pub fn out_set(&self, u: usize) -> VertexSet {
        VertexSet::from_members(self.n, self.out_neighbors(u))
    }

    pub fn in_set(&self, u: usize) -> VertexSet {
        VertexSet::from_members(self.n, self.in_neighbors(u))
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.out_neighbors(u).map(move |v| (u, v)))
            .collect()
    }

    /// True when no two members of `set` are adjacent.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|u| set.iter().all(|v| !self.has_edge(u, v)))
    }

    /// Every edge flipped.
    pub fn reverse(&self) -> Digraph {
        Digraph::from_edges(self.n, self.edges().into_iter().map(|(u, v)| (v, u)))
            .expect("reversal preserves orientation")
    }

    pub fn underlying(&self) -> UndirectedGraph {
        UndirectedGraph::from_edges(self.n, self.edges()).expect("oriented edges are simple")
    }

    /// Whenever `x -> y -> z` and `{x, z}` carries an edge, that edge is `x -> z`.
    /// Pairs `{x, z}` without an edge never violate the condition.
    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|y| {
            self.in_neighbors(y).all(|x| {
                self.out_neighbors(y).all(|z| !self.has_edge(z, x))
            })
        })
    }

    /// Image of the digraph under the vertex map `old -> perm[old]`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.n);
        Digraph::from_edges(
            self.n,
            self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])),
        )
        .expect("a bijection preserves orientation")
    }

    /// Induced subdigraph; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Digraph::from_edges(vertices.len(), edges).expect("induced subgraph of an oriented graph")
    }

    /// Balanced blowup: vertex `i` becomes the independent block
    /// `i*m .. (i+1)*m`, each edge becomes a complete block-to-block bundle.
    pub fn blowup(&self, m: usize) -> Result<Digraph, GraphError> {
        if m == 0 {
            return Err(GraphError::ZeroBlowup);
        }
        let mut edges = Vec::with_capacity(self.edge_count * m * m);
        for (u, v) in self.edges() {
            for a in 0..m {
                for b in 0..m {
                    edges.push((u * m + a, v * m + b));
                }
            }
        }
        Digraph::from_edges(self.n * m, edges)
    }

    /// Keeps every existing edge and orients each empty pair per `strategy`.
    pub fn fill_to_tournament(&self, strategy: FillStrategy) -> Tournament {
        let mut d = self.clone();
        let mut rng = match strategy {
            FillStrategy::Lexicographic => None,
            FillStrategy::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        };
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adjacent(u, v) {
                    continue;
                }
                let forward = match rng.as_mut() {
                    None => true,
                    Some(r) => r.gen::<bool>(),
                };
                let (a, b) = if forward { (u, v) } else { (v, u) };
                d.insert_edge(a, b).expect("pair was empty");
            }
        }
        Tournament(d)
    }

    /// `self` on `0..n1`, `other` shifted to `n1..n1+n2`, no cross edges.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let off = self.n;
        Digraph::from_edges(
            self.n + other.n,
            self.edges()
                .into_iter()
                .chain(other.edges().into_iter().map(|(u, v)| (u + off, v + off))),
        )
        .expect("disjoint parts cannot collide")
    }
}

/// A complete oriented graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament(Digraph);

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament(n={}, {})", self.n(), self.to_bit_string())
    }
}

/// Largest `n` whose pair code fits a `u64`.
pub const MAX_CODE_N: usize = 11;

/// Index of the pair `{i, j}` (`i < j`) in lexicographic pair order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl Tournament {
    pub fn from_digraph(d: Digraph) -> Result<Self, GraphError> {
        for u in 0..d.n() {
            for v in u + 1..d.n() {
                if !d.adjacent(u, v) {
                    return Err(GraphError::MissingPair(u, v));
                }
            }
        }
        Ok(Tournament(d))
    }

    /// `TT_n`: `i -> j` for all `i < j`.
    pub fn transitive(n: usize) -> Self {
        Digraph::empty(n).fill_to_tournament(FillStrategy::Lexicographic)
    }

    /// Builds a tournament from one bit per pair in lexicographic pair order;
    /// `true` means `i -> j` for the pair `(i, j)`, `i < j`.
    pub fn from_pair_bits(n: usize, mut bit: impl FnMut(usize) -> bool) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                edges.push(if bit(k) { (i, j) } else { (j, i) });
                k += 1;
            }
        }
        Tournament(Digraph::from_edges(n, edges).expect("one edge per pair"))
    }

    /// Tournament whose pair `k` (lexicographic order) points forward iff
    /// bit `k` of `code` is set.
    pub fn from_code(n: usize, code: u64) -> Result<Self, GraphError> {
        if n > MAX_CODE_N {
            return Err(GraphError::CodeTooWide { n, limit: MAX_CODE_N });
        }
        Ok(Self::from_pair_bits(n, |k| code >> k & 1 == 1))
    }

    /// Inverse of `from_code`.
    pub fn code(&self) -> Option<u64> {
        if self.n() > MAX_CODE_N {
            return None;
        }
        let mut code = 0u64;
        self.for_each_pair(|k, forward| {
            if forward {
                code |= 1 << k;
            }
        });
        Some(code)
    }

    /// Uniformly random tournament, one coin per pair in lexicographic order.
    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        Self::from_pair_bits(n, |_| rng.gen::<bool>())
    }

    pub fn seeded_random(n: usize, seed: u64) -> Self {
        Self::random(n, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    fn for_each_pair(&self, mut f: impl FnMut(usize, bool)) {
        let mut k = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                f(k, self.0.has_edge(i, j));
                k += 1;
            }
        }
    }

    /// The pair string used by the TRN/1 format.
    pub fn to_bit_string(&self) -> String {
        let mut s = String::with_capacity(self.n() * self.n().saturating_sub(1) / 2);
        self.for_each_pair(|_, fwd| s.push(if fwd { '1' } else { '0' }));
        s
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.0.has_edge(u, v)
    }

    pub fn as_digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }

    pub fn reverse(&self) -> Tournament {
        Tournament(self.0.reverse())
    }

    pub fn relabel(&self, perm: &[usize]) -> Tournament {
        Tournament(self.0.relabel(perm))
    }

    /// Flips the edge on `{u, v}`.
    pub fn flipped(&self, u: usize, v: usize) -> Tournament {
        let (a, b) = if self.has_edge(u, v) { (u, v) } else { (v, u) };
        let edges = self
            .0
            .edges()
            .into_iter()
            .map(|e| if e == (a, b) { (b, a) } else { e });
        Tournament(Digraph::from_edges(self.n(), edges).expect("flip keeps a tournament"))
    }
}

impl std::ops::Deref for Tournament {
    type Target = Digraph;
    fn deref(&self) -> &Digraph {
        &self.0
    }
}
