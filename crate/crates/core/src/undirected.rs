//! Simple undirected graphs: underlying graphs of digraphs, biclique-cover
//! hosts, and trees to orient.

use std::fmt;

use crate::bits::{self, words_for};
use crate::digraph::GraphError;

/// A loopless undirected graph on `0..n` with symmetric packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

impl fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UndirectedGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl UndirectedGraph {
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        UndirectedGraph {
            n,
            words,
            rows: vec![0; n * words],
            edge_count: 0,
        }
    }

    /// Repeated edges are merged.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    /// `K_{1,leaves}` with center `0`.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.has_edge(u, v) {
            let w = self.words;
            bits::set(&mut self.rows[u * w..(u + 1) * w], v);
            bits::set(&mut self.rows[v * w..(v + 1) * w], u);
            self.edge_count += 1;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::get(self.row(u), v)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(u))
    }

    pub fn degree(&self, u: usize) -> usize {
        bits::count(self.row(u))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn complement(&self) -> UndirectedGraph {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count + 1 == self.n && self.components().len() == 1
    }

    /// Sizes of the components when every component is a clique, else `None`.
    pub fn clique_components(&self) -> Option<Vec<usize>> {
        let comps = self.components();
        comps
            .iter()
            .all(|c| c.iter().all(|&u| self.degree(u) + 1 == c.len()))
            .then(|| comps.iter().map(Vec::len).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_disjoint_cliques() {
        let g = UndirectedGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.clique_components(), Some(vec![2, 2]));
        assert_eq!(g.complement().edge_count(), 4);
        assert_eq!(UndirectedGraph::path(3).clique_components(), None);
    }

    #[test]
    fn trees() {
        assert!(UndirectedGraph::path(5).is_tree());
        assert!(UndirectedGraph::star(4).is_tree());
        assert!(!UndirectedGraph::complete(3).is_tree());
        assert!(!UndirectedGraph::empty(2).is_tree());
        assert!(UndirectedGraph::empty(1).is_tree());
    }
}
