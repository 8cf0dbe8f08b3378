//! Named digraph families with fixed canonical labelings, plus the
//! combinators that grow bigger examples from smaller ones.
//!
//! Every constructor documents its labeling so serialized output is
//! byte-stable across runs.

mod combinators;
mod tree;

pub use combinators::{
    add_dominating_vertex, anti_extend, glue, join, sid_extend, substitute, symmetric_edge_add,
    transitive_minus_edge_pipeline,
};
pub use tree::tree_anti_orientation;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::VertexSet;
use crate::digraph::{Digraph, GraphError};
use crate::undirected::UndirectedGraph;

/// Largest `k` for [`subset_bipartite`] (`2^k` B-vertices).
pub const SUBSET_BIPARTITE_LIMIT: usize = 16;
/// Largest edge count for [`all_orientations_union`] (`2^e` copies).
pub const ORIENTATIONS_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{family}: {message}")]
    Precondition {
        family: &'static str,
        message: String,
    },
    #[error("{family}: parameter {value} exceeds the size guard {limit}")]
    SizeGuard {
        family: &'static str,
        value: usize,
        limit: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn precondition(family: &'static str, message: impl Into<String>) -> ConstructionError {
    ConstructionError::Precondition {
        family,
        message: message.into(),
    }
}

/// `0 -> 1 -> ... -> k`.
pub fn directed_path(k: usize) -> Digraph {
    Digraph::from_edges(k + 1, (0..k).map(|i| (i, i + 1))).expect("path edges are valid")
}

/// `0 -> 1 -> ... -> r-1 -> 0`.
pub fn directed_cycle(r: usize) -> Result<Digraph, ConstructionError> {
    if r < 3 {
        return Err(precondition("directed-cycle", format!("length {r} < 3")));
    }
    Ok(Digraph::from_edges(r, (0..r).map(|i| (i, (i + 1) % r)))?)
}

/// `i -> j` for all `i < j`.
pub fn transitive_tournament(k: usize) -> Digraph {
    crate::digraph::Tournament::transitive(k).into_digraph()
}

/// `TT_k` without the edge `(i, j)`; `i`, `j` are 1-indexed, so the
/// removed pair is `(i-1, j-1)` in vertex labels.
pub fn transitive_minus_edge(k: usize, i: usize, j: usize) -> Result<Digraph, ConstructionError> {
    if !(1 <= i && i < j && j <= k) {
        return Err(precondition(
            "transitive-minus-edge",
            format!("need 1 <= i < j <= k, got k = {k}, i = {i}, j = {j}"),
        ));
    }
    let edges = transitive_tournament(k)
        .edges()
        .into_iter()
        .filter(|&e| e != (i - 1, j - 1));
    Ok(Digraph::from_edges(k, edges)?)
}

/// Whether the deleted pair is one the transitive-minus-edge Sidorenko
/// result covers (`j - i != 2`).
pub fn transitive_minus_edge_eligible(i: usize, j: usize) -> bool {
    j - i != 2
}

/// Center `0`, out-leaves `1..=d_out`, then in-leaves.
pub fn star(d_out: usize, d_in: usize) -> Result<Digraph, ConstructionError> {
    if d_out + d_in == 0 {
        return Err(precondition("star", "needs at least one leaf"));
    }
    let out = (1..=d_out).map(|l| (0, l));
    let inn = (d_out + 1..=d_out + d_in).map(|l| (l, 0));
    Ok(Digraph::from_edges(1 + d_out + d_in, out.chain(inn))?)
}

/// Edge count of `S_k` from the recursion
/// `e(S_k) = k - 1 + e(S_{floor((k-1)/2)}) + e(S_{ceil((k-1)/2)})`.
pub fn balanced_star_edges_recursive(k: usize) -> usize {
    if k <= 1 {
        return 0;
    }
    let (lo, hi) = ((k - 1) / 2, k / 2);
    k - 1 + balanced_star_edges_recursive(lo) + balanced_star_edges_recursive(hi)
}

/// Closed form `t(k+1) - 2^{t+1} + 2`, `t` the largest with `2^t <= k+1`.
pub fn balanced_star_edges_closed(k: usize) -> usize {
    let t = (k + 1).ilog2() as usize;
    t * (k + 1) + 2 - (1 << (t + 1))
}

/// Iterated balanced star on `k` vertices. Labeling: center `0`, then the
/// in-part `U` (`floor((k-1)/2)` vertices), then the out-part `W`; each
/// part is labeled recursively the same way.
pub fn iterated_balanced_star(k: usize) -> Digraph {
    fn build(d: &mut Digraph, offset: usize, k: usize) {
        if k <= 1 {
            return;
        }
        let u = (k - 1) / 2;
        let center = offset;
        for x in offset + 1..offset + 1 + u {
            d.insert_edge(x, center).expect("fresh in-edge");
        }
        for y in offset + 1 + u..offset + k {
            d.insert_edge(center, y).expect("fresh out-edge");
        }
        build(d, offset + 1, u);
        build(d, offset + 1 + u, k - 1 - u);
    }
    let mut d = Digraph::empty(k);
    build(&mut d, 0, k);
    assert_eq!(
        d.edge_count(),
        balanced_star_edges_closed(k),
        "closed form disagrees with the construction at k = {k}"
    );
    d
}

/// Bipartite gadget with parts `A = 0..k` and `B = k..k + 2^k`. The
/// B-vertex `k + S` (for a bitmask `S`) has out-neighborhood exactly `S`:
/// bit `i` set means `k + S -> i`, clear means `i -> k + S`.
/// Returns the digraph and the set `A`.
pub fn subset_bipartite(k: usize) -> Result<(Digraph, VertexSet), ConstructionError> {
    if k == 0 {
        return Err(precondition("subset-bipartite", "k must be at least 1"));
    }
    if k > SUBSET_BIPARTITE_LIMIT {
        return Err(ConstructionError::SizeGuard {
            family: "subset-bipartite",
            value: k,
            limit: SUBSET_BIPARTITE_LIMIT,
        });
    }
    let n = k + (1 << k);
    let mut d = Digraph::empty(n);
    for mask in 0..1usize << k {
        let b = k + mask;
        for a in 0..k {
            if mask >> a & 1 == 1 {
                d.insert_edge(b, a)?;
            } else {
                d.insert_edge(a, b)?;
            }
        }
    }
    Ok((d, VertexSet::from_members(n, 0..k)))
}

/// Disjoint union of all `2^e` orientations of `a`. Copy `c` occupies
/// `c*k..(c+1)*k`; bit `i` of `c` orients the `i`-th edge `{u, v}`
/// (`u < v`, sorted) as `v -> u` when set and `u -> v` when clear.
pub fn all_orientations_union(a: &UndirectedGraph) -> Result<Digraph, ConstructionError> {
    let edges = a.edges();
    if edges.len() > ORIENTATIONS_LIMIT {
        return Err(ConstructionError::SizeGuard {
            family: "all-orientations-union",
            value: edges.len(),
            limit: ORIENTATIONS_LIMIT,
        });
    }
    let k = a.n();
    let copies = 1usize << edges.len();
    let mut d = Digraph::empty(k * copies);
    for c in 0..copies {
        let off = c * k;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if c >> i & 1 == 1 {
                d.insert_edge(off + v, off + u)?;
            } else {
                d.insert_edge(off + u, off + v)?;
            }
        }
    }
    Ok(d)
}

/// `a = 0`, `b = 1`, `v_i = 1 + i` for `i = 1..=k`; edges `a -> v_i -> b`.
pub fn d_family(k: usize) -> Digraph {
    let edges = (2..k + 2).flat_map(|v| [(0, v), (v, 1)]);
    Digraph::from_edges(k + 2, edges).expect("family edges are valid")
}

/// Directed cycle on `2k` vertices plus the chord `0 -> k` between
/// antipodal vertices; `k` odd and at least 3.
pub fn cycle_with_chord(k: usize) -> Result<Digraph, ConstructionError> {
    if k < 3 || k % 2 == 0 {
        return Err(precondition(
            "cycle-with-chord",
            format!("half-length k = {k} must be odd and at least 3"),
        ));
    }
    let mut d = directed_cycle(2 * k)?;
    d.insert_edge(0, k)?;
    Ok(d)
}

/// Parameters `(s, t)` of the uniqueness gadget on `k` vertices.
pub fn unique_hom_params(k: usize) -> Result<(usize, usize), ConstructionError> {
    let fam = "unique-hom-digraph";
    if k < 2 {
        return Err(precondition(fam, format!("k = {k} is too small")));
    }
    let s = k.next_power_of_two().trailing_zeros() as usize;
    let t = k
        .checked_sub(s + 1)
        .ok_or_else(|| precondition(fam, format!("k = {k} leaves no room for A2")))?;
    if t > 1 << s {
        return Err(precondition(fam, format!("t = {t} > 2^s = {}", 1usize << s)));
    }
    if t <= 2 * s + 1 {
        return Err(precondition(
            fam,
            format!("t > 2s + 1 fails: t = {t}, 2s + 1 = {}", 2 * s + 1),
        ));
    }
    Ok((s, t))
}

/// Digraph on `k` vertices with at most one homomorphic copy in every
/// `k`-vertex tournament. With `s = ceil(log2 k)`, `t = k - s - 1`:
/// `A1 = 0..s` carries a transitive tournament, `A2 = s..s+t`, `x = k-1`;
/// `x -> A2`, `A1 -> x`. The `i`-th vertex of `A2` (0-based) has
/// out-neighborhood in `A1` equal to the bitmask `i/2` when `i` is even and
/// to its complement when `i` is odd; all other `A1`-`A2` pairs point into
/// `A2`.
pub fn unique_hom_digraph(k: usize) -> Result<Digraph, ConstructionError> {
    let (s, t) = unique_hom_params(k)?;
    let x = k - 1;
    let full = (1usize << s) - 1;
    let mut d = transitive_tournament(s).disjoint_union(&Digraph::empty(t + 1));
    for i in 0..t {
        let u = s + i;
        d.insert_edge(x, u)?;
        let mask = if i % 2 == 0 { i / 2 } else { full & !(i / 2) };
        for a in 0..s {
            if mask >> a & 1 == 1 {
                d.insert_edge(u, a)?;
            } else {
                d.insert_edge(a, u)?;
            }
        }
    }
    for a in 0..s {
        d.insert_edge(a, x)?;
    }
    Ok(d)
}

/// 1-subdivision of `K_{1,2k}` (`k` even). Center `0`, middles `1..=2k`,
/// leaves `2k+1..=4k`; path `i` runs through middle `1+i` to leaf
/// `2k+1+i`. Paths come in four consecutive groups of `k/2`, oriented
/// `c->m->l`, `c->m<-l`, `c<-m->l`, `c<-m<-l`.
pub fn subdivided_star_orientation(k: usize) -> Result<Digraph, ConstructionError> {
    if k == 0 || k % 2 == 1 {
        return Err(precondition(
            "subdivided-star",
            format!("k = {k} must be even and positive"),
        ));
    }
    let mut d = Digraph::empty(4 * k + 1);
    for i in 0..2 * k {
        let (m, l) = (1 + i, 2 * k + 1 + i);
        let (center_out, middle_out) = match i / (k / 2) {
            0 => (true, true),
            1 => (true, false),
            2 => (false, true),
            _ => (false, false),
        };
        if center_out {
            d.insert_edge(0, m)?;
        } else {
            d.insert_edge(m, 0)?;
        }
        if middle_out {
            d.insert_edge(m, l)?;
        } else {
            d.insert_edge(l, m)?;
        }
    }
    Ok(d)
}

/// Family selector with parameters, as named on the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    DirectedPath { k: usize },
    DirectedCycle { r: usize },
    TransitiveTournament { k: usize },
    TransitiveMinusEdge { k: usize, i: usize, j: usize },
    Star { d_out: usize, d_in: usize },
    IteratedBalancedStar { k: usize },
    SubsetBipartite { k: usize },
    /// Edges of the undirected graph to orient every way.
    AllOrientationsUnion { n: usize, edges: Vec<(usize, usize)> },
    DFamily { k: usize },
    CycleWithChord { k: usize },
    UniqueHomDigraph { k: usize },
    SubdividedStar { k: usize },
    TreeOrientation { n: usize, edges: Vec<(usize, usize)> },
}

/// A built family member with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub digraph: Digraph,
    pub family: Family,
    pub description: String,
    /// Pinned or designated vertex set, when the family has one.
    pub designated: Option<VertexSet>,
    pub warnings: Vec<String>,
}

impl Family {
    pub const NAMES: [&'static str; 13] = [
        "directed-path",
        "directed-cycle",
        "transitive-tournament",
        "transitive-minus-edge",
        "star",
        "iterated-balanced-star",
        "subset-bipartite",
        "all-orientations-union",
        "d-family",
        "cycle-with-chord",
        "unique-hom-digraph",
        "subdivided-star",
        "tree-orientation",
    ];

    /// Parses `name` and its integer parameters. The two graph-valued
    /// families take `n` followed by edge endpoints `u1 v1 u2 v2 ...`.
    pub fn parse(name: &str, params: &[usize]) -> Result<Family, String> {
        let want = |k: usize| -> Result<(), String> {
            if params.len() == k {
                Ok(())
            } else {
                Err(format!("{name} takes {k} parameter(s), got {}", params.len()))
            }
        };
        let graph = || -> Result<(usize, Vec<(usize, usize)>), String> {
            match params.split_first() {
                Some((&n, rest)) if rest.len() % 2 == 0 => {
                    Ok((n, rest.chunks(2).map(|c| (c[0], c[1])).collect()))
                }
                _ => Err(format!("{name} takes n followed by edge endpoint pairs")),
            }
        };
        let p = |i: usize| params[i];
        Ok(match name {
            "directed-path" => want(1).map(|_| Family::DirectedPath { k: p(0) })?,
            "directed-cycle" => want(1).map(|_| Family::DirectedCycle { r: p(0) })?,
            "transitive-tournament" => want(1).map(|_| Family::TransitiveTournament { k: p(0) })?,
            "transitive-minus-edge" => want(3).map(|_| Family::TransitiveMinusEdge {
                k: p(0),
                i: p(1),
                j: p(2),
            })?,
            "star" => want(2).map(|_| Family::Star {
                d_out: p(0),
                d_in: p(1),
            })?,
            "iterated-balanced-star" => want(1).map(|_| Family::IteratedBalancedStar { k: p(0) })?,
            "subset-bipartite" => want(1).map(|_| Family::SubsetBipartite { k: p(0) })?,
            "all-orientations-union" => {
                let (n, edges) = graph()?;
                Family::AllOrientationsUnion { n, edges }
            }
            "d-family" => want(1).map(|_| Family::DFamily { k: p(0) })?,
            "cycle-with-chord" => want(1).map(|_| Family::CycleWithChord { k: p(0) })?,
            "unique-hom-digraph" => want(1).map(|_| Family::UniqueHomDigraph { k: p(0) })?,
            "subdivided-star" => want(1).map(|_| Family::SubdividedStar { k: p(0) })?,
            "tree-orientation" => {
                let (n, edges) = graph()?;
                Family::TreeOrientation { n, edges }
            }
            _ => {
                return Err(format!(
                    "unknown family `{name}`; expected one of {}",
                    Family::NAMES.join(", ")
                ))
            }
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::DirectedPath { .. } => "directed-path",
            Family::DirectedCycle { .. } => "directed-cycle",
            Family::TransitiveTournament { .. } => "transitive-tournament",
            Family::TransitiveMinusEdge { .. } => "transitive-minus-edge",
            Family::Star { .. } => "star",
            Family::IteratedBalancedStar { .. } => "iterated-balanced-star",
            Family::SubsetBipartite { .. } => "subset-bipartite",
            Family::AllOrientationsUnion { .. } => "all-orientations-union",
            Family::DFamily { .. } => "d-family",
            Family::CycleWithChord { .. } => "cycle-with-chord",
            Family::UniqueHomDigraph { .. } => "unique-hom-digraph",
            Family::SubdividedStar { .. } => "subdivided-star",
            Family::TreeOrientation { .. } => "tree-orientation",
        }
    }

    pub fn build(&self) -> Result<Construction, ConstructionError> {
        let mut designated = None;
        let mut warnings = Vec::new();
        let (digraph, description) = match *self {
            Family::DirectedPath { k } => (directed_path(k), format!("directed path with {k} edges")),
            Family::DirectedCycle { r } => (directed_cycle(r)?, format!("directed cycle of length {r}")),
            Family::TransitiveTournament { k } => {
                (transitive_tournament(k), format!("transitive tournament on {k} vertices"))
            }
            Family::TransitiveMinusEdge { k, i, j } => {
                let d = transitive_minus_edge(k, i, j)?;
                if !transitive_minus_edge_eligible(i, j) {
                    warnings.push(
                        "j-i=2: outside the transitive-minus-edge Sidorenko family".to_string(),
                    );
                }
                (d, format!("transitive tournament on {k} vertices minus edge ({i},{j})"))
            }
            Family::Star { d_out, d_in } => (
                star(d_out, d_in)?,
                format!("star with {d_out} out-leaves and {d_in} in-leaves"),
            ),
            Family::IteratedBalancedStar { k } => {
                (iterated_balanced_star(k), format!("iterated balanced star on {k} vertices"))
            }
            Family::SubsetBipartite { k } => {
                let (d, a) = subset_bipartite(k)?;
                designated = Some(a);
                (d, format!("subset bipartite gadget with |A| = {k}"))
            }
            Family::AllOrientationsUnion { n, ref edges } => {
                let a = UndirectedGraph::from_edges(n, edges.iter().copied())?;
                (
                    all_orientations_union(&a)?,
                    format!("union of all orientations of a graph with {n} vertices, {} edges", a.edge_count()),
                )
            }
            Family::DFamily { k } => (d_family(k), format!("D_{k}: a -> v_i -> b for {k} middle vertices")),
            Family::CycleWithChord { k } => (
                cycle_with_chord(k)?,
                format!("directed {}-cycle with an antipodal chord", 2 * k),
            ),
            Family::UniqueHomDigraph { k } => {
                let (s, t) = unique_hom_params(k)?;
                (unique_hom_digraph(k)?, format!("uniqueness gadget on {k} vertices (s = {s}, t = {t})"))
            }
            Family::SubdividedStar { k } => (
                subdivided_star_orientation(k)?,
                format!("balanced orientation of the subdivided K_1,{}", 2 * k),
            ),
            Family::TreeOrientation { n, ref edges } => {
                let r = UndirectedGraph::from_edges(n, edges.iter().copied())?;
                (tree_anti_orientation(&r)?, format!("anti orientation of a tree on {n} vertices"))
            }
        };
        Ok(Construction {
            digraph,
            family: self.clone(),
            description,
            designated,
            warnings,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn basic_families() {
        assert_eq!(directed_path(0).n(), 1);
        assert_eq!(directed_path(2).edges(), vec![(0, 1), (1, 2)]);
        assert!(directed_cycle(2).is_err());
        assert_eq!(directed_cycle(4).unwrap().edge_count(), 4);
        let d = transitive_minus_edge(4, 1, 4).unwrap();
        assert_eq!((d.n(), d.edge_count()), (4, 5));
        assert!(transitive_minus_edge_eligible(1, 4));
        assert_eq!(transitive_minus_edge(3, 1, 3).unwrap(), directed_path(2));
        assert!(!transitive_minus_edge_eligible(1, 3));
        assert_eq!(transitive_minus_edge(2, 1, 2).unwrap(), Digraph::empty(2));
        assert!(transitive_minus_edge(3, 2, 2).is_err());
        assert_eq!(star(1, 1).unwrap().edges(), vec![(0, 1), (2, 0)]);
        assert!(star(0, 0).is_err());
    }

    #[test]
    fn balanced_star_counts() {
        assert_eq!(iterated_balanced_star(1).edge_count(), 0);
        assert_eq!(iterated_balanced_star(2).edge_count(), 1);
        assert_eq!(iterated_balanced_star(7).edge_count(), 10);
        assert_eq!(iterated_balanced_star(15).edge_count(), 34);
        for k in 1..=64 {
            assert_eq!(balanced_star_edges_closed(k), balanced_star_edges_recursive(k), "k = {k}");
        }
        // S_3 is x -> v -> y.
        let s3 = iterated_balanced_star(3);
        assert_eq!(s3.edges(), vec![(0, 2), (1, 0)]);
    }

    #[test]
    fn subset_bipartite_shape() {
        let (d1, a) = subset_bipartite(1).unwrap();
        assert_eq!(a.to_vec(), vec![0]);
        let path = Digraph::from_edges(3, [(2, 0), (0, 1)]).unwrap();
        assert_eq!(d1, path);
        for (k, e) in [(2, 8), (3, 24)] {
            let (d, _) = subset_bipartite(k).unwrap();
            assert_eq!((d.n(), d.edge_count()), (k + (1 << k), e));
        }
        assert!(subset_bipartite(17).is_err());
        // The k = 1 gadget is the 2-edge path D_1.
        assert!(are_isomorphic(&d1, &d_family(1)).unwrap().is_some());
    }

    #[test]
    fn orientations_union_sizes() {
        let e = all_orientations_union(&UndirectedGraph::complete(2)).unwrap();
        assert_eq!((e.n(), e.edge_count()), (4, 2));
        let p = all_orientations_union(&UndirectedGraph::path(3)).unwrap();
        assert_eq!((p.n(), p.edge_count()), (12, 8));
        let t = all_orientations_union(&UndirectedGraph::complete(3)).unwrap();
        assert_eq!((t.n(), t.edge_count()), (24, 24));
        // K_5 has exactly the ten edges allowed; K_6 is refused.
        assert!(all_orientations_union(&UndirectedGraph::complete(6)).is_err());
    }

    #[test]
    fn d_family_and_chords() {
        assert_eq!(d_family(0), Digraph::empty(2));
        assert_eq!(d_family(1).edges(), vec![(0, 2), (2, 1)]);
        assert_eq!(d_family(2).edge_count(), 4);
        let c = cycle_with_chord(3).unwrap();
        assert_eq!((c.n(), c.edge_count()), (6, 7));
        assert!(c.has_edge(0, 3));
        assert_eq!(cycle_with_chord(5).unwrap().edge_count(), 11);
        assert!(cycle_with_chord(2).is_err());
        assert!(cycle_with_chord(4).is_err());
    }

    #[test]
    fn uniqueness_gadget() {
        let d = unique_hom_digraph(16).unwrap();
        assert_eq!((d.n(), d.edge_count()), (16, 65));
        let err = unique_hom_digraph(12).unwrap_err().to_string();
        assert!(err.contains("t > 2s + 1"), "{err}");
        let (s, t) = unique_hom_params(16).unwrap();
        let outs: Vec<Vec<usize>> = (s..s + t)
            .map(|u| d.out_neighbors(u).filter(|&a| a < s).collect())
            .collect();
        let mut dedup = outs.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), t);
        for a in 0..s {
            let from_a2 = d.in_neighbors(a).filter(|&u| u >= s && u < s + t).count();
            assert!(2 * from_a2 + 1 >= t);
        }
    }

    #[test]
    fn subdivided_star_types() {
        let d = subdivided_star_orientation(2).unwrap();
        assert_eq!((d.n(), d.edge_count()), (9, 8));
        assert_eq!(subdivided_star_orientation(4).unwrap().edge_count(), 16);
        assert!(subdivided_star_orientation(1).is_err());
        assert!(d.has_edge(0, 1) && d.has_edge(1, 5));
        assert!(d.has_edge(0, 2) && d.has_edge(6, 2));
        assert!(d.has_edge(3, 0) && d.has_edge(3, 7));
        assert!(d.has_edge(4, 0) && d.has_edge(8, 4));
    }

    #[test]
    fn family_parsing_and_warnings() {
        let c = Family::parse("iterated-balanced-star", &[7]).unwrap().build().unwrap();
        assert_eq!((c.digraph.n(), c.digraph.edge_count()), (7, 10));
        let c = Family::parse("transitive-minus-edge", &[3, 1, 3]).unwrap().build().unwrap();
        assert_eq!(c.warnings.len(), 1);
        assert!(c.warnings[0].starts_with("j-i=2"));
        assert!(Family::parse("star", &[1]).is_err());
        assert!(Family::parse("nope", &[]).is_err());
        let c = Family::parse("tree-orientation", &[3, 0, 1, 0, 2]).unwrap().build().unwrap();
        assert_eq!(c.digraph.edge_count(), 2);
        for name in Family::NAMES {
            assert!(!Family::parse(name, &[]).is_ok_and(|f| f.name() != name));
        }
    }
}
