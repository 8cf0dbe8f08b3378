//! Biclique covers, the coverage-multiplicity profile, the hypercube cover
//! that is tight for the leading-order weight bound, and two rigidity
//! checks for digraphs with at most one homomorphic copy in every tournament
//! of their own size.

use std::collections::BTreeMap;

use num_traits::Float;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::VertexSet;
use crate::counting::{CountError, Counter};
use crate::digraph::{Digraph, FillStrategy, Tournament};
use crate::undirected::UndirectedGraph;

/// Largest `r` accepted by [`hypercube_cover`]; the host is materialized
/// as `2^r` bit rows.
pub const HYPERCUBE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("biclique {index} has a side over {found} vertices, expected {expected}")]
    Universe {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("biclique {index} has overlapping sides")]
    Overlap { index: usize },
    #[error("cover is over {cover} vertices but the host has {host}")]
    SizeMismatch { host: usize, cover: usize },
    #[error("cover does not verify against the host: {0}")]
    Unverified(String),
    #[error("hypercube cover needs 1 <= k <= r <= {limit}, got r = {r}, k = {k}")]
    Bounds { r: usize, k: usize, limit: usize },
}

/// A list of bicliques `K_{A_i, B_i}` over `0..host_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicliqueCover {
    host_n: usize,
    parts: Vec<(VertexSet, VertexSet)>,
}

impl BicliqueCover {
    pub fn new(host_n: usize, parts: Vec<(VertexSet, VertexSet)>) -> Result<Self, CoverError> {
        for (index, (a, b)) in parts.iter().enumerate() {
            for side in [a, b] {
                if side.universe() != host_n {
                    return Err(CoverError::Universe {
                        index,
                        found: side.universe(),
                        expected: host_n,
                    });
                }
            }
            if !a.is_disjoint(b) {
                return Err(CoverError::Overlap { index });
            }
        }
        Ok(BicliqueCover { host_n, parts })
    }

    pub fn empty(host_n: usize) -> Self {
        BicliqueCover {
            host_n,
            parts: Vec::new(),
        }
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn parts(&self) -> &[(VertexSet, VertexSet)] {
        &self.parts
    }

    /// The graph whose edges are exactly the biclique edges.
    pub fn union_graph(&self) -> UndirectedGraph {
        let mut g = UndirectedGraph::empty(self.host_n);
        for (a, b) in &self.parts {
            for u in a.iter() {
                for v in b.iter() {
                    g.add_edge(u, v).expect("sides are disjoint and in range");
                }
            }
        }
        g
    }
}

/// Result of [`verify_cover`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCheck {
    pub valid: bool,
    /// First host edge (lexicographic) no biclique covers.
    pub first_uncovered: Option<(usize, usize)>,
    /// First biclique edge (lexicographic) missing from the host.
    pub first_foreign: Option<(usize, usize)>,
}

pub fn verify_cover(h: &UndirectedGraph, c: &BicliqueCover) -> Result<CoverCheck, CoverError> {
    if h.n() != c.host_n() {
        return Err(CoverError::SizeMismatch {
            host: h.n(),
            cover: c.host_n(),
        });
    }
    let covered = c.union_graph();
    let first_uncovered = h.edges().into_iter().find(|&(u, v)| !covered.has_edge(u, v));
    let first_foreign = covered.edges().into_iter().find(|&(u, v)| !h.has_edge(u, v));
    Ok(CoverCheck {
        valid: first_uncovered.is_none() && first_foreign.is_none(),
        first_uncovered,
        first_foreign,
    })
}

/// `Σ |A_i| + |B_i|`.
pub fn cover_weight(c: &BicliqueCover) -> usize {
    c.parts().iter().map(|(a, b)| a.len() + b.len()).sum()
}

/// Maps `t` to the number of vertices lying in exactly `t` bicliques.
/// Only nonzero classes appear.
pub fn tt_profile(c: &BicliqueCover) -> BTreeMap<usize, usize> {
    let mut mult = vec![0usize; c.host_n()];
    for (a, b) in c.parts() {
        for v in a.iter().chain(b.iter()) {
            mult[v] += 1;
        }
    }
    let mut profile = BTreeMap::new();
    for m in mult {
        *profile.entry(m).or_insert(0) += 1;
    }
    profile
}

/// One row of [`check_tt_claim`]: `|T_t| <= 2^t + sqrt(s 2^{t+1})`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TtClaimRow {
    pub t: usize,
    pub size: usize,
    /// Right-hand side, approximate.
    pub bound_approx: f64,
    /// Decided exactly: `|T_t| <= 2^t` or `(|T_t| - 2^t)^2 <= s 2^{t+1}`.
    pub holds: bool,
}

/// Checks the multiplicity-class bound for every `t` from 1 to the number
/// of bicliques, with `s` the number of non-edges of `h`.
pub fn check_tt_claim(h: &UndirectedGraph, c: &BicliqueCover) -> Result<Vec<TtClaimRow>, CoverError> {
    let check = verify_cover(h, c)?;
    if !check.valid {
        return Err(CoverError::Unverified(format!("{check:?}")));
    }
    let n = h.n() as u128;
    let s = n * n.saturating_sub(1) / 2 - h.edge_count() as u128;
    let profile = tt_profile(c);
    Ok((1..=c.parts().len())
        .map(|t| {
            let size = profile.get(&t).copied().unwrap_or(0);
            let holds = t >= 64 || {
                let p = 1u128 << t;
                let size = size as u128;
                size <= p || (size - p).pow(2) <= s * 2 * p
            };
            let tf = t as f64;
            TtClaimRow {
                t,
                size,
                bound_approx: tf.exp2() + (s as f64 * (tf + 1.0).exp2()).sqrt(),
                holds,
            }
        })
        .collect())
}

/// `n log2 n - n log2((s + n) / n)`: the two leading terms of the weight
/// lower bound for a cover of a graph with `s` non-edges.
pub fn leading_lower_bound<F: Float>(n: usize, s: usize) -> F {
    let nf = F::from(n).expect("n fits the float type");
    let sf = F::from(s).expect("s fits the float type");
    nf * nf.log2() - nf * ((sf + nf) / nf).log2()
}

/// Report string for [`leading_lower_bound`].
pub fn leading_lower_bound_note(n: usize, s: usize) -> String {
    format!(
        "weight >= {:.4} - O(n) for n = {n}, s = {s}; the O(n) term is not evaluated",
        leading_lower_bound::<f64>(n, s)
    )
}

/// `n log2 n - n log2((n + 2s) / n)` when both logarithms are integers,
/// which is the case for every hypercube cover.
pub fn hypercube_identity_value(n: usize, s: usize) -> Option<usize> {
    if !n.is_power_of_two() || (n + 2 * s) % n != 0 {
        return None;
    }
    let q = (n + 2 * s) / n;
    q.is_power_of_two()
        .then(|| n * n.trailing_zeros() as usize - n * q.trailing_zeros() as usize)
}

/// Vertices are the `r`-bit strings `0..2^r`; biclique `i < k` splits them
/// on bit `i` (zeros on the `A` side). Returns the union host and the cover.
pub fn hypercube_cover(r: usize, k: usize) -> Result<(UndirectedGraph, BicliqueCover), CoverError> {
    if !(1 <= k && k <= r && r <= HYPERCUBE_LIMIT) {
        return Err(CoverError::Bounds {
            r,
            k,
            limit: HYPERCUBE_LIMIT,
        });
    }
    let n = 1usize << r;
    let parts = (0..k)
        .map(|i| {
            let a = VertexSet::from_members(n, (0..n).filter(|v| v >> i & 1 == 0));
            let b = VertexSet::from_members(n, (0..n).filter(|v| v >> i & 1 == 1));
            (a, b)
        })
        .collect();
    let cover = BicliqueCover::new(n, parts)?;
    let host = cover.union_graph();
    Ok((host, cover))
}

/// Result of [`two_path_condition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoPathCheck {
    pub holds: bool,
    /// First pair `(u, v)`, `u < v`, that is neither adjacent nor the ends
    /// of a directed 2-path.
    pub first_bad: Option<(usize, usize)>,
}

/// Every pair of distinct vertices must be adjacent or joined by a directed
/// path of length two (either direction). Necessary for having at most one
/// homomorphic copy in every tournament on `v(D)` vertices.
pub fn two_path_condition(d: &Digraph) -> TwoPathCheck {
    let n = d.n();
    let meets = |a: &[u64], b: &[u64]| a.iter().zip(b).any(|(x, y)| x & y != 0);
    let first_bad = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| {
            !d.adjacent(u, v)
                && !meets(d.out_row(u), d.in_row(v))
                && !meets(d.out_row(v), d.in_row(u))
        });
    TwoPathCheck {
        holds: first_bad.is_none(),
        first_bad,
    }
}

/// Result of [`homomorphism_multiplicity_probe`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityProbe {
    pub trials: usize,
    pub seed: u64,
    /// Largest count seen over the random hosts, capped at 2.
    pub max_observed: u8,
    /// Number of random hosts with no homomorphic copy.
    pub zero_hosts: usize,
    /// Count (capped at 2) in the designed host: `D` on its own labels,
    /// remaining pairs filled lexicographically.
    pub designed_host_count: u8,
    pub note: String,
}

/// Samples `trials` tournaments on `v(D)` vertices (trial `i` draws from
/// the ChaCha stream `i` of `seed`) and counts homomorphisms up to 2.
pub fn homomorphism_multiplicity_probe(
    d: &Digraph,
    trials: usize,
    seed: u64,
    counter: &Counter,
) -> Result<MultiplicityProbe, CountError> {
    let n = d.n();
    let counts = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial as u64);
            let host = Tournament::random(n, &mut rng);
            counter.homomorphisms_capped(d, &host, 2).map(|c| c as u8)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let designed = d.fill_to_tournament(FillStrategy::Lexicographic);
    let designed_host_count = counter.homomorphisms_capped(d, &designed, 2)? as u8;
    Ok(MultiplicityProbe {
        trials,
        seed,
        max_observed: counts.iter().copied().max().unwrap_or(0),
        zero_hosts: counts.iter().filter(|&&c| c == 0).count(),
        designed_host_count,
        note: format!(
            "sampled {trials} hosts on {n} vertices; exhaustive verification over all hosts is out of reach"
        ),
    })
}
