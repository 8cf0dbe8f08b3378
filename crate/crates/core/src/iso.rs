//! Small-instance digraph isomorphism.

use crate::digraph::{Digraph, GraphError};

/// Largest vertex count accepted by [`are_isomorphic`].
pub const ISO_LIMIT: usize = 12;

/// Returns the lexicographically least bijection `f` (as the sequence
/// `f(0), f(1), ...`) with `u -> v` in `d1` iff `f(u) -> f(v)` in `d2`.
///
/// Candidates are pruned by `(out-degree, in-degree)` signature and by
/// adjacency with the already-mapped prefix.
pub fn are_isomorphic(d1: &Digraph, d2: &Digraph) -> Result<Option<Vec<usize>>, GraphError> {
    for d in [d1, d2] {
        if d.n() > ISO_LIMIT {
            return Err(GraphError::TooLargeForIsomorphism {
                n: d.n(),
                limit: ISO_LIMIT,
            });
        }
    }
    if d1.n() != d2.n() || d1.edge_count() != d2.edge_count() {
        return Ok(None);
    }
    let n = d1.n();
    let sig = |d: &Digraph| -> Vec<(usize, usize)> {
        (0..n).map(|u| (d.out_degree(u), d.in_degree(u))).collect()
    };
    let (s1, s2) = (sig(d1), sig(d2));
    let mut sorted1 = s1.clone();
    let mut sorted2 = s2.clone();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return Ok(None);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(d1, d2, &s1, &s2, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn extend(
    d1: &Digraph,
    d2: &Digraph,
    s1: &[(usize, usize)],
    s2: &[(usize, usize)],
    u: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if u == map.len() {
        return true;
    }
    for cand in 0..map.len() {
        if used[cand] || s1[u] != s2[cand] {
            continue;
        }
        let consistent = (0..u).all(|p| {
            d1.has_edge(p, u) == d2.has_edge(map[p], cand)
                && d1.has_edge(u, p) == d2.has_edge(cand, map[p])
        });
        if !consistent {
            continue;
        }
        map[u] = cand;
        used[cand] = true;
        if extend(d1, d2, s1, s2, u + 1, map, used) {
            return true;
        }
        used[cand] = false;
    }
    map[u] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Tournament;

    #[test]
    fn cyclic_triangle_and_its_reverse() {
        let c = Digraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let f = are_isomorphic(&c, &c.reverse()).unwrap().unwrap();
        assert_eq!(c.relabel(&f), c.reverse());
        // Least witness: fix 0, swap 1 and 2.
        assert_eq!(f, vec![0, 2, 1]);
    }

    #[test]
    fn transitive_vs_cyclic() {
        let c = Digraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let t = Tournament::transitive(3).into_digraph();
        assert_eq!(are_isomorphic(&t, &c).unwrap(), None);
    }

    #[test]
    fn size_guard() {
        let big = Digraph::empty(13);
        assert!(matches!(
            are_isomorphic(&big, &big),
            Err(GraphError::TooLargeForIsomorphism { n: 13, .. })
        ));
        assert!(are_isomorphic(&Digraph::empty(12), &Digraph::empty(12)).unwrap().is_some());
    }
}
