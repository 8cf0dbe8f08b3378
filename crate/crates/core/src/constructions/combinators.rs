//! Ways to build larger digraphs from smaller ones.

use crate::bits::VertexSet;
use crate::counting::PinnedPattern;
use crate::digraph::{Digraph, Dominance};
use crate::iso::are_isomorphic;

use super::{d_family, precondition, transitive_tournament, ConstructionError};

fn check_homogeneous(
    family: &'static str,
    d1: &Digraph,
    set: &VertexSet,
    d2: &Digraph,
) -> Result<Vec<usize>, ConstructionError> {
    if set.universe() != d1.n() {
        return Err(precondition(family, "vertex set is over the wrong universe"));
    }
    if !d1.is_independent(set) {
        return Err(precondition(family, "I is not independent"));
    }
    if set.len() != d2.n() {
        return Err(precondition(
            family,
            format!("|I| = {} but the inserted digraph has {} vertices", set.len(), d2.n()),
        ));
    }
    let members = set.to_vec();
    if let Some((&first, rest)) = members.split_first() {
        let (out, inn) = (d1.out_set(first), d1.in_set(first));
        if let Some(&bad) = rest
            .iter()
            .find(|&&u| d1.out_set(u) != out || d1.in_set(u) != inn)
        {
            return Err(precondition(
                family,
                format!("vertices {first} and {bad} of I have different neighborhoods"),
            ));
        }
    }
    Ok(members)
}

fn install(d1: &Digraph, members: &[usize], d2: &Digraph) -> Digraph {
    let mut d = d1.clone();
    for (a, b) in d2.edges() {
        d.insert_edge(members[a], members[b])
            .expect("I is independent, so the new edges are fresh");
    }
    d
}

/// Installs `d2` on the independent, neighborhood-homogeneous set `I` of
/// `d1`; vertex `q` of `d2` lands on the `q`-th smallest member of `I`.
/// Preserves the anti-Sidorenko property.
pub fn anti_extend(d1: &Digraph, i: &VertexSet, d2: &Digraph) -> Result<Digraph, ConstructionError> {
    let members = check_homogeneous("anti-extend", d1, i, d2)?;
    Ok(install(d1, &members, d2))
}

/// Same operation as [`anti_extend`]; preserves the Sidorenko property.
pub fn sid_extend(d1: &Digraph, i: &VertexSet, d2: &Digraph) -> Result<Digraph, ConstructionError> {
    let members = check_homogeneous("sid-extend", d1, i, d2)?;
    Ok(install(d1, &members, d2))
}

/// Identifies each pinned vertex of `p1` with a vertex of `p2`'s digraph.
///
/// `identification` lists `(pinned vertex of p1, vertex of p2)` and must
/// cover `p1`'s pinned set exactly. The result keeps `p2`'s labels and
/// appends the remaining vertices of `p1` in increasing order; it is
/// pinned on `p2`'s pinned set.
pub fn glue(
    p1: &PinnedPattern,
    p2: &PinnedPattern,
    identification: &[(usize, usize)],
) -> Result<PinnedPattern, ConstructionError> {
    let fam = "glue";
    let (d1, d2) = (p1.pattern(), p2.pattern());
    let mut target = vec![None; d1.n()];
    let mut hit = vec![false; d2.n()];
    for &(a, b) in identification {
        if !p1.pinned().contains(a) {
            return Err(precondition(fam, format!("{a} is not pinned in the first pattern")));
        }
        if b >= d2.n() {
            return Err(precondition(fam, format!("target {b} is out of range")));
        }
        if target[a].is_some() {
            return Err(precondition(fam, format!("{a} is identified twice")));
        }
        if std::mem::replace(&mut hit[b], true) {
            return Err(precondition(fam, format!("two vertices collide at {b}")));
        }
        target[a] = Some(b);
    }
    if let Some(a) = p1.pinned().iter().find(|&a| target[a].is_none()) {
        return Err(precondition(fam, format!("pinned vertex {a} is not identified")));
    }
    let mut next = d2.n();
    let map: Vec<usize> = target
        .iter()
        .map(|t| {
            t.unwrap_or_else(|| {
                next += 1;
                next - 1
            })
        })
        .collect();
    let mut d = d2.disjoint_union(&Digraph::empty(next - d2.n()));
    for (a, b) in d1.edges() {
        // Pinned vertices are independent, so every edge touches a fresh vertex.
        d.insert_edge(map[a], map[b]).expect("glued edges are fresh");
    }
    let pinned = VertexSet::from_members(d.n(), p2.pinned().iter());
    PinnedPattern::new(d, pinned).map_err(|e| precondition(fam, e.to_string()))
}

/// Disjoint union plus every edge from `d1` to `d2`.
pub fn join(d1: &Digraph, d2: &Digraph) -> Digraph {
    let mut d = d1.disjoint_union(d2);
    for a in 0..d1.n() {
        for b in 0..d2.n() {
            d.insert_edge(a, d1.n() + b).expect("cross edges are fresh");
        }
    }
    d
}

/// Replaces `v_star` in `d1` by a copy of `d2`, each edge at `v_star`
/// becoming a complete bundle to or from the copy. Labels: `d1` without
/// `v_star` in order, then `d2` shifted by `v(d1) - 1`.
pub fn substitute(d1: &Digraph, v_star: usize, d2: &Digraph) -> Result<Digraph, ConstructionError> {
    if v_star >= d1.n() {
        return Err(precondition(
            "substitute",
            format!("vertex {v_star} is not in a digraph on {} vertices", d1.n()),
        ));
    }
    let keep = |u: usize| if u < v_star { u } else { u - 1 };
    let off = d1.n() - 1;
    let mut d = Digraph::empty(off).disjoint_union(d2);
    for (a, b) in d1.edges() {
        let pairs: Vec<(usize, usize)> = if a == v_star {
            (0..d2.n()).map(|x| (off + x, keep(b))).collect()
        } else if b == v_star {
            (0..d2.n()).map(|x| (keep(a), off + x)).collect()
        } else {
            vec![(keep(a), keep(b))]
        };
        for (u, v) in pairs {
            d.insert_edge(u, v).expect("substituted edges are fresh");
        }
    }
    Ok(d)
}

/// Adds a new vertex `0` (existing labels shift up by one) with an edge to
/// every vertex (`Source`) or from every vertex (`Sink`).
pub fn add_dominating_vertex(d: &Digraph, direction: Dominance) -> Digraph {
    let edge = Digraph::from_edges(2, [(0, 1)]).expect("single edge");
    let v_star = match direction {
        Dominance::Source => 1,
        Dominance::Sink => 0,
    };
    substitute(&edge, v_star, d).expect("vertex exists")
}

/// Builds `TT_k` minus `(i, j)` by growth: `TT_{j-i-1}` installed on the
/// middle vertices of `D_{j-i-1}`, then `i-1` sources and `k-j` sinks.
pub fn transitive_minus_edge_pipeline(k: usize, i: usize, j: usize) -> Result<Digraph, ConstructionError> {
    if !(1 <= i && i < j && j <= k) {
        return Err(precondition(
            "transitive-minus-edge",
            format!("need 1 <= i < j <= k, got k = {k}, i = {i}, j = {j}"),
        ));
    }
    let m = j - i - 1;
    let base = d_family(m);
    let middle = VertexSet::from_members(base.n(), 2..m + 2);
    let mut d = sid_extend(&base, &middle, &transitive_tournament(m))?;
    for _ in 1..i {
        d = add_dominating_vertex(&d, Dominance::Source);
    }
    for _ in j..k {
        d = add_dominating_vertex(&d, Dominance::Sink);
    }
    Ok(d)
}

/// For a non-adjacent pair, returns `(D + (w,v), D + (v,w))` when the two
/// are isomorphic, and `None` otherwise.
pub fn symmetric_edge_add(
    d: &Digraph,
    v: usize,
    w: usize,
) -> Result<Option<(Digraph, Digraph)>, ConstructionError> {
    if v >= d.n() || w >= d.n() || v == w {
        return Err(precondition("symmetric-edge-add", format!("bad pair ({v},{w})")));
    }
    if d.adjacent(v, w) {
        return Err(precondition(
            "symmetric-edge-add",
            format!("{{{v},{w}}} already carries an edge"),
        ));
    }
    let d1 = d.with_edges([(w, v)])?;
    let d2 = d.with_edges([(v, w)])?;
    Ok(are_isomorphic(&d1, &d2)?.map(|_| (d1, d2)))
}
