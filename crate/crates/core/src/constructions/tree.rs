//! Anti-Sidorenko orientations of trees with at most one even-degree vertex.

use crate::digraph::Digraph;
use crate::undirected::UndirectedGraph;

use super::{precondition, ConstructionError};

/// Orients a tree with at most one vertex of even degree.
///
/// With one even vertex `rho`, root there and repeatedly strip the deepest
/// layer two leaves at a time: take the smallest vertex `v` one level up
/// that still has children, its two smallest children `x < y`, and orient
/// `x -> v -> y`. When every degree is odd, orient the lexicographically
/// smallest edge `a -> b` and treat the two sides of it as trees rooted at
/// `a` and `b` (each now has exactly one even vertex).
pub fn tree_anti_orientation(r: &UndirectedGraph) -> Result<Digraph, ConstructionError> {
    let fam = "tree-orientation";
    if !r.is_tree() {
        return Err(precondition(fam, "input is not a tree"));
    }
    let n = r.n();
    let even: Vec<usize> = (0..n).filter(|&u| r.degree(u) % 2 == 0).collect();
    let mut d = Digraph::empty(n);
    match even.as_slice() {
        [rho] => strip(r, &[*rho], None, &mut d),
        [] => {
            let (a, b) = r.edges()[0];
            d.insert_edge(a, b)?;
            strip(r, &[a, b], Some((a, b)), &mut d);
        }
        _ => {
            return Err(precondition(
                fam,
                format!(
                    "{} vertices of even degree ({:?}); only trees with at most one are supported",
                    even.len(),
                    even
                ),
            ))
        }
    }
    Ok(d)
}

/// Pairs off the leaves of each rooted piece, with `cut` removed from `r`.
fn strip(r: &UndirectedGraph, roots: &[usize], cut: Option<(usize, usize)>, d: &mut Digraph) {
    let n = r.n();
    let skip = |u: usize, v: usize| cut.is_some_and(|(a, b)| (u, v) == (a, b) || (u, v) == (b, a));
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue: Vec<usize> = roots.to_vec();
    for &rt in roots {
        depth[rt] = 0;
    }
    let mut i = 0;
    while i < queue.len() {
        let u = queue[i];
        i += 1;
        for v in r.neighbors(u) {
            if depth[v] == usize::MAX && !skip(u, v) {
                depth[v] = depth[u] + 1;
                parent[v] = u;
                queue.push(v);
            }
        }
    }
    let mut alive = vec![true; n];
    loop {
        let Some(level) = (0..n).filter(|&u| alive[u]).map(|u| depth[u]).max() else {
            break;
        };
        if level == 0 {
            break;
        }
        let v = (0..n)
            .find(|&u| alive[u] && depth[u] == level - 1 && (0..n).any(|c| alive[c] && parent[c] == u))
            .expect("a deepest vertex has a parent one level up");
        let mut kids = (0..n).filter(|&c| alive[c] && parent[c] == v);
        let x = kids.next().expect("first child");
        let y = kids
            .next()
            .expect("every non-root vertex has an even number of children");
        d.insert_edge(x, v).expect("tree edge");
        d.insert_edge(v, y).expect("tree edge");
        alive[x] = false;
        alive[y] = false;
    }
}
