//! Structural invariants: proptest over random inputs, exhaustive sweeps
//! where the space is small.

use num_bigint::BigUint;
use proptest::prelude::*;
use rayon::prelude::*;
use tsid_core::constructions::{
    all_orientations_union, subset_bipartite, transitive_tournament, unique_hom_digraph, unique_hom_params,
};
use tsid_core::counting::oracle_count;
use tsid_core::covers::two_path_condition;
use tsid_core::enumerate::tournament_count;
use tsid_core::iso::are_isomorphic;
use tsid_core::property::{quasirandom_epsilon, QuasiMode};
use tsid_core::{
    Counter, Digraph, FillStrategy, Mode, PinnedPattern, Tournament, UndirectedGraph, VertexSet,
};

/// Pair `k` of `0..n` gets no edge (0), `i -> j` (1) or `j -> i` (2).
fn oriented(n: usize, pairs: &[u8]) -> Digraph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            match pairs[k] {
                1 => edges.push((i, j)),
                2 => edges.push((j, i)),
                _ => {}
            }
            k += 1;
        }
    }
    Digraph::from_edges(n, edges).unwrap()
}

/// Every oriented graph on exactly `n` vertices.
fn all_oriented(n: usize) -> Vec<Digraph> {
    let p = n * n.saturating_sub(1) / 2;
    (0..3usize.pow(p as u32))
        .map(|mut code| {
            let pairs: Vec<u8> = (0..p)
                .map(|_| {
                    let x = (code % 3) as u8;
                    code /= 3;
                    x
                })
                .collect();
            oriented(n, &pairs)
        })
        .collect()
}

fn all_tournaments(n: usize) -> impl Iterator<Item = Tournament> {
    (0..tournament_count(n)).map(move |c| Tournament::from_code(n, c).unwrap())
}

prop_compose! {
    fn digraph(max_n: usize)(n in 0..=max_n)
        (pairs in prop::collection::vec(0u8..3, n * n.saturating_sub(1) / 2), n in Just(n)) -> Digraph {
        oriented(n, &pairs)
    }
}

prop_compose! {
    fn tournament(min_n: usize, max_n: usize)(n in min_n..=max_n)
        (bits in prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2), n in Just(n)) -> Tournament {
        Tournament::from_pair_bits(n, |k| bits[k])
    }
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reverse_is_an_involution(d in digraph(9)) {
        prop_assert_eq!(d.reverse().reverse(), d.clone());
        prop_assert_eq!(d.reverse().edge_count(), d.edge_count());
    }

    #[test]
    fn fill_keeps_every_edge(d in digraph(9), seed in any::<u64>()) {
        for strategy in [FillStrategy::Lexicographic, FillStrategy::SeededRandom(seed)] {
            let t = d.fill_to_tournament(strategy);
            prop_assert_eq!(t.as_digraph().edge_count(), d.n() * d.n().saturating_sub(1) / 2);
            for (u, v) in d.edges() {
                prop_assert!(t.has_edge(u, v));
            }
        }
    }

    #[test]
    fn blowup_multiplies_edges(d in digraph(6), m in 1usize..4) {
        let b = d.blowup(m).unwrap();
        prop_assert_eq!(b.n(), d.n() * m);
        prop_assert_eq!(b.edge_count(), d.edge_count() * m * m);
    }

    #[test]
    fn relabeling_is_an_isomorphism((d, perm) in digraph(7).prop_flat_map(|d| { let n = d.n(); (Just(d), permutation(n)) })) {
        let e = d.relabel(&perm);
        prop_assert!(are_isomorphic(&d, &e).unwrap().is_some());
        prop_assert!(are_isomorphic(&e, &d).unwrap().is_some());
    }

    #[test]
    fn non_injective_maps_are_few(d in digraph(4), t in tournament(1, 7)) {
        let c = Counter::default();
        let h = c.homomorphisms(&d, &t).unwrap();
        let l = c.count(&d, &t, Mode::Labeled).unwrap();
        prop_assert!(l <= h);
        let v = d.n();
        if v >= 1 {
            let slack = BigUint::from(v * v.saturating_sub(1) / 2) * BigUint::from(t.n()).pow(v as u32 - 1);
            prop_assert!(&h - &l <= slack);
        }
    }

    #[test]
    fn pinned_counts_partition_labeled(d in digraph(4), mask in any::<u8>(), t in tournament(1, 6)) {
        // The largest independent subset of `mask`, greedily.
        let mut pinned = VertexSet::empty(d.n());
        for v in (0..d.n()).filter(|v| mask >> v & 1 == 1) {
            if pinned.iter().all(|u| !d.adjacent(u, v)) {
                pinned.insert(v);
            }
        }
        let c = Counter::default();
        let p = PinnedPattern::new(d.clone(), pinned.clone()).unwrap();
        let r = pinned.len();
        let mut total = BigUint::from(0u32);
        let mut images = vec![0usize; r];
        // Every injective anchor, odometer style.
        'anchors: loop {
            let mut seen = VertexSet::empty(t.n());
            if images.iter().all(|&x| { let fresh = !seen.contains(x); seen.insert(x); fresh }) {
                total += c.labeled_pinned(&p.anchored_at(&images).unwrap(), &t).unwrap().value;
            }
            for slot in images.iter_mut() {
                *slot += 1;
                if *slot < t.n() {
                    continue 'anchors;
                }
                *slot = 0;
            }
            break;
        }
        prop_assert_eq!(total, c.count(&d, &t, Mode::Labeled).unwrap());
    }

    #[test]
    fn orientation_partition(t in tournament(3, 14)) {
        let c = Counter::default();
        let orientations = [[(0, 1), (1, 2)], [(1, 0), (1, 2)], [(0, 1), (2, 1)], [(1, 0), (2, 1)]];
        let total: BigUint = orientations
            .iter()
            .map(|o| c.count(&Digraph::from_edges(3, o.iter().copied()).unwrap(), &t, Mode::Labeled).unwrap())
            .sum();
        let n = t.n();
        prop_assert_eq!(total, BigUint::from(n * (n - 1) * (n - 2)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn epsilon_ignores_labels_and_reversal((t, perm) in tournament(0, 10).prop_flat_map(|t| { let n = t.n(); (Just(t), permutation(n)) })) {
        let eps = |x: &Tournament| quasirandom_epsilon(x, QuasiMode::ExactSmall).unwrap().epsilon;
        let base = eps(&t);
        prop_assert_eq!(eps(&t.relabel(&perm)), base.clone());
        prop_assert_eq!(eps(&t.reverse()), base);
    }
}

#[test]
fn transitive_patterns_fill_transitively() {
    for k in 0..=8 {
        let t = transitive_tournament(k).fill_to_tournament(FillStrategy::Lexicographic);
        assert!(t.as_digraph().is_transitive(), "k = {k}");
    }
}

#[test]
fn isomorphism_is_reflexive_and_symmetric_up_to_four_vertices() {
    for n in 0..=4 {
        let all = all_oriented(n);
        all.par_iter().enumerate().for_each(|(i, a)| {
            assert!(are_isomorphic(a, a).unwrap().is_some());
            for b in &all[i + 1..] {
                let ab = are_isomorphic(a, b).unwrap();
                assert_eq!(ab.is_some(), are_isomorphic(b, a).unwrap().is_some());
                if let Some(perm) = ab {
                    assert_eq!(a.relabel(&perm), *b, "returned map must carry a onto b");
                }
            }
        });
    }
}

#[test]
fn reversal_duality_and_oracle_agreement() {
    let c = Counter::default();
    let patterns: Vec<Digraph> = (0..=4).flat_map(all_oriented).collect();
    let hosts: Vec<Tournament> = (1..=5).flat_map(all_tournaments).collect();
    patterns.par_iter().for_each(|d| {
        let rd = d.reverse();
        for t in &hosts {
            assert_eq!(c.density(d, t).unwrap(), c.density(&rd, &t.reverse()).unwrap(), "{d:?} in {t:?}");
            for mode in [Mode::Homomorphisms, Mode::Labeled] {
                assert_eq!(
                    c.count(d, t, mode).unwrap(),
                    oracle_count(d, t, mode, u64::MAX).unwrap(),
                    "{d:?} in {t:?}, {mode:?}"
                );
            }
        }
    });
}

#[test]
fn subset_bipartite_neighbourhoods() {
    for k in 1..=5 {
        let (d, a) = subset_bipartite(k).unwrap();
        let b: Vec<usize> = (0..d.n()).filter(|&v| !a.contains(v)).collect();
        let mut subsets: Vec<Vec<usize>> = b.iter().map(|&v| d.out_neighbors(v).filter(|&x| a.contains(x)).collect()).collect();
        subsets.sort();
        subsets.dedup();
        assert_eq!(subsets.len(), 1 << k);
        for x in a.iter() {
            let outs = d.out_neighbors(x).filter(|v| !a.contains(*v)).count();
            let ins = d.in_neighbors(x).filter(|v| !a.contains(*v)).count();
            assert_eq!((outs, ins), (1 << (k - 1), 1 << (k - 1)));
        }
    }
}

#[test]
fn uniqueness_gadgets_meet_the_two_path_condition() {
    let admissible: Vec<usize> = (2..=20).filter(|&k| unique_hom_params(k).is_ok()).collect();
    assert!(admissible.contains(&16));
    for k in admissible {
        assert!(two_path_condition(&unique_hom_digraph(k).unwrap()).holds, "k = {k}");
    }
}

#[test]
fn orientation_union_of_the_two_edge_path() {
    let d = all_orientations_union(&UndirectedGraph::path(3)).unwrap();
    assert_eq!((d.n(), d.edge_count()), (12, 8));
}
