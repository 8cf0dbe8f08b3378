//! Walks from one tournament to another one pair flip at a time, tracking
//! the homomorphism count.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::VertexSet;
use crate::counting::{CountError, Counter};
use crate::digraph::{Digraph, Tournament};
use crate::{Count, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpolationError {
    #[error("hosts have {0} and {1} vertices")]
    SizeMismatch(usize, usize),
    #[error("target {target} lies outside [{low}, {high}], the counts at the two ends of the walk")]
    NotBracketed {
        target: Rational,
        low: Count,
        high: Count,
    },
    #[error(transparent)]
    Count(#[from] CountError),
}

/// Outcome of a walk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interpolation {
    /// First tournament on the walk whose count reaches the target.
    #[serde(with = "crate::report::trn")]
    pub tournament: Tournament,
    /// Number of flips applied to reach it.
    pub step: usize,
    #[serde(with = "crate::report::count")]
    pub h: Count,
    /// Pairs flipped, in order, over the whole walk.
    pub flips: Vec<(usize, usize)>,
    /// `h` after each prefix of the walk; `h_values[0]` is the start.
    #[serde(with = "crate::report::counts")]
    pub h_values: Vec<Count>,
    /// `|Δh|` per flip.
    #[serde(with = "crate::report::counts")]
    pub trace: Vec<Count>,
    /// `v^2 n^{v-2}`.
    #[serde(with = "crate::report::count")]
    pub step_bound: Count,
}

/// `v^2 n^{v-2}` (zero below two pattern vertices, where `h` cannot move).
pub fn step_bound(v: usize, n: usize) -> Count {
    if v < 2 {
        return BigUint::from(0u32);
    }
    BigUint::from(v * v) * BigUint::from(n).pow((v - 2) as u32)
}

/// Flips, in lexicographic pair order, every pair avoiding `exclude` on
/// which `lo` and `hi` disagree. The target must lie between `h_D` at the
/// start and at the end of this walk (the end is `hi` only when nothing is
/// excluded). Returns the first tournament on the walk whose count reaches
/// the target from the starting side, with the whole trace.
pub fn interpolate_to_density(
    d: &Digraph,
    lo: &Tournament,
    hi: &Tournament,
    exclude: &VertexSet,
    target: &Rational,
    counter: &Counter,
) -> Result<Interpolation, InterpolationError> {
    let n = lo.n();
    if hi.n() != n {
        return Err(InterpolationError::SizeMismatch(n, hi.n()));
    }
    let flips: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !exclude.contains(i) && !exclude.contains(j))
        .filter(|&(i, j)| lo.has_edge(i, j) != hi.has_edge(i, j))
        .collect();
    let mut walk = vec![lo.clone()];
    for &(i, j) in &flips {
        let next = walk.last().expect("nonempty").flipped(i, j);
        walk.push(next);
    }
    let h: Vec<Count> = walk
        .iter()
        .map(|t| counter.homomorphisms(d, t))
        .collect::<Result<_, _>>()?;
    let as_rat = |c: &Count| Rational::from_integer(c.clone().into());
    let (first, last) = (as_rat(&h[0]), as_rat(h.last().expect("nonempty")));
    let (low, high) = if first <= last { (&h[0], &h[h.len() - 1]) } else { (&h[h.len() - 1], &h[0]) };
    if *target < as_rat(low) || *target > as_rat(high) {
        return Err(InterpolationError::NotBracketed {
            target: target.clone(),
            low: low.clone(),
            high: high.clone(),
        });
    }
    let rising = first <= *target;
    let step = h
        .iter()
        .position(|x| if rising { as_rat(x) >= *target } else { as_rat(x) <= *target })
        .expect("the last count is past the target");
    let trace = h
        .windows(2)
        .map(|w| if w[1] >= w[0] { &w[1] - &w[0] } else { &w[0] - &w[1] })
        .collect();
    Ok(Interpolation {
        tournament: walk.swap_remove(step),
        step,
        h: h[step].clone(),
        flips,
        h_values: h,
        trace,
        step_bound: step_bound(d.n(), n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{directed_path, transitive_tournament};

    fn rat(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn edge_count_never_moves() {
        let t = Tournament::transitive(5);
        let r = interpolate_to_density(&directed_path(1), &t, &t.reverse(), &VertexSet::empty(5), &rat(10, 1), &Counter::default())
            .unwrap();
        assert_eq!(r.step, 0);
        assert!(r.trace.iter().all(|x| *x == BigUint::from(0u32)));
        assert_eq!(r.flips.len(), 10);
    }

    #[test]
    fn transitive_triangle_walk() {
        let c = Counter::default();
        let t = Tournament::transitive(5);
        let d = transitive_tournament(3);
        let (h0, h1) = (c.homomorphisms(&d, &t).unwrap(), c.homomorphisms(&d, &t.reverse()).unwrap());
        // TT_3 is symmetric under reversal, so both ends carry C(5,3).
        assert_eq!((h0.clone(), h1), (10u32.into(), 10u32.into()));
        let r = interpolate_to_density(&d, &t, &t.reverse(), &VertexSet::empty(5), &rat(10, 1), &c).unwrap();
        assert_eq!(r.step_bound, BigUint::from(45u32));
        assert!(r.trace.iter().all(|x| *x <= r.step_bound));
        // Lexicographic flips slide vertex 0 down, then vertex 1, ...: every
        // intermediate is transitive, so h never moves.
        assert!(r.trace.iter().all(|x| *x == BigUint::from(0u32)));
    }

    #[test]
    fn first_crossing_and_bracket() {
        let c = Counter::default();
        let d = transitive_tournament(3);
        let t = Tournament::transitive(6);
        let hi = Tournament::seeded_random(6, 3);
        let (h0, h1) = (c.homomorphisms(&d, &t).unwrap(), c.homomorphisms(&d, &hi).unwrap());
        assert!(h1 < h0);
        let as_rat = |x: &Count| Rational::from_integer(x.clone().into());
        let target = (as_rat(&h0) + as_rat(&h1)) / rat(2, 1);
        let r = interpolate_to_density(&d, &t, &hi, &VertexSet::empty(6), &target, &c).unwrap();
        assert!(r.h_values[..r.step].iter().all(|x| as_rat(x) > target));
        assert!(as_rat(&r.h) <= target);
        assert_eq!(c.homomorphisms(&d, &r.tournament).unwrap(), r.h);
        assert!(r.trace.iter().all(|x| *x <= r.step_bound));
        assert_eq!(r.h_values.last(), Some(&h1));
        let far = interpolate_to_density(&d, &t, &hi, &VertexSet::empty(6), &(as_rat(&h0) + rat(1, 2)), &c);
        assert!(matches!(far, Err(InterpolationError::NotBracketed { .. })));
        let short = interpolate_to_density(&d, &t, &Tournament::transitive(5), &VertexSet::empty(6), &target, &c);
        assert_eq!(short.unwrap_err(), InterpolationError::SizeMismatch(6, 5));
    }

    #[test]
    fn excluded_pairs_stay_put() {
        let t = Tournament::transitive(5);
        let ex = VertexSet::from_members(5, [0, 1]);
        let r = interpolate_to_density(&directed_path(1), &t, &t.reverse(), &ex, &rat(10, 1), &Counter::default()).unwrap();
        assert!(r.flips.iter().all(|&(i, j)| !ex.contains(i) && !ex.contains(j)));
        assert_eq!(r.flips.len(), 3);
    }
}
