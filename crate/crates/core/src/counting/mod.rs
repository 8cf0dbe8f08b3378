//! Exact homomorphism, labeled-copy and pinned labeled-copy counts.
//!
//! `h_D(T)` counts all edge-preserving maps `V(D) -> V(T)`, `N_L(D, T)` the
//! injective ones. Both come out of the same backtracker; the labeled
//! variants also carry the random-tournament baseline `2^{-e} n^{v}` (or
//! `2^{-e} n^{v - |I|}` once `I` is pinned) and the exact ratio to it.

mod oracle;

pub use oracle::oracle_count;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::VertexSet;
use crate::digraph::{Digraph, Tournament};
use crate::enumerate::{self, EXHAUSTIVE_LIMIT};
use crate::kernel::{Halt, Host, Plan, Search};
use crate::scalar::{int_pow, inv_pow2};
use crate::{Count, Rational};

/// Default ceiling on node expansions per call.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Largest host the kernel accepts (32 words per row).
pub const MAX_HOST: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("work budget exceeded ({budget} node expansions)")]
    BudgetExceeded { budget: u64 },
    #[error("count does not fit in 128 bits")]
    Overflow,
    #[error("host has {n} vertices; the counter supports at most {limit}")]
    HostTooLarge { n: usize, limit: usize },
    #[error("invalid anchor: {0}")]
    InvalidAnchor(String),
    #[error("pinned vertices {0:?} are not independent in the pattern")]
    PinnedNotIndependent(Vec<usize>),
    #[error("host is empty, so the baseline is zero")]
    EmptyHost,
    #[error("exhaustive enumeration is limited to n <= {limit}, got {n}")]
    SizeGuard { n: usize, limit: usize },
}

impl CountError {
    pub(crate) fn from_halt(h: Halt, budget: u64) -> Self {
        match h {
            Halt::Budget => CountError::BudgetExceeded { budget },
            Halt::Overflow => CountError::Overflow,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Homomorphisms,
    Labeled,
}

/// An exact count next to its baseline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountResult {
    #[serde(with = "crate::report::count")]
    pub value: Count,
    #[serde(with = "crate::report::rational")]
    pub bound: Rational,
    #[serde(with = "crate::report::rational")]
    pub ratio: Rational,
}

impl CountResult {
    fn new(value: Count, bound: Rational) -> Self {
        let ratio = Rational::from_integer(value.clone().into()) / &bound;
        CountResult { value, bound, ratio }
    }

    /// `value <= bound`, exactly.
    pub fn within_bound(&self) -> bool {
        self.ratio <= Rational::from_integer(1.into())
    }
}

/// `2^{-e} n^{k}`.
pub fn baseline(n: usize, k: usize, e: usize) -> Rational {
    int_pow(n, k) * inv_pow2(e)
}

/// A pattern with an independent set `I` of pinned vertices and a
/// (possibly partial) anchor `I -> V(T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinnedPattern {
    pattern: Digraph,
    pinned: VertexSet,
    anchor: Vec<Option<usize>>,
}

impl PinnedPattern {
    pub fn new(pattern: Digraph, pinned: VertexSet) -> Result<Self, CountError> {
        assert_eq!(pinned.universe(), pattern.n(), "pinned set over the wrong universe");
        if !pattern.is_independent(&pinned) {
            return Err(CountError::PinnedNotIndependent(pinned.to_vec()));
        }
        let anchor = vec![None; pattern.n()];
        Ok(PinnedPattern { pattern, pinned, anchor })
    }

    /// No pinned vertices: pinned counts reduce to plain labeled counts.
    pub fn unpinned(pattern: Digraph) -> Self {
        let n = pattern.n();
        PinnedPattern::new(pattern, VertexSet::empty(n)).expect("empty set is independent")
    }

    /// Anchors the pinned vertices, in increasing order, at `images`.
    pub fn anchored_at(&self, images: &[usize]) -> Result<Self, CountError> {
        if images.len() != self.pinned.len() {
            return Err(CountError::InvalidAnchor(format!(
                "{} images for {} pinned vertices",
                images.len(),
                self.pinned.len()
            )));
        }
        let mut out = self.clone();
        out.anchor = vec![None; self.pattern.n()];
        for (p, &x) in self.pinned.iter().zip(images) {
            out.anchor[p] = Some(x);
        }
        out.check_injective()?;
        Ok(out)
    }

    fn check_injective(&self) -> Result<(), CountError> {
        let mut seen: Vec<usize> = self.anchor.iter().flatten().copied().collect();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(CountError::InvalidAnchor(format!(
                "host vertex {} used twice",
                w[0]
            )));
        }
        Ok(())
    }

    pub fn pattern(&self) -> &Digraph {
        &self.pattern
    }

    pub fn pinned(&self) -> &VertexSet {
        &self.pinned
    }

    /// `(pinned vertex, host image)` pairs that are set.
    pub fn anchor(&self) -> Vec<(usize, usize)> {
        self.anchor
            .iter()
            .enumerate()
            .filter_map(|(p, x)| x.map(|x| (p, x)))
            .collect()
    }

    /// Images of the pinned vertices in increasing order, when all are set.
    pub fn anchor_images(&self) -> Option<Vec<usize>> {
        self.pinned.iter().map(|p| self.anchor[p]).collect()
    }
}

/// Kernel plans for one pattern, reusable across hosts.
pub(crate) struct Prepared {
    labeled: Plan,
    components: Vec<Plan>,
}

impl Prepared {
    pub fn new(d: &Digraph) -> Self {
        Self::pinned(d, &[])
    }

    pub fn pinned(d: &Digraph, pinned: &[usize]) -> Self {
        let components = if pinned.is_empty() {
            d.underlying()
                .components()
                .iter()
                .map(|c| Plan::new(&d.induced(c), &[]))
                .collect()
        } else {
            vec![Plan::new(d, pinned)]
        };
        Prepared {
            labeled: Plan::new(d, pinned),
            components,
        }
    }

    /// Count on one host; homomorphism counts multiply over components.
    /// With `cap`, stops once the count provably reaches `cap`.
    pub fn count<const W: usize>(
        &self,
        host: &Host<W>,
        anchor: &[usize],
        mode: Mode,
        budget: u64,
        cap: Option<u128>,
    ) -> Result<u128, CountError> {
        let limit = cap.unwrap_or(u128::MAX);
        let halt = |h| CountError::from_halt(h, budget);
        match mode {
            Mode::Labeled => Search::new(&self.labeled, budget)
                .with_limit(limit)
                .count(host, anchor, true)
                .map(|c| c.min(limit))
                .map_err(halt),
            Mode::Homomorphisms => {
                let mut left = budget;
                let mut prod: u128 = 1;
                for plan in &self.components {
                    let mut s = Search::new(plan, left).with_limit(limit);
                    let c = s.count(host, anchor, false).map_err(halt)?;
                    left -= s.work();
                    if c == 0 {
                        return Ok(0);
                    }
                    prod = prod.checked_mul(c).ok_or(CountError::Overflow)?.min(limit);
                }
                Ok(prod)
            }
        }
    }

    /// Dispatches on host width.
    pub fn count_in(
        &self,
        t: &Digraph,
        anchor: &[usize],
        mode: Mode,
        budget: u64,
        cap: Option<u128>,
    ) -> Result<u128, CountError> {
        macro_rules! run {
            ($w:literal) => {
                self.count(&Host::<$w>::from_digraph(t), anchor, mode, budget, cap)
            };
        }
        match t.words() {
            0 | 1 => run!(1),
            2 => run!(2),
            3..=4 => run!(4),
            5..=8 => run!(8),
            9..=16 => run!(16),
            17..=32 => run!(32),
            _ => Err(CountError::HostTooLarge {
                n: t.n(),
                limit: MAX_HOST,
            }),
        }
    }
}

/// Budgeted entry point for all exact counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counter {
    budget: u64,
}

impl Default for Counter {
    fn default() -> Self {
        Counter {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl Counter {
    pub fn with_budget(budget: u64) -> Self {
        Counter { budget }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// `h_D(T)`.
    pub fn homomorphisms(&self, d: &Digraph, t: &Tournament) -> Result<Count, CountError> {
        self.raw(d, t, Mode::Homomorphisms).map(BigUint::from)
    }

    /// `min(h_D(T), cap)`, stopping early once `cap` is reached.
    pub fn homomorphisms_capped(
        &self,
        d: &Digraph,
        t: &Tournament,
        cap: u128,
    ) -> Result<u128, CountError> {
        Prepared::new(d).count_in(t, &[], Mode::Homomorphisms, self.budget, Some(cap))
    }

    /// `N_L(D, T)` against `2^{-e} n^{v}`.
    pub fn labeled(&self, d: &Digraph, t: &Tournament) -> Result<CountResult, CountError> {
        let value = self.raw(d, t, Mode::Labeled)?;
        let bound = nonzero(baseline(t.n(), d.n(), d.edge_count()))?;
        Ok(CountResult::new(value.into(), bound))
    }

    /// Labeled copies extending the anchor, against `2^{-e} n^{v - |I|}`.
    pub fn labeled_pinned(
        &self,
        p: &PinnedPattern,
        t: &Tournament,
    ) -> Result<CountResult, CountError> {
        let images = p.anchor_images().ok_or_else(|| {
            CountError::InvalidAnchor("anchor is not defined on every pinned vertex".into())
        })?;
        if let Some(&x) = images.iter().find(|&&x| x >= t.n()) {
            return Err(CountError::InvalidAnchor(format!(
                "host vertex {x} out of range for n = {}",
                t.n()
            )));
        }
        p.check_injective()?;
        let d = p.pattern();
        let pinned = p.pinned().to_vec();
        let value = Prepared::pinned(d, &pinned).count_in(t, &images, Mode::Labeled, self.budget, None)?;
        let bound = nonzero(baseline(t.n(), d.n() - pinned.len(), d.edge_count()))?;
        Ok(CountResult::new(value.into(), bound))
    }

    /// `t_D(T) = h_D(T) / n^{v}`.
    pub fn density(&self, d: &Digraph, t: &Tournament) -> Result<Rational, CountError> {
        let h = self.raw(d, t, Mode::Homomorphisms)?;
        let total = nonzero(int_pow(t.n(), d.n()))?;
        Ok(Rational::from_integer(h.into()) / total)
    }

    pub fn count(&self, d: &Digraph, t: &Tournament, mode: Mode) -> Result<Count, CountError> {
        self.raw(d, t, mode).map(BigUint::from)
    }

    fn raw(&self, d: &Digraph, t: &Tournament, mode: Mode) -> Result<u128, CountError> {
        Prepared::new(d).count_in(t, &[], mode, self.budget, None)
    }

    /// Whether `N_L(D, T)` depends only on `n` for every `n <= n_max`.
    pub fn impartial_upto(&self, d: &Digraph, n_max: usize) -> Result<Impartiality, CountError> {
        if n_max > EXHAUSTIVE_LIMIT {
            return Err(CountError::SizeGuard {
                n: n_max,
                limit: EXHAUSTIVE_LIMIT,
            });
        }
        let prep = Prepared::new(d);
        let budget = self.budget;
        let mut constants = Vec::new();
        for n in 0..=n_max {
            let count_at = |code: u64| -> Result<u128, CountError> {
                let mut host = Host::<1>::empty_small();
                host.load_code(n, code);
                prep.count(&host, &[], Mode::Labeled, budget, None)
            };
            let first = count_at(0)?;
            let differing = (1..enumerate::tournament_count(n))
                .into_par_iter()
                .find_map_first(|code| match count_at(code) {
                    Ok(c) if c == first => None,
                    Ok(c) => Some(Ok((code, c))),
                    Err(e) => Some(Err(e)),
                })
                .transpose()?;
            if let Some((code, c)) = differing {
                let host = |code| Tournament::from_code(n, code).expect("n within code range");
                return Ok(Impartiality {
                    impartial: false,
                    constants,
                    witness: Some(ImpartialWitness {
                        n,
                        first: host(0),
                        first_count: first.into(),
                        second: host(code),
                        second_count: c.into(),
                    }),
                });
            }
            constants.push((n, BigUint::from(first)));
        }
        Ok(Impartiality {
            impartial: true,
            constants,
            witness: None,
        })
    }
}

fn nonzero(r: Rational) -> Result<Rational, CountError> {
    if r == Rational::from_integer(0.into()) {
        Err(CountError::EmptyHost)
    } else {
        Ok(r)
    }
}

/// Outcome of [`is_impartial_upto`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Impartiality {
    pub impartial: bool,
    /// `(n, N_L)` for every `n` at which the count was constant.
    pub constants: Vec<(usize, Count)>,
    pub witness: Option<ImpartialWitness>,
}

/// Two same-size hosts with different labeled counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImpartialWitness {
    pub n: usize,
    pub first: Tournament,
    pub first_count: Count,
    pub second: Tournament,
    pub second_count: Count,
}

pub fn count_homomorphisms(d: &Digraph, t: &Tournament) -> Result<Count, CountError> {
    Counter::default().homomorphisms(d, t)
}

pub fn count_labeled(d: &Digraph, t: &Tournament) -> Result<CountResult, CountError> {
    Counter::default().labeled(d, t)
}

pub fn count_labeled_pinned(p: &PinnedPattern, t: &Tournament) -> Result<CountResult, CountError> {
    Counter::default().labeled_pinned(p, t)
}

pub fn density(d: &Digraph, t: &Tournament) -> Result<Rational, CountError> {
    Counter::default().density(d, t)
}

pub fn is_impartial_upto(d: &Digraph, n_max: usize) -> Result<Impartiality, CountError> {
    Counter::default().impartial_upto(d, n_max)
}
