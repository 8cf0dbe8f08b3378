//! Quasirandom direction: `ε(T) = max_{A,B} (e(A,B) - e(B,A)) / n^2`.
//!
//! For a fixed `A` the difference is `Σ_{v ∈ B} s_v` with
//! `s_v = |N⁻(v) ∩ A| - |N⁺(v) ∩ A|`, so the best `B` is `{v : s_v > 0}`
//! and only `A` needs searching. Symmetrically, for fixed `B` the best `A`
//! is `{u : |N⁺(u) ∩ B| > |N⁻(u) ∩ B|}`.

use std::cmp::Reverse;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits;
use crate::digraph::Tournament;
use crate::scalar::approx;
use crate::Rational;

use super::PropertyError;

/// Largest `n` for the exact `2^n` scan.
pub const EXACT_EPSILON_LIMIT: usize = 20;

/// Alternating-improvement rounds per sampled start.
const ROUNDS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuasiMode {
    /// Scan every `A`; requires `n <= 20`.
    ExactSmall,
    /// As `ExactSmall`, restricted to disjoint `A` and `B`.
    ExactDisjoint,
    /// Random starting sets improved by alternating best responses; a lower
    /// bound on `ε`.
    Sampled { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuasiEstimate {
    pub n: usize,
    #[serde(with = "crate::report::rational")]
    pub epsilon: Rational,
    pub epsilon_approx: f64,
    /// `true` for the exact scans; sampled values are high-water marks.
    pub exact: bool,
    pub mode: QuasiMode,
    /// Sets attaining the value.
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

struct Rows {
    n: usize,
    out: Vec<Vec<u64>>,
    inn: Vec<Vec<u64>>,
}

impl Rows {
    fn new(t: &Tournament) -> Self {
        let n = t.n();
        Rows {
            n,
            out: (0..n).map(|v| t.out_row(v).to_vec()).collect(),
            inn: (0..n).map(|v| t.in_row(v).to_vec()).collect(),
        }
    }

    fn meet(row: &[u64], set: &[u64]) -> i64 {
        row.iter().zip(set).map(|(a, b)| (a & b).count_ones() as i64).sum()
    }

    /// Best `B` for `a`, with its value.
    fn best_b(&self, a: &[u64]) -> (i64, Vec<u64>) {
        let mut b = vec![0u64; a.len()];
        let mut total = 0;
        for v in 0..self.n {
            let s = Self::meet(&self.inn[v], a) - Self::meet(&self.out[v], a);
            if s > 0 {
                total += s;
                bits::set(&mut b, v);
            }
        }
        (total, b)
    }

    /// Best `A` for `b`, with its value.
    fn best_a(&self, b: &[u64]) -> (i64, Vec<u64>) {
        let mut a = vec![0u64; b.len()];
        let mut total = 0;
        for u in 0..self.n {
            let s = Self::meet(&self.out[u], b) - Self::meet(&self.inn[u], b);
            if s > 0 {
                total += s;
                bits::set(&mut a, u);
            }
        }
        (total, a)
    }
}

fn estimate(n: usize, value: i64, a: &[u64], b: &[u64], mode: QuasiMode) -> QuasiEstimate {
    let epsilon = if n == 0 {
        Rational::from_integer(0.into())
    } else {
        Rational::new(value.into(), ((n * n) as i64).into())
    };
    QuasiEstimate {
        n,
        epsilon_approx: approx(&epsilon),
        epsilon,
        exact: !matches!(mode, QuasiMode::Sampled { .. }),
        mode,
        a: bits::ones(a).collect(),
        b: bits::ones(b).collect(),
    }
}

pub fn quasirandom_epsilon(t: &Tournament, mode: QuasiMode) -> Result<QuasiEstimate, PropertyError> {
    let rows = Rows::new(t);
    let n = t.n();
    let w = bits::words_for(n).max(1);
    match mode {
        QuasiMode::ExactSmall | QuasiMode::ExactDisjoint => {
            if n > EXACT_EPSILON_LIMIT {
                return Err(PropertyError::Precondition(format!(
                    "exact epsilon scans 2^n sets and is limited to n <= {EXACT_EPSILON_LIMIT}, got {n}"
                )));
            }
            let out: Vec<u32> = rows.out.iter().map(|r| r[0] as u32).collect();
            let inn: Vec<u32> = rows.inn.iter().map(|r| r[0] as u32).collect();
            let disjoint = mode == QuasiMode::ExactDisjoint;
            let (value, a) = (0u32..1 << n)
                .into_par_iter()
                .map(|a| {
                    let v: i64 = (0..n)
                        .filter(|&v| !(disjoint && a >> v & 1 == 1))
                        .map(|v| ((inn[v] & a).count_ones() as i64 - (out[v] & a).count_ones() as i64).max(0))
                        .sum();
                    (v, a)
                })
                .max_by_key(|&(v, a)| (v, Reverse(a)))
                .expect("at least the empty set");
            let a = vec![a as u64];
            let (_, mut b) = rows.best_b(&a);
            if disjoint {
                b[0] &= !a[0];
            }
            Ok(estimate(n, value, &a, &b, mode))
        }
        QuasiMode::Sampled { count, seed } => {
            let best = (0..count.max(1))
                .into_par_iter()
                .map(|i| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(i as u64);
                    let mut a = vec![0u64; w];
                    for v in 0..n {
                        if rng.gen::<bool>() {
                            bits::set(&mut a, v);
                        }
                    }
                    let (mut value, mut b) = rows.best_b(&a);
                    // best_b after best_a never lowers the value.
                    for _ in 0..ROUNDS {
                        let (_, na) = rows.best_a(&b);
                        let (nv, nb) = rows.best_b(&na);
                        if nv <= value {
                            break;
                        }
                        (value, a, b) = (nv, na, nb);
                    }
                    (value, Reverse(i), a, b)
                })
                .max_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)))
                .expect("at least one sample");
            Ok(estimate(n, best.0, &best.2, &best.3, mode))
        }
    }
}
