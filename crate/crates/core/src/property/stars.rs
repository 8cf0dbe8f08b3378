//! Oriented stars: the classifier, the two-block host model and its
//! expected star density.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, Tournament};
use crate::scalar::{pow, Scalar};
use crate::{Count, Rational};

use super::PropertyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StarKind {
    Sidorenko,
    AntiSidorenko,
    Neither,
}

/// Which side a star falls on. A single edge is on both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarClass {
    /// One side is empty, so the star maps onto an edge.
    pub sidorenko: bool,
    /// Out- and in-degree of the center differ by at most one.
    pub anti_sidorenko: bool,
}

impl StarClass {
    pub fn kinds(&self) -> Vec<StarKind> {
        let mut out = Vec::new();
        if self.sidorenko {
            out.push(StarKind::Sidorenko);
        }
        if self.anti_sidorenko {
            out.push(StarKind::AntiSidorenko);
        }
        if out.is_empty() {
            out.push(StarKind::Neither);
        }
        out
    }
}

pub fn classify_star(d_out: usize, d_in: usize) -> Result<StarClass, PropertyError> {
    if d_out + d_in == 0 {
        return Err(PropertyError::Precondition("a star needs at least one leaf".into()));
    }
    Ok(StarClass {
        sidorenko: d_out.min(d_in) == 0,
        anti_sidorenko: d_out.abs_diff(d_in) <= 1,
    })
}

/// Two-block random tournament parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoBlockParams {
    pub n: usize,
    #[serde(with = "crate::report::rational")]
    pub c: Rational,
    pub seed: u64,
}

impl TwoBlockParams {
    pub fn new(n: usize, c: Rational, seed: u64) -> Result<Self, PropertyError> {
        let zero = Rational::from_integer(0.into());
        let one = Rational::from_integer(1.into());
        if c < zero || c > one {
            return Err(PropertyError::Precondition(format!("block fraction {c} outside [0, 1]")));
        }
        Ok(TwoBlockParams { n, c, seed })
    }

    /// `floor(c n)`: vertices below this index form the first block.
    pub fn split(&self) -> usize {
        let cn = &self.c * Rational::from_integer(self.n.into());
        usize::try_from(cn.floor().to_integer()).expect("split is at most n")
    }
}

/// Every pair from the first block to the second points forward; every
/// other pair gets a fair coin, drawn in lexicographic pair order from a
/// ChaCha8 stream seeded with `seed`.
pub fn two_block_tournament(p: &TwoBlockParams) -> Tournament {
    let (n, split) = (p.n, p.split());
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            bits.push(if i < split && j >= split { true } else { rng.gen::<bool>() });
        }
    }
    Tournament::from_pair_bits(n, |k| bits[k])
}

/// `f(c) = c^{1+d-} (2-c)^{d+} + (1-c)^{1+d+} (1+c)^{d-}` with
/// `d+ = d_out`, `d- = d_in`.
pub fn star_f<S: Scalar>(c: &S, d_out: usize, d_in: usize) -> S {
    let one = S::one();
    let two = S::from_u64(2);
    let left = pow(c, 1 + d_in) * pow(&(two - c.clone()), d_out);
    let right = pow(&(one.clone() - c.clone()), 1 + d_out) * pow(&(one + c.clone()), d_in);
    left + right
}

/// Limit of the expected star density in two-block hosts: `2^{-s} f(c)`.
pub fn star_expected_density<S: Scalar>(c: &S, d_out: usize, d_in: usize) -> S {
    star_f(c, d_out, d_in) / pow(&S::from_u64(2), d_out + d_in)
}

/// `f'(0) = d- - d+ - 1`. Positive means a thin first block pushes the
/// star above the random baseline.
pub fn star_f_prime_at_zero(d_out: usize, d_in: usize) -> i64 {
    d_in as i64 - d_out as i64 - 1
}

/// `h(star(d_out, d_in), T) = Σ_v d+(v)^{d_out} d-(v)^{d_in}`, exactly.
pub fn star_homomorphisms(t: &Tournament, d_out: usize, d_in: usize) -> Count {
    (0..t.n())
        .map(|v| BigUint::from(t.out_degree(v)).pow(d_out as u32) * BigUint::from(t.in_degree(v)).pow(d_in as u32))
        .sum()
}

/// A Monte-Carlo density estimate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonteCarlo {
    pub samples: usize,
    pub hits: usize,
    pub seed: u64,
    pub mean: f64,
    pub std_err: f64,
}

impl MonteCarlo {
    /// Standard errors between the estimate and `x`.
    pub fn z(&self, x: f64) -> f64 {
        (self.mean - x) / self.std_err
    }
}

/// Fraction of `samples` uniform maps `V(D) -> V(T)` that preserve every
/// edge.
pub fn sampled_hom_density(d: &Digraph, t: &Tournament, samples: usize, seed: u64) -> MonteCarlo {
    assert!(samples > 0 && t.n() > 0, "need samples and a nonempty host");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = d.edges();
    let mut map = vec![0usize; d.n()];
    let mut hits = 0usize;
    for _ in 0..samples {
        for x in map.iter_mut() {
            *x = rng.gen_range(0..t.n());
        }
        if edges.iter().all(|&(u, v)| t.has_edge(map[u], map[v])) {
            hits += 1;
        }
    }
    let mean = hits as f64 / samples as f64;
    let std_err = (mean * (1.0 - mean) / samples as f64).sqrt();
    MonteCarlo {
        samples,
        hits,
        seed,
        mean,
        std_err,
    }
}

#[cfg(test)]
mod tests {
    use num_traits::Signed;

    use super::*;
    use crate::constructions::star;
    use crate::counting::Counter;

    fn rat(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn classifier() {
        for k in 1..5 {
            assert_eq!(classify_star(k, 0).unwrap().kinds().first(), Some(&StarKind::Sidorenko));
            assert_eq!(classify_star(0, k).unwrap().kinds().first(), Some(&StarKind::Sidorenko));
            assert_eq!(classify_star(k, k).unwrap().kinds(), vec![StarKind::AntiSidorenko]);
        }
        assert_eq!(classify_star(3, 1).unwrap().kinds(), vec![StarKind::Neither]);
        assert_eq!(
            classify_star(1, 0).unwrap().kinds(),
            vec![StarKind::Sidorenko, StarKind::AntiSidorenko]
        );
        assert!(classify_star(0, 0).is_err());
    }

    #[test]
    fn f_endpoints_and_slope() {
        let (zero, one) = (rat(0, 1), rat(1, 1));
        for a in 1..4 {
            for b in 1..4 {
                assert_eq!(star_f(&zero, a, b), one);
                assert_eq!(star_f(&one, a, b), one);
                // (f(h) - f(0)) / h tends to f'(0) with O(h) error.
                for k in 3..7 {
                    let h = rat(1, 10i64.pow(k));
                    let slope = (star_f(&h, a, b) - &one) / &h;
                    let err = slope - Rational::from_integer(star_f_prime_at_zero(a, b).into());
                    assert!(err.abs() < &h * rat(100, 1));
                }
            }
        }
        assert_eq!(star_f_prime_at_zero(1, 3), 1);
        let x = star_f(&0.25f64, 1, 3);
        assert!((x - crate::scalar::approx(&star_f(&rat(1, 4), 1, 3))).abs() < 1e-12);
    }

    #[test]
    fn two_block_shape() {
        let p = TwoBlockParams::new(10, rat(3, 10), 5).unwrap();
        assert_eq!(p.split(), 3);
        let t = two_block_tournament(&p);
        for i in 0..3 {
            for j in 3..10 {
                assert!(t.has_edge(i, j));
            }
        }
        assert_eq!(t, two_block_tournament(&p));
        assert_eq!(TwoBlockParams::new(7, rat(1, 1), 0).unwrap().split(), 7);
        assert!(TwoBlockParams::new(7, rat(3, 2), 0).is_err());
    }

    #[test]
    fn closed_form_star_count() {
        let c = Counter::default();
        let t = Tournament::seeded_random(9, 4);
        for (a, b) in [(1, 0), (2, 1), (1, 3), (0, 2)] {
            assert_eq!(star_homomorphisms(&t, a, b), c.homomorphisms(&star(a, b).unwrap(), &t).unwrap());
        }
    }

    #[test]
    fn sampler_is_seeded() {
        let t = Tournament::transitive(6);
        let d = star(1, 1).unwrap();
        let a = sampled_hom_density(&d, &t, 2000, 3);
        assert_eq!(a, sampled_hom_density(&d, &t, 2000, 3));
        // P_2 in TT_6: C(6,3) = 20 homomorphisms out of 216 maps.
        assert!(a.z(20.0 / 216.0).abs() < 4.0);
    }
}
