//! Density deviation next to `ε`, host by host.

use serde::{Deserialize, Serialize};

use crate::counting::Counter;
use crate::digraph::{Digraph, Tournament};
use crate::scalar::{approx, inv_pow2};
use crate::Rational;

use super::{quasirandom_epsilon, PropertyError, QuasiEstimate, QuasiMode, EXACT_EPSILON_LIMIT};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForcingRow {
    pub n: usize,
    #[serde(with = "crate::report::rational")]
    pub density: Rational,
    /// `|t_D(T) - 2^{-e}|`.
    #[serde(with = "crate::report::rational")]
    pub deviation: Rational,
    pub deviation_approx: f64,
    pub epsilon: QuasiEstimate,
}

/// One row per host: exact density deviation from the random baseline, and
/// `ε` (exact up to 20 vertices, otherwise `samples` seeded starts).
pub fn forcing_probe(
    d: &Digraph,
    hosts: &[Tournament],
    samples: usize,
    seed: u64,
    counter: &Counter,
) -> Result<Vec<ForcingRow>, PropertyError> {
    let base = inv_pow2(d.edge_count());
    hosts
        .iter()
        .map(|t| {
            let density = counter.density(d, t)?;
            let deviation = if density >= base { &density - &base } else { &base - &density };
            let mode = if t.n() <= EXACT_EPSILON_LIMIT {
                QuasiMode::ExactSmall
            } else {
                QuasiMode::Sampled { count: samples, seed }
            };
            Ok(ForcingRow {
                n: t.n(),
                deviation_approx: approx(&deviation),
                density,
                deviation,
                epsilon: quasirandom_epsilon(t, mode)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::subset_bipartite;
    use crate::property::{two_block_tournament, TwoBlockParams};

    #[test]
    fn transitive_versus_random() {
        let (d, _) = subset_bipartite(2).unwrap();
        let c = Counter::default();
        let half = TwoBlockParams::new(60, Rational::new(1.into(), 2.into()), 2).unwrap();
        let hosts = [
            Tournament::transitive(20),
            two_block_tournament(&half),
            Tournament::seeded_random(60, 1),
        ];
        let rows = forcing_probe(&d, &hosts, 32, 0, &c).unwrap();
        assert_eq!(rows[0].epsilon.epsilon, Rational::new(133.into(), 400.into()));
        assert!(rows[0].epsilon.exact && !rows[2].epsilon.exact);
        // Deviation and epsilon both fall from the transitive host to the random one.
        assert!(rows[0].deviation > rows[2].deviation);
        assert!(rows[0].epsilon.epsilon > rows[1].epsilon.epsilon);
        assert!(rows[1].epsilon.epsilon > rows[2].epsilon.epsilon);
    }
}
