//! Verdict engines and the report record they emit.
//!
//! Exhaustive scans certify a bound for every tournament up to some `n`;
//! family scans and falsifiers look for violations on structured hosts.
//! Reports carry exact ratios, and a witness whenever a bound fails, so a
//! verdict can be re-checked after a JSON round trip.

mod anti;
mod forcing;
mod interpolate;
mod quasi;
mod stars;

pub use anti::{
    check_anti_exhaustive, check_anti_on_family, check_impartial, check_strong_anti,
    falsify_by_blowup, falsify_by_blowup_with, sidorenko_ratio_scan, BlowupFalsifier, HostFamily,
    STRONG_ANTI_LIMIT,
};
pub use forcing::{forcing_probe, ForcingRow};
pub use interpolate::{interpolate_to_density, step_bound, Interpolation, InterpolationError};
pub use quasi::{quasirandom_epsilon, QuasiEstimate, QuasiMode, EXACT_EPSILON_LIMIT};
pub use stars::{
    classify_star, sampled_hom_density, star_expected_density, star_f, star_f_prime_at_zero,
    star_homomorphisms, two_block_tournament, MonteCarlo, StarClass, StarKind, TwoBlockParams,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::counting::{CountError, Counter, PinnedPattern};
use crate::digraph::{Digraph, GraphError};
use crate::format::{parse_dgf, parse_trn, write_dgf, FormatError};
use crate::scalar::approx;
use crate::{Rational, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    AntiSidorenkoUpTo,
    SidorenkoRatioScan,
    StrongAntiUpTo,
    Impartial,
    QuasirandomDirection,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Regime {
    Exhaustive { n_max: usize },
    Family { name: String, params: String },
    Sampled { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    /// No violation on any host examined, up to the largest `n` scanned.
    HoldsUpTo { n_max: usize },
    /// The witness host (on `n` vertices) breaks the bound.
    ViolatedBy { n: usize },
    /// Ratios were recorded up to `n_max` but no verdict is drawn: the
    /// Sidorenko side only holds up to a `1 - o(1)` factor.
    Scanned { n_max: usize },
}

/// Extremal ratios among the hosts examined at one size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub n: usize,
    #[serde(with = "crate::report::rational")]
    pub max_ratio: Rational,
    #[serde(with = "crate::report::rational")]
    pub min_ratio: Rational,
    /// Approximation of `max_ratio`, for plotting only.
    pub max_ratio_approx: f64,
    /// Approximation of `min_ratio`, for plotting only.
    pub min_ratio_approx: f64,
}

impl CurvePoint {
    pub fn new(n: usize, max_ratio: Rational, min_ratio: Rational) -> Self {
        CurvePoint {
            n,
            max_ratio_approx: approx(&max_ratio),
            min_ratio_approx: approx(&min_ratio),
            max_ratio,
            min_ratio,
        }
    }
}

/// A verdict with everything needed to re-check it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    /// The pattern in DGF/1.
    pub digraph: String,
    pub provenance: String,
    /// Pinned pattern vertices (strong checks only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pinned: Option<Vec<usize>>,
    pub property: Property,
    pub regime: Regime,
    pub verdict: Verdict,
    /// Largest ratio to the baseline (smallest, for Sidorenko scans).
    #[serde(with = "crate::report::rational")]
    pub extremal_ratio: Rational,
    pub extremal_ratio_approx: f64,
    /// Witness host in TRN/1.
    pub witness: Option<String>,
    /// Images of the pinned vertices in the witness.
    pub witness_anchor: Option<Vec<usize>>,
    /// Ratio the witness attains.
    #[serde(with = "optional_rational")]
    pub witness_ratio: Option<Rational>,
    /// Second host of an impartiality counterexample, in TRN/1.
    pub witness_alt: Option<String>,
    pub curve: Vec<CurvePoint>,
    pub notes: Vec<String>,
}

mod optional_rational {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::report::ExactRational;
    use crate::Rational;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        r.as_ref().map(ExactRational::from).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<ExactRational>::deserialize(d)?
            .map(|e| e.to_rational().map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[derive(Debug, Error)]
pub enum PropertyError {
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Precondition(String),
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("embedded text: {0}")]
    Format(#[from] FormatError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error("report is inconsistent: {0}")]
    Inconsistent(String),
}

impl PropertyReport {
    pub(crate) fn new(d: &Digraph, provenance: &str, property: Property, regime: Regime) -> Self {
        PropertyReport {
            digraph: write_dgf(d),
            provenance: provenance.to_string(),
            pinned: None,
            property,
            regime,
            verdict: Verdict::HoldsUpTo { n_max: 0 },
            extremal_ratio: Rational::from_integer(0.into()),
            extremal_ratio_approx: 0.0,
            witness: None,
            witness_anchor: None,
            witness_ratio: None,
            witness_alt: None,
            curve: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn set_extremal(&mut self, r: Rational) {
        self.extremal_ratio_approx = approx(&r);
        self.extremal_ratio = r;
    }

    pub fn is_violated(&self) -> bool {
        matches!(self.verdict, Verdict::ViolatedBy { .. })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, ReportError> {
        Ok(serde_json::from_str(s)?)
    }

    /// Recounts the witness and checks it supports the verdict.
    pub fn reverify(&self, counter: &Counter) -> Result<(), ReportError> {
        let bad = |m: String| Err(ReportError::Inconsistent(m));
        let d = parse_dgf(&self.digraph)?;
        let one = Rational::from_integer(1.into());
        let anti = matches!(self.property, Property::AntiSidorenkoUpTo | Property::StrongAntiUpTo);
        match (&self.verdict, &self.witness) {
            (Verdict::HoldsUpTo { .. } | Verdict::Scanned { .. }, _) => {
                if anti && self.extremal_ratio > one {
                    return bad("holds, yet the extremal ratio exceeds 1".into());
                }
                Ok(())
            }
            (Verdict::ViolatedBy { .. }, None) => bad("violation without a witness".into()),
            (Verdict::ViolatedBy { n }, Some(w)) => {
                let t = parse_trn(w)?;
                if t.n() != *n {
                    return bad(format!("witness has {} vertices, verdict says {n}", t.n()));
                }
                match self.property {
                    Property::Impartial => {
                        let alt = parse_trn(self.witness_alt.as_deref().unwrap_or(""))?;
                        let a = counter.labeled(&d, &t)?.value;
                        let b = counter.labeled(&d, &alt)?.value;
                        if a == b {
                            return bad(format!("both witnesses have {a} copies"));
                        }
                        Ok(())
                    }
                    _ => {
                        let pinned = VertexSet::from_members(d.n(), self.pinned.clone().unwrap_or_default());
                        let p = PinnedPattern::new(d, pinned)?;
                        let anchor = self.witness_anchor.clone().unwrap_or_default();
                        let r = counter.labeled_pinned(&p.anchored_at(&anchor)?, &t)?.ratio;
                        if Some(&r) != self.witness_ratio.as_ref() {
                            return bad(format!("witness recounts to ratio {r}"));
                        }
                        if anti && r <= one {
                            return bad(format!("witness ratio {r} does not exceed 1"));
                        }
                        Ok(())
                    }
                }
            }
        }
    }
}
