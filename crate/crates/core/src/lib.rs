//! Exact counting and verdict engines for Sidorenko-type properties of
//! oriented graphs in tournaments.
//!
//! Counts are big integers and every verdict compares exact rationals;
//! floating point only shows up in convenience fields of reports.

pub mod bits;
pub mod constructions;
pub mod counting;
pub mod covers;
pub mod digraph;
pub mod enumerate;
pub mod format;
pub mod iso;
pub(crate) mod kernel;
pub mod property;
pub mod report;
pub mod scalar;
pub mod undirected;

pub use bits::VertexSet;
pub use counting::{CountError, CountResult, Counter, Mode, PinnedPattern};
pub use digraph::{Digraph, Dominance, FillStrategy, GraphError, Tournament};
pub use undirected::UndirectedGraph;

/// Exact rational used for bounds, ratios and densities.
pub type Rational = num_rational::BigRational;
/// Exact non-negative count.
pub type Count = num_bigint::BigUint;
