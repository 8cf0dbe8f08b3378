//! Exhaustive enumeration of labeled tournaments by pair code.
//!
//! Code bit `k` orients the `k`-th pair `(i, j)`, `i < j`, in lexicographic
//! order: set means `i -> j`. The code space is split into disjoint ranges
//! across rayon workers; partial results merge in range order, so every
//! scan is deterministic whatever the thread count.

use rayon::prelude::*;

use crate::counting::CountError;
use crate::kernel::Host;

/// Largest `n` the exhaustive scans accept (`2^21` tournaments).
pub const EXHAUSTIVE_LIMIT: usize = 7;

/// Number of labeled tournaments on `n` vertices.
pub fn tournament_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

pub(crate) fn check_guard(n: usize, limit: usize) -> Result<(), CountError> {
    if n > limit {
        Err(CountError::SizeGuard { n, limit })
    } else {
        Ok(())
    }
}

/// Folds `step` over every tournament on `n` vertices. `merge` must be
/// associative; it always receives the lower code range on the left.
pub(crate) fn fold_codes<A, I, S, M>(n: usize, init: I, step: S, merge: M) -> Result<A, CountError>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    S: Fn(&mut A, &Host<1>, u64) -> Result<(), CountError> + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    (0..tournament_count(n))
        .into_par_iter()
        .try_fold(
            || (Host::<1>::empty_small(), init()),
            |(mut host, mut acc), code| {
                host.load_code(n, code);
                step(&mut acc, &host, code)?;
                Ok((host, acc))
            },
        )
        .map(|r| r.map(|(_, acc)| acc))
        .try_reduce(&init, |a, b| Ok(merge(a, b)))
}
