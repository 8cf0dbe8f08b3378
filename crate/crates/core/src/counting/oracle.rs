//! Naive reference counter: walks every map `V(D) -> V(T)` with an
//! odometer and checks each edge. Shares nothing with the kernel.

use crate::digraph::{Digraph, Tournament};
use crate::Count;

use super::{CountError, Mode};

/// Counts by full enumeration of the `n^v` maps. Refuses when `n^v`
/// exceeds `budget`.
pub fn oracle_count(d: &Digraph, t: &Tournament, mode: Mode, budget: u64) -> Result<Count, CountError> {
    let (v, n) = (d.n(), t.n());
    let volume = (n as u64).checked_pow(v as u32).filter(|&x| x <= budget);
    if volume.is_none() {
        return Err(CountError::BudgetExceeded { budget });
    }
    if v == 0 {
        return Ok(1u32.into());
    }
    if n == 0 {
        return Ok(0u32.into());
    }
    let edges = d.edges();
    let mut map = vec![0usize; v];
    let mut total: u64 = 0;
    loop {
        let injective = mode == Mode::Homomorphisms || {
            let mut seen = vec![false; n];
            map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        };
        if injective && edges.iter().all(|&(a, b)| t.has_edge(map[a], map[b])) {
            total += 1;
        }
        let mut i = 0;
        loop {
            if i == v {
                return Ok(total.into());
            }
            map[i] += 1;
            if map[i] < n {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        let tt4 = Tournament::transitive(4);
        let p2 = Digraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let d2 = Digraph::from_edges(4, [(0, 2), (0, 3), (2, 1), (3, 1)]).unwrap();
        let edge = Digraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(oracle_count(&p2, &tt4, Mode::Homomorphisms, 1 << 20).unwrap(), 4u32.into());
        assert_eq!(oracle_count(&d2, &tt4, Mode::Labeled, 1 << 20).unwrap(), 2u32.into());
        let tt3 = Tournament::transitive(3);
        assert_eq!(oracle_count(&edge, &tt3, Mode::Homomorphisms, 1 << 20).unwrap(), 3u32.into());
        assert!(oracle_count(&d2, &tt4, Mode::Labeled, 100).is_err());
    }
}
