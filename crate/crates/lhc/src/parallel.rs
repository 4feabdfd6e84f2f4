//! Multi-threaded exact counting.

use std::time::Instant;

use lhc_core::transversal::{SearchStats, TransversalSearch};
use lhc_core::LatinHypercube;
use rayon::prelude::*;

use crate::Result;

/// Counts transversals by fanning the first-level branches out over the
/// rayon pool. Totals are exact sums, so the result matches the
/// single-threaded count; only `elapsed` varies between runs.
pub fn count_parallel(cube: &LatinHypercube) -> Result<SearchStats> {
    let start = Instant::now();
    let search = TransversalSearch::new(cube)?;
    let (found, nodes) = if search.branch_count() == 0 {
        let stats = search.count();
        (stats.transversals_found, stats.nodes_visited)
    } else {
        (0..search.branch_count())
            .into_par_iter()
            .map(|b| search.count_branch(b))
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
    };
    Ok(SearchStats {
        nodes_visited: nodes,
        transversals_found: found,
        elapsed: start.elapsed(),
    })
}

/// Single-threaded count with wall-clock time filled in.
pub fn count_timed(cube: &LatinHypercube) -> Result<SearchStats> {
    let start = Instant::now();
    let mut stats = lhc_core::transversal::count_transversals_with_stats(cube)?;
    stats.elapsed = start.elapsed();
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lhc_core::algebra::{gen_iterated_group, GroupKind};

    #[test]
    fn matches_sequential() {
        for (kind, n, q) in [
            (GroupKind::Z2x2, 4, 4),
            (GroupKind::Z4, 3, 4),
            (GroupKind::CyclicZq, 3, 5),
        ] {
            let cube = gen_iterated_group(kind, n, q).unwrap();
            let par = count_parallel(&cube).unwrap();
            let seq = count_timed(&cube).unwrap();
            assert_eq!(
                (par.transversals_found, par.nodes_visited),
                (seq.transversals_found, seq.nodes_visited)
            );
        }
        let unit = LatinHypercube::new(1, 1, vec![0]).unwrap();
        assert_eq!(count_parallel(&unit).unwrap().transversals_found, 1);
    }
}
