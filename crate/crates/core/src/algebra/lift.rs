use alloc::vec;
use alloc::vec::Vec;

use super::{Permutation, TwoLevel};
use crate::transversal::{verify_transversal, Transversal};
use crate::{Error, Result};

fn require_valid(cube: &crate::LatinHypercube, t: &Transversal) -> Result<()> {
    match verify_transversal(cube, t) {
        Ok(true) => Ok(()),
        _ => Err(Error::InvalidTransversal),
    }
}

/// Glues a transversal of `outer` (cells `(x_0, y, x_R)`) to one of `inner`
/// (cells `(y, x_S)`) along the shared value `y`.
pub fn lift_transversals_product(
    two: &TwoLevel,
    t_outer: &Transversal,
    t_inner: &Transversal,
) -> Result<Transversal> {
    require_valid(two.outer(), t_outer)?;
    require_valid(two.inner(), t_inner)?;
    let n = two.arity();
    // inner cells are sorted by their output y
    let cells = t_outer.cells().map(|oc| {
        let ic = t_inner.cell(oc[1] as usize);
        let mut cell = vec![0u8; n + 1];
        cell[0] = oc[0];
        for (&v, &s) in two.inner_vars().iter().zip(&ic[1..]) {
            cell[v] = s;
        }
        for (&v, &s) in two.outer_vars().iter().zip(&oc[2..]) {
            cell[v] = s;
        }
        cell
    });
    Transversal::from_cells(n + 1, cells.collect::<Vec<_>>())
}

/// Pairs cell `i` of a transversal of `inner_fiber(a)` with cell `tau(i)`
/// of a transversal of `outer_fiber(a)`.
pub fn lift_transversals_fiber(
    two: &TwoLevel,
    t_inner_a: &Transversal,
    t_outer_a: &Transversal,
    tau: &Permutation,
    a: u8,
) -> Result<Transversal> {
    let q = two.order();
    if tau.len() != q {
        return Err(Error::OrderMismatch {
            expected: q,
            found: tau.len(),
        });
    }
    require_valid(&two.inner_fiber(a)?, t_inner_a)?;
    require_valid(&two.outer_fiber(a)?, t_outer_a)?;
    let n = two.arity();
    let cells = (0..q).map(|i| {
        let hc = t_inner_a.cell(i);
        let gc = t_outer_a.cell(tau.apply(i));
        let mut cell = vec![0u8; n + 1];
        cell[0] = gc[0];
        for (&v, &s) in two.inner_vars().iter().zip(hc) {
            cell[v] = s;
        }
        for (&v, &s) in two.outer_vars().iter().zip(&gc[1..]) {
            cell[v] = s;
        }
        cell
    });
    Transversal::from_cells(n + 1, cells.collect::<Vec<_>>())
}

/// `(q * q!)^floor((n-1)/2)` when it applies: always for odd `n`, for even
/// `n` only if the caller asserts that the external quasigroup of some
/// proper representation has a transversal; zero otherwise. `None` on
/// overflow.
pub fn lower_bound_completely_reducible(
    n: usize,
    q: usize,
    even_case_applicable: bool,
) -> Option<u128> {
    assert!(n >= 1);
    if n.is_multiple_of(2) && !even_case_applicable {
        return Some(0);
    }
    let factorial = (1..=q as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))?;
    (q as u128)
        .checked_mul(factorial)?
        .checked_pow(((n - 1) / 2) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BinaryOp, CompositionSpec};
    use crate::transversal::enumerate_transversals;
    use crate::LatinHypercube;
    use std::collections::BTreeSet;

    fn klein_two_level() -> TwoLevel {
        let spec = CompositionSpec::chain(&[BinaryOp::z22_add(), BinaryOp::z22_add()]).unwrap();
        TwoLevel::from_spec(&spec).unwrap()
    }

    fn all(cube: &LatinHypercube) -> Vec<Transversal> {
        enumerate_transversals(cube, None).unwrap().collect()
    }

    #[test]
    fn product_lifts_are_distinct_transversals() {
        let two = klein_two_level();
        let f = two.compose().unwrap();
        let (tg, th) = (all(two.outer()), all(two.inner()));
        assert_eq!((tg.len(), th.len()), (8, 8));
        let mut seen = BTreeSet::new();
        for g in &tg {
            for h in &th {
                let t = lift_transversals_product(&two, g, h).unwrap();
                assert_eq!(verify_transversal(&f, &t), Ok(true));
                seen.insert(t);
            }
        }
        assert_eq!(seen.len(), 64);
    }

    #[test]
    fn fiber_lifts_sweep_every_tau() {
        let two = klein_two_level();
        let f = two.compose().unwrap();
        let th = all(&two.inner_fiber(0).unwrap());
        let tg = all(&two.outer_fiber(0).unwrap());
        let mut seen = BTreeSet::new();
        for tau in Permutation::all(4) {
            let t = lift_transversals_fiber(&two, &th[0], &tg[0], &tau, 0).unwrap();
            assert_eq!(verify_transversal(&f, &t), Ok(true));
            seen.insert(t);
        }
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let two = klein_two_level();
        let good = all(two.inner());
        let bogus =
            Transversal::from_cells(3, [[0u8, 0, 0], [1, 0, 1], [2, 2, 0], [3, 3, 0]]).unwrap();
        assert_eq!(
            lift_transversals_product(&two, &bogus, &good[0]),
            Err(Error::InvalidTransversal)
        );
    }

    #[test]
    fn trivial_order() {
        let unit = LatinHypercube::new(2, 1, vec![0]).unwrap();
        let two = TwoLevel::new(unit.clone(), unit, vec![1, 2], vec![3]).unwrap();
        let cell = Transversal::from_cells(3, [[0u8, 0, 0]]).unwrap();
        let t = lift_transversals_product(&two, &cell, &cell).unwrap();
        assert_eq!(t.flattened(), &[0, 0, 0, 0]);
        let h = Transversal::from_cells(2, [[0u8, 0]]).unwrap();
        let g = Transversal::from_cells(2, [[0u8, 0]]).unwrap();
        let t = lift_transversals_fiber(&two, &h, &g, &Permutation::identity(1), 0).unwrap();
        assert_eq!(t.flattened(), &[0, 0, 0, 0]);
    }

    #[test]
    fn bound_values() {
        assert_eq!(lower_bound_completely_reducible(3, 4, false), Some(96));
        assert_eq!(lower_bound_completely_reducible(5, 4, false), Some(9216));
        assert_eq!(lower_bound_completely_reducible(1, 7, false), Some(1));
        assert_eq!(lower_bound_completely_reducible(4, 4, false), Some(0));
        assert_eq!(lower_bound_completely_reducible(4, 4, true), Some(96));
        assert_eq!(lower_bound_completely_reducible(101, 8, false), None);
    }
}
