use alloc::vec::Vec;

use super::{enumerate_brindled, BooleanFn};
use crate::gf2::{self, AffineSpace, Equation};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeltaClass {
    /// Every brindled quadruple has `lambda`-sum zero.
    Constant0,
    /// Every brindled quadruple has `lambda`-sum one.
    Constant1,
    NotConstant,
}

/// Parity of `lambda` summed over the four points of each 2-plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlaneParity {
    AllOdd,
    AllEven,
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaReport {
    pub delta_class: DeltaClass,
    pub zero_sum_brindled_count: u64,
    pub plane_parity: PlaneParity,
}

/// Both views of `lambda`, each computed from scratch. With no brindled
/// quadruples (or no planes, `n = 1`) the classes are vacuously
/// `Constant0` and `AllEven`.
pub fn delta_report(lambda: &BooleanFn) -> DeltaReport {
    let (mut zero, mut one) = (0u64, 0u64);
    for qd in enumerate_brindled(lambda.arity()) {
        if qd.lambda_sum(lambda) {
            one += 1;
        } else {
            zero += 1;
        }
    }
    let delta_class = match (zero, one) {
        (_, 0) => DeltaClass::Constant0,
        (0, _) => DeltaClass::Constant1,
        _ => DeltaClass::NotConstant,
    };
    DeltaReport {
        delta_class,
        zero_sum_brindled_count: zero,
        plane_parity: plane_parity(lambda),
    }
}

/// The `C(n,2) * 2^(n-2)` two-dimensional planes of the Boolean `n`-cube,
/// each as its four points.
pub fn planes(n: usize) -> impl Iterator<Item = [u32; 4]> {
    (0..n).flat_map(move |i| {
        (i + 1..n).flat_map(move |j| {
            let (bi, bj) = (1u32 << i, 1u32 << j);
            (0..1u32 << n)
                .filter(move |z| z & (bi | bj) == 0)
                .map(move |z| [z, z | bi, z | bj, z | bi | bj])
        })
    })
}

pub fn plane_parity(lambda: &BooleanFn) -> PlaneParity {
    let (mut odd, mut even) = (false, false);
    for plane in planes(lambda.arity()) {
        if plane.iter().fold(false, |acc, &z| acc ^ lambda.eval(z)) {
            odd = true;
        } else {
            even = true;
        }
    }
    match (odd, even) {
        (true, false) => PlaneParity::AllOdd,
        (false, _) => PlaneParity::AllEven,
        _ => PlaneParity::Mixed,
    }
}

fn check_arity(n: usize) -> Result<()> {
    if !(1..=6).contains(&n) {
        return Err(Error::ScaleExceeded { n, q: 2 });
    }
    Ok(())
}

/// All `lambda` on `n <= 6` variables whose brindled sums all equal
/// `delta`, as an affine space of truth-table words (bit `z` is
/// `lambda(z)`); `None` when there is none.
pub fn lambdas_with_constant_delta(n: usize, delta: bool) -> Result<Option<AffineSpace>> {
    check_arity(n)?;
    let tail = (1u32 << n) - 1;
    let equations: Vec<Equation> = enumerate_brindled(n)
        .map(|qd| Equation {
            mask: qd.vectors().iter().fold(0u64, |m, &v| m ^ 1 << (v & tail)),
            rhs: delta,
        })
        .collect();
    Ok(gf2::solve(1 << n, &equations))
}

/// All `lambda` on `n <= 6` variables with every plane sum odd (or every
/// plane sum even), as an affine space of truth-table words.
pub fn lambdas_with_plane_parity(n: usize, odd: bool) -> Result<Option<AffineSpace>> {
    check_arity(n)?;
    let equations: Vec<Equation> = planes(n)
        .map(|p| Equation {
            mask: p.iter().fold(0u64, |m, &z| m | 1 << z),
            rhs: odd,
        })
        .collect();
    Ok(gf2::solve(1 << n, &equations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semilinear::{lambda_z22, lambda_z4};

    #[test]
    fn plane_count() {
        for n in 2..=6 {
            let expected = n * (n - 1) / 2 * (1 << (n - 2));
            assert_eq!(planes(n).count(), expected);
        }
    }

    #[test]
    fn linear_examples() {
        let z4 = delta_report(&lambda_z4(4));
        assert_eq!(z4.delta_class, DeltaClass::Constant1);
        assert_eq!(z4.plane_parity, PlaneParity::AllOdd);
        assert_eq!(z4.zero_sum_brindled_count, 0);
        let z22 = delta_report(&lambda_z22(4));
        assert_eq!(z22.delta_class, DeltaClass::Constant0);
        assert_eq!(z22.plane_parity, PlaneParity::AllEven);
        assert_eq!(z22.zero_sum_brindled_count, 40);
    }

    #[test]
    fn solution_spaces_match_sweep_at_n4() {
        let mut by_delta = [Vec::new(), Vec::new()];
        let mut by_plane = [Vec::new(), Vec::new()];
        for word in 0..1u64 << 16 {
            let lambda = BooleanFn::from_index_bits(4, word).unwrap();
            let r = delta_report(&lambda);
            match r.delta_class {
                DeltaClass::Constant0 => by_delta[0].push(word),
                DeltaClass::Constant1 => by_delta[1].push(word),
                DeltaClass::NotConstant => {}
            }
            match r.plane_parity {
                PlaneParity::AllEven => by_plane[0].push(word),
                PlaneParity::AllOdd => by_plane[1].push(word),
                PlaneParity::Mixed => {}
            }
        }
        for (i, flag) in [false, true].into_iter().enumerate() {
            let mut d: Vec<u64> = lambdas_with_constant_delta(4, flag)
                .unwrap()
                .unwrap()
                .iter()
                .collect();
            d.sort_unstable();
            assert_eq!(d, by_delta[i]);
            let mut p: Vec<u64> = lambdas_with_plane_parity(4, flag)
                .unwrap()
                .unwrap()
                .iter()
                .collect();
            p.sort_unstable();
            assert_eq!(p, by_plane[i]);
        }
        // affine functions: 2^(n+1)
        assert_eq!(by_plane[0].len(), 32);
        assert_eq!(by_plane[1].len(), 32);
    }

    #[test]
    fn vacuous_unary() {
        let r = delta_report(&"01".parse().unwrap());
        assert_eq!(r.delta_class, DeltaClass::Constant0);
        assert_eq!(r.plane_parity, PlaneParity::AllEven);
    }
}
