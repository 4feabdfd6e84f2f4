//! Standardly semilinear quasigroups of order 4.
//!
//! Such a quasigroup is fixed by an orientation function `lambda` on the
//! `n`-dimensional Boolean cube: `x_0 = f(x_1, ..., x_n)` iff
//! `l(x_0) ^ ... ^ l(x_n) = 0` and the low bits satisfy
//! `p(x_0) ^ ... ^ p(x_n) = lambda(l(x_1), ..., l(x_n))`. Its transversals
//! split by the blocks they visit, which leads to the quadruple census and
//! the closed-form counter in this module.

mod boolean;
mod census;
mod delta;
mod quadruple;

pub use boolean::{detect_semilinear, gen_semilinear, lambda_z22, lambda_z4, BooleanFn};
pub use census::{brindled_count_closed, census_recurrence, QuadrupleCensus};
pub use delta::{
    delta_report, lambdas_with_constant_delta, lambdas_with_plane_parity, plane_parity, planes,
    DeltaClass, DeltaReport, PlaneParity,
};
pub use quadruple::{
    count_twin, enumerate_brindled, enumerate_brindled_from, twin_quadruples, BrindledIter,
    Quadruple, QuadrupleClass,
};

use crate::{Error, Result};

/// Number of brindled quadruples whose `lambda`-sum is zero.
pub fn zero_sum_brindled(lambda: &BooleanFn) -> u64 {
    enumerate_brindled(lambda.arity())
        .filter(|qd| !qd.lambda_sum(lambda))
        .count() as u64
}

/// Transversal count of `gen_semilinear(lambda)` from the quadruple
/// decomposition: `8^(n-1)` twin transversals for odd `n`, plus
/// `2 * 4^(n-1)` for every brindled quadruple with zero `lambda`-sum.
pub fn count_transversals_formula(lambda: &BooleanFn) -> u128 {
    let n = lambda.arity() as u32;
    let twin = if n % 2 == 1 { 8u128.pow(n - 1) } else { 0 };
    twin + 2 * 4u128.pow(n - 1) * zero_sum_brindled(lambda) as u128
}

/// For even `n`: true iff every brindled quadruple has `lambda`-sum one,
/// i.e. the semilinear cube has no transversals.
pub fn zero_transversal_criterion(lambda: &BooleanFn) -> Result<bool> {
    if lambda.arity() % 2 == 1 {
        return Err(Error::Precondition(
            "odd arity always has twin transversals; the criterion needs even arity",
        ));
    }
    Ok(enumerate_brindled(lambda.arity()).all(|qd| qd.lambda_sum(lambda)))
}

/// Transversals of the `n`-ary iterated groups of order 4: the Klein group
/// for every `n >= 2`, and also the cyclic group when `n` is odd.
pub fn linear_transversal_count(n: usize) -> u128 {
    assert!(n >= 2);
    let n = n as u32;
    let main = 3 * 24u128.pow(n - 1) / 8;
    if n % 2 == 1 {
        main + 5 * 8u128.pow(n - 2)
    } else {
        main - 8u128.pow(n - 2)
    }
}

/// Lower bound on transversals of semilinear quasigroups of odd arity.
pub fn odd_semilinear_lower_bound(n: usize) -> u128 {
    assert!(n % 2 == 1);
    let n = n as u32;
    (16u128.pow(n - 1) + 2 * 8u128.pow(n - 1)) / 3
}
