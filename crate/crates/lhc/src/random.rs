//! Seeded random constructions for sweeps and tests.

use lhc_core::algebra::{BinaryOp, CompositionSpec, Expr, Permutation, TransformSpec};
use lhc_core::semilinear::BooleanFn;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn permutation(rng: &mut impl Rng, len: usize) -> Permutation {
    let mut images: Vec<usize> = (0..len).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffled identity")
}

/// A random isotope of a group of order `q`; at `q = 4` the Klein group
/// and the cyclic group are equally likely.
pub fn binary_op(rng: &mut impl Rng, q: usize) -> BinaryOp {
    let base = if q == 4 && rng.gen_bool(0.5) {
        BinaryOp::z22_add()
    } else {
        BinaryOp::cyclic(q).expect("q in range")
    };
    let (a, b, c) = (
        permutation(rng, q),
        permutation(rng, q),
        permutation(rng, q),
    );
    BinaryOp::from_fn(q, |x, y| {
        let v = base.apply(a.apply(x as usize) as u8, b.apply(y as usize) as u8);
        c.apply(v as usize) as u8
    })
    .expect("isotope of a latin square")
}

fn expr(rng: &mut impl Rng, q: usize, vars: &[usize]) -> Expr {
    if let [k] = vars {
        return Expr::var(*k);
    }
    let split = rng.gen_range(1..vars.len());
    let (l, r) = vars.split_at(split);
    Expr::node(binary_op(rng, q), expr(rng, q, l), expr(rng, q, r))
}

/// Random tree shape, leaf order and operations; `n >= 2`.
pub fn composition(rng: &mut impl Rng, n: usize, q: usize) -> CompositionSpec {
    let mut vars: Vec<usize> = (1..=n).collect();
    vars.shuffle(rng);
    CompositionSpec::new(expr(rng, q, &vars), None).expect("well-formed tree")
}

pub fn transform(rng: &mut impl Rng, n: usize, q: usize) -> TransformSpec {
    TransformSpec {
        isotopy: rng
            .gen_bool(0.8)
            .then(|| (0..=n).map(|_| permutation(rng, q)).collect()),
        parastrophe: rng.gen_bool(0.8).then(|| permutation(rng, n + 1)),
    }
}

pub fn boolean_fn(rng: &mut impl Rng, n: usize) -> BooleanFn {
    BooleanFn::from_fn(n, |_| rng.gen()).expect("arity in range")
}
