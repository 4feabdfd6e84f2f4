//! Reproduction harness: every claim runs at desk scale and reports
//! `claim_id | topic | expected | got | PASS/FAIL | ms`.

use std::collections::BTreeSet;
use std::time::Instant;

use lhc_core::algebra::{
    gen_iterated_group, lift_transversals_fiber, lift_transversals_product,
    lower_bound_completely_reducible, GroupKind, Permutation, TwoLevel,
};
use lhc_core::semilinear::{
    brindled_count_closed, census_recurrence, count_transversals_formula, delta_report,
    enumerate_brindled, gen_semilinear, lambda_z22, lambda_z4, lambdas_with_constant_delta,
    lambdas_with_plane_parity, linear_transversal_count, odd_semilinear_lower_bound,
    zero_transversal_criterion, BooleanFn, DeltaClass, PlaneParity, QuadrupleClass,
};
use lhc_core::transversal::{
    enumerate_transversals, transversals_by_quadruple, verify_transversal,
};
use lhc_core::{LatinHypercube, Transversal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{fixtures, parallel, random, Error, Result};

/// Claim ids with their topics, in report order.
pub const CLAIMS: [(u32, &str); 13] = [
    (1, "binary baselines"),
    (2, "linear counts, odd arity"),
    (3, "linear counts, even arity"),
    (4, "formula against search"),
    (5, "brindled census"),
    (6, "twin and brindled buckets"),
    (7, "zero-transversal characterization"),
    (8, "odd-arity floor"),
    (9, "lifting constructions"),
    (10, "completely reducible bound"),
    (11, "layered example cubes"),
    (12, "transform invariance"),
    (13, "brindled-sum constancy"),
];

/// Claims whose fixtures can be corrupted with `--inject-fault`.
pub const FAULT_CAPABLE: [u32; 11] = [1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 12];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub id: u32,
    pub topic: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
    pub ms: u128,
}

impl ClaimOutcome {
    pub fn line(&self) -> String {
        format!(
            "C{:02} | {} | {} | {} | {} | {}",
            self.id,
            self.topic,
            self.expected,
            self.got,
            if self.pass { "PASS" } else { "FAIL" },
            self.ms
        )
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerifyReport {
    pub claims: Vec<ClaimOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    /// Run only these claims; all of them when empty.
    pub only: Vec<u32>,
    /// Corrupt the fixtures of this claim.
    pub inject_fault: Option<u32>,
}

/// Routes fixtures through the fault injector.
struct Ctx {
    claim: u32,
    fault: Option<u32>,
}

impl Ctx {
    /// Returns `cube`, with its first symbol bumped when a fault is
    /// injected into the running claim. The result is no longer latin.
    fn fixture(&self, cube: LatinHypercube) -> LatinHypercube {
        if self.fault != Some(self.claim) {
            return cube;
        }
        let (n, q) = (cube.arity(), cube.order());
        let mut values = cube.into_values();
        values[0] = (values[0] + 1) % q as u8;
        LatinHypercube::new(n, q, values).expect("same shape")
    }
}

/// Outcome of one claim body: expected, got, pass.
type Body = (String, String, bool);

type Check<T> = std::result::Result<T, String>;

fn count(cube: &LatinHypercube) -> Check<u64> {
    if !cube.is_latin() {
        return Err("fixture is not latin".into());
    }
    // thread fan-out only pays off on the larger cubes
    let stats = if cube.len() < 4096 {
        parallel::count_timed(cube)
    } else {
        parallel::count_parallel(cube)
    };
    stats
        .map(|s| s.transversals_found)
        .map_err(|e| e.to_string())
}

fn transversals(cube: &LatinHypercube) -> Check<Vec<Transversal>> {
    if !cube.is_latin() {
        return Err("fixture is not latin".into());
    }
    enumerate_transversals(cube, None)
        .map(Iterator::collect)
        .map_err(|e| e.to_string())
}

fn iterated(kind: GroupKind, n: usize) -> LatinHypercube {
    gen_iterated_group(kind, n, 4).expect("within scale")
}

fn list<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn wrap(body: Check<Body>, expected_on_error: &str) -> Body {
    body.unwrap_or_else(|e| (expected_on_error.to_string(), e, false))
}

fn claim_1(ctx: &Ctx) -> Body {
    let expected = "Z4: 0, Z2xZ2: 8";
    wrap(
        (|| {
            let z4 = count(&ctx.fixture(iterated(GroupKind::Z4, 2)))?;
            let z22 = count(&ctx.fixture(iterated(GroupKind::Z2x2, 2)))?;
            Ok((
                expected.into(),
                format!("Z4: {z4}, Z2xZ2: {z22}"),
                (z4, z22) == (0, 8),
            ))
        })(),
        expected,
    )
}

fn claim_2(ctx: &Ctx) -> Body {
    let expected = "n=3: 256, 256; n=5: 126976, 126976";
    wrap(
        (|| {
            let mut got = Vec::new();
            let mut pass =
                linear_transversal_count(3) == 256 && linear_transversal_count(5) == 126_976;
            for n in [3, 5] {
                let z4 = count(&ctx.fixture(iterated(GroupKind::Z4, n)))?;
                let z22 = count(&iterated(GroupKind::Z2x2, n)).expect("generated");
                let closed = linear_transversal_count(n);
                pass &= z4 as u128 == closed && z22 as u128 == closed;
                got.push(format!("n={n}: {z4}, {z22}"));
            }
            Ok((expected.into(), got.join("; "), pass))
        })(),
        expected,
    )
}

fn claim_3(ctx: &Ctx) -> Body {
    let expected = "n=4: Z4 0, Z2xZ2 5120; n=6: Z2xZ2 2981888";
    wrap(
        (|| {
            let z4 = count(&ctx.fixture(iterated(GroupKind::Z4, 4)))?;
            let z22 = count(&iterated(GroupKind::Z2x2, 4)).expect("generated");
            let z22_6 = count(&iterated(GroupKind::Z2x2, 6)).expect("generated");
            let pass = z4 == 0
                && z22 == 5120
                && z22_6 == 2_981_888
                && linear_transversal_count(4) == 5120
                && linear_transversal_count(6) == 2_981_888;
            Ok((
                expected.into(),
                format!("n=4: Z4 {z4}, Z2xZ2 {z22}; n=6: Z2xZ2 {z22_6}"),
                pass,
            ))
        })(),
        expected,
    )
}

fn claim_4(ctx: &Ctx) -> Body {
    let expected = "formula = search on 16 + 256 + 1000 orientation functions";
    wrap(
        (|| {
            let mut lambdas: Vec<BooleanFn> = Vec::new();
            lambdas.extend((0..16).map(|w| BooleanFn::from_index_bits(2, w).expect("n = 2")));
            lambdas.extend((0..256).map(|w| BooleanFn::from_index_bits(3, w).expect("n = 3")));
            let mut rng = ChaCha8Rng::seed_from_u64(0x0004);
            lambdas.extend((0..1000).map(|_| random::boolean_fn(&mut rng, 4)));
            let mut agree = 0;
            for (i, lambda) in lambdas.iter().enumerate() {
                let cube = gen_semilinear(lambda).expect("within scale");
                let cube = if i == 0 { ctx.fixture(cube) } else { cube };
                if count(&cube)? as u128 == count_transversals_formula(lambda) {
                    agree += 1;
                }
            }
            Ok((
                expected.into(),
                format!("{agree}/{} agree", lambdas.len()),
                agree == lambdas.len(),
            ))
        })(),
        expected,
    )
}

fn claim_5(_: &Ctx) -> Body {
    let expected = "W(2..6) = 1, 6, 40, 240, 1456 by enumeration, closed form and recurrence";
    let mut got = Vec::new();
    let mut pass = true;
    for (n, want) in (2..=6).zip([1u128, 6, 40, 240, 1456]) {
        let enumerated = enumerate_brindled(n).count() as u128;
        let (closed, census) = (brindled_count_closed(n), census_recurrence(n).w);
        pass &= enumerated == want && closed == want && census == want;
        got.push(if enumerated == closed && closed == census {
            enumerated.to_string()
        } else {
            format!("{enumerated}/{closed}/{census}")
        });
    }
    (expected.into(), format!("W(2..6) = {}", list(&got)), pass)
}

fn claim_6(ctx: &Ctx) -> Body {
    let expected = "lambda=0, n=3: twin total 64 over 4 quadruples of 16; brindled buckets 6 x 32";
    wrap(
        (|| {
            let cube = ctx.fixture(gen_semilinear(&lambda_z22(3)).expect("n = 3"));
            if !cube.is_latin() {
                return Err("fixture is not latin".into());
            }
            let buckets = transversals_by_quadruple(&cube).map_err(|e| e.to_string())?;
            let twins: Vec<u64> = buckets
                .of_class(QuadrupleClass::Twin)
                .map(|(_, c)| c)
                .collect();
            let brindled: Vec<u64> = buckets
                .of_class(QuadrupleClass::Brindled)
                .map(|(_, c)| c)
                .collect();
            let pass = buckets.twin_total() == 64
                && twins.len() == 4
                && twins.iter().all(|&c| c == 16)
                && brindled.len() == 6
                && brindled.iter().all(|&c| c == 32);
            let got = format!(
                "twin total {} over {} quadruples ({}); brindled buckets [{}]",
                buckets.twin_total(),
                twins.len(),
                list(&twins),
                list(&brindled)
            );
            Ok((expected.into(), got, pass))
        })(),
        expected,
    )
}

/// Zero counts happen exactly on the functions whose every plane sum is odd
/// (the sigma-images of the cyclic group, up to affine terms), and the
/// criterion agrees with the search on every function tested.
fn claim_7(ctx: &Ctx) -> Body {
    let expected = "zero iff every plane sum is odd (incl. lambda_Z4); criterion agrees everywhere";
    wrap(
        (|| {
            let z4 = lambda_z4(4);
            let mut tested: Vec<BooleanFn> = vec![z4.clone()];
            let mut rng = ChaCha8Rng::seed_from_u64(0x0007);
            tested.extend((0..1000).map(|_| random::boolean_fn(&mut rng, 4)));
            for odd in [false, true] {
                let space = lambdas_with_plane_parity(4, odd)
                    .expect("n = 4")
                    .expect("nonempty");
                tested.extend(
                    space
                        .iter()
                        .map(|w| BooleanFn::from_index_bits(4, w).expect("n = 4")),
                );
            }
            let (mut zeros, mut disagreements, mut misplaced) = (0, 0, 0);
            for (i, lambda) in tested.iter().enumerate() {
                let cube = gen_semilinear(lambda).expect("n = 4");
                let cube = if i == 0 { ctx.fixture(cube) } else { cube };
                let c = count(&cube)?;
                let criterion = zero_transversal_criterion(lambda).expect("even arity");
                let odd_planes = delta_report(lambda).plane_parity == PlaneParity::AllOdd;
                zeros += (c == 0) as usize;
                disagreements += ((c == 0) != criterion) as usize;
                misplaced += ((c == 0) != odd_planes) as usize;
            }
            let z4_zero = count(&ctx.fixture(gen_semilinear(&z4).expect("n = 4")))? == 0;
            let got = format!(
                "{} functions, {zeros} zero; lambda_Z4 zero: {z4_zero}; criterion mismatches {disagreements}; \
                 zero outside odd-plane class {misplaced}",
                tested.len()
            );
            Ok((
                expected.into(),
                got,
                z4_zero && disagreements == 0 && misplaced == 0,
            ))
        })(),
        expected,
    )
}

fn claim_8(ctx: &Ctx) -> Body {
    let expected = ">= 8^(n-1) on every fixture; semilinear also >= (16^(n-1)+2*8^(n-1))/3";
    wrap(
        (|| {
            let mut failures = Vec::new();
            let mut checked = 0;
            let mut check = |label: String, c: u64, n: usize, semilinear: bool| {
                checked += 1;
                let floor = 8u64.pow(n as u32 - 1) as u128;
                let semi = if semilinear {
                    odd_semilinear_lower_bound(n)
                } else {
                    0
                };
                if (c as u128) < floor.max(semi) {
                    failures.push(format!("{label}: {c}"));
                }
            };
            for n in [3, 5] {
                for kind in [GroupKind::Z4, GroupKind::Z2x2] {
                    let cube = iterated(kind, n);
                    let cube = if n == 3 && kind == GroupKind::Z4 {
                        ctx.fixture(cube)
                    } else {
                        cube
                    };
                    check(format!("{kind:?} n={n}"), count(&cube)?, n, false);
                }
            }
            for w in 0..256 {
                let lambda = BooleanFn::from_index_bits(3, w).expect("n = 3");
                check(
                    format!("lambda {lambda}"),
                    count(&gen_semilinear(&lambda).expect("n = 3"))?,
                    3,
                    true,
                );
            }
            let mut rng = ChaCha8Rng::seed_from_u64(0x0008);
            for _ in 0..10 {
                let lambda = random::boolean_fn(&mut rng, 5);
                check(
                    format!("lambda {lambda}"),
                    count(&gen_semilinear(&lambda).expect("n = 5"))?,
                    5,
                    true,
                );
            }
            for i in 0..50 {
                let n = if i % 2 == 0 { 3 } else { 5 };
                let cube = random::composition(&mut rng, n, 4)
                    .compose()
                    .expect("within scale");
                check(format!("tree {i}"), count(&cube)?, n, false);
            }
            let got = if failures.is_empty() {
                format!("{checked} fixtures, all above")
            } else {
                format!("below floor: {}", failures.join("; "))
            };
            Ok((expected.into(), got, failures.is_empty()))
        })(),
        expected,
    )
}

fn claim_9(ctx: &Ctx) -> Body {
    let expected = "20 splits: lifts verify; T(f) >= T(g)T(h) and >= q!*T(h^a)T(g^a)";
    wrap(
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x0009);
            let (mut lifted, mut bad_lifts, mut bound_failures) = (0u64, 0u64, 0u64);
            for i in 0..20 {
                let n = rng.gen_range(3..=4);
                let spec = random::composition(&mut rng, n, 4);
                let two = TwoLevel::from_spec(&spec).map_err(|e| e.to_string())?;
                let f = spec.compose().expect("within scale");
                let f = if i == 0 { ctx.fixture(f) } else { f };
                let total = count(&f)?;
                let (tg, th) = (transversals(two.outer())?, transversals(two.inner())?);
                if total < (tg.len() * th.len()) as u64 {
                    bound_failures += 1;
                }
                for g in &tg {
                    for h in &th {
                        let t = lift_transversals_product(&two, g, h).map_err(|e| e.to_string())?;
                        lifted += 1;
                        bad_lifts += (verify_transversal(&f, &t) != Ok(true)) as u64;
                    }
                }
                for a in 0..4u8 {
                    let ha = transversals(&two.inner_fiber(a).map_err(|e| e.to_string())?)?;
                    let ga = transversals(&two.outer_fiber(a).map_err(|e| e.to_string())?)?;
                    if total < 24 * (ha.len() * ga.len()) as u64 {
                        bound_failures += 1;
                    }
                    for h in &ha {
                        for g in &ga {
                            let mut distinct = BTreeSet::new();
                            for tau in Permutation::all(4) {
                                let t = lift_transversals_fiber(&two, h, g, &tau, a)
                                    .map_err(|e| e.to_string())?;
                                lifted += 1;
                                bad_lifts += (verify_transversal(&f, &t) != Ok(true)) as u64;
                                distinct.insert(t);
                            }
                            bad_lifts += (distinct.len() != 24) as u64;
                        }
                    }
                }
            }
            let got =
                format!("{lifted} lifts, {bad_lifts} invalid; {bound_failures} bound failures");
            Ok((expected.into(), got, bad_lifts == 0 && bound_failures == 0))
        })(),
        expected,
    )
}

fn claim_10(ctx: &Ctx) -> Body {
    let expected =
        "bound values 96 (n=3,q=4), 9216 (n=5,q=4); every composed fixture meets its bound";
    wrap(
        (|| {
            let b3 = lower_bound_completely_reducible(3, 4, false);
            let b5 = lower_bound_completely_reducible(5, 4, false);
            let mut rng = ChaCha8Rng::seed_from_u64(0x000a);
            let mut failures = Vec::new();
            let mut checked = 0;
            let mut minima = Vec::new();
            for (n, q, trials) in [
                (3, 3, 10),
                (3, 4, 10),
                (3, 5, 5),
                (5, 3, 5),
                (5, 4, 5),
                (4, 4, 10),
            ] {
                let mut min = u64::MAX;
                for t in 0..trials {
                    let spec = random::composition(&mut rng, n, q);
                    let cube = spec.compose().expect("within scale");
                    let cube = if t == 0 && n == 3 && q == 4 {
                        ctx.fixture(cube)
                    } else {
                        cube
                    };
                    // the even case needs an external operation with a transversal
                    let applicable = n % 2 == 1
                        || spec
                            .external_ops()
                            .iter()
                            .any(|op| count(&op.to_hypercube()).unwrap_or(0) > 0);
                    let bound = lower_bound_completely_reducible(n, q, applicable).expect("fits");
                    let c = count(&cube)?;
                    checked += 1;
                    min = min.min(c);
                    if (c as u128) < bound {
                        failures.push(format!("n={n} q={q}: {c} < {bound}"));
                    }
                }
                minima.push(format!("n={n},q={q}: {min}"));
            }
            for cube in [fixtures::layered_z4(), fixtures::layered_mixed()] {
                let c = count(&cube)?;
                checked += 1;
                if (c as u128) < 96 {
                    failures.push(format!("layered cube: {c}"));
                }
            }
            let pass = b3 == Some(96) && b5 == Some(9216) && failures.is_empty();
            let got = format!(
                "bounds {:?}, {:?}; {checked} fixtures, {} below; minima {}",
                b3.unwrap_or(0),
                b5.unwrap_or(0),
                failures.len(),
                minima.join("; ")
            );
            Ok((expected.into(), got, pass))
        })(),
        expected,
    )
}

fn claim_11(ctx: &Ctx) -> Body {
    let expected = format!(
        "256 and {} (frozen), different",
        fixtures::LAYERED_MIXED_TRANSVERSALS
    );
    wrap(
        (|| {
            let first = ctx.fixture(fixtures::layered_z4());
            let second = fixtures::layered_mixed();
            let (a, b) = (count(&first)?, count(&second)?);
            let trees_match = fixtures::layered_z4_spec().compose().ok() == Some(first)
                && fixtures::layered_mixed_spec().compose().ok() == Some(second);
            let pass =
                a == 256 && b == fixtures::LAYERED_MIXED_TRANSVERSALS && a != b && trees_match;
            Ok((
                expected.clone(),
                format!("{a} and {b}; trees rebuild the layers: {trees_match}"),
                pass,
            ))
        })(),
        &expected,
    )
}

fn claim_12(ctx: &Ctx) -> Body {
    let expected = "200 random transforms preserve the count";
    wrap(
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x000c);
            let mut preserved = 0;
            for i in 0..200 {
                let q = rng.gen_range(3..=4);
                let n = rng.gen_range(2..=4);
                let cube = if q == 4 && rng.gen_bool(0.5) {
                    gen_semilinear(&random::boolean_fn(&mut rng, n)).expect("within scale")
                } else {
                    random::composition(&mut rng, n, q)
                        .compose()
                        .expect("within scale")
                };
                let t = random::transform(&mut rng, n, q);
                let image = t.apply(&cube).map_err(|e| e.to_string())?;
                let image = if i == 0 { ctx.fixture(image) } else { image };
                if count(&cube)? == count(&image)? {
                    preserved += 1;
                }
            }
            Ok((
                expected.into(),
                format!("{preserved}/200 preserved"),
                preserved == 200,
            ))
        })(),
        expected,
    )
}

/// At odd arity no function has all brindled sums one and constant-zero
/// sums go with uniform plane parity; at even arity the two views coincide
/// exactly.
fn claim_13(_: &Ctx) -> Body {
    let expected = "n=3,5: no constant-1; n=3: constant-0 iff uniform planes, >= 2 zero-sum; \
                    n=4: constant-1 iff all odd, constant-0 iff all even";
    let mut notes = Vec::new();
    let mut pass = true;

    let (mut c1, mut c0_mismatch, mut min_zero) = (0, 0, u64::MAX);
    for w in 0..256 {
        let r = delta_report(&BooleanFn::from_index_bits(3, w).expect("n = 3"));
        c1 += (r.delta_class == DeltaClass::Constant1) as u32;
        let uniform = r.plane_parity != PlaneParity::Mixed;
        c0_mismatch += ((r.delta_class == DeltaClass::Constant0) != uniform) as u32;
        min_zero = min_zero.min(r.zero_sum_brindled_count);
    }
    pass &= c1 == 0 && c0_mismatch == 0 && min_zero >= 2;
    notes.push(format!(
        "n=3 sweep: {c1} constant-1, {c0_mismatch} mismatches, min zero-sum {min_zero}"
    ));

    let none_at_5 = lambdas_with_constant_delta(5, true)
        .expect("n = 5")
        .is_none();
    pass &= none_at_5;
    notes.push(format!("n=5 constant-1 system inconsistent: {none_at_5}"));

    let mut rng = ChaCha8Rng::seed_from_u64(0x000d);
    let mut mismatches = 0;
    for _ in 0..1000 {
        let r = delta_report(&random::boolean_fn(&mut rng, 4));
        let one =
            (r.delta_class == DeltaClass::Constant1) == (r.plane_parity == PlaneParity::AllOdd);
        let zero =
            (r.delta_class == DeltaClass::Constant0) == (r.plane_parity == PlaneParity::AllEven);
        mismatches += (!one || !zero) as u32;
    }
    let same = |delta: bool| {
        lambdas_with_constant_delta(4, delta).expect("n = 4")
            == lambdas_with_plane_parity(4, delta).expect("n = 4")
    };
    let spaces_equal = same(false) && same(true);
    pass &= mismatches == 0 && spaces_equal;
    notes.push(format!(
        "n=4: {mismatches}/1000 sample mismatches, solution spaces equal: {spaces_equal}"
    ));
    (expected.into(), notes.join("; "), pass)
}

fn body(id: u32, ctx: &Ctx) -> Body {
    match id {
        1 => claim_1(ctx),
        2 => claim_2(ctx),
        3 => claim_3(ctx),
        4 => claim_4(ctx),
        5 => claim_5(ctx),
        6 => claim_6(ctx),
        7 => claim_7(ctx),
        8 => claim_8(ctx),
        9 => claim_9(ctx),
        10 => claim_10(ctx),
        11 => claim_11(ctx),
        12 => claim_12(ctx),
        13 => claim_13(ctx),
        _ => unreachable!("ids are checked by run"),
    }
}

pub fn run_claim(id: u32, inject_fault: Option<u32>) -> Result<ClaimOutcome> {
    let topic = CLAIMS
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Usage(format!("no claim C{id:02}")))?;
    let ctx = Ctx {
        claim: id,
        fault: inject_fault,
    };
    let start = Instant::now();
    let (expected, got, pass) = body(id, &ctx);
    Ok(ClaimOutcome {
        id,
        topic: topic.into(),
        expected,
        got,
        pass,
        ms: start.elapsed().as_millis(),
    })
}

pub fn run(options: &Options) -> Result<VerifyReport> {
    if let Some(f) = options.inject_fault {
        if !FAULT_CAPABLE.contains(&f) {
            return Err(Error::Usage(format!(
                "claim C{f:02} has no fixture to corrupt"
            )));
        }
    }
    let ids: Vec<u32> = if options.only.is_empty() {
        CLAIMS.iter().map(|(i, _)| *i).collect()
    } else {
        let mut ids = options.only.clone();
        ids.sort_unstable();
        ids.dedup();
        ids
    };
    let claims = ids
        .into_iter()
        .map(|id| run_claim(id, options.inject_fault))
        .collect::<Result<_>>()?;
    Ok(VerifyReport { claims })
}
