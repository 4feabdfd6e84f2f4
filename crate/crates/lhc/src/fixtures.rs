//! Shipped test vectors: two ternary order-4 cubes given layer by layer,
//! each with a composition tree that rebuilds it.

use lhc_core::algebra::CompositionSpec;
use lhc_core::LatinHypercube;

use crate::format::parse_lhc;
use crate::sexpr::parse_spec;

pub const LAYERED_Z4_LHC: &str = include_str!("../fixtures/layered_z4.lhc");
pub const LAYERED_MIXED_LHC: &str = include_str!("../fixtures/layered_mixed.lhc");
pub const LAYERED_Z4_SEXP: &str = include_str!("../fixtures/layered_z4.sexp");
pub const LAYERED_MIXED_SEXP: &str = include_str!("../fixtures/layered_mixed.sexp");

/// Transversals of [`layered_mixed`], frozen from the exhaustive search
/// and cross-checked by an independent brute force.
pub const LAYERED_MIXED_TRANSVERSALS: u64 = 96;

/// Minimum transversal counts over all quasigroups of the given arity and
/// order, as reported by external exhaustive computations. Far beyond
/// desk-scale search; kept for reference and never asserted.
pub const EXTERNAL_MINIMA: [(usize, usize, u64); 4] =
    [(2, 5, 859), (2, 6, 7632), (4, 5, 60843), (5, 5, 8096923)];

/// Status attached to [`EXTERNAL_MINIMA`].
pub const EXTERNAL_MINIMA_STATUS: &str = "unverifiable-at-desk-scale";

/// The iterated cyclic group of order 4, in a non-standard labelling.
pub fn layered_z4() -> LatinHypercube {
    parse_lhc(LAYERED_Z4_LHC).expect("shipped fixture parses")
}

/// Cyclic-group outer operation over an inner addition mod 4; composed of
/// cyclic groups but not isotopic to the iterated one.
pub fn layered_mixed() -> LatinHypercube {
    parse_lhc(LAYERED_MIXED_LHC).expect("shipped fixture parses")
}

pub fn layered_z4_spec() -> CompositionSpec {
    parse_spec(LAYERED_Z4_SEXP).expect("shipped fixture parses")
}

pub fn layered_mixed_spec() -> CompositionSpec {
    parse_spec(LAYERED_MIXED_SEXP).expect("shipped fixture parses")
}
