//! Latin hypercubes as Cayley tables of multiary quasigroups.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`hypercube`]: the flat big-endian representation, latin validation and
//!   the graph (MDS code) view of a hypercube.
//! * [`algebra`]: iterated groups, compositions of binary quasigroups,
//!   isotopies and parastrophes, reducibility tests and the constructions
//!   that lift transversals of components to transversals of a composition.
//! * [`semilinear`]: order-4 quasigroups driven by a Boolean orientation
//!   function, the quadruple census and the closed-form transversal count.
//! * [`transversal`]: the exact backtracking counter and enumerator that
//!   serves as the oracle for everything else.
//!
//! IO, file formats and the command-line tool live in the `lhc` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
mod error;
pub mod gf2;
pub mod hypercube;
pub mod semilinear;
pub mod transversal;

pub use error::{Error, Result};
pub use hypercube::{LatinHypercube, LineRef};
pub use semilinear::BooleanFn;
pub use transversal::{SearchStats, Transversal};
