//! File formats, parallel counting, classification reports and the
//! reproduction harness behind the `lhc` binary. The combinatorics live in
//! [`lhc_core`].

pub mod classify;
mod error;
pub mod fixtures;
pub mod format;
pub mod parallel;
pub mod random;
pub mod sexpr;
pub mod verify;

pub use error::{Error, ParseError, Result};
pub use lhc_core;
