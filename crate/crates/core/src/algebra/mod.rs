//! Constructors and transforms on quasigroups.

mod binary;
mod compose;
mod lift;
mod permutation;
mod reduce;
mod transform;

pub use binary::{gen_iterated_group, BinaryOp, GroupKind};
pub use compose::{CompositionSpec, Expr};
pub use lift::{
    lift_transversals_fiber, lift_transversals_product, lower_bound_completely_reducible,
};
pub use permutation::Permutation;
pub use reduce::{
    factor_on_subset, is_reducible, reducibility_witness, ReducibilityWitness, TwoLevel,
};
pub use transform::{apply_isotopy, apply_parastrophe, TransformSpec};
