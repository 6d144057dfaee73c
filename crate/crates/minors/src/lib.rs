//! Minors of an `n x n` matrix whose indices sit on a circle: circular, contiguous, central and
//! semicontiguous minors, the offset attaching a contiguous minor to a central one, and exact
//! checks of Dodgson condensation, the jaw move and the semicontiguous recurrence.

pub mod circular;
pub mod condensation;
pub mod offset;
pub mod semicontig;

pub use circular::{
    central_indices, central_minor, circular_minor, contiguous_minor, idx, in_ccw_order, minor_on,
    small_central_minors, small_central_params, CircularPair,
};
pub use condensation::{dodgson_check, jaw_move_check, recurrence_check, IdentityCheck};
pub use offset::{central_offset, offset_preimage, SignedOffset, ZeroSign};
pub use semicontig::{normalize_sm_spec, sm_index_sets, sm_minor, spec_offset, SemiContigSpec, Side};

use cminor_algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MinorError {
    #[error("not a circular pair: {0}")]
    BadPair(String),
    #[error("minor size {y} exceeds n={n}")]
    BadSize { y: usize, n: usize },
    #[error("invalid semicontiguous spec: {0}")]
    BadSpec(String),
    #[error("cannot normalize spec {0}")]
    UnnormalizableSpec(String),
    #[error("bad index order: {0}")]
    BadOrder(String),
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
