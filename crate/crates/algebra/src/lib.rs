//! Exact arithmetic substrate: rationals, dense matrices with exact determinants,
//! and sparse Laurent polynomials in variables indexed by lattice points.

pub mod laurent;
pub mod matrix;
pub mod rational;

pub use laurent::{laurent_eval, LaurentPoly, Monomial, Point};
pub use matrix::Matrix;
pub use rational::{format_rational, frac, int, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("incompatible matrix shapes")]
    ShapeMismatch,
    #[error("rows have different lengths")]
    Ragged,
    #[error("division by zero at {0}")]
    DivisionByZero(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}
