//! Weighted domino tilings of lattice regions: the profile DP, an enumeration oracle, covering
//! monomials and tiling polynomials, and Kuo condensation on dual graphs.

pub mod domino;
pub mod dp;
pub mod enumerate;
pub mod kuo;
pub mod poly;
pub mod weights;

pub use domino::{Domino, Tiling};
pub use dp::{
    count_tilings, profile_sum, profile_sum_from, weighted_by_table, DpValue, Scaled, ScaledStep, MAX_FRONTIER,
};
pub use enumerate::{
    enumerate_tilings, enumerated_weight_sum, enumerated_weight_sum_map, for_each_tiling, ORACLE_CELL_CAP,
};
pub use kuo::{kuo_check, DualGraph, KuoCheck, KuoVariant};
pub use poly::{
    covering_monomial, covering_monomial_symbolic, covering_set, scaled_weight_sum, tiling_polynomial,
    tiling_polynomial_symbolic, tiling_polynomial_value, weight_sum, weight_sum_rational, weight_sum_symbolic,
    ScaledSum, TilingValue, SYMBOLIC_TILING_CAP,
};
pub use weights::{domino_monomial, domino_weight, CentralTable, WeightMap};

use cminor_regions::{Cell, Point};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TilingError {
    #[error("cells {0:?} and {1:?} are not edge-adjacent")]
    NotAdjacent(Cell, Cell),
    #[error("v at {0:?} is zero")]
    GenericityViolation(Point),
    #[error("{what} exceeds the cap of {cap}")]
    CapExceeded { what: String, cap: u64 },
    #[error("frontier of {0} cells is too wide")]
    FrontierTooWide(usize),
    #[error("numeric operation needs numeric weights")]
    SymbolicWeights,
    #[error("bad matrix: {0}")]
    BadMatrix(String),
    #[error("vertices are not in cyclic order on a face")]
    BadCyclicOrder,
    #[error("vertex classes do not fit the variant: {0}")]
    BadBipartition(String),
}
