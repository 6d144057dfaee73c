//! Lattice regions: Aztec diamonds and rectangles, truncated diamonds, L-sums, zigzag trimming
//! and the Q-region families, together with covering points and simple renderers.

pub mod q;
pub mod region;
pub mod render;
pub mod shapes;

pub use q::{build_q, QParams, QType};
pub use region::{covering_points, covering_points_in_strip, Cell, Point, Region};
pub use shapes::{
    build_aztec_diamond, build_aztec_rectangle, build_tad, l_sum, trim_below_path, DiamondParams, Extension, LSumShape,
    ZigzagPath,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegionError {
    #[error("diamonds neither overlap nor touch")]
    DisjointDiamonds,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("an empty region needs an anchor")]
    MissingAnchor,
}
