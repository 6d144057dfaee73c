//! Circular planar electrical networks: exact response matrices by Schur complement, and
//! well-connectivity by the small-central-minor criterion and by a disjoint-paths oracle.

pub mod network;
pub mod response;
pub mod wellconnected;

pub use network::{edge_subsets, ladder, wheel, Edge, Network, Template};
pub use response::{response_matrix, ResponseMatrix};
pub use wellconnected::{
    disjoint_paths, noninterlaced_minors, noninterlaced_pairs, normalized_minor, well_connected_by_minors,
    well_connected_by_paths, MinorTest, PATHS_NODE_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NetworkError {
    #[error("invalid network: {0}")]
    Invalid(String),
    #[error("interior Kirchhoff block is singular")]
    SingularInterior,
    #[error("{n} nodes exceed the path-oracle cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
}
