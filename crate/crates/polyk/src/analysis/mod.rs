//! Decision procedures: planarity, connectivity, distances, exact
//! independence, and the structural face tests built on top of them.

pub mod connectivity;
pub mod distance;
pub mod independence;
pub mod planarity;
pub mod structure;
pub mod verify;

pub use connectivity::{is_k_connected, KConnectivity};
pub use distance::{
    all_pairs_distances, bfs_distances, diameter, distance_shells, graph_power,
    ShellDecomposition,
};
pub use independence::{independence_number, k_independence_number, max_independent_set};
pub use planarity::{is_planar, planar_embedding};
pub use structure::{
    has_separating_quadrilateral, is_maximal_planar, is_quadrangulation,
    separating_quadrilateral,
};
pub use verify::{certify, is_polyhedral, verify_certificate, CloseRedPair, VerificationReport};
