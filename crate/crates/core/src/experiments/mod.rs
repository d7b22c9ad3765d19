//! Exact enumeration over small `n`, Monte Carlo estimates over played
//! games, and the census of the polytope graph for small `n`.

mod exact;
mod monte_carlo;
mod skeleton;

pub use exact::{
    all_histories, exact_common_edge_expectation, exact_connectivity, exact_connectivity_uniform,
    exact_isolated_probability, MAX_EXACT_N,
};
pub use monte_carlo::{
    common_edge_statistics, connectivity_frequency, dmove_trajectory_stats, estimate_expected_isolations,
    CommonEdgeReport, DMoveReport, EstimateReport,
};
pub use skeleton::{canonical_tours, enumerate_skeleton, SkeletonReport, MAX_SKELETON_N};
