//! Max-min k-dispersion: choose `k` of `n` points (or graph vertices) so
//! that the smallest pairwise distance (edge weight) among them is as large
//! as possible.
//!
//! Solvers:
//! - [`solve_exact`]: recursive closest-pair guessing, `O(n^{k-1} log n)` in the plane for even `k`.
//! - [`brute_force`]: exhaustive enumeration, used as a reference.
//! - [`solve_graph_dispersion`]: threshold binary search with k-clique detection on weighted graphs.
//! - [`greedy`]: farthest-point heuristic with a factor-2 guarantee.
//! - [`lattice_approx`]: one-pass triangular lattice scheme for uniform points in the unit square.
//!
//! Everything is generic over the coordinate [`Scalar`]; the aliases below
//! cover the common `f64` case.

pub mod approx;
pub mod bitset;
pub mod clique;
mod error;
pub mod exact;
pub mod geom;
mod result;
mod scalar;

pub use approx::{
    alg_lower_bound, assign_to_disk, build_lattice, greedy, lattice_approx, lattice_approx_stream,
    opt_upper_bound, LatticeConfig, LatticeState, OptUpperBound,
};
pub use bitset::{bool_matrix_multiply, BitMatrix};
pub use clique::{
    build_threshold_graph, find_k_clique, has_k_clique, solve_graph_dispersion,
    solve_point_dispersion, CliqueConfig, ThresholdGraph, WeightedCompleteGraph,
};
pub use error::{DispersionError, Result};
pub use exact::{brute_force, solve_exact, solve_exact_with, ExactOptions};
pub use geom::{convex_hull_2d, diameter, dist2, min_pairwise_dist2, Dist2, PairWitness, PointSet};
pub use result::{Algo, DispersionResult, Status};
pub use scalar::Scalar;

pub type PointSet64 = PointSet<f64>;
pub type PointSet32 = PointSet<f32>;
/// Integer coordinates; squared distances are exact until they overflow.
pub type IntPointSet = PointSet<i64>;
pub type DispersionResult64 = DispersionResult<f64>;
pub type WeightedGraph64 = WeightedCompleteGraph<f64>;
pub type PairWitness64 = PairWitness<f64>;
pub type LatticeConfig64 = LatticeConfig<f64>;
pub type LatticeState64 = LatticeState<f64>;
