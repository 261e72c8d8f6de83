//! Approximation algorithms: farthest-point greedy and the triangular
//! lattice scheme for uniformly random points in the unit square.

pub mod bounds;
mod greedy;
pub mod lattice;

pub use bounds::{
    alg_lower_bound, lattice_y, opt_upper_bound, ratio_guarantee, union_failure_bound,
    OptUpperBound,
};
pub use greedy::greedy;
pub use lattice::{
    assign_to_disk, build_lattice, lattice_approx, lattice_approx_stream, LatticeConfig,
    LatticeState,
};
