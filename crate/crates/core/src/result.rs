use std::fmt;

use crate::geom::{Dist2, PairWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algo {
    /// Recursive pair-guessing solver.
    Exact,
    /// Exhaustive subset enumeration.
    BruteForce,
    /// Threshold search with k-clique detection.
    Clique,
    Greedy,
    Lattice,
}

impl Algo {
    pub fn as_str(self) -> &'static str {
        match self {
            Algo::Exact => "exact",
            Algo::BruteForce => "brute",
            Algo::Clique => "clique",
            Algo::Greedy => "greedy",
            Algo::Lattice => "lattice",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Exact,
    Approximate,
    /// The solver could not produce `k` points (lattice with too few occupied disks).
    Failed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::Approximate => "approximate",
            Status::Failed => "failed",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A selected subset and its objective value.
///
/// `value2` is the minimum squared pairwise distance over `indices` for
/// point inputs, or the minimum edge weight for abstract graphs. Unless the
/// status is `Failed`, `indices` holds exactly `k` sorted, distinct entries.
#[derive(Debug, Clone, PartialEq)]
pub struct DispersionResult<T> {
    pub k: usize,
    pub indices: Vec<usize>,
    pub value2: Dist2<T>,
    pub closest_pair: Option<PairWitness<T>>,
    pub algo: Algo,
    pub status: Status,
}
