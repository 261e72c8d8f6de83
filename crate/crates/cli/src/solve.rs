//! Solver dispatch shared by the binary and the tests.

use std::time::Instant;

use dispersion_core::{
    brute_force,
    clique::{solve_graph_dispersion_with, solve_point_dispersion_with},
    greedy, lattice_approx, solve_exact_with, CliqueConfig, DispersionResult, ExactOptions,
    LatticeConfig, PointSet, Status, WeightedCompleteGraph,
};
use serde_json::json;

use crate::error::{CliError, Result};
use crate::report::RunReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum AlgoChoice {
    Exact,
    Brute,
    Clique,
    Greedy,
    Lattice,
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub k: usize,
    pub algo: AlgoChoice,
    pub threads: usize,
    /// Run greedy when the lattice scheme fails.
    pub fallback: bool,
    pub shrink: f64,
    pub radius_fraction: f64,
    pub max_part_cliques: usize,
}

impl SolveOptions {
    pub fn new(k: usize, algo: AlgoChoice) -> Self {
        let lattice = LatticeConfig::<f64>::new(k);
        SolveOptions {
            k,
            algo,
            threads: 1,
            fallback: false,
            shrink: lattice.shrink,
            radius_fraction: lattice.radius_fraction,
            max_part_cliques: CliqueConfig::default().max_part_cliques,
        }
    }

    fn lattice(&self) -> LatticeConfig<f64> {
        LatticeConfig::new(self.k)
            .with_shrink(self.shrink)
            .with_radius_fraction(self.radius_fraction)
    }

    fn clique(&self) -> CliqueConfig {
        CliqueConfig {
            max_part_cliques: self.max_part_cliques,
            ..CliqueConfig::default()
        }
    }

    fn config_json(&self, fallback_used: bool) -> serde_json::Value {
        json!({
            "threads": self.threads,
            "fallback": self.fallback,
            "fallback_used": fallback_used,
            "shrink": self.shrink,
            "radius_fraction": self.radius_fraction,
            "max_part_cliques": self.max_part_cliques,
        })
    }
}

pub fn run_points(points: &PointSet<f64>, opts: &SolveOptions) -> Result<DispersionResult<f64>> {
    let k = opts.k;
    Ok(match opts.algo {
        AlgoChoice::Exact => solve_exact_with(
            points,
            k,
            &ExactOptions {
                threads: opts.threads.max(1),
            },
        )?,
        AlgoChoice::Brute => brute_force(points, k)?,
        AlgoChoice::Clique => solve_point_dispersion_with(points, k, &opts.clique())?,
        AlgoChoice::Greedy => greedy(points, k)?,
        AlgoChoice::Lattice => lattice_approx(points, &opts.lattice())?,
    })
}

/// Solves a point instance. A failed lattice run is reported, not raised;
/// the caller maps `status == "failed"` to exit code 1.
pub fn solve_points(points: &PointSet<f64>, opts: &SolveOptions) -> Result<RunReport> {
    let start = Instant::now();
    let mut result = run_points(points, opts)?;
    let mut fallback_used = false;
    if result.status == Status::Failed && opts.fallback {
        result = greedy(points, opts.k)?;
        fallback_used = true;
    }
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut report = RunReport::from_points(&result, points.len(), points.dim(), elapsed_ms);
    report.config = opts.config_json(fallback_used);
    Ok(report)
}

pub fn solve_graph(graph: &WeightedCompleteGraph<f64>, opts: &SolveOptions) -> Result<RunReport> {
    if opts.algo != AlgoChoice::Clique {
        return Err(CliError::Usage(
            "graph inputs support only --algo clique".into(),
        ));
    }
    let start = Instant::now();
    let result = solve_graph_dispersion_with(graph, opts.k, &opts.clique())?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut report = RunReport::from_graph(&result, graph.n(), elapsed_ms);
    report.config = opts.config_json(false);
    Ok(report)
}
