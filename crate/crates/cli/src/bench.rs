//! Empirical scaling: time a solver on growing seeded instances and fit
//! `time ≈ c · n^e` by least squares on `(ln n, ln time)`.

use std::time::Instant;

use serde::Serialize;

use crate::error::{CliError, Result};
use crate::gen::{generate, Distribution, PRNG_NAME};
use crate::solve::{run_points, AlgoChoice, SolveOptions};

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub algo: AlgoChoice,
    pub k: usize,
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub d: usize,
    /// Runs per size; the median is used for the fit.
    pub repeats: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub times_ms: Vec<f64>,
    pub median_ms: f64,
    pub value2: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub algo: String,
    pub k: usize,
    pub d: usize,
    pub seed: u64,
    pub prng: &'static str,
    pub repeats: usize,
    pub rows: Vec<BenchRow>,
    pub fitted_exponent: f64,
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn fit_exponent(samples: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = samples.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2.0
    }
}

pub fn run_bench(opts: &BenchOptions) -> Result<BenchReport> {
    if opts.sizes.len() < 4 {
        return Err(CliError::Usage("bench needs at least 4 sizes".into()));
    }
    if opts.sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage(
            "bench sizes must be strictly increasing".into(),
        ));
    }
    if opts.repeats == 0 {
        return Err(CliError::Usage("bench needs at least one repeat".into()));
    }
    let dist = match opts.d {
        2 => Distribution::UniformSquare,
        3 => Distribution::UniformCube,
        d => {
            return Err(CliError::Usage(format!(
                "bench supports d = 2 or 3, got {d}"
            )))
        }
    };
    let solve = SolveOptions::new(opts.k, opts.algo);

    let mut rows = Vec::with_capacity(opts.sizes.len());
    for &n in &opts.sizes {
        let points = generate(dist, n, opts.seed, Some(opts.d))?;
        let mut times = Vec::with_capacity(opts.repeats);
        let mut value2 = None;
        for _ in 0..opts.repeats {
            let start = Instant::now();
            let result = run_points(&points, &solve)
                .map_err(|e| CliError::Failed(format!("{:?} at n={n}: {e}", opts.algo)))?;
            times.push(start.elapsed().as_secs_f64() * 1e3);
            value2 = result.value2.finite();
        }
        let median_ms = median(&mut times.clone());
        rows.push(BenchRow {
            n,
            times_ms: times,
            median_ms,
            value2,
        });
    }
    let samples: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.n as f64, r.median_ms.max(1e-6)))
        .collect();
    Ok(BenchReport {
        algo: format!("{:?}", opts.algo).to_lowercase(),
        k: opts.k,
        d: opts.d,
        seed: opts.seed,
        prng: PRNG_NAME,
        repeats: opts.repeats,
        rows,
        fitted_exponent: fit_exponent(&samples),
    })
}
