//! Closed-form bounds for the lattice scheme.
//!
//! Packing `k` disjoint disks of radius `x` into `[-x, 1 + x]²` at
//! hexagonal density bounds the optimum, and the lattice spacing bounds
//! what the scheme achieves. Both scale as `1 / √k`.

use std::f64::consts::PI;

use crate::error::{DispersionError, Result};

pub const DEFAULT_SHRINK: f64 = 0.995;
pub const DEFAULT_RADIUS_FRACTION: f64 = 1.0 / 240.0;
/// Slack absorbed by the simplified upper bound.
pub const SIMPLIFIED_SLACK: f64 = 1.002;
/// Smallest `k` for which the simplified upper bound is valid.
pub const SIMPLIFIED_MIN_K: usize = 300_000;

fn check_shrink(shrink: f64) -> Result<()> {
    if shrink > 0.0 && shrink < 1.0 {
        Ok(())
    } else {
        Err(DispersionError::Config(format!(
            "shrink must lie in (0, 1), got {shrink}"
        )))
    }
}

/// Half the lattice spacing: `√shrink · (4/27)^{1/4} / √k`.
pub fn lattice_y(k: usize, shrink: f64) -> Result<f64> {
    check_shrink(shrink)?;
    if k == 0 {
        return Err(DispersionError::Config("k must be positive".into()));
    }
    Ok(shrink.sqrt() * (4.0f64 / 27.0).powf(0.25) / (k as f64).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptUpperBound {
    /// `2 / (12^{1/4} √k − 2)`, valid for every `k >= 2`.
    pub packing: f64,
    /// `2 · 1.002 / (12^{1/4} √k)`.
    pub simplified: f64,
    /// Whether `simplified` is a valid bound (`k >= 3·10⁵`).
    pub simplified_valid: bool,
}

/// Upper bound on the optimal max-min distance for any `k` points in the unit square.
pub fn opt_upper_bound(k: usize) -> Result<OptUpperBound> {
    if k < 2 {
        return Err(DispersionError::Config(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let root = 12f64.powf(0.25) * (k as f64).sqrt();
    Ok(OptUpperBound {
        packing: 2.0 / (root - 2.0),
        simplified: 2.0 * SIMPLIFIED_SLACK / root,
        simplified_valid: k >= SIMPLIFIED_MIN_K,
    })
}

/// Guaranteed minimum distance of a successful lattice run:
/// `shrink^{3/2} · √3 · (4/27)^{1/4} / √k`.
pub fn alg_lower_bound(k: usize, shrink: f64) -> Result<f64> {
    Ok(shrink * 3f64.sqrt() * lattice_y(k, shrink)?)
}

/// `shrink^{3/2} / 1.002`: the approximation ratio implied by the two bounds.
pub fn ratio_guarantee(shrink: f64) -> Result<f64> {
    check_shrink(shrink)?;
    Ok(shrink.powf(1.5) / SIMPLIFIED_SLACK)
}

/// Union bound on the chance that one of `k` fixed disks of radius
/// `radius_fraction · y` receives none of `n` uniform points:
/// `k · (1 − π r²)^n`.
pub fn union_failure_bound(n: usize, k: usize, radius_fraction: f64, shrink: f64) -> Result<f64> {
    let r = radius_fraction * lattice_y(k, shrink)?;
    let area = PI * r * r;
    Ok(k as f64 * ((n as f64) * (-area).ln_1p()).exp())
}
