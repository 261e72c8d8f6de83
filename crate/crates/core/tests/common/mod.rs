#![allow(dead_code)]

use dispersion_core::PointSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform(rng: &mut ChaCha8Rng, n: usize, d: usize) -> PointSet<f64> {
    PointSet::new(d, (0..n * d).map(|_| rng.gen::<f64>()).collect()).unwrap()
}

/// Small integer coordinates: lots of tied distances and duplicates.
pub fn lattice_ish(rng: &mut ChaCha8Rng, n: usize, d: usize, side: i64) -> PointSet<f64> {
    PointSet::new(
        d,
        (0..n * d).map(|_| rng.gen_range(0..side) as f64).collect(),
    )
    .unwrap()
}

/// Every squared distance by the definition, independent of the library.
pub fn naive_dist2(p: &PointSet<f64>, i: usize, j: usize) -> f64 {
    let mut s = 0.0;
    for t in 0..p.dim() {
        let d = p.point(i)[t] - p.point(j)[t];
        s += d * d;
    }
    s
}

pub fn naive_min(p: &PointSet<f64>, s: &[usize]) -> f64 {
    let mut m = f64::INFINITY;
    for a in 0..s.len() {
        for b in a + 1..s.len() {
            m = m.min(naive_dist2(p, s[a], s[b]));
        }
    }
    m
}

/// Optimal value by enumerating subsets with a bitmask (n <= 20).
pub fn naive_optimum(p: &PointSet<f64>, k: usize) -> f64 {
    let n = p.len();
    let mut best = f64::NEG_INFINITY;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        best = best.max(naive_min(p, &s));
    }
    best
}
