//! Exact k-dispersion for point sets.
//!
//! [`solve_exact`] guesses the closest pair `(a, b)` of an optimal subset,
//! discards every point closer than `|ab|` to `a` or `b`, and recurses on
//! `k - 2` over what is left. The recursion bottoms out at `k = 2` (the
//! diameter) and `k = 1` (any point, value `+∞`). [`brute_force`] enumerates
//! all `k`-subsets and serves as the reference oracle.

use rayon::prelude::*;

use crate::error::{DispersionError, Result};
use crate::geom::{diameter_of, Dist2, PairWitness, PointSet};
use crate::result::{Algo, DispersionResult, Status};
use crate::scalar::{cmp_scalar, Scalar};

/// Above this many points the brute-force oracle computes distances on the fly.
const DENSE_MATRIX_LIMIT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    /// Worker threads for the outer pair loop; `1` runs inline.
    pub threads: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { threads: 1 }
    }
}

pub(crate) fn check_k(k: usize, n: usize, min: usize) -> Result<()> {
    if k < min || k > n {
        Err(DispersionError::InvalidK { k, n, min })
    } else {
        Ok(())
    }
}

/// Exhaustive search over all `C(n, k)` subsets.
///
/// Returns the lexicographically smallest index list among the maximizers.
pub fn brute_force<T: Scalar>(points: &PointSet<T>, k: usize) -> Result<DispersionResult<T>> {
    let n = points.len();
    check_k(k, n, 1)?;
    if k == 1 {
        return Ok(DispersionResult {
            k,
            indices: vec![0],
            value2: Dist2::Infinite,
            closest_pair: None,
            algo: Algo::BruteForce,
            status: Status::Exact,
        });
    }

    let matrix = if n <= DENSE_MATRIX_LIMIT {
        let mut m = vec![T::zero(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let d = points.sq_dist(i, j);
                m[i * n + j] = d;
                m[j * n + i] = d;
            }
        }
        Some(m)
    } else {
        None
    };
    let mut search = Enumeration {
        points,
        matrix: matrix.as_deref(),
        n,
        k,
        chosen: vec![0; k],
        best: None,
        best_set: Vec::new(),
    };
    search.descend(0, 0, None);

    let value = search.best.expect("k <= n guarantees at least one subset");
    let indices = search.best_set;
    let closest_pair = crate::geom::closest_pair_unchecked(points, &indices);
    Ok(DispersionResult {
        k,
        indices,
        value2: Dist2::Finite(value),
        closest_pair,
        algo: Algo::BruteForce,
        status: Status::Exact,
    })
}

struct Enumeration<'a, T> {
    points: &'a PointSet<T>,
    matrix: Option<&'a [T]>,
    n: usize,
    k: usize,
    chosen: Vec<usize>,
    best: Option<T>,
    best_set: Vec<usize>,
}

impl<T: Scalar> Enumeration<'_, T> {
    #[inline]
    fn d(&self, i: usize, j: usize) -> T {
        match self.matrix {
            Some(m) => m[i * self.n + j],
            None => self.points.sq_dist(i, j),
        }
    }

    /// `running` is the minimum over the first `depth` chosen points (`None` below two).
    fn descend(&mut self, depth: usize, start: usize, running: Option<T>) {
        let last = self.n - (self.k - depth);
        if depth + 1 == self.k {
            for i in start..=last {
                let mut m = running;
                for t in 0..depth {
                    let d = self.d(self.chosen[t], i);
                    if m.map_or(true, |v| d < v) {
                        m = Some(d);
                    }
                }
                let m = m.expect("k >= 2");
                if self.best.map_or(true, |b| m > b) {
                    self.best = Some(m);
                    self.chosen[depth] = i;
                    self.best_set.clear();
                    self.best_set.extend_from_slice(&self.chosen);
                }
            }
            return;
        }
        for i in start..=last {
            let mut m = running;
            for t in 0..depth {
                let d = self.d(self.chosen[t], i);
                if m.map_or(true, |v| d < v) {
                    m = Some(d);
                }
            }
            self.chosen[depth] = i;
            self.descend(depth + 1, i + 1, m);
        }
    }
}

/// Exact k-dispersion by recursive closest-pair guessing, single-threaded.
pub fn solve_exact<T: Scalar>(points: &PointSet<T>, k: usize) -> Result<DispersionResult<T>> {
    solve_exact_with(points, k, &ExactOptions::default())
}

pub fn solve_exact_with<T: Scalar>(
    points: &PointSet<T>,
    k: usize,
    opts: &ExactOptions,
) -> Result<DispersionResult<T>> {
    let n = points.len();
    check_k(k, n, 1)?;
    let all: Vec<usize> = (0..n).collect();

    let found = if k >= 3 && opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| DispersionError::Internal(format!("thread pool: {e}")))?;
        pool.install(|| solve_parallel(points, &all, k))
    } else {
        Recursion::new(points, k).solve(&all, k, None, 0)
    };

    let found = found.ok_or_else(|| {
        DispersionError::Internal(format!("no candidate pair accepted for k={k}, n={n}"))
    })?;
    Ok(found.into_result(k))
}

struct Found<T> {
    indices: Vec<usize>,
    value2: Dist2<T>,
    witness: Option<PairWitness<T>>,
}

impl<T: Scalar> Found<T> {
    fn into_result(mut self, k: usize) -> DispersionResult<T> {
        self.indices.sort_unstable();
        DispersionResult {
            k,
            indices: self.indices,
            value2: self.value2,
            closest_pair: self.witness,
            algo: Algo::Exact,
            status: Status::Exact,
        }
    }
}

/// Candidate pairs `(a, b, |ab|²)` in descending distance, ties by position.
fn sorted_pairs<T: Scalar>(points: &PointSet<T>, idx: &[usize], out: &mut Vec<(usize, usize, T)>) {
    out.clear();
    for (x, &a) in idx.iter().enumerate() {
        for &b in &idx[x + 1..] {
            out.push((a, b, points.sq_dist(a, b)));
        }
    }
    out.sort_by(|p, q| cmp_scalar(q.2, p.2).then((p.0, p.1).cmp(&(q.0, q.1))));
}

fn solve_parallel<T: Scalar>(points: &PointSet<T>, all: &[usize], k: usize) -> Option<Found<T>> {
    let mut pairs = Vec::new();
    sorted_pairs(points, all, &mut pairs);
    pairs
        .par_iter()
        .map_init(
            || Recursion::new(points, k),
            |rec, &(a, b, x2)| rec.try_pair(all, k, a, b, x2, 0),
        )
        .find_first(Option::is_some)
        .flatten()
}

/// Per-depth scratch buffers, reused across the whole pair loop.
struct Recursion<'a, T> {
    points: &'a PointSet<T>,
    survivors: Vec<Vec<usize>>,
    pairs: Vec<Vec<(usize, usize, T)>>,
}

impl<'a, T: Scalar> Recursion<'a, T> {
    fn new(points: &'a PointSet<T>, k: usize) -> Self {
        let depth = k / 2 + 1;
        Recursion {
            points,
            survivors: (0..depth).map(|_| Vec::new()).collect(),
            pairs: (0..depth).map(|_| Vec::new()).collect(),
        }
    }

    /// Best `k`-subset of `idx` whose value is at least `floor`, if any.
    fn solve(
        &mut self,
        idx: &[usize],
        k: usize,
        floor: Option<T>,
        depth: usize,
    ) -> Option<Found<T>> {
        match k {
            0 => Some(Found {
                indices: Vec::new(),
                value2: Dist2::Infinite,
                witness: None,
            }),
            1 => idx.first().map(|&i| Found {
                indices: vec![i],
                value2: Dist2::Infinite,
                witness: None,
            }),
            2 => {
                let w = diameter_of(self.points, idx)?;
                if floor.is_some_and(|f| w.dist2 < f) {
                    return None;
                }
                Some(Found {
                    indices: vec![w.i, w.j],
                    value2: Dist2::Finite(w.dist2),
                    witness: Some(w),
                })
            }
            _ => {
                let mut pairs = std::mem::take(&mut self.pairs[depth]);
                sorted_pairs(self.points, idx, &mut pairs);
                let mut found = None;
                for &(a, b, x2) in &pairs {
                    // pairs are sorted, so nothing later can reach the floor
                    if floor.is_some_and(|f| x2 < f) {
                        break;
                    }
                    found = self.try_pair(idx, k, a, b, x2, depth);
                    // first acceptance in descending order is the best this level can do
                    if found.is_some() {
                        break;
                    }
                }
                self.pairs[depth] = pairs;
                found
            }
        }
    }

    /// Takes `(a, b)` as the closest pair and completes it with a `(k-2)`-subset
    /// of the points at distance at least `|ab|` from both.
    fn try_pair(
        &mut self,
        idx: &[usize],
        k: usize,
        a: usize,
        b: usize,
        x2: T,
        depth: usize,
    ) -> Option<Found<T>> {
        let points = self.points;
        let mut survivors = std::mem::take(&mut self.survivors[depth]);
        survivors.clear();
        // strict filter: points at exactly |ab| stay; a and b are excluded even when |ab| = 0
        survivors.extend(idx.iter().copied().filter(|&p| {
            p != a && p != b && points.sq_dist(p, a) >= x2 && points.sq_dist(p, b) >= x2
        }));

        let result = if survivors.len() < k - 2 {
            None
        } else {
            self.solve(&survivors, k - 2, Some(x2), depth + 1)
                .and_then(|sub| {
                    if sub.value2 < Dist2::Finite(x2) {
                        return None;
                    }
                    let mut indices = sub.indices;
                    indices.push(a);
                    indices.push(b);
                    Some(Found {
                        indices,
                        value2: Dist2::Finite(x2),
                        witness: Some(PairWitness::new(a, b, x2)),
                    })
                })
        };
        self.survivors[depth] = survivors;
        result
    }
}
