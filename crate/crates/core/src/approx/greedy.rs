use crate::error::Result;
use crate::exact::check_k;
use crate::geom::{closest_pair_unchecked, diameter, Dist2, PointSet};
use crate::result::{Algo, DispersionResult, Status};
use crate::scalar::Scalar;

/// Farthest-point greedy seeded with a diameter pair.
///
/// Each step adds the point whose distance to the selected set is largest
/// (lowest index on ties). On metric inputs the result is at least half the
/// optimal distance, i.e. `value2 >= opt2 / 4`.
pub fn greedy<T: Scalar>(points: &PointSet<T>, k: usize) -> Result<DispersionResult<T>> {
    let n = points.len();
    check_k(k, n, 2)?;
    let seed = diameter(points)?;

    let mut selected = vec![seed.i, seed.j];
    let mut taken = vec![false; n];
    taken[seed.i] = true;
    taken[seed.j] = true;
    let mut nearest: Vec<T> = (0..n)
        .map(|p| {
            let (a, b) = (points.sq_dist(p, seed.i), points.sq_dist(p, seed.j));
            if b < a {
                b
            } else {
                a
            }
        })
        .collect();

    while selected.len() < k {
        let mut pick: Option<usize> = None;
        for p in (0..n).filter(|&p| !taken[p]) {
            if pick.map_or(true, |q| nearest[p] > nearest[q]) {
                pick = Some(p);
            }
        }
        let p = pick.expect("k <= n leaves a free point");
        taken[p] = true;
        selected.push(p);
        for (q, slot) in nearest.iter_mut().enumerate() {
            let d = points.sq_dist(p, q);
            if d < *slot {
                *slot = d;
            }
        }
    }

    selected.sort_unstable();
    let closest_pair = closest_pair_unchecked(points, &selected);
    Ok(DispersionResult {
        k,
        value2: closest_pair.map_or(Dist2::Infinite, |w| Dist2::Finite(w.dist2)),
        indices: selected,
        closest_pair,
        algo: Algo::Greedy,
        status: Status::Approximate,
    })
}
