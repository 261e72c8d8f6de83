//! Point sets and the distance primitives every solver is built on.
//!
//! All comparisons are done on squared distances with exact comparison and
//! index-order tie breaking, so results are deterministic.

use std::cmp::Ordering;

use crate::error::{DispersionError, Result};
use crate::scalar::{cmp_scalar, Scalar};

/// A squared distance extended with `+∞`.
///
/// The minimum pairwise distance of fewer than two points is `Infinite`.
/// `Finite(_) < Infinite` under the derived order.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub enum Dist2<T> {
    Finite(T),
    Infinite,
}

impl<T: Scalar> Dist2<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            Dist2::Finite(v) => Some(v),
            Dist2::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Dist2::Infinite)
    }

    pub fn to_f64(self) -> f64 {
        match self {
            Dist2::Finite(v) => v.to_f64().unwrap_or(f64::NAN),
            Dist2::Infinite => f64::INFINITY,
        }
    }
}

/// `n` points in `dim` dimensions stored row-major in one flat buffer.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet<T> {
    dim: usize,
    coords: Vec<T>,
}

impl<T: Scalar> PointSet<T> {
    pub fn new(dim: usize, coords: Vec<T>) -> Result<Self> {
        if dim == 0 {
            return Err(DispersionError::ZeroDimension);
        }
        if coords.len() % dim != 0 {
            return Err(DispersionError::RaggedCoordinates {
                len: coords.len(),
                dim,
            });
        }
        if let Some(pos) = coords.iter().position(|c| !c.is_finite_value()) {
            return Err(DispersionError::NonFinite(pos));
        }
        Ok(PointSet { dim, coords })
    }

    /// Builds a point set from fixed-size rows.
    pub fn from_points<const D: usize>(points: &[[T; D]]) -> Result<Self> {
        let coords = points.iter().flat_map(|p| p.iter().copied()).collect();
        Self::new(D, coords)
    }

    pub fn empty(dim: usize) -> Result<Self> {
        Self::new(dim, Vec::new())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    #[inline]
    pub fn point(&self, i: usize) -> &[T] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[T]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    /// Squared distance between points `i` and `j`. Panics on a bad index;
    /// use [`dist2`] for the checked form.
    #[inline]
    pub fn sq_dist(&self, i: usize, j: usize) -> T {
        let a = self.point(i);
        let b = self.point(j);
        a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| {
            let d = x - y;
            acc + d * d
        })
    }

    /// Every coordinate multiplied by `factor`.
    pub fn scaled(&self, factor: T) -> Self {
        PointSet {
            dim: self.dim,
            coords: self.coords.iter().map(|&c| c * factor).collect(),
        }
    }

    /// Every point shifted by `offset`.
    pub fn translated(&self, offset: &[T]) -> Result<Self> {
        if offset.len() != self.dim {
            return Err(DispersionError::DimensionMismatch(format!(
                "offset has {} components, points have {}",
                offset.len(),
                self.dim
            )));
        }
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(t, &c)| c + offset[t % self.dim])
            .collect();
        Self::new(self.dim, coords)
    }

    /// The points at `indices`, in that order.
    pub fn subset(&self, indices: &[usize]) -> Result<Self> {
        let n = self.len();
        let mut coords = Vec::with_capacity(indices.len() * self.dim);
        for &i in indices {
            if i >= n {
                return Err(DispersionError::IndexOutOfRange { index: i, len: n });
            }
            coords.extend_from_slice(self.point(i));
        }
        Ok(PointSet {
            dim: self.dim,
            coords,
        })
    }

    fn check_index(&self, i: usize) -> Result<()> {
        let n = self.len();
        if i < n {
            Ok(())
        } else {
            Err(DispersionError::IndexOutOfRange { index: i, len: n })
        }
    }
}

/// A pair of point indices with `i < j` and their squared distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairWitness<T> {
    pub i: usize,
    pub j: usize,
    pub dist2: T,
}

impl<T: Scalar> PairWitness<T> {
    /// Normalizes the index order.
    pub fn new(a: usize, b: usize, dist2: T) -> Self {
        PairWitness {
            i: a.min(b),
            j: a.max(b),
            dist2,
        }
    }

    pub fn of(points: &PointSet<T>, a: usize, b: usize) -> Self {
        Self::new(a, b, points.sq_dist(a, b))
    }
}

pub fn dist2<T: Scalar>(points: &PointSet<T>, i: usize, j: usize) -> Result<T> {
    points.check_index(i)?;
    points.check_index(j)?;
    Ok(points.sq_dist(i, j))
}

/// Minimum squared distance over all unordered pairs of `subset`;
/// `Infinite` for fewer than two indices.
pub fn min_pairwise_dist2<T: Scalar>(points: &PointSet<T>, subset: &[usize]) -> Result<Dist2<T>> {
    let mut seen = vec![false; points.len()];
    for &i in subset {
        points.check_index(i)?;
        if std::mem::replace(&mut seen[i], true) {
            return Err(DispersionError::DuplicateIndex(i));
        }
    }
    Ok(min_pairwise_unchecked(points, subset))
}

pub(crate) fn min_pairwise_unchecked<T: Scalar>(
    points: &PointSet<T>,
    subset: &[usize],
) -> Dist2<T> {
    closest_pair_unchecked(points, subset).map_or(Dist2::Infinite, |w| Dist2::Finite(w.dist2))
}

/// The lexicographically first pair (in `subset` order) attaining the
/// minimum squared distance.
pub(crate) fn closest_pair_unchecked<T: Scalar>(
    points: &PointSet<T>,
    subset: &[usize],
) -> Option<PairWitness<T>> {
    let mut best: Option<(usize, usize, T)> = None;
    for (x, &a) in subset.iter().enumerate() {
        for &b in &subset[x + 1..] {
            let d = points.sq_dist(a, b);
            if best.map_or(true, |(_, _, v)| d < v) {
                best = Some((a, b, d));
            }
        }
    }
    best.map(|(a, b, d)| PairWitness::new(a, b, d))
}

#[inline]
fn cross<T: Scalar>(o: &[T], a: &[T], b: &[T]) -> T {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Vertices of the convex hull in counterclockwise order, starting from the
/// lexicographically smallest point.
///
/// Points lying on hull edges are dropped and coincident points collapse to
/// their lowest index. A collinear input yields its two endpoints.
pub fn convex_hull_2d<T: Scalar>(points: &PointSet<T>) -> Result<Vec<usize>> {
    if points.dim() != 2 {
        return Err(DispersionError::WrongDimension {
            expected: 2,
            actual: points.dim(),
        });
    }
    Ok(hull_of(points, (0..points.len()).collect()))
}

/// Monotone chain over the given indices.
pub(crate) fn hull_of<T: Scalar>(points: &PointSet<T>, mut idx: Vec<usize>) -> Vec<usize> {
    idx.sort_unstable_by(|&a, &b| {
        let (pa, pb) = (points.point(a), points.point(b));
        cmp_scalar(pa[0], pb[0])
            .then_with(|| cmp_scalar(pa[1], pb[1]))
            .then(a.cmp(&b))
    });
    idx.dedup_by(|b, a| points.point(*a) == points.point(*b));
    if idx.len() <= 2 {
        return idx;
    }

    let mut hull: Vec<usize> = Vec::with_capacity(2 * idx.len());
    for &p in &idx {
        while hull.len() >= 2
            && cross(
                points.point(hull[hull.len() - 2]),
                points.point(hull[hull.len() - 1]),
                points.point(p),
            ) <= T::zero()
        {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in idx.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && cross(
                points.point(hull[hull.len() - 2]),
                points.point(hull[hull.len() - 1]),
                points.point(p),
            ) <= T::zero()
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// Larger squared distance wins; equal distances go to the smaller `(i, j)`.
#[inline]
fn better_far<T: Scalar>(cand: &PairWitness<T>, best: &PairWitness<T>) -> bool {
    match cmp_scalar(cand.dist2, best.dist2) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => (cand.i, cand.j) < (best.i, best.j),
    }
}

/// A farthest pair of points.
///
/// In the plane this is a convex hull followed by a rotating-calipers sweep
/// over antipodal vertex pairs; in other dimensions it is an all-pairs scan.
/// Ties go to the lexicographically smallest `(i, j)`.
pub fn diameter<T: Scalar>(points: &PointSet<T>) -> Result<PairWitness<T>> {
    let n = points.len();
    if n < 2 {
        return Err(DispersionError::TooFewPoints { need: 2, got: n });
    }
    let all: Vec<usize> = (0..n).collect();
    Ok(diameter_of(points, &all).expect("at least two points"))
}

/// Diameter of the sub-collection `idx` (any order). `None` if `idx.len() < 2`.
pub(crate) fn diameter_of<T: Scalar>(
    points: &PointSet<T>,
    idx: &[usize],
) -> Option<PairWitness<T>> {
    if idx.len() < 2 {
        return None;
    }
    if points.dim() == 2 {
        Some(calipers_diameter(points, idx))
    } else {
        Some(all_pairs_diameter(points, idx))
    }
}

fn all_pairs_diameter<T: Scalar>(points: &PointSet<T>, idx: &[usize]) -> PairWitness<T> {
    let mut best = PairWitness::of(points, idx[0], idx[1]);
    for (x, &a) in idx.iter().enumerate() {
        for &b in &idx[x + 1..] {
            let cand = PairWitness::of(points, a, b);
            if better_far(&cand, &best) {
                best = cand;
            }
        }
    }
    best
}

fn calipers_diameter<T: Scalar>(points: &PointSet<T>, idx: &[usize]) -> PairWitness<T> {
    let hull = hull_of(points, idx.to_vec());
    match hull.len() {
        // every point coincides; all distances are zero
        1 => {
            let (a, b) = smallest_two(idx);
            return PairWitness::new(a, b, T::zero());
        }
        2 => return PairWitness::of(points, hull[0], hull[1]),
        _ => {}
    }

    let h = hull.len();
    let p = |t: usize| points.point(hull[t % h]);
    let area = |a: usize, b: usize, c: usize| cross(p(a), p(b), p(c));

    let mut best = PairWitness::of(points, hull[0], hull[1]);
    let mut consider = |a: usize, b: usize| {
        let (a, b) = (hull[a % h], hull[b % h]);
        if a != b {
            let cand = PairWitness::of(points, a, b);
            if better_far(&cand, &best) {
                best = cand;
            }
        }
    };

    let mut j = 1usize;
    for i in 0..h {
        let ni = i + 1;
        // advance the antipodal pointer while the triangle area grows
        let mut steps = 0;
        while steps < h && area(i, ni, j + 1) > area(i, ni, j) {
            j += 1;
            steps += 1;
        }
        consider(i, j);
        consider(ni, j);
        // edge parallel to (i, ni): both of its endpoints are antipodal
        if area(i, ni, j + 1) == area(i, ni, j) {
            consider(i, j + 1);
            consider(ni, j + 1);
        }
    }
    best
}

fn smallest_two(idx: &[usize]) -> (usize, usize) {
    let mut a = usize::MAX;
    let mut b = usize::MAX;
    for &i in idx {
        if i < a {
            b = a;
            a = i;
        } else if i < b {
            b = i;
        }
    }
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> PointSet<f64> {
        PointSet::from_points(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]).unwrap()
    }

    #[test]
    fn dist2_examples() {
        let p = PointSet::from_points(&[[0.0, 0.0], [3.0, 4.0]]).unwrap();
        assert_eq!(dist2(&p, 0, 1).unwrap(), 25.0);
        let p = PointSet::from_points(&[[1.0, 1.0], [1.0, 1.0]]).unwrap();
        assert_eq!(dist2(&p, 0, 1).unwrap(), 0.0);
        let p = PointSet::from_points(&[[0.0, 0.0, 0.0], [1.0, 1.0, 1.0]]).unwrap();
        assert_eq!(dist2(&p, 0, 1).unwrap(), 3.0);
        assert_eq!(
            dist2(&p, 0, 2),
            Err(DispersionError::IndexOutOfRange { index: 2, len: 2 })
        );
    }

    #[test]
    fn construction_rejects_bad_buffers() {
        assert!(matches!(
            PointSet::new(2, vec![0.0, 1.0, 2.0]),
            Err(DispersionError::RaggedCoordinates { .. })
        ));
        assert_eq!(
            PointSet::new(2, vec![0.0, f64::NAN]),
            Err(DispersionError::NonFinite(1))
        );
        assert_eq!(
            PointSet::<f64>::new(0, vec![]),
            Err(DispersionError::ZeroDimension)
        );
        assert!(PointSet::<f64>::empty(3).unwrap().is_empty());
    }

    #[test]
    fn min_pairwise_examples() {
        assert_eq!(
            min_pairwise_dist2(&square(), &[0, 1, 2, 3]).unwrap(),
            Dist2::Finite(1.0)
        );
        assert_eq!(
            min_pairwise_dist2(&square(), &[3]).unwrap(),
            Dist2::Infinite
        );
        assert_eq!(min_pairwise_dist2(&square(), &[]).unwrap(), Dist2::Infinite);
        let line =
            PointSet::from_points(&[[0.0, 0.0], [2.0, 0.0], [4.0, 0.0], [5.0, 0.0]]).unwrap();
        assert_eq!(
            min_pairwise_dist2(&line, &[0, 1, 2]).unwrap(),
            Dist2::Finite(4.0)
        );
        assert_eq!(
            min_pairwise_dist2(&line, &[0, 1, 0]),
            Err(DispersionError::DuplicateIndex(0))
        );
        assert!(min_pairwise_dist2(&line, &[9]).is_err());
    }

    #[test]
    fn infinite_sorts_above_finite() {
        assert!(Dist2::Finite(1e300) < Dist2::Infinite);
        assert!(Dist2::Finite(1.0) < Dist2::Finite(2.0));
    }

    #[test]
    fn hull_square_with_center() {
        let p =
            PointSet::from_points(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0], [0.5, 0.5]])
                .unwrap();
        assert_eq!(convex_hull_2d(&p).unwrap(), vec![0, 1, 3, 2]);
    }

    #[test]
    fn hull_degenerate_inputs() {
        let p = PointSet::from_points(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]).unwrap();
        assert_eq!(convex_hull_2d(&p).unwrap(), vec![0, 2]);
        let p = PointSet::from_points(&[[1.0, 1.0], [1.0, 1.0], [1.0, 1.0]]).unwrap();
        assert_eq!(convex_hull_2d(&p).unwrap(), vec![0]);
        let p =
            PointSet::from_points(&[[0.0, 0.0], [2.0, 0.0], [0.0, 0.0], [1.0, 1.0], [2.0, 0.0]])
                .unwrap();
        assert_eq!(convex_hull_2d(&p).unwrap(), vec![0, 1, 3]);
        let p = PointSet::from_points(&[[0.0, 0.0, 0.0]]).unwrap();
        assert!(convex_hull_2d(&p).is_err());
    }

    #[test]
    fn diameter_examples() {
        let p = PointSet::from_points(&[[0.0, 0.0], [3.0, 4.0], [1.0, 0.0]]).unwrap();
        assert_eq!(
            diameter(&p).unwrap(),
            PairWitness {
                i: 0,
                j: 1,
                dist2: 25.0
            }
        );
        let d = diameter(&square()).unwrap();
        assert_eq!((d.i, d.j, d.dist2), (0, 3, 2.0));
        let one = PointSet::from_points(&[[0.0, 0.0]]).unwrap();
        assert_eq!(
            diameter(&one),
            Err(DispersionError::TooFewPoints { need: 2, got: 1 })
        );
    }

    #[test]
    fn diameter_of_coincident_points_is_first_pair() {
        let p = PointSet::from_points(&[[2.0, 2.0], [2.0, 2.0], [2.0, 2.0]]).unwrap();
        assert_eq!(
            diameter(&p).unwrap(),
            PairWitness {
                i: 0,
                j: 1,
                dist2: 0.0
            }
        );
    }

    #[test]
    fn diameter_collinear_uses_endpoints() {
        let p = PointSet::from_points(&[[1.0, 1.0], [0.0, 0.0], [3.0, 3.0], [2.0, 2.0]]).unwrap();
        assert_eq!(
            diameter(&p).unwrap(),
            PairWitness {
                i: 1,
                j: 2,
                dist2: 18.0
            }
        );
    }

    #[test]
    fn diameter_in_three_dimensions() {
        let p = PointSet::from_points(&[[0, 0, 0], [1, 1, 1], [2, 0, 0], [0, 2, 2]]).unwrap();
        assert_eq!(
            diameter(&p).unwrap(),
            PairWitness {
                i: 2,
                j: 3,
                dist2: 12
            }
        );
    }

    #[test]
    fn diameter_ties_pick_smallest_pair() {
        // both diagonals have squared length 8
        let p = PointSet::from_points(&[[2, 2], [0, 0], [0, 2], [2, 0]]).unwrap();
        let d = diameter(&p).unwrap();
        assert_eq!((d.i, d.j, d.dist2), (0, 1, 8));
        let p = PointSet::from_points(&[[0, 2], [2, 0], [2, 2], [0, 0]]).unwrap();
        let d = diameter(&p).unwrap();
        assert_eq!((d.i, d.j, d.dist2), (0, 1, 8));
    }
}
