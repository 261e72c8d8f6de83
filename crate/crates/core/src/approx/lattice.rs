//! Linear-time lattice scheme for uniformly random points in `[0, 1]²`.
//!
//! A triangular lattice with spacing `s = √3·y` is laid over the square
//! `[y/2, 1 − y/2]²`, anchored at its lower-left corner with horizontal
//! rows. Each retained lattice point carries a small disk of radius `r`.
//! Points are streamed once; the first point landing in a disk represents
//! it, and the first `k` occupied disks in row-major order form the output.
//! Any two representatives are at least `s − 2r` apart.

use num_traits::Float;

use crate::approx::bounds::{DEFAULT_RADIUS_FRACTION, DEFAULT_SHRINK};
use crate::error::{DispersionError, Result};
use crate::geom::{Dist2, PairWitness, PointSet};
use crate::result::{Algo, DispersionResult, Status};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeConfig<F> {
    pub k: usize,
    pub shrink: F,
    pub radius_fraction: F,
}

impl<F: Float + Scalar> LatticeConfig<F> {
    /// Default constants: shrink 0.995, disk radius `y / 240`.
    pub fn new(k: usize) -> Self {
        LatticeConfig {
            k,
            shrink: F::from(DEFAULT_SHRINK).expect("representable"),
            radius_fraction: F::from(DEFAULT_RADIUS_FRACTION).expect("representable"),
        }
    }

    pub fn with_shrink(mut self, shrink: F) -> Self {
        self.shrink = shrink;
        self
    }

    pub fn with_radius_fraction(mut self, radius_fraction: F) -> Self {
        self.radius_fraction = radius_fraction;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.k < 2 {
            return Err(DispersionError::Config(format!(
                "k must be at least 2, got {}",
                self.k
            )));
        }
        if !(self.shrink > F::zero() && self.shrink < F::one()) {
            return Err(DispersionError::Config(format!(
                "shrink must lie in (0, 1), got {}",
                self.shrink
            )));
        }
        let half = F::from(0.5).expect("representable");
        if !(self.radius_fraction > F::zero() && self.radius_fraction <= half) {
            return Err(DispersionError::Config(format!(
                "radius_fraction must lie in (0, 1/2], got {}",
                self.radius_fraction
            )));
        }
        Ok(())
    }

    /// `√shrink · (4/27)^{1/4} / √k`; the covering radius of the lattice.
    pub fn y(&self) -> F {
        let c = F::from(4.0 / 27.0)
            .expect("representable")
            .powf(F::from(0.25).expect("representable"));
        self.shrink.sqrt() * c / F::from(self.k).expect("representable").sqrt()
    }

    /// Nearest-neighbour distance of the lattice, `√3·y`.
    pub fn spacing(&self) -> F {
        F::from(3.0).expect("representable").sqrt() * self.y()
    }

    pub fn radius(&self) -> F {
        self.radius_fraction * self.y()
    }

    /// Guaranteed separation of two representatives, `s − 2r`.
    pub fn separation(&self) -> F {
        self.spacing() - (self.radius() + self.radius())
    }
}

#[derive(Debug, Clone, Copy)]
struct Row {
    start: usize,
    count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Occupant<F> {
    index: usize,
    at: [F; 2],
}

/// Retained lattice points and the disk occupancy table.
#[derive(Debug, Clone)]
pub struct LatticeState<F> {
    y: F,
    spacing: F,
    row_height: F,
    radius: F,
    rows: Vec<Row>,
    centers: Vec<[F; 2]>,
    occupancy: Vec<Option<Occupant<F>>>,
    leftover_count: usize,
    seen: usize,
}

impl<F: Float + Scalar> LatticeState<F> {
    /// Centers in row-major construction order.
    pub fn lattice_points(&self) -> &[[F; 2]] {
        &self.centers
    }

    pub fn m(&self) -> usize {
        self.centers.len()
    }

    pub fn y(&self) -> F {
        self.y
    }

    pub fn spacing(&self) -> F {
        self.spacing
    }

    pub fn radius(&self) -> F {
        self.radius
    }

    /// Lower and upper bound of the shrunken square `[y/2, 1 − y/2]`.
    pub fn inner_bounds(&self) -> (F, F) {
        let lo = self.y / F::from(2.0).expect("representable");
        (lo, F::one() - lo)
    }

    /// Index of the first point assigned to each disk.
    pub fn occupancy(&self) -> impl Iterator<Item = Option<usize>> + '_ {
        self.occupancy.iter().map(|o| o.map(|o| o.index))
    }

    pub fn occupied_count(&self) -> usize {
        self.occupancy.iter().filter(|o| o.is_some()).count()
    }

    pub fn leftover_count(&self) -> usize {
        self.leftover_count
    }

    /// Lattice point `(row, column)` of the unbounded lattice.
    fn center(&self, q: usize, p: usize) -> [F; 2] {
        let lo = self.y / F::from(2.0).expect("representable");
        let offset = if q % 2 == 1 {
            self.spacing / F::from(2.0).expect("representable")
        } else {
            F::zero()
        };
        let q = F::from(q).expect("representable");
        let p = F::from(p).expect("representable");
        [lo + offset + p * self.spacing, lo + q * self.row_height]
    }

    /// The disk containing `point`, if any; no domain check.
    pub(crate) fn locate(&self, point: [F; 2]) -> Option<usize> {
        let (lo, _) = self.inner_bounds();
        let q = ((point[1] - lo) / self.row_height).round();
        if q < F::zero() {
            return None;
        }
        let q = q.to_usize()?;
        let row = self.rows.get(q)?;
        let offset = if q % 2 == 1 {
            self.spacing / F::from(2.0).expect("representable")
        } else {
            F::zero()
        };
        let p = ((point[0] - lo - offset) / self.spacing).round();
        if p < F::zero() {
            return None;
        }
        let p = p.to_usize()?;
        if p >= row.count {
            return None;
        }
        let c = self.centers[row.start + p];
        let (dx, dy) = (point[0] - c[0], point[1] - c[1]);
        (dx * dx + dy * dy <= self.radius * self.radius).then_some(row.start + p)
    }

    fn distribute(&mut self, index: usize, point: [F; 2]) {
        self.seen += 1;
        match self.locate(point) {
            Some(c) => {
                if self.occupancy[c].is_none() {
                    self.occupancy[c] = Some(Occupant { index, at: point });
                }
            }
            None => self.leftover_count += 1,
        }
    }

    /// `(row, column)` of every center, parallel to `lattice_points`.
    fn grid_positions(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(q, row)| (0..row.count).map(move |p| (q, p)))
            .collect()
    }

    fn center_index(&self, q: usize, p: usize) -> Option<usize> {
        let row = self.rows.get(q)?;
        (p < row.count).then_some(row.start + p)
    }
}

/// Lays out the lattice and keeps the points inside `[y/2, 1 − y/2]²`.
pub fn build_lattice<F: Float + Scalar>(cfg: &LatticeConfig<F>) -> Result<LatticeState<F>> {
    cfg.validate()?;
    let y = cfg.y();
    let half = F::from(0.5).expect("representable");
    if y >= half {
        return Err(DispersionError::Config(format!(
            "lattice parameter y = {y} leaves no inner square"
        )));
    }
    let mut state = LatticeState {
        y,
        spacing: cfg.spacing(),
        row_height: F::from(1.5).expect("representable") * y,
        radius: cfg.radius(),
        rows: Vec::new(),
        centers: Vec::new(),
        occupancy: Vec::new(),
        leftover_count: 0,
        seen: 0,
    };
    let (lo, hi) = state.inner_bounds();
    for q in 0.. {
        if state.center(q, 0)[1] > hi {
            break;
        }
        let start = state.centers.len();
        for p in 0.. {
            let c = state.center(q, p);
            if c[0] > hi {
                break;
            }
            debug_assert!(c[0] >= lo && c[1] >= lo);
            state.centers.push(c);
        }
        state.rows.push(Row {
            start,
            count: state.centers.len() - start,
        });
    }
    state.occupancy = vec![None; state.centers.len()];
    Ok(state)
}

fn in_unit_square<F: Float>(point: [F; 2]) -> bool {
    point.iter().all(|&c| c >= F::zero() && c <= F::one())
}

fn out_of_domain<F: Float>(point: [F; 2]) -> DispersionError {
    DispersionError::OutOfDomain {
        x: point[0].to_f64().unwrap_or(f64::NAN),
        y: point[1].to_f64().unwrap_or(f64::NAN),
    }
}

/// Disk (center index) containing `point`, or `None` for a leftover point.
pub fn assign_to_disk<F: Float + Scalar>(
    point: [F; 2],
    state: &LatticeState<F>,
) -> Result<Option<usize>> {
    if !in_unit_square(point) {
        return Err(out_of_domain(point));
    }
    Ok(state.locate(point))
}

/// Runs the lattice scheme over a point set in the unit square.
pub fn lattice_approx<F: Float + Scalar>(
    points: &PointSet<F>,
    cfg: &LatticeConfig<F>,
) -> Result<DispersionResult<F>> {
    if points.dim() != 2 {
        return Err(DispersionError::WrongDimension {
            expected: 2,
            actual: points.dim(),
        });
    }
    let (result, _) = run(points.iter().map(|p| [p[0], p[1]]), cfg)?;
    Ok(result)
}

/// Streaming variant: indices in the result are positions in `points`.
/// Only one representative per disk is kept in memory.
pub fn lattice_approx_stream<F, I>(
    points: I,
    cfg: &LatticeConfig<F>,
) -> Result<(DispersionResult<F>, LatticeState<F>)>
where
    F: Float + Scalar,
    I: IntoIterator<Item = [F; 2]>,
{
    run(points.into_iter(), cfg)
}

fn run<F, I>(points: I, cfg: &LatticeConfig<F>) -> Result<(DispersionResult<F>, LatticeState<F>)>
where
    F: Float + Scalar,
    I: Iterator<Item = [F; 2]>,
{
    let mut state = build_lattice(cfg)?;
    for (index, point) in points.enumerate() {
        if !in_unit_square(point) {
            return Err(out_of_domain(point));
        }
        state.distribute(index, point);
    }

    // first k occupied disks in construction order
    let mut chosen = vec![false; state.m()];
    let mut picked: Vec<Occupant<F>> = Vec::with_capacity(cfg.k);
    for (c, occ) in state.occupancy.iter().enumerate() {
        if picked.len() == cfg.k {
            break;
        }
        if let Some(o) = occ {
            chosen[c] = true;
            picked.push(*o);
        }
    }

    let closest = closest_representatives(&state, &chosen, &picked);
    let status = if picked.len() == cfg.k {
        Status::Approximate
    } else {
        Status::Failed
    };
    let mut indices: Vec<usize> = picked.iter().map(|o| o.index).collect();
    indices.sort_unstable();
    let result = DispersionResult {
        k: cfg.k,
        indices,
        value2: closest.map_or(Dist2::Infinite, |w| Dist2::Finite(w.dist2)),
        closest_pair: closest,
        algo: Algo::Lattice,
        status,
    };
    Ok((result, state))
}

#[inline]
fn sq<F: Float>(a: [F; 2], b: [F; 2]) -> F {
    let (dx, dy) = (a[0] - b[0], a[1] - b[1]);
    dx * dx + dy * dy
}

/// Closest pair among the representatives.
///
/// When disks are small relative to the spacing (`r <= 0.18 s`), any
/// non-adjacent pair is farther apart than any adjacent one, so only the
/// lattice neighbours need checking; otherwise all pairs are compared.
fn closest_representatives<F: Float + Scalar>(
    state: &LatticeState<F>,
    chosen: &[bool],
    picked: &[Occupant<F>],
) -> Option<PairWitness<F>> {
    let mut best: Option<PairWitness<F>> = None;
    let mut offer = |a: Occupant<F>, b: Occupant<F>| {
        let d = sq(a.at, b.at);
        if best.map_or(true, |w| d < w.dist2) {
            best = Some(PairWitness::new(a.index, b.index, d));
        }
    };

    let local = state.radius <= F::from(0.18).expect("representable") * state.spacing;
    let mut found_adjacent = false;
    if local {
        for (c, (q, p)) in state.grid_positions().into_iter().enumerate() {
            if !chosen[c] {
                continue;
            }
            let here = state.occupancy[c].expect("chosen disks are occupied");
            // forward neighbours: right, and the two touching centers in the next row
            let (left_up, right_up) = if q % 2 == 0 {
                (p.checked_sub(1), Some(p))
            } else {
                (Some(p), Some(p + 1))
            };
            let neighbours = [
                state.center_index(q, p + 1),
                left_up.and_then(|x| state.center_index(q + 1, x)),
                right_up.and_then(|x| state.center_index(q + 1, x)),
            ];
            for other in neighbours.into_iter().flatten() {
                if chosen[other] {
                    found_adjacent = true;
                    offer(
                        here,
                        state.occupancy[other].expect("chosen disks are occupied"),
                    );
                }
            }
        }
    }
    if !found_adjacent {
        for (x, &a) in picked.iter().enumerate() {
            for &b in &picked[x + 1..] {
                offer(a, b);
            }
        }
    }
    best
}
