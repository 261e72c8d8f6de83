mod common;

use common::{lattice_ish, naive_dist2, rng, uniform};
use dispersion_core::{convex_hull_2d, diameter, dist2, min_pairwise_dist2, Dist2, PointSet};
use proptest::prelude::*;

fn cross(p: &PointSet<f64>, a: usize, b: usize, c: usize) -> f64 {
    let (pa, pb, pc) = (p.point(a), p.point(b), p.point(c));
    (pb[0] - pa[0]) * (pc[1] - pa[1]) - (pb[1] - pa[1]) * (pc[0] - pa[0])
}

/// Extreme points by testing every directed pair for a supporting line.
fn brute_hull_vertices(p: &PointSet<f64>) -> Vec<usize> {
    let n = p.len();
    let mut on = vec![false; n];
    for a in 0..n {
        for b in 0..n {
            if a == b || p.point(a) == p.point(b) {
                continue;
            }
            let supporting = (0..n).all(|c| c == a || c == b || cross(p, a, b, c) > 0.0);
            if supporting {
                on[a] = true;
                on[b] = true;
            }
        }
    }
    (0..n).filter(|&i| on[i]).collect()
}

#[test]
fn hull_matches_brute_force_membership() {
    let mut r = rng(11);
    for _ in 0..200 {
        let p = uniform(&mut r, 10, 2);
        let mut hull = convex_hull_2d(&p).unwrap();
        let h = hull.len();
        for t in 0..h {
            assert!(
                cross(&p, hull[t], hull[(t + 1) % h], hull[(t + 2) % h]) > 0.0,
                "not counterclockwise"
            );
        }
        hull.sort_unstable();
        assert_eq!(hull, brute_hull_vertices(&p));
    }
}

fn brute_diameter(p: &PointSet<f64>) -> (usize, usize, f64) {
    let mut best = (0, 1, naive_dist2(p, 0, 1));
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let d = naive_dist2(p, i, j);
            if d > best.2 {
                best = (i, j, d);
            }
        }
    }
    best
}

#[test]
fn diameter_matches_all_pairs_scan() {
    let mut r = rng(12);
    for trial in 0..300 {
        let n = 2 + trial % 199;
        let d = if trial % 3 == 0 { 3 } else { 2 };
        let p = uniform(&mut r, n, d);
        let w = diameter(&p).unwrap();
        let (i, j, best) = brute_diameter(&p);
        assert_eq!(w.dist2, best, "n={n} d={d}");
        assert_eq!((w.i, w.j), (i, j));
    }
}

#[test]
fn diameter_with_ties_and_duplicates() {
    let mut r = rng(13);
    for trial in 0..500 {
        let n = 2 + trial % 40;
        let p = lattice_ish(&mut r, n, 2, 4);
        let w = diameter(&p).unwrap();
        let (i, j, best) = brute_diameter(&p);
        assert_eq!((w.i, w.j, w.dist2), (i, j, best), "{p:?}");
    }
}

#[test]
fn fifty_random_points() {
    let p = uniform(&mut rng(50), 50, 2);
    assert_eq!(diameter(&p).unwrap().dist2, brute_diameter(&p).2);
}

#[test]
fn integer_and_float_coordinates_agree() {
    let mut r = rng(14);
    for _ in 0..100 {
        let p = lattice_ish(&mut r, 25, 2, 1000);
        let ints = PointSet::new(2, p.coords().iter().map(|&c| c as i64).collect()).unwrap();
        let (a, b) = (diameter(&p).unwrap(), diameter(&ints).unwrap());
        assert_eq!((a.i, a.j, a.dist2 as i64), (b.i, b.j, b.dist2));
    }
}

proptest! {
    #[test]
    fn dist2_is_symmetric(coords in prop::collection::vec(-1e6f64..1e6, 6)) {
        let p = PointSet::new(3, coords).unwrap();
        prop_assert_eq!(dist2(&p, 0, 1).unwrap().to_bits(), dist2(&p, 1, 0).unwrap().to_bits());
    }

    #[test]
    fn min_pairwise_is_permutation_invariant(seed in any::<u64>(), n in 2usize..12) {
        let p = uniform(&mut rng(seed), n, 2);
        let mut s: Vec<usize> = (0..n).collect();
        let base = min_pairwise_dist2(&p, &s).unwrap();
        s.reverse();
        s.rotate_left(seed as usize % n);
        prop_assert_eq!(min_pairwise_dist2(&p, &s).unwrap(), base);
        prop_assert_eq!(base, Dist2::Finite(common::naive_min(&p, &s)));
    }

    #[test]
    fn diameter_pair_survives_integer_translation(seed in any::<u64>(), dx in -1000i32..1000, dy in -1000i32..1000) {
        let p = lattice_ish(&mut rng(seed), 30, 2, 50);
        let q = p.translated(&[dx as f64, dy as f64]).unwrap();
        let (a, b) = (diameter(&p).unwrap(), diameter(&q).unwrap());
        prop_assert_eq!((a.i, a.j), (b.i, b.j));
    }
}
