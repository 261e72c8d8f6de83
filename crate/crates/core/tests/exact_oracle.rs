mod common;

use common::{lattice_ish, naive_optimum, rng, uniform};
use dispersion_core::{brute_force, min_pairwise_dist2, solve_exact, Dist2, IntPointSet, PointSet};

#[test]
fn brute_force_matches_bitmask_enumeration() {
    let mut r = rng(21);
    for trial in 0..60 {
        let n = 4 + trial % 8;
        let k = 2 + trial % (n - 1).min(5);
        let p = uniform(&mut r, n, 2);
        assert_eq!(
            brute_force(&p, k).unwrap().value2,
            Dist2::Finite(naive_optimum(&p, k))
        );
    }
}

#[test]
fn exact_matches_brute_force_on_random_instances() {
    let mut r = rng(22);
    for trial in 0..400 {
        let n = 5 + trial % 10;
        let k = 2 + (trial / 10) % 5;
        let d = 2 + trial % 2;
        let p = if trial % 4 == 3 {
            lattice_ish(&mut r, n, d, 3)
        } else {
            uniform(&mut r, n, d)
        };
        let k = k.min(n);
        let e = solve_exact(&p, k).unwrap();
        let b = brute_force(&p, k).unwrap();
        assert_eq!(e.value2, b.value2, "trial {trial}: n={n} k={k} d={d}");
        assert_eq!(min_pairwise_dist2(&p, &e.indices).unwrap(), e.value2);
        assert_eq!(e.indices.len(), k);
    }
}

#[test]
fn twelve_points_in_the_cube() {
    let p = uniform(&mut rng(5), 12, 3);
    assert_eq!(
        solve_exact(&p, 5).unwrap().value2,
        brute_force(&p, 5).unwrap().value2
    );
}

#[test]
fn grid_corners() {
    let pts: Vec<[f64; 2]> = (0..3)
        .flat_map(|x| (0..3).map(move |y| [x as f64, y as f64]))
        .collect();
    let p = PointSet::from_points(&pts).unwrap();
    assert_eq!(brute_force(&p, 4).unwrap().value2, Dist2::Finite(4.0));
    assert_eq!(solve_exact(&p, 4).unwrap().value2, Dist2::Finite(4.0));
}

#[test]
fn integer_coordinates_give_the_same_optimum() {
    let mut r = rng(23);
    for _ in 0..40 {
        let p = lattice_ish(&mut r, 12, 2, 100);
        let q = IntPointSet::new(2, p.coords().iter().map(|&c| c as i64).collect()).unwrap();
        for k in 2..=5 {
            let a = solve_exact(&p, k).unwrap();
            let b = solve_exact(&q, k).unwrap();
            assert_eq!(a.value2.finite().map(|v| v as i64), b.value2.finite());
            assert_eq!(a.indices, b.indices);
        }
    }
}

#[test]
fn repeated_runs_are_identical() {
    let p = uniform(&mut rng(24), 40, 2);
    let first = solve_exact(&p, 5).unwrap();
    for _ in 0..3 {
        assert_eq!(solve_exact(&p, 5).unwrap(), first);
    }
}

#[test]
fn value_is_a_pairwise_distance_and_monotone_in_k() {
    let mut r = rng(25);
    for _ in 0..30 {
        let p = uniform(&mut r, 13, 2);
        let all: Vec<f64> = (0..13)
            .flat_map(|i| (i + 1..13).map(move |j| (i, j)))
            .map(|(i, j)| p.sq_dist(i, j))
            .collect();
        let mut prev = Dist2::Infinite;
        for k in 2..=13 {
            let v = solve_exact(&p, k).unwrap().value2;
            assert!(v <= prev);
            assert!(all.contains(&v.finite().unwrap()));
            prev = v;
        }
    }
}
