//! Independent oracles and cross-checks for the library algorithms.

use lattice_size::search::{
    brute_force_ls, brute_force_search, l1_nd, lattice_width_brute, min_l1_over_small_matrices,
    nls_sigma_nd, SearchOptions,
};
use lattice_size::size2d::{l_values, lattice_width_fast, ls_sigma_fast, ls_square_fast, nls_sigma_2d};
use lattice_size::{fixtures, AffineUnimodular, IntMat, IntVec, LatticePolytope, Target, DEFAULT_POOL_LIMIT};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_polygon(rng: &mut ChaCha8Rng, max_coord: i64) -> Vec<[i64; 2]> {
    let k = rng.random_range(3..=7);
    (0..k)
        .map(|_| [rng.random_range(0..=max_coord), rng.random_range(0..=max_coord)])
        .collect()
}

fn random_polytope_3d(rng: &mut ChaCha8Rng, max_coord: i64) -> LatticePolytope {
    loop {
        let k = rng.random_range(4..=7);
        let pts = (0..k)
            .map(|_| IntVec::from([0, 0, 0].map(|_: i64| rng.random_range(0..=max_coord))))
            .collect();
        let p = LatticePolytope::new(pts).unwrap();
        if p.is_full_dimensional() {
            return p;
        }
    }
}

fn polytope(points: &[[i64; 2]]) -> LatticePolytope {
    LatticePolytope::from_nested(points).unwrap()
}

/// Plain-loop `min l1(A·P)` and `min max-box-side(A·P)` over every 2x2
/// matrix with entries in `[-b, b]` and determinant ±1.
fn bounded_oracle(points: &[[i64; 2]], b: i64) -> (i64, i64) {
    let mut best_sigma = i64::MAX;
    let mut best_square = i64::MAX;
    for a in -b..=b {
        for c in -b..=b {
            for d in -b..=b {
                for e in -b..=b {
                    if (a * e - c * d).abs() != 1 {
                        continue;
                    }
                    let img: Vec<(i64, i64)> =
                        points.iter().map(|p| (a * p[0] + c * p[1], d * p[0] + e * p[1])).collect();
                    let min_x = img.iter().map(|q| q.0).min().unwrap();
                    let max_x = img.iter().map(|q| q.0).max().unwrap();
                    let min_y = img.iter().map(|q| q.1).min().unwrap();
                    let max_y = img.iter().map(|q| q.1).max().unwrap();
                    let max_sum = img.iter().map(|q| q.0 + q.1).max().unwrap();
                    best_sigma = best_sigma.min(max_sum - min_x - min_y);
                    best_square = best_square.min((max_x - min_x).max(max_y - min_y));
                }
            }
        }
    }
    (best_sigma, best_square)
}

#[test]
fn sizes_match_bounded_matrix_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 40 {
        let pts = random_polygon(&mut rng, 6);
        let p = polytope(&pts);
        if !p.is_full_dimensional() {
            continue;
        }
        // Rows of an optimal matrix have width <= 12 and so norm <= 12/(2R);
        // with R >= 1 every entry is at most 6.
        let r = p.inradius_lower_bound().unwrap().to_f64().unwrap();
        let (sigma, square) = bounded_oracle(&pts, 6);
        let fast = ls_sigma_fast(&p).unwrap().value;
        let sq = ls_square_fast(&p).unwrap().value;
        assert!(fast <= sigma && sq <= square, "{pts:?}");
        if r >= 1.0 {
            assert_eq!(fast, sigma, "{pts:?}");
            assert_eq!(sq, square, "{pts:?}");
            checked += 1;
        }
    }
}

#[test]
fn width_matches_direction_box_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let pts = random_polygon(&mut rng, 10);
        let p = polytope(&pts);
        let mut best = i64::MAX;
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                if num_integer::gcd(a, b) != 1 {
                    continue;
                }
                let vals: Vec<i64> = pts.iter().map(|q| a * q[0] + b * q[1]).collect();
                best = best.min(vals.iter().max().unwrap() - vals.iter().min().unwrap());
            }
        }
        let fast = lattice_width_fast(&p).unwrap();
        assert_eq!(fast.value, best, "{pts:?}");
        assert!(fast.verify(&p).unwrap());
        assert_eq!(lattice_width_brute(&p, DEFAULT_POOL_LIMIT).unwrap().value, best);
    }
}

#[test]
fn nd_quantities_match_2d_ones() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let p = polytope(&random_polygon(&mut rng, 12));
        assert_eq!(l1_nd(&p).unwrap(), l_values(&p).unwrap().l1);
        assert_eq!(nls_sigma_nd(&p).unwrap().value, nls_sigma_2d(&p).unwrap().value);
    }
}

#[test]
fn search_is_stable_under_options() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for k in 0..40 {
        let p = if k % 2 == 0 {
            polytope(&random_polygon(&mut rng, 12))
        } else {
            random_polytope_3d(&mut rng, 3)
        };
        for target in [Target::Simplex, Target::Cube] {
            let base = brute_force_search(&p, target, &SearchOptions::default()).unwrap();
            let wide = brute_force_search(
                &p,
                target,
                &SearchOptions {
                    pool_limit: 10 * DEFAULT_POOL_LIMIT,
                    ..SearchOptions::default()
                },
            )
            .unwrap();
            assert_eq!(base.certificate, wide.certificate);
            let unpruned = brute_force_search(
                &p,
                target,
                &SearchOptions {
                    // Without width pruning every triple in the ball is
                    // tried, which is only affordable in the plane.
                    width_pruning: p.dim() == 3,
                    sum_pruning: false,
                    ..SearchOptions::default()
                },
            )
            .unwrap();
            assert_eq!(base.certificate, unpruned.certificate);
            assert!(base.certificate.verify(&p).unwrap());
        }
    }
}

#[test]
fn search_is_unimodular_invariant_in_3d() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let shears = [
        [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 1, -1], [0, 0, 1]],
        [[0, 1, 0], [1, 0, 0], [0, 0, -1]],
        [[1, 0, 0], [2, 1, 0], [0, 1, 1]],
    ];
    let fat = |p: &LatticePolytope| p.inradius_lower_bound().unwrap().to_f64().unwrap() >= 0.3;
    let mut i = 0;
    while i < 16 {
        let p = random_polytope_3d(&mut rng, 4);
        let a = IntMat::from_nested(&shears[i % shears.len()]).unwrap();
        let map = AffineUnimodular::new(a, IntVec::from([3, -1, 2])).unwrap();
        let q = p.transform(&map).unwrap();
        // The search cost grows as the inradius shrinks, and shears can make
        // a polytope thin.
        if !fat(&p) || !fat(&q) {
            continue;
        }
        i += 1;
        for target in [Target::Simplex, Target::Cube] {
            let cp = brute_force_ls(&p, target).unwrap();
            let cq = brute_force_ls(&q, target).unwrap();
            assert_eq!(cp.value, cq.value);
            assert!(cq.verify(&q).unwrap());
        }
    }
}

#[test]
fn small_matrices_never_beat_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..5 {
        let p = random_polytope_3d(&mut rng, 5);
        let (small, a) = min_l1_over_small_matrices(&p).unwrap();
        assert!(a.is_unimodular().unwrap());
        assert!(small >= brute_force_ls(&p, Target::Simplex).unwrap().value);
    }
}

#[test]
fn small_matrices_on_reduction_counterexample() {
    let p = fixtures::reduction_counterexample();
    let (value, a) = min_l1_over_small_matrices(&p).unwrap();
    assert_eq!(value, 7);
    let image = p.transform(&AffineUnimodular::linear(a).unwrap()).unwrap();
    assert_eq!(l1_nd(&image).unwrap(), 7);
}

#[test]
fn orientation_of_triangle_shear() {
    let p = fixtures::skew_triangle();
    let map = AffineUnimodular::linear(fixtures::skew_triangle_shear()).unwrap();
    let image = p.transform(&map).unwrap();
    assert_eq!(image, polytope(&[[0, 0], [2, 1], [1, 2]]));
    assert!(p.contained_in_simplex_dilate(&map, 3).unwrap());
}
