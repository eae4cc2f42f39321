use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lattice_size::search::{brute_force_ls, min_l1_over_small_matrices};
use lattice_size::size2d::{ls_sigma_fast, ls_sigma_ul};
use lattice_size::{fixtures, LatticePolytope, Target};
use lattice_size_bench::{random_polygons, random_polytopes};

/// Hull and inradius are cached per polytope, so time fresh copies.
fn fresh(ps: &[LatticePolytope]) -> Vec<LatticePolytope> {
    ps.iter()
        .map(|p| LatticePolytope::new(p.points().to_vec()).unwrap())
        .collect()
}

fn plane(c: &mut Criterion) {
    let mut g = c.benchmark_group("sigma_2d");
    for max in [12, 100, 1000] {
        let polys = random_polygons(7, 50, max);
        g.bench_with_input(BenchmarkId::new("fast", max), &polys, |b, ps| {
            b.iter(|| fresh(ps).iter().map(|p| ls_sigma_fast(p).unwrap().value).sum::<i64>())
        });
        g.bench_with_input(BenchmarkId::new("ul", max), &polys, |b, ps| {
            b.iter(|| fresh(ps).iter().map(|p| ls_sigma_ul(p).unwrap().value).sum::<i64>())
        });
        if max <= 100 {
            g.bench_with_input(BenchmarkId::new("brute", max), &polys, |b, ps| {
                b.iter(|| {
                    fresh(ps)
                        .iter()
                        .map(|p| brute_force_ls(p, Target::Simplex).unwrap().value)
                        .sum::<i64>()
                })
            });
        }
    }
    g.finish();
}

fn space(c: &mut Criterion) {
    let mut g = c.benchmark_group("search_3d");
    g.sample_size(10);
    let named = [
        ("reduction_counterexample", fixtures::reduction_counterexample()),
        ("descent_counterexample", fixtures::descent_counterexample()),
    ];
    for (name, p) in &named {
        g.bench_function(BenchmarkId::new("sigma", name), |b| {
            b.iter(|| brute_force_ls(&fresh(std::slice::from_ref(p))[0], Target::Simplex).unwrap())
        });
        g.bench_function(BenchmarkId::new("cube", name), |b| {
            b.iter(|| brute_force_ls(&fresh(std::slice::from_ref(p))[0], Target::Cube).unwrap())
        });
    }
    let polys = random_polytopes(3, 10, 6, 3);
    g.bench_function("sigma_random_box6", |b| {
        b.iter(|| {
            fresh(&polys)
                .iter()
                .map(|p| brute_force_ls(p, Target::Simplex).unwrap().value)
                .sum::<i64>()
        })
    });
    g.bench_function("small_entry_matrices", |b| {
        b.iter(|| min_l1_over_small_matrices(black_box(&named[1].1)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, plane, space);
criterion_main!(benches);
