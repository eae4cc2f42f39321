//! Seeded inputs for the benchmarks.

use lattice_size::{IntVec, LatticePolytope};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random polygons with 4 to 8 points in `[0, max_coord]^2`, each with a
/// nonzero area.
pub fn random_polygons(seed: u64, count: usize, max_coord: i64) -> Vec<LatticePolytope> {
    random_polytopes(seed, count, max_coord, 2)
}

/// Random full-dimensional polytopes with 4 to 8 points in `[0, max_coord]^dim`.
pub fn random_polytopes(seed: u64, count: usize, max_coord: i64, dim: usize) -> Vec<LatticePolytope> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.random_range(4..=8);
        let pts = (0..k)
            .map(|_| {
                let c: Vec<i64> = (0..dim).map(|_| rng.random_range(0..=max_coord)).collect();
                IntVec::new(&c).expect("dimension at most 4")
            })
            .collect();
        let p = LatticePolytope::new(pts).expect("nonempty");
        if p.is_full_dimensional() {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_reproducible() {
        assert_eq!(random_polygons(1, 5, 12), random_polygons(1, 5, 12));
        assert!(random_polytopes(2, 5, 4, 3).iter().all(|p| p.is_full_dimensional()));
    }
}
