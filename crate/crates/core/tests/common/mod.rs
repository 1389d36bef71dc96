#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trias_core::algebra::check_axioms;
use trias_core::catalog::{catalog, CatalogEntry};
use trias_core::{LinearMap, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn passing_entries() -> Vec<&'static CatalogEntry> {
    catalog().iter().filter(|e| check_axioms(&e.algebra).all_hold()).collect()
}

/// Entries drawn from `values`, row by row.
pub fn random_map(rng: &mut ChaCha8Rng, n: usize, values: &[i64]) -> LinearMap {
    let flat = (0..n * n).map(|_| Scalar::from_int(values[rng.gen_range(0..values.len())])).collect();
    LinearMap::from_flat(n, flat)
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> LinearMap {
    loop {
        let m = random_map(rng, n, &[-2, -1, 0, 0, 1, 1, 2]);
        if m.rank() == n {
            return m;
        }
    }
}

/// Every matrix with entries in `values`, in row-major odometer order.
pub fn all_maps(n: usize, values: &[i64]) -> Vec<LinearMap> {
    let cells = n * n;
    let total = values.len().pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let flat = (0..cells)
                .map(|_| {
                    let v = values[code % values.len()];
                    code /= values.len();
                    Scalar::from_int(v)
                })
                .collect();
            LinearMap::from_flat(n, flat)
        })
        .collect()
}
