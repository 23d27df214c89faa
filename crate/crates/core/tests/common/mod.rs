#![allow(dead_code)]

use chrono::NaiveDate;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superpov_core::GphField;

pub fn date() -> NaiveDate {
    NaiveDate::from_ymd_opt(1987, 12, 5).unwrap()
}

/// Regular grid up to `top` degrees north.
pub fn field(nlat: usize, nlon: usize, top: f64, values: Vec<f64>) -> GphField {
    let lats = (0..nlat)
        .map(|i| top * i as f64 / (nlat - 1) as f64)
        .collect();
    let lons = (0..nlon).map(|j| 360.0 * j as f64 / nlon as f64).collect();
    GphField::new(date(), 10.0, lats, lons, values).unwrap()
}

/// Random field of one of three flavours: continuous uniform values,
/// heavily tied integer values, or a few random basins plus noise.
pub fn random_field(rng: &mut ChaCha8Rng, nlat: usize, nlon: usize) -> GphField {
    let n = nlat * nlon;
    let values: Vec<f64> = match rng.random_range(0..3) {
        0 => (0..n).map(|_| rng.random_range(0.0..1000.0)).collect(),
        1 => (0..n)
            .map(|_| rng.random_range(0..6) as f64 * 50.0)
            .collect(),
        _ => {
            let basins: Vec<(f64, f64, f64, f64)> = (0..rng.random_range(1..5))
                .map(|_| {
                    (
                        rng.random_range(0.0..nlat as f64),
                        rng.random_range(0.0..nlon as f64),
                        rng.random_range(100.0..500.0),
                        rng.random_range(1.5..4.0),
                    )
                })
                .collect();
            (0..n)
                .map(|k| {
                    let (i, j) = ((k / nlon) as f64, (k % nlon) as f64);
                    let mut v = 30_000.0;
                    for &(bi, bj, depth, radius) in &basins {
                        let d = ((i - bi).powi(2) + (j - bj).powi(2)).sqrt();
                        v -= depth * (1.0 - d / radius).max(0.0);
                    }
                    v + rng.random_range(-3.0..3.0)
                })
                .collect()
        }
    };
    let top = if rng.random_bool(0.5) { 90.0 } else { 85.0 };
    field(nlat, nlon, top, values)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// 3x3 ring of height 10 around a centre of height 0.
pub fn ring_heights() -> Vec<f64> {
    let mut h = vec![10.0; 9];
    h[4] = 0.0;
    h
}
