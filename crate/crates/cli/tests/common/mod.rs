#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use chrono::{Duration, NaiveDate};
use superpov_core::field::{parse_date, ConeCenter};
use superpov_core::{synth_field, write_field_bin, GphField, SynthSpec};

pub fn date(s: &str) -> NaiveDate {
    parse_date(s).unwrap()
}

pub fn superpov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superpov"))
        .args(args)
        .output()
        .expect("spawn superpov")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

pub fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Noisy pole-centered vortex.
pub fn normal_day(nlat: usize, nlon: usize, seed: u64) -> GphField {
    let mut spec = SynthSpec::normal(nlat, nlon, 500.0);
    spec.noise_amplitude = 2.0;
    spec.seed = seed;
    synth_field(&spec).unwrap()
}

pub fn displaced_day(nlat: usize, nlon: usize, colat: f64, lon: f64, seed: u64) -> GphField {
    let mut spec = SynthSpec::displaced(nlat, nlon, colat, lon, 500.0);
    spec.noise_amplitude = 2.0;
    spec.seed = seed;
    synth_field(&spec).unwrap()
}

pub fn split_day(nlat: usize, nlon: usize, depth_a: f64, depth_b: f64, seed: u64) -> GphField {
    let a = ConeCenter {
        colat: 30.0,
        lon: 90.0,
        depth: depth_a,
    };
    let b = ConeCenter {
        colat: 30.0,
        lon: 270.0,
        depth: depth_b,
    };
    let mut spec = SynthSpec::split(nlat, nlon, a, b);
    spec.noise_amplitude = 2.0;
    spec.seed = seed;
    synth_field(&spec).unwrap()
}

/// Writes one SPPV file per (day, pressure) and a manifest listing them all.
/// `field(k, p)` builds day `k` at pressure `p`.
pub fn write_dataset(
    dir: &Path,
    start: NaiveDate,
    ndays: usize,
    pressures: &[f64],
    field: impl Fn(usize, f64) -> GphField,
) -> PathBuf {
    let mut manifest = String::from("date,pressure_hpa,path\n");
    for k in 0..ndays {
        let d = start + Duration::days(k as i64);
        for &p in pressures {
            let name = format!("{d}_{p}hpa.sppv");
            std::fs::write(dir.join(&name), write_field_bin(&field(k, p))).unwrap();
            manifest.push_str(&format!("{d},{p},{name}\n"));
        }
    }
    let path = dir.join("manifest.csv");
    std::fs::write(&path, manifest).unwrap();
    path
}

/// A dataset of normal days with a split stretch in the middle, plus a wind
/// file that turns negative during the split.
pub fn winter_dataset(
    dir: &Path,
    start: NaiveDate,
    ndays: usize,
    pressures: &[f64],
) -> (PathBuf, PathBuf) {
    let manifest = write_dataset(dir, start, ndays, pressures, |k, p| {
        let seed = k as u64 * 100 + p as u64;
        let split = (ndays / 2..ndays / 2 + 3).contains(&k);
        if split {
            split_day(19, 36, 300.0, 270.0, seed)
        } else {
            normal_day(19, 36, seed)
        }
    });
    let mut wind = String::from("date,u_ms\n");
    for k in 0..ndays {
        let d = start + Duration::days(k as i64);
        let u = if (ndays / 2..ndays / 2 + 2).contains(&k) {
            -5.5
        } else {
            18.25
        };
        wind.push_str(&format!("{d},{u}\n"));
    }
    let wind_path = dir.join("wind.csv");
    std::fs::write(&wind_path, wind).unwrap();
    (manifest, wind_path)
}
