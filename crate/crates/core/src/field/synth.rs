//! Synthetic vortex fields made of linear tent depressions on a flat base.
//!
//! A grid point at great-circle distance `d` from a cone center of depth `D`
//! and radius `R` is lowered by `D * max(0, 1 - d/R)`. Tents keep the exact
//! birth and death heights of every loop computable by hand.

use chrono::NaiveDate;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::GphField;
use crate::error::FieldError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SynthKind {
    Normal,
    Displaced,
    Split,
}

impl std::str::FromStr for SynthKind {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "normal" => Ok(SynthKind::Normal),
            "displaced" => Ok(SynthKind::Displaced),
            "split" => Ok(SynthKind::Split),
            other => Err(FieldError::InvalidSynth(format!(
                "unknown kind {other:?} (normal|displaced|split)"
            ))),
        }
    }
}

/// Cone center in colatitude/longitude degrees with its own depth in meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConeCenter {
    pub colat: f64,
    pub lon: f64,
    pub depth: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynthSpec {
    pub kind: SynthKind,
    pub date: NaiveDate,
    pub pressure_hpa: f64,
    /// Rows are spaced evenly from the equator to the pole.
    pub nlat: usize,
    /// Columns are spaced evenly from 0 degrees east.
    pub nlon: usize,
    pub base_height: f64,
    pub centers: Vec<ConeCenter>,
    /// Great-circle radius of each tent, degrees.
    pub cone_radius: f64,
    pub noise_amplitude: f64,
    pub seed: u64,
}

pub const DEFAULT_BASE_HEIGHT: f64 = 30_000.0;
pub const DEFAULT_DEPTH: f64 = 500.0;
pub const DEFAULT_CONE_RADIUS: f64 = 25.0;

impl SynthSpec {
    fn with_centers(kind: SynthKind, nlat: usize, nlon: usize, centers: Vec<ConeCenter>) -> Self {
        SynthSpec {
            kind,
            date: NaiveDate::from_ymd_opt(2000, 1, 1).unwrap(),
            pressure_hpa: 10.0,
            nlat,
            nlon,
            base_height: DEFAULT_BASE_HEIGHT,
            centers,
            cone_radius: DEFAULT_CONE_RADIUS,
            noise_amplitude: 0.0,
            seed: 0,
        }
    }

    /// Single cone on the pole.
    pub fn normal(nlat: usize, nlon: usize, depth: f64) -> Self {
        let c = ConeCenter {
            colat: 0.0,
            lon: 0.0,
            depth,
        };
        Self::with_centers(SynthKind::Normal, nlat, nlon, vec![c])
    }

    pub fn displaced(nlat: usize, nlon: usize, colat: f64, lon: f64, depth: f64) -> Self {
        let c = ConeCenter { colat, lon, depth };
        Self::with_centers(SynthKind::Displaced, nlat, nlon, vec![c])
    }

    pub fn split(nlat: usize, nlon: usize, a: ConeCenter, b: ConeCenter) -> Self {
        Self::with_centers(SynthKind::Split, nlat, nlon, vec![a, b])
    }

    pub fn validate(&self) -> Result<(), FieldError> {
        let bad = |m: String| Err(FieldError::InvalidSynth(m));
        let want = match self.kind {
            SynthKind::Normal | SynthKind::Displaced => 1,
            SynthKind::Split => 2,
        };
        if self.centers.len() != want {
            return bad(format!(
                "{:?} needs {want} center(s), got {}",
                self.kind,
                self.centers.len()
            ));
        }
        for c in &self.centers {
            if !(c.depth.is_finite() && c.depth > 0.0) {
                return bad(format!("depth must be positive, got {}", c.depth));
            }
            if !(0.0..=90.0).contains(&c.colat) || !c.lon.is_finite() {
                return bad(format!(
                    "center ({}, {}) outside the hemisphere",
                    c.colat, c.lon
                ));
            }
        }
        if !(self.cone_radius.is_finite() && self.cone_radius > 0.0) {
            return bad(format!(
                "cone radius must be positive, got {}",
                self.cone_radius
            ));
        }
        if !(self.noise_amplitude.is_finite() && self.noise_amplitude >= 0.0) {
            return bad(format!(
                "noise amplitude must be >= 0, got {}",
                self.noise_amplitude
            ));
        }
        if !self.base_height.is_finite() {
            return bad("base height must be finite".into());
        }
        Ok(())
    }
}

/// Great-circle distance in degrees between two (lat, lon) points.
pub fn great_circle_deg(lat1: f64, lon1: f64, lat2: f64, lon2: f64) -> f64 {
    let (p1, p2) = (lat1.to_radians(), lat2.to_radians());
    let dp = p2 - p1;
    let dl = (lon2 - lon1).to_radians();
    let a = (dp / 2.0).sin().powi(2) + p1.cos() * p2.cos() * (dl / 2.0).sin().powi(2);
    (2.0 * a.sqrt().min(1.0).asin()).to_degrees()
}

fn distance_to(center: &ConeCenter, lat: f64, lon: f64) -> f64 {
    if center.colat == 0.0 {
        // exact on the pole: longitude plays no role
        90.0 - lat
    } else {
        great_circle_deg(90.0 - center.colat, center.lon, lat, lon)
    }
}

pub fn synth_field(spec: &SynthSpec) -> Result<GphField, FieldError> {
    spec.validate()?;
    if spec.nlat < super::MIN_NLAT || spec.nlon < super::MIN_NLON {
        return Err(FieldError::InvalidSynth(format!(
            "grid {}x{} below the minimum {}x{}",
            spec.nlat,
            spec.nlon,
            super::MIN_NLAT,
            super::MIN_NLON
        )));
    }
    let lat_step = 90.0 / (spec.nlat - 1) as f64;
    let lon_step = 360.0 / spec.nlon as f64;
    let lats: Vec<f64> = (0..spec.nlat).map(|i| i as f64 * lat_step).collect();
    let lons: Vec<f64> = (0..spec.nlon).map(|j| j as f64 * lon_step).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut values = Vec::with_capacity(spec.nlat * spec.nlon);
    for &lat in &lats {
        for &lon in &lons {
            let mut v = spec.base_height;
            for c in &spec.centers {
                let d = distance_to(c, lat, lon);
                v -= c.depth * (1.0 - d / spec.cone_radius).max(0.0);
            }
            if spec.noise_amplitude > 0.0 {
                v += rng.random_range(-spec.noise_amplitude..=spec.noise_amplitude);
            }
            values.push(v);
        }
    }
    GphField::new(spec.date, spec.pressure_hpa, lats, lons, values)
}
