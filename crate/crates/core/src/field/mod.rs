//! Daily geopotential-height grids and the auxiliary inputs that travel with
//! them (dataset manifests, wind series, event catalogs).

mod binary;
mod csv_io;
mod inputs;
mod synth;

use chrono::NaiveDate;

use crate::error::FieldError;

pub use binary::{parse_field_bin, write_field_bin, SPPV_MAGIC, SPPV_VERSION};
pub use csv_io::{parse_field_csv, write_field_csv};
pub use inputs::{
    load_field, load_manifest, parse_date, parse_events_csv, parse_manifest, parse_wind_csv,
    DatasetManifest, EventList, EventRow, WindSeries,
};
pub use synth::{
    great_circle_deg, synth_field, ConeCenter, SynthKind, SynthSpec, DEFAULT_BASE_HEIGHT,
    DEFAULT_CONE_RADIUS, DEFAULT_DEPTH,
};

/// One day's regular latitude/longitude grid of geopotential heights (meters)
/// at one pressure level. Values are stored row-major by latitude, with rows
/// ordered south to north.
#[derive(Debug, Clone, PartialEq)]
pub struct GphField {
    date: NaiveDate,
    pressure_hpa: f64,
    lats: Vec<f64>,
    lons: Vec<f64>,
    values: Vec<f64>,
}

pub const MIN_NLAT: usize = 3;
pub const MIN_NLON: usize = 4;

impl GphField {
    pub fn new(
        date: NaiveDate,
        pressure_hpa: f64,
        lats: Vec<f64>,
        lons: Vec<f64>,
        values: Vec<f64>,
    ) -> Result<Self, FieldError> {
        if !(pressure_hpa.is_finite() && pressure_hpa > 0.0) {
            return Err(FieldError::InvalidGrid(format!(
                "pressure must be positive, got {pressure_hpa}"
            )));
        }
        if lats.len() < MIN_NLAT {
            return Err(FieldError::InvalidGrid(format!(
                "need at least {MIN_NLAT} latitudes, got {}",
                lats.len()
            )));
        }
        if lons.len() < MIN_NLON {
            return Err(FieldError::InvalidGrid(format!(
                "need at least {MIN_NLON} longitudes, got {}",
                lons.len()
            )));
        }
        check_axis(&lats, "latitude", |v| (0.0..=90.0).contains(&v), "[0, 90]")?;
        check_axis(
            &lons,
            "longitude",
            |v| (0.0..360.0).contains(&v),
            "[0, 360)",
        )?;
        let expected = lats.len() * lons.len();
        if values.len() != expected {
            return Err(FieldError::InvalidGrid(format!(
                "{} values for a {}x{} grid",
                values.len(),
                lats.len(),
                lons.len()
            )));
        }
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(FieldError::NonFinite {
                lat: lats[k / lons.len()],
                lon: lons[k % lons.len()],
            });
        }
        Ok(GphField {
            date,
            pressure_hpa,
            lats,
            lons,
            values,
        })
    }

    pub fn date(&self) -> NaiveDate {
        self.date
    }

    pub fn pressure_hpa(&self) -> f64 {
        self.pressure_hpa
    }

    pub fn lats(&self) -> &[f64] {
        &self.lats
    }

    pub fn lons(&self) -> &[f64] {
        &self.lons
    }

    pub fn nlat(&self) -> usize {
        self.lats.len()
    }

    pub fn nlon(&self) -> usize {
        self.lons.len()
    }

    /// Flat row-major values.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, lat_idx: usize, lon_idx: usize) -> f64 {
        self.values[lat_idx * self.lons.len() + lon_idx]
    }

    pub fn row(&self, lat_idx: usize) -> &[f64] {
        let n = self.lons.len();
        &self.values[lat_idx * n..(lat_idx + 1) * n]
    }

    /// Same grid and metadata with different values.
    pub fn with_values(&self, values: Vec<f64>) -> Result<Self, FieldError> {
        GphField::new(
            self.date,
            self.pressure_hpa,
            self.lats.clone(),
            self.lons.clone(),
            values,
        )
    }

    pub fn with_meta(mut self, date: NaiveDate, pressure_hpa: f64) -> Result<Self, FieldError> {
        if !(pressure_hpa.is_finite() && pressure_hpa > 0.0) {
            return Err(FieldError::InvalidGrid(format!(
                "pressure must be positive, got {pressure_hpa}"
            )));
        }
        self.date = date;
        self.pressure_hpa = pressure_hpa;
        Ok(self)
    }

    /// Drops every row south of `min_lat`.
    pub fn crop_min_lat(&self, min_lat: f64) -> Result<Self, FieldError> {
        let first = self.lats.iter().position(|&lat| lat >= min_lat);
        let first = match first {
            Some(i) if self.lats.len() - i >= MIN_NLAT => i,
            _ => {
                return Err(FieldError::InvalidGrid(format!(
                    "cropping at {min_lat} leaves fewer than {MIN_NLAT} latitude rows"
                )))
            }
        };
        let n = self.lons.len();
        GphField::new(
            self.date,
            self.pressure_hpa,
            self.lats[first..].to_vec(),
            self.lons.clone(),
            self.values[first * n..].to_vec(),
        )
    }
}

fn check_axis(
    axis: &[f64],
    name: &str,
    in_range: impl Fn(f64) -> bool,
    range: &str,
) -> Result<(), FieldError> {
    for &v in axis {
        if !v.is_finite() || !in_range(v) {
            return Err(FieldError::InvalidGrid(format!(
                "{name} {v} outside {range}"
            )));
        }
    }
    for w in axis.windows(2) {
        if w[1] <= w[0] {
            return Err(FieldError::InvalidGrid(format!(
                "{name}s not strictly increasing at {} -> {}",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
pub(crate) fn test_date() -> NaiveDate {
    NaiveDate::from_ymd_opt(1987, 12, 5).unwrap()
}
