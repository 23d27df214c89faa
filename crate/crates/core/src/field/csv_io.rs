use std::io::Read;

use chrono::NaiveDate;

use super::GphField;
use crate::error::FieldError;

const HEADER: [&str; 3] = ["lat", "lon", "value"];

/// Reads a `lat,lon,value` CSV. Rows may come in any order but must cover the
/// full product of the distinct latitudes and longitudes exactly once.
pub fn parse_field_csv(
    reader: impl Read,
    date: NaiveDate,
    pressure_hpa: f64,
) -> Result<GphField, FieldError> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header = rdr.headers()?.clone();
    if header.iter().ne(HEADER) {
        return Err(FieldError::csv(
            1,
            format!(
                "expected header `lat,lon,value`, found `{}`",
                header.iter().collect::<Vec<_>>().join(",")
            ),
        ));
    }

    let mut cells = Vec::new();
    for record in rdr.records() {
        let record = record?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() != 3 {
            return Err(FieldError::csv(
                line,
                format!("expected 3 columns, found {}", record.len()),
            ));
        }
        let num = |k: usize| -> Result<f64, FieldError> {
            record[k].parse::<f64>().map(|v| v + 0.0).map_err(|_| {
                FieldError::csv(line, format!("invalid {} {:?}", HEADER[k], &record[k]))
            })
        };
        let (lat, lon, value) = (num(0)?, num(1)?, num(2)?);
        if !value.is_finite() {
            return Err(FieldError::NonFinite { lat, lon });
        }
        if !lat.is_finite() || !lon.is_finite() {
            return Err(FieldError::csv(line, "non-finite coordinate"));
        }
        cells.push((lat, lon, value));
    }

    let axis = |pick: fn(&(f64, f64, f64)) -> f64| {
        let mut v: Vec<f64> = cells.iter().map(pick).collect();
        v.sort_by(f64::total_cmp);
        v.dedup();
        v
    };
    let lats = axis(|c| c.0);
    let lons = axis(|c| c.1);
    let nlon = lons.len();

    let mut slots: Vec<Option<f64>> = vec![None; lats.len() * nlon];
    for &(lat, lon, value) in &cells {
        let i = lats
            .binary_search_by(|x| x.total_cmp(&lat))
            .expect("lat on axis");
        let j = lons
            .binary_search_by(|x| x.total_cmp(&lon))
            .expect("lon on axis");
        let slot = &mut slots[i * nlon + j];
        if slot.is_some() {
            return Err(FieldError::DuplicateCell { lat, lon });
        }
        *slot = Some(value);
    }
    let values = slots
        .iter()
        .enumerate()
        .map(|(k, v)| {
            v.ok_or(FieldError::MissingCell {
                lat: lats[k / nlon],
                lon: lons[k % nlon],
            })
        })
        .collect::<Result<Vec<_>, _>>()?;

    GphField::new(date, pressure_hpa, lats, lons, values)
}

/// Writes the field in row-major order using shortest round-trip float text.
pub fn write_field_csv(field: &GphField) -> String {
    let mut out = String::with_capacity(field.values().len() * 24);
    out.push_str("lat,lon,value\n");
    for (i, lat) in field.lats().iter().enumerate() {
        for (j, lon) in field.lons().iter().enumerate() {
            out.push_str(&format!("{lat},{lon},{}\n", field.value(i, j)));
        }
    }
    out
}
