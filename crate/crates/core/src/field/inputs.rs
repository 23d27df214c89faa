use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};

use chrono::NaiveDate;

use super::{parse_field_bin, parse_field_csv, GphField};
use crate::error::FieldError;

pub fn parse_date(s: &str) -> Result<NaiveDate, FieldError> {
    NaiveDate::parse_from_str(s.trim(), "%Y-%m-%d").map_err(|_| FieldError::BadDate(s.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct PressureKey(f64);

impl Eq for PressureKey {}

impl PartialOrd for PressureKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PressureKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// Map from (date, pressure level) to a field file on disk.
#[derive(Debug, Clone, Default)]
pub struct DatasetManifest {
    entries: BTreeMap<(NaiveDate, PressureKey), PathBuf>,
}

impl DatasetManifest {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, date: NaiveDate, pressure_hpa: f64) -> Option<&Path> {
        self.entries
            .get(&(date, PressureKey(pressure_hpa)))
            .map(PathBuf::as_path)
    }

    /// Entries ordered by date, then pressure.
    pub fn iter(&self) -> impl Iterator<Item = (NaiveDate, f64, &Path)> {
        self.entries
            .iter()
            .map(|((d, p), path)| (*d, p.0, path.as_path()))
    }

    pub fn dates(&self, pressure_hpa: f64) -> Vec<NaiveDate> {
        self.iter()
            .filter(|(_, p, _)| *p == pressure_hpa)
            .map(|(d, _, _)| d)
            .collect()
    }

    pub fn insert(
        &mut self,
        date: NaiveDate,
        pressure_hpa: f64,
        path: PathBuf,
    ) -> Result<(), FieldError> {
        let key = (date, PressureKey(pressure_hpa));
        if self.entries.contains_key(&key) {
            return Err(FieldError::DuplicateEntry {
                date,
                pressure: pressure_hpa,
            });
        }
        self.entries.insert(key, path);
        Ok(())
    }

    /// Loads the field for one entry, if the manifest has it.
    pub fn load(&self, date: NaiveDate, pressure_hpa: f64) -> Option<Result<GphField, FieldError>> {
        self.get(date, pressure_hpa)
            .map(|path| load_field(path, date, pressure_hpa))
    }
}

/// Parses manifest CSV text (`date,pressure_hpa,path`). Relative paths are
/// resolved against `base_dir`.
pub fn parse_manifest(reader: impl Read, base_dir: &Path) -> Result<DatasetManifest, FieldError> {
    let mut manifest = DatasetManifest::default();
    for_each_row(reader, &["date", "pressure_hpa", "path"], |line, row| {
        let date = parse_date(&row[0]).map_err(|e| FieldError::csv(line, e.to_string()))?;
        let pressure: f64 = row[1]
            .parse()
            .ok()
            .filter(|p: &f64| p.is_finite() && *p > 0.0)
            .ok_or_else(|| FieldError::csv(line, format!("invalid pressure {:?}", &row[1])))?;
        if row[2].is_empty() {
            return Err(FieldError::csv(line, "empty path"));
        }
        manifest.insert(date, pressure, base_dir.join(&row[2]))
    })?;
    Ok(manifest)
}

pub fn load_manifest(path: &Path) -> Result<DatasetManifest, FieldError> {
    let file = std::fs::File::open(path).map_err(|source| FieldError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let base = path.parent().unwrap_or(Path::new("."));
    parse_manifest(file, base).map_err(|e| e.in_file(path))
}

/// Loads a field file; `.csv` is read as text, anything else as SPPV.
pub fn load_field(path: &Path, date: NaiveDate, pressure_hpa: f64) -> Result<GphField, FieldError> {
    let bytes = std::fs::read(path).map_err(|source| FieldError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let is_csv = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    let parsed = if is_csv {
        parse_field_csv(bytes.as_slice(), date, pressure_hpa)
    } else {
        parse_field_bin(&bytes, date, pressure_hpa)
    };
    parsed.map_err(|e| e.in_file(path))
}

/// Daily zonal-mean zonal wind at 60N, m/s.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct WindSeries {
    samples: BTreeMap<NaiveDate, f64>,
}

impl WindSeries {
    pub fn get(&self, date: NaiveDate) -> Option<f64> {
        self.samples.get(&date).copied()
    }

    pub fn is_negative(&self, date: NaiveDate) -> Option<bool> {
        self.get(date).map(|u| u < 0.0)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

pub fn parse_wind_csv(reader: impl Read) -> Result<WindSeries, FieldError> {
    let mut samples = BTreeMap::new();
    for_each_row(reader, &["date", "u_ms"], |line, row| {
        let date = parse_date(&row[0]).map_err(|e| FieldError::csv(line, e.to_string()))?;
        let u: f64 = row[1]
            .parse()
            .ok()
            .filter(|u: &f64| u.is_finite())
            .ok_or_else(|| FieldError::csv(line, format!("invalid wind {:?}", &row[1])))?;
        if samples.insert(date, u).is_some() {
            return Err(FieldError::DuplicateWind(date));
        }
        Ok(())
    })?;
    Ok(WindSeries { samples })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventRow {
    pub definition: String,
    pub event_date: NaiveDate,
    pub window_start: NaiveDate,
    pub window_end: NaiveDate,
}

impl EventRow {
    pub fn new(
        definition: impl Into<String>,
        event_date: NaiveDate,
        window_start: NaiveDate,
        window_end: NaiveDate,
    ) -> Result<Self, FieldError> {
        let definition = definition.into();
        if !(window_start <= event_date && event_date <= window_end) {
            return Err(FieldError::WindowOrder {
                definition,
                event_date,
                start: window_start,
                end: window_end,
            });
        }
        Ok(EventRow {
            definition,
            event_date,
            window_start,
            window_end,
        })
    }

    pub fn days(&self) -> impl Iterator<Item = NaiveDate> + '_ {
        self.window_start
            .iter_days()
            .take_while(move |d| *d <= self.window_end)
    }
}

pub type EventList = Vec<EventRow>;

pub fn parse_events_csv(reader: impl Read) -> Result<EventList, FieldError> {
    let mut rows = Vec::new();
    for_each_row(
        reader,
        &["definition", "event_date", "window_start", "window_end"],
        |line, row| {
            let date =
                |k: usize| parse_date(&row[k]).map_err(|e| FieldError::csv(line, e.to_string()));
            if row[0].is_empty() {
                return Err(FieldError::csv(line, "empty definition label"));
            }
            let event = EventRow::new(row[0].to_string(), date(1)?, date(2)?, date(3)?)
                .map_err(|e| FieldError::csv(line, e.to_string()))?;
            rows.push(event);
            Ok(())
        },
    )?;
    Ok(rows)
}

fn for_each_row(
    reader: impl Read,
    header: &[&str],
    mut f: impl FnMut(u64, &csv::StringRecord) -> Result<(), FieldError>,
) -> Result<(), FieldError> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    let found = rdr.headers()?.clone();
    if found.iter().ne(header.iter().copied()) {
        return Err(FieldError::csv(
            1,
            format!(
                "expected header `{}`, found `{}`",
                header.join(","),
                found.iter().collect::<Vec<_>>().join(",")
            ),
        ));
    }
    for record in rdr.records() {
        let record = record?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() != header.len() {
            return Err(FieldError::csv(
                line,
                format!("expected {} columns, found {}", header.len(), record.len()),
            ));
        }
        f(line, &record)?;
    }
    Ok(())
}
