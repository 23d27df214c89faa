use std::path::PathBuf;

use chrono::NaiveDate;
use thiserror::Error;

/// Errors raised while reading, validating, or generating input data.
#[derive(Debug, Error)]
pub enum FieldError {
    #[error("line {line}: {message}")]
    Csv { line: u64, message: String },
    #[error("missing grid cell lat={lat} lon={lon}")]
    MissingCell { lat: f64, lon: f64 },
    #[error("duplicate grid cell lat={lat} lon={lon}")]
    DuplicateCell { lat: f64, lon: f64 },
    #[error("non-finite value at lat={lat} lon={lon}")]
    NonFinite { lat: f64, lon: f64 },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("bad magic")]
    BadMagic,
    #[error("unsupported version {0}")]
    UnsupportedVersion(u16),
    #[error("truncated payload: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing bytes after payload: expected {expected} bytes, found {found}")]
    TrailingBytes { expected: usize, found: usize },
    #[error("invalid date {0:?} (expected YYYY-MM-DD)")]
    BadDate(String),
    #[error("duplicate manifest entry for {date} at {pressure} hPa")]
    DuplicateEntry { date: NaiveDate, pressure: f64 },
    #[error("duplicate wind sample for {0}")]
    DuplicateWind(NaiveDate),
    #[error(
        "event {definition} {event_date}: window {start}..{end} does not contain the event date"
    )]
    WindowOrder {
        definition: String,
        event_date: NaiveDate,
        start: NaiveDate,
        end: NaiveDate,
    },
    #[error("invalid synthetic spec: {0}")]
    InvalidSynth(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    InFile {
        path: PathBuf,
        #[source]
        source: Box<FieldError>,
    },
}

impl FieldError {
    pub(crate) fn csv(line: u64, message: impl Into<String>) -> Self {
        FieldError::Csv {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn in_file(self, path: impl Into<PathBuf>) -> Self {
        FieldError::InFile {
            path: path.into(),
            source: Box::new(self),
        }
    }
}

impl From<csv::Error> for FieldError {
    fn from(err: csv::Error) -> Self {
        let line = err.position().map(|p| p.line()).unwrap_or(0);
        FieldError::csv(line, err.to_string())
    }
}

/// Errors from building a complex out of raw simplex lists.
#[derive(Debug, Error, PartialEq)]
pub enum ComplexError {
    #[error("non-finite vertex height at {0}")]
    NonFiniteHeight(usize),
    #[error("simplex references vertex {vertex} but only {count} vertices exist")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("degenerate simplex {0:?}")]
    Degenerate(Vec<usize>),
    #[error("duplicate simplex {0:?}")]
    Duplicate(Vec<usize>),
    #[error("{rows}x{cols} rectangle needs {} heights, got {heights}", rows * cols)]
    Shape {
        rows: usize,
        cols: usize,
        heights: usize,
    },
    #[error("triangle {triangle:?} is missing its face {edge:?}")]
    MissingFace {
        triangle: [usize; 3],
        edge: [usize; 2],
    },
}

/// Errors from scoring windows of days.
#[derive(Debug, Error)]
pub enum ScoreError {
    #[error("no fields available at {pressure} hPa between {start} and {end}")]
    EmptyWindow {
        pressure: f64,
        start: NaiveDate,
        end: NaiveDate,
    },
    #[error("event {definition} {event_date}: no scored day in window {start}..{end}")]
    EmptyEventWindow {
        definition: String,
        event_date: NaiveDate,
        start: NaiveDate,
        end: NaiveDate,
    },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Errors from building SVG documents.
#[derive(Debug, Error, PartialEq)]
pub enum RenderError {
    #[error("nothing to plot")]
    Empty,
    #[error("plot dimensions must be positive")]
    BadDimensions,
    #[error("plot spec has no panels")]
    NoPanels,
    #[error("multi-pressure plot needs at least two series, got {0}")]
    TooFewSeries(usize),
    #[error("series for {0} hPa does not share the date axis of the first series")]
    MismatchedDates(f64),
}
