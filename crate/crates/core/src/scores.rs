//! Split and displacement scores.
//!
//! The split score is the second-longest H1 lifespan over the longest one.
//! The displacement score is the longest grid-rectangle lifespan over the
//! longest polar-disk lifespan. A flat polar diagram (no loop with positive
//! lifespan) maps both scores to zero and raises the `degenerate` flag.

use std::collections::BTreeMap;

use chrono::{Duration, NaiveDate};
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{build_grid_complex, build_polar_complex};
use crate::error::{FieldError, ScoreError};
use crate::field::{load_field, DatasetManifest, EventRow, GphField, WindSeries};
use crate::persistence::{h1_lifespans, reduce, PersistenceDiagram};

/// Normal-day criterion used for the lifespan baseline.
pub const BASELINE_MAX_DISPLACEMENT: f64 = 0.1;
pub const BASELINE_MAX_SPLIT: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitSource {
    Grid,
    #[default]
    Polar,
}

impl std::str::FromStr for SplitSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grid" => Ok(SplitSource::Grid),
            "polar" => Ok(SplitSource::Polar),
            other => Err(format!("unknown split source {other:?} (grid|polar)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ScoreOptions {
    pub split_source: SplitSource,
    /// Rows south of this latitude are dropped before building complexes.
    pub min_lat: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DayScores {
    pub date: NaiveDate,
    pub pressure_hpa: f64,
    pub split_score: f64,
    pub displacement_score: f64,
    pub h_grid: f64,
    pub h_cyl: f64,
    pub l2_cyl: f64,
    pub degenerate: bool,
    pub wind_negative: Option<bool>,
}

fn longest(lifespans: &[f64]) -> f64 {
    lifespans.first().copied().unwrap_or(0.0)
}

fn ratio_of_top_two(lifespans: &[f64]) -> f64 {
    match lifespans {
        [first, second, ..] if *first > 0.0 => second / first,
        _ => 0.0,
    }
}

pub fn split_score(diagram: &PersistenceDiagram) -> f64 {
    ratio_of_top_two(&h1_lifespans(diagram))
}

pub fn displacement_score(grid: &PersistenceDiagram, cyl: &PersistenceDiagram) -> f64 {
    let h_cyl = longest(&h1_lifespans(cyl));
    if h_cyl > 0.0 {
        longest(&h1_lifespans(grid)) / h_cyl
    } else {
        0.0
    }
}

/// Builds both complexes, reduces both and fills every score field.
pub fn score_day(field: &GphField, split_source: SplitSource) -> DayScores {
    let grid = reduce(&build_grid_complex(field));
    let cyl = reduce(&build_polar_complex(field));
    let grid_l = h1_lifespans(&grid);
    let cyl_l = h1_lifespans(&cyl);
    let h_grid = longest(&grid_l);
    let h_cyl = longest(&cyl_l);
    let l2_cyl = cyl_l.get(1).copied().unwrap_or(0.0);
    let degenerate = h_cyl <= 0.0;
    let (split_score, displacement_score) = if degenerate {
        (0.0, 0.0)
    } else {
        let split = match split_source {
            SplitSource::Polar => ratio_of_top_two(&cyl_l),
            SplitSource::Grid => ratio_of_top_two(&grid_l),
        };
        (split, h_grid / h_cyl)
    };
    DayScores {
        date: field.date(),
        pressure_hpa: field.pressure_hpa(),
        split_score,
        displacement_score,
        h_grid,
        h_cyl,
        l2_cyl,
        degenerate,
        wind_negative: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Baseline {
    pub mean: f64,
    pub std: f64,
}

/// Mean and population standard deviation of `h_cyl` over normal days.
pub fn normal_baseline(days: &[DayScores]) -> Option<Baseline> {
    let normal: Vec<f64> = days
        .iter()
        .filter(|d| {
            d.displacement_score < BASELINE_MAX_DISPLACEMENT && d.split_score < BASELINE_MAX_SPLIT
        })
        .map(|d| d.h_cyl)
        .collect();
    if normal.is_empty() {
        return None;
    }
    let n = normal.len() as f64;
    let mean = normal.iter().sum::<f64>() / n;
    let var = normal.iter().map(|h| (h - mean).powi(2)).sum::<f64>() / n;
    Some(Baseline {
        mean,
        std: var.sqrt(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesWarning {
    pub date: NaiveDate,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoreSeries {
    pub pressure_hpa: f64,
    pub focal_date: NaiveDate,
    pub days: Vec<DayScores>,
    pub baseline: Option<Baseline>,
    pub warnings: Vec<SeriesWarning>,
}

impl ScoreSeries {
    pub fn dates(&self) -> Vec<NaiveDate> {
        self.days.iter().map(|d| d.date).collect()
    }

    pub fn focal_index(&self) -> Option<usize> {
        self.days.iter().position(|d| d.date == self.focal_date)
    }
}

/// Loads and scores one manifest entry. `Ok(None)` means the day has no
/// entry or its file does not exist.
pub fn score_manifest_day(
    manifest: &DatasetManifest,
    date: NaiveDate,
    pressure_hpa: f64,
    options: &ScoreOptions,
) -> Result<Option<DayScores>, FieldError> {
    let Some(path) = manifest.get(date, pressure_hpa) else {
        return Ok(None);
    };
    if !path.exists() {
        return Ok(None);
    }
    let field = load_field(path, date, pressure_hpa)?;
    let field = match options.min_lat {
        Some(min_lat) => field.crop_min_lat(min_lat)?,
        None => field,
    };
    Ok(Some(score_day(&field, options.split_source)))
}

/// Scores a set of dates in parallel. Days without data are reported as
/// warnings; unreadable files abort.
pub fn score_dates(
    manifest: &DatasetManifest,
    pressure_hpa: f64,
    dates: &[NaiveDate],
    options: &ScoreOptions,
) -> Result<(BTreeMap<NaiveDate, DayScores>, Vec<SeriesWarning>), FieldError> {
    let results: Vec<_> = dates
        .par_iter()
        .map(|&d| (d, score_manifest_day(manifest, d, pressure_hpa, options)))
        .collect();
    let mut scored = BTreeMap::new();
    let mut warnings = Vec::new();
    for (date, result) in results {
        match result? {
            Some(s) => {
                scored.insert(date, s);
            }
            None => warnings.push(SeriesWarning {
                date,
                message: format!("no field for {date} at {pressure_hpa} hPa; day skipped"),
            }),
        }
    }
    Ok((scored, warnings))
}

pub fn window_dates(focal: NaiveDate, days_before: u32, days_after: u32) -> Vec<NaiveDate> {
    let start = focal - Duration::days(i64::from(days_before));
    start
        .iter_days()
        .take(days_before as usize + days_after as usize + 1)
        .collect()
}

pub fn score_series(
    manifest: &DatasetManifest,
    pressure_hpa: f64,
    focal_date: NaiveDate,
    days_before: u32,
    days_after: u32,
    wind: Option<&WindSeries>,
    options: &ScoreOptions,
) -> Result<ScoreSeries, ScoreError> {
    let dates = window_dates(focal_date, days_before, days_after);
    let (scored, warnings) = score_dates(manifest, pressure_hpa, &dates, options)?;
    if scored.is_empty() {
        return Err(ScoreError::EmptyWindow {
            pressure: pressure_hpa,
            start: dates[0],
            end: *dates.last().unwrap(),
        });
    }
    let days: Vec<DayScores> = scored
        .into_values()
        .map(|mut d| {
            d.wind_negative = wind.and_then(|w| w.is_negative(d.date));
            d
        })
        .collect();
    let baseline = normal_baseline(&days);
    Ok(ScoreSeries {
        pressure_hpa,
        focal_date,
        days,
        baseline,
        warnings,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EventScore {
    pub definition: String,
    pub event_date: NaiveDate,
    pub max_split: f64,
    pub max_displacement: f64,
}

#[derive(Debug, Default)]
pub struct EventComparison {
    pub scores: Vec<EventScore>,
    /// Rows whose window held no scored day.
    pub failures: Vec<ScoreError>,
}

impl EventComparison {
    /// Means of the per-event maxima, `(displacement, split)`.
    pub fn grand_means(&self) -> Option<(f64, f64)> {
        if self.scores.is_empty() {
            return None;
        }
        let n = self.scores.len() as f64;
        let disp = self.scores.iter().map(|s| s.max_displacement).sum::<f64>() / n;
        let split = self.scores.iter().map(|s| s.max_split).sum::<f64>() / n;
        Some((disp, split))
    }
}

/// Anything that can hand out the scores of a given day.
pub trait DayScoreProvider {
    fn day_scores(&self, date: NaiveDate) -> Option<DayScores>;
}

impl DayScoreProvider for BTreeMap<NaiveDate, DayScores> {
    fn day_scores(&self, date: NaiveDate) -> Option<DayScores> {
        self.get(&date).cloned()
    }
}

impl<F: Fn(NaiveDate) -> Option<DayScores>> DayScoreProvider for F {
    fn day_scores(&self, date: NaiveDate) -> Option<DayScores> {
        self(date)
    }
}

/// Maximum split and displacement scores over each event's window.
pub fn event_window_max(provider: &impl DayScoreProvider, events: &[EventRow]) -> EventComparison {
    let mut out = EventComparison::default();
    for ev in events {
        let mut best: Option<(f64, f64)> = None;
        for day in ev.days() {
            if let Some(s) = provider.day_scores(day) {
                let (split, disp) = best.unwrap_or((f64::NEG_INFINITY, f64::NEG_INFINITY));
                best = Some((split.max(s.split_score), disp.max(s.displacement_score)));
            }
        }
        match best {
            Some((max_split, max_displacement)) => out.scores.push(EventScore {
                definition: ev.definition.clone(),
                event_date: ev.event_date,
                max_split,
                max_displacement,
            }),
            None => out.failures.push(ScoreError::EmptyEventWindow {
                definition: ev.definition.clone(),
                event_date: ev.event_date,
                start: ev.window_start,
                end: ev.window_end,
            }),
        }
    }
    out
}
