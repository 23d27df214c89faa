use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use superpov_core::{DayScores, EventScore};

pub const SCORES_HEADER: [&str; 9] = [
    "date",
    "pressure_hpa",
    "split",
    "displacement",
    "h_grid",
    "h_cyl",
    "l2_cyl",
    "degenerate",
    "wind_negative",
];

pub const EVENTS_HEADER: [&str; 4] = ["definition", "event_date", "max_displacement", "max_split"];

fn to_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().context("flushing CSV buffer")?;
    Ok(String::from_utf8(bytes).expect("CSV built from UTF-8 strings"))
}

pub fn scores_csv<'a>(days: impl IntoIterator<Item = &'a DayScores>) -> Result<String> {
    to_csv(
        &SCORES_HEADER,
        days.into_iter().map(|d| {
            vec![
                d.date.to_string(),
                d.pressure_hpa.to_string(),
                d.split_score.to_string(),
                d.displacement_score.to_string(),
                d.h_grid.to_string(),
                d.h_cyl.to_string(),
                d.l2_cyl.to_string(),
                d.degenerate.to_string(),
                d.wind_negative.map(|b| b.to_string()).unwrap_or_default(),
            ]
        }),
    )
}

pub fn events_csv(events: &[EventScore]) -> Result<String> {
    to_csv(
        &EVENTS_HEADER,
        events.iter().map(|e| {
            vec![
                e.definition.clone(),
                e.event_date.to_string(),
                e.max_displacement.to_string(),
                e.max_split.to_string(),
            ]
        }),
    )
}

pub fn write_file(path: &Path, contents: impl AsRef<[u8]>) -> Result<()> {
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

/// `plots/day.svg` -> `plots/day.multi.svg`.
pub fn multi_svg_path(path: &Path) -> PathBuf {
    let stem = path.file_stem().unwrap_or_default().to_string_lossy();
    path.with_file_name(format!("{stem}.multi.svg"))
}
