//! `superpov`: split and displacement scores for the polar vortex.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use chrono::NaiveDate;
use clap::{Args, Parser, Subcommand};
use superpov_core::field::{parse_date, DEFAULT_BASE_HEIGHT, DEFAULT_CONE_RADIUS, DEFAULT_DEPTH};
use superpov_core::{SplitSource, SynthKind, Topology};

#[derive(Debug, Parser)]
#[command(
    name = "superpov",
    version,
    about = "Persistent-homology scores for the stratospheric polar vortex"
)]
struct Cli {
    /// Worker threads for per-day scoring (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Score a single day and print its scores as JSON.
    Score(ScoreArgs),
    /// Score a window of days around a focal date and plot it.
    Series(SeriesArgs),
    /// Maximum scores over the windows of an event catalog.
    Compare(CompareArgs),
    /// Write a synthetic vortex field.
    Synth(SynthArgs),
    /// Dump a persistence diagram (or the filtered complex) of one field.
    Pairs(PairsArgs),
}

fn date_arg(s: &str) -> Result<NaiveDate, String> {
    parse_date(s).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Args)]
struct ScoringArgs {
    /// Drop latitude rows south of this value before building complexes.
    #[arg(long, value_name = "DEG")]
    min_lat: Option<f64>,
    /// Diagram the split score is read from.
    #[arg(long, value_name = "grid|polar", default_value = "polar")]
    split_source: SplitSource,
}

/// One field, either a file given directly or a manifest entry.
#[derive(Debug, Clone, Args)]
struct FieldSource {
    /// Field file (.csv as lat,lon,value; anything else as SPPV).
    #[arg(
        long,
        value_name = "PATH",
        conflicts_with = "manifest",
        required_unless_present = "manifest"
    )]
    input: Option<PathBuf>,
    /// Manifest CSV with date,pressure_hpa,path rows.
    #[arg(long, value_name = "PATH")]
    manifest: Option<PathBuf>,
    /// Day of the field (YYYY-MM-DD).
    #[arg(long, value_parser = date_arg)]
    date: NaiveDate,
    /// Pressure level in hPa.
    #[arg(long, value_name = "HPA", default_value_t = 10.0)]
    pressure: f64,
}

#[derive(Debug, Args)]
struct ScoreArgs {
    #[command(flatten)]
    source: FieldSource,
    #[command(flatten)]
    scoring: ScoringArgs,
    /// Must be 0; use `series` for longer windows.
    #[arg(long, default_value_t = 0)]
    before: u32,
    /// Must be 0; use `series` for longer windows.
    #[arg(long, default_value_t = 0)]
    after: u32,
    /// Zonal-mean zonal wind CSV (date,u_ms) for the negative-wind flag.
    #[arg(long, value_name = "PATH")]
    wind: Option<PathBuf>,
    /// Write the JSON here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out_json: Option<PathBuf>,
    /// Also write the scores as a one-row CSV.
    #[arg(long, value_name = "PATH")]
    out_csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    /// Manifest CSV with date,pressure_hpa,path rows.
    #[arg(long, value_name = "PATH")]
    manifest: PathBuf,
    /// Focal day (YYYY-MM-DD).
    #[arg(long, value_parser = date_arg)]
    date: NaiveDate,
    /// Days before the focal day.
    #[arg(long, default_value_t = 0)]
    before: u32,
    /// Days after the focal day.
    #[arg(long, default_value_t = 0)]
    after: u32,
    /// Pressure level in hPa; repeat for a multi-pressure overlay.
    #[arg(long = "pressure", value_name = "HPA", default_values_t = [10.0])]
    pressures: Vec<f64>,
    /// Zonal-mean zonal wind CSV (date,u_ms); days with u < 0 are marked.
    #[arg(long, value_name = "PATH")]
    wind: Option<PathBuf>,
    #[command(flatten)]
    scoring: ScoringArgs,
    /// Scores CSV, one row per day and pressure.
    #[arg(long, value_name = "PATH")]
    out_csv: Option<PathBuf>,
    /// Series plot of the first pressure. With several pressures the overlay
    /// goes next to it as <stem>.multi.svg.
    #[arg(long, value_name = "PATH")]
    out_svg: Option<PathBuf>,
    /// Full series (scores, baseline, warnings) as JSON.
    #[arg(long, value_name = "PATH")]
    out_json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// Manifest CSV with date,pressure_hpa,path rows.
    #[arg(long, value_name = "PATH")]
    manifest: PathBuf,
    /// Event catalog CSV with definition,event_date,window_start,window_end rows.
    #[arg(long, value_name = "PATH")]
    events: PathBuf,
    /// Pressure level in hPa.
    #[arg(long, value_name = "HPA", default_value_t = 10.0)]
    pressure: f64,
    #[command(flatten)]
    scoring: ScoringArgs,
    /// Event scores CSV.
    #[arg(long, value_name = "PATH")]
    out_csv: Option<PathBuf>,
    /// Scatter plot of max displacement against max split.
    #[arg(long, value_name = "PATH")]
    out_svg: Option<PathBuf>,
    /// Event scores and grand means as JSON.
    #[arg(long, value_name = "PATH")]
    out_json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SynthArgs {
    /// Vortex shape.
    #[arg(long, value_name = "normal|displaced|split", default_value = "normal")]
    kind: SynthKind,
    /// Seed for the uniform noise.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Latitude rows, evenly spaced from 0 to 90.
    #[arg(long, default_value_t = 19)]
    nlat: usize,
    /// Longitude columns, evenly spaced from 0.
    #[arg(long, default_value_t = 36)]
    nlon: usize,
    /// Height outside the cones, meters.
    #[arg(long, default_value_t = DEFAULT_BASE_HEIGHT)]
    base: f64,
    /// Depth of the (first) cone, meters.
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    depth: f64,
    /// Depth of the second cone of a split vortex (defaults to --depth).
    #[arg(long)]
    depth2: Option<f64>,
    /// Cone radius, great-circle degrees.
    #[arg(long, default_value_t = DEFAULT_CONE_RADIUS)]
    radius: f64,
    /// Colatitude of the displaced or split centers, degrees.
    #[arg(long, default_value_t = 30.0)]
    colat: f64,
    /// Longitude of the (first) center; a split's second center sits 180 degrees away.
    #[arg(long, default_value_t = 0.0)]
    lon: f64,
    /// Amplitude of uniform noise in [-noise, noise], meters.
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    /// Output path (.csv for text, anything else for SPPV).
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct PairsArgs {
    #[command(flatten)]
    source: FieldSource,
    /// Complex to build.
    #[arg(long, value_name = "grid|polar", default_value = "polar")]
    topology: Topology,
    /// Drop latitude rows south of this value first.
    #[arg(long, value_name = "DEG")]
    min_lat: Option<f64>,
    /// Dump the filtered complex (dim,height,v0,v1,v2) instead of the diagram.
    #[arg(long)]
    complex: bool,
    /// Write here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out_csv: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("superpov: error: {}", one_line(&err));
            ExitCode::FAILURE
        }
    }
}

/// Joins the error chain, skipping causes whose text the outer message
/// already carries.
fn one_line(err: &anyhow::Error) -> String {
    let mut line = String::new();
    for cause in err.chain() {
        let msg = cause.to_string();
        if line.contains(&msg) {
            continue;
        }
        if !line.is_empty() {
            line.push_str(": ");
        }
        line.push_str(&msg);
    }
    line
}
