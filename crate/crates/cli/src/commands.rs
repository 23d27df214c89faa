use std::collections::BTreeSet;
use std::fs::File;
use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use serde::Serialize;
use superpov_core::field::ConeCenter;
use superpov_core::scores::{score_dates, score_manifest_day};
use superpov_core::{
    build_complex, event_window_max, load_field, load_manifest, parse_events_csv, parse_wind_csv,
    reduce, render_multi_pressure_svg, render_scatter_svg, render_series_svg, score_day,
    score_series, synth_field, write_field_bin, write_field_csv, EventScore, GphField, PlotSpec,
    ScoreOptions, ScoreSeries, SynthKind, SynthSpec, WindSeries,
};

use crate::output::{events_csv, multi_svg_path, scores_csv, write_file};
use crate::{
    Cli, Command, CompareArgs, FieldSource, PairsArgs, ScoreArgs, ScoringArgs, SeriesArgs,
    SynthArgs,
};

pub fn run(cli: Cli) -> Result<()> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .context("starting worker threads")?;
    pool.install(|| match cli.command {
        Command::Score(a) => score(a),
        Command::Series(a) => series(a),
        Command::Compare(a) => compare(a),
        Command::Synth(a) => synth(a),
        Command::Pairs(a) => pairs(a),
    })
}

fn warn(message: impl std::fmt::Display) {
    eprintln!("superpov: warning: {message}");
}

fn open(path: &Path) -> Result<File> {
    File::open(path).with_context(|| format!("opening {}", path.display()))
}

fn options(s: &ScoringArgs) -> ScoreOptions {
    ScoreOptions {
        split_source: s.split_source,
        min_lat: s.min_lat,
    }
}

/// A wind file that does not exist leaves the plot without markers.
fn load_wind(path: Option<&Path>) -> Result<Option<WindSeries>> {
    let Some(path) = path else {
        return Ok(None);
    };
    if !path.exists() {
        warn(format_args!(
            "wind file {} not found; negative-wind markers disabled",
            path.display()
        ));
        return Ok(None);
    }
    let wind = parse_wind_csv(open(path)?).with_context(|| path.display().to_string())?;
    Ok(Some(wind))
}

fn load_source(src: &FieldSource, min_lat: Option<f64>) -> Result<GphField> {
    let field = match (&src.input, &src.manifest) {
        (Some(path), _) => load_field(path, src.date, src.pressure)?,
        (None, Some(manifest)) => {
            let manifest = load_manifest(manifest)?;
            match manifest.load(src.date, src.pressure) {
                Some(field) => field?,
                None => bail!(
                    "manifest has no entry for {} at {} hPa",
                    src.date,
                    src.pressure
                ),
            }
        }
        (None, None) => bail!("either --input or --manifest is required"),
    };
    Ok(match min_lat {
        Some(lat) => field.crop_min_lat(lat)?,
        None => field,
    })
}

fn score(a: ScoreArgs) -> Result<()> {
    ensure!(
        a.before == 0 && a.after == 0,
        "score handles a single day; use `series` for --before/--after windows"
    );
    let opts = options(&a.scoring);
    let src = &a.source;
    let mut day = match (&src.input, &src.manifest) {
        (Some(_), _) => score_day(&load_source(src, opts.min_lat)?, opts.split_source),
        (None, Some(path)) => {
            let manifest = load_manifest(path)?;
            match score_manifest_day(&manifest, src.date, src.pressure, &opts)? {
                Some(day) => day,
                None => bail!(
                    "no field for {} at {} hPa in {}",
                    src.date,
                    src.pressure,
                    path.display()
                ),
            }
        }
        (None, None) => bail!("either --input or --manifest is required"),
    };
    if let Some(wind) = load_wind(a.wind.as_deref())? {
        day.wind_negative = wind.is_negative(day.date);
    }
    if day.degenerate {
        warn(format_args!(
            "{}: polar diagram has no H1 class; scores set to 0",
            day.date
        ));
    }
    let json = serde_json::to_string_pretty(&day)? + "\n";
    match &a.out_json {
        Some(path) => write_file(path, &json)?,
        None => print!("{json}"),
    }
    if let Some(path) = &a.out_csv {
        write_file(path, scores_csv([&day])?)?;
    }
    Ok(())
}

fn series(a: SeriesArgs) -> Result<()> {
    let mut seen = BTreeSet::new();
    for p in &a.pressures {
        ensure!(
            p.is_finite() && *p > 0.0,
            "--pressure must be positive, got {p}"
        );
        ensure!(seen.insert(p.to_bits()), "--pressure {p} given twice");
    }
    let manifest = load_manifest(&a.manifest)?;
    let wind = load_wind(a.wind.as_deref())?;
    let opts = options(&a.scoring);
    let all: Vec<ScoreSeries> = a
        .pressures
        .iter()
        .map(|&p| {
            score_series(
                &manifest,
                p,
                a.date,
                a.before,
                a.after,
                wind.as_ref(),
                &opts,
            )
        })
        .collect::<Result<_, _>>()?;

    for s in &all {
        for w in &s.warnings {
            warn(&w.message);
        }
        if s.focal_index().is_none() {
            warn(format_args!(
                "focal day {} has no field at {} hPa",
                a.date, s.pressure_hpa
            ));
        }
    }

    if let Some(path) = &a.out_csv {
        write_file(path, scores_csv(all.iter().flat_map(|s| &s.days))?)?;
    }
    if let Some(path) = &a.out_svg {
        write_file(path, render_series_svg(&all[0], &PlotSpec::series())?)?;
        if all.len() > 1 {
            let multi = render_multi_pressure_svg(&all, &PlotSpec::multi_pressure())
                .context("multi-pressure plot (every level needs the same scored days)")?;
            write_file(&multi_svg_path(path), multi)?;
        }
    }
    if let Some(path) = &a.out_json {
        write_file(path, serde_json::to_string_pretty(&all)? + "\n")?;
    }
    for s in &all {
        let baseline = match &s.baseline {
            Some(b) => format!("baseline h_cyl {:.2} +/- {:.2}", b.mean, b.std),
            None => "no normal days for a baseline".to_string(),
        };
        println!(
            "{} hPa: {} days scored, {}",
            s.pressure_hpa,
            s.days.len(),
            baseline
        );
    }
    Ok(())
}

#[derive(Serialize)]
struct CompareReport<'a> {
    pressure_hpa: f64,
    events: &'a [EventScore],
    mean_max_displacement: f64,
    mean_max_split: f64,
}

fn compare(a: CompareArgs) -> Result<()> {
    let manifest = load_manifest(&a.manifest)?;
    let events =
        parse_events_csv(open(&a.events)?).with_context(|| a.events.display().to_string())?;
    ensure!(!events.is_empty(), "{} lists no events", a.events.display());

    let days: BTreeSet<_> = events.iter().flat_map(|e| e.days()).collect();
    let days: Vec<_> = days.into_iter().collect();
    let (scored, missing) = score_dates(&manifest, a.pressure, &days, &options(&a.scoring))?;
    if !missing.is_empty() {
        warn(format_args!(
            "{} of {} window days have no field at {} hPa",
            missing.len(),
            days.len(),
            a.pressure
        ));
    }

    let cmp = event_window_max(&scored, &events);
    for f in &cmp.failures {
        warn(f);
    }
    let Some((disp, split)) = cmp.grand_means() else {
        bail!("no event window contains a scored day");
    };

    if let Some(path) = &a.out_csv {
        write_file(path, events_csv(&cmp.scores)?)?;
    }
    if let Some(path) = &a.out_svg {
        write_file(path, render_scatter_svg(&cmp.scores, &PlotSpec::scatter())?)?;
    }
    if let Some(path) = &a.out_json {
        let report = CompareReport {
            pressure_hpa: a.pressure,
            events: &cmp.scores,
            mean_max_displacement: disp,
            mean_max_split: split,
        };
        write_file(path, serde_json::to_string_pretty(&report)? + "\n")?;
    }
    println!("events: {}", cmp.scores.len());
    println!("mean max displacement: {disp:.4}");
    println!("mean max split: {split:.4}");
    Ok(())
}

fn synth(a: SynthArgs) -> Result<()> {
    let mut spec = match a.kind {
        SynthKind::Normal => SynthSpec::normal(a.nlat, a.nlon, a.depth),
        SynthKind::Displaced => SynthSpec::displaced(a.nlat, a.nlon, a.colat, a.lon, a.depth),
        SynthKind::Split => SynthSpec::split(
            a.nlat,
            a.nlon,
            ConeCenter {
                colat: a.colat,
                lon: a.lon,
                depth: a.depth,
            },
            ConeCenter {
                colat: a.colat,
                lon: (a.lon + 180.0).rem_euclid(360.0),
                depth: a.depth2.unwrap_or(a.depth),
            },
        ),
    };
    spec.base_height = a.base;
    spec.cone_radius = a.radius;
    spec.noise_amplitude = a.noise;
    spec.seed = a.seed;
    let field = synth_field(&spec)?;
    let is_csv = a
        .out
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    if is_csv {
        write_file(&a.out, write_field_csv(&field))
    } else {
        write_file(&a.out, write_field_bin(&field))
    }
}

fn pairs(a: PairsArgs) -> Result<()> {
    let field = load_source(&a.source, a.min_lat)?;
    let complex = build_complex(&field, a.topology);
    let csv = if a.complex {
        complex.to_csv()
    } else {
        reduce(&complex).to_csv()
    };
    match &a.out_csv {
        Some(path) => write_file(path, csv),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}
