mod common;

use chrono::Duration;
use common::*;
use superpov_core::{score_day, SplitSource};

#[test]
fn synth_then_score_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let field = dir.path().join("split.sppv");
    let out = superpov(&[
        "synth",
        "--kind",
        "split",
        "--depth",
        "300",
        "--depth2",
        "150",
        "--lon",
        "90",
        "--out",
        path_str(&field),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));

    let csv = dir.path().join("day.csv");
    let out = superpov(&[
        "score",
        "--input",
        path_str(&field),
        "--date",
        "1987-12-05",
        "--before",
        "0",
        "--after",
        "0",
        "--out-csv",
        path_str(&csv),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["date"], "1987-12-05");
    assert_eq!(json["split_score"], 0.5);
    assert_eq!(json["h_cyl"], 300.0);
    assert_eq!(json["degenerate"], false);

    let rows = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = rows.lines().collect();
    assert_eq!(
        lines[0],
        "date,pressure_hpa,split,displacement,h_grid,h_cyl,l2_cyl,degenerate,wind_negative"
    );
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("1987-12-05,10,0.5,"));
}

#[test]
fn synth_csv_output_matches_binary() {
    let dir = tempfile::tempdir().unwrap();
    let bin = dir.path().join("f.sppv");
    let txt = dir.path().join("f.csv");
    for out in [&bin, &txt] {
        let o = superpov(&[
            "synth",
            "--kind",
            "displaced",
            "--noise",
            "3",
            "--seed",
            "9",
            "--out",
            path_str(out),
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let a = superpov_core::load_field(&bin, date("2000-01-01"), 10.0).unwrap();
    let b = superpov_core::load_field(&txt, date("2000-01-01"), 10.0).unwrap();
    assert_eq!(a, b);
}

#[test]
fn score_reads_manifest_and_wind() {
    let dir = tempfile::tempdir().unwrap();
    let start = date("1987-11-30");
    let (manifest, wind) = winter_dataset(dir.path(), start, 12, &[10.0]);
    let focal = (start + Duration::days(6)).to_string();
    let out = superpov(&[
        "score",
        "--manifest",
        path_str(&manifest),
        "--date",
        &focal,
        "--wind",
        path_str(&wind),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["wind_negative"], true);
    assert!(json["split_score"].as_f64().unwrap() > 0.8);

    let out = superpov(&[
        "score",
        "--manifest",
        path_str(&manifest),
        "--date",
        "1999-01-01",
    ]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("no field for 1999-01-01"));
}

#[test]
fn series_twelve_day_window() {
    let dir = tempfile::tempdir().unwrap();
    let (manifest, wind) = winter_dataset(dir.path(), date("1987-11-25"), 20, &[10.0]);
    let csv = dir.path().join("s.csv");
    let svg = dir.path().join("s.svg");
    let out = superpov(&[
        "series",
        "--manifest",
        path_str(&manifest),
        "--date",
        "1987-12-05",
        "--before",
        "5",
        "--after",
        "6",
        "--wind",
        path_str(&wind),
        "--out-csv",
        path_str(&csv),
        "--out-svg",
        path_str(&svg),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let rows = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(rows.lines().count(), 13);
    assert!(rows.lines().nth(1).unwrap().starts_with("1987-11-30,"));
    assert!(rows.lines().last().unwrap().starts_with("1987-12-11,"));

    let svg = std::fs::read_to_string(&svg).unwrap();
    assert!(svg.starts_with("<?xml") || svg.starts_with("<svg"));
    assert!(svg.contains("wind-neg"));
    assert!(svg.contains("baseline-mean"));
    assert!(!dir.path().join("s.multi.svg").exists());
    assert!(stdout(&out).contains("12 days scored"));
}

#[test]
fn series_multi_pressure_overlay() {
    let dir = tempfile::tempdir().unwrap();
    let (manifest, _) = winter_dataset(dir.path(), date("1987-12-01"), 8, &[10.0, 50.0, 100.0]);
    let csv = dir.path().join("m.csv");
    let svg = dir.path().join("m.svg");
    let out = superpov(&[
        "series",
        "--manifest",
        path_str(&manifest),
        "--date",
        "1987-12-04",
        "--before",
        "3",
        "--after",
        "4",
        "--pressure",
        "10",
        "--pressure",
        "50",
        "--pressure",
        "100",
        "--out-csv",
        path_str(&csv),
        "--out-svg",
        path_str(&svg),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(
        std::fs::read_to_string(&csv).unwrap().lines().count(),
        1 + 3 * 8
    );
    let multi = std::fs::read_to_string(dir.path().join("m.multi.svg")).unwrap();
    assert_eq!(multi.matches("class=\"legend-entry\"").count(), 6);

    let out = superpov(&[
        "series",
        "--manifest",
        path_str(&manifest),
        "--date",
        "1987-12-04",
        "--pressure",
        "10",
        "--pressure",
        "10",
    ]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("given twice"));
}

#[test]
fn series_skips_missing_days_with_warning() {
    let dir = tempfile::tempdir().unwrap();
    let (manifest, _) = winter_dataset(dir.path(), date("1987-11-30"), 12, &[10.0]);
    std::fs::remove_file(dir.path().join("1987-12-02_10hpa.sppv")).unwrap();
    let csv = dir.path().join("s.csv");
    let out = superpov(&[
        "series",
        "--manifest",
        path_str(&manifest),
        "--date",
        "1987-12-05",
        "--before",
        "5",
        "--after",
        "6",
        "--wind",
        path_str(&dir.path().join("absent.csv")),
        "--out-csv",
        path_str(&csv),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 12);
    let err = stderr(&out);
    assert!(err.contains("no field for 1987-12-02"));
    assert!(err.contains("markers disabled"));
}

#[test]
fn compare_reports_window_maxima() {
    let dir = tempfile::tempdir().unwrap();
    let start = date("1987-12-01");
    let field = |k: usize, _p: f64| match k {
        3 => split_day(19, 36, 300.0, 240.0, 1),
        5 => displaced_day(19, 36, 30.0, 200.0, 2),
        _ => normal_day(19, 36, k as u64),
    };
    let manifest = write_dataset(dir.path(), start, 10, &[10.0], field);
    let expected_split = score_day(&field(3, 10.0), SplitSource::Polar).split_score;
    let expected_disp = (0..10)
        .map(|k| score_day(&field(k, 10.0), SplitSource::Polar).displacement_score)
        .fold(f64::NEG_INFINITY, f64::max);

    let events = dir.path().join("events.csv");
    std::fs::write(
        &events,
        "definition,event_date,window_start,window_end\nCP07,1987-12-04,1987-12-01,1987-12-10\n",
    )
    .unwrap();
    let csv = dir.path().join("ev.csv");
    let svg = dir.path().join("ev.svg");
    let out = superpov(&[
        "compare",
        "--manifest",
        path_str(&manifest),
        "--events",
        path_str(&events),
        "--out-csv",
        path_str(&csv),
        "--out-svg",
        path_str(&svg),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "definition,event_date,max_displacement,max_split");
    let cells: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(cells[0], "CP07");
    assert_eq!(cells[1], "1987-12-04");
    assert_eq!(cells[2].parse::<f64>().unwrap(), expected_disp);
    assert_eq!(cells[3].parse::<f64>().unwrap(), expected_split);
    assert!(stdout(&out).contains("events: 1"));
    assert!(std::fs::read_to_string(&svg)
        .unwrap()
        .contains("class=\"pt"));
}

#[test]
fn compare_fails_when_no_window_has_data() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = write_dataset(dir.path(), date("1987-12-01"), 2, &[10.0], |k, _| {
        normal_day(10, 18, k as u64)
    });
    let events = dir.path().join("events.csv");
    std::fs::write(
        &events,
        "definition,event_date,window_start,window_end\nX,1990-01-05,1990-01-01,1990-01-10\n",
    )
    .unwrap();
    let out = superpov(&[
        "compare",
        "--manifest",
        path_str(&manifest),
        "--events",
        path_str(&events),
    ]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("no event window contains a scored day"));
}

#[test]
fn pairs_dumps_diagram_and_complex() {
    let dir = tempfile::tempdir().unwrap();
    let field = dir.path().join("n.sppv");
    assert!(superpov(&[
        "synth",
        "--nlat",
        "5",
        "--nlon",
        "8",
        "--out",
        path_str(&field)
    ])
    .status
    .success());

    let out = superpov(&["pairs", "--input", path_str(&field), "--date", "2000-01-01"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("dim,birth,death,lifespan"));
    assert!(text
        .lines()
        .any(|l| l.starts_with("0,") && l.ends_with(",-inf,inf")));

    let out = superpov(&[
        "pairs",
        "--input",
        path_str(&field),
        "--date",
        "2000-01-01",
        "--topology",
        "grid",
        "--complex",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("dim,height,v0,v1,v2"));
    // 5x8 rectangle: 40 vertices, 8*4 + 7*5 + 7*4 edges, 2*7*4 triangles.
    assert_eq!(text.lines().count() - 1, 40 + 95 + 56);
}

#[test]
fn errors_are_one_line_and_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.sppv");
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "score",
            "--input",
            path_str(&missing),
            "--date",
            "2000-01-01",
        ],
        vec![
            "score",
            "--input",
            path_str(&missing),
            "--date",
            "2000-13-01",
        ],
        vec![
            "series",
            "--manifest",
            path_str(&missing),
            "--date",
            "2000-01-01",
        ],
        vec!["synth", "--kind", "tornado", "--out", path_str(&missing)],
        vec!["synth", "--nlat", "2", "--out", path_str(&missing)],
        vec!["score", "--bogus"],
    ];
    for args in cases {
        let out = superpov(&args);
        assert!(!out.status.success(), "{args:?}");
        let err = stderr(&out);
        assert!(!err.trim().is_empty(), "{args:?}");
        if !err.starts_with("error:") {
            assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
        }
    }
}

#[test]
fn empty_window_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = write_dataset(dir.path(), date("1987-12-01"), 3, &[10.0], |k, _| {
        normal_day(10, 18, k as u64)
    });
    let out = superpov(&[
        "series",
        "--manifest",
        path_str(&manifest),
        "--date",
        "1988-06-01",
        "--before",
        "2",
    ]);
    assert!(!out.status.success());
    assert_eq!(
        stderr(&out).trim_end(),
        "superpov: error: no fields available at 10 hPa between 1988-05-30 and 1988-06-01"
    );
}

#[test]
fn help_lists_every_flag() {
    let per_command: [(&str, &[&str]); 5] = [
        (
            "score",
            &[
                "--input",
                "--manifest",
                "--date",
                "--before",
                "--after",
                "--pressure",
                "--wind",
                "--min-lat",
                "--split-source",
                "--out-json",
                "--out-csv",
                "--jobs",
            ],
        ),
        (
            "series",
            &[
                "--manifest",
                "--date",
                "--before",
                "--after",
                "--pressure",
                "--wind",
                "--min-lat",
                "--split-source",
                "--out-csv",
                "--out-svg",
                "--out-json",
                "--jobs",
            ],
        ),
        (
            "compare",
            &[
                "--manifest",
                "--events",
                "--pressure",
                "--min-lat",
                "--split-source",
                "--out-csv",
                "--out-svg",
                "--out-json",
                "--jobs",
            ],
        ),
        (
            "synth",
            &[
                "--kind", "--seed", "--nlat", "--nlon", "--base", "--depth", "--depth2",
                "--radius", "--colat", "--lon", "--noise", "--out",
            ],
        ),
        (
            "pairs",
            &[
                "--input",
                "--manifest",
                "--date",
                "--pressure",
                "--topology",
                "--min-lat",
                "--complex",
                "--out-csv",
            ],
        ),
    ];
    for (cmd, flags) in per_command {
        let help = stdout(&superpov(&[cmd, "--help"]));
        for flag in flags {
            assert!(
                help.contains(&format!("{flag} ")),
                "{cmd} --help lacks {flag}"
            );
        }
    }
}
