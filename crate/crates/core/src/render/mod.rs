//! SVG figures for score series, multi-pressure overlays and the event
//! scatter. Output is a pure function of the input: identical inputs give
//! byte-identical documents.
//!
//! Every plotted value is a `<circle>` or `<rect>` carrying `class="pt"` plus
//! `data-panel`, `data-series`, `data-x` and `data-y` attributes, so plots can
//! be checked without parsing geometry.

mod svg;

use std::collections::{BTreeMap, BTreeSet};

use chrono::NaiveDate;

use crate::error::RenderError;
use crate::scores::{Baseline, EventScore, ScoreSeries};
use svg::{escape, num, SvgDoc};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Panel {
    Lifespans,
    Split,
    Displacement,
    Scatter,
}

impl Panel {
    fn key(self) -> &'static str {
        match self {
            Panel::Lifespans => "lifespans",
            Panel::Split => "split",
            Panel::Displacement => "displacement",
            Panel::Scatter => "scatter",
        }
    }

    fn title(self) -> &'static str {
        match self {
            Panel::Lifespans => "Two longest H1 lifespans (m)",
            Panel::Split => "Split score",
            Panel::Displacement => "Displacement score",
            Panel::Scatter => "Event maxima",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    pub width: u32,
    pub height: u32,
    pub panels: Vec<Panel>,
    pub emphasize_focal: bool,
    /// Legend labels for multi-series plots; empty means `"<p> hPa"`.
    pub labels: Vec<String>,
}

impl PlotSpec {
    pub fn series() -> Self {
        PlotSpec {
            width: 960,
            height: 900,
            panels: vec![Panel::Lifespans, Panel::Split, Panel::Displacement],
            emphasize_focal: true,
            labels: Vec::new(),
        }
    }

    pub fn multi_pressure() -> Self {
        PlotSpec {
            width: 960,
            height: 640,
            panels: vec![Panel::Split, Panel::Displacement],
            emphasize_focal: true,
            labels: Vec::new(),
        }
    }

    pub fn scatter() -> Self {
        PlotSpec {
            width: 640,
            height: 560,
            panels: vec![Panel::Scatter],
            emphasize_focal: false,
            labels: Vec::new(),
        }
    }

    fn validate(&self) -> Result<(), RenderError> {
        if self.width == 0 || self.height == 0 {
            return Err(RenderError::BadDimensions);
        }
        if self.panels.is_empty() {
            return Err(RenderError::NoPanels);
        }
        Ok(())
    }
}

pub const MAX_TICK_LABELS: usize = 16;

/// Indices of the day labels to print: at most [`MAX_TICK_LABELS`], evenly
/// strided, always including `focal`.
pub fn tick_label_indices(n: usize, focal: Option<usize>) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    let stride = n.div_ceil(MAX_TICK_LABELS).max(1);
    let anchor = focal.unwrap_or(0) % stride;
    (anchor..n).step_by(stride).collect()
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22",
];
const WIND_RED: &str = "#d62728";

const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 150.0;
const MARGIN_TOP: f64 = 40.0;
const PANEL_GAP: f64 = 80.0;

struct Frame {
    left: f64,
    top: f64,
    width: f64,
    height: f64,
    y_lo: f64,
    y_hi: f64,
}

impl Frame {
    fn x_at(&self, k: usize, n: usize) -> f64 {
        if n <= 1 {
            self.left + self.width / 2.0
        } else {
            self.left + self.width * k as f64 / (n - 1) as f64
        }
    }

    fn y(&self, v: f64) -> f64 {
        let span = self.y_hi - self.y_lo;
        self.top + self.height * (1.0 - (v - self.y_lo) / span)
    }
}

fn panel_frames(spec: &PlotSpec) -> Vec<Frame> {
    let n = spec.panels.len() as f64;
    let usable = spec.height as f64 - MARGIN_TOP - PANEL_GAP * n;
    let ph = (usable / n).max(40.0);
    (0..spec.panels.len())
        .map(|k| Frame {
            left: MARGIN_LEFT,
            top: MARGIN_TOP + k as f64 * (ph + PANEL_GAP),
            width: (spec.width as f64 - MARGIN_LEFT - MARGIN_RIGHT).max(40.0),
            height: ph,
            y_lo: 0.0,
            y_hi: 1.0,
        })
        .collect()
}

fn draw_axes(doc: &mut SvgDoc, frame: &Frame, panel: Panel) {
    doc.rect(
        frame.left,
        frame.top,
        frame.width,
        frame.height,
        r##"fill="none" stroke="#444" stroke-width="1""##,
    );
    doc.text(
        frame.left,
        frame.top - 8.0,
        panel.title(),
        r#"font-size="13""#,
    );
    for k in 0..=4 {
        let v = frame.y_lo + (frame.y_hi - frame.y_lo) * k as f64 / 4.0;
        let y = frame.y(v);
        doc.line(frame.left - 4.0, y, frame.left, y, r##"stroke="#444""##);
        doc.line(
            frame.left,
            y,
            frame.left + frame.width,
            y,
            r##"stroke="#ddd" stroke-width="0.5""##,
        );
        let label = if frame.y_hi >= 10.0 {
            format!("{v:.0}")
        } else {
            format!("{v:.2}")
        };
        doc.text(frame.left - 8.0, y + 4.0, &label, r#"text-anchor="end""#);
    }
}

fn draw_day_labels(
    doc: &mut SvgDoc,
    frame: &Frame,
    dates: &[NaiveDate],
    focal: Option<usize>,
    bold: bool,
) {
    let n = dates.len();
    for k in tick_label_indices(n, focal) {
        let x = frame.x_at(k, n);
        let y = frame.top + frame.height + 14.0;
        let weight = if bold && Some(k) == focal {
            r#" font-weight="bold""#
        } else {
            ""
        };
        doc.line(
            x,
            frame.top + frame.height,
            x,
            frame.top + frame.height + 4.0,
            r##"stroke="#444""##,
        );
        doc.text(
            x,
            y,
            &dates[k].format("%Y-%m-%d").to_string(),
            &format!(
                r#"class="day-label" text-anchor="end" transform="rotate(-40 {} {})"{weight}"#,
                num(x),
                num(y)
            ),
        );
    }
}

#[derive(Clone, Copy)]
struct Point {
    date: NaiveDate,
    value: f64,
    flagged: bool,
}

fn draw_curve(
    doc: &mut SvgDoc,
    frame: &Frame,
    panel: Panel,
    series: &str,
    color: &str,
    points: &[Point],
) {
    let n = points.len();
    let path: Vec<(f64, f64)> = points
        .iter()
        .enumerate()
        .map(|(k, p)| (frame.x_at(k, n), frame.y(p.value)))
        .collect();
    doc.polyline(&path, &format!(r#"stroke="{color}" stroke-width="1.5""#));
    for (p, (x, y)) in points.iter().zip(path) {
        let data = format!(
            r#"data-panel="{}" data-series="{}" data-date="{}" data-x="{}" data-y="{}""#,
            panel.key(),
            escape(series),
            p.date.format("%Y-%m-%d"),
            p.date.format("%Y-%m-%d"),
            p.value
        );
        if p.flagged {
            doc.rect(
                x - 4.0,
                y - 4.0,
                8.0,
                8.0,
                &format!(r#"class="pt wind-neg" fill="{WIND_RED}" {data}"#),
            );
        } else {
            doc.circle(x, y, 3.0, &format!(r#"class="pt" fill="{color}" {data}"#));
        }
    }
}

fn draw_baseline(doc: &mut SvgDoc, frame: &Frame, baseline: &Baseline) {
    let x2 = frame.left + frame.width;
    let y = frame.y(baseline.mean);
    doc.line(
        frame.left,
        y,
        x2,
        y,
        r##"class="baseline-mean" stroke="#555" stroke-dasharray="6,4""##,
    );
    for v in [baseline.mean + baseline.std, baseline.mean - baseline.std] {
        let y = frame.y(v);
        doc.line(
            frame.left,
            y,
            x2,
            y,
            r##"class="baseline-std" stroke="#555" stroke-dasharray="1,3""##,
        );
    }
}

fn legend(doc: &mut SvgDoc, x: f64, y: f64, entries: &[(String, &str)]) {
    for (k, (label, color)) in entries.iter().enumerate() {
        let yy = y + 18.0 * k as f64;
        doc.open_group(r#"class="legend-entry""#);
        doc.rect(x, yy - 9.0, 10.0, 10.0, &format!(r#"fill="{color}""#));
        doc.text(x + 16.0, yy, label, "");
        doc.close_group();
    }
}

fn score_range(values: impl Iterator<Item = f64>) -> f64 {
    let hi = values.fold(1.0f64, f64::max);
    if hi > 1.0 {
        hi * 1.05
    } else {
        1.0
    }
}

/// Lifespan, split and displacement panels for one series.
pub fn render_series_svg(series: &ScoreSeries, spec: &PlotSpec) -> Result<String, RenderError> {
    spec.validate()?;
    if series.days.is_empty() {
        return Err(RenderError::Empty);
    }
    let dates = series.dates();
    let focal = series.focal_index();
    let mut doc = SvgDoc::new(spec.width, spec.height);
    doc.text(
        MARGIN_LEFT,
        20.0,
        &format!(
            "{} hPa, focal day {}",
            series.pressure_hpa,
            series.focal_date.format("%Y-%m-%d")
        ),
        r#"font-size="15""#,
    );
    let mut frames = panel_frames(spec);
    for (panel, frame) in spec.panels.iter().copied().zip(frames.iter_mut()) {
        doc.open_group(&format!(r#"class="panel" data-panel="{}""#, panel.key()));
        match panel {
            Panel::Lifespans => {
                let mut hi = series
                    .days
                    .iter()
                    .flat_map(|d| [d.h_cyl, d.l2_cyl])
                    .fold(0.0f64, f64::max);
                if let Some(b) = &series.baseline {
                    hi = hi.max(b.mean + b.std);
                }
                frame.y_hi = if hi > 0.0 { hi * 1.05 } else { 1.0 };
                draw_axes(&mut doc, frame, panel);
                if let Some(b) = &series.baseline {
                    draw_baseline(&mut doc, frame, b);
                }
                let h: Vec<Point> = series
                    .days
                    .iter()
                    .map(|d| Point {
                        date: d.date,
                        value: d.h_cyl,
                        flagged: false,
                    })
                    .collect();
                let l2: Vec<Point> = series
                    .days
                    .iter()
                    .map(|d| Point {
                        date: d.date,
                        value: d.l2_cyl,
                        flagged: false,
                    })
                    .collect();
                draw_curve(&mut doc, frame, panel, "h_cyl", PALETTE[0], &h);
                draw_curve(&mut doc, frame, panel, "l2_cyl", PALETTE[1], &l2);
                let x = frame.left + frame.width + 12.0;
                legend(
                    &mut doc,
                    x,
                    frame.top + 10.0,
                    &[
                        ("longest".to_string(), PALETTE[0]),
                        ("second".to_string(), PALETTE[1]),
                    ],
                );
            }
            Panel::Split | Panel::Displacement | Panel::Scatter => {
                let pick = |d: &crate::scores::DayScores| match panel {
                    Panel::Split => d.split_score,
                    _ => d.displacement_score,
                };
                frame.y_hi = score_range(series.days.iter().map(pick));
                draw_axes(&mut doc, frame, panel);
                let points: Vec<Point> = series
                    .days
                    .iter()
                    .map(|d| Point {
                        date: d.date,
                        value: pick(d),
                        flagged: d.wind_negative == Some(true),
                    })
                    .collect();
                draw_curve(&mut doc, frame, panel, panel.key(), PALETTE[2], &points);
            }
        }
        draw_day_labels(&mut doc, frame, &dates, focal, spec.emphasize_focal);
        doc.close_group();
    }
    Ok(doc.finish())
}

/// One curve per pressure level on shared axes.
pub fn render_multi_pressure_svg(
    series: &[ScoreSeries],
    spec: &PlotSpec,
) -> Result<String, RenderError> {
    spec.validate()?;
    if series.len() < 2 {
        return Err(RenderError::TooFewSeries(series.len()));
    }
    let dates = series[0].dates();
    if dates.is_empty() {
        return Err(RenderError::Empty);
    }
    for s in &series[1..] {
        if s.dates() != dates {
            return Err(RenderError::MismatchedDates(s.pressure_hpa));
        }
    }
    let labels: Vec<String> = series
        .iter()
        .enumerate()
        .map(|(k, s)| {
            spec.labels
                .get(k)
                .cloned()
                .unwrap_or_else(|| format!("{} hPa", s.pressure_hpa))
        })
        .collect();
    let focal = series[0].focal_index();
    let mut doc = SvgDoc::new(spec.width, spec.height);
    doc.text(
        MARGIN_LEFT,
        20.0,
        &format!(
            "Scores by pressure level, focal day {}",
            series[0].focal_date.format("%Y-%m-%d")
        ),
        r#"font-size="15""#,
    );
    let mut frames = panel_frames(spec);
    for (panel, frame) in spec.panels.iter().copied().zip(frames.iter_mut()) {
        doc.open_group(&format!(r#"class="panel" data-panel="{}""#, panel.key()));
        let pick = |d: &crate::scores::DayScores| match panel {
            Panel::Lifespans => d.h_cyl,
            Panel::Split => d.split_score,
            _ => d.displacement_score,
        };
        let all = series.iter().flat_map(|s| s.days.iter().map(pick));
        frame.y_hi = match panel {
            Panel::Lifespans => {
                let hi = all.fold(0.0f64, f64::max);
                if hi > 0.0 {
                    hi * 1.05
                } else {
                    1.0
                }
            }
            _ => score_range(all),
        };
        draw_axes(&mut doc, frame, panel);
        for (k, s) in series.iter().enumerate() {
            let points: Vec<Point> = s
                .days
                .iter()
                .map(|d| Point {
                    date: d.date,
                    value: pick(d),
                    flagged: false,
                })
                .collect();
            draw_curve(
                &mut doc,
                frame,
                panel,
                &labels[k],
                PALETTE[k % PALETTE.len()],
                &points,
            );
        }
        let entries: Vec<(String, &str)> = labels
            .iter()
            .enumerate()
            .map(|(k, l)| (l.clone(), PALETTE[k % PALETTE.len()]))
            .collect();
        legend(
            &mut doc,
            frame.left + frame.width + 12.0,
            frame.top + 10.0,
            &entries,
        );
        draw_day_labels(&mut doc, frame, &dates, focal, spec.emphasize_focal);
        doc.close_group();
    }
    Ok(doc.finish())
}

pub const MULTI_LABEL: &str = "Multi";

/// One point per event date. Dates claimed by more than one definition
/// collapse to a single "Multi" point at the largest maxima among them.
pub fn scatter_points(events: &[EventScore]) -> Vec<(String, NaiveDate, f64, f64)> {
    let mut by_date: BTreeMap<NaiveDate, (BTreeSet<&str>, f64, f64)> = BTreeMap::new();
    for e in events {
        let slot = by_date.entry(e.event_date).or_insert((
            BTreeSet::new(),
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
        ));
        slot.0.insert(&e.definition);
        slot.1 = slot.1.max(e.max_displacement);
        slot.2 = slot.2.max(e.max_split);
    }
    by_date
        .into_iter()
        .map(|(date, (defs, disp, split))| {
            let label = if defs.len() > 1 {
                MULTI_LABEL.to_string()
            } else {
                defs.into_iter().next().unwrap().to_string()
            };
            (label, date, disp, split)
        })
        .collect()
}

/// Displacement (x) against split (y) of each event's window maxima.
pub fn render_scatter_svg(events: &[EventScore], spec: &PlotSpec) -> Result<String, RenderError> {
    spec.validate()?;
    if events.is_empty() {
        return Err(RenderError::Empty);
    }
    let points = scatter_points(events);
    let mut classes: Vec<&str> = points
        .iter()
        .map(|p| p.0.as_str())
        .filter(|l| *l != MULTI_LABEL)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if points.iter().any(|p| p.0 == MULTI_LABEL) {
        classes.push(MULTI_LABEL);
    }
    let color = |label: &str| {
        let k = classes.iter().position(|c| *c == label).unwrap_or(0);
        PALETTE[k % PALETTE.len()]
    };

    let mut doc = SvgDoc::new(spec.width, spec.height);
    let mut frame = panel_frames(&PlotSpec {
        panels: vec![Panel::Scatter],
        ..spec.clone()
    })
    .remove(0);
    frame.height = frame.height.min(frame.width);
    let x_hi = score_range(points.iter().map(|p| p.2));
    let x_of = |v: f64| frame.left + frame.width * v / x_hi;
    doc.open_group(r#"class="panel" data-panel="scatter""#);
    draw_axes(&mut doc, &frame, Panel::Scatter);
    for k in 0..=4 {
        let v = x_hi * k as f64 / 4.0;
        let x = x_of(v);
        let y = frame.top + frame.height;
        doc.line(x, y, x, y + 4.0, r##"stroke="#444""##);
        doc.text(x, y + 16.0, &format!("{v:.2}"), r#"text-anchor="middle""#);
    }
    doc.text(
        frame.left + frame.width / 2.0,
        frame.top + frame.height + 36.0,
        "max displacement score",
        r#"text-anchor="middle""#,
    );
    let (lx, ly) = (frame.left - 50.0, frame.top + frame.height / 2.0);
    doc.text(
        lx,
        ly,
        "max split score",
        &format!(
            r#"text-anchor="middle" transform="rotate(-90 {} {})""#,
            num(lx),
            num(ly)
        ),
    );
    for (label, date, disp, split) in &points {
        doc.circle(
            x_of(*disp),
            frame.y(*split),
            4.0,
            &format!(
                r#"class="pt" fill="{}" data-panel="scatter" data-series="{}" data-date="{}" data-x="{}" data-y="{}""#,
                color(label),
                escape(label),
                date.format("%Y-%m-%d"),
                disp,
                split
            ),
        );
    }
    let entries: Vec<(String, &str)> = classes.iter().map(|c| (c.to_string(), color(c))).collect();
    legend(
        &mut doc,
        frame.left + frame.width + 12.0,
        frame.top + 10.0,
        &entries,
    );
    doc.close_group();
    Ok(doc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scores::DayScores;

    fn series(n: usize, pressure: f64, wind: bool, baseline: bool) -> ScoreSeries {
        let start = NaiveDate::from_ymd_opt(1987, 11, 30).unwrap();
        let days = (0..n)
            .map(|k| DayScores {
                date: start + chrono::Duration::days(k as i64),
                pressure_hpa: pressure,
                split_score: 0.02 * k as f64,
                displacement_score: 0.4 + 0.05 * k as f64,
                h_grid: 100.0,
                h_cyl: 400.0 - k as f64,
                l2_cyl: 10.0 * k as f64,
                degenerate: false,
                wind_negative: if wind { Some(k % 3 == 0) } else { None },
            })
            .collect();
        ScoreSeries {
            pressure_hpa: pressure,
            focal_date: start + chrono::Duration::days(5),
            days,
            baseline: baseline.then_some(Baseline {
                mean: 420.0,
                std: 15.0,
            }),
            warnings: Vec::new(),
        }
    }

    fn count_in_panel(svg: &str, panel: &str) -> usize {
        svg.lines()
            .filter(|l| {
                l.contains(r#"class="pt"#) && l.contains(&format!(r#"data-panel="{panel}""#))
            })
            .count()
    }

    #[test]
    fn every_day_plotted_despite_thinning() {
        let svg = render_series_svg(&series(40, 10.0, false, true), &PlotSpec::series()).unwrap();
        assert_eq!(count_in_panel(&svg, "split"), 40);
        assert_eq!(count_in_panel(&svg, "displacement"), 40);
        assert_eq!(count_in_panel(&svg, "lifespans"), 80);
        let labels = svg.matches(r#"class="day-label""#).count();
        assert!(labels <= 3 * MAX_TICK_LABELS);
        assert!(svg.contains(r#"font-weight="bold">1987-12-05<"#));
    }

    #[test]
    fn twelve_days() {
        let svg = render_series_svg(&series(12, 10.0, true, true), &PlotSpec::series()).unwrap();
        assert_eq!(count_in_panel(&svg, "split"), 12);
        assert_eq!(count_in_panel(&svg, "displacement"), 12);
        // days 0, 3, 6, 9 are flagged in both score panels
        assert_eq!(svg.matches("wind-neg").count(), 8);
        assert_eq!(svg.matches("baseline-mean").count(), 1);
        assert_eq!(svg.matches("baseline-std").count(), 2);
    }

    #[test]
    fn no_wind_no_baseline() {
        let svg = render_series_svg(&series(12, 10.0, false, false), &PlotSpec::series()).unwrap();
        assert_eq!(svg.matches("wind-neg").count(), 0);
        assert_eq!(svg.matches("baseline-").count(), 0);
    }

    #[test]
    fn empty_series_errors() {
        let mut s = series(3, 10.0, false, false);
        s.days.clear();
        assert_eq!(
            render_series_svg(&s, &PlotSpec::series()),
            Err(RenderError::Empty)
        );
        let bad = PlotSpec {
            width: 0,
            ..PlotSpec::series()
        };
        assert_eq!(
            render_series_svg(&series(3, 10.0, false, false), &bad),
            Err(RenderError::BadDimensions)
        );
        let none = PlotSpec {
            panels: vec![],
            ..PlotSpec::series()
        };
        assert_eq!(
            render_series_svg(&series(3, 10.0, false, false), &none),
            Err(RenderError::NoPanels)
        );
    }

    #[test]
    fn tick_labels_thinned_with_focal() {
        assert_eq!(tick_label_indices(12, Some(5)), (0..12).collect::<Vec<_>>());
        for n in [17, 40, 181, 365] {
            for focal in [0, 7, n / 2, n - 1] {
                let ticks = tick_label_indices(n, Some(focal));
                assert!(ticks.len() <= MAX_TICK_LABELS, "n={n} focal={focal}");
                assert!(ticks.contains(&focal));
                let gaps: BTreeSet<usize> = ticks.windows(2).map(|w| w[1] - w[0]).collect();
                assert!(gaps.len() <= 1);
            }
        }
    }

    #[test]
    fn multi_pressure_overlay() {
        let three: Vec<_> = [10.0, 50.0, 100.0]
            .iter()
            .map(|&p| series(24, p, false, false))
            .collect();
        let svg = render_multi_pressure_svg(&three, &PlotSpec::multi_pressure()).unwrap();
        assert_eq!(count_in_panel(&svg, "split"), 72);
        assert_eq!(count_in_panel(&svg, "displacement"), 72);
        // one legend per panel
        assert_eq!(svg.matches(r#"class="legend-entry""#).count(), 3 * 2);
        assert!(svg.contains(">50 hPa<"));

        let two = &three[..2];
        let svg = render_multi_pressure_svg(two, &PlotSpec::multi_pressure()).unwrap();
        assert_eq!(svg.matches(r#"class="legend-entry""#).count(), 2 * 2);

        let shifted = vec![
            series(24, 10.0, false, false),
            series(23, 50.0, false, false),
        ];
        assert_eq!(
            render_multi_pressure_svg(&shifted, &PlotSpec::multi_pressure()),
            Err(RenderError::MismatchedDates(50.0))
        );
        assert_eq!(
            render_multi_pressure_svg(&three[..1], &PlotSpec::multi_pressure()),
            Err(RenderError::TooFewSeries(1))
        );
    }

    fn ev(def: &str, date: &str, disp: f64, split: f64) -> EventScore {
        EventScore {
            definition: def.to_string(),
            event_date: crate::field::parse_date(date).unwrap(),
            max_split: split,
            max_displacement: disp,
        }
    }

    #[test]
    fn scatter_points_and_classes() {
        let events = vec![
            ev("CP07", "1963-01-28", 0.95, 0.2),
            ev("CP07", "1968-01-07", 0.9, 0.6),
            ev("MOM", "1971-01-18", 0.8, 0.1),
            ev("MOM", "1979-02-22", 0.99, 0.3),
            ev("CP07", "1984-12-31", 1.1, 0.4),
        ];
        let svg = render_scatter_svg(&events, &PlotSpec::scatter()).unwrap();
        assert_eq!(count_in_panel(&svg, "scatter"), 5);
        assert_eq!(svg.matches(r#"class="legend-entry""#).count(), 2);
    }

    #[test]
    fn scatter_multi_dedup() {
        let events = vec![
            ev("CP07", "1987-12-07", 0.92, 0.28),
            ev("MOM", "1987-12-07", 0.90, 0.30),
            ev("U&M", "1987-12-07", 0.85, 0.10),
        ];
        let points = scatter_points(&events);
        assert_eq!(points.len(), 1);
        assert_eq!(points[0].0, MULTI_LABEL);
        let svg = render_scatter_svg(&events, &PlotSpec::scatter()).unwrap();
        assert_eq!(count_in_panel(&svg, "scatter"), 1);
        assert!(svg.contains(r#"data-series="Multi""#));
    }

    #[test]
    fn scatter_coordinates() {
        let svg = render_scatter_svg(
            &[ev("CP07", "1987-12-07", 0.92, 0.28)],
            &PlotSpec::scatter(),
        )
        .unwrap();
        assert!(svg.contains(r#"data-x="0.92" data-y="0.28""#));
        assert_eq!(
            render_scatter_svg(&[], &PlotSpec::scatter()),
            Err(RenderError::Empty)
        );
    }

    #[test]
    fn deterministic_bytes() {
        let s = series(30, 10.0, true, true);
        let a = render_series_svg(&s, &PlotSpec::series()).unwrap();
        let b = render_series_svg(&s.clone(), &PlotSpec::series()).unwrap();
        assert_eq!(a, b);
    }
}
