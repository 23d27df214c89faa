//! Threshold-free split and displacement scores for the stratospheric polar
//! vortex, computed from superlevel-set persistent homology of daily
//! geopotential-height fields.
//!
//! The pipeline per day: a [`GphField`] is triangulated twice, as a flat
//! grid rectangle and as a pole-centered disk ([`complex`]); both complexes
//! are reduced to persistence diagrams ([`persistence`]); the longest H1
//! lifespans of the two diagrams give the scores ([`scores`]). Series of
//! scores are drawn as SVG by [`render`].

pub mod complex;
pub mod error;
pub mod field;
pub mod persistence;
pub mod render;
pub mod scores;

pub use complex::{
    build_complex, build_grid_complex, build_polar_complex, filtration_order, rectangle_complex,
    FilteredComplex, FiltrationOrder, SimplexId, Topology,
};
pub use error::{ComplexError, FieldError, RenderError, ScoreError};
pub use field::{
    load_field, load_manifest, parse_events_csv, parse_field_bin, parse_field_csv, parse_wind_csv,
    synth_field, write_field_bin, write_field_csv, DatasetManifest, EventList, EventRow, GphField,
    SynthKind, SynthSpec, WindSeries,
};
pub use persistence::{
    betti_at, h1_lifespans, reduce, reduce_naive, PersistenceDiagram, PersistencePair,
};
pub use render::{
    render_multi_pressure_svg, render_scatter_svg, render_series_svg, Panel, PlotSpec,
};
pub use scores::{
    displacement_score, event_window_max, normal_baseline, score_day, score_series, split_score,
    Baseline, DayScores, EventComparison, EventScore, ScoreOptions, ScoreSeries, SplitSource,
};
