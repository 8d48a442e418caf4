//! Exact construction and analysis of the golden Tonnetz: a planar lattice
//! of golden triangles and gnomons whose vertices carry spelled tones.
//!
//! The crate is layered bottom-up:
//!
//! * [`tones`] — spelled pitch classes on the line of fifths, scales,
//!   modes, triads, and the P/L/R transformation group. Purely symbolic.
//! * [`goldenfield`] — exact arithmetic in Q(√5) and the plane of the 5th
//!   cyclotomic field, with a triangle classifier that decides "golden
//!   triangle / golden gnomon / other" by exact field equalities.
//! * [`figure`] — the canonical 7-point base figure (bundled as versioned
//!   JSON data), the two admissibility conditions on scale arrangements,
//!   exhaustive labeling enumeration, and extension-candidate queries.
//! * [`tonnetz`] — assembles finite windows of the lattice by repeated
//!   gluing with exact vertex merging, and answers representability,
//!   transformation, and connectivity queries.
//! * [`render`] — deterministic SVG output for templates and windows.
//!
//! All geometric decisions (equality, ordering, orientation, shape class)
//! are made in exact arithmetic; floating point only appears when writing
//! SVG coordinates.

pub mod figure;
pub mod goldenfield;
pub mod render;
pub mod tones;
pub mod tonnetz;

pub use figure::{
    check_condition1, check_condition2, enumerate_labelings, filter_golden, gluing_candidates,
    h_extension_compatible, run_verification, v_extension_compatible, validate_atlas, AtlasError,
    Condition1Outcome, ConditionReport, ExtensionDirection, FigureAtlas, FigureTemplate, Glue,
    GluingCandidate, Labeling, ShapeKind, SymmetryQuotient, ValidationCheck, ValidationReport,
    VerificationSummary,
};
pub use goldenfield::{
    apply_isometry, classify_triangle, gs_sign, orientation, sq_distance, CycPoint, GoldenScalar,
    Isometry, ShapeClass,
};
pub use tones::{
    diatonic_triads, parse_plr_word, parse_tone, plr_apply, plr_word, render_tone,
    scales_containing, transpose_fifths, DiatonicQuality, DiatonicTriad, ParseError, PlrOp, Scale,
    ScaleKind, TheoryError, Tone, Triad, TriadQuality,
};
pub use tonnetz::{
    build_window, BuildError, ConnectionWitness, HorizontalRule, LatticeVariant, Occurrence,
    PlacedFigure, QueryError, TonnetzWindow, VerticalRule, WindowVertex,
};
pub use render::{
    render_svg, Highlight, HighlightKind, HighlightStyle, RenderError, RenderOptions,
    RenderSubject,
};
