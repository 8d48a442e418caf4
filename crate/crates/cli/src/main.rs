//! Command-line front end for the golden Tonnetz toolkit: verification,
//! arrangement enumeration, window building, queries, transformations, and
//! SVG rendering.
//!
//! Output conventions: machine-readable payloads (window JSON, SVG) go to
//! standard output unless `-o` redirects them to a file; human-readable
//! reports echo the atlas hash they were computed from. Failures print a
//! single machine-parsable `error code=<code>` line before any detail.
//! Exit status is 0 on success, 1 on domain errors, 2 on usage errors.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use golden_tonnetz::figure::{
    enumerate_labelings, filter_golden, gluing_candidates, run_verification, AtlasError,
    ExtensionDirection, FigureAtlas, Labeling, ShapeKind,
};
use golden_tonnetz::render::{
    render_svg, Highlight, HighlightKind, RenderError, RenderOptions, RenderSubject,
};
use golden_tonnetz::tones::{
    parse_plr_word, plr_word, Scale, Tone, Triad,
};
use golden_tonnetz::tonnetz::{
    build_window, BuildError, HorizontalRule, LatticeVariant, Occurrence, QueryError,
    TonnetzWindow, VerticalRule,
};

#[derive(Parser)]
#[command(
    name = "golden-tonnetz",
    version,
    about = "Construct, verify, query, and render the golden Tonnetz"
)]
struct Cli {
    /// Figure atlas JSON; defaults to the bundled canonical triangle atlas.
    #[arg(long, global = true, env = "GOLDEN_TONNETZ_ATLAS", value_name = "FILE")]
    atlas: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate both bundled atlases and re-run the enumeration and
    /// extension checks behind the lattice construction.
    Verify {
        /// Emit the verification report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// List the scale arrangements on a figure that keep neighboring scale
    /// tones adjacent, and flag those whose chords are all golden.
    Enumerate {
        #[arg(long, value_enum, default_value_t = ShapeArg::Triangle)]
        shape: ShapeArg,
        /// Scale to arrange, as `<root>-<kind>`.
        #[arg(long, default_value = "C-maj")]
        scale: String,
        /// Count mirror-image arrangements separately.
        #[arg(long)]
        no_symmetry_quotient: bool,
    },
    /// List the scales that can occupy a glued neighbor figure.
    Extensions {
        /// Restrict to one gluing direction (default: report both).
        #[arg(long, value_enum)]
        direction: Option<DirectionArg>,
    },
    /// Build a lattice window and export it as JSON.
    Lattice {
        /// Window extent, `<columns>x<rows>`.
        #[arg(long, default_value = "10x6")]
        extent: String,
        #[command(flatten)]
        variant: VariantArgs,
        /// Write the window JSON here instead of standard output.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Query a window for scales, triads, mode paths, or tone subgraphs.
    Find {
        #[command(subcommand)]
        query: FindQuery,
    },
    /// Walk a P/L/R word symbolically and locate each triad in a window.
    Transform {
        /// Starting triad, e.g. `Cmaj`.
        #[arg(long)]
        start: String,
        /// Transformation word over P, L, R, e.g. `RPL`.
        #[arg(long)]
        word: String,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Render a figure or window (optionally with highlights) as SVG.
    Render {
        #[arg(long, value_enum, default_value_t = SubjectArg::Window)]
        subject: SubjectArg,
        /// Figure shape when rendering a single figure.
        #[arg(long, value_enum, default_value_t = ShapeArg::Triangle)]
        shape: ShapeArg,
        /// Window extent, `<columns>x<rows>`.
        #[arg(long, default_value = "10x6")]
        extent: String,
        #[command(flatten)]
        variant: VariantArgs,
        /// Outline every figure carrying this scale.
        #[arg(long, value_name = "SCALE")]
        highlight_scale: Option<String>,
        /// Shade the central occurrence of this triad.
        #[arg(long, value_name = "TRIAD")]
        highlight_triad: Option<String>,
        /// Trace a mode path, given as `<root>-<kind>`.
        #[arg(long, value_name = "MODE")]
        highlight_mode: Option<String>,
        /// Mark a connected assignment of these comma-separated tones.
        #[arg(long, value_name = "TONES")]
        highlight_toneset: Option<String>,
        /// Shade a single move, given as `<triad>:<op>` (e.g. `Cmaj:R`).
        #[arg(long, value_name = "MOVE")]
        plr: Option<String>,
        /// Emit ♯/♭ instead of ASCII accidentals.
        #[arg(long)]
        unicode: bool,
        /// Decimal places for SVG coordinates.
        #[arg(long, default_value_t = 6)]
        precision: usize,
        /// Pixels per lattice unit.
        #[arg(long, default_value_t = 100.0)]
        pixels: f64,
        /// Write the SVG here instead of standard output.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FindQuery {
    /// Figures carrying a scale, as `<root>-<kind>`.
    Scale {
        spec: String,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Occurrences of a triad, as `<root>maj` or `<root>min`.
    Triad {
        spec: String,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// An edge path realizing a diatonic mode, as `<root>-<kind>`.
    Mode {
        spec: String,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// A connected one-vertex-per-tone assignment of comma-separated tones.
    Toneset {
        tones: String,
        #[command(flatten)]
        window: WindowArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShapeArg {
    Triangle,
    Gnomon,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Horizontal,
    Vertical,
}

#[derive(Clone, Copy, ValueEnum)]
enum SubjectArg {
    Figure,
    Window,
}

#[derive(Clone, Copy, ValueEnum)]
enum HorizontalArg {
    /// Each column transposes the scale a fifth up.
    Fifth,
    /// Every column repeats the base scale.
    #[value(name = "self")]
    SelfRepeat,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerticalArg {
    /// Reflected rows carry the relative minors.
    Relative,
    /// Reflected rows keep the major labels.
    Major,
}

#[derive(Args)]
struct VariantArgs {
    #[arg(long, value_enum, default_value_t = HorizontalArg::Fifth)]
    horizontal: HorizontalArg,
    #[arg(long, value_enum, default_value_t = VerticalArg::Relative)]
    vertical: VerticalArg,
}

impl VariantArgs {
    fn variant(&self) -> LatticeVariant {
        LatticeVariant {
            horizontal: match self.horizontal {
                HorizontalArg::Fifth => HorizontalRule::FifthShift,
                HorizontalArg::SelfRepeat => HorizontalRule::SelfRepeat,
            },
            vertical: match self.vertical {
                VerticalArg::Relative => VerticalRule::RelativeMinorReflect,
                VerticalArg::Major => VerticalRule::MajorReflect,
            },
        }
    }
}

#[derive(Args)]
struct WindowArgs {
    /// Window extent, `<columns>x<rows>`.
    #[arg(long, default_value = "10x6")]
    window: String,
    #[command(flatten)]
    variant: VariantArgs,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Atlas(#[from] AtlasError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Query(#[from] QueryError),
    #[error(transparent)]
    Render(#[from] RenderError),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("verification reported failures (see report above)")]
    VerificationFailed,
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) | CliError::Query(QueryError::NotAMode(_)) => "usage",
            CliError::Atlas(_) => "atlas",
            CliError::Build(BuildError::LabelConflict { .. }) => "label-conflict",
            CliError::Build(_) => "build",
            CliError::Query(_) => "not-found",
            CliError::Render(_) => "render",
            CliError::Io { .. } => "io",
            CliError::VerificationFailed => "verify",
        }
    }

    fn status(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Query(QueryError::NotAMode(_)) => 2,
            _ => 1,
        }
    }
}

fn usage(err: impl std::fmt::Display) -> CliError {
    CliError::Usage(err.to_string())
}

fn parse_extent(text: &str) -> Result<(u32, u32), CliError> {
    let (c, r) = text
        .split_once('x')
        .ok_or_else(|| usage(format!("extent {text:?} is not of the form <columns>x<rows>")))?;
    let columns = c
        .parse::<u32>()
        .map_err(|_| usage(format!("extent {text:?} has a bad column count {c:?}")))?;
    let rows = r
        .parse::<u32>()
        .map_err(|_| usage(format!("extent {text:?} has a bad row count {r:?}")))?;
    Ok((columns, rows))
}

fn parse_tones(text: &str) -> Result<BTreeSet<Tone>, CliError> {
    text.split(',')
        .map(|part| part.trim().parse::<Tone>().map_err(usage))
        .collect()
}

fn read_atlas(path: &Path) -> Result<FigureAtlas, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(FigureAtlas::from_json(&text)?)
}

/// The atlas the command operates on: the `--atlas` file when given (its
/// shape must match the requested one), else the bundled atlas of that
/// shape.
fn load_atlas(flag: &Option<PathBuf>, shape: ShapeKind) -> Result<FigureAtlas, CliError> {
    match flag {
        Some(path) => {
            let atlas = read_atlas(path)?;
            if atlas.template().shape_kind() != shape {
                return Err(usage(format!(
                    "atlas {} holds a {} figure, but the command asked for a {}",
                    path.display(),
                    atlas.template().shape_kind(),
                    shape
                )));
            }
            Ok(atlas)
        }
        None => Ok(match shape {
            ShapeKind::Triangle => FigureAtlas::triangle(),
            ShapeKind::Gnomon => FigureAtlas::gnomon(),
        }),
    }
}

fn write_or_print(output: &Option<PathBuf>, payload: &str, summary: String) -> Result<(), CliError> {
    match output {
        Some(path) => {
            std::fs::write(path, payload).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            print!("{summary}");
            Ok(())
        }
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn arrangement_line(labeling: &Labeling) -> String {
    (1..=7u8)
        .map(|d| labeling.tone_at(d).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn describe_occurrence(window: &TonnetzWindow, occ: &Occurrence) -> String {
    let tones = occ
        .tones
        .iter()
        .map(Tone::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    let cells = occ
        .figure_refs
        .iter()
        .map(|&f| {
            let fig = &window.figures()[f];
            format!("({}, {}) {}", fig.cell.0, fig.cell.1, fig.scale)
        })
        .collect::<Vec<_>>()
        .join("; ");
    format!(
        "{} [{}] as {} at vertices {:?} in {}",
        occ.triad, tones, occ.shape, occ.vertex_indices, cells
    )
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Verify { json } => {
            let triangle = load_atlas(&cli.atlas, ShapeKind::Triangle)?;
            let gnomon = load_atlas(&None, ShapeKind::Gnomon)?;
            let summary = run_verification(&triangle, &gnomon)?;
            if json {
                let doc = serde_json::json!({
                    "triangle_hash": summary.triangle_hash,
                    "gnomon_hash": summary.gnomon_hash,
                    "triangle_checks": summary.triangle_validation.checks,
                    "gnomon_checks": summary.gnomon_validation.checks,
                    "triangle_adjacency_count": summary.triangle_adjacency_count,
                    "triangle_golden_count": summary.triangle_golden_count,
                    "triangle_survivor_is_canonical": summary.triangle_survivor_is_canonical,
                    "gnomon_adjacency_count": summary.gnomon_adjacency_count,
                    "gnomon_golden_count": summary.gnomon_golden_count,
                    "gnomon_survivor_h_compatible": summary.gnomon_survivor_h_compatible,
                    "gnomon_survivor_v_compatible": summary.gnomon_survivor_v_compatible,
                    "horizontal_candidates": summary
                        .horizontal_candidates
                        .iter()
                        .map(|c| c.major.to_string())
                        .collect::<Vec<_>>(),
                    "vertical_candidates": summary
                        .vertical_candidates
                        .iter()
                        .map(|c| {
                            serde_json::json!({
                                "major": c.major.to_string(),
                                "relative_minor": c.relative_minor.map(|m| m.to_string()),
                            })
                        })
                        .collect::<Vec<_>>(),
                    "pass": summary.all_pass(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("report"));
            } else {
                print!("{}", summary.to_text());
            }
            if summary.all_pass() {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
        Command::Enumerate {
            shape,
            scale,
            no_symmetry_quotient,
        } => {
            let kind = match shape {
                ShapeArg::Triangle => ShapeKind::Triangle,
                ShapeArg::Gnomon => ShapeKind::Gnomon,
            };
            let atlas = load_atlas(&cli.atlas, kind)?;
            let scale: Scale = scale.parse().map_err(usage)?;
            let labelings =
                enumerate_labelings(atlas.template(), &scale, !no_symmetry_quotient);
            let golden = filter_golden(atlas.template(), &scale, &labelings);
            let mut out = String::new();
            writeln!(out, "atlas {}", atlas.content_hash()).unwrap();
            writeln!(
                out,
                "arrangements of {} on the {} ({} mirror images): {}",
                scale,
                kind,
                if no_symmetry_quotient {
                    "counting"
                } else {
                    "not counting"
                },
                labelings.len()
            )
            .unwrap();
            for (i, labeling) in labelings.iter().enumerate() {
                let marker = if golden.contains(labeling) {
                    "  [golden]"
                } else {
                    ""
                };
                writeln!(out, "  {}: {}{}", i + 1, arrangement_line(labeling), marker).unwrap();
            }
            writeln!(out, "golden arrangements: {}", golden.len()).unwrap();
            print!("{out}");
            Ok(())
        }
        Command::Extensions { direction } => {
            let atlas = load_atlas(&cli.atlas, ShapeKind::Triangle)?;
            let wanted = match direction {
                Some(DirectionArg::Horizontal) => vec![ExtensionDirection::Horizontal],
                Some(DirectionArg::Vertical) => vec![ExtensionDirection::Vertical],
                None => vec![
                    ExtensionDirection::Horizontal,
                    ExtensionDirection::Vertical,
                ],
            };
            let mut out = String::new();
            writeln!(out, "atlas {}", atlas.content_hash()).unwrap();
            for dir in wanted {
                let candidates = gluing_candidates(dir, &atlas)?;
                let name = match dir {
                    ExtensionDirection::Horizontal => "horizontal",
                    ExtensionDirection::Vertical => "vertical",
                };
                writeln!(out, "{name} candidates: {}", candidates.len()).unwrap();
                for candidate in candidates {
                    match candidate.relative_minor {
                        Some(minor) => {
                            writeln!(out, "  {} / {}", candidate.major, minor).unwrap()
                        }
                        None => writeln!(out, "  {}", candidate.major).unwrap(),
                    }
                }
            }
            print!("{out}");
            Ok(())
        }
        Command::Lattice {
            extent,
            variant,
            output,
        } => {
            let atlas = load_atlas(&cli.atlas, ShapeKind::Triangle)?;
            let (columns, rows) = parse_extent(&extent)?;
            let window = build_window(&atlas, variant.variant(), columns, rows)?;
            let payload = window.to_json();
            let summary = format!(
                "atlas {}\nwrote {} ({} vertices, {} edges, {} figures)\n",
                window.atlas_hash(),
                output
                    .as_deref()
                    .map(|p| p.display().to_string())
                    .unwrap_or_default(),
                window.vertices().len(),
                window.edges().len(),
                window.figures().len(),
            );
            write_or_print(&output, &payload, summary)
        }
        Command::Find { query } => {
            let atlas = load_atlas(&cli.atlas, ShapeKind::Triangle)?;
            let build = |args: &WindowArgs| -> Result<TonnetzWindow, CliError> {
                let (columns, rows) = parse_extent(&args.window)?;
                Ok(build_window(&atlas, args.variant.variant(), columns, rows)?)
            };
            match query {
                FindQuery::Scale { spec, window } => {
                    let scale: Scale = spec.parse().map_err(usage)?;
                    let w = build(&window)?;
                    let figures = w.find_scale_figures(&scale);
                    println!("atlas {}", w.atlas_hash());
                    println!("figures carrying {scale}: {}", figures.len());
                    for f in figures {
                        let fig = &w.figures()[f];
                        println!("  figure {f} at cell ({}, {})", fig.cell.0, fig.cell.1);
                    }
                    Ok(())
                }
                FindQuery::Triad { spec, window } => {
                    let triad: Triad = spec.parse().map_err(usage)?;
                    let w = build(&window)?;
                    let occurrences = w.find_triad_occurrences(&triad);
                    println!("atlas {}", w.atlas_hash());
                    println!("occurrences of {triad}: {}", occurrences.len());
                    for occ in &occurrences {
                        println!("  {}", describe_occurrence(&w, occ));
                    }
                    Ok(())
                }
                FindQuery::Mode { spec, window } => {
                    let scale: Scale = spec.parse().map_err(usage)?;
                    let w = build(&window)?;
                    let path = w.mode_path(scale.kind, scale.root)?;
                    println!("atlas {}", w.atlas_hash());
                    println!("mode path for {scale}:");
                    for (tone, vertex) in scale.tones().iter().zip(&path) {
                        println!("  {tone} at vertex {vertex}");
                    }
                    Ok(())
                }
                FindQuery::Toneset { tones, window } => {
                    let wanted = parse_tones(&tones)?;
                    let w = build(&window)?;
                    let witness = w.tones_connected(&wanted);
                    println!("atlas {}", w.atlas_hash());
                    if !witness.missing.is_empty() {
                        let missing = witness
                            .missing
                            .iter()
                            .map(Tone::to_string)
                            .collect::<Vec<_>>()
                            .join(", ");
                        println!("not connected; tones absent from window: {missing}");
                        return Ok(());
                    }
                    if witness.connected {
                        println!("connected");
                        for (tone, vertex) in &witness.assignment {
                            println!("  {tone} at vertex {vertex}");
                        }
                        let edges = witness
                            .edges
                            .iter()
                            .map(|(a, b)| format!("({a}, {b})"))
                            .collect::<Vec<_>>()
                            .join(", ");
                        println!("  edges: {edges}");
                    } else {
                        println!("not connected in this window");
                    }
                    Ok(())
                }
            }
        }
        Command::Transform {
            start,
            word,
            window,
        } => {
            let atlas = load_atlas(&cli.atlas, ShapeKind::Triangle)?;
            let start: Triad = start.parse().map_err(usage)?;
            let ops = parse_plr_word(&word).map_err(usage)?;
            let (columns, rows) = parse_extent(&window.window)?;
            let w = build_window(&atlas, window.variant.variant(), columns, rows)?;
            let trajectory = plr_word(start, &ops);
            println!("atlas {}", w.atlas_hash());
            println!("word {word} from {start} in a {columns}x{rows} window:");
            for (i, triad) in trajectory.iter().enumerate() {
                let occ = w
                    .central_occurrence(triad)
                    .ok_or(QueryError::TriadNotRealized(*triad))?;
                let step = if i == 0 {
                    "start".to_string()
                } else {
                    format!("{}", ops[i - 1])
                };
                println!("  {i} [{step}] {}", describe_occurrence(&w, &occ));
            }
            Ok(())
        }
        Command::Render {
            subject,
            shape,
            extent,
            variant,
            highlight_scale,
            highlight_triad,
            highlight_mode,
            highlight_toneset,
            plr,
            unicode,
            precision,
            pixels,
            output,
        } => {
            let options = RenderOptions {
                scale: pixels,
                precision,
                unicode_labels: unicode,
            };
            match subject {
                SubjectArg::Figure => {
                    let kind = match shape {
                        ShapeArg::Triangle => ShapeKind::Triangle,
                        ShapeArg::Gnomon => ShapeKind::Gnomon,
                    };
                    let atlas = load_atlas(&cli.atlas, kind)?;
                    let svg = render_svg(
                        RenderSubject::Figure {
                            template: atlas.template(),
                            labeling: Some(atlas.canonical_labeling()),
                        },
                        &[],
                        &options,
                    )?;
                    let summary = format!(
                        "atlas {}\nwrote {}\n",
                        atlas.content_hash(),
                        output
                            .as_deref()
                            .map(|p| p.display().to_string())
                            .unwrap_or_default(),
                    );
                    write_or_print(&output, &svg, summary)
                }
                SubjectArg::Window => {
                    let atlas = load_atlas(&cli.atlas, ShapeKind::Triangle)?;
                    let (columns, rows) = parse_extent(&extent)?;
                    let w = build_window(&atlas, variant.variant(), columns, rows)?;
                    let mut highlights = Vec::new();
                    if let Some(spec) = highlight_scale {
                        let scale: Scale = spec.parse().map_err(usage)?;
                        let figures = w.find_scale_figures(&scale);
                        if figures.is_empty() {
                            return Err(usage(format!(
                                "no figure carries {scale} in this window"
                            )));
                        }
                        for f in figures {
                            highlights.push(Highlight::colored(
                                HighlightKind::ScaleFigure(f),
                                "#1f77b4",
                            ));
                        }
                    }
                    if let Some(spec) = highlight_triad {
                        let triad: Triad = spec.parse().map_err(usage)?;
                        let occ = w
                            .central_occurrence(&triad)
                            .ok_or(QueryError::TriadNotRealized(triad))?;
                        highlights.push(Highlight::colored(
                            HighlightKind::TriadOccurrence(occ),
                            "#2ca02c",
                        ));
                    }
                    if let Some(spec) = highlight_mode {
                        let scale: Scale = spec.parse().map_err(usage)?;
                        let path = w.mode_path(scale.kind, scale.root)?;
                        highlights.push(Highlight::colored(
                            HighlightKind::ModePath(path),
                            "#9467bd",
                        ));
                    }
                    if let Some(spec) = highlight_toneset {
                        let wanted = parse_tones(&spec)?;
                        let witness = w.tones_connected(&wanted);
                        if !witness.connected {
                            return Err(usage(
                                "tone set is not connected in this window".to_string(),
                            ));
                        }
                        highlights.push(Highlight::colored(
                            HighlightKind::ToneSubgraph(witness),
                            "#8c564b",
                        ));
                    }
                    if let Some(spec) = plr {
                        let (triad_text, op_text) = spec.split_once(':').ok_or_else(|| {
                            usage(format!("move {spec:?} is not of the form <triad>:<op>"))
                        })?;
                        let triad: Triad = triad_text.parse().map_err(usage)?;
                        let ops = parse_plr_word(op_text).map_err(usage)?;
                        if ops.len() != 1 {
                            return Err(usage(format!(
                                "move {spec:?} must name exactly one of P, L, R"
                            )));
                        }
                        let from = w
                            .central_occurrence(&triad)
                            .ok_or(QueryError::TriadNotRealized(triad))?;
                        let to = w.plr_realize(&from, ops[0])?;
                        highlights.push(Highlight::colored(
                            HighlightKind::PlrMove { from, to },
                            "#ff7f0e",
                        ));
                    }
                    let svg = render_svg(RenderSubject::Window(&w), &highlights, &options)?;
                    let summary = format!(
                        "atlas {}\nwrote {}\n",
                        w.atlas_hash(),
                        output
                            .as_deref()
                            .map(|p| p.display().to_string())
                            .unwrap_or_default(),
                    );
                    write_or_print(&output, &svg, summary)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error code={}", err.code());
            eprintln!("{err}");
            ExitCode::from(err.status())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use golden_tonnetz::goldenfield::CycPoint;
    use golden_tonnetz::tones::ScaleKind;

    #[test]
    fn extents_parse_as_columns_by_rows() {
        assert_eq!(parse_extent("10x6").unwrap(), (10, 6));
        assert_eq!(parse_extent("1x1").unwrap(), (1, 1));
        assert!(matches!(parse_extent("10by6"), Err(CliError::Usage(_))));
        assert!(matches!(parse_extent("x6"), Err(CliError::Usage(_))));
        assert!(matches!(parse_extent("10x-6"), Err(CliError::Usage(_))));
    }

    #[test]
    fn tone_lists_tolerate_spaces_and_reject_junk() {
        let tones = parse_tones("C, G ,D#,Bb").unwrap();
        let expected: BTreeSet<Tone> = ["C", "G", "D#", "Bb"]
            .into_iter()
            .map(|t| t.parse().unwrap())
            .collect();
        assert_eq!(tones, expected);
        assert!(matches!(parse_tones("C,H"), Err(CliError::Usage(_))));
    }

    #[test]
    fn bundled_atlases_match_the_requested_shape() {
        let triangle = load_atlas(&None, ShapeKind::Triangle).unwrap();
        assert_eq!(triangle.template().shape_kind(), ShapeKind::Triangle);
        let gnomon = load_atlas(&None, ShapeKind::Gnomon).unwrap();
        assert_eq!(gnomon.template().shape_kind(), ShapeKind::Gnomon);
    }

    #[test]
    fn error_codes_and_exit_statuses_are_stable() {
        let bad_usage = usage("boom");
        assert_eq!(bad_usage.code(), "usage");
        assert_eq!(bad_usage.status(), 2);

        let not_a_mode = CliError::Query(QueryError::NotAMode(ScaleKind::Acoustic));
        assert_eq!(not_a_mode.code(), "usage");
        assert_eq!(not_a_mode.status(), 2);

        let missing = CliError::Query(QueryError::TriadNotRealized(Triad::major(Tone::C)));
        assert_eq!(missing.code(), "not-found");
        assert_eq!(missing.status(), 1);

        let conflict = CliError::Build(BuildError::LabelConflict {
            point: CycPoint::zero(),
            existing: Tone::new(3),
            incoming: Tone::new(-4),
        });
        assert_eq!(conflict.code(), "label-conflict");
        assert_eq!(conflict.status(), 1);
    }
}
