//! Deterministic SVG emission for figure templates, lattice windows, and
//! highlighted query results.
//!
//! Numeric conversion from exact coordinates happens only in this module.
//! Output is byte-stable: fixed element order (edges, then vertex markers
//! and labels, then overlays in input order), fixed decimal precision, and
//! a viewBox computed from the exact bounding box padded by five percent.

use std::fmt::Write as _;

use thiserror::Error;

use crate::figure::{FigureTemplate, Labeling};
use crate::goldenfield::{CycPoint, SIN_36};
use crate::tones::render_tone;
use crate::tonnetz::{ConnectionWitness, Occurrence, TonnetzWindow};

/// Drawing options; none of these affect which elements are emitted.
#[derive(Debug, Clone)]
pub struct RenderOptions {
    /// Pixels per lattice unit.
    pub scale: f64,
    /// Decimal places for every emitted coordinate.
    pub precision: usize,
    /// Emit ♯/♭ instead of the default ASCII `#`/`b` spellings.
    pub unicode_labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            scale: 100.0,
            precision: 6,
            unicode_labels: false,
        }
    }
}

/// What to draw: a single figure template or a built window.
#[derive(Debug, Clone, Copy)]
pub enum RenderSubject<'a> {
    Figure {
        template: &'a FigureTemplate,
        labeling: Option<&'a Labeling>,
    },
    Window(&'a TonnetzWindow),
}

/// Stroke and fill styling for one highlight overlay.
#[derive(Debug, Clone, PartialEq)]
pub struct HighlightStyle {
    pub color: String,
    pub stroke_width: f64,
}

impl Default for HighlightStyle {
    fn default() -> Self {
        HighlightStyle {
            color: "#d62728".to_string(),
            stroke_width: 3.0,
        }
    }
}

/// A query result to overlay on a window rendering.
#[derive(Debug, Clone, PartialEq)]
pub enum HighlightKind {
    /// Outline one placed figure (by index).
    ScaleFigure(usize),
    /// Shade one triad occurrence.
    TriadOccurrence(Occurrence),
    /// Trace a mode path through the given vertices.
    ModePath(Vec<usize>),
    /// Mark a connected tone assignment and its internal edges.
    ToneSubgraph(ConnectionWitness),
    /// Shade both seats of a P/L/R move and join their centers.
    PlrMove { from: Occurrence, to: Occurrence },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Highlight {
    pub kind: HighlightKind,
    pub style: HighlightStyle,
}

impl Highlight {
    pub fn new(kind: HighlightKind) -> Self {
        Highlight {
            kind,
            style: HighlightStyle::default(),
        }
    }

    pub fn colored(kind: HighlightKind, color: &str) -> Self {
        Highlight {
            kind,
            style: HighlightStyle {
                color: color.to_string(),
                ..HighlightStyle::default()
            },
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RenderError {
    #[error("highlight references figure {index}, but the window has {count} figures")]
    FigureOutOfRange { index: usize, count: usize },
    #[error("highlight references vertex {index}, but the subject has {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },
    #[error("highlight occurrence does not belong to the rendered window")]
    ForeignOccurrence,
    #[error("{0} highlights require a window subject")]
    WindowOnly(&'static str),
}

/// Fixed-precision decimal with `-0` normalized away, so equal coordinates
/// always print identically.
fn fmt_num(value: f64, precision: usize) -> String {
    let text = format!("{value:.precision$}");
    if text.starts_with('-') && text[1..].chars().all(|c| c == '0' || c == '.') {
        text[1..].to_string()
    } else {
        text
    }
}

fn escape_text(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn label_text(tone_name: &str, unicode: bool) -> String {
    if !unicode {
        return tone_name.to_string();
    }
    let mut out = String::new();
    for (i, c) in tone_name.chars().enumerate() {
        match c {
            '#' => out.push('♯'),
            'b' if i > 0 => out.push('♭'),
            other => out.push(other),
        }
    }
    out
}

/// Maps exact lattice coordinates to SVG user units (y grows downward).
struct Viewport {
    min_x: f64,
    max_y: f64,
    scale: f64,
    pad: f64,
    width: f64,
    height: f64,
    precision: usize,
}

impl Viewport {
    fn fit(points: &[&CycPoint], options: &RenderOptions) -> Viewport {
        let corner = |pick_max_re: bool, pick_max_im: bool| {
            let re = points
                .iter()
                .map(|p| p.re_exact())
                .reduce(|a, b| {
                    if (b > a) == pick_max_re {
                        b
                    } else {
                        a
                    }
                })
                .expect("at least one point");
            let im = points
                .iter()
                .map(|p| p.im_scaled_exact())
                .reduce(|a, b| {
                    if (b > a) == pick_max_im {
                        b
                    } else {
                        a
                    }
                })
                .expect("at least one point");
            (re.to_f64(), im.to_f64() * SIN_36)
        };
        let (min_x, min_y) = corner(false, false);
        let (max_x, max_y) = corner(true, true);
        let span = (max_x - min_x).max(max_y - min_y).max(1.0);
        let pad = 0.05 * span * options.scale;
        Viewport {
            min_x,
            max_y,
            scale: options.scale,
            pad,
            width: (max_x - min_x) * options.scale + 2.0 * pad,
            height: (max_y - min_y) * options.scale + 2.0 * pad,
            precision: options.precision,
        }
    }

    fn place(&self, point: &CycPoint) -> (f64, f64) {
        let (x, y) = point.to_xy();
        (
            (x - self.min_x) * self.scale + self.pad,
            (self.max_y - y) * self.scale + self.pad,
        )
    }

    fn num(&self, value: f64) -> String {
        fmt_num(value, self.precision)
    }
}

struct Canvas {
    body: String,
    viewport: Viewport,
}

impl Canvas {
    fn new(viewport: Viewport) -> Canvas {
        Canvas {
            body: String::new(),
            viewport,
        }
    }

    fn open_group(&mut self, attrs: &str) {
        writeln!(self.body, "  <g {attrs}>").unwrap();
    }

    fn close_group(&mut self) {
        self.body.push_str("  </g>\n");
    }

    fn line(&mut self, from: &CycPoint, to: &CycPoint, attrs: &str) {
        let (x1, y1) = self.viewport.place(from);
        let (x2, y2) = self.viewport.place(to);
        writeln!(
            self.body,
            "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"{}/>",
            self.viewport.num(x1),
            self.viewport.num(y1),
            self.viewport.num(x2),
            self.viewport.num(y2),
            attrs,
        )
        .unwrap();
    }

    fn polygon(&mut self, points: &[&CycPoint], attrs: &str) {
        let mut rendered = Vec::with_capacity(points.len());
        for point in points {
            let (x, y) = self.viewport.place(point);
            rendered.push(format!("{},{}", self.viewport.num(x), self.viewport.num(y)));
        }
        writeln!(
            self.body,
            "    <polygon points=\"{}\"{}/>",
            rendered.join(" "),
            attrs,
        )
        .unwrap();
    }

    fn circle(&mut self, center: &CycPoint, radius: f64, attrs: &str) {
        let (cx, cy) = self.viewport.place(center);
        writeln!(
            self.body,
            "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\"{}/>",
            self.viewport.num(cx),
            self.viewport.num(cy),
            self.viewport.num(radius),
            attrs,
        )
        .unwrap();
    }

    fn raw_line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, attrs: &str) {
        writeln!(
            self.body,
            "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"{}/>",
            self.viewport.num(x1),
            self.viewport.num(y1),
            self.viewport.num(x2),
            self.viewport.num(y2),
            attrs,
        )
        .unwrap();
    }

    fn finish(self) -> String {
        let mut doc = String::new();
        doc.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        writeln!(
            doc,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\" \
             width=\"{}\" height=\"{}\">",
            self.viewport.num(self.viewport.width),
            self.viewport.num(self.viewport.height),
            self.viewport.num(self.viewport.width),
            self.viewport.num(self.viewport.height),
        )
        .unwrap();
        doc.push_str(&self.body);
        doc.push_str("</svg>\n");
        doc
    }
}

fn validate_highlights(
    subject: &RenderSubject<'_>,
    highlights: &[Highlight],
) -> Result<(), RenderError> {
    let window = match subject {
        RenderSubject::Window(w) => *w,
        RenderSubject::Figure { .. } => {
            return match highlights.first().map(|h| &h.kind) {
                None => Ok(()),
                Some(HighlightKind::ScaleFigure(_)) => Err(RenderError::WindowOnly("figure")),
                Some(HighlightKind::TriadOccurrence(_)) => {
                    Err(RenderError::WindowOnly("occurrence"))
                }
                Some(HighlightKind::ModePath(_)) => Err(RenderError::WindowOnly("path")),
                Some(HighlightKind::ToneSubgraph(_)) => Err(RenderError::WindowOnly("subgraph")),
                Some(HighlightKind::PlrMove { .. }) => Err(RenderError::WindowOnly("move")),
            };
        }
    };
    let vertex_count = window.vertices().len();
    let check_vertex = |index: usize| {
        if index < vertex_count {
            Ok(())
        } else {
            Err(RenderError::VertexOutOfRange {
                index,
                count: vertex_count,
            })
        }
    };
    let check_occurrence = |occ: &Occurrence| {
        if window.contains_occurrence(occ) {
            Ok(())
        } else {
            Err(RenderError::ForeignOccurrence)
        }
    };
    for highlight in highlights {
        match &highlight.kind {
            HighlightKind::ScaleFigure(index) => {
                if *index >= window.figures().len() {
                    return Err(RenderError::FigureOutOfRange {
                        index: *index,
                        count: window.figures().len(),
                    });
                }
            }
            HighlightKind::TriadOccurrence(occ) => check_occurrence(occ)?,
            HighlightKind::ModePath(path) => {
                for &v in path {
                    check_vertex(v)?;
                }
            }
            HighlightKind::ToneSubgraph(witness) => {
                for &v in witness.assignment.values() {
                    check_vertex(v)?;
                }
                for &(a, b) in &witness.edges {
                    check_vertex(a)?;
                    check_vertex(b)?;
                }
            }
            HighlightKind::PlrMove { from, to } => {
                check_occurrence(from)?;
                check_occurrence(to)?;
            }
        }
    }
    Ok(())
}

fn centroid_xy(viewport: &Viewport, points: [&CycPoint; 3]) -> (f64, f64) {
    let placed = points.map(|p| viewport.place(p));
    (
        (placed[0].0 + placed[1].0 + placed[2].0) / 3.0,
        (placed[0].1 + placed[1].1 + placed[2].1) / 3.0,
    )
}

fn occurrence_points<'a>(window: &'a TonnetzWindow, occ: &Occurrence) -> [&'a CycPoint; 3] {
    occ.vertex_indices.map(|v| &window.vertices()[v].point)
}

fn draw_occurrence(canvas: &mut Canvas, window: &TonnetzWindow, occ: &Occurrence, opacity: &str) {
    let points = occurrence_points(window, occ);
    canvas.polygon(&points, &format!(" fill-opacity=\"{opacity}\""));
}

/// Renders the subject and overlays to a standalone SVG document.
///
/// Highlights are validated before anything is emitted; any dangling
/// reference aborts the render.
pub fn render_svg(
    subject: RenderSubject<'_>,
    highlights: &[Highlight],
    options: &RenderOptions,
) -> Result<String, RenderError> {
    validate_highlights(&subject, highlights)?;

    let marker_radius = options.scale * 0.07;
    let font_size = options.scale * 0.2;
    let label_lift = options.scale * 0.12;

    match subject {
        RenderSubject::Figure { template, labeling } => {
            let points: Vec<&CycPoint> = (1..=7).map(|d| template.point(d)).collect();
            let viewport = Viewport::fit(&points, options);
            let mut canvas = Canvas::new(viewport);

            canvas.open_group("id=\"edges\" stroke=\"#444444\" stroke-width=\"1.5\"");
            for (a, b) in template.edges() {
                canvas.line(template.point(a), template.point(b), "");
            }
            canvas.close_group();

            canvas.open_group("id=\"vertices\"");
            for d in 1..=7u8 {
                canvas.circle(
                    template.point(d),
                    marker_radius,
                    " fill=\"#ffffff\" stroke=\"#222222\" stroke-width=\"1.5\"",
                );
            }
            let font_attr = format!(
                " font-family=\"sans-serif\" font-size=\"{}\" text-anchor=\"middle\"",
                fmt_num(font_size, options.precision)
            );
            for d in 1..=7u8 {
                let label = match labeling {
                    Some(l) => label_text(&render_tone(l.tone_at(d)), options.unicode_labels),
                    None => d.to_string(),
                };
                let (x, y) = canvas.viewport.place(template.point(d));
                let x = fmt_num(x, options.precision);
                let y = fmt_num(y - label_lift - marker_radius, options.precision);
                writeln!(
                    canvas.body,
                    "    <text x=\"{x}\" y=\"{y}\"{font_attr}>{}</text>",
                    escape_text(&label),
                )
                .unwrap();
            }
            canvas.close_group();
            Ok(canvas.finish())
        }
        RenderSubject::Window(window) => {
            let points: Vec<&CycPoint> =
                window.vertices().iter().map(|v| &v.point).collect();
            let viewport = Viewport::fit(&points, options);
            let mut canvas = Canvas::new(viewport);

            canvas.open_group("id=\"edges\" stroke=\"#444444\" stroke-width=\"1.5\"");
            for &(a, b) in window.edges() {
                canvas.line(
                    &window.vertices()[a].point,
                    &window.vertices()[b].point,
                    "",
                );
            }
            canvas.close_group();

            canvas.open_group("id=\"vertices\"");
            for vertex in window.vertices() {
                canvas.circle(
                    &vertex.point,
                    marker_radius,
                    " fill=\"#ffffff\" stroke=\"#222222\" stroke-width=\"1.5\"",
                );
            }
            let font_attr = format!(
                " font-family=\"sans-serif\" font-size=\"{}\" text-anchor=\"middle\"",
                fmt_num(font_size, options.precision)
            );
            for vertex in window.vertices() {
                let label = label_text(&render_tone(vertex.tone), options.unicode_labels);
                let (x, y) = canvas.viewport.place(&vertex.point);
                let x = fmt_num(x, options.precision);
                let y = fmt_num(y - label_lift - marker_radius, options.precision);
                writeln!(
                    canvas.body,
                    "    <text x=\"{x}\" y=\"{y}\"{font_attr}>{}</text>",
                    escape_text(&label),
                )
                .unwrap();
            }
            canvas.close_group();

            for (i, highlight) in highlights.iter().enumerate() {
                let stroke_width = fmt_num(highlight.style.stroke_width, options.precision);
                canvas.open_group(&format!(
                    "id=\"overlay-{i}\" stroke=\"{color}\" stroke-width=\"{stroke_width}\" \
                     fill=\"{color}\"",
                    color = highlight.style.color,
                ));
                match &highlight.kind {
                    HighlightKind::ScaleFigure(index) => {
                        let figure = &window.figures()[*index];
                        let outline: Vec<&CycPoint> = figure
                            .vertex_ids
                            .iter()
                            .map(|&v| &window.vertices()[v].point)
                            .collect();
                        canvas.polygon(&outline, " fill-opacity=\"0.12\"");
                    }
                    HighlightKind::TriadOccurrence(occ) => {
                        draw_occurrence(&mut canvas, window, occ, "0.3");
                    }
                    HighlightKind::ModePath(path) => {
                        for pair in path.windows(2) {
                            canvas.line(
                                &window.vertices()[pair[0]].point,
                                &window.vertices()[pair[1]].point,
                                "",
                            );
                        }
                        for &v in path {
                            canvas.circle(
                                &window.vertices()[v].point,
                                marker_radius * 0.6,
                                " stroke=\"none\"",
                            );
                        }
                    }
                    HighlightKind::ToneSubgraph(witness) => {
                        for &(a, b) in &witness.edges {
                            canvas.line(
                                &window.vertices()[a].point,
                                &window.vertices()[b].point,
                                "",
                            );
                        }
                        for &v in witness.assignment.values() {
                            canvas.circle(
                                &window.vertices()[v].point,
                                marker_radius * 0.6,
                                " stroke=\"none\"",
                            );
                        }
                    }
                    HighlightKind::PlrMove { from, to } => {
                        draw_occurrence(&mut canvas, window, from, "0.15");
                        draw_occurrence(&mut canvas, window, to, "0.3");
                        let (x1, y1) =
                            centroid_xy(&canvas.viewport, occurrence_points(window, from));
                        let (x2, y2) =
                            centroid_xy(&canvas.viewport, occurrence_points(window, to));
                        canvas.raw_line(x1, y1, x2, y2, " stroke-dasharray=\"6 4\"");
                    }
                }
                canvas.close_group();
            }
            Ok(canvas.finish())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figure::FigureAtlas;
    use crate::tones::{PlrOp, ScaleKind, Tone, Triad};
    use crate::tonnetz::{build_window, LatticeVariant};

    fn window(columns: u32, rows: u32) -> TonnetzWindow {
        build_window(
            &FigureAtlas::triangle(),
            LatticeVariant::golden(),
            columns,
            rows,
        )
        .unwrap()
    }

    fn tone(name: &str) -> Tone {
        name.parse().unwrap()
    }

    fn triad(text: &str) -> Triad {
        text.parse().unwrap()
    }

    /// Minimal well-formedness check: declaration, balanced tags, quoted
    /// attributes, no stray `<` or `>`.
    fn assert_well_formed(doc: &str) {
        let mut rest = doc
            .strip_prefix("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n")
            .expect("xml declaration");
        let mut stack: Vec<String> = Vec::new();
        while let Some(lt) = rest.find('<') {
            let text = &rest[..lt];
            assert!(!text.contains('>'), "stray '>' in text: {text:?}");
            let gt = rest[lt..].find('>').expect("unterminated tag") + lt;
            let tag = &rest[lt + 1..gt];
            assert!(!tag.contains('<'), "nested '<' in tag: {tag:?}");
            if let Some(name) = tag.strip_prefix('/') {
                assert_eq!(stack.pop().as_deref(), Some(name), "mismatched close");
            } else {
                let self_closing = tag.ends_with('/');
                let body = tag.trim_end_matches('/');
                let name = body.split_whitespace().next().expect("tag name");
                let attrs = &body[name.len()..];
                assert_eq!(
                    attrs.matches('"').count() % 2,
                    0,
                    "unbalanced quotes in {tag:?}"
                );
                if !self_closing {
                    stack.push(name.to_string());
                }
            }
            rest = &rest[gt + 1..];
        }
        assert!(stack.is_empty(), "unclosed tags: {stack:?}");
        assert!(rest.trim().is_empty());
    }

    #[test]
    fn template_render_has_seven_labeled_vertices() {
        let atlas = FigureAtlas::triangle();
        let svg = render_svg(
            RenderSubject::Figure {
                template: atlas.template(),
                labeling: Some(atlas.canonical_labeling()),
            },
            &[],
            &RenderOptions::default(),
        )
        .unwrap();
        assert_well_formed(&svg);
        assert_eq!(svg.matches("<circle").count(), 7);
        assert_eq!(svg.matches("<text").count(), 7);
        assert_eq!(svg.matches("<line").count(), 7);
        for name in ["C", "D", "E", "F", "G", "A", "B"] {
            assert!(svg.contains(&format!(">{name}</text>")), "{name}");
        }
    }

    #[test]
    fn unlabeled_template_uses_degree_numbers() {
        let atlas = FigureAtlas::gnomon();
        let svg = render_svg(
            RenderSubject::Figure {
                template: atlas.template(),
                labeling: None,
            },
            &[],
            &RenderOptions::default(),
        )
        .unwrap();
        for d in 1..=7 {
            assert!(svg.contains(&format!(">{d}</text>")));
        }
    }

    #[test]
    fn window_render_matches_vertex_labels() {
        let w = window(2, 2);
        let svg = render_svg(RenderSubject::Window(&w), &[], &RenderOptions::default()).unwrap();
        assert_well_formed(&svg);
        assert_eq!(svg.matches("<circle").count(), w.vertices().len());
        assert_eq!(svg.matches("<text").count(), w.vertices().len());
        assert_eq!(svg.matches("<line").count(), w.edges().len());
        for vertex in w.vertices() {
            let label = render_tone(vertex.tone);
            assert!(svg.contains(&format!(">{label}</text>")), "{label}");
        }
    }

    #[test]
    fn renders_are_byte_identical() {
        let w = window(10, 6);
        let figure = w
            .find_scale_figures(&"G-maj".parse().unwrap())
            .into_iter()
            .next()
            .unwrap();
        let highlights = vec![Highlight::colored(
            HighlightKind::ScaleFigure(figure),
            "#1f77b4",
        )];
        let opts = RenderOptions::default();
        let first = render_svg(RenderSubject::Window(&w), &highlights, &opts).unwrap();
        let second = render_svg(RenderSubject::Window(&w), &highlights, &opts).unwrap();
        assert_eq!(first, second);
        assert_well_formed(&first);
        assert!(first.contains("overlay-0"));
        assert!(first.contains("#1f77b4"));
    }

    #[test]
    fn all_overlay_kinds_render() {
        let w = window(10, 6);
        let occ = w.central_occurrence(&triad("Cmaj")).unwrap();
        let relative = w.plr_realize(&occ, PlrOp::R).unwrap();
        let path = w.mode_path(ScaleKind::Lydian, tone("C")).unwrap();
        let witness = w.tones_connected(
            &crate::tones::Scale {
                root: tone("C"),
                kind: ScaleKind::Acoustic,
            }
            .tone_set(),
        );
        assert!(witness.connected);
        let highlights = vec![
            Highlight::new(HighlightKind::ScaleFigure(0)),
            Highlight::colored(HighlightKind::TriadOccurrence(occ.clone()), "#2ca02c"),
            Highlight::colored(HighlightKind::ModePath(path), "#9467bd"),
            Highlight::colored(HighlightKind::ToneSubgraph(witness), "#8c564b"),
            Highlight::colored(
                HighlightKind::PlrMove {
                    from: occ,
                    to: relative,
                },
                "#ff7f0e",
            ),
        ];
        let svg = render_svg(
            RenderSubject::Window(&w),
            &highlights,
            &RenderOptions::default(),
        )
        .unwrap();
        assert_well_formed(&svg);
        for i in 0..highlights.len() {
            assert!(svg.contains(&format!("overlay-{i}")));
        }
        assert!(svg.contains("stroke-dasharray"));
    }

    #[test]
    fn dangling_references_abort() {
        let w = window(2, 2);
        let err = render_svg(
            RenderSubject::Window(&w),
            &[Highlight::new(HighlightKind::ScaleFigure(99))],
            &RenderOptions::default(),
        )
        .unwrap_err();
        assert_eq!(
            err,
            RenderError::FigureOutOfRange {
                index: 99,
                count: 4
            }
        );
        let err = render_svg(
            RenderSubject::Window(&w),
            &[Highlight::new(HighlightKind::ModePath(vec![0, 4000]))],
            &RenderOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, RenderError::VertexOutOfRange { index: 4000, .. }));

        let big = window(4, 2);
        let foreign = big.central_occurrence(&triad("Gmaj")).unwrap();
        let err = render_svg(
            RenderSubject::Window(&w),
            &[Highlight::new(HighlightKind::TriadOccurrence(foreign))],
            &RenderOptions::default(),
        )
        .unwrap_err();
        assert_eq!(err, RenderError::ForeignOccurrence);

        let atlas = FigureAtlas::triangle();
        let err = render_svg(
            RenderSubject::Figure {
                template: atlas.template(),
                labeling: None,
            },
            &[Highlight::new(HighlightKind::ScaleFigure(0))],
            &RenderOptions::default(),
        )
        .unwrap_err();
        assert_eq!(err, RenderError::WindowOnly("figure"));
    }

    #[test]
    fn unicode_labels_are_opt_in() {
        let w = window(1, 2);
        let default = render_svg(RenderSubject::Window(&w), &[], &RenderOptions::default())
            .unwrap();
        assert!(default.contains(">Eb</text>"));
        assert!(!default.contains('♭'));
        let unicode = render_svg(
            RenderSubject::Window(&w),
            &[],
            &RenderOptions {
                unicode_labels: true,
                ..RenderOptions::default()
            },
        )
        .unwrap();
        assert!(unicode.contains(">E♭</text>"));
        assert!(!unicode.contains(">Eb</text>"));
    }

    #[test]
    fn precision_is_respected() {
        let atlas = FigureAtlas::triangle();
        let subject = RenderSubject::Figure {
            template: atlas.template(),
            labeling: None,
        };
        let coarse = render_svg(
            subject,
            &[],
            &RenderOptions {
                precision: 2,
                ..RenderOptions::default()
            },
        )
        .unwrap();
        // A two-decimal document never contains six-decimal runs.
        assert!(!coarse.contains(".000000"));
        assert!(coarse.contains("x1=\""));
    }

    #[test]
    fn negative_zero_is_normalized() {
        assert_eq!(fmt_num(-0.0, 6), "0.000000");
        assert_eq!(fmt_num(-0.0000001, 6), "0.000000");
        assert_eq!(fmt_num(-0.1, 2), "-0.10");
        assert_eq!(fmt_num(1.25, 2), "1.25");
    }

    #[test]
    fn label_conversion() {
        assert_eq!(label_text("Bbb", true), "B♭♭");
        assert_eq!(label_text("F##", true), "F♯♯");
        assert_eq!(label_text("Bbb", false), "Bbb");
    }
}
