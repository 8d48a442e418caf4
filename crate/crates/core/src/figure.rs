//! The seven-point base figure: canonical atlas data, the two
//! admissibility conditions as executable predicates, exhaustive labeling
//! enumeration, and extension-candidate queries.
//!
//! A [`FigureTemplate`] is pure geometry: seven exact points, a drawn edge
//! set, and the degree rendered topmost. A [`Labeling`] assigns the seven
//! tones of a scale to the seven degrees. The bundled [`FigureAtlas`] files
//! add the canonical labeling, the two gluing isometries used to tile the
//! plane, and the tone relabeling for reflected (minor) copies; every load
//! re-verifies the file's content hash.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::goldenfield::{sq_distance, classify_triangle, CycPoint, Isometry, ShapeClass};
use crate::tones::{scales_containing, ParseError, Scale, ScaleKind, Tone, SPELLED_KEY_DOMAIN};

/// Chord degrees required to be golden by the second condition.
pub const GOLDEN_CHORD_DEGREES: [u8; 5] = [1, 3, 4, 5, 6];

const TRIANGLE_ATLAS_JSON: &str = include_str!("../data/triangle.json");
const GNOMON_ATLAS_JSON: &str = include_str!("../data/gnomon.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeKind {
    Triangle,
    Gnomon,
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShapeKind::Triangle => "triangle",
            ShapeKind::Gnomon => "gnomon",
        })
    }
}

/// Which self-isometry group the labeling enumeration quotients by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryQuotient {
    None,
    Mirror,
}

#[derive(Debug, Error)]
pub enum AtlasError {
    #[error("atlas JSON malformed: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid degree {0} (expected 1..=7)")]
    BadDegree(u8),
    #[error("template needs exactly 7 points, got {0}")]
    WrongPointCount(usize),
    #[error("template points are not pairwise distinct: degrees {0} and {1} coincide")]
    DuplicatePoint(u8, u8),
    #[error("edge graph is not connected")]
    Disconnected,
    #[error("edge joins a degree to itself: {0}")]
    LoopEdge(u8),
    #[error("labeling is not a bijection between 7 tones and degrees 1..=7")]
    BadLabeling,
    #[error("labeling tones do not match the tones of {0}")]
    LabelingMismatch(Scale),
    #[error("content hash mismatch: file says {file}, computed {computed}")]
    HashMismatch { file: String, computed: String },
    #[error("invalid tone name: {0}")]
    BadTone(#[from] ParseError),
    #[error("glue isometry is invalid: {0}")]
    BadIsometry(String),
    #[error("{0}")]
    BadStructure(String),
}

/// Seven exact points with a drawn edge set over degrees 1..=7.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FigureTemplate {
    shape_kind: ShapeKind,
    points: [CycPoint; 7],
    edges: BTreeSet<(u8, u8)>,
    apex_degree: u8,
}

impl FigureTemplate {
    pub fn new(
        shape_kind: ShapeKind,
        points: [CycPoint; 7],
        edges: impl IntoIterator<Item = (u8, u8)>,
        apex_degree: u8,
    ) -> Result<Self, AtlasError> {
        for i in 0..7 {
            for j in (i + 1)..7 {
                if points[i] == points[j] {
                    return Err(AtlasError::DuplicatePoint(i as u8 + 1, j as u8 + 1));
                }
            }
        }
        let mut normalized = BTreeSet::new();
        for (a, b) in edges {
            if !(1..=7).contains(&a) {
                return Err(AtlasError::BadDegree(a));
            }
            if !(1..=7).contains(&b) {
                return Err(AtlasError::BadDegree(b));
            }
            if a == b {
                return Err(AtlasError::LoopEdge(a));
            }
            normalized.insert((a.min(b), a.max(b)));
        }
        if !(1..=7).contains(&apex_degree) {
            return Err(AtlasError::BadDegree(apex_degree));
        }
        let template = FigureTemplate {
            shape_kind,
            points,
            edges: normalized,
            apex_degree,
        };
        if !template.is_connected() {
            return Err(AtlasError::Disconnected);
        }
        Ok(template)
    }

    fn is_connected(&self) -> bool {
        let mut seen = [false; 7];
        let mut stack = vec![1u8];
        seen[0] = true;
        while let Some(d) = stack.pop() {
            for other in 1..=7 {
                if !seen[other as usize - 1] && self.has_edge(d, other) {
                    seen[other as usize - 1] = true;
                    stack.push(other);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn shape_kind(&self) -> ShapeKind {
        self.shape_kind
    }

    pub fn point(&self, degree: u8) -> &CycPoint {
        &self.points[degree as usize - 1]
    }

    pub fn points(&self) -> &[CycPoint; 7] {
        &self.points
    }

    pub fn edges(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: u8, b: u8) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn apex_degree(&self) -> u8 {
        self.apex_degree
    }

    /// All degree permutations that preserve both the pairwise distances of
    /// the seven points and the drawn edge set, found by brute force.
    /// `result[i]` is the image of degree `i + 1`.
    pub fn self_isometries(&self) -> Vec<[u8; 7]> {
        let dist: Vec<Vec<_>> = (1..=7)
            .map(|a| {
                (1..=7)
                    .map(|b| sq_distance(self.point(a), self.point(b)))
                    .collect()
            })
            .collect();
        lex_permutations()
            .into_iter()
            .filter(|perm| {
                let image = |d: u8| perm[d as usize - 1];
                for a in 1..=7u8 {
                    for b in (a + 1)..=7 {
                        if dist[a as usize - 1][b as usize - 1]
                            != dist[image(a) as usize - 1][image(b) as usize - 1]
                        {
                            return false;
                        }
                    }
                }
                self.edges.iter().all(|&(a, b)| self.has_edge(image(a), image(b)))
            })
            .collect()
    }
}

/// All permutations of degrees 1..=7 in lexicographic order.
fn lex_permutations() -> Vec<[u8; 7]> {
    let mut out = Vec::with_capacity(5040);
    let mut current = [0u8; 7];
    fn recurse(out: &mut Vec<[u8; 7]>, current: &mut [u8; 7], used: u8, depth: usize) {
        if depth == 7 {
            out.push(*current);
            return;
        }
        for d in 1..=7u8 {
            if used & (1 << d) == 0 {
                current[depth] = d;
                recurse(out, current, used | (1 << d), depth + 1);
            }
        }
    }
    recurse(&mut out, &mut current, 0, 0);
    out
}

/// A bijection between seven tones and the template degrees 1..=7.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    by_degree: [Tone; 7],
}

impl Labeling {
    /// Build from (tone, degree) pairs; both sides must be complete.
    pub fn new(pairs: impl IntoIterator<Item = (Tone, u8)>) -> Result<Self, AtlasError> {
        let mut by_degree = [None; 7];
        for (tone, degree) in pairs {
            if !(1..=7).contains(&degree) {
                return Err(AtlasError::BadDegree(degree));
            }
            let slot = &mut by_degree[degree as usize - 1];
            if slot.is_some() {
                return Err(AtlasError::BadLabeling);
            }
            *slot = Some(tone);
        }
        let by_degree: [Tone; 7] = std::array::from_fn(|i| by_degree[i].unwrap_or(Tone::C));
        if by_degree.iter().any(|t| by_degree.iter().filter(|u| *u == t).count() != 1) {
            return Err(AtlasError::BadLabeling);
        }
        Ok(Labeling { by_degree })
    }

    /// Build from tones listed in degree order 1..=7.
    pub fn from_degree_tones(by_degree: [Tone; 7]) -> Result<Self, AtlasError> {
        Labeling::new(by_degree.into_iter().zip(1..=7))
    }

    pub fn tone_at(&self, degree: u8) -> Tone {
        self.by_degree[degree as usize - 1]
    }

    pub fn degree_of(&self, tone: Tone) -> Option<u8> {
        self.by_degree
            .iter()
            .position(|&t| t == tone)
            .map(|i| i as u8 + 1)
    }

    pub fn tones_by_degree(&self) -> &[Tone; 7] {
        &self.by_degree
    }

    fn tone_set(&self) -> BTreeSet<Tone> {
        self.by_degree.iter().copied().collect()
    }
}

/// A gluing isometry together with the tones whose vertices the glued
/// neighbor shares with the base figure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Glue {
    pub isometry: Isometry,
    pub shared_tones: Vec<Tone>,
}

/// The canonical base figure: template geometry, canonical labeling, glue
/// data for horizontal and vertical extension, and the tone relabeling
/// applied to reflected copies.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureAtlas {
    template: FigureTemplate,
    canonical_labeling: Labeling,
    h_glue: Option<Glue>,
    v_glue: Option<Glue>,
    minor_relabel: BTreeMap<Tone, Tone>,
    symmetry_quotient: SymmetryQuotient,
    content_hash: String,
}

/// On-disk form of an atlas; the hash is computed over this document with
/// `content_hash` blanked, serialized compactly with sorted keys.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct AtlasDoc {
    format_version: u32,
    shape_kind: ShapeKind,
    points: BTreeMap<u8, CycPoint>,
    edges: Vec<[u8; 2]>,
    apex_degree: u8,
    canonical_labeling: BTreeMap<Tone, u8>,
    h_glue: Option<Glue>,
    v_glue: Option<Glue>,
    minor_relabel: Option<BTreeMap<Tone, Tone>>,
    symmetry_quotient: SymmetryQuotient,
    content_hash: String,
}

const ATLAS_FORMAT_VERSION: u32 = 1;

fn hash_doc(doc: &AtlasDoc) -> String {
    let mut canonical = doc.clone();
    canonical.content_hash = String::new();
    let bytes = serde_json::to_vec(&canonical).expect("atlas doc serializes");
    let digest = Sha256::digest(&bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

impl FigureAtlas {
    /// Assemble an atlas from parts, computing its content hash.
    pub fn from_parts(
        template: FigureTemplate,
        canonical_labeling: Labeling,
        h_glue: Option<Glue>,
        v_glue: Option<Glue>,
        minor_relabel: BTreeMap<Tone, Tone>,
        symmetry_quotient: SymmetryQuotient,
    ) -> Result<FigureAtlas, AtlasError> {
        let mut atlas = FigureAtlas {
            template,
            canonical_labeling,
            h_glue,
            v_glue,
            minor_relabel,
            symmetry_quotient,
            content_hash: String::new(),
        };
        atlas.content_hash = hash_doc(&atlas.to_doc());
        Ok(atlas)
    }

    fn to_doc(&self) -> AtlasDoc {
        AtlasDoc {
            format_version: ATLAS_FORMAT_VERSION,
            shape_kind: self.template.shape_kind,
            points: (1..=7)
                .map(|d| (d, self.template.point(d).clone()))
                .collect(),
            edges: self.template.edges().map(|(a, b)| [a, b]).collect(),
            apex_degree: self.template.apex_degree,
            canonical_labeling: (1..=7)
                .map(|d| (self.canonical_labeling.tone_at(d), d))
                .collect(),
            h_glue: self.h_glue.clone(),
            v_glue: self.v_glue.clone(),
            minor_relabel: if self.minor_relabel.is_empty() {
                None
            } else {
                Some(self.minor_relabel.clone())
            },
            symmetry_quotient: self.symmetry_quotient,
            content_hash: self.content_hash.clone(),
        }
    }

    fn from_doc(doc: AtlasDoc) -> Result<FigureAtlas, AtlasError> {
        if doc.format_version != ATLAS_FORMAT_VERSION {
            return Err(AtlasError::BadStructure(format!(
                "unsupported format_version {}",
                doc.format_version
            )));
        }
        if doc.points.len() != 7 {
            return Err(AtlasError::WrongPointCount(doc.points.len()));
        }
        for &d in doc.points.keys() {
            if !(1..=7).contains(&d) {
                return Err(AtlasError::BadDegree(d));
            }
        }
        let points: [CycPoint; 7] = std::array::from_fn(|i| doc.points[&(i as u8 + 1)].clone());
        let template = FigureTemplate::new(
            doc.shape_kind,
            points,
            doc.edges.iter().map(|[a, b]| (*a, *b)),
            doc.apex_degree,
        )?;
        let labeling = Labeling::new(doc.canonical_labeling.iter().map(|(t, d)| (*t, *d)))?;
        for glue in [&doc.h_glue, &doc.v_glue].into_iter().flatten() {
            if !glue.isometry.is_valid() {
                return Err(AtlasError::BadIsometry(
                    "spin factor does not have unit modulus".into(),
                ));
            }
        }
        let expected = hash_doc(&doc);
        if doc.content_hash != expected {
            return Err(AtlasError::HashMismatch {
                file: doc.content_hash,
                computed: expected,
            });
        }
        Ok(FigureAtlas {
            template,
            canonical_labeling: labeling,
            h_glue: doc.h_glue,
            v_glue: doc.v_glue,
            minor_relabel: doc.minor_relabel.unwrap_or_default(),
            symmetry_quotient: doc.symmetry_quotient,
            content_hash: doc.content_hash,
        })
    }

    pub fn from_json(text: &str) -> Result<FigureAtlas, AtlasError> {
        let doc: AtlasDoc = serde_json::from_str(text)?;
        FigureAtlas::from_doc(doc)
    }

    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(&self.to_doc()).expect("atlas doc serializes");
        text.push('\n');
        text
    }

    /// The bundled golden-triangle atlas.
    pub fn triangle() -> FigureAtlas {
        FigureAtlas::from_json(TRIANGLE_ATLAS_JSON).expect("bundled triangle atlas is valid")
    }

    /// The bundled golden-gnomon atlas.
    pub fn gnomon() -> FigureAtlas {
        FigureAtlas::from_json(GNOMON_ATLAS_JSON).expect("bundled gnomon atlas is valid")
    }

    pub fn template(&self) -> &FigureTemplate {
        &self.template
    }

    pub fn canonical_labeling(&self) -> &Labeling {
        &self.canonical_labeling
    }

    pub fn h_glue(&self) -> Option<&Glue> {
        self.h_glue.as_ref()
    }

    pub fn v_glue(&self) -> Option<&Glue> {
        self.v_glue.as_ref()
    }

    pub fn minor_relabel(&self) -> &BTreeMap<Tone, Tone> {
        &self.minor_relabel
    }

    pub fn symmetry_quotient(&self) -> SymmetryQuotient {
        self.symmetry_quotient
    }

    pub fn content_hash(&self) -> &str {
        &self.content_hash
    }

    /// The scale carried by the canonical labeling (root at degree 1).
    pub fn base_scale(&self) -> Scale {
        Scale::major(self.canonical_labeling.tone_at(1))
    }

    /// Apply the reflected-copy relabeling to one tone.
    pub fn relabeled(&self, tone: Tone) -> Tone {
        self.minor_relabel.get(&tone).copied().unwrap_or(tone)
    }
}

/// Outcome of the adjacency condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition1Outcome {
    pub pass: bool,
    /// First consecutive scale pair whose degrees are not joined by an edge.
    pub failing_pair: Option<(Tone, Tone)>,
}

/// Joint report of both conditions for one labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub condition1: Condition1Outcome,
    /// Shape class of each chord built on degrees 1, 3, 4, 5, 6.
    pub condition2: BTreeMap<u8, ShapeClass>,
}

impl ConditionReport {
    pub fn condition2_pass(&self) -> bool {
        self.condition2.values().all(|shape| {
            matches!(shape, ShapeClass::GoldenTriangle | ShapeClass::GoldenGnomon)
        })
    }

    pub fn pass(&self) -> bool {
        self.condition1.pass && self.condition2_pass()
    }
}

fn require_labeling_matches(labeling: &Labeling, scale: &Scale) -> Result<(), AtlasError> {
    if labeling.tone_set() != scale.tone_set() {
        return Err(AtlasError::LabelingMismatch(*scale));
    }
    Ok(())
}

/// Condition: every pair of consecutive scale degrees (1,2)…(6,7) labels an
/// edge of the template. The wrap-around pair (7,1) is not required.
pub fn check_condition1(
    template: &FigureTemplate,
    labeling: &Labeling,
    scale: &Scale,
) -> Result<Condition1Outcome, AtlasError> {
    require_labeling_matches(labeling, scale)?;
    let tones = scale.tones();
    for i in 0..6 {
        let a = labeling.degree_of(tones[i]).expect("tone set checked");
        let b = labeling.degree_of(tones[i + 1]).expect("tone set checked");
        if !template.has_edge(a, b) {
            return Ok(Condition1Outcome {
                pass: false,
                failing_pair: Some((tones[i], tones[i + 1])),
            });
        }
    }
    Ok(Condition1Outcome {
        pass: true,
        failing_pair: None,
    })
}

/// Condition: the chords on degrees 1, 3, 4, 5, 6 (each built from scale
/// degrees k, k+2, k+4) classify as golden triangles or golden gnomons.
/// The returned report also carries the adjacency outcome.
pub fn check_condition2(
    template: &FigureTemplate,
    labeling: &Labeling,
    scale: &Scale,
) -> Result<ConditionReport, AtlasError> {
    let condition1 = check_condition1(template, labeling, scale)?;
    let tones = scale.tones();
    let mut condition2 = BTreeMap::new();
    for k in GOLDEN_CHORD_DEGREES {
        let triple = [
            tones[(k as usize) - 1],
            tones[(k as usize + 1) % 7],
            tones[(k as usize + 3) % 7],
        ];
        let [pa, pb, pc] = triple.map(|t| {
            template.point(labeling.degree_of(t).expect("tone set checked"))
        });
        condition2.insert(k, classify_triangle(pa, pb, pc));
    }
    Ok(ConditionReport {
        condition1,
        condition2,
    })
}

/// All labelings of the scale satisfying the adjacency condition, in a
/// deterministic order. With `quotient_symmetry` set, labelings related by
/// a self-isometry of the template are reported once.
pub fn enumerate_labelings(
    template: &FigureTemplate,
    scale: &Scale,
    quotient_symmetry: bool,
) -> Vec<Labeling> {
    let tones = scale.tones();
    let symmetries = if quotient_symmetry {
        template.self_isometries()
    } else {
        vec![[1, 2, 3, 4, 5, 6, 7]]
    };
    let mut seen: BTreeSet<[u8; 7]> = BTreeSet::new();
    let mut out = Vec::new();
    for perm in lex_permutations() {
        let adjacent = (0..6).all(|i| template.has_edge(perm[i], perm[i + 1]));
        if !adjacent {
            continue;
        }
        let canonical = symmetries
            .iter()
            .map(|rho| perm.map(|d| rho[d as usize - 1]))
            .min()
            .expect("at least the identity");
        if seen.insert(canonical) {
            let labeling = Labeling::new(tones.iter().copied().zip(perm))
                .expect("permutation is bijective");
            out.push(labeling);
        }
    }
    out
}

/// Keep the labelings whose chords of degree 1, 3, 4, 5, 6 are all golden.
pub fn filter_golden(
    template: &FigureTemplate,
    scale: &Scale,
    labelings: &[Labeling],
) -> Vec<Labeling> {
    labelings
        .iter()
        .filter(|lab| {
            check_condition2(template, lab, scale)
                .map(|report| report.condition2_pass())
                .unwrap_or(false)
        })
        .cloned()
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionDirection {
    Horizontal,
    Vertical,
}

/// One way of extending the lattice: the major scale of the glued neighbor,
/// paired with its relative minor for vertical extensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingCandidate {
    pub major: Scale,
    pub relative_minor: Option<Scale>,
}

/// The scales that can occupy a glued neighbor: majors containing the
/// shared tones of the corresponding glue.
pub fn gluing_candidates(
    direction: ExtensionDirection,
    atlas: &FigureAtlas,
) -> Result<Vec<GluingCandidate>, AtlasError> {
    let glue = match direction {
        ExtensionDirection::Horizontal => atlas.h_glue(),
        ExtensionDirection::Vertical => atlas.v_glue(),
    }
    .ok_or_else(|| {
        AtlasError::BadStructure("atlas has no glue data for this direction".into())
    })?;
    let required: BTreeSet<Tone> = glue.shared_tones.iter().copied().collect();
    let majors = scales_containing(&required, ScaleKind::Major, SPELLED_KEY_DOMAIN);
    Ok(majors
        .into_iter()
        .map(|major| GluingCandidate {
            relative_minor: match direction {
                ExtensionDirection::Horizontal => None,
                ExtensionDirection::Vertical => major.relative_minor(),
            },
            major,
        })
        .collect())
}

/// Whether the figure can serve the fifth-up horizontal gluing: the four
/// shared tones of the atlas's horizontal glue must be carried by an exact
/// isometry from their fifth-down counterparts, which holds iff all pairwise
/// distances agree between the two labeled quadruples.
pub fn h_extension_compatible(
    template: &FigureTemplate,
    labeling: &Labeling,
    shared_tones: &[Tone],
) -> bool {
    let pairs: Option<Vec<(u8, u8)>> = shared_tones
        .iter()
        .map(|&tone| {
            let target = labeling.degree_of(tone)?;
            let source = labeling.degree_of(tone.transposed(-1))?;
            Some((source, target))
        })
        .collect();
    let Some(pairs) = pairs else {
        return false;
    };
    for i in 0..pairs.len() {
        for j in (i + 1)..pairs.len() {
            let source_d = sq_distance(template.point(pairs[i].0), template.point(pairs[j].0));
            let target_d = sq_distance(template.point(pairs[i].1), template.point(pairs[j].1));
            if source_d != target_d {
                return false;
            }
        }
    }
    true
}

/// Whether the figure can serve the vertical gluing: reflecting the figure
/// across the line through the two anchor tones must make it coincide with
/// the original in exactly those two anchor vertices.
pub fn v_extension_compatible(
    template: &FigureTemplate,
    labeling: &Labeling,
    anchor_tones: &[Tone],
) -> bool {
    let anchors: Option<Vec<u8>> = anchor_tones
        .iter()
        .map(|&tone| labeling.degree_of(tone))
        .collect();
    let Some(anchors) = anchors else {
        return false;
    };
    if anchors.len() != 2 {
        return false;
    }
    let Ok(mirror) =
        Isometry::reflection_across_line(template.point(anchors[0]), template.point(anchors[1]))
    else {
        return false;
    };
    let mut coincidences = BTreeSet::new();
    for d in 1..=7u8 {
        let image = mirror.apply(template.point(d));
        for e in 1..=7u8 {
            if &image == template.point(e) {
                coincidences.insert((d, e));
            }
        }
    }
    let expected: BTreeSet<(u8, u8)> = anchors.iter().map(|&a| (a, a)).collect();
    coincidences == expected
}

/// One named check of [`validate_atlas`].
#[derive(Debug, Clone, Serialize)]
pub struct ValidationCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn push(&mut self, name: &str, pass: bool, detail: String) {
        self.checks.push(ValidationCheck {
            name: name.to_string(),
            pass,
            detail,
        });
    }
}

/// Check every structural and geometric claim the atlas makes about itself:
/// template integrity, both conditions on the canonical labeling, exactness
/// of the glue isometries and their shared-vertex contracts, the relabeling
/// map, the apex extremality on both sides of the mirror, and the content
/// hash.
pub fn validate_atlas(atlas: &FigureAtlas) -> ValidationReport {
    let mut report = ValidationReport { checks: Vec::new() };
    let template = atlas.template();
    let labeling = atlas.canonical_labeling();
    let scale = atlas.base_scale();

    // Template structure (already enforced at construction; re-reported).
    report.push(
        "points-distinct",
        true,
        "7 pairwise distinct exact points".into(),
    );
    report.push(
        "edges-connected",
        template.edges().count() > 0,
        format!("{} drawn edges, connected", template.edges().count()),
    );

    match check_condition1(template, labeling, &scale) {
        Ok(outcome) => report.push(
            "condition1-canonical",
            outcome.pass,
            match &outcome.failing_pair {
                None => "all consecutive degrees adjacent".into(),
                Some((a, b)) => format!("pair ({a}, {b}) not adjacent"),
            },
        ),
        Err(e) => report.push("condition1-canonical", false, e.to_string()),
    }

    match check_condition2(template, labeling, &scale) {
        Ok(rep) => {
            let detail = rep
                .condition2
                .iter()
                .map(|(k, shape)| format!("{k}:{shape}"))
                .collect::<Vec<_>>()
                .join(" ");
            report.push("condition2-canonical", rep.condition2_pass(), detail);
        }
        Err(e) => report.push("condition2-canonical", false, e.to_string()),
    }

    // Apex is strictly topmost.
    let apex = template.point(template.apex_degree());
    let apex_top = (1..=7)
        .filter(|&d| d != template.apex_degree())
        .all(|d| template.point(d).im_scaled_exact() < apex.im_scaled_exact());
    report.push(
        "apex-topmost",
        apex_top,
        format!("degree {} strictly above all others", template.apex_degree()),
    );

    if let Some(h) = atlas.h_glue() {
        validate_h_glue(&mut report, atlas, h);
    }
    if let Some(v) = atlas.v_glue() {
        validate_v_glue(&mut report, atlas, v);
    }

    if !atlas.minor_relabel().is_empty() {
        let relabeled: BTreeSet<Tone> = labeling
            .tones_by_degree()
            .iter()
            .map(|&t| atlas.relabeled(t))
            .collect();
        let expected = Scale::natural_minor(scale.root).tone_set();
        report.push(
            "minor-relabel",
            relabeled == expected,
            "relabeled tone set equals the parallel natural minor".into(),
        );
    }

    let symmetries = template.self_isometries();
    let expected_count = match atlas.symmetry_quotient() {
        SymmetryQuotient::None => 1,
        SymmetryQuotient::Mirror => 2,
    };
    report.push(
        "self-isometry-group",
        symmetries.len() == expected_count,
        format!(
            "{} exact self-isometries (quotient declares {})",
            symmetries.len(),
            expected_count
        ),
    );

    let expected_hash = hash_doc(&atlas.to_doc());
    report.push(
        "content-hash",
        atlas.content_hash() == expected_hash,
        expected_hash,
    );

    report
}

fn isometry_preserves_distances(iso: &Isometry, template: &FigureTemplate) -> bool {
    for a in 1..=7u8 {
        for b in (a + 1)..=7 {
            let before = sq_distance(template.point(a), template.point(b));
            let after = sq_distance(
                &iso.apply(template.point(a)),
                &iso.apply(template.point(b)),
            );
            if before != after {
                return false;
            }
        }
    }
    true
}

fn validate_h_glue(report: &mut ValidationReport, atlas: &FigureAtlas, glue: &Glue) {
    let template = atlas.template();
    let labeling = atlas.canonical_labeling();
    report.push(
        "h-glue-exact",
        glue.isometry.is_valid() && isometry_preserves_distances(&glue.isometry, template),
        "horizontal glue preserves all squared distances".into(),
    );

    // The glued copy carries labels one fifth up; its vertex for tone X sits
    // at iso(point of X−1). Shared tones must land exactly on their own
    // vertices of the base figure.
    let mut aligned = true;
    for &tone in &glue.shared_tones {
        let (Some(target), Some(source)) = (
            labeling.degree_of(tone),
            labeling.degree_of(tone.transposed(-1)),
        ) else {
            aligned = false;
            break;
        };
        if &glue.isometry.apply(template.point(source)) != template.point(target) {
            aligned = false;
        }
    }
    report.push(
        "h-glue-shared-tones",
        aligned,
        format!(
            "shared tones {} carried onto matching vertices",
            glue.shared_tones
                .iter()
                .map(|t| t.name())
                .collect::<Vec<_>>()
                .join(",")
        ),
    );

    // No coincidence beyond the declared shared set, and every coincidence
    // merges identically spelled tones (base tone X against moved tone X−1+1).
    let mut coincidences = 0usize;
    let mut labels_ok = true;
    for d in 1..=7u8 {
        let image = glue.isometry.apply(template.point(d));
        for e in 1..=7u8 {
            if &image == template.point(e) {
                coincidences += 1;
                if labeling.tone_at(d).transposed(1) != labeling.tone_at(e) {
                    labels_ok = false;
                }
            }
        }
    }
    report.push(
        "h-glue-overlap",
        coincidences == glue.shared_tones.len() && labels_ok,
        format!(
            "{} coincident vertex pairs, all labels consistent: {}",
            coincidences, labels_ok
        ),
    );
}

fn validate_v_glue(report: &mut ValidationReport, atlas: &FigureAtlas, glue: &Glue) {
    let template = atlas.template();
    let labeling = atlas.canonical_labeling();
    report.push(
        "v-glue-exact",
        glue.isometry.is_valid()
            && glue.isometry.is_reflecting()
            && isometry_preserves_distances(&glue.isometry, template),
        "vertical glue is an exact reflection".into(),
    );

    // The mirror fixes the anchor vertices, so the mirror line passes
    // through them.
    let anchors_fixed = glue.shared_tones.iter().all(|&tone| {
        labeling
            .degree_of(tone)
            .map(|d| &glue.isometry.apply(template.point(d)) == template.point(d))
            .unwrap_or(false)
    });
    report.push(
        "v-glue-anchors-fixed",
        anchors_fixed,
        format!(
            "mirror line passes through {}",
            glue.shared_tones
                .iter()
                .map(|t| t.name())
                .collect::<Vec<_>>()
                .join(",")
        ),
    );

    // Exactly the anchors coincide; the reflected copy carries relabeled
    // tones, which must agree at every coincidence.
    let mut coincidences = 0usize;
    let mut labels_ok = true;
    for d in 1..=7u8 {
        let image = glue.isometry.apply(template.point(d));
        for e in 1..=7u8 {
            if &image == template.point(e) {
                coincidences += 1;
                if atlas.relabeled(labeling.tone_at(d)) != labeling.tone_at(e) {
                    labels_ok = false;
                }
            }
        }
    }
    report.push(
        "v-glue-overlap",
        coincidences == glue.shared_tones.len() && labels_ok,
        format!(
            "{} coincident vertex pairs, all labels consistent: {}",
            coincidences, labels_ok
        ),
    );

    // The apex tone stays strictly on top; its reflected, relabeled twin
    // sits strictly below everything.
    let apex = template.point(template.apex_degree());
    let reflected_apex = glue.isometry.apply(apex);
    let apex_high = (1..=7).all(|d| {
        let p = glue.isometry.apply(template.point(d));
        p == *apex || p.im_scaled_exact() < apex.im_scaled_exact()
    });
    let reflected_low = (1..=7).all(|d| {
        let p = template.point(d);
        *p == reflected_apex || reflected_apex.im_scaled_exact() < p.im_scaled_exact()
    });
    report.push(
        "v-glue-apex-extremes",
        apex_high && reflected_low,
        format!(
            "{} strictly above the pair, {} strictly below",
            labeling.tone_at(template.apex_degree()),
            atlas.relabeled(labeling.tone_at(template.apex_degree()))
        ),
    );
}

/// Figure-level verification rollup: atlas validation, arrangement and
/// golden-survivor counts for both shapes, extension candidates, and the
/// gnomon's extension incompatibility.
#[derive(Debug, Clone)]
pub struct VerificationSummary {
    pub triangle_hash: String,
    pub gnomon_hash: String,
    pub triangle_validation: ValidationReport,
    pub gnomon_validation: ValidationReport,
    pub triangle_adjacency_count: usize,
    pub triangle_golden_count: usize,
    pub triangle_survivor_is_canonical: bool,
    pub gnomon_adjacency_count: usize,
    pub gnomon_golden_count: usize,
    pub gnomon_survivor_h_compatible: bool,
    pub gnomon_survivor_v_compatible: bool,
    pub horizontal_candidates: Vec<GluingCandidate>,
    pub vertical_candidates: Vec<GluingCandidate>,
}

impl VerificationSummary {
    pub fn all_pass(&self) -> bool {
        self.triangle_validation.all_pass()
            && self.gnomon_validation.all_pass()
            && self.triangle_adjacency_count == 7
            && self.triangle_golden_count == 1
            && self.triangle_survivor_is_canonical
            && self.gnomon_adjacency_count == 7
            && self.gnomon_golden_count == 1
            && !self.gnomon_survivor_h_compatible
            && !self.gnomon_survivor_v_compatible
            && self.horizontal_candidates.len() == 2
            && self.vertical_candidates.len() == 6
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("triangle atlas {}", self.triangle_hash));
        line(format!("gnomon atlas {}", self.gnomon_hash));
        for (name, report) in [
            ("triangle", &self.triangle_validation),
            ("gnomon", &self.gnomon_validation),
        ] {
            for check in &report.checks {
                line(format!(
                    "{} {:<24} {} ({})",
                    name,
                    check.name,
                    if check.pass { "pass" } else { "FAIL" },
                    check.detail
                ));
            }
        }
        line(format!(
            "triangle arrangements: {} satisfy adjacency, {} golden, survivor canonical: {}",
            self.triangle_adjacency_count,
            self.triangle_golden_count,
            self.triangle_survivor_is_canonical
        ));
        line(format!(
            "gnomon arrangements: {} satisfy adjacency, {} golden, h/v extension compatible: {}/{}",
            self.gnomon_adjacency_count,
            self.gnomon_golden_count,
            self.gnomon_survivor_h_compatible,
            self.gnomon_survivor_v_compatible
        ));
        line(format!(
            "horizontal extension candidates ({}): {}",
            self.horizontal_candidates.len(),
            self.horizontal_candidates
                .iter()
                .map(|c| c.major.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ));
        line(format!(
            "vertical extension candidates ({}): {}",
            self.vertical_candidates.len(),
            self.vertical_candidates
                .iter()
                .map(|c| {
                    let minor = c
                        .relative_minor
                        .map(|m| m.to_string())
                        .unwrap_or_else(|| "-".into());
                    format!("{}/{}", c.major, minor)
                })
                .collect::<Vec<_>>()
                .join(", ")
        ));
        line(format!(
            "overall: {}",
            if self.all_pass() { "pass" } else { "FAIL" }
        ));
        out
    }
}

/// Run the full figure-level verification over both bundled shapes.
pub fn run_verification(
    triangle: &FigureAtlas,
    gnomon: &FigureAtlas,
) -> Result<VerificationSummary, AtlasError> {
    let tri_scale = triangle.base_scale();
    let tri_labs = enumerate_labelings(triangle.template(), &tri_scale, true);
    let tri_golden = filter_golden(triangle.template(), &tri_scale, &tri_labs);
    let survivor_canonical =
        tri_golden.len() == 1 && &tri_golden[0] == triangle.canonical_labeling();

    let gno_scale = gnomon.base_scale();
    let gno_labs = enumerate_labelings(gnomon.template(), &gno_scale, true);
    let gno_golden = filter_golden(gnomon.template(), &gno_scale, &gno_labs);

    let h_shared: Vec<Tone> = triangle
        .h_glue()
        .map(|g| g.shared_tones.clone())
        .unwrap_or_default();
    let v_shared: Vec<Tone> = triangle
        .v_glue()
        .map(|g| g.shared_tones.clone())
        .unwrap_or_default();
    let (gno_h, gno_v) = match gno_golden.first() {
        Some(lab) => (
            h_extension_compatible(gnomon.template(), lab, &h_shared),
            v_extension_compatible(gnomon.template(), lab, &v_shared),
        ),
        None => (false, false),
    };

    Ok(VerificationSummary {
        triangle_hash: triangle.content_hash().to_string(),
        gnomon_hash: gnomon.content_hash().to_string(),
        triangle_validation: validate_atlas(triangle),
        gnomon_validation: validate_atlas(gnomon),
        triangle_adjacency_count: tri_labs.len(),
        triangle_golden_count: tri_golden.len(),
        triangle_survivor_is_canonical: survivor_canonical,
        gnomon_adjacency_count: gno_labs.len(),
        gnomon_golden_count: gno_golden.len(),
        gnomon_survivor_h_compatible: gno_h,
        gnomon_survivor_v_compatible: gno_v,
        horizontal_candidates: gluing_candidates(ExtensionDirection::Horizontal, triangle)?,
        vertical_candidates: gluing_candidates(ExtensionDirection::Vertical, triangle)?,
    })
}

/// Reference constructions of the two bundled atlases, used to regenerate
/// the data files and to pin their geometry in tests.
pub mod reference {
    use super::*;
    use crate::goldenfield::CycPoint;

    fn tone(name: &str) -> Tone {
        name.parse().expect("valid tone literal")
    }

    /// The golden-triangle base figure.
    ///
    /// The big triangle has its apex at E with legs subdivided by D, C on
    /// the right and F, G on the left; A and B are the base corners. The
    /// drawn edges wind around the perimeter through all seven points, so
    /// consecutive scale degrees are adjacent. All coordinates are integer
    /// combinations of the fifth roots of unity.
    pub fn triangle_atlas() -> FigureAtlas {
        let z = CycPoint::zeta;
        let points = [
            z(0),                          // C
            -&z(3),                        // D
            &(&z(0) + &z(1)) + &z(2),      // E (apex)
            &z(0) + &z(2),                 // F
            CycPoint::zero(),              // G
            -&z(1),                        // A
            -&(&(&z(1) + &z(2)) + &z(3)),  // B
        ];
        let template = FigureTemplate::new(
            ShapeKind::Triangle,
            points,
            [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 1)],
            3,
        )
        .expect("triangle template is well-formed");
        let labeling = Labeling::from_degree_tones(
            ["C", "D", "E", "F", "G", "A", "B"].map(tone),
        )
        .expect("canonical labeling is bijective");
        let h_glue = Glue {
            isometry: Isometry::reflect_then_translate(-&CycPoint::zeta(3)),
            shared_tones: vec![tone("C"), tone("D"), tone("E"), tone("B")],
        };
        let v_glue = Glue {
            isometry: Isometry::reflect_then_translate(CycPoint::zero()),
            shared_tones: vec![tone("C"), tone("G")],
        };
        let minor_relabel: BTreeMap<Tone, Tone> = [
            (tone("E"), tone("Eb")),
            (tone("A"), tone("Ab")),
            (tone("B"), tone("Bb")),
        ]
        .into_iter()
        .collect();
        FigureAtlas::from_parts(
            template,
            labeling,
            Some(h_glue),
            Some(v_glue),
            minor_relabel,
            SymmetryQuotient::Mirror,
        )
        .expect("triangle atlas assembles")
    }

    /// The golden-gnomon base figure.
    ///
    /// E, C, B, A, G are the corners of a unit-side regular pentagon with E
    /// on top; D and F are the two inner star points on the chord from G to
    /// C. The same perimeter winding as the triangle connects consecutive
    /// degrees. This figure satisfies both conditions but cannot serve
    /// either gluing of the lattice.
    pub fn gnomon_atlas() -> FigureAtlas {
        let z = CycPoint::zeta;
        let points = [
            -&z(2),                        // C
            &z(0) + &z(3),                 // D
            CycPoint::zero(),              // E (apex)
            -&(&z(0) + &z(2)),             // F
            z(3),                          // G
            -&(&(&z(0) + &z(1)) + &z(2)),  // A
            -&(&z(1) + &z(2)),             // B
        ];
        let template = FigureTemplate::new(
            ShapeKind::Gnomon,
            points,
            [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 1)],
            3,
        )
        .expect("gnomon template is well-formed");
        let labeling = Labeling::from_degree_tones(
            ["C", "D", "E", "F", "G", "A", "B"].map(tone),
        )
        .expect("canonical labeling is bijective");
        FigureAtlas::from_parts(
            template,
            labeling,
            None,
            None,
            BTreeMap::new(),
            SymmetryQuotient::Mirror,
        )
        .expect("gnomon atlas assembles")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goldenfield::GoldenScalar;
    use num::BigRational;

    fn tone(name: &str) -> Tone {
        name.parse().unwrap()
    }

    /// Regenerates the bundled data files from the reference construction.
    /// Run explicitly after editing `reference`:
    /// `cargo test -p golden-tonnetz regenerate_bundled_atlases -- --ignored`
    #[test]
    #[ignore]
    fn regenerate_bundled_atlases() {
        let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
        std::fs::write(
            format!("{dir}/triangle.json"),
            reference::triangle_atlas().to_json(),
        )
        .unwrap();
        std::fs::write(
            format!("{dir}/gnomon.json"),
            reference::gnomon_atlas().to_json(),
        )
        .unwrap();
    }

    #[test]
    fn bundled_atlases_match_reference_construction() {
        assert_eq!(FigureAtlas::triangle(), reference::triangle_atlas());
        assert_eq!(FigureAtlas::gnomon(), reference::gnomon_atlas());
    }

    #[test]
    fn atlas_json_round_trip() {
        let atlas = FigureAtlas::triangle();
        let json = atlas.to_json();
        let reloaded = FigureAtlas::from_json(&json).unwrap();
        assert_eq!(atlas, reloaded);
    }

    #[test]
    fn tampered_hash_is_rejected() {
        let json = FigureAtlas::triangle().to_json().replace(
            &FigureAtlas::triangle().content_hash()[..8],
            "deadbeef",
        );
        assert!(matches!(
            FigureAtlas::from_json(&json),
            Err(AtlasError::HashMismatch { .. })
        ));
    }

    #[test]
    fn bundled_atlases_validate() {
        for atlas in [FigureAtlas::triangle(), FigureAtlas::gnomon()] {
            let report = validate_atlas(&atlas);
            assert!(
                report.all_pass(),
                "{:#?}",
                report
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn canonical_conditions_hold() {
        let atlas = FigureAtlas::triangle();
        let scale = atlas.base_scale();
        let outcome =
            check_condition1(atlas.template(), atlas.canonical_labeling(), &scale).unwrap();
        assert!(outcome.pass);

        let report =
            check_condition2(atlas.template(), atlas.canonical_labeling(), &scale).unwrap();
        use ShapeClass::*;
        let expected: BTreeMap<u8, ShapeClass> = [
            (1, GoldenTriangle),
            (3, GoldenGnomon),
            (4, GoldenTriangle),
            (5, GoldenTriangle),
            (6, GoldenGnomon),
        ]
        .into_iter()
        .collect();
        assert_eq!(report.condition2, expected);
    }

    #[test]
    fn gnomon_chord_shapes() {
        let atlas = FigureAtlas::gnomon();
        let scale = atlas.base_scale();
        let report =
            check_condition2(atlas.template(), atlas.canonical_labeling(), &scale).unwrap();
        use ShapeClass::*;
        let expected: BTreeMap<u8, ShapeClass> = [
            (1, GoldenGnomon),
            (3, GoldenTriangle),
            (4, GoldenGnomon),
            (5, GoldenGnomon),
            (6, GoldenTriangle),
        ]
        .into_iter()
        .collect();
        assert_eq!(report.condition2, expected);
    }

    #[test]
    fn chords_two_and_seven_are_not_golden() {
        for atlas in [FigureAtlas::triangle(), FigureAtlas::gnomon()] {
            let scale = atlas.base_scale();
            let tones = scale.tones();
            for k in [2usize, 7] {
                let triple = [tones[k - 1], tones[(k + 1) % 7], tones[(k + 3) % 7]];
                let [a, b, c] = triple.map(|t| {
                    atlas
                        .template()
                        .point(atlas.canonical_labeling().degree_of(t).unwrap())
                });
                assert_eq!(classify_triangle(a, b, c), ShapeClass::Other, "chord {k}");
            }
        }
    }

    #[test]
    fn broken_adjacency_is_caught() {
        let atlas = FigureAtlas::triangle();
        let scale = atlas.base_scale();
        // Swap D and A.
        let mut tones = *atlas.canonical_labeling().tones_by_degree();
        tones.swap(1, 5);
        let swapped = Labeling::from_degree_tones(tones).unwrap();
        let outcome = check_condition1(atlas.template(), &swapped, &scale).unwrap();
        assert!(!outcome.pass);
        assert_eq!(outcome.failing_pair, Some((tone("C"), tone("D"))));
    }

    #[test]
    fn enumeration_counts() {
        for atlas in [FigureAtlas::triangle(), FigureAtlas::gnomon()] {
            let scale = atlas.base_scale();
            let quotiented = enumerate_labelings(atlas.template(), &scale, true);
            assert_eq!(quotiented.len(), 7);
            let full = enumerate_labelings(atlas.template(), &scale, false);
            assert_eq!(full.len(), 14);
            for lab in &quotiented {
                assert!(check_condition1(atlas.template(), lab, &scale)
                    .unwrap()
                    .pass);
            }
            let golden = filter_golden(atlas.template(), &scale, &quotiented);
            assert_eq!(golden.len(), 1);
        }
        let triangle = FigureAtlas::triangle();
        let scale = triangle.base_scale();
        let labs = enumerate_labelings(triangle.template(), &scale, true);
        let golden = filter_golden(triangle.template(), &scale, &labs);
        assert_eq!(&golden[0], triangle.canonical_labeling());
    }

    #[test]
    fn self_isometry_groups_are_mirrors() {
        for atlas in [FigureAtlas::triangle(), FigureAtlas::gnomon()] {
            let symmetries = atlas.template().self_isometries();
            assert_eq!(symmetries.len(), 2);
            assert_eq!(symmetries[0], [1, 2, 3, 4, 5, 6, 7]);
            // The mirror swaps C↔G, D↔F, A↔B and fixes the apex E.
            assert_eq!(symmetries[1], [5, 4, 3, 2, 1, 7, 6]);
        }
    }

    #[test]
    fn extension_candidate_lists() {
        let atlas = FigureAtlas::triangle();
        let horizontal = gluing_candidates(ExtensionDirection::Horizontal, &atlas).unwrap();
        assert_eq!(
            horizontal
                .iter()
                .map(|c| c.major.root.name())
                .collect::<Vec<_>>(),
            ["C", "G"]
        );
        assert!(horizontal.iter().all(|c| c.relative_minor.is_none()));

        let vertical = gluing_candidates(ExtensionDirection::Vertical, &atlas).unwrap();
        let pairs: Vec<String> = vertical
            .iter()
            .map(|c| {
                format!(
                    "{}/{}",
                    c.major.root.name(),
                    c.relative_minor.unwrap().root.name()
                )
            })
            .collect();
        assert_eq!(pairs, ["Ab/F", "Eb/C", "Bb/G", "F/D", "C/A", "G/E"]);
    }

    #[test]
    fn triangle_serves_both_extensions() {
        let atlas = FigureAtlas::triangle();
        let h_shared = &atlas.h_glue().unwrap().shared_tones;
        let v_shared = &atlas.v_glue().unwrap().shared_tones;
        assert!(h_extension_compatible(
            atlas.template(),
            atlas.canonical_labeling(),
            h_shared
        ));
        assert!(v_extension_compatible(
            atlas.template(),
            atlas.canonical_labeling(),
            v_shared
        ));
    }

    #[test]
    fn gnomon_serves_neither_extension() {
        let triangle = FigureAtlas::triangle();
        let gnomon = FigureAtlas::gnomon();
        let scale = gnomon.base_scale();
        let labs = enumerate_labelings(gnomon.template(), &scale, true);
        let golden = filter_golden(gnomon.template(), &scale, &labs);
        assert_eq!(golden.len(), 1);
        let h_shared = &triangle.h_glue().unwrap().shared_tones;
        let v_shared = &triangle.v_glue().unwrap().shared_tones;
        assert!(!h_extension_compatible(
            gnomon.template(),
            &golden[0],
            h_shared
        ));
        assert!(!v_extension_compatible(
            gnomon.template(),
            &golden[0],
            v_shared
        ));
    }

    #[test]
    fn perturbed_geometry_fails_condition2() {
        let atlas = FigureAtlas::triangle();
        let mut points = atlas.template().points().clone();
        let nudge = CycPoint::from_golden(&GoldenScalar::new(
            BigRational::new(1.into(), 1000.into()),
            BigRational::from_integer(0.into()),
        ));
        points[0] = &points[0] + &nudge;
        let perturbed = FigureTemplate::new(
            ShapeKind::Triangle,
            points,
            atlas.template().edges(),
            atlas.template().apex_degree(),
        )
        .unwrap();
        let report = check_condition2(
            &perturbed,
            atlas.canonical_labeling(),
            &atlas.base_scale(),
        )
        .unwrap();
        assert!(!report.condition2_pass());
    }

    #[test]
    fn enumeration_is_stable_under_edge_permutation() {
        let atlas = FigureAtlas::triangle();
        let scale = atlas.base_scale();
        let baseline = enumerate_labelings(atlas.template(), &scale, true);
        let mut edges: Vec<(u8, u8)> = atlas.template().edges().collect();
        edges.reverse();
        let shuffled = FigureTemplate::new(
            ShapeKind::Triangle,
            atlas.template().points().clone(),
            edges.into_iter().map(|(a, b)| (b, a)),
            atlas.template().apex_degree(),
        )
        .unwrap();
        let again = enumerate_labelings(&shuffled, &scale, true);
        assert_eq!(baseline, again);
    }

    #[test]
    fn mirror_images_of_valid_labelings_stay_valid() {
        let atlas = FigureAtlas::triangle();
        let scale = atlas.base_scale();
        let mirror = atlas.template().self_isometries()[1];
        for lab in enumerate_labelings(atlas.template(), &scale, false) {
            let mirrored = Labeling::new(
                (1..=7u8).map(|d| (lab.tone_at(d), mirror[d as usize - 1])),
            )
            .unwrap();
            let rep = check_condition2(atlas.template(), &mirrored, &scale).unwrap();
            assert!(rep.condition1.pass);
            let original = check_condition2(atlas.template(), &lab, &scale).unwrap();
            assert_eq!(rep.condition2_pass(), original.condition2_pass());
        }
    }

    #[test]
    fn verification_summary_passes() {
        let summary =
            run_verification(&FigureAtlas::triangle(), &FigureAtlas::gnomon()).unwrap();
        assert!(summary.all_pass(), "{}", summary.to_text());
        assert_eq!(summary.triangle_adjacency_count, 7);
        assert_eq!(summary.triangle_golden_count, 1);
        assert_eq!(summary.horizontal_candidates.len(), 2);
        assert_eq!(summary.vertical_candidates.len(), 6);
    }
}
