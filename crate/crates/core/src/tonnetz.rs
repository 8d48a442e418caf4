//! Finite windows of the golden Tonnetz, assembled by repeated gluing with
//! exact vertex merging, plus the representability, transformation, and
//! connectivity queries on a built window.
//!
//! A window places one figure per cell of a centered grid. Columns are
//! related by the atlas's horizontal glue isometry; under
//! [`HorizontalRule::FifthShift`] each column's labels move up a fifth,
//! while under [`HorizontalRule::SelfRepeat`] every column keeps the base
//! major's tone set and the arrangement rotates around the figure instead
//! (the only self-consistent way to glue the same scale onto the shared
//! leg). Rows come in major/minor pairs: the odd row of a pair is the
//! reflection of the even row across the line through the two vertical
//! anchor tones, relabeled as the parallel natural minor under
//! [`VerticalRule::RelativeMinorReflect`] or kept verbatim under
//! [`VerticalRule::MajorReflect`]. Coincident vertices merge only when
//! their exact points and spelled tones both agree; any disagreement is a
//! hard construction error.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::figure::FigureAtlas;
use crate::goldenfield::{classify_triangle, CycPoint, Isometry, ShapeClass};
use crate::tones::{plr_apply, PlrOp, Scale, ScaleKind, Tone, Triad, SPELLED_KEY_DOMAIN};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HorizontalRule {
    FifthShift,
    SelfRepeat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerticalRule {
    RelativeMinorReflect,
    MajorReflect,
}

/// Which pair of extension rules a window is built with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct LatticeVariant {
    pub horizontal: HorizontalRule,
    pub vertical: VerticalRule,
}

impl LatticeVariant {
    /// The golden Tonnetz: fifth-shifted columns, relative-minor rows.
    pub fn golden() -> Self {
        LatticeVariant {
            horizontal: HorizontalRule::FifthShift,
            vertical: VerticalRule::RelativeMinorReflect,
        }
    }
}

impl fmt::Display for LatticeVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = match self.horizontal {
            HorizontalRule::FifthShift => "fifth-shift",
            HorizontalRule::SelfRepeat => "self-repeat",
        };
        let v = match self.vertical {
            VerticalRule::RelativeMinorReflect => "relative-minor-reflect",
            VerticalRule::MajorReflect => "major-reflect",
        };
        write!(f, "{h}/{v}")
    }
}

/// One merged lattice vertex: an exact point carrying one spelled tone.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WindowVertex {
    pub point: CycPoint,
    pub tone: Tone,
}

/// One figure placed at a grid cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlacedFigure {
    /// (column, row); cell (0, 0) is the base figure.
    pub cell: (i32, i32),
    pub transform: Isometry,
    pub scale: Scale,
    /// Tone carried by each template degree 1..=7.
    pub tones: [Tone; 7],
    /// Window vertex of each template degree 1..=7.
    pub vertex_ids: [usize; 7],
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("window extent must be at least 1x1")]
    EmptyExtent,
    #[error("atlas lacks the {0} glue required by this variant and extent")]
    MissingGlue(&'static str),
    #[error("atlas lacks the minor relabeling required by relative-minor rows")]
    MissingRelabel,
    #[error("the horizontal glue admits no consistent same-scale labeling")]
    InconsistentSelfGlue,
    #[error("label conflict at {point}: {existing} vs {incoming}")]
    LabelConflict {
        point: CycPoint,
        existing: Tone,
        incoming: Tone,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QueryError {
    #[error("{0} is not one of the seven diatonic modes")]
    NotAMode(ScaleKind),
    #[error("no connected {kind} path rooted on {root} in this window (try a larger extent)")]
    ModeNotFound { kind: ScaleKind, root: Tone },
    #[error("no occurrence of {0} satisfies the common-tone constraint (try a larger extent)")]
    TriadNotRealized(Triad),
    #[error("occurrence does not belong to this window")]
    ForeignOccurrence,
}

/// One realization of a triad: three window vertices that form a chord
/// (degree I, III, IV, V, or VI) of at least one placed figure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Occurrence {
    pub triad: Triad,
    /// Root, third, fifth.
    pub tones: [Tone; 3],
    /// Window vertices in the same order as `tones`.
    pub vertex_indices: [usize; 3],
    pub shape: ShapeClass,
    /// Placed figures (by index) whose chord set contains this triple.
    pub figure_refs: Vec<usize>,
}

/// Result of a tone-set connectivity query: one chosen vertex per tone and
/// the window edges among the chosen vertices, or the reason none exists.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConnectionWitness {
    pub connected: bool,
    pub assignment: BTreeMap<Tone, usize>,
    pub edges: Vec<(usize, usize)>,
    pub missing: Vec<Tone>,
}

/// A finite, fully merged window of the lattice.
#[derive(Debug, Clone)]
pub struct TonnetzWindow {
    variant: LatticeVariant,
    columns: u32,
    rows: u32,
    atlas_hash: String,
    vertices: Vec<WindowVertex>,
    edges: Vec<(usize, usize)>,
    figures: Vec<PlacedFigure>,
    adjacency: Vec<BTreeSet<usize>>,
    by_tone: BTreeMap<Tone, Vec<usize>>,
}

/// Centered index range of a given length: `0` is always included and the
/// range extends one step further right/up than left/down when the length
/// is even.
fn centered_range(len: u32) -> std::ops::Range<i32> {
    let lo = -((len as i32 - 1).div_euclid(2));
    lo..lo + len as i32
}

/// Iterated composition `iso^n` (negative `n` composes the inverse).
fn power(iso: &Isometry, n: i32) -> Isometry {
    let step = if n < 0 { iso.inverse() } else { iso.clone() };
    let mut acc = Isometry::identity();
    for _ in 0..n.unsigned_abs() {
        acc = acc.then(&step);
    }
    acc
}

/// The arrangement rotation forced on a glued same-scale neighbor: the `s`
/// with `tone_at(e) = scale[(d - 1 + s) mod 7]` at every glue coincidence
/// `iso(point d) = point e`.
fn self_glue_rotation(atlas: &FigureAtlas, iso: &Isometry) -> Result<u8, BuildError> {
    let template = atlas.template();
    let labeling = atlas.canonical_labeling();
    let order = atlas.base_scale().tones();
    let position = |tone: Tone| order.iter().position(|&t| t == tone).unwrap() as i32;
    let mut rotation: Option<i32> = None;
    for d in 1..=7u8 {
        let image = iso.apply(template.point(d));
        for e in 1..=7u8 {
            if &image == template.point(e) {
                let s = (position(labeling.tone_at(e)) - (d as i32 - 1)).rem_euclid(7);
                if rotation.replace(s).is_some_and(|prev| prev != s) {
                    return Err(BuildError::InconsistentSelfGlue);
                }
            }
        }
    }
    rotation
        .map(|s| s as u8)
        .ok_or(BuildError::InconsistentSelfGlue)
}

/// Build a fully merged window of `columns x rows` cells centered on the
/// base figure.
pub fn build_window(
    atlas: &FigureAtlas,
    variant: LatticeVariant,
    columns: u32,
    rows: u32,
) -> Result<TonnetzWindow, BuildError> {
    if columns == 0 || rows == 0 {
        return Err(BuildError::EmptyExtent);
    }
    let template = atlas.template();
    let labeling = atlas.canonical_labeling();
    let base_root = atlas.base_scale().root;
    let scale_order = atlas.base_scale().tones();

    let h_iso = if columns > 1 {
        let glue = atlas.h_glue().ok_or(BuildError::MissingGlue("horizontal"))?;
        glue.isometry.clone()
    } else {
        Isometry::identity()
    };
    let self_rotation = match variant.horizontal {
        HorizontalRule::SelfRepeat if columns > 1 => {
            self_glue_rotation(atlas, &h_iso)? as i32
        }
        _ => 0,
    };

    let (v_iso, pair_step) = if rows > 1 {
        let glue = atlas.v_glue().ok_or(BuildError::MissingGlue("vertical"))?;
        let apex = template.point(template.apex_degree());
        let step = apex - &glue.isometry.apply(apex);
        (glue.isometry.clone(), step)
    } else {
        (Isometry::identity(), CycPoint::zero())
    };
    if rows > 1
        && variant.vertical == VerticalRule::RelativeMinorReflect
        && atlas.minor_relabel().is_empty()
    {
        return Err(BuildError::MissingRelabel);
    }

    let mut vertices: Vec<WindowVertex> = Vec::new();
    let mut by_point: BTreeMap<CycPoint, usize> = BTreeMap::new();
    let mut edge_set: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut figures: Vec<PlacedFigure> = Vec::new();

    for r in centered_range(rows) {
        for c in centered_range(columns) {
            let pair = r.div_euclid(2);
            let reflected = r.rem_euclid(2) == 1;

            let mut transform = power(&h_iso, c);
            if reflected {
                transform = transform.then(&v_iso);
            }
            if pair != 0 {
                transform = transform.then(&Isometry::translation(
                    pair_step.scale_int(pair as i64),
                ));
            }

            // The tone at template degree d before any fifth transposition:
            // the canonical tone under FifthShift, the rotated arrangement
            // under SelfRepeat.
            let arranged = |d: u8| match variant.horizontal {
                HorizontalRule::FifthShift => labeling.tone_at(d),
                HorizontalRule::SelfRepeat => {
                    scale_order[(d as i32 - 1 + self_rotation * c).rem_euclid(7) as usize]
                }
            };
            let h_shift = match variant.horizontal {
                HorizontalRule::FifthShift => c,
                HorizontalRule::SelfRepeat => 0,
            };
            let v_shift = match variant.vertical {
                VerticalRule::RelativeMinorReflect => 7 * pair,
                VerticalRule::MajorReflect => 0,
            };

            let (scale, tones): (Scale, [Tone; 7]) = if reflected {
                match variant.vertical {
                    VerticalRule::RelativeMinorReflect => (
                        Scale::natural_minor(base_root.transposed(h_shift + v_shift)),
                        std::array::from_fn(|i| {
                            atlas
                                .relabeled(arranged(i as u8 + 1))
                                .transposed(h_shift + v_shift)
                        }),
                    ),
                    VerticalRule::MajorReflect => (
                        Scale::major(base_root.transposed(h_shift)),
                        std::array::from_fn(|i| arranged(i as u8 + 1).transposed(h_shift)),
                    ),
                }
            } else {
                (
                    Scale::major(base_root.transposed(h_shift + v_shift)),
                    std::array::from_fn(|i| arranged(i as u8 + 1).transposed(h_shift + v_shift)),
                )
            };

            let mut vertex_ids = [0usize; 7];
            for d in 1..=7u8 {
                let point = transform.apply(template.point(d));
                let tone = tones[d as usize - 1];
                let id = match by_point.get(&point) {
                    Some(&existing) => {
                        if vertices[existing].tone != tone {
                            return Err(BuildError::LabelConflict {
                                point,
                                existing: vertices[existing].tone,
                                incoming: tone,
                            });
                        }
                        existing
                    }
                    None => {
                        let id = vertices.len();
                        vertices.push(WindowVertex {
                            point: point.clone(),
                            tone,
                        });
                        by_point.insert(point, id);
                        id
                    }
                };
                vertex_ids[d as usize - 1] = id;
            }
            for (a, b) in template.edges() {
                let (x, y) = (vertex_ids[a as usize - 1], vertex_ids[b as usize - 1]);
                edge_set.insert((x.min(y), x.max(y)));
            }
            figures.push(PlacedFigure {
                cell: (c, r),
                transform,
                scale,
                tones,
                vertex_ids,
            });
        }
    }

    let edges: Vec<(usize, usize)> = edge_set.into_iter().collect();
    let mut adjacency = vec![BTreeSet::new(); vertices.len()];
    for &(a, b) in &edges {
        adjacency[a].insert(b);
        adjacency[b].insert(a);
    }
    let mut by_tone: BTreeMap<Tone, Vec<usize>> = BTreeMap::new();
    for (id, v) in vertices.iter().enumerate() {
        by_tone.entry(v.tone).or_default().push(id);
    }

    Ok(TonnetzWindow {
        variant,
        columns,
        rows,
        atlas_hash: atlas.content_hash().to_string(),
        vertices,
        edges,
        figures,
        adjacency,
        by_tone,
    })
}

impl TonnetzWindow {
    pub fn variant(&self) -> LatticeVariant {
        self.variant
    }

    pub fn columns(&self) -> u32 {
        self.columns
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn atlas_hash(&self) -> &str {
        &self.atlas_hash
    }

    pub fn vertices(&self) -> &[WindowVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn figures(&self) -> &[PlacedFigure] {
        &self.figures
    }

    pub fn neighbors(&self, vertex: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[vertex].iter().copied()
    }

    /// All vertices carrying the given tone, ascending.
    pub fn vertices_of_tone(&self, tone: Tone) -> &[usize] {
        self.by_tone.get(&tone).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Placed figures (by index) whose tone set equals the scale's and
    /// whose own root matches, i.e. the figures that carry this scale's
    /// admissible arrangement.
    pub fn find_scale_figures(&self, scale: &Scale) -> Vec<usize> {
        let wanted = scale.tone_set();
        self.figures
            .iter()
            .enumerate()
            .filter(|(_, fig)| {
                fig.scale.root == scale.root
                    && fig.tones.iter().copied().collect::<BTreeSet<_>>() == wanted
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// Every major and natural-minor scale with a spelled key signature
    /// (roots −7..=7 fifths) that some placed figure carries.
    pub fn representable_scales(&self) -> BTreeSet<Scale> {
        let mut out = BTreeSet::new();
        for root in SPELLED_KEY_DOMAIN {
            for scale in [
                Scale::major(Tone::new(root)),
                Scale::natural_minor(Tone::new(root)),
            ] {
                if !self.find_scale_figures(&scale).is_empty() {
                    out.insert(scale);
                }
            }
        }
        out
    }

    /// The chord vertex triples (degrees I, III, IV, V, VI) of one placed
    /// figure, as (chord degree, [vertex; 3] in root-third-fifth order).
    fn figure_chords(&self, figure: usize) -> Vec<(u8, [usize; 3])> {
        let fig = &self.figures[figure];
        let order = fig.scale.tones();
        let vertex_of = |tone: Tone| {
            let slot = fig.tones.iter().position(|&t| t == tone).expect("scale tone");
            fig.vertex_ids[slot]
        };
        crate::figure::GOLDEN_CHORD_DEGREES
            .iter()
            .map(|&k| {
                let triple = [
                    order[k as usize - 1],
                    order[(k as usize + 1) % 7],
                    order[(k as usize + 3) % 7],
                ];
                (k, triple.map(vertex_of))
            })
            .collect()
    }

    /// All realizations of the triad among placed-figure chords, in
    /// ascending vertex-triple order. Occurrences shared by several figures
    /// are reported once with all owning figures listed.
    pub fn find_triad_occurrences(&self, triad: &Triad) -> Vec<Occurrence> {
        let wanted = triad.tone_set();
        let stack = triad.tones();
        let mut merged: BTreeMap<[usize; 3], Occurrence> = BTreeMap::new();
        for figure in 0..self.figures.len() {
            for (_, chord) in self.figure_chords(figure) {
                let tones: BTreeSet<Tone> =
                    chord.iter().map(|&v| self.vertices[v].tone).collect();
                if tones != wanted {
                    continue;
                }
                let vertex_indices = stack.map(|tone| {
                    *chord
                        .iter()
                        .find(|&&v| self.vertices[v].tone == tone)
                        .expect("chord carries the triad's tones")
                });
                let mut key = vertex_indices;
                key.sort_unstable();
                merged
                    .entry(key)
                    .or_insert_with(|| Occurrence {
                        triad: *triad,
                        tones: stack,
                        vertex_indices,
                        shape: classify_triangle(
                            &self.vertices[vertex_indices[0]].point,
                            &self.vertices[vertex_indices[1]].point,
                            &self.vertices[vertex_indices[2]].point,
                        ),
                        figure_refs: Vec::new(),
                    })
                    .figure_refs
                    .push(figure);
            }
        }
        merged.into_values().collect()
    }

    /// Whether the occurrence's vertices, tones, and figure references all
    /// belong to this window.
    pub fn contains_occurrence(&self, occ: &Occurrence) -> bool {
        occ.vertex_indices.iter().all(|&v| v < self.vertices.len())
            && occ
                .vertex_indices
                .iter()
                .zip(occ.tones)
                .all(|(&v, t)| self.vertices[v].tone == t)
            && occ
                .figure_refs
                .iter()
                .all(|&f| f < self.figures.len())
    }

    fn figure_distance(&self, a: &[usize], b: &[usize]) -> i32 {
        let mut best = i32::MAX;
        for &fa in a {
            for &fb in b {
                let (ca, ra) = self.figures[fa].cell;
                let (cb, rb) = self.figures[fb].cell;
                best = best.min((ca - cb).abs() + (ra - rb).abs());
            }
        }
        best
    }

    fn occurrence_rank(&self, occ: &Occurrence) -> (i32, i32, [usize; 3]) {
        let (r, c) = occ
            .figure_refs
            .iter()
            .map(|&f| {
                let (c, r) = self.figures[f].cell;
                (r, c)
            })
            .min()
            .expect("occurrence owns at least one figure");
        let mut key = occ.vertex_indices;
        key.sort_unstable();
        (r, c, key)
    }

    /// Apply one P/L/R move at the lattice level: the returned occurrence
    /// realizes the transformed triad and shares the two common tones'
    /// vertices with `occ`. Nearer figures win ties (same figure first),
    /// then (row, column, vertex indices).
    pub fn plr_realize(&self, occ: &Occurrence, op: PlrOp) -> Result<Occurrence, QueryError> {
        if !self.contains_occurrence(occ) {
            return Err(QueryError::ForeignOccurrence);
        }
        let target = plr_apply(occ.triad, op);
        let common: BTreeSet<Tone> = occ
            .triad
            .tone_set()
            .intersection(&target.tone_set())
            .copied()
            .collect();
        let shared_vertices: BTreeSet<usize> = occ
            .vertex_indices
            .iter()
            .zip(occ.tones)
            .filter(|(_, t)| common.contains(t))
            .map(|(&v, _)| v)
            .collect();
        self.find_triad_occurrences(&target)
            .into_iter()
            .filter(|candidate| {
                let candidate_shared: BTreeSet<usize> = candidate
                    .vertex_indices
                    .iter()
                    .zip(candidate.tones)
                    .filter(|(_, t)| common.contains(t))
                    .map(|(&v, _)| v)
                    .collect();
                candidate_shared == shared_vertices
            })
            .min_by_key(|candidate| {
                let dist = self.figure_distance(&occ.figure_refs, &candidate.figure_refs);
                let (r, c, ids) = self.occurrence_rank(candidate);
                (dist, r, c, ids)
            })
            .ok_or(QueryError::TriadNotRealized(target))
    }

    /// The deterministic starting occurrence for lattice walks: nearest to
    /// the base cell, then by (row, column, vertex indices).
    pub fn central_occurrence(&self, triad: &Triad) -> Option<Occurrence> {
        self.find_triad_occurrences(triad)
            .into_iter()
            .min_by_key(|occ| {
                let dist = occ
                    .figure_refs
                    .iter()
                    .map(|&f| {
                        let (c, r) = self.figures[f].cell;
                        c.abs() + r.abs()
                    })
                    .min()
                    .expect("occurrence owns at least one figure");
                let (r, c, ids) = self.occurrence_rank(occ);
                (dist, r, c, ids)
            })
    }

    /// Vertices realizing the mode's degree tones in order, consecutive
    /// vertices joined by window edges. The search is exhaustive over
    /// label-matching vertices; the lexicographically least path (by vertex
    /// index) wins.
    pub fn mode_path(&self, kind: ScaleKind, root: Tone) -> Result<Vec<usize>, QueryError> {
        if !kind.is_diatonic_mode() {
            return Err(QueryError::NotAMode(kind));
        }
        let tones = Scale { root, kind }.tones();
        let mut path: Vec<usize> = Vec::with_capacity(7);
        if self.extend_mode_path(&tones, &mut path) {
            Ok(path)
        } else {
            Err(QueryError::ModeNotFound { kind, root })
        }
    }

    fn extend_mode_path(&self, tones: &[Tone; 7], path: &mut Vec<usize>) -> bool {
        let depth = path.len();
        if depth == 7 {
            return true;
        }
        let candidates: Vec<usize> = match path.last() {
            None => self.vertices_of_tone(tones[0]).to_vec(),
            Some(&prev) => self
                .neighbors(prev)
                .filter(|&v| self.vertices[v].tone == tones[depth])
                .collect(),
        };
        for v in candidates {
            path.push(v);
            if self.extend_mode_path(tones, path) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// Pick one vertex per requested tone so that the chosen vertices form
    /// a connected subgraph, if possible. Absent tones are reported in the
    /// witness instead of an error.
    pub fn tones_connected(&self, tones: &BTreeSet<Tone>) -> ConnectionWitness {
        let missing: Vec<Tone> = tones
            .iter()
            .copied()
            .filter(|&t| self.vertices_of_tone(t).is_empty())
            .collect();
        if !missing.is_empty() || tones.is_empty() {
            return ConnectionWitness {
                connected: missing.is_empty() && !tones.is_empty(),
                assignment: BTreeMap::new(),
                edges: Vec::new(),
                missing,
            };
        }
        // Seed with the scarcest tone to keep the branching small; the
        // frontier search below tries every (tone, adjacent vertex) pair,
        // so any connected assignment is reachable via a spanning-tree
        // ordering of its vertices.
        let seed = tones
            .iter()
            .copied()
            .min_by_key(|&t| (self.vertices_of_tone(t).len(), t))
            .expect("tone set is non-empty");
        let mut assignment: BTreeMap<Tone, usize> = BTreeMap::new();
        for &start in self.vertices_of_tone(seed) {
            assignment.insert(seed, start);
            if self.grow_assignment(tones, &mut assignment) {
                let chosen: BTreeSet<usize> = assignment.values().copied().collect();
                let edges: Vec<(usize, usize)> = self
                    .edges
                    .iter()
                    .copied()
                    .filter(|&(a, b)| chosen.contains(&a) && chosen.contains(&b))
                    .collect();
                return ConnectionWitness {
                    connected: true,
                    assignment,
                    edges,
                    missing: Vec::new(),
                };
            }
            assignment.clear();
        }
        ConnectionWitness {
            connected: false,
            assignment: BTreeMap::new(),
            edges: Vec::new(),
            missing: Vec::new(),
        }
    }

    fn grow_assignment(
        &self,
        tones: &BTreeSet<Tone>,
        assignment: &mut BTreeMap<Tone, usize>,
    ) -> bool {
        if assignment.len() == tones.len() {
            return true;
        }
        let component: BTreeSet<usize> = assignment.values().copied().collect();
        for &tone in tones {
            if assignment.contains_key(&tone) {
                continue;
            }
            for &v in self.vertices_of_tone(tone) {
                if component.contains(&v) || !self.neighbors(v).any(|n| component.contains(&n))
                {
                    continue;
                }
                assignment.insert(tone, v);
                if self.grow_assignment(tones, assignment) {
                    return true;
                }
                assignment.remove(&tone);
            }
        }
        false
    }

    /// Deterministic structured export; the contract between window
    /// construction, rendering, and the command-line tool.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Extent {
            columns: u32,
            rows: u32,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            format_version: u32,
            variant: LatticeVariant,
            extent: Extent,
            atlas_hash: &'a str,
            vertices: &'a [WindowVertex],
            edges: &'a [(usize, usize)],
            figures: &'a [PlacedFigure],
        }
        let doc = Doc {
            format_version: 1,
            variant: self.variant,
            extent: Extent {
                columns: self.columns,
                rows: self.rows,
            },
            atlas_hash: &self.atlas_hash,
            vertices: &self.vertices,
            edges: &self.edges,
            figures: &self.figures,
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("window doc serializes");
        text.push('\n');
        text
    }
}
