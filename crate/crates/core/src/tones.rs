//! Spelled pitch classes and the symbolic layer built on them: scales,
//! modes, diatonic triads, and P/L/R transformations.
//!
//! A [`Tone`] is a position on the line of fifths with C at the origin, so
//! enharmonic spellings stay distinct: `Eb` is −3 while `D#` is +9. Every
//! query in this crate — scale membership, gluing candidates, lattice
//! labels — compares tones by exact spelling, never by semitone class.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Natural-note letters ordered by fifths: index `i` holds the letter whose
/// natural spelling sits at fifth index `i − 1`.
const FIFTH_LETTERS: [char; 7] = ['F', 'C', 'G', 'D', 'A', 'E', 'B'];

/// The default root domain for "all keys" queries: the fifteen spelled
/// major (or minor) keys from seven flats to seven sharps.
pub const SPELLED_KEY_DOMAIN: RangeInclusive<i32> = -7..=7;

/// A spelled pitch class, identified by its position on the line of fifths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tone {
    pub fifth_index: i32,
}

impl Tone {
    pub const C: Tone = Tone::new(0);

    pub const fn new(fifth_index: i32) -> Self {
        Tone { fifth_index }
    }

    /// Chromatic pitch class in 0..=11 (C = 0); a fifth spans 7 semitones.
    pub fn semitone_class(self) -> u8 {
        (7i64 * i64::from(self.fifth_index)).rem_euclid(12) as u8
    }

    pub fn transposed(self, fifths: i32) -> Tone {
        Tone::new(self.fifth_index + fifths)
    }

    /// Canonical ASCII spelling: letter followed by `#`s or `b`s.
    pub fn name(self) -> String {
        self.spelled('#', 'b')
    }

    /// Spelling with Unicode accidentals (`♯`/`♭`).
    pub fn name_unicode(self) -> String {
        self.spelled('♯', '♭')
    }

    fn spelled(self, sharp: char, flat: char) -> String {
        let slot = (self.fifth_index + 1).rem_euclid(7);
        let letter = FIFTH_LETTERS[slot as usize];
        let accidentals = (self.fifth_index + 1 - slot) / 7;
        let mut out = String::new();
        out.push(letter);
        for _ in 0..accidentals.abs() {
            out.push(if accidentals > 0 { sharp } else { flat });
        }
        out
    }
}

impl fmt::Display for Tone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Tone {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut chars = text.chars().enumerate();
        let (_, letter) = chars.next().ok_or(ParseError::Empty)?;
        let base = FIFTH_LETTERS
            .iter()
            .position(|&l| l == letter)
            .map(|slot| slot as i32 - 1)
            .ok_or(ParseError::Unexpected {
                found: letter,
                position: 0,
                expected: "a note letter A-G",
            })?;
        let mut sharps = 0i32;
        let mut flats = 0i32;
        for (position, ch) in chars {
            match ch {
                '#' | '♯' => sharps += 1,
                'b' | '♭' => flats += 1,
                _ => {
                    return Err(ParseError::Unexpected {
                        found: ch,
                        position,
                        expected: "an accidental ('#' or 'b')",
                    })
                }
            }
            if sharps > 0 && flats > 0 {
                return Err(ParseError::MixedAccidentals { position });
            }
        }
        Ok(Tone::new(base + 7 * (sharps - flats)))
    }
}

impl Serialize for Tone {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for Tone {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

/// Parse a note name such as `C`, `F#`, `Bbb` (Unicode accidentals allowed).
pub fn parse_tone(text: &str) -> Result<Tone, ParseError> {
    text.parse()
}

/// Canonical ASCII spelling of a tone.
pub fn render_tone(t: Tone) -> String {
    t.name()
}

/// Shift a tone along the line of fifths; +7 fifths is a chromatic semitone.
pub fn transpose_fifths(t: Tone, fifths: i32) -> Tone {
    t.transposed(fifths)
}

/// Errors from the note/scale/triad/word grammars.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected character {found:?} at position {position}, expected {expected}")]
    Unexpected {
        found: char,
        position: usize,
        expected: &'static str,
    },
    #[error("mixed sharps and flats at position {position}")]
    MixedAccidentals { position: usize },
    #[error("unknown scale kind {name:?}")]
    UnknownScaleKind { name: String },
    #[error("unknown triad quality {name:?}, expected \"maj\" or \"min\"")]
    UnknownQuality { name: String },
    #[error("missing {what} in {input:?}")]
    Missing {
        what: &'static str,
        input: String,
    },
}

/// The scale vocabulary: major/minor, the seven diatonic modes, and the
/// acoustic and altered scales.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ScaleKind {
    Major,
    NaturalMinor,
    Lydian,
    Ionian,
    Mixolydian,
    Dorian,
    Aeolian,
    Phrygian,
    Locrian,
    Acoustic,
    Altered,
}

impl ScaleKind {
    pub const ALL: [ScaleKind; 11] = [
        ScaleKind::Major,
        ScaleKind::NaturalMinor,
        ScaleKind::Lydian,
        ScaleKind::Ionian,
        ScaleKind::Mixolydian,
        ScaleKind::Dorian,
        ScaleKind::Aeolian,
        ScaleKind::Phrygian,
        ScaleKind::Locrian,
        ScaleKind::Acoustic,
        ScaleKind::Altered,
    ];

    /// Fifth offsets of the seven degrees relative to the root, in degree
    /// order. Each diatonic mode occupies a contiguous 7-tone window of the
    /// line of fifths anchored at its root (Lydian spans root..root+6 down
    /// to Locrian spanning root−6..root).
    pub const fn fifth_offsets(self) -> [i32; 7] {
        match self {
            ScaleKind::Major | ScaleKind::Ionian => [0, 2, 4, -1, 1, 3, 5],
            ScaleKind::NaturalMinor | ScaleKind::Aeolian => [0, 2, -3, -1, 1, -4, -2],
            ScaleKind::Lydian => [0, 2, 4, 6, 1, 3, 5],
            ScaleKind::Mixolydian => [0, 2, 4, -1, 1, 3, -2],
            ScaleKind::Dorian => [0, 2, -3, -1, 1, 3, -2],
            ScaleKind::Phrygian => [0, -5, -3, -1, 1, -4, -2],
            ScaleKind::Locrian => [0, -5, -3, -1, -6, -4, -2],
            ScaleKind::Acoustic => [0, 2, 4, 6, 1, 3, -2],
            ScaleKind::Altered => [0, -5, -3, -8, -6, -4, -2],
        }
    }

    /// True for the seven diatonic (Gregorian) modes and their major/minor
    /// aliases; false for the acoustic and altered scales.
    pub const fn is_diatonic_mode(self) -> bool {
        !matches!(self, ScaleKind::Acoustic | ScaleKind::Altered)
    }

    pub const fn token(self) -> &'static str {
        match self {
            ScaleKind::Major => "maj",
            ScaleKind::NaturalMinor => "min",
            ScaleKind::Lydian => "lydian",
            ScaleKind::Ionian => "ionian",
            ScaleKind::Mixolydian => "mixolydian",
            ScaleKind::Dorian => "dorian",
            ScaleKind::Aeolian => "aeolian",
            ScaleKind::Phrygian => "phrygian",
            ScaleKind::Locrian => "locrian",
            ScaleKind::Acoustic => "acoustic",
            ScaleKind::Altered => "altered",
        }
    }
}

impl fmt::Display for ScaleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ScaleKind {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        ScaleKind::ALL
            .into_iter()
            .find(|kind| kind.token() == text)
            .ok_or_else(|| ParseError::UnknownScaleKind {
                name: text.to_string(),
            })
    }
}

/// A rooted scale, written `<root>-<kind>` (for example `Eb-lydian`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scale {
    pub root: Tone,
    pub kind: ScaleKind,
}

impl Scale {
    pub const fn new(root: Tone, kind: ScaleKind) -> Self {
        Scale { root, kind }
    }

    pub fn major(root: Tone) -> Self {
        Scale::new(root, ScaleKind::Major)
    }

    pub fn natural_minor(root: Tone) -> Self {
        Scale::new(root, ScaleKind::NaturalMinor)
    }

    /// The seven spelled degrees in degree order.
    pub fn tones(&self) -> [Tone; 7] {
        self.kind
            .fifth_offsets()
            .map(|offset| self.root.transposed(offset))
    }

    pub fn tone_set(&self) -> BTreeSet<Tone> {
        self.tones().into_iter().collect()
    }

    pub fn contains(&self, tone: Tone) -> bool {
        self.tones().contains(&tone)
    }

    /// The natural minor scale sharing this major scale's tone set.
    pub fn relative_minor(&self) -> Option<Scale> {
        match self.kind {
            ScaleKind::Major | ScaleKind::Ionian => {
                Some(Scale::natural_minor(self.root.transposed(3)))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.root, self.kind)
    }
}

impl FromStr for Scale {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let (root, kind) = text.split_once('-').ok_or_else(|| ParseError::Missing {
            what: "'-' between root and kind",
            input: text.to_string(),
        })?;
        Ok(Scale::new(root.parse()?, kind.parse()?))
    }
}

impl Serialize for Scale {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scale {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

/// Ordered degree list of a scale.
pub fn scale_tones(s: &Scale) -> [Tone; 7] {
    s.tones()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriadQuality {
    Major,
    Minor,
}

impl TriadQuality {
    pub const fn token(self) -> &'static str {
        match self {
            TriadQuality::Major => "maj",
            TriadQuality::Minor => "min",
        }
    }
}

/// A major or minor triad, written `<root>maj` / `<root>min`.
///
/// Spelled on the line of fifths, a major triad is {root, root+4, root+1}
/// and a minor triad {root, root−3, root+1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triad {
    pub root: Tone,
    pub quality: TriadQuality,
}

impl Triad {
    pub const fn new(root: Tone, quality: TriadQuality) -> Self {
        Triad { root, quality }
    }

    pub fn major(root: Tone) -> Self {
        Triad::new(root, TriadQuality::Major)
    }

    pub fn minor(root: Tone) -> Self {
        Triad::new(root, TriadQuality::Minor)
    }

    /// Root, third, fifth as spelled tones.
    pub fn tones(&self) -> [Tone; 3] {
        let third = match self.quality {
            TriadQuality::Major => self.root.transposed(4),
            TriadQuality::Minor => self.root.transposed(-3),
        };
        [self.root, third, self.root.transposed(1)]
    }

    pub fn tone_set(&self) -> BTreeSet<Tone> {
        self.tones().into_iter().collect()
    }
}

impl fmt::Display for Triad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.root, self.quality.token())
    }
}

impl FromStr for Triad {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        if let Some(root) = text.strip_suffix("maj") {
            Ok(Triad::major(root.parse()?))
        } else if let Some(root) = text.strip_suffix("min") {
            Ok(Triad::minor(root.parse()?))
        } else {
            Err(ParseError::UnknownQuality {
                name: text.to_string(),
            })
        }
    }
}

impl Serialize for Triad {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Triad {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

/// Quality of a stacked-third chord built on a scale degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiatonicQuality {
    Major,
    Minor,
    Diminished,
}

/// A triad built on scale degree `degree` (1-based) from degrees
/// `degree`, `degree+2`, `degree+4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiatonicTriad {
    pub degree: u8,
    pub tones: [Tone; 3],
    pub quality: DiatonicQuality,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("diatonic triads are defined for major and natural-minor scales, not {0}")]
    UnsupportedScaleKind(ScaleKind),
}

/// The seven stacked-third triads of a major or natural-minor scale.
pub fn diatonic_triads(s: &Scale) -> Result<[DiatonicTriad; 7], TheoryError> {
    match s.kind {
        ScaleKind::Major | ScaleKind::Ionian | ScaleKind::NaturalMinor | ScaleKind::Aeolian => {}
        other => return Err(TheoryError::UnsupportedScaleKind(other)),
    }
    let tones = s.tones();
    Ok(std::array::from_fn(|i| {
        let triple = [tones[i], tones[(i + 2) % 7], tones[(i + 4) % 7]];
        let third = triple[1].fifth_index - triple[0].fifth_index;
        let fifth = triple[2].fifth_index - triple[0].fifth_index;
        let quality = match (third, fifth) {
            (4, 1) => DiatonicQuality::Major,
            (-3, 1) => DiatonicQuality::Minor,
            (-3, -6) => DiatonicQuality::Diminished,
            _ => unreachable!("diatonic stack is always major, minor, or diminished"),
        };
        DiatonicTriad {
            degree: i as u8 + 1,
            tones: triple,
            quality,
        }
    }))
}

/// The three involutive Neo-Riemannian operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlrOp {
    P,
    L,
    R,
}

impl fmt::Display for PlrOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlrOp::P => "P",
            PlrOp::L => "L",
            PlrOp::R => "R",
        })
    }
}

/// Parse a word over {P, L, R}, for example `"RPL"`.
pub fn parse_plr_word(text: &str) -> Result<Vec<PlrOp>, ParseError> {
    text.chars()
        .enumerate()
        .map(|(position, ch)| match ch {
            'P' | 'p' => Ok(PlrOp::P),
            'L' | 'l' => Ok(PlrOp::L),
            'R' | 'r' => Ok(PlrOp::R),
            found => Err(ParseError::Unexpected {
                found,
                position,
                expected: "one of P, L, R",
            }),
        })
        .collect()
}

/// Apply one P/L/R operation. Each keeps two of the three spelled tones:
/// P fixes root and fifth, R fixes root and third of the major triad,
/// L fixes third and fifth of the major triad.
pub fn plr_apply(t: Triad, op: PlrOp) -> Triad {
    match (op, t.quality) {
        (PlrOp::P, TriadQuality::Major) => Triad::minor(t.root),
        (PlrOp::P, TriadQuality::Minor) => Triad::major(t.root),
        (PlrOp::R, TriadQuality::Major) => Triad::minor(t.root.transposed(3)),
        (PlrOp::R, TriadQuality::Minor) => Triad::major(t.root.transposed(-3)),
        (PlrOp::L, TriadQuality::Major) => Triad::minor(t.root.transposed(4)),
        (PlrOp::L, TriadQuality::Minor) => Triad::major(t.root.transposed(-4)),
    }
}

/// Left-to-right trajectory of a P/L/R word, starting triad included.
pub fn plr_word(start: Triad, word: &[PlrOp]) -> Vec<Triad> {
    let mut trajectory = Vec::with_capacity(word.len() + 1);
    trajectory.push(start);
    let mut current = start;
    for &op in word {
        current = plr_apply(current, op);
        trajectory.push(current);
    }
    trajectory
}

/// All scales of the given kind whose tone set contains every required
/// tone (exact spelling), with roots drawn from `root_domain`, ordered by
/// root fifth index.
pub fn scales_containing(
    required: &BTreeSet<Tone>,
    kind: ScaleKind,
    root_domain: RangeInclusive<i32>,
) -> Vec<Scale> {
    root_domain
        .map(|fifth| Scale::new(Tone::new(fifth), kind))
        .filter(|scale| {
            let tones = scale.tone_set();
            required.iter().all(|tone| tones.contains(tone))
        })
        .collect()
}
