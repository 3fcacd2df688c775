//! Steps, words, paths and their height profiles.
//!
//! A path of length `2n` starts at the origin, takes unit up-steps and
//! down-steps, and ends back on the x-axis at `(2n, 0)`. Dyck paths never
//! dip below the axis; bilateral paths may. Peaks and valleys are read off
//! with a boundary convention: every path is imagined to be entered by an
//! up-step from `(-1, -1)` and left by a down-step towards `(2n + 1, -1)`,
//! so an initial down-step makes vertex 0 a peak and a final up-step makes
//! vertex `2n` one.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// One lattice step: `Up` moves by `(1, 1)`, `Down` by `(1, -1)`.
///
/// `Up` orders before `Down`, which makes the derived ordering on words the
/// lexicographic order used everywhere for enumeration and display.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    /// The reflected step (`Up` ↔ `Down`).
    pub fn flipped(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    /// Signed height change of the step.
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// A balanced, nonempty sequence of steps.
///
/// Invariants enforced at construction: the length is even and positive,
/// and up-steps and down-steps occur equally often. Step positions are
/// 1-based in documentation, error messages and JSON, matching the usual
/// convention for edges `e_1 .. e_2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Step>);

impl Word {
    pub fn new(steps: Vec<Step>) -> Result<Word> {
        if steps.is_empty() {
            return Err(Error::EmptyWord);
        }
        if steps.len() % 2 != 0 {
            return Err(Error::OddLength { len: steps.len() });
        }
        let ups = steps.iter().filter(|s| **s == Step::Up).count();
        let downs = steps.len() - ups;
        if ups != downs {
            return Err(Error::UnbalancedWord { ups, downs });
        }
        Ok(Word(steps))
    }

    /// Construction bypass for internal callers that already guarantee the
    /// invariants (the enumerator and the reconstitution walk).
    pub(crate) fn new_unchecked(steps: Vec<Step>) -> Word {
        debug_assert!(Word::new(steps.clone()).is_ok());
        Word(steps)
    }

    /// Parse a word over the alphabet `{U, D}` (alternate alphabet `{1, 0}`
    /// accepted, `1` = up).
    pub fn parse(text: &str) -> Result<Word> {
        if text.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut steps = Vec::with_capacity(text.len());
        for (idx, c) in text.chars().enumerate() {
            let step = match c {
                'U' | '1' => Step::Up,
                'D' | '0' => Step::Down,
                _ => {
                    return Err(Error::IllegalCharacter {
                        position: idx + 1,
                        found: c,
                    })
                }
            };
            steps.push(step);
        }
        Word::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Total number of steps, `2n`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Half-length `n` (the number of up-steps).
    pub fn half_len(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

/// The two path classes: Dyck paths stay on or above the axis, bilateral
/// paths are unrestricted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Lattice {
    Dyck,
    Bilateral,
}

impl Lattice {
    /// Whether this lattice admits the given path.
    pub fn admits(&self, path: &Path) -> bool {
        match self {
            Lattice::Dyck => path.is_dyck(),
            Lattice::Bilateral => true,
        }
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lattice::Dyck => f.write_str("dyck"),
            Lattice::Bilateral => f.write_str("bilateral"),
        }
    }
}

impl FromStr for Lattice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Lattice> {
        match s {
            "dyck" => Ok(Lattice::Dyck),
            "bilateral" => Ok(Lattice::Bilateral),
            _ => Err(Error::IllegalCharacter {
                position: 1,
                found: s.chars().next().unwrap_or('?'),
            }),
        }
    }
}

/// A word together with its derived height profile `h_0 .. h_2n`.
///
/// `h_0 = h_2n = 0`, consecutive heights differ by exactly one and
/// `h_i ≡ i (mod 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    word: Word,
    heights: Vec<i64>,
}

impl Path {
    pub fn new(word: Word) -> Path {
        let mut heights = Vec::with_capacity(word.len() + 1);
        let mut h = 0i64;
        heights.push(h);
        for step in word.steps() {
            h += step.delta();
            heights.push(h);
        }
        debug_assert_eq!(h, 0);
        Path { word, heights }
    }

    pub fn parse(text: &str) -> Result<Path> {
        Word::parse(text).map(Path::new)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Vertex heights `h_0 .. h_2n` (length `2n + 1`).
    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn half_len(&self) -> usize {
        self.word.half_len()
    }

    pub fn min_height(&self) -> i64 {
        *self.heights.iter().min().expect("height profile is nonempty")
    }

    pub fn max_height(&self) -> i64 {
        *self.heights.iter().max().expect("height profile is nonempty")
    }

    /// `true` iff the path never dips below the axis.
    pub fn is_dyck(&self) -> bool {
        self.min_height() >= 0
    }

    /// The path reflected through the axis (every step flipped).
    pub fn reflected(&self) -> Path {
        let steps = self.word.steps().iter().map(|s| s.flipped()).collect();
        Path::new(Word::new_unchecked(steps))
    }

    /// Incoming step of vertex `i`; the virtual up-step for vertex 0.
    fn step_into(&self, i: usize) -> Step {
        if i == 0 {
            Step::Up
        } else {
            self.word.steps()[i - 1]
        }
    }

    /// Outgoing step of vertex `i`; the virtual down-step for vertex `2n`.
    fn step_out_of(&self, i: usize) -> Step {
        if i == self.len() {
            Step::Down
        } else {
            self.word.steps()[i]
        }
    }

    /// Extract peaks and valleys, boundary conventions included.
    pub fn turns(&self) -> TurnList {
        let mut peaks = Vec::new();
        let mut valleys = Vec::new();
        for i in 0..=self.len() {
            match (self.step_into(i), self.step_out_of(i)) {
                (Step::Up, Step::Down) => peaks.push(i),
                (Step::Down, Step::Up) => valleys.push(i),
                _ => {}
            }
        }
        debug_assert_eq!(peaks.len(), valleys.len() + 1);
        TurnList { peaks, valleys }
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Path> {
        Path::parse(s)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

impl Serialize for Path {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Path", 3)?;
        s.serialize_field("word", &self.word.to_string())?;
        s.serialize_field("heights", &self.heights)?;
        s.serialize_field("dyck", &self.is_dyck())?;
        s.end()
    }
}

/// Vertex indices of the turns of a path.
///
/// Peaks and valleys strictly interleave, starting and ending with a peak,
/// so there is always exactly one more peak than valley. Successive peaks
/// have strictly increasing anti-diagonal `i + h_i`; successive valleys
/// strictly increasing diagonal `i - h_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TurnList {
    pub peaks: Vec<usize>,
    pub valleys: Vec<usize>,
}
