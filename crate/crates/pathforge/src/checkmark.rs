//! The checkmark representation of paths.
//!
//! Every path of length `2n` fits in the square with corners `(0, 0)`,
//! `(n, n)`, `(2n, 0)` and `(n, -n)`. Label the first `n` lattice points of
//! the north-west side `1..n` starting at the origin, and the `n - 1` points
//! of the south-west side `1..n-1` starting at `(1, -1)` (labelled by their
//! x-coordinate). The north-west label `k` sits on the anti-diagonal
//! `i + h = 2(k - 1)`; the south-west label `k` on the diagonal `i - h = 2k`.
//!
//! A path turns right (peak) at most once per anti-diagonal and left
//! (valley) at most once per diagonal, so marking the labels where it turns
//! records the path completely. The one peak on the north-east side
//! (`i + h = 2n`) and a possible final valley on the south-east side
//! (`i - h = 2n`) fall outside the labelled range and generate no mark,
//! which is why an arrow count difference of zero or one between the two
//! sequences characterises the pairs that arise from paths.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::path::{Path, Step, Word};

/// One checkmark position: marked (`Arrow`) or unmarked (`Blank`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mark {
    Arrow,
    Blank,
}

/// A fixed-length sequence of marks, labelled `1..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckmarkSeq(Vec<Mark>);

impl CheckmarkSeq {
    pub fn new(marks: Vec<Mark>) -> CheckmarkSeq {
        CheckmarkSeq(marks)
    }

    /// Build a sequence of the given length with arrows at the 1-based labels.
    pub fn from_arrow_labels(len: usize, labels: &[usize]) -> Result<CheckmarkSeq> {
        let mut marks = vec![Mark::Blank; len];
        for &label in labels {
            if label == 0 || label > len {
                return Err(Error::MalformedPair {
                    reason: format!("label {label} out of range 1..={len}"),
                });
            }
            if marks[label - 1] == Mark::Arrow {
                return Err(Error::MalformedPair {
                    reason: format!("duplicate label {label}"),
                });
            }
            marks[label - 1] = Mark::Arrow;
        }
        Ok(CheckmarkSeq(marks))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn marks(&self) -> &[Mark] {
        &self.0
    }

    /// Mark at the 1-based `label`.
    pub fn mark(&self, label: usize) -> Mark {
        self.0[label - 1]
    }

    pub fn arrow_count(&self) -> usize {
        self.0.iter().filter(|m| **m == Mark::Arrow).count()
    }

    /// 1-based labels of the arrows, in increasing order.
    pub fn arrow_labels(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, m)| **m == Mark::Arrow)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// A north-west sequence of length `n` and a south-west sequence of length
/// `n - 1` whose arrow counts differ by zero or one.
///
/// Construction enforces that condition, so every value of this type
/// reconstitutes to a unique path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckmarkPair {
    nw: CheckmarkSeq,
    sw: CheckmarkSeq,
}

impl CheckmarkPair {
    pub fn new(nw: CheckmarkSeq, sw: CheckmarkSeq) -> Result<CheckmarkPair> {
        if nw.is_empty() {
            return Err(Error::MalformedPair {
                reason: "north-west sequence must have length n >= 1".to_string(),
            });
        }
        if sw.len() + 1 != nw.len() {
            return Err(Error::MalformedPair {
                reason: format!(
                    "south-west length {} does not match north-west length {} minus one",
                    sw.len(),
                    nw.len()
                ),
            });
        }
        let (a, b) = (nw.arrow_count(), sw.arrow_count());
        if a != b && a != b + 1 {
            return Err(Error::MalformedPair {
                reason: format!(
                    "north-west arrows ({a}) must equal or exceed by one the south-west arrows ({b})"
                ),
            });
        }
        Ok(CheckmarkPair { nw, sw })
    }

    /// Build a pair from 1-based arrow labels.
    pub fn from_arrow_labels(n: usize, nw: &[usize], sw: &[usize]) -> Result<CheckmarkPair> {
        if n == 0 {
            return Err(Error::MalformedPair {
                reason: "n must be at least 1".to_string(),
            });
        }
        CheckmarkPair::new(
            CheckmarkSeq::from_arrow_labels(n, nw)?,
            CheckmarkSeq::from_arrow_labels(n - 1, sw)?,
        )
    }

    /// Parse the text form `NW=.^^;SW=^.` (`^` arrow, `.` blank).
    pub fn parse(text: &str) -> Result<CheckmarkPair> {
        let (nw_part, sw_part) = text.split_once(';').ok_or_else(|| Error::MalformedPair {
            reason: "expected two sections separated by ';'".to_string(),
        })?;
        let nw_text = nw_part.strip_prefix("NW=").ok_or_else(|| Error::MalformedPair {
            reason: "first section must start with 'NW='".to_string(),
        })?;
        let sw_text = sw_part.strip_prefix("SW=").ok_or_else(|| Error::MalformedPair {
            reason: "second section must start with 'SW='".to_string(),
        })?;
        let parse_marks = |section: &str, name: &str| -> Result<Vec<Mark>> {
            section
                .chars()
                .map(|c| match c {
                    '^' => Ok(Mark::Arrow),
                    '.' => Ok(Mark::Blank),
                    _ => Err(Error::MalformedPair {
                        reason: format!("illegal mark {c:?} in the {name} section"),
                    }),
                })
                .collect()
        };
        CheckmarkPair::new(
            CheckmarkSeq::new(parse_marks(nw_text, "NW")?),
            CheckmarkSeq::new(parse_marks(sw_text, "SW")?),
        )
    }

    pub fn n(&self) -> usize {
        self.nw.len()
    }

    pub fn nw(&self) -> &CheckmarkSeq {
        &self.nw
    }

    pub fn sw(&self) -> &CheckmarkSeq {
        &self.sw
    }

    /// Whether the pair reconstitutes to a Dyck path.
    ///
    /// That happens exactly when the arrow counts are equal and the h-th
    /// north-west arrow label strictly exceeds the h-th south-west arrow
    /// label for every h: each descent triggered on the north-west side is
    /// then undone before the path can cross the axis. A Dyck path never
    /// ends its final valley on the south-east wall, so the equal-count
    /// requirement loses nothing.
    pub fn is_dyck_pair(&self) -> bool {
        let nw_labels = self.nw.arrow_labels();
        let sw_labels = self.sw.arrow_labels();
        nw_labels.len() == sw_labels.len()
            && nw_labels.iter().zip(&sw_labels).all(|(k, l)| k > l)
    }
}

impl fmt::Display for CheckmarkPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |marks: &[Mark]| -> String {
            marks
                .iter()
                .map(|m| if *m == Mark::Arrow { '^' } else { '.' })
                .collect()
        };
        write!(f, "NW={};SW={}", render(self.nw.marks()), render(self.sw.marks()))
    }
}

impl Serialize for CheckmarkPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CheckmarkPair", 3)?;
        s.serialize_field("n", &self.n())?;
        s.serialize_field("nw", &self.nw.arrow_labels())?;
        s.serialize_field("sw", &self.sw.arrow_labels())?;
        s.end()
    }
}

/// Extract the checkmark pair of a path.
///
/// North-west label `k` is marked iff the path has a peak on the
/// anti-diagonal `i + h = 2(k - 1)`; south-west label `k` iff it has a
/// valley on the diagonal `i - h = 2k`. The final peak always lies on the
/// north-east side and a valley may lie on the south-east side; neither
/// generates a mark.
pub fn to_checkmarks(path: &Path) -> CheckmarkPair {
    let n = path.half_len();
    let heights = path.heights();
    let turns = path.turns();

    let mut nw = vec![Mark::Blank; n];
    for &i in &turns.peaks {
        let anti = i as i64 + heights[i];
        debug_assert!(anti % 2 == 0 && (0..=2 * n as i64).contains(&anti));
        let label = (anti / 2 + 1) as usize;
        if label <= n {
            debug_assert_eq!(nw[label - 1], Mark::Blank);
            nw[label - 1] = Mark::Arrow;
        }
    }

    let mut sw = vec![Mark::Blank; n - 1];
    for &i in &turns.valleys {
        let diag = i as i64 - heights[i];
        debug_assert!(diag % 2 == 0 && (2..=2 * n as i64).contains(&diag));
        let label = (diag / 2) as usize;
        if label < n {
            debug_assert_eq!(sw[label - 1], Mark::Blank);
            sw[label - 1] = Mark::Arrow;
        }
    }

    CheckmarkPair::new(CheckmarkSeq::new(nw), CheckmarkSeq::new(sw))
        .expect("a path always yields arrow counts differing by zero or one")
}

/// Reconstitute the unique path of a checkmark pair.
///
/// The walk starts at the origin heading up. At each vertex it checks the
/// current heading once: heading up it turns down on the north-east wall
/// (`i + h = 2n`) or on a marked north-west label, heading down it turns up
/// on the south-east wall (`i - h = 2n`) or on a marked south-west label.
/// Turning consumes no step; after the check one step is taken in the
/// current heading. North-west labels are swept in increasing order by
/// ascents and south-west labels by descents, so every arrow is used.
pub fn from_checkmarks(pair: &CheckmarkPair) -> Path {
    let n = pair.n();
    let end = 2 * n as i64;
    let mut steps = Vec::with_capacity(2 * n);
    let (mut i, mut h) = (0i64, 0i64);
    let mut heading_up = true;
    let (mut nw_used, mut sw_used) = (0usize, 0usize);

    while i < end {
        if heading_up {
            let anti = i + h;
            if anti == end {
                heading_up = false;
            } else {
                let label = (anti / 2 + 1) as usize;
                if label <= n && pair.nw.mark(label) == Mark::Arrow {
                    heading_up = false;
                    nw_used += 1;
                }
            }
        } else {
            let diag = i - h;
            if diag == end {
                heading_up = true;
            } else {
                let label = (diag / 2) as usize;
                if (1..n).contains(&label) && pair.sw.mark(label) == Mark::Arrow {
                    heading_up = true;
                    sw_used += 1;
                }
            }
        }
        if heading_up {
            steps.push(Step::Up);
            h += 1;
        } else {
            steps.push(Step::Down);
            h -= 1;
        }
        i += 1;
    }

    // Internal consistency: the walk must close on the axis with every
    // arrow consumed, otherwise the construction above is buggy.
    assert_eq!(h, 0, "reconstitution walk ended at height {h}, not 0");
    assert_eq!(
        nw_used,
        pair.nw.arrow_count(),
        "reconstitution walk left north-west arrows unused"
    );
    assert_eq!(
        sw_used,
        pair.sw.arrow_count(),
        "reconstitution walk left south-west arrows unused"
    );
    Path::new(Word::new_unchecked(steps))
}
