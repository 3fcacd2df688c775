//! The bijection between bi-banded and peak-counting paths.
//!
//! Forward direction: write the path as a word, split it into the
//! subsequences of odd- and even-indexed steps, toggle the odd part into a
//! north-west checkmark sequence (arrow per down-step), drop the last entry
//! of the even part to get the south-west sequence (arrow per up-step), and
//! reconstitute. The dropped entry is recoverable because the rebuilt word
//! must balance, so the map inverts exactly.
//!
//! A path of weight `a^(2n-2v) b^(2v)` maps to a path of weight `m^(v+1)`,
//! and Dyck paths map to Dyck paths in both directions.

use serde::Serialize;

use crate::checkmark::{from_checkmarks, to_checkmarks, CheckmarkPair, CheckmarkSeq, Mark};
use crate::path::{Path, Step, Word};
use crate::weight::{bibanded_monomial, peak_monomial, BiBandedMonomial, PeakMonomial};

/// A word split into its odd- and even-indexed steps (1-based positions).
///
/// Interleaving the two halves reproduces the original word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitWord {
    odd: Vec<Step>,
    even: Vec<Step>,
}

impl SplitWord {
    pub fn of(word: &Word) -> SplitWord {
        let odd = word.steps().iter().copied().step_by(2).collect();
        let even = word.steps().iter().copied().skip(1).step_by(2).collect();
        SplitWord { odd, even }
    }

    /// Steps at positions 1, 3, 5, ...
    pub fn odd(&self) -> &[Step] {
        &self.odd
    }

    /// Steps at positions 2, 4, 6, ...
    pub fn even(&self) -> &[Step] {
        &self.even
    }

    /// Re-interleave the halves. Panics if the result is not a valid word;
    /// callers only rebuild splits whose interleaving balances.
    pub fn interleave(&self) -> Word {
        assert_eq!(self.odd.len(), self.even.len());
        let mut steps = Vec::with_capacity(2 * self.odd.len());
        for (o, e) in self.odd.iter().zip(&self.even) {
            steps.push(*o);
            steps.push(*e);
        }
        Word::new(steps).expect("interleaved halves must form a balanced word")
    }
}

/// Map a path to its peak-counting partner.
pub fn phi(path: &Path) -> Path {
    let split = SplitWord::of(path.word());
    let n = path.half_len();

    let nw: Vec<Mark> = split
        .odd()
        .iter()
        .map(|s| match s {
            Step::Down => Mark::Arrow,
            Step::Up => Mark::Blank,
        })
        .collect();
    let sw: Vec<Mark> = split.even()[..n - 1]
        .iter()
        .map(|s| match s {
            Step::Up => Mark::Arrow,
            Step::Down => Mark::Blank,
        })
        .collect();

    let pair = CheckmarkPair::new(CheckmarkSeq::new(nw), CheckmarkSeq::new(sw))
        .expect("a balanced word always yields arrow counts differing by zero or one");
    from_checkmarks(&pair)
}

/// Map a path back to its bi-banded partner.
pub fn phi_inverse(path: &Path) -> Path {
    let pair = to_checkmarks(path);
    let n = path.half_len();

    let odd: Vec<Step> = pair
        .nw()
        .marks()
        .iter()
        .map(|m| match m {
            Mark::Arrow => Step::Down,
            Mark::Blank => Step::Up,
        })
        .collect();
    let mut even: Vec<Step> = pair
        .sw()
        .marks()
        .iter()
        .map(|m| match m {
            Mark::Arrow => Step::Up,
            Mark::Blank => Step::Down,
        })
        .collect();

    // The dropped entry is whichever step balances the word.
    let ups = odd.iter().chain(&even).filter(|s| **s == Step::Up).count();
    let missing = n - ups;
    assert!(missing <= 1, "split halves can be short at most one up-step");
    even.push(if missing == 1 { Step::Up } else { Step::Down });

    Path::new(SplitWord { odd, even }.interleave())
}

/// Outcome of checking the weight correspondence on one path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeightCorrespondence {
    /// Half the even-band exponent of the input.
    pub v: usize,
    /// Whether the image has peak exponent `v + 1`.
    pub holds: bool,
}

/// Check that the image of `path` carries peak weight `m^(v+1)` where the
/// path itself carries bi-banded weight `a^(2n-2v) b^(2v)`.
pub fn check_weight_correspondence(path: &Path) -> WeightCorrespondence {
    let v = bibanded_monomial(path).exp_b() / 2;
    let holds = peak_monomial(&phi(path)).exp_m() == v + 1;
    WeightCorrespondence { v, holds }
}

/// A record of one application of the bijection, ready for JSON output.
///
/// `bibanded` always describes the path on the bi-banded side of the map
/// and `peaks` the path on the peak-counting side, whichever direction was
/// applied.
#[derive(Debug, Clone, Serialize)]
pub struct PathMapping {
    input: String,
    image: String,
    bibanded: BiBandedMonomial,
    peaks: PeakMonomial,
    dyck_in: bool,
    dyck_out: bool,
}

impl PathMapping {
    pub fn forward(path: &Path) -> PathMapping {
        let image = phi(path);
        PathMapping {
            input: path.to_string(),
            image: image.to_string(),
            bibanded: bibanded_monomial(path),
            peaks: peak_monomial(&image),
            dyck_in: path.is_dyck(),
            dyck_out: image.is_dyck(),
        }
    }

    pub fn inverse(path: &Path) -> PathMapping {
        let image = phi_inverse(path);
        PathMapping {
            input: path.to_string(),
            image: image.to_string(),
            bibanded: bibanded_monomial(&image),
            peaks: peak_monomial(path),
            dyck_in: path.is_dyck(),
            dyck_out: image.is_dyck(),
        }
    }

    pub fn input(&self) -> &str {
        &self.input
    }

    pub fn image(&self) -> &str {
        &self.image
    }

    pub fn bibanded(&self) -> BiBandedMonomial {
        self.bibanded
    }

    pub fn peaks(&self) -> PeakMonomial {
        self.peaks
    }

    pub fn dyck_in(&self) -> bool {
        self.dyck_in
    }

    pub fn dyck_out(&self) -> bool {
        self.dyck_out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(text: &str) -> Path {
        Path::parse(text).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&path("UUDDDU")).to_string(), "UDUDDU");
        assert_eq!(phi(&path("UDUDUD")).to_string(), "UUUDDD");
        assert_eq!(phi(&path("UUUDDD")).to_string(), "UUDUDD");
    }

    #[test]
    fn phi_inverse_examples() {
        assert_eq!(phi_inverse(&path("UDUDDU")).to_string(), "UUDDDU");
        assert_eq!(phi_inverse(&path("UUUDDD")).to_string(), "UDUDUD");
        assert_eq!(phi_inverse(&path("UUDUDD")).to_string(), "UUUDDD");
    }

    #[test]
    fn split_word_round_trip() {
        let word = Word::parse("UUDDDU").unwrap();
        let split = SplitWord::of(&word);
        assert_eq!(split.odd(), &[Step::Up, Step::Down, Step::Down]);
        assert_eq!(split.even(), &[Step::Up, Step::Down, Step::Up]);
        assert_eq!(split.interleave(), word);
    }

    #[test]
    fn weight_correspondence_examples() {
        let r = check_weight_correspondence(&path("UUDDDU"));
        assert_eq!((r.v, r.holds), (2, true));
        let r = check_weight_correspondence(&path("UDUDUD"));
        assert_eq!((r.v, r.holds), (0, true));
    }

    #[test]
    fn smallest_map() {
        let m = PathMapping::forward(&path("UD"));
        assert_eq!(m.image(), "UD");
        assert_eq!(m.bibanded().exp_a(), 2);
        assert_eq!(m.peaks().exp_m(), 1);
    }

    #[test]
    fn mapping_record_json_shape() {
        let m = PathMapping::forward(&path("UUDDDU"));
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"input":"UUDDDU","image":"UDUDDU","bibanded":{"exp_a":2,"exp_b":4},"peaks":{"exp_m":3},"dyck_in":false,"dyck_out":false}"#
        );
    }

    #[test]
    fn inverse_record_reports_sides_correctly() {
        // UDUDDU is the peak side; its preimage UUDDDU carries a^2 b^4.
        let m = PathMapping::inverse(&path("UDUDDU"));
        assert_eq!(m.image(), "UUDDDU");
        assert_eq!((m.bibanded().exp_a(), m.bibanded().exp_b()), (2, 4));
        assert_eq!(m.peaks().exp_m(), 3);
    }
}
