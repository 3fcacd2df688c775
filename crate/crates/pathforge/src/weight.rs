//! The two weighting schemes: bi-banded edge weights and peak counting.
//!
//! The lattice is striped into horizontal bands. An up-step from an even
//! height, or a down-step from an odd height, lies in an *odd band* and
//! carries weight `a`; every other edge lies in an *even band* and carries
//! weight `b`. Equivalently, the strip between heights `l` and `l + 1` is an
//! odd band exactly when `l` is even, so the bands alternate symmetrically
//! about the axis (the strip just below the axis is an even band).
//!
//! Peak counting instead weights every peak vertex by `m`, boundary peaks
//! included.

use std::fmt;

use serde::Serialize;

use crate::path::{Path, Step};

/// Band classification of a single edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Band {
    Odd,
    Even,
}

/// Classify the edge leaving `start_height` by `step`.
///
/// Signed parity is used, so the classification is well defined below the
/// axis: `-1` is odd, `-2` is even.
pub fn band_of(step: Step, start_height: i64) -> Band {
    let start_odd = start_height.rem_euclid(2) == 1;
    match step {
        Step::Up if !start_odd => Band::Odd,
        Step::Down if start_odd => Band::Odd,
        _ => Band::Even,
    }
}

/// Exponent record of a bi-banded path weight `a^exp_a · b^exp_b`.
///
/// Both exponents are even and they sum to the path length `2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BiBandedMonomial {
    exp_a: usize,
    exp_b: usize,
}

impl BiBandedMonomial {
    pub fn exp_a(&self) -> usize {
        self.exp_a
    }

    pub fn exp_b(&self) -> usize {
        self.exp_b
    }

    /// Half-length of the weighted path.
    pub fn n(&self) -> usize {
        (self.exp_a + self.exp_b) / 2
    }
}

impl fmt::Display for BiBandedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp_a > 0 {
            write!(f, "a^{}", self.exp_a)?;
        }
        if self.exp_b > 0 {
            write!(f, "b^{}", self.exp_b)?;
        }
        Ok(())
    }
}

/// Count odd- and even-band edges of a path.
pub fn bibanded_monomial(path: &Path) -> BiBandedMonomial {
    let heights = path.heights();
    let mut exp_a = 0;
    for (j, step) in path.word().steps().iter().enumerate() {
        if band_of(*step, heights[j]) == Band::Odd {
            exp_a += 1;
        }
    }
    let exp_b = path.len() - exp_a;
    debug_assert!(exp_a % 2 == 0 && exp_b % 2 == 0);
    BiBandedMonomial { exp_a, exp_b }
}

/// Exponent record of a peak-counting path weight `m^exp_m`.
///
/// Every path has exactly one peak on the north-east side of its bounding
/// box, so `1 <= exp_m <= n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PeakMonomial {
    exp_m: usize,
}

impl PeakMonomial {
    pub fn exp_m(&self) -> usize {
        self.exp_m
    }
}

impl fmt::Display for PeakMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m^{}", self.exp_m)
    }
}

/// Count the peaks of a path, boundary conventions included.
pub fn peak_monomial(path: &Path) -> PeakMonomial {
    let exp_m = path.turns().peaks.len();
    debug_assert!(exp_m >= 1 && exp_m <= path.half_len() + 1);
    PeakMonomial { exp_m }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(text: &str) -> Path {
        Path::parse(text).unwrap()
    }

    #[test]
    fn band_of_examples() {
        assert_eq!(band_of(Step::Up, 0), Band::Odd);
        assert_eq!(band_of(Step::Down, 1), Band::Odd);
        assert_eq!(band_of(Step::Up, -1), Band::Even);
        assert_eq!(band_of(Step::Down, 0), Band::Even);
        assert_eq!(band_of(Step::Down, -1), Band::Odd);
        assert_eq!(band_of(Step::Up, -2), Band::Odd);
    }

    #[test]
    fn bibanded_examples() {
        let m = bibanded_monomial(&path("UUDDDU"));
        assert_eq!((m.exp_a(), m.exp_b()), (2, 4));
        let m = bibanded_monomial(&path("UD"));
        assert_eq!((m.exp_a(), m.exp_b()), (2, 0));
        let m = bibanded_monomial(&path("UUUDDD"));
        assert_eq!((m.exp_a(), m.exp_b()), (4, 2));
    }

    #[test]
    fn peak_examples() {
        assert_eq!(peak_monomial(&path("UDUDUD")).exp_m(), 3);
        assert_eq!(peak_monomial(&path("UUUDDD")).exp_m(), 1);
        assert_eq!(peak_monomial(&path("DUDUDU")).exp_m(), 4);
    }

    #[test]
    fn monomial_display() {
        assert_eq!(bibanded_monomial(&path("UUDDDU")).to_string(), "a^2b^4");
        assert_eq!(bibanded_monomial(&path("UD")).to_string(), "a^2");
        assert_eq!(bibanded_monomial(&path("DU")).to_string(), "b^2");
        assert_eq!(peak_monomial(&path("UDUDUD")).to_string(), "m^3");
    }

    #[test]
    fn monomial_json_shape() {
        assert_eq!(
            serde_json::to_string(&bibanded_monomial(&path("UUDDDU"))).unwrap(),
            r#"{"exp_a":2,"exp_b":4}"#
        );
        assert_eq!(
            serde_json::to_string(&peak_monomial(&path("UDUDUD"))).unwrap(),
            r#"{"exp_m":3}"#
        );
    }

    #[test]
    fn exponents_sum_to_length() {
        for text in ["UUDDDU", "DUDUDU", "UDUDUD", "DDUU"] {
            let p = path(text);
            let m = bibanded_monomial(&p);
            assert_eq!(m.exp_a() + m.exp_b(), p.len());
            assert_eq!(m.n(), p.half_len());
        }
    }
}
