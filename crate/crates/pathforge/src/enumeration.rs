//! Exhaustive path generation and exact weight polynomials.
//!
//! Paths are generated in lexicographic word order with `U < D`; the Dyck
//! generator prunes below-axis prefixes instead of filtering complete
//! words. Weight polynomials are accumulated as exact integer coefficient
//! maps keyed by `v`, where `v` encodes the monomial `a^(2n-2v) b^(2v)`
//! (bi-banded) or `m^(v+1)` (peak counting). The closed forms are the
//! Narayana numbers on the Dyck lattice and squared binomials on the
//! bilateral lattice.
//!
//! All coefficient arithmetic is checked `u128`; overflow is reported,
//! never wrapped.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::path::{Lattice, Path, Step, Word};
use crate::weight::{bibanded_monomial, peak_monomial};

/// Default cap on the half-length of exhaustive sweeps. `n = 14` means
/// binomial(28, 14) ≈ 4.0e7 bilateral paths, a desk-scale run.
pub const DEFAULT_MAX_N: usize = 14;

/// The two weighting schemes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scheme {
    #[serde(rename = "bibanded")]
    BiBanded,
    #[serde(rename = "peaks")]
    PeakCounting,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scheme::BiBanded => f.write_str("bibanded"),
            Scheme::PeakCounting => f.write_str("peaks"),
        }
    }
}

impl std::str::FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scheme> {
        match s {
            "bibanded" => Ok(Scheme::BiBanded),
            "peaks" => Ok(Scheme::PeakCounting),
            _ => Err(Error::IllegalCharacter {
                position: 1,
                found: s.chars().next().unwrap_or('?'),
            }),
        }
    }
}

/// Whether a partial word at height `h` with `remaining` steps left can
/// still close on the axis inside the lattice.
fn extendable(lattice: Lattice, h: i64, remaining: usize) -> bool {
    let r = remaining as i64;
    match lattice {
        Lattice::Bilateral => h.abs() <= r,
        Lattice::Dyck => (0..=r).contains(&h),
    }
}

/// Advance `word` to its lexicographic successor within the lattice.
/// Returns `false` when `word` was the last one.
fn advance(word: &mut [Step], lattice: Lattice) -> bool {
    let len = word.len();
    // Backward scan for the rightmost up-step that can flip to a down-step
    // and still leave a completable prefix.
    let mut h = 0i64; // height after position j + 1, walked backwards from 0
    for j in (0..len).rev() {
        let before = h - word[j].delta();
        if word[j] == Step::Up {
            let flipped = before - 1;
            if extendable(lattice, flipped, len - j - 1) {
                word[j] = Step::Down;
                // Fill the suffix with the least completion: up wherever an
                // up-step keeps the prefix completable, down otherwise.
                let mut h = flipped;
                for p in j + 1..len {
                    if extendable(lattice, h + 1, len - p - 1) {
                        word[p] = Step::Up;
                        h += 1;
                    } else {
                        word[p] = Step::Down;
                        h -= 1;
                    }
                }
                debug_assert_eq!(h, 0);
                return true;
            }
        }
        h = before;
    }
    false
}

/// Iterator over every path of half-length `n` on a lattice, in
/// lexicographic word order with `U < D`.
#[derive(Debug, Clone)]
pub struct Paths {
    lattice: Lattice,
    word: Option<Vec<Step>>,
}

impl Iterator for Paths {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        let word = self.word.as_mut()?;
        let path = Path::new(Word::new_unchecked(word.clone()));
        if !advance(word, self.lattice) {
            self.word = None;
        }
        Some(path)
    }
}

/// Enumerate all paths of half-length `n` under the default sweep limit.
pub fn enumerate_paths(n: usize, lattice: Lattice) -> Result<Paths> {
    enumerate_paths_with_limit(n, lattice, DEFAULT_MAX_N)
}

/// Enumerate with an explicit sweep limit.
pub fn enumerate_paths_with_limit(n: usize, lattice: Lattice, max_n: usize) -> Result<Paths> {
    if n == 0 {
        return Err(Error::InvalidN { n });
    }
    if n > max_n {
        return Err(Error::LimitExceeded { n, max_n });
    }
    // U^n D^n is the lexicographic minimum on both lattices.
    let mut word = vec![Step::Up; n];
    word.extend(std::iter::repeat(Step::Down).take(n));
    Ok(Paths { lattice, word: Some(word) })
}

fn overflow(what: impl fmt::Display) -> Error {
    Error::Overflow { what: what.to_string() }
}

/// Binomial coefficient `C(n, k)` in exact checked arithmetic.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc
            .checked_mul(n as u128 - k as u128 + i)
            .ok_or_else(|| overflow(format_args!("binomial({n}, {k})")))?;
        acc /= i; // exact: C(n-k+i, i) is an integer
    }
    Ok(acc)
}

/// Catalan number `C(2n, n) / (n + 1)`, the size of the Dyck path class.
pub fn catalan(n: u64) -> Result<u128> {
    let c = binomial(2 * n, n)?;
    debug_assert_eq!(c % (n as u128 + 1), 0);
    Ok(c / (n as u128 + 1))
}

/// Narayana number `C(n, v) C(n-1, v) / (v + 1)`: the number of Dyck paths
/// of length `2n` with `v + 1` peaks.
pub fn narayana(n: u64, v: u64) -> Result<u128> {
    if n == 0 {
        return Err(Error::InvalidN { n: 0 });
    }
    let product = binomial(n, v)?
        .checked_mul(binomial(n - 1, v)?)
        .ok_or_else(|| overflow(format_args!("narayana({n}, {v})")))?;
    debug_assert_eq!(product % (v as u128 + 1), 0);
    Ok(product / (v as u128 + 1))
}

/// `C(n, v)^2`: the number of bilateral paths of length `2n` with `v + 1`
/// peaks.
pub fn bilateral_coeff(n: u64, v: u64) -> Result<u128> {
    if n == 0 {
        return Err(Error::InvalidN { n: 0 });
    }
    let c = binomial(n, v)?;
    c.checked_mul(c)
        .ok_or_else(|| overflow(format_args!("bilateral_coeff({n}, {v})")))
}

/// A weight polynomial as an exact coefficient map.
///
/// Key `v` stands for the monomial `a^(2n-2v) b^(2v)` under the bi-banded
/// scheme and `m^(v+1)` under peak counting. Only nonzero coefficients are
/// stored; their sum is the number of paths of the class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightPolynomial {
    n: usize,
    lattice: Lattice,
    scheme: Scheme,
    coeffs: BTreeMap<usize, u128>,
}

impl WeightPolynomial {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    /// Coefficient of the key `v` (zero when absent).
    pub fn coefficient(&self, v: usize) -> u128 {
        self.coeffs.get(&v).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &BTreeMap<usize, u128> {
        &self.coeffs
    }

    /// Sum of all coefficients: the number of weighted paths.
    pub fn path_count(&self) -> Result<u128> {
        let mut total: u128 = 0;
        for c in self.coeffs.values() {
            total = total
                .checked_add(*c)
                .ok_or_else(|| overflow("polynomial path count"))?;
        }
        Ok(total)
    }

    /// Render in the conventional text form, e.g. `a^6 + 3a^4b^2 + a^2b^4`
    /// (descending powers of `a`) or `m^3 + 3m^2 + m` (descending powers of
    /// `m`).
    pub fn render_text(&self) -> String {
        let term = |v: usize, coeff: u128| -> String {
            let monomial = match self.scheme {
                Scheme::BiBanded => {
                    let exp_a = 2 * self.n - 2 * v;
                    let exp_b = 2 * v;
                    let mut s = String::new();
                    if exp_a > 0 {
                        s.push_str(&format!("a^{exp_a}"));
                    }
                    if exp_b > 0 {
                        s.push_str(&format!("b^{exp_b}"));
                    }
                    s
                }
                Scheme::PeakCounting => {
                    if v == 0 {
                        "m".to_string()
                    } else {
                        format!("m^{}", v + 1)
                    }
                }
            };
            if coeff == 1 {
                monomial
            } else {
                format!("{coeff}{monomial}")
            }
        };
        let terms: Vec<String> = match self.scheme {
            // ascending v = descending a-powers
            Scheme::BiBanded => self.coeffs.iter().map(|(v, c)| term(*v, *c)).collect(),
            // descending v = descending m-powers
            Scheme::PeakCounting => self.coeffs.iter().rev().map(|(v, c)| term(*v, *c)).collect(),
        };
        terms.join(" + ")
    }
}

impl fmt::Display for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// Compute the weight polynomial by full enumeration, default limit.
pub fn weight_polynomial(n: usize, lattice: Lattice, scheme: Scheme) -> Result<WeightPolynomial> {
    weight_polynomial_with_limit(n, lattice, scheme, DEFAULT_MAX_N)
}

/// Compute the weight polynomial by full enumeration, explicit limit.
pub fn weight_polynomial_with_limit(
    n: usize,
    lattice: Lattice,
    scheme: Scheme,
    max_n: usize,
) -> Result<WeightPolynomial> {
    let mut coeffs: BTreeMap<usize, u128> = BTreeMap::new();
    for path in enumerate_paths_with_limit(n, lattice, max_n)? {
        let v = match scheme {
            Scheme::BiBanded => bibanded_monomial(&path).exp_b() / 2,
            Scheme::PeakCounting => peak_monomial(&path).exp_m() - 1,
        };
        let slot = coeffs.entry(v).or_insert(0);
        *slot = slot
            .checked_add(1)
            .ok_or_else(|| overflow("polynomial coefficient"))?;
    }
    Ok(WeightPolynomial { n, lattice, scheme, coeffs })
}

/// The closed-form polynomial: Narayana coefficients over `v = 0..n-1` on
/// the Dyck lattice, squared binomials over `v = 0..n` on the bilateral
/// lattice (the all-down-first path contributes the extra `v = n` term).
pub fn closed_form_polynomial(n: usize, lattice: Lattice, scheme: Scheme) -> Result<WeightPolynomial> {
    if n == 0 {
        return Err(Error::InvalidN { n });
    }
    let upper = match lattice {
        Lattice::Dyck => n - 1,
        Lattice::Bilateral => n,
    };
    closed_form_up_to(n, lattice, scheme, upper)
}

fn closed_form_up_to(
    n: usize,
    lattice: Lattice,
    scheme: Scheme,
    upper: usize,
) -> Result<WeightPolynomial> {
    let mut coeffs = BTreeMap::new();
    for v in 0..=upper {
        let c = match lattice {
            Lattice::Dyck => narayana(n as u64, v as u64)?,
            Lattice::Bilateral => bilateral_coeff(n as u64, v as u64)?,
        };
        if c > 0 {
            coeffs.insert(v, c);
        }
    }
    Ok(WeightPolynomial { n, lattice, scheme, coeffs })
}

fn serialize_elapsed_us<S: Serializer>(
    elapsed: &Duration,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_u128(elapsed.as_micros())
}

/// Outcome of one enumerated-versus-closed-form comparison.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub lattice: Lattice,
    pub scheme: Scheme,
    pub enumerated: WeightPolynomial,
    pub closed_form: WeightPolynomial,
    #[serde(rename = "match")]
    pub matches: bool,
    pub path_count: u128,
    #[serde(rename = "elapsed_us", serialize_with = "serialize_elapsed_us")]
    pub elapsed: Duration,
    /// On the bilateral lattice the closed form summed only to `v = n - 1`
    /// differs from the full polynomial; the truncated version is recorded
    /// here whenever that happens.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stated_closed_form: Option<WeightPolynomial>,
}

fn verify_one(n: usize, lattice: Lattice, scheme: Scheme, max_n: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    let enumerated = weight_polynomial_with_limit(n, lattice, scheme, max_n)?;
    let closed_form = closed_form_polynomial(n, lattice, scheme)?;
    let stated = closed_form_up_to(n, lattice, scheme, n - 1)?;
    let path_count = enumerated.path_count()?;
    let matches = enumerated.coefficients() == closed_form.coefficients();
    let stated_closed_form =
        (stated.coefficients() != closed_form.coefficients()).then_some(stated);
    Ok(VerifyReport {
        n,
        lattice,
        scheme,
        enumerated,
        closed_form,
        matches,
        path_count,
        elapsed: start.elapsed(),
        stated_closed_form,
    })
}

/// Compare enumeration against the closed form for every `n` in the range,
/// under the default limit. Failing items (limit, overflow) are reported in
/// place without aborting the sweep.
pub fn verify(
    ns: RangeInclusive<usize>,
    lattice: Lattice,
    scheme: Scheme,
) -> Vec<Result<VerifyReport>> {
    verify_with_limit(ns, lattice, scheme, DEFAULT_MAX_N)
}

/// `verify` with an explicit sweep limit.
pub fn verify_with_limit(
    ns: RangeInclusive<usize>,
    lattice: Lattice,
    scheme: Scheme,
    max_n: usize,
) -> Vec<Result<VerifyReport>> {
    ns.map(|n| verify_one(n, lattice, scheme, max_n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(n: usize, lattice: Lattice) -> Vec<String> {
        enumerate_paths(n, lattice)
            .unwrap()
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(words(3, Lattice::Dyck).len(), 5);
        assert_eq!(words(3, Lattice::Bilateral).len(), 20);
        assert_eq!(words(1, Lattice::Bilateral), vec!["UD", "DU"]);
    }

    #[test]
    fn enumerate_is_lexicographic() {
        assert_eq!(
            words(3, Lattice::Dyck),
            vec!["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]
        );
        let all = words(3, Lattice::Bilateral);
        assert_eq!(all.first().unwrap(), "UUUDDD");
        assert_eq!(all.last().unwrap(), "DDDUUU");
        let mut sorted: Vec<Word> = all.iter().map(|w| Word::parse(w).unwrap()).collect();
        let original = sorted.clone();
        sorted.sort();
        assert_eq!(sorted, original);
    }

    #[test]
    fn enumerate_is_deterministic() {
        assert_eq!(words(4, Lattice::Bilateral), words(4, Lattice::Bilateral));
    }

    #[test]
    fn enumerate_guards() {
        assert_eq!(
            enumerate_paths(0, Lattice::Dyck).err(),
            Some(Error::InvalidN { n: 0 })
        );
        assert_eq!(
            enumerate_paths(15, Lattice::Dyck).err(),
            Some(Error::LimitExceeded { n: 15, max_n: 14 })
        );
        assert!(enumerate_paths_with_limit(15, Lattice::Dyck, 15).is_ok());
    }

    #[test]
    fn binomial_and_catalan_values() {
        assert_eq!(binomial(6, 3).unwrap(), 20);
        assert_eq!(binomial(16, 8).unwrap(), 12870);
        assert_eq!(binomial(5, 9).unwrap(), 0);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(catalan(3).unwrap(), 5);
        assert_eq!(catalan(12).unwrap(), 208012);
    }

    #[test]
    fn narayana_values() {
        assert_eq!(narayana(3, 1).unwrap(), 3);
        for n in 1..=12 {
            assert_eq!(narayana(n, 0).unwrap(), 1);
        }
        assert_eq!(narayana(4, 1).unwrap(), 6);
        assert_eq!(narayana(3, 3).unwrap(), 0);
    }

    #[test]
    fn narayana_brute_force_oracle() {
        // Independent route: count Dyck paths of half-length 4 by number of
        // peaks, straight from the turn lists.
        let mut by_peaks: BTreeMap<usize, u128> = BTreeMap::new();
        for path in enumerate_paths(4, Lattice::Dyck).unwrap() {
            *by_peaks.entry(path.turns().peaks.len()).or_insert(0) += 1;
        }
        assert_eq!(by_peaks.get(&2).copied(), Some(6)); // narayana(4, 1)
        for v in 0..4 {
            assert_eq!(by_peaks.get(&(v + 1)).copied().unwrap_or(0), narayana(4, v as u64).unwrap());
        }
    }

    #[test]
    fn bilateral_coeff_values() {
        assert_eq!(bilateral_coeff(3, 1).unwrap(), 9);
        assert_eq!(bilateral_coeff(3, 3).unwrap(), 1);
        for n in 1..=12 {
            assert_eq!(bilateral_coeff(n, 0).unwrap(), 1);
        }
    }

    #[test]
    fn overflow_is_detected() {
        assert!(matches!(binomial(300, 150), Err(Error::Overflow { .. })));
        assert!(matches!(narayana(300, 150), Err(Error::Overflow { .. })));
    }

    #[test]
    fn weight_polynomial_examples() {
        let w = weight_polynomial(3, Lattice::Dyck, Scheme::BiBanded).unwrap();
        assert_eq!(w.coefficients(), &BTreeMap::from([(0, 1), (1, 3), (2, 1)]));

        let w = weight_polynomial(3, Lattice::Dyck, Scheme::PeakCounting).unwrap();
        assert_eq!(w.coefficients(), &BTreeMap::from([(0, 1), (1, 3), (2, 1)]));

        let w = weight_polynomial(3, Lattice::Bilateral, Scheme::PeakCounting).unwrap();
        assert_eq!(
            w.coefficients(),
            &BTreeMap::from([(0, 1), (1, 9), (2, 9), (3, 1)])
        );
    }

    #[test]
    fn closed_form_examples() {
        let w = closed_form_polynomial(3, Lattice::Dyck, Scheme::BiBanded).unwrap();
        assert_eq!(w.render_text(), "a^6 + 3a^4b^2 + a^2b^4");

        let w = closed_form_polynomial(1, Lattice::Bilateral, Scheme::PeakCounting).unwrap();
        assert_eq!(w.render_text(), "m^2 + m");
        assert_eq!(w.coefficients(), &BTreeMap::from([(0, 1), (1, 1)]));

        let w = closed_form_polynomial(3, Lattice::Bilateral, Scheme::BiBanded).unwrap();
        assert_eq!(w.render_text(), "a^6 + 9a^4b^2 + 9a^2b^4 + b^6");
    }

    #[test]
    fn render_text_examples() {
        let w = weight_polynomial(3, Lattice::Dyck, Scheme::BiBanded).unwrap();
        assert_eq!(w.render_text(), "a^6 + 3a^4b^2 + a^2b^4");
        let w = weight_polynomial(3, Lattice::Dyck, Scheme::PeakCounting).unwrap();
        assert_eq!(w.render_text(), "m^3 + 3m^2 + m");
        let w = weight_polynomial(3, Lattice::Bilateral, Scheme::PeakCounting).unwrap();
        assert_eq!(w.render_text(), "m^4 + 9m^3 + 9m^2 + m");
    }

    #[test]
    fn polynomial_json_shape() {
        let w = weight_polynomial(3, Lattice::Dyck, Scheme::BiBanded).unwrap();
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"n":3,"lattice":"dyck","scheme":"bibanded","coeffs":{"0":1,"1":3,"2":1}}"#
        );
    }

    #[test]
    fn verify_small_sweep() {
        for lattice in [Lattice::Dyck, Lattice::Bilateral] {
            for scheme in [Scheme::BiBanded, Scheme::PeakCounting] {
                for report in verify(1..=6, lattice, scheme) {
                    let report = report.unwrap();
                    assert!(report.matches, "mismatch at n={} {lattice} {scheme}", report.n);
                }
            }
        }
    }

    #[test]
    fn verify_reports_path_count() {
        let reports = verify(3..=3, Lattice::Dyck, Scheme::BiBanded);
        let report = reports.into_iter().next().unwrap().unwrap();
        assert_eq!(report.path_count, 5);
        assert!(report.stated_closed_form.is_none());

        let reports = verify(3..=3, Lattice::Bilateral, Scheme::BiBanded);
        let report = reports.into_iter().next().unwrap().unwrap();
        assert_eq!(report.path_count, 20);
        // the truncated closed form misses the b^6 term
        let stated = report.stated_closed_form.unwrap();
        assert_eq!(stated.coefficient(3), 0);
        assert_eq!(report.closed_form.coefficient(3), 1);
    }

    #[test]
    fn verify_propagates_errors_per_item() {
        let reports = verify_with_limit(1..=3, Lattice::Dyck, Scheme::BiBanded, 2);
        assert_eq!(reports.len(), 3);
        assert!(reports[0].is_ok());
        assert!(reports[1].is_ok());
        assert_eq!(
            reports[2].as_ref().err(),
            Some(&Error::LimitExceeded { n: 3, max_n: 2 })
        );
    }

    #[test]
    fn row_sums_and_symmetry() {
        for n in 1..=20u64 {
            let mut narayana_sum: u128 = 0;
            let mut bilateral_sum: u128 = 0;
            for v in 0..=n {
                narayana_sum += narayana(n, v).unwrap();
                bilateral_sum += bilateral_coeff(n, v).unwrap();
                if v < n {
                    assert_eq!(narayana(n, v).unwrap(), narayana(n, n - 1 - v).unwrap());
                }
                assert_eq!(bilateral_coeff(n, v).unwrap(), bilateral_coeff(n, n - v).unwrap());
            }
            assert_eq!(narayana_sum, catalan(n).unwrap());
            assert_eq!(bilateral_sum, binomial(2 * n, n).unwrap());
        }
    }
}
