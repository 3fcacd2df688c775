//! Exhaustive and property-based checks of the structural invariants:
//! round trips, Dyck preservation, weight transport and the polynomial
//! identities, over every path of small half-length.

use std::collections::BTreeMap;

use proptest::prelude::*;

use pathforge::{
    bibanded_monomial, bilateral_coeff, catalan, check_weight_correspondence,
    closed_form_polynomial, enumerate_paths, from_checkmarks, narayana, peak_monomial, phi,
    phi_inverse, to_checkmarks, weight_polynomial, CheckmarkPair, CheckmarkSeq, Lattice, Mark,
    Path, Scheme, Step, Word,
};

fn all_paths(n: usize, lattice: Lattice) -> Vec<Path> {
    enumerate_paths(n, lattice).unwrap().collect()
}

#[test]
fn turn_lists_interleave() {
    for n in 1..=6 {
        for path in all_paths(n, Lattice::Bilateral) {
            let turns = path.turns();
            assert_eq!(turns.peaks.len(), turns.valleys.len() + 1);
            // peaks and valleys strictly alternate starting and ending with a peak
            for (p, v) in turns.peaks.iter().zip(&turns.valleys) {
                assert!(p < v);
            }
            for (v, p) in turns.valleys.iter().zip(turns.peaks.iter().skip(1)) {
                assert!(v < p);
            }
            // anti-diagonals of peaks and diagonals of valleys strictly increase
            let h = path.heights();
            let anti: Vec<i64> = turns.peaks.iter().map(|&i| i as i64 + h[i]).collect();
            assert!(anti.windows(2).all(|w| w[0] < w[1]));
            let diag: Vec<i64> = turns.valleys.iter().map(|&i| i as i64 - h[i]).collect();
            assert!(diag.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn checkmark_round_trip_over_paths() {
    for n in 1..=8 {
        for path in all_paths(n, Lattice::Bilateral) {
            assert_eq!(from_checkmarks(&to_checkmarks(&path)), path);
        }
    }
}

/// Every mark assignment satisfying the arrow-count condition, by brute force.
fn all_pairs(n: usize) -> Vec<CheckmarkPair> {
    let mut pairs = Vec::new();
    for nw_bits in 0u32..1 << n {
        for sw_bits in 0u32..1 << (n - 1) {
            let nw: Vec<Mark> = (0..n)
                .map(|k| if nw_bits >> k & 1 == 1 { Mark::Arrow } else { Mark::Blank })
                .collect();
            let sw: Vec<Mark> = (0..n - 1)
                .map(|k| if sw_bits >> k & 1 == 1 { Mark::Arrow } else { Mark::Blank })
                .collect();
            if let Ok(pair) = CheckmarkPair::new(CheckmarkSeq::new(nw), CheckmarkSeq::new(sw)) {
                pairs.push(pair);
            }
        }
    }
    pairs
}

#[test]
fn checkmark_round_trip_over_pairs() {
    for n in 1..=6 {
        let pairs = all_pairs(n);
        // count identity: exactly binomial(2n, n) pairs pass the condition
        assert_eq!(
            pairs.len() as u128,
            pathforge::binomial(2 * n as u64, n as u64).unwrap()
        );
        for pair in pairs {
            assert_eq!(to_checkmarks(&from_checkmarks(&pair)), pair);
        }
    }
}

#[test]
fn dyck_pair_characterisation() {
    for n in 1..=6 {
        for pair in all_pairs(n) {
            assert_eq!(
                pair.is_dyck_pair(),
                from_checkmarks(&pair).is_dyck(),
                "pair {pair} disagrees with its path"
            );
        }
    }
}

#[test]
fn peak_count_equals_nw_arrows_plus_one() {
    for n in 1..=6 {
        for path in all_paths(n, Lattice::Bilateral) {
            assert_eq!(
                peak_monomial(&path).exp_m(),
                to_checkmarks(&path).nw().arrow_count() + 1
            );
        }
    }
}

#[test]
fn band_parity_theorem() {
    // Odd-band up-steps are exactly the odd-indexed up-steps, and they pair
    // one-to-one with the odd-band down-steps.
    for n in 1..=8 {
        for path in all_paths(n, Lattice::Bilateral) {
            let odd_indexed_ups = path
                .word()
                .steps()
                .iter()
                .step_by(2)
                .filter(|s| **s == Step::Up)
                .count();
            let m = bibanded_monomial(&path);
            assert_eq!(m.exp_a(), 2 * odd_indexed_ups);
            assert_eq!(m.exp_a() + m.exp_b(), 2 * n);
            assert_eq!(m.exp_a() % 2, 0);
        }
    }
}

#[test]
fn reflection_swaps_band_exponents() {
    // Reflection through the axis maps the strip between heights l and
    // l + 1 to the strip between -l - 1 and -l, flipping its parity, so it
    // exchanges the two exponents (UD carries a^2, its mirror DU carries
    // b^2). Together with the closed forms this is the palindromic
    // coefficient symmetry of the bilateral polynomial.
    for n in 1..=6 {
        for path in all_paths(n, Lattice::Bilateral) {
            let m = bibanded_monomial(&path);
            let r = bibanded_monomial(&path.reflected());
            assert_eq!((r.exp_a(), r.exp_b()), (m.exp_b(), m.exp_a()));
        }
    }
}

#[test]
fn bijectivity_and_dyck_preservation() {
    for n in 1..=8 {
        let mut images = Vec::new();
        for path in all_paths(n, Lattice::Bilateral) {
            let image = phi(&path);
            assert_eq!(phi_inverse(&image), path);
            assert_eq!(phi(&phi_inverse(&path)), path);
            assert_eq!(path.is_dyck(), image.is_dyck());
            images.push(image.word().clone());
        }
        // injective with the right image: the sorted images are exactly B_2n
        images.sort();
        images.dedup();
        assert_eq!(
            images.len() as u128,
            pathforge::binomial(2 * n as u64, n as u64).unwrap()
        );
    }
}

#[test]
fn weight_transport() {
    for n in 1..=8 {
        for path in all_paths(n, Lattice::Bilateral) {
            let report = check_weight_correspondence(&path);
            assert!(report.holds, "transport fails for {path}");
            assert_eq!(peak_monomial(&phi(&path)).exp_m(), report.v + 1);
        }
    }
}

#[test]
fn polynomial_transport() {
    // Both schemes produce the same coefficient map for the same class.
    for n in 1..=10 {
        for lattice in [Lattice::Dyck, Lattice::Bilateral] {
            let banded = weight_polynomial(n, lattice, Scheme::BiBanded).unwrap();
            let peaks = weight_polynomial(n, lattice, Scheme::PeakCounting).unwrap();
            assert_eq!(banded.coefficients(), peaks.coefficients());
        }
    }
}

#[test]
fn enumerated_matches_closed_form() {
    for n in 1..=10 {
        for lattice in [Lattice::Dyck, Lattice::Bilateral] {
            for scheme in [Scheme::BiBanded, Scheme::PeakCounting] {
                let enumerated = weight_polynomial(n, lattice, scheme).unwrap();
                let closed = closed_form_polynomial(n, lattice, scheme).unwrap();
                assert_eq!(
                    enumerated.coefficients(),
                    closed.coefficients(),
                    "n={n} {lattice} {scheme}"
                );
            }
        }
    }
}

#[test]
fn class_sizes() {
    for n in 1..=10 {
        assert_eq!(
            enumerate_paths(n, Lattice::Dyck).unwrap().count() as u128,
            catalan(n as u64).unwrap()
        );
        assert_eq!(
            enumerate_paths(n, Lattice::Bilateral).unwrap().count() as u128,
            pathforge::binomial(2 * n as u64, n as u64).unwrap()
        );
    }
}

#[test]
fn intermediate_pair_arrow_counts() {
    // The pair built inside phi always satisfies the arrow-count condition,
    // with the north-west arrows counting the even-indexed up-steps.
    for n in 1..=6 {
        for path in all_paths(n, Lattice::Bilateral) {
            let pair = to_checkmarks(&phi(&path));
            let v = bibanded_monomial(&path).exp_b() / 2;
            assert_eq!(pair.nw().arrow_count(), v);
            let sw = pair.sw().arrow_count();
            assert!(sw == v || sw + 1 == v);
        }
    }
}

fn balanced_word() -> impl Strategy<Value = Word> {
    (1usize..=16).prop_flat_map(|n| {
        let mut steps = vec![Step::Up; n];
        steps.extend(vec![Step::Down; n]);
        Just(steps)
            .prop_shuffle()
            .prop_map(|steps| Word::new(steps).unwrap())
    })
}

proptest! {
    #[test]
    fn prop_render_parse_round_trip(word in balanced_word()) {
        prop_assert_eq!(Word::parse(&word.to_string()).unwrap(), word);
    }

    #[test]
    fn prop_phi_round_trip(word in balanced_word()) {
        let path = Path::new(word);
        prop_assert_eq!(phi_inverse(&phi(&path)), path);
    }

    #[test]
    fn prop_checkmark_round_trip(word in balanced_word()) {
        let path = Path::new(word);
        prop_assert_eq!(from_checkmarks(&to_checkmarks(&path)), path);
    }

    #[test]
    fn prop_weight_transport(word in balanced_word()) {
        let path = Path::new(word);
        prop_assert!(check_weight_correspondence(&path).holds);
    }

    #[test]
    fn prop_dyck_preserved(word in balanced_word()) {
        let path = Path::new(word);
        prop_assert_eq!(phi(&path).is_dyck(), path.is_dyck());
    }

    #[test]
    fn prop_heights_parity(word in balanced_word()) {
        let path = Path::new(word);
        for (i, h) in path.heights().iter().enumerate() {
            prop_assert_eq!(h.rem_euclid(2), (i as i64).rem_euclid(2));
        }
        prop_assert_eq!(path.heights()[0], 0);
        prop_assert_eq!(*path.heights().last().unwrap(), 0);
    }

    #[test]
    fn prop_checkmark_text_round_trip(word in balanced_word()) {
        let pair = to_checkmarks(&Path::new(word));
        prop_assert_eq!(CheckmarkPair::parse(&pair.to_string()).unwrap(), pair);
    }
}
