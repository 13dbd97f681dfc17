mod common;

use common::*;
use morphic_core::periodicity::{fine_wilf, is_primitive_word, periods};
use morphic_core::symmetry::{
    symmetry_points, symmetry_points_by_definition, two_points_imply_period,
};
use proptest::prelude::*;

#[test]
fn fine_wilf_exhaustive_binary_up_to_14() {
    for len in 1..=14 {
        for s in all_words(b"ab", len) {
            let w = word(&s);
            let ps: Vec<usize> = (1..len).filter(|&p| has_period(&s, p)).collect();
            assert_eq!(periods(&w).unwrap(), ps);
            for &p in &ps {
                for &q in &ps {
                    let g = gcd(p, q);
                    let got = fine_wilf(&w, p, q).unwrap();
                    if len + g >= p + q {
                        assert!(has_period(&s, g), "{s:?} {p} {q}");
                        assert_eq!(got, Some(g));
                    } else {
                        assert_eq!(got, None);
                    }
                }
            }
        }
    }
}

#[test]
fn fine_wilf_bound_is_sharp() {
    // aabaa has periods 3 and 4 but not 1, and 5 + 1 < 3 + 4
    let w = word(b"aabaa");
    assert_eq!(fine_wilf(&w, 3, 4).unwrap(), None);
    assert!(!has_period(b"aabaa", 1));
    assert!(fine_wilf(&w, 2, 3).is_err());
}

/// Split lengths `|p|` of `w = pq` with `p` nonempty and both palindromes.
fn palindromic_splits(s: &[u8]) -> Vec<usize> {
    (1..=s.len())
        .filter(|&m| is_pal(&s[..m]) && is_pal(&s[m..]))
        .collect()
}

#[test]
fn points_match_palindromic_splits_ternary_up_to_12() {
    for len in 1..=12 {
        for s in all_words(b"abc", len) {
            let w = word(&s);
            let expected: Vec<usize> = palindromic_splits(&s).iter().map(|m| m - 1).collect();
            let fast = symmetry_points(&w);
            assert_eq!(fast.points(), expected, "{}", w);
            assert_eq!(
                symmetry_points_by_definition(&w).points(),
                expected,
                "{}",
                w
            );
        }
    }
}

#[test]
fn symmetric_iff_product_of_two_palindromes_binary_up_to_16() {
    for len in 13..=16 {
        for s in all_words(b"ab", len) {
            let product = (0..=len).any(|m| is_pal(&s[..m]) && is_pal(&s[m..]));
            assert_eq!(!symmetry_points(&word(&s)).is_empty(), product);
        }
    }
}

#[test]
fn two_points_force_a_period_up_to_12() {
    let mut pairs = 0;
    for (alphabet, max) in [(&b"ab"[..], 12), (&b"abc"[..], 9)] {
        for len in 1..=max {
            for s in all_words(alphabet, len) {
                let w = word(&s);
                let pts = symmetry_points(&w);
                for &a in pts.points() {
                    for &b in pts.points().iter().filter(|&&b| b > a) {
                        pairs += 1;
                        let g = two_points_imply_period(&w, a, b).unwrap();
                        assert_eq!(g, gcd(b - a, len));
                        assert!(has_period(&s, g));
                        assert!(!is_primitive(&s));
                        assert!(!is_primitive_word(&w).unwrap());
                    }
                }
            }
        }
    }
    assert!(pairs > 0);
}

#[test]
fn primitivity_matches_divisor_scan() {
    for len in 1..=10 {
        for s in all_words(b"abc", len) {
            assert_eq!(is_primitive_word(&word(&s)).unwrap(), is_primitive(&s));
        }
    }
}

fn conjugate_pair() -> impl Strategy<Value = (Vec<u8>, usize)> {
    prop::collection::vec(prop::sample::select(b"abc".to_vec()), 1..24).prop_flat_map(|s| {
        let n = s.len();
        (Just(s), 0..=n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn conjugation_moves_points_by_twice_the_shift((s, l) in conjugate_pair()) {
        // w = z·u and w' = u·z satisfy u·w = w'·u
        let n = s.len();
        let (z, u) = s.split_at(n - l);
        let moved: Vec<u8> = u.iter().chain(z).copied().collect();
        let joined_left: Vec<u8> = u.iter().chain(&s).copied().collect();
        let joined_right: Vec<u8> = moved.iter().chain(u).copied().collect();
        prop_assert_eq!(joined_left, joined_right);

        let w = word(&s);
        let rotated = w.rotate(n - l).unwrap();
        prop_assert_eq!(rotated.clone(), word(&moved));
        let after = symmetry_points(&rotated);
        for &a in symmetry_points(&w).points() {
            prop_assert!(after.contains((a + 2 * l) % n));
        }
        prop_assert_eq!(after.len(), symmetry_points(&w).len());
    }
}
