//! Knuth–Morris–Pratt border table and pattern search.

use alloc::vec;
use alloc::vec::Vec;

/// `border[i]` is the length of the longest proper border of `s[..=i]`.
pub(crate) fn border_table<T: Eq>(s: &[T]) -> Vec<usize> {
    let mut border = vec![0; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    border
}

/// Position of the first occurrence of `pattern` in `text` at or after `from`.
pub(crate) fn find_from<T: Eq>(text: &[T], pattern: &[T], from: usize) -> Option<usize> {
    if pattern.is_empty() {
        return (from <= text.len()).then_some(from);
    }
    let border = border_table(pattern);
    let mut k = 0;
    for (i, t) in text.iter().enumerate().skip(from) {
        while k > 0 && *t != pattern[k] {
            k = border[k - 1];
        }
        if *t == pattern[k] {
            k += 1;
        }
        if k == pattern.len() {
            return Some(i + 1 - k);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(text: &[u8], pattern: &[u8], from: usize) -> Option<usize> {
        (from..=text.len().saturating_sub(pattern.len()))
            .find(|&i| i + pattern.len() <= text.len() && &text[i..i + pattern.len()] == pattern)
    }

    #[test]
    fn borders() {
        assert_eq!(border_table(b"abaab"), vec![0, 0, 1, 1, 2]);
        assert_eq!(border_table(b"aaaa"), vec![0, 1, 2, 3]);
    }

    #[test]
    fn matches_naive_scan() {
        let text = b"acabacacabacabacabacacab";
        for pattern in [
            &b"bacacab"[..],
            b"aa",
            b"cab",
            b"a",
            b"acabacacabacabacabacacab",
        ] {
            for from in 0..4 {
                assert_eq!(find_from(text, pattern, from), naive(text, pattern, from));
            }
        }
    }
}
