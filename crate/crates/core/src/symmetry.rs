//! Points of symmetry of finite words.
//!
//! `a` is a point of symmetry of `w` (length `n`) when `w_{(a-i) mod n} = w_i`
//! for every `i`. Equivalently `w = pq` with `p`, `q` palindromes and
//! `|p| = a + 1`; both characterizations are provided.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::periodicity::is_period;
use crate::{gcd, Word};

/// Maximal palindrome lengths around every center (Manacher).
///
/// The result has `2n + 1` entries. Even index `2i` is the gap before
/// letter `i`, odd index `2i + 1` is letter `i`. Entry `c` is the length of
/// the longest palindromic factor centered at `c`; it starts at `(c - len) / 2`.
pub(crate) fn palindrome_radii<T: Eq>(s: &[T]) -> Vec<usize> {
    let m = 2 * s.len() + 1;
    // positions of the interleaved sequence: even = separator, odd = letter
    let same = |i: usize, j: usize| i.is_multiple_of(2) || s[(i - 1) / 2] == s[(j - 1) / 2];
    let mut rad = vec![0usize; m];
    let (mut center, mut right) = (0usize, 0usize);
    for i in 0..m {
        let mut r = if i < right {
            rad[2 * center - i].min(right - i)
        } else {
            0
        };
        while i + r + 1 < m && i > r && same(i - r - 1, i + r + 1) {
            r += 1;
        }
        rad[i] = r;
        if i + r > right {
            center = i;
            right = i + r;
        }
    }
    rad
}

/// The points of symmetry of a word, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryPointSet {
    points: Vec<usize>,
    word_length: usize,
}

impl SymmetryPointSet {
    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn word_length(&self) -> usize {
        self.word_length
    }

    pub fn contains(&self, a: usize) -> bool {
        self.points.binary_search(&a).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }
}

/// Points of symmetry through palindromic splits `w = pq`, `|p| = a + 1`.
/// Linear time. The empty word has none.
pub fn symmetry_points(w: &Word) -> SymmetryPointSet {
    let s = w.letters();
    let n = s.len();
    let rad = palindrome_radii(s);
    // s[..m] is centered at m, s[i..] at n + i
    let pal_prefix = |m: usize| rad[m] >= m;
    let pal_suffix = |i: usize| i == n || rad[n + i] >= n - i;
    let points = (0..n)
        .filter(|&a| pal_prefix(a + 1) && pal_suffix(a + 1))
        .collect();
    SymmetryPointSet {
        points,
        word_length: n,
    }
}

/// Points of symmetry straight from the modular-index definition. Quadratic.
pub fn symmetry_points_by_definition(w: &Word) -> SymmetryPointSet {
    let s = w.letters();
    let n = s.len();
    let points = (0..n)
        .filter(|&a| (0..n).all(|i| s[(a + n - i) % n] == s[i]))
        .collect();
    SymmetryPointSet {
        points,
        word_length: n,
    }
}

/// Two distinct points of symmetry `a`, `b` force the period
/// `gcd(|b - a|, |w|)`, so such a word is never primitive.
pub fn two_points_imply_period(w: &Word, a: usize, b: usize) -> Result<usize> {
    let pts = symmetry_points(w);
    if a == b || !pts.contains(a) || !pts.contains(b) {
        return Err(Error::NotSymmetryPoints { a, b });
    }
    let g = gcd(a.abs_diff(b), w.len());
    debug_assert!(is_period(w, g));
    Ok(g)
}
