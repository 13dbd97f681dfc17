//! Periods, the Fine–Wilf bound and primitivity of finite words.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::search::{border_table, find_from};
use crate::{gcd, Word};

/// `w_i = w_{i+p}` for every `i < |w| - p`.
pub fn is_period(w: &Word, p: usize) -> bool {
    let s = w.letters();
    p < s.len() && s.iter().zip(&s[p..]).all(|(a, b)| a == b)
}

/// Every period `1 <= p < |w|`, ascending.
///
/// Periods are `|w|` minus the border lengths, read off the border chain.
pub fn periods(w: &Word) -> Result<Vec<usize>> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let border = border_table(w.letters());
    let mut out = Vec::new();
    let mut b = border[n - 1];
    while b > 0 {
        out.push(n - b);
        b = border[b - 1];
    }
    Ok(out)
}

/// If `|w| >= p + q - gcd(p, q)`, returns `gcd(p, q)`, which is then also a
/// period of `w`. Returns `None` when the word is too short for the bound.
pub fn fine_wilf(w: &Word, p: usize, q: usize) -> Result<Option<usize>> {
    for period in [p, q] {
        if !is_period(w, period) || period == 0 {
            return Err(Error::NotAPeriod { period });
        }
    }
    let g = gcd(p, q);
    if w.len() + g >= p + q {
        debug_assert!(is_period(w, g));
        Ok(Some(g))
    } else {
        Ok(None)
    }
}

/// `(u, k)` with `w = u^k` and `u` primitive.
///
/// The length of `u` is the first position `>= 1` at which `w` occurs in `ww`.
pub fn primitive_root(w: &Word) -> Result<(Word, usize)> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let ww = w.concat(w);
    let root = find_from(ww.letters(), w.letters(), 1).unwrap_or(n);
    Ok((w.prefix(root), n / root))
}

/// A word is primitive when it is not a proper power, i.e. it does not occur
/// in `ww` at any of the positions `1..|w|`.
pub fn is_primitive_word(w: &Word) -> Result<bool> {
    Ok(primitive_root(w)?.1 == 1)
}
