#![allow(dead_code)]

use morphic_core::Word;

/// Every word of length `len` over `alphabet`, as bytes.
pub fn all_words(alphabet: &[u8], len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn word(bytes: &[u8]) -> Word {
    Word::parse(std::str::from_utf8(bytes).unwrap()).unwrap()
}

pub fn is_pal(s: &[u8]) -> bool {
    s.iter().eq(s.iter().rev())
}

pub fn has_period(s: &[u8], p: usize) -> bool {
    (p..s.len()).all(|i| s[i] == s[i - p])
}

/// Primitive iff no proper divisor `d` of `|s|` makes `s` a power of `s[..d]`.
pub fn is_primitive(s: &[u8]) -> bool {
    let n = s.len();
    n > 0
        && (1..n)
            .filter(|d| n.is_multiple_of(*d))
            .all(|d| !has_period(s, d))
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
