use alloc::vec::Vec;

use super::conjugacy::{enumerate_conjugates, ConjugacyWitness, EnumerationStatus};
use super::Morphism;
use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::symmetry::symmetry_points;
use crate::Word;

/// `φ(α) = p·q_α` with `p` and every `q_α` palindromes (possibly empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPWitness {
    pub p: Word,
    /// `q_α` for each source letter, in alphabet order.
    pub q: Vec<(Letter, Word)>,
}

impl ClassPWitness {
    pub fn holds_for(&self, phi: &Morphism) -> bool {
        self.p.is_palindrome()
            && self.q.len() == phi.images().len()
            && self.q.iter().all(|(l, q)| {
                q.is_palindrome() && phi.image(*l).is_ok_and(|img| *img == self.p.concat(q))
            })
    }
}

impl Morphism {
    /// Every class P decomposition, by increasing `|p|`.
    pub fn class_p_witnesses(&self) -> Vec<ClassPWitness> {
        let images = self.images();
        let common = images
            .iter()
            .map(|w| images[0].lcp_len(w))
            .min()
            .unwrap_or(0);
        (0..=common)
            .filter_map(|len| {
                let p = images[0].prefix(len);
                if !p.is_palindrome() {
                    return None;
                }
                let q: Vec<(Letter, Word)> = self
                    .source()
                    .letters()
                    .iter()
                    .zip(images)
                    .map(|(&l, img)| (l, img.drop_prefix(len)))
                    .collect();
                q.iter()
                    .all(|(_, w)| w.is_palindrome())
                    .then_some(ClassPWitness { p, q })
            })
            .collect()
    }
}

/// Class P decomposition with the longest `p`, if `φ` is in class P.
pub fn is_class_p(phi: &Morphism) -> Option<ClassPWitness> {
    phi.class_p_witnesses().pop()
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Joins `x ≡ r (mod m)` and `x ≡ s (mod n)`. `Err(())` on overflow.
fn crt(r: i128, m: i128, s: i128, n: i128) -> core::result::Result<Option<(i128, i128)>, ()> {
    let (g, inv, _) = ext_gcd(m, n);
    if (s - r) % g != 0 {
        return Ok(None);
    }
    let lcm = (m / g).checked_mul(n).ok_or(())?;
    let step = ((s - r) / g).checked_mul(inv).ok_or(())? % (n / g);
    let x = (r + m.checked_mul(step).ok_or(())?).rem_euclid(lcm);
    Ok(Some((x, lcm)))
}

/// An integer `a` (as `a mod modulus`) such that every nonempty image has a
/// point of symmetry at `a mod |φ(α)|`, which every morphism with a class P
/// conjugate admits. `Some((0, 1))` when all images are empty.
///
/// Returns `Some` without a residue check if the moduli overflow, so a
/// `None` is always a proof that no such `a` exists.
pub fn common_symmetry_residue(phi: &Morphism) -> Option<(u128, u128)> {
    let mut classes: Vec<(i128, i128)> = alloc::vec![(0, 1)];
    for img in phi.images().iter().filter(|w| !w.is_empty()) {
        let n = img.len() as i128;
        let points = symmetry_points(img);
        let mut next = Vec::new();
        for &(r, m) in &classes {
            for &s in points.points() {
                match crt(r, m, s as i128, n) {
                    Ok(Some(c)) if !next.contains(&c) => next.push(c),
                    Ok(_) => {}
                    Err(()) => return Some((0, 1)),
                }
            }
        }
        if next.is_empty() {
            return None;
        }
        classes = next;
    }
    classes.first().map(|&(r, m)| (r as u128, m as u128))
}

/// A conjugate of `φ` (possibly `φ` itself) in class P, with its witnesses.
///
/// Morphisms failing [`common_symmetry_residue`] are rejected without
/// enumerating conjugates. `Err(CapReached)` means no witness was found among
/// shifts of length at most `cap` while longer shifts exist.
pub fn has_conjugate_in_class_p(
    phi: &Morphism,
    cap: usize,
) -> Result<Option<(ConjugacyWitness, ClassPWitness)>> {
    if common_symmetry_residue(phi).is_none() {
        return Ok(None);
    }
    let all = enumerate_conjugates(phi, cap);
    for conj in &all.witnesses {
        if let Some(p) = is_class_p(&conj.result) {
            return Ok(Some((conj.clone(), p)));
        }
    }
    match all.status {
        EnumerationStatus::CapReached { cap } => Err(Error::CapReached { cap }),
        _ => Ok(None),
    }
}
