//! Conjugacy of morphisms.
//!
//! `φ'` is reached from `φ` by a right shift `w` when `φ(α)·w = w·φ'(α)` for
//! every letter `α`, and by a left shift `w` when `w·φ(α) = φ'(α)·w`.
//!
//! For a nonerasing letter the right condition says `w` is a prefix of
//! `φ(α)^ω`; erasing letters impose nothing. So the valid right shifts of
//! each length are unique and closed under prefixes: they are the prefixes
//! of length up to the longest common prefix of the `φ(α)^ω`. That common
//! prefix is infinite exactly when all nonempty images are powers of one
//! primitive word, and otherwise shorter than `|u| + |v|` for any two
//! disagreeing images `u`, `v`. Left shifts are the mirror picture.

use alloc::vec::Vec;

use super::Morphism;
use crate::periodicity::primitive_root;
use crate::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `original(α)·w = w·result(α)`
    Right,
    /// `w·original(α) = result(α)·w`
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyWitness {
    pub direction: Direction,
    pub shift: Word,
    pub result: Morphism,
}

impl ConjugacyWitness {
    /// Checks the defining identity letter by letter against `original`.
    pub fn holds_for(&self, original: &Morphism) -> bool {
        let w = &self.shift;
        original.images().len() == self.result.images().len()
            && original
                .images()
                .iter()
                .zip(self.result.images())
                .all(|(phi, res)| match self.direction {
                    Direction::Right => phi.concat(w) == w.concat(res),
                    Direction::Left => w.concat(phi) == res.concat(w),
                })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationStatus {
    /// Every conjugate was found.
    Complete,
    /// All nonempty images are powers of one primitive word of this length;
    /// shifts were enumerated over one full cycle.
    Cyclic { period: usize },
    /// Valid shifts longer than `cap` exist and were not explored.
    CapReached { cap: usize },
}

#[derive(Debug, Clone)]
pub struct ConjugateEnumeration {
    /// Distinct conjugates; the first is the morphism itself (empty shift).
    pub witnesses: Vec<ConjugacyWitness>,
    pub status: EnumerationStatus,
}

impl ConjugateEnumeration {
    pub fn morphisms(&self) -> impl Iterator<Item = &Morphism> {
        self.witnesses.iter().map(|w| &w.result)
    }

    pub fn contains(&self, phi: &Morphism) -> bool {
        self.morphisms().any(|m| m == phi)
    }
}

/// `φ'` with `φ(α)·w = w·φ'(α)` for every `α`, if it exists.
pub fn right_conjugate_by(phi: &Morphism, w: &Word) -> Option<Morphism> {
    let mut images = Vec::with_capacity(phi.images().len());
    for img in phi.images() {
        let x = img.concat(w);
        if !x.starts_with(w) {
            return None;
        }
        images.push(x.drop_prefix(w.len()));
    }
    Some(phi.with_images(images))
}

/// `φ'` with `w·φ(α) = φ'(α)·w` for every `α`, if it exists.
pub fn left_conjugate_by(phi: &Morphism, w: &Word) -> Option<Morphism> {
    let mut images = Vec::with_capacity(phi.images().len());
    for img in phi.images() {
        let x = w.concat(img);
        if !x.ends_with(w) {
            return None;
        }
        images.push(x.prefix(img.len()));
    }
    Some(phi.with_images(images))
}

/// Length of the longest common prefix of `u^ω` and `v^ω`; `None` if infinite.
fn power_lcp(u: &Word, v: &Word) -> Option<usize> {
    let (a, b) = (u.letters(), v.letters());
    (0..a.len() + b.len()).find(|&j| a[j % a.len()] != b[j % b.len()])
}

/// All right and left conjugates of `φ` with shifts of length at most `cap`.
pub fn enumerate_conjugates(phi: &Morphism, cap: usize) -> ConjugateEnumeration {
    let mut witnesses = alloc::vec![ConjugacyWitness {
        direction: Direction::Right,
        shift: Word::empty(),
        result: phi.clone(),
    }];
    let nonempty: Vec<&Word> = phi.images().iter().filter(|w| !w.is_empty()).collect();
    let Some(&first) = nonempty.first() else {
        return ConjugateEnumeration {
            witnesses,
            status: EnumerationStatus::Complete,
        };
    };

    let (root, _) = primitive_root(first).expect("nonempty");
    let cyclic = nonempty
        .iter()
        .all(|w| primitive_root(w).expect("nonempty").0 == root);

    let (right_max, left_max, mut status) = if cyclic {
        let last = root.len() - 1;
        (last, last, EnumerationStatus::Cyclic { period: root.len() })
    } else {
        let mirrored: Vec<Word> = nonempty.iter().map(|w| w.reverse()).collect();
        let right = nonempty[1..]
            .iter()
            .filter_map(|w| power_lcp(first, w))
            .min()
            .expect("non-cyclic images disagree somewhere");
        let left = mirrored[1..]
            .iter()
            .filter_map(|w| power_lcp(&mirrored[0], w))
            .min()
            .expect("non-cyclic images disagree somewhere");
        (right, left, EnumerationStatus::Complete)
    };
    if right_max.max(left_max) > cap {
        status = EnumerationStatus::CapReached { cap };
    }

    let period = first.len();
    let mut push = |w: ConjugacyWitness| {
        if !witnesses.iter().any(|x| x.result == w.result) {
            witnesses.push(w);
        }
    };
    for len in 1..=right_max.min(cap) {
        let shift: Word = (0..len).map(|j| first.letters()[j % period]).collect();
        let result = right_conjugate_by(phi, &shift).expect("valid shift");
        push(ConjugacyWitness {
            direction: Direction::Right,
            shift,
            result,
        });
    }
    for len in 1..=left_max.min(cap) {
        // suffix of length `len` of the left-infinite power of `first`
        let shift: Word = (0..len)
            .map(|j| first.letters()[(period - 1) - ((len - 1 - j) % period)])
            .collect();
        let result = left_conjugate_by(phi, &shift).expect("valid shift");
        push(ConjugacyWitness {
            direction: Direction::Left,
            shift,
            result,
        });
    }

    ConjugateEnumeration { witnesses, status }
}
