//! Fixed points of prolongable morphisms, generated lazily.

use alloc::vec::Vec;

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::search::find_from;
use crate::symmetry::palindrome_radii;
use crate::Word;

/// The infinite word `a·u·φ(u)·φ²(u)···` for `φ(a) = a·u`.
///
/// The cache only grows. A stream is not meant to be shared between threads
/// without external synchronization; distinct streams are independent.
#[derive(Debug, Clone)]
pub struct FixedPointStream {
    generator: Morphism,
    seed: Letter,
    cache: Vec<Letter>,
    /// `cache == φ(cache[..expanded])`
    expanded: usize,
}

/// The fixed point of `φ` starting with `a`.
pub fn fixed_point(phi: &Morphism, a: Letter) -> Result<FixedPointStream> {
    FixedPointStream::new(phi.clone(), a)
}

impl FixedPointStream {
    pub fn new(generator: Morphism, seed: Letter) -> Result<Self> {
        if !generator.is_endomorphism() {
            return Err(Error::NotEndomorphism);
        }
        let start = generator.image(seed)?.clone();
        if !generator.is_prolongable_at(seed) {
            return Err(Error::NotProlongable(seed.as_char()));
        }
        // infinite iff the tail of φ(a) holds a letter whose iterates never vanish
        let mortal = generator.mortal_letters();
        let alphabet = generator.source();
        let grows = start.letters()[1..]
            .iter()
            .any(|&l| !mortal[alphabet.index_of(l).expect("endomorphism")]);
        if !grows {
            return Err(Error::FiniteFixedPoint(seed.as_char()));
        }
        Ok(FixedPointStream {
            cache: start.letters().to_vec(),
            generator,
            seed,
            expanded: 1,
        })
    }

    pub fn generator(&self) -> &Morphism {
        &self.generator
    }

    pub fn seed(&self) -> Letter {
        self.seed
    }

    pub fn cached_len(&self) -> usize {
        self.cache.len()
    }

    fn grow_to(&mut self, n: usize) {
        let alphabet = self.generator.source();
        while self.cache.len() < n {
            debug_assert!(self.expanded < self.cache.len());
            let letter = self.cache[self.expanded];
            let i = alphabet.index_of(letter).expect("endomorphism");
            self.cache
                .extend_from_slice(self.generator.images()[i].letters());
            self.expanded += 1;
        }
    }

    /// The first `n` letters, borrowed from the cache.
    pub fn letters(&mut self, n: usize) -> &[Letter] {
        self.grow_to(n);
        &self.cache[..n]
    }

    /// The first `n` letters.
    pub fn prefix(&mut self, n: usize) -> Word {
        Word::new(self.letters(n).to_vec())
    }

    /// Least position of `f` inside the first `bound` letters.
    pub fn find_factor(&mut self, f: &Word, bound: usize) -> Option<usize> {
        find_from(self.letters(bound), f.letters(), 0)
    }

    /// Palindromic factors of the first `n` letters.
    pub fn palindrome_census(&mut self, n: usize) -> PalindromeCensus {
        PalindromeCensus::scan(self.letters(n))
    }

    /// Finite-scale evidence that `φ` fixes this word: `φ(prefix(n))` must be
    /// a prefix of the stream at least `n` letters long. A `true` is evidence
    /// up to the bound `n`, never a proof. The length requirement keeps
    /// erasing morphisms from passing trivially; it can reject a genuine
    /// erasing stabilizer element for very small `n`.
    pub fn is_fixed_by(&mut self, phi: &Morphism, n: usize) -> bool {
        let Ok(image) = phi.apply(&self.prefix(n)) else {
            return false;
        };
        if image.len() < n {
            return false;
        }
        self.letters(image.len()) == image.letters()
    }
}

/// One palindromic factor of each achievable length, at its first position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromeCensus {
    scanned_length: usize,
    /// `(length, first position)`, ascending length
    found: Vec<(usize, usize)>,
}

impl PalindromeCensus {
    /// Scans a finite word using maximal palindromes around every center.
    ///
    /// A palindrome of length `L` centered at `c` contains palindromes of
    /// lengths `L-2, L-4, ...` around the same center, and for a fixed length
    /// the start position grows with the center, so the first center reaching
    /// a length gives that length's first occurrence.
    pub fn scan(s: &[Letter]) -> Self {
        let rad = palindrome_radii(s);
        // next unrecorded length, per parity
        let mut next = [2usize, 1usize];
        let mut found = Vec::new();
        for (c, &r) in rad.iter().enumerate() {
            let parity = c % 2;
            while next[parity] <= r {
                let len = next[parity];
                found.push((len, (c - len) / 2));
                next[parity] += 2;
            }
        }
        found.sort_unstable();
        PalindromeCensus {
            scanned_length: s.len(),
            found,
        }
    }

    pub fn scanned_length(&self) -> usize {
        self.scanned_length
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.found
    }

    pub fn position_of(&self, len: usize) -> Option<usize> {
        self.found
            .binary_search_by_key(&len, |&(l, _)| l)
            .ok()
            .map(|i| self.found[i].1)
    }

    pub fn contains_length(&self, len: usize) -> bool {
        self.position_of(len).is_some()
    }

    pub fn max_length(&self) -> usize {
        self.found.last().map_or(0, |&(l, _)| l)
    }
}
