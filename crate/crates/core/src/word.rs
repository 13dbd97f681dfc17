use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::search;

/// A finite word. The empty word has length 0.
///
/// Words do not carry an alphabet; membership is checked where a word meets
/// one (morphism images, arguments to [`Morphism::apply`](crate::Morphism::apply)).
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    /// Parses a contiguous string of letters. `""` is the empty word.
    pub fn parse(s: &str) -> Result<Self> {
        s.chars().map(Letter::new).collect()
    }

    /// Parses `s` and checks every letter against `alphabet`.
    pub fn parse_over(s: &str, alphabet: &Alphabet) -> Result<Self> {
        let w = Self::parse(s)?;
        w.check_over(alphabet)?;
        Ok(w)
    }

    pub fn check_over(&self, alphabet: &Alphabet) -> Result<()> {
        self.letters
            .iter()
            .try_for_each(|&l| alphabet.check(l).map(drop))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn get(&self, i: usize) -> Option<Letter> {
        self.letters.get(i).copied()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// `self` repeated `k` times; `pow(0)` is the empty word.
    pub fn pow(&self, k: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }

    /// The first `n` letters (the whole word when `n >= len`).
    pub fn prefix(&self, n: usize) -> Word {
        Word::new(self.letters[..n.min(self.len())].to_vec())
    }

    /// The word with its first `n` letters removed.
    pub fn drop_prefix(&self, n: usize) -> Word {
        Word::new(self.letters[n.min(self.len())..].to_vec())
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.letters.starts_with(&other.letters)
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        self.letters.ends_with(&other.letters)
    }

    /// Length of the longest common prefix.
    pub fn lcp_len(&self, other: &Word) -> usize {
        self.letters
            .iter()
            .zip(&other.letters)
            .take_while(|(a, b)| a == b)
            .count()
    }

    /// `w_{n-1} ... w_0`.
    pub fn reverse(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters }
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.letters)
    }

    /// For `w = xy` with `|x| = shift`, returns `yx`.
    pub fn rotate(&self, shift: usize) -> Result<Word> {
        if shift > self.len() {
            return Err(Error::RotationOutOfRange {
                shift,
                len: self.len(),
            });
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(shift);
        Ok(Word { letters })
    }

    /// First occurrence of `factor`, searching from position `from`.
    pub fn find(&self, factor: &Word, from: usize) -> Option<usize> {
        search::find_from(&self.letters, &factor.letters, from)
    }

    pub fn contains(&self, factor: &Word) -> bool {
        self.find(factor, 0).is_some()
    }

    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// Borrow the human-readable form (`eps` for the empty word).
    pub fn human(&self) -> Human<'_> {
        Human(self)
    }
}

pub(crate) fn is_palindrome<T: Eq>(s: &[T]) -> bool {
    s.iter().eq(s.iter().rev())
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word {
            letters: iter.into_iter().collect(),
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl From<Letter> for Word {
    fn from(letter: Letter) -> Self {
        Word {
            letters: alloc::vec![letter],
        }
    }
}

/// Machine form: the letters, nothing for the empty word.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Human-readable rendering of a word; the empty word prints as `eps`.
pub struct Human<'a>(pub &'a Word);

impl fmt::Display for Human<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("eps")
        } else {
            fmt::Display::fmt(self.0, f)
        }
    }
}
