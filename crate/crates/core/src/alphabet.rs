use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Characters with a meaning in the morphism literal grammar.
const RESERVED: &[u8] = b"-,;>";

/// A single printable ASCII character used as a symbol.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub fn new(c: char) -> Result<Self> {
        if c.is_ascii_graphic() && !RESERVED.contains(&(c as u8)) {
            Ok(Letter(c as u8))
        } else {
            Err(Error::InvalidLetter(c))
        }
    }

    pub fn as_char(self) -> char {
        self.0 as char
    }

    pub(crate) fn byte(self) -> u8 {
        self.0
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.as_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

const ABSENT: u8 = u8::MAX;

/// An ordered set of 1 to 26 distinct letters.
///
/// The order is fixed at construction and is the order in which per-letter
/// data (images, `Fst`/`Lst` lists, matrix rows) is laid out.
#[derive(Clone)]
pub struct Alphabet {
    letters: Vec<Letter>,
    index: [u8; 128],
}

impl Alphabet {
    pub const MAX_SIZE: usize = 26;

    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let mut index = [ABSENT; 128];
        let mut collected = Vec::new();
        for letter in letters {
            let slot = &mut index[letter.byte() as usize];
            if *slot != ABSENT {
                return Err(Error::DuplicateLetter(letter.as_char()));
            }
            *slot = collected.len() as u8;
            collected.push(letter);
        }
        if collected.is_empty() || collected.len() > Self::MAX_SIZE {
            return Err(Error::AlphabetSize(collected.len()));
        }
        Ok(Alphabet {
            letters: collected,
            index,
        })
    }

    /// Builds an alphabet from a string such as `"abc"`.
    pub fn parse(s: &str) -> Result<Self> {
        let letters = s.chars().map(Letter::new).collect::<Result<Vec<_>>>()?;
        Self::new(letters)
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

    pub fn index_of(&self, letter: Letter) -> Option<usize> {
        match self.index[letter.byte() as usize] {
            ABSENT => None,
            i => Some(i as usize),
        }
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.index_of(letter).is_some()
    }

    /// Same letters, regardless of order.
    pub fn same_letters(&self, other: &Alphabet) -> bool {
        self.len() == other.len() && self.letters.iter().all(|&l| other.contains(l))
    }

    pub(crate) fn check(&self, letter: Letter) -> Result<usize> {
        self.index_of(letter)
            .ok_or(Error::LetterNotInAlphabet(letter.as_char()))
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet(")?;
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
