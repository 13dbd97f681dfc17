//! `letter "->" word { ("," | ";") letter "->" word }`, whitespace
//! insignificant, `-` for the empty image.

use alloc::vec::Vec;

use super::Morphism;
use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::Word;

struct Cursor<'a> {
    chars: core::iter::Peekable<core::str::CharIndices<'a>>,
    len: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn pos(&mut self) -> usize {
        self.peek().map_or(self.len, |(i, _)| i)
    }

    fn expect(&mut self, want: char, message: &'static str) -> Result<()> {
        match self.peek() {
            Some((_, c)) if c == want => {
                self.chars.next();
                Ok(())
            }
            _ => Err(Error::Parse {
                position: self.pos(),
                message,
            }),
        }
    }

    fn letter(&mut self) -> Result<Letter> {
        let position = self.pos();
        match self.peek() {
            Some((_, c)) => {
                self.chars.next();
                Letter::new(c).map_err(|_| Error::Parse {
                    position,
                    message: "expected a letter",
                })
            }
            None => Err(Error::Parse {
                position,
                message: "expected a letter",
            }),
        }
    }

    fn image(&mut self) -> Result<Word> {
        if let Some((_, '-')) = self.peek() {
            self.chars.next();
            return Ok(Word::empty());
        }
        let mut w = Word::empty();
        while let Some((_, c)) = self.peek() {
            if c == ',' || c == ';' {
                break;
            }
            w.push(self.letter()?);
        }
        if w.is_empty() {
            return Err(Error::Parse {
                position: self.pos(),
                message: "expected an image (use '-' for the empty word)",
            });
        }
        Ok(w)
    }
}

pub(super) fn parse(literal: &str, declared: Option<(&Alphabet, &Alphabet)>) -> Result<Morphism> {
    let mut cur = Cursor {
        chars: literal.char_indices().peekable(),
        len: literal.len(),
    };
    let mut sources: Vec<(usize, Letter)> = Vec::new();
    let mut images: Vec<Word> = Vec::new();
    loop {
        let position = cur.pos();
        let letter = cur.letter()?;
        if sources.iter().any(|&(_, l)| l == letter) {
            return Err(Error::Parse {
                position,
                message: "repeated source letter",
            });
        }
        sources.push((position, letter));
        cur.expect('-', "expected '->'")?;
        cur.expect('>', "expected '->'")?;
        images.push(cur.image()?);
        match cur.peek() {
            None => break,
            Some((_, ',' | ';')) => {
                cur.chars.next();
            }
            Some(_) => {
                return Err(Error::Parse {
                    position: cur.pos(),
                    message: "expected ',' or ';'",
                })
            }
        }
    }

    match declared {
        Some((source, target)) => {
            for &(_, l) in &sources {
                source.check(l)?;
            }
            if sources.len() != source.len() {
                return Err(Error::Parse {
                    position: literal.len(),
                    message: "every letter of the source alphabet needs an image",
                });
            }
            let mut ordered = Vec::with_capacity(source.len());
            for &l in source.letters() {
                let i = sources.iter().position(|&(_, s)| s == l).unwrap();
                ordered.push(images[i].clone());
            }
            Morphism::new(source.clone(), target.clone(), ordered)
        }
        None => {
            let source = Alphabet::new(sources.iter().map(|&(_, l)| l))?;
            let closed = images
                .iter()
                .flat_map(|w| w.letters())
                .all(|&l| source.contains(l));
            let target = if closed {
                source.clone()
            } else {
                let mut letters: Vec<Letter> =
                    images.iter().flat_map(|w| w.letters()).copied().collect();
                letters.sort();
                letters.dedup();
                Alphabet::new(letters)?
            };
            Morphism::new(source, target, images)
        }
    }
}
