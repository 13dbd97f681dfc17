//! Morphisms of free monoids.
//!
//! A [`Morphism`] maps every letter of a source alphabet to a word over a
//! target alphabet and acts on words letter by letter.

mod class_p;
mod code;
mod conjugacy;
mod incidence;
mod literal;

use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::Word;

pub use class_p::{common_symmetry_residue, has_conjugate_in_class_p, is_class_p, ClassPWitness};
pub use code::decode_prefix_code;
pub use conjugacy::{
    enumerate_conjugates, left_conjugate_by, right_conjugate_by, ConjugacyWitness,
    ConjugateEnumeration, Direction, EnumerationStatus,
};
pub use incidence::{IncidenceMatrix, Polynomial};

#[derive(Clone)]
pub struct Morphism {
    source: Alphabet,
    target: Alphabet,
    /// indexed like `source.letters()`
    images: Vec<Word>,
}

impl Morphism {
    /// `images[i]` is the image of `source.letters()[i]`.
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::AlphabetMismatch);
        }
        for image in &images {
            image.check_over(&target)?;
        }
        Ok(Morphism {
            source,
            target,
            images,
        })
    }

    /// An endomorphism of `alphabet`.
    pub fn endo(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        Self::new(alphabet.clone(), alphabet, images)
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        let images = alphabet.letters().iter().map(|&l| Word::from(l)).collect();
        Morphism {
            source: alphabet.clone(),
            target: alphabet.clone(),
            images,
        }
    }

    /// Parses the literal grammar `a->aca,b->cab,c->b` (`-` is the empty
    /// image, `;` may replace `,`, whitespace is ignored).
    ///
    /// The source alphabet is the left-hand letters in order of appearance.
    /// The target is the source when every image letter belongs to it, and
    /// otherwise the sorted set of image letters.
    pub fn parse(literal: &str) -> Result<Self> {
        literal::parse(literal, None)
    }

    /// Parses a literal against declared alphabets.
    pub fn parse_with(literal: &str, source: &Alphabet, target: &Alphabet) -> Result<Self> {
        literal::parse(literal, Some((source, target)))
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, letter: Letter) -> Result<&Word> {
        Ok(&self.images[self.source.check(letter)?])
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source.same_letters(&self.target)
    }

    pub fn is_erasing(&self) -> bool {
        self.images.iter().any(Word::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_endomorphism()
            && self
                .source
                .letters()
                .iter()
                .zip(&self.images)
                .all(|(&l, img)| img.letters() == [l])
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Word::len).max().unwrap_or(0)
    }

    /// Concatenation of the letter images; `apply(ε) = ε`.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Word::empty();
        for &l in w.letters() {
            out.extend_from(&self.images[self.source.check(l)?]);
        }
        Ok(out)
    }

    /// `self ∘ inner`, i.e. apply `inner` first.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if !inner.target.same_letters(&self.source) {
            return Err(Error::AlphabetMismatch);
        }
        let images = inner
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<_>>()?;
        Ok(Morphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            images,
        })
    }

    /// `self^k`, with `self^0` the identity.
    pub fn power(&self, k: usize) -> Result<Morphism> {
        if !self.is_endomorphism() {
            return Err(Error::NotEndomorphism);
        }
        let mut acc = Morphism::identity(&self.source);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Every image reversed.
    pub fn mirror(&self) -> Morphism {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self.images.iter().map(Word::reverse).collect(),
        }
    }

    /// First letter of each image, in source-alphabet order.
    pub fn fst(&self) -> Result<Vec<Letter>> {
        self.images
            .iter()
            .map(|img| img.first().ok_or(Error::ErasingMorphism))
            .collect()
    }

    /// Last letter of each image, in source-alphabet order.
    pub fn lst(&self) -> Result<Vec<Letter>> {
        self.images
            .iter()
            .map(|img| img.last().ok_or(Error::ErasingMorphism))
            .collect()
    }

    /// Letters `a` with `φ(a) = a·u`, `u` nonempty.
    pub fn prolongable_letters(&self) -> Vec<Letter> {
        self.source
            .letters()
            .iter()
            .zip(&self.images)
            .filter(|(&l, img)| img.len() >= 2 && img.first() == Some(l))
            .map(|(&l, _)| l)
            .collect()
    }

    pub fn is_prolongable_at(&self, letter: Letter) -> bool {
        self.prolongable_letters().contains(&letter)
    }

    /// Letters whose iterated images eventually vanish.
    pub(crate) fn mortal_letters(&self) -> Vec<bool> {
        let n = self.source.len();
        let mut mortal = alloc::vec![false; n];
        loop {
            let mut changed = false;
            for i in 0..n {
                if !mortal[i]
                    && self.images[i]
                        .letters()
                        .iter()
                        .all(|&l| self.source.index_of(l).is_some_and(|j| mortal[j]))
                {
                    mortal[i] = true;
                    changed = true;
                }
            }
            if !changed {
                return mortal;
            }
        }
    }

    pub(crate) fn with_images(&self, images: Vec<Word>) -> Morphism {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            images,
        }
    }
}

/// Extensional equality: same letters on both sides and identical images.
impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.source.same_letters(&other.source)
            && self.target.same_letters(&other.target)
            && self
                .source
                .letters()
                .iter()
                .zip(&self.images)
                .all(|(&l, img)| other.image(l).is_ok_and(|o| o == img))
    }
}

impl Eq for Morphism {}

/// The literal grammar, images in source-alphabet order.
impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, img)) in self.source.letters().iter().zip(&self.images).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if img.is_empty() {
                write!(f, "{l}->-")?;
            } else {
                write!(f, "{l}->{img}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn m(s: &str) -> Morphism {
        Morphism::parse(s).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn l(c: char) -> Letter {
        Letter::new(c).unwrap()
    }

    #[test]
    fn apply_examples() {
        let gamma = m("a->aca,b->cab,c->b");
        assert_eq!(gamma.apply(&w("cab")).unwrap(), w("bacacab"));
        assert_eq!(gamma.apply(&Word::empty()).unwrap(), Word::empty());
        let pi = m("x->ac,y->ab");
        assert_eq!(pi.apply(&w("xy")).unwrap(), w("acab"));
        assert_eq!(pi.apply(&w("xa")), Err(Error::LetterNotInAlphabet('a')));
        let id = Morphism::identity(gamma.source());
        assert_eq!(id.apply(&w("acabb")).unwrap(), w("acabb"));
    }

    #[test]
    fn composition_and_powers() {
        let gamma = m("a->aca,b->cab,c->b");
        let mu = m("x->xy,y->xxy");
        let pi = m("x->ac,y->ab");
        assert_eq!(gamma.compose(&pi).unwrap(), pi.compose(&mu).unwrap());
        assert_eq!(gamma.power(2).unwrap(), m("a->acabaca,b->bacacab,c->cab"));
        assert!(gamma.power(0).unwrap().is_identity());
        assert_eq!(pi.compose(&gamma), Err(Error::AlphabetMismatch));
        assert_eq!(pi.power(2), Err(Error::NotEndomorphism));
    }

    #[test]
    fn mirror_images() {
        let gamma = m("a->aca,b->cab,c->b");
        assert_eq!(gamma.mirror(), m("a->aca,b->bac,c->b"));
        assert_eq!(gamma.mirror().mirror(), gamma);
    }

    #[test]
    fn first_and_last_letters() {
        let gamma = m("a->aca,b->cab,c->b");
        assert_eq!(gamma.fst().unwrap(), vec![l('a'), l('c'), l('b')]);
        assert_eq!(gamma.lst().unwrap(), vec![l('a'), l('b'), l('b')]);
        assert_eq!(
            gamma.power(2).unwrap().fst().unwrap(),
            vec![l('a'), l('b'), l('c')]
        );
        let id = Morphism::identity(gamma.source());
        assert_eq!(id.fst().unwrap(), vec![l('a'), l('b'), l('c')]);
        let gamma0 = m("a->-,b->acacab,c->acab");
        assert_eq!(gamma0.fst(), Err(Error::ErasingMorphism));
    }

    #[test]
    fn prolongable() {
        assert_eq!(m("a->aca,b->cab,c->b").prolongable_letters(), vec![l('a')]);
        assert_eq!(m("x->xy,y->xxy").prolongable_letters(), vec![l('x')]);
        assert!(Morphism::identity(&Alphabet::parse("abc").unwrap())
            .prolongable_letters()
            .is_empty());
    }

    #[test]
    fn equality_is_extensional() {
        assert_eq!(m("a->ab,b->ba"), m("b->ba,a->ab"));
        assert_ne!(m("a->ab,b->ba"), m("a->ab,b->ab"));
        assert_eq!(m("b->ba,a->ab").to_string(), "b->ba,a->ab");
    }

    #[test]
    fn mortality() {
        assert_eq!(m("a->ab,b->-").mortal_letters(), vec![false, true]);
        assert_eq!(
            m("a->ab,b->c,c->-").mortal_letters(),
            vec![false, true, true]
        );
    }
}
