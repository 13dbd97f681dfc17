use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("'{0}' cannot be used as a letter")]
    InvalidLetter(char),
    #[error("letter '{0}' appears twice")]
    DuplicateLetter(char),
    #[error("alphabets must have between 1 and 26 letters, got {0}")]
    AlphabetSize(usize),
    #[error("letter '{0}' is not in the alphabet")]
    LetterNotInAlphabet(char),
    #[error("operation is undefined on the empty word")]
    EmptyWord,
    #[error("{period} is not a period of the word")]
    NotAPeriod { period: usize },
    #[error("rotation by {shift} is out of range for a word of length {len}")]
    RotationOutOfRange { shift: usize, len: usize },
    #[error("{a} and {b} are not two distinct points of symmetry")]
    NotSymmetryPoints { a: usize, b: usize },
    #[error("alphabets of the morphisms do not match")]
    AlphabetMismatch,
    #[error("morphism is not an endomorphism (source and target alphabets differ)")]
    NotEndomorphism,
    #[error("morphism is erasing")]
    ErasingMorphism,
    #[error("morphism is not prolongable at '{0}'")]
    NotProlongable(char),
    #[error("the fixed point starting with '{0}' is finite")]
    FiniteFixedPoint(char),
    #[error("the code words do not form a prefix code")]
    NotPrefixCode,
    #[error("conjugate search reached the cap of {cap} letters")]
    CapReached { cap: usize },
    #[error("morphism is not an element of stabilizer level {level}")]
    NotInLevel { level: usize },
    #[error("parse error at byte {position}: {message}")]
    Parse {
        position: usize,
        message: &'static str,
    },
}
