use super::Morphism;
use crate::error::{Error, Result};
use crate::Word;

impl Morphism {
    /// No image is empty and none is a prefix of another.
    pub fn is_prefix_code(&self) -> bool {
        let images = self.images();
        images.iter().enumerate().all(|(i, u)| {
            !u.is_empty()
                && images
                    .iter()
                    .enumerate()
                    .all(|(j, v)| i == j || !v.starts_with(u))
        })
    }
}

/// Desubstitution: the unique `v` with `code(v) = w`, if any.
///
/// `code` must be a prefix code (checked on every call), which makes the
/// left-to-right factorization of `w` unique.
pub fn decode_prefix_code(code: &Morphism, w: &Word) -> Result<Option<Word>> {
    if !code.is_prefix_code() {
        return Err(Error::NotPrefixCode);
    }
    let text = w.letters();
    let mut out = Word::empty();
    let mut pos = 0;
    'outer: while pos < text.len() {
        for (&letter, img) in code.source().letters().iter().zip(code.images()) {
            if text[pos..].starts_with(img.letters()) {
                out.push(letter);
                pos += img.len();
                continue 'outer;
            }
        }
        return Ok(None);
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(s: &str) -> Morphism {
        Morphism::parse(s).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn examples() {
        let pi = m("x->ac,y->ab");
        assert_eq!(
            decode_prefix_code(&pi, &w("acabacacab")),
            Ok(Some(w("xyxxy")))
        );
        assert_eq!(decode_prefix_code(&pi, &w("c")), Ok(None));
        assert_eq!(decode_prefix_code(&pi, &w("aca")), Ok(None));
        assert_eq!(
            decode_prefix_code(&pi, &Word::empty()),
            Ok(Some(Word::empty()))
        );

        let gamma = m("a->aca,b->cab,c->b");
        assert_eq!(
            decode_prefix_code(&gamma, &w("bacacab")),
            Ok(Some(w("cab")))
        );
    }

    #[test]
    fn rejects_non_prefix_codes() {
        assert_eq!(
            decode_prefix_code(&m("x->a,y->ab"), &w("ab")),
            Err(Error::NotPrefixCode)
        );
        assert_eq!(
            decode_prefix_code(&m("x->-,y->ab"), &w("ab")),
            Err(Error::NotPrefixCode)
        );
        assert_eq!(
            decode_prefix_code(&m("x->ab,y->ab"), &w("ab")),
            Err(Error::NotPrefixCode)
        );
    }

    proptest! {
        #[test]
        fn decode_inverts_apply(v in "[xy]{0,10}") {
            let pi = m("x->ac,y->ab");
            let v = w(&v);
            prop_assert_eq!(decode_prefix_code(&pi, &pi.apply(&v).unwrap()).unwrap(), Some(v));
        }
    }
}
