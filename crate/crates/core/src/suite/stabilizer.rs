//! Elements of the stabilizer of the γ fixed point, graded by level.
//!
//! A morphism `φ` on `{a,b,c}` fixes the fixed point of `γ` exactly when
//! `φ(ac) = γ^k(ac)` and `φ(ab) = γ^k(ab)` for some `k`, its level. Every
//! such `φ` is determined by how much of the common prefix of `γ^k(ac)` and
//! `γ^k(ab)` it assigns to `a`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::{Morphism, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerLevel {
    k: usize,
    ac: Word,
    ab: Word,
    /// indexed by `|φ(a)|`
    elements: Vec<Morphism>,
}

impl StabilizerLevel {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn elements(&self) -> &[Morphism] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `γ^k(ac)`
    pub fn image_ac(&self) -> &Word {
        &self.ac
    }

    /// `γ^k(ab)`
    pub fn image_ab(&self) -> &Word {
        &self.ab
    }

    /// Whether `φ(ac)` and `φ(ab)` match this level.
    pub fn admits(&self, phi: &Morphism) -> bool {
        level_images(phi).is_ok_and(|(ac, ab)| ac == self.ac && ab == self.ab)
    }

    pub fn contains(&self, phi: &Morphism) -> bool {
        self.elements.contains(phi)
    }
}

fn letters_abc() -> [Word; 3] {
    ["a", "b", "c"].map(|s| Word::parse(s).expect("ascii"))
}

fn level_images(phi: &Morphism) -> Result<(Word, Word)> {
    let [a, b, c] = letters_abc();
    Ok((phi.apply(&a.concat(&c))?, phi.apply(&a.concat(&b))?))
}

/// All `φ` with `φ(ac) = γ^k(ac)` and `φ(ab) = γ^k(ab)`, by `|φ(a)|`.
///
/// The source alphabet of `gamma` must contain `a`, `b` and `c`.
pub fn stabilizer_level(gamma: &Morphism, k: usize) -> Result<StabilizerLevel> {
    let power = gamma.power(k)?;
    let (ac, ab) = level_images(&power)?;
    let common = ac.lcp_len(&ab);
    let [a, b, c] = letters_abc().map(|w| w.first().expect("one letter"));
    let alphabet = gamma.source();
    let mut elements = Vec::with_capacity(common + 1);
    for len in 0..=common {
        let mut images = alloc::vec![Word::empty(); alphabet.len()];
        images[alphabet.check(a)?] = ac.prefix(len);
        images[alphabet.check(b)?] = ab.drop_prefix(len);
        images[alphabet.check(c)?] = ac.drop_prefix(len);
        elements.push(gamma.with_images(images));
    }
    Ok(StabilizerLevel {
        k,
        ac,
        ab,
        elements,
    })
}

/// A factorization of a level-`k` element as `g[i₁]∘g[i₂]∘...∘g[i_k]`,
/// searched among all `4^k` products of exactly `k` generators.
///
/// Levels add under composition, so a level-`k` element can only be a
/// product of exactly `k` level-1 elements; this search is therefore
/// exhaustive for the submonoid they generate. Indices refer to
/// `generators`. An element of level 0 factors as the empty product iff it
/// is the identity.
pub fn submonoid_member_level(
    phi: &Morphism,
    k: usize,
    gamma: &Morphism,
    generators: [&Morphism; 4],
) -> Result<Option<Vec<usize>>> {
    if !stabilizer_level(gamma, k)?.admits(phi) {
        return Err(Error::NotInLevel { level: k });
    }
    let identity = Morphism::identity(phi.source());
    let mut choice = alloc::vec![0usize; k];
    loop {
        let mut product = identity.clone();
        for &i in &choice {
            product = product.compose(generators[i])?;
        }
        if product == *phi {
            return Ok(Some(choice));
        }
        // odometer over {0,1,2,3}^k, last index fastest
        let Some(pos) = choice.iter().rposition(|&i| i < 3) else {
            return Ok(None);
        };
        choice[pos] += 1;
        for i in &mut choice[pos + 1..] {
            *i = 0;
        }
    }
}

/// Image lengths of `a`, `b`, `c` all share one parity.
pub fn has_uniform_parity(phi: &Morphism) -> bool {
    let lengths: Vec<usize> = phi.images().iter().map(Word::len).collect();
    lengths.windows(2).all(|p| p[0] % 2 == p[1] % 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suite::Fixtures;

    #[test]
    fn levels_zero_and_one() {
        let f = Fixtures::standard();
        let zero = stabilizer_level(&f.gamma, 0).unwrap();
        assert_eq!(zero.len(), 2);
        assert!(zero.elements()[1].is_identity());
        assert_eq!(
            zero.elements()[0],
            Morphism::parse("a->-,b->ab,c->ac").unwrap()
        );

        let one = stabilizer_level(&f.gamma, 1).unwrap();
        assert_eq!(one.elements(), f.level_one().map(Clone::clone));
    }

    #[test]
    fn factorizations() {
        let f = Fixtures::standard();
        let g = f.level_one();
        let g21 = f.gamma2.compose(&f.gamma1).unwrap();
        assert_eq!(
            submonoid_member_level(&g21, 2, &f.gamma, g),
            Ok(Some(alloc::vec![2, 1]))
        );
        let id = Morphism::identity(f.gamma.source());
        assert_eq!(
            submonoid_member_level(&id, 0, &f.gamma, g),
            Ok(Some(Vec::new()))
        );
        assert_eq!(
            submonoid_member_level(&f.gamma, 2, &f.gamma, g),
            Err(Error::NotInLevel { level: 2 })
        );
    }

    #[test]
    fn parity() {
        let f = Fixtures::standard();
        assert!(has_uniform_parity(&f.gamma1));
        assert!(has_uniform_parity(&f.gamma2));
        assert!(!has_uniform_parity(
            &Morphism::parse("a->a,b->ab,c->b").unwrap()
        ));
    }
}
