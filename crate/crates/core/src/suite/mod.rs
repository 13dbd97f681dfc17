//! Named checks around `γ: a->aca, b->cab, c->b`.
//!
//! Its fixed point `x` starts `acabacacab...`, factors as `π(w)` for the
//! fixed point `w` of `μ: x->xy, y->xxy` and `π: x->ac, y->ab`, contains
//! arbitrarily long palindromes `p_k`, and no element of its stabilizer other
//! than the identity has a conjugate in class P. Each check verifies one
//! ingredient of that argument up to configured bounds.

mod checks;
mod fixtures;
mod report;
mod stabilizer;

use alloc::vec::Vec;

pub use checks::*;
pub use fixtures::*;
pub use report::{Report, Status, Value};
pub use stabilizer::{
    has_uniform_parity, stabilizer_level, submonoid_member_level, StabilizerLevel,
};

use crate::error::Result;
use crate::{Morphism, Word};

/// `p_0 = b`, `p_{k+1} = γ(ca·p_k)`.
pub fn p_word(gamma: &Morphism, k: usize) -> Result<Word> {
    Ok(p_words(gamma, k)?.pop().expect("k + 1 words"))
}

/// `p_0, ..., p_kmax`.
pub fn p_words(gamma: &Morphism, kmax: usize) -> Result<Vec<Word>> {
    let ca = Word::parse("ca")?;
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(Word::parse("b")?);
    for k in 0..kmax {
        let next = gamma.apply(&ca.concat(&out[k]))?;
        out.push(next);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    /// Largest `k` for checks on `γ^k` and `p_k`.
    pub kmax: usize,
    /// Largest stabilizer level swept for class P conjugates.
    pub stab_kmax: usize,
    /// How far into the fixed point factors are searched.
    pub prefix_bound: usize,
    /// Longest word in the exhaustive primitivity check.
    pub primitivity_maxlen: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            kmax: 6,
            stab_kmax: 5,
            prefix_bound: 100_000,
            primitivity_maxlen: 12,
        }
    }
}

/// Every check, in a fixed order. Failures never abort the run.
pub fn run_all(config: &RunConfig, fixtures: &Fixtures) -> Vec<Report> {
    let RunConfig {
        kmax,
        stab_kmax,
        prefix_bound,
        primitivity_maxlen,
    } = *config;
    alloc::vec![
        check_fixture_prefixes(fixtures),
        check_lemma_pk(fixtures, kmax),
        check_palindromicity(fixtures, kmax, prefix_bound),
        check_commutation(fixtures, kmax),
        check_odd_even(fixtures, stab_kmax),
        check_stabilizer_listings(fixtures, stab_kmax),
        check_non_generation(fixtures, stab_kmax),
        check_level_grading(fixtures, stab_kmax),
        check_points_symmetry(fixtures, kmax),
        check_primitivity_lemma(fixtures, primitivity_maxlen),
        check_class_p_battery(fixtures),
        check_no_class_p_conjugates(fixtures, kmax, stab_kmax),
        check_char_polys(fixtures),
        check_rigidity_sanity(fixtures),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn first_p_words() {
        let gamma = Fixtures::standard().gamma;
        let p = p_words(&gamma, 3).unwrap();
        assert_eq!(p[0].to_string(), "b");
        assert_eq!(p[1].to_string(), P1);
        assert_eq!(p[2].to_string(), P2);
        assert_eq!(p[3].len(), 55);
        assert_eq!(p_word(&gamma, 2).unwrap(), p[2]);
    }
}
