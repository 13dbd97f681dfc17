//! Combinatorics on words over small alphabets.
//!
//! Finite words and their periodic and palindromic structure, morphisms of
//! free monoids (algebra, conjugacy, class P membership, prefix-code
//! desubstitution), lazily generated fixed points, and a suite of named
//! checks around the ternary morphism `a->aca,b->cab,c->b` whose fixed point
//! is palindromic although no non-trivial element of its stabilizer has a
//! conjugate in class P.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod alphabet;
mod error;
pub mod fixed_point;
pub mod morphism;
pub mod periodicity;
mod search;
pub mod suite;
pub mod symmetry;
mod word;

pub use alphabet::{Alphabet, Letter};
pub use error::{Error, Result};
pub use fixed_point::{FixedPointStream, PalindromeCensus};
pub use morphism::{
    ClassPWitness, ConjugacyWitness, ConjugateEnumeration, Direction, EnumerationStatus,
    IncidenceMatrix, Morphism, Polynomial,
};
pub use symmetry::SymmetryPointSet;
pub use word::{Human, Word};

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}
