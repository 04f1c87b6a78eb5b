//! Exact-arithmetic toolkit for the combinatorial representation theory of
//! the current algebra of sl_{r+1}: enumeration of the PBW-type basis of
//! local Weyl modules, graded (fermionic) and classical characters, Kostka
//! decompositions with empirical index-normalization resolution, and a
//! brute-force fusion-product oracle over exact rationals.
//!
//! The crate is organized around these subsystems:
//!
//! - [`lattice`]: weight/root lattice arithmetic and partition conversions;
//! - [`qpoly`]: integer polynomials in `t` and Gaussian binomials;
//! - [`basisenum`]: streaming enumeration and counting of the basis;
//! - [`charring`]: characters, decomposition, Kostka and factorization checks;
//! - [`fusion`]: evaluation modules, fusion filtration, graded character;
//! - [`cli`]: deterministic machine-readable reports for every verification.

pub mod basisenum;
pub mod charring;
pub mod cli;
pub mod fusion;
pub mod lattice;
pub mod qpoly;

pub use basisenum::{count_basis, enum_basis, BasisElement};
pub use charring::{
    character_from_basis, classical_character, decompose_graded, fermionic_character,
    verify_demazure_factorization, verify_kostka, weyl_dim, ClassicalCharacter, GradedCharacter,
};
pub use lattice::{DominantWeight, Partition, RootVector, WeightVector};
pub use qpoly::{qbinom, QPoly};
