//! Exact arithmetic for Temperley-Lieb immanants and total-nonnegativity
//! certificates.
//!
//! The crate is organized bottom-up:
//!
//! - [`partitions`]: integer partitions, majorization, ordered set partitions;
//! - [`symgroup`]: permutations in one-line notation, reduced words, cycle types;
//! - [`symfunc`]: elementary-to-monomial expansions, Kostka numbers and their
//!   inverse, irreducible characters of the symmetric group;
//! - [`tl`]: the Temperley-Lieb algebra `T_n(2)` — basis diagrams, diagram
//!   multiplication with loop counting, and the homomorphism `sigma` sending
//!   `s_i` to `t_i - 1`;
//! - [`colorings`]: cycles of the closure `tau-hat`, principal colorings and
//!   their balance statistics, the coloring coefficients `d_{j,tau}` and
//!   `b_{mu,tau}`;
//! - [`matrix`] / [`immanants`]: square matrices over a generic scalar ring,
//!   determinants, permanents, and the immanant family (`Imm_tau`, induced sign
//!   and trivial characters, irreducible and monomial immanants);
//! - [`tnngen`]: seeded generation of totally nonnegative rational matrices
//!   from planar-network factorizations, plus an exhaustive minor checker;
//! - [`certify`]: nonnegative expansion certificates for two-row immanant
//!   differences and exact verification of minor-sum (Barrett-Johnson and
//!   Fischer-type) inequalities.
//!
//! All arithmetic is exact: scalars are arbitrary-precision rationals
//! ([`Rat`]), counts are big integers. Matrix-level routines are generic over
//! the scalar via [`scalar::Scalar`], with the concrete rational instantiations
//! aliased at the crate root.

pub mod certify;
pub mod colorings;
pub mod error;
pub mod immanants;
pub mod matrix;
pub mod partitions;
pub mod scalar;
pub mod symfunc;
pub mod symgroup;
pub mod tl;
pub mod tnngen;

pub use error::Error;

/// Exact arbitrary-precision integer.
pub type Int = num::BigInt;
/// Exact arbitrary-precision nonnegative integer.
pub type Nat = num::BigUint;
/// Exact arbitrary-precision rational.
pub type Rat = num::BigRational;
/// Square matrix with exact rational entries.
pub type RatMatrix = matrix::Matrix<Rat>;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
