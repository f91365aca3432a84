//! Exact 3-adic arithmetic on the diagonal cubic surface
//! `T0³ + T1³ + T2³ + θ·T3³ = 0` over `Q₃(θ)` and the commutative Moufang
//! loop formed by its point classes modulo `𝔭³`.
//!
//! The arithmetic layer is generic over the integer coefficient type
//! ([`Coeff`]); the aliases below fix it to `BigInt`, which is what the
//! table builder and the CLI use.

pub mod cli;
pub mod eisenstein;
pub mod error;
pub mod moufang;
mod scalar;
pub mod surface;

pub use error::{Error, Result};
pub use scalar::Coeff;

use num_bigint::BigInt;

/// Element of `Z₃[θ]` with arbitrary-precision coefficients.
pub type RingElt = eisenstein::Eisenstein<BigInt>;
/// Element of `Z₃[θ]` with 128-bit coefficients; only safe at moderate precision.
pub type RingElt128 = eisenstein::Eisenstein<i128>;
/// Projective point with arbitrary-precision coordinates.
pub type ProjPoint = surface::Point<BigInt>;
/// Projective point with 128-bit coordinates.
pub type ProjPoint128 = surface::Point<i128>;

pub use eisenstein::{DigitVector, Precision, Valuation};
pub use moufang::{ClassId, ClassTable, LoopReport, LoopTable};
pub use surface::{CanonicalForm, CompositionTrace, Family, LambdaParams};
