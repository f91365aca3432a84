//! Points on `V: T0³ + T1³ + T2³ + θ·T3³ = 0` and the chord/tangent geometry.

mod eckhardt;
mod enumerate;
mod geometry;
mod hensel;
mod lambda;
mod parametric;
mod point;

pub use eckhardt::{check_eckhardt_swaps, eckhardt_points, EckhardtReport};
pub use enumerate::enumerate_classes;
pub use geometry::{chord, tangent_section_point, CompositionTrace};
pub use hensel::{hensel_lift_root, UniPoly};
pub use lambda::{lift_representative, random_lift, Family, LambdaParams};
pub use parametric::{compose_parametric, parametric_tau_prime};
pub use point::{CanonicalForm, Point};

use crate::eisenstein::Eisenstein;
use crate::scalar::Coeff;

/// Classes are taken modulo `𝔭³`.
pub const CLASS_MODULUS: u32 = 3;
/// Default working precision for lifted representatives.
pub const DEFAULT_PRECISION: u32 = 12;
/// Largest precision reached by doubling retries.
pub const MAX_PRECISION: u32 = 48;

/// Coefficients `(1, 1, 1, θ)` of the cubic form.
pub fn form_coeffs<T: Coeff>() -> [Eisenstein<T>; 4] {
    [
        Eisenstein::one(),
        Eisenstein::one(),
        Eisenstein::one(),
        Eisenstein::theta(),
    ]
}

/// Mix a master seed with context words into a per-task seed (splitmix64).
pub fn derive_seed(master: u64, parts: &[u64]) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    parts.iter().fold(mix(master), |acc, &p| mix(acc ^ mix(p)))
}
