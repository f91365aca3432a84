use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Integer type usable as a coefficient of `a + bθ`.
///
/// Blanket-implemented; `i64`, `i128` and `BigInt` all qualify. Fixed-width
/// types are only safe while intermediate products stay in range, which holds
/// at the default working precision but not at the largest retry levels.
pub trait Coeff:
    Clone
    + Debug
    + Display
    + Hash
    + Integer
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("coefficient type cannot hold i64 value")
    }
}

impl<T> Coeff for T where
    T: Clone
        + Debug
        + Display
        + Hash
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// 3^k in the coefficient type.
pub(crate) fn pow3<T: Coeff>(k: u32) -> T {
    let three = T::from_i64_exact(3);
    num_traits::pow(three, k as usize)
}

/// Exponent of the largest power of 3 dividing a non-zero integer.
pub(crate) fn val3<T: Coeff>(n: &T) -> u32 {
    debug_assert!(!n.is_zero());
    let three = T::from_i64_exact(3);
    let mut n = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&three);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// Representative of `n mod m` in the balanced range `(-m/2, m/2]`.
pub(crate) fn balanced_mod<T: Coeff>(n: &T, m: &T) -> T {
    let r = n.mod_floor(m);
    let two = T::from_i64_exact(2);
    if r.clone() * two > *m {
        r - m.clone()
    } else {
        r
    }
}

/// Inverse of `n` modulo `m` for `gcd(n, m) = 1`.
pub(crate) fn inverse_mod<T: Coeff>(n: &T, m: &T) -> Option<T> {
    let e = n.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}
