//! Exact arithmetic in `K = Z₃[θ]`, `θ² + θ + 1 = 0`, with uniformizer `𝔭 = 1 − θ`.
//!
//! Elements are stored as an exact integer pair `(a, b)` meaning `a + bθ`,
//! together with a precision tag: either the value is exact or it is only
//! known modulo `𝔭ⁿ`. Truncation is lazy; reduction of the coefficients only
//! happens when asked for (`truncated`, digit extraction, comparisons).

mod digits;
pub mod literal;
mod ops;

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{balanced_mod, inverse_mod, pow3, val3, Coeff};

pub use digits::DigitVector;

/// How much of an element is known: everything, or its class modulo `𝔭ⁿ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Precision {
    Exact,
    Capped(u32),
}

impl Precision {
    pub fn min(self, other: Precision) -> Precision {
        match (self, other) {
            (Precision::Exact, p) | (p, Precision::Exact) => p,
            (Precision::Capped(m), Precision::Capped(n)) => Precision::Capped(m.min(n)),
        }
    }

    pub fn cap(self) -> Option<u32> {
        match self {
            Precision::Exact => None,
            Precision::Capped(n) => Some(n),
        }
    }

    /// True when at least `n` digits are known.
    pub fn covers(self, n: u32) -> bool {
        self.cap().is_none_or(|c| c >= n)
    }

    /// Digits available, with `fallback` standing in for "exact".
    pub fn available(self, fallback: u32) -> u32 {
        self.cap().unwrap_or(fallback)
    }

    fn lowered_by(self, k: u32) -> Precision {
        match self {
            Precision::Exact => Precision::Exact,
            Precision::Capped(n) => Precision::Capped(n.saturating_sub(k)),
        }
    }
}

/// Additive `𝔭`-adic valuation.
///
/// `AtLeast(n)` is returned for truncated values that vanish modulo `𝔭ⁿ`:
/// the true valuation is only bounded below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(u32),
    AtLeast(u32),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_below_precision(self) -> bool {
        matches!(self, Valuation::AtLeast(_))
    }

    /// Lower bound on the valuation (`u32::MAX` for an exact zero).
    pub fn lower_bound(self) -> u32 {
        match self {
            Valuation::Finite(v) | Valuation::AtLeast(v) => v,
            Valuation::Infinite => u32::MAX,
        }
    }

    /// Whether the valuation is known to be at least `n`.
    pub fn at_least(self, n: u32) -> bool {
        self.lower_bound() >= n
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.lower_bound().cmp(&other.lower_bound()))
    }
}

/// Element `a + bθ` of `Z₃[θ]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Eisenstein<T> {
    a: T,
    b: T,
    prec: Precision,
}

impl<T: Coeff> Eisenstein<T> {
    pub fn new(a: T, b: T) -> Self {
        Eisenstein {
            a,
            b,
            prec: Precision::Exact,
        }
    }

    pub fn from_i64(a: i64, b: i64) -> Self {
        Self::new(T::from_i64_exact(a), T::from_i64_exact(b))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_i64(n, 0)
    }

    pub fn zero() -> Self {
        Self::from_i64(0, 0)
    }

    pub fn one() -> Self {
        Self::from_i64(1, 0)
    }

    /// The primitive cube root of unity `θ`.
    pub fn theta() -> Self {
        Self::from_i64(0, 1)
    }

    /// The uniformizer `𝔭 = 1 − θ`.
    pub fn uniformizer() -> Self {
        Self::from_i64(1, -1)
    }

    /// `θᵏ`, with `k` taken modulo 3.
    pub fn theta_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::one(),
            1 => Self::theta(),
            _ => Self::from_i64(-1, -1),
        }
    }

    pub fn uniformizer_pow(k: u32) -> Self {
        Self::uniformizer().pow(k)
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec == Precision::Exact
    }

    /// Same representative, known only modulo `𝔭ⁿ` (never raises precision).
    pub fn with_precision(mut self, n: u32) -> Self {
        self.prec = self.prec.min(Precision::Capped(n));
        self
    }

    pub(crate) fn with_prec_tag(mut self, prec: Precision) -> Self {
        self.prec = prec;
        self
    }

    /// Whether the stored representative is literally zero.
    pub fn is_zero_repr(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Norm `a² − ab + b²` of the representative.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - self.a.clone() * self.b.clone()
            + self.b.clone() * self.b.clone()
    }

    /// Galois conjugate `θ ↦ θ²`: `a + bθ² = (a − b) − bθ`.
    pub fn conj(&self) -> Self {
        Eisenstein {
            a: self.a.clone() - self.b.clone(),
            b: -self.b.clone(),
            prec: self.prec,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one().with_prec_tag(self.prec);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Multiply by an integer scalar.
    pub fn scale(&self, k: i64) -> Self {
        let k = T::from_i64_exact(k);
        Eisenstein {
            a: self.a.clone() * k.clone(),
            b: self.b.clone() * k,
            prec: self.prec,
        }
    }

    /// Valuation of the representative itself, ignoring the precision tag.
    pub fn repr_valuation(&self) -> Option<u32> {
        if self.is_zero_repr() {
            None
        } else {
            // N(𝔭) = 3 and 3 = −θ²𝔭², so v₃(N(x)) = v_𝔭(x).
            Some(val3(&self.norm()))
        }
    }

    pub fn valuation(&self) -> Valuation {
        match (self.repr_valuation(), self.prec) {
            (None, Precision::Exact) => Valuation::Infinite,
            (None, Precision::Capped(n)) => Valuation::AtLeast(n),
            (Some(v), Precision::Exact) => Valuation::Finite(v),
            (Some(v), Precision::Capped(n)) if v < n => Valuation::Finite(v),
            (Some(_), Precision::Capped(n)) => Valuation::AtLeast(n),
        }
    }

    /// `x / 𝔭` when `𝔭 | x` as a representative; loses one digit of precision.
    pub fn div_uniformizer(&self) -> Option<Self> {
        // 𝔭 | a + bθ iff a + b ≡ 0 (mod 3); then x/𝔭 = x(1 − θ²)/3 = x(2 + θ)/3.
        let three = T::from_i64_exact(3);
        let s = self.a.clone() + self.b.clone();
        if !s.is_multiple_of(&three) {
            return None;
        }
        let two = T::from_i64_exact(2);
        // (a + bθ)(2 + θ) = (2a − b) + (a + b)θ
        let na = self.a.clone() * two - self.b.clone();
        Some(Eisenstein {
            a: na / three.clone(),
            b: s / three,
            prec: self.prec.lowered_by(1),
        })
    }

    /// Divide the representative by `𝔭ᵏ`.
    pub fn div_uniformizer_pow(&self, k: u32) -> Option<Self> {
        let mut x = self.clone();
        for _ in 0..k {
            x = x.div_uniformizer()?;
        }
        Some(x)
    }

    /// Reduce the coefficients modulo `3^⌈n/2⌉` (a multiple of `𝔭ⁿ`) and cap the precision at `n`.
    pub fn truncated(&self, n: u32) -> Self {
        let m: T = pow3(n.div_ceil(2));
        Eisenstein {
            a: balanced_mod(&self.a, &m),
            b: balanced_mod(&self.b, &m),
            prec: self.prec.min(Precision::Capped(n)),
        }
    }

    /// Coefficient reduction that keeps the value modulo `𝔭ⁿ` but leaves the precision tag alone.
    pub(crate) fn reduced(&self, n: u32) -> Self {
        let m: T = pow3(n.div_ceil(2));
        Eisenstein {
            a: balanced_mod(&self.a, &m),
            b: balanced_mod(&self.b, &m),
            prec: self.prec,
        }
    }

    fn require(&self, n: u32) -> Result<()> {
        match self.prec {
            Precision::Capped(p) if p < n => Err(Error::PrecisionExhausted {
                needed: n,
                available: p,
            }),
            _ => Ok(()),
        }
    }

    /// Balanced digit expansion `Σ dᵢ𝔭ⁱ (mod 𝔭ⁿ)`, `dᵢ ∈ {−1, 0, 1}`.
    pub fn to_digits(&self, n: u32) -> Result<DigitVector> {
        self.require(n)?;
        let mut x = self.reduced(n + 1).with_prec_tag(Precision::Exact);
        let mut out = Vec::with_capacity(n as usize);
        for _ in 0..n {
            // θ ≡ 1 (mod 𝔭), so a + bθ ≡ a + b.
            let r = (x.a.clone() + x.b.clone()).mod_floor(&T::from_i64_exact(3));
            let d: i8 = match r.to_i64() {
                Some(0) => 0,
                Some(1) => 1,
                _ => -1,
            };
            out.push(d);
            x = (&x - &Self::from_int(d as i64))
                .div_uniformizer()
                .expect("digit removal leaves a multiple of p");
        }
        Ok(DigitVector::new(out))
    }

    /// Inverse of a unit modulo `𝔭ⁿ`.
    pub fn invert(&self, n: u32) -> Result<Self> {
        if !self.valuation().finite().is_some_and(|v| v == 0) {
            return Err(Error::NonUnitInverse);
        }
        // 1/x = x̄ / N(x), with N(x) a 3-adic unit inverted modulo 3^⌈n/2⌉.
        let m: T = pow3(n.div_ceil(2));
        let ninv = inverse_mod(&self.norm(), &m).expect("unit norm is prime to 3");
        let c = self.conj();
        let r = Eisenstein {
            a: c.a * ninv.clone(),
            b: c.b * ninv,
            prec: Precision::Exact,
        };
        Ok(r.truncated(n)
            .with_prec_tag(self.prec.min(Precision::Capped(n))))
    }

    /// `x / y` for `v(y) ≤ v(x)`.
    ///
    /// The result is known to `min(prec(x), prec(y), n) − v(y)` digits; when the
    /// unit part of `y` is a unit of `Z[θ]` and both inputs are exact, the
    /// quotient is exact.
    pub fn div_exact(&self, y: &Self, n: u32) -> Result<Self> {
        let vx = self.valuation();
        let vy = match y.valuation() {
            Valuation::Finite(v) => v,
            Valuation::AtLeast(p) => {
                return Err(Error::PrecisionExhausted {
                    needed: p + 1,
                    available: p,
                })
            }
            Valuation::Infinite => {
                return Err(Error::NonIntegralQuotient {
                    numerator: vx.lower_bound(),
                    denominator: u32::MAX,
                })
            }
        };
        if vx.lower_bound() < vy {
            return Err(Error::NonIntegralQuotient {
                numerator: vx.lower_bound(),
                denominator: vy,
            });
        }
        let num = self
            .div_uniformizer_pow(vy)
            .expect("numerator divisible by p^v(y)");
        let den = y
            .div_uniformizer_pow(vy)
            .expect("denominator divisible by p^v(y)");
        let base_prec = self.prec.min(y.prec);
        if base_prec == Precision::Exact && den.norm().is_one() {
            // ±θᵏ, inverted by its conjugate
            let mut q = &num * &den.conj();
            q.prec = Precision::Exact;
            return Ok(q);
        }
        let target = base_prec.min(Precision::Capped(n)).lowered_by(vy);
        let digits = target.cap().expect("capped");
        if digits < 1 {
            return Err(Error::PrecisionExhausted {
                needed: 1,
                available: 0,
            });
        }
        let inv = den.with_prec_tag(Precision::Exact).invert(digits)?;
        let q = (&num.with_prec_tag(Precision::Exact) * &inv).truncated(digits);
        Ok(q.with_prec_tag(target))
    }

    /// `x ≡ y (mod 𝔭ⁿ)`.
    pub fn equal_mod(&self, y: &Self, n: u32) -> Result<bool> {
        self.require(n)?;
        y.require(n)?;
        let d = (self - y).with_prec_tag(Precision::Exact);
        Ok(d.valuation().at_least(n))
    }

    /// Whether this element is a unit (valuation 0).
    pub fn is_unit(&self) -> bool {
        self.valuation() == Valuation::Finite(0)
    }
}

impl<T: Coeff> fmt::Debug for Eisenstein<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.prec {
            Precision::Exact => write!(f, "{}", literal::format_exact(self)),
            Precision::Capped(n) => write!(f, "{} + O(p^{})", literal::format_exact(self), n),
        }
    }
}

impl<T: Coeff> fmt::Display for Eisenstein<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&literal::format_exact(self))
    }
}

impl<T: Coeff> Zero for Eisenstein<T> {
    fn zero() -> Self {
        Eisenstein::zero()
    }

    fn is_zero(&self) -> bool {
        self.is_zero_repr()
    }
}

impl<T: Coeff> One for Eisenstein<T> {
    fn one() -> Self {
        Eisenstein::one()
    }
}

#[cfg(test)]
mod tests;
