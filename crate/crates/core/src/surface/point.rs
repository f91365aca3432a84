use std::fmt;

use serde::{Deserialize, Serialize};

use super::form_coeffs;
use crate::eisenstein::literal::{format_digits, format_point};
use crate::eisenstein::{DigitVector, Eisenstein, Precision, Valuation};
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Projective point `(T0 : T1 : T2 : T3)` over `Z₃[θ]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point<T> {
    coords: [Eisenstein<T>; 4],
}

impl<T: Coeff> Point<T> {
    pub fn new(coords: [Eisenstein<T>; 4]) -> Self {
        Point { coords }
    }

    /// Exact point with rational-integer coordinates.
    pub fn from_ints(c: [i64; 4]) -> Self {
        Point::new(c.map(Eisenstein::from_int))
    }

    pub fn coords(&self) -> &[Eisenstein<T>; 4] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Eisenstein<T> {
        &self.coords[i]
    }

    pub fn into_coords(self) -> [Eisenstein<T>; 4] {
        self.coords
    }

    /// Common precision: the minimum over the coordinates.
    pub fn precision(&self) -> Precision {
        self.coords
            .iter()
            .fold(Precision::Exact, |acc, c| acc.min(c.precision()))
    }

    pub fn with_precision(self, n: u32) -> Self {
        Point::new(self.coords.map(|c| c.with_precision(n)))
    }

    pub fn scaled(&self, k: &Eisenstein<T>) -> Self {
        Point::new(std::array::from_fn(|i| &self.coords[i] * k))
    }

    /// Exchange two coordinates.
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut coords = self.coords.clone();
        coords.swap(i, j);
        Point::new(coords)
    }

    /// `F(P) = T0³ + T1³ + T2³ + θ·T3³`.
    pub fn eval_form(&self) -> Eisenstein<T> {
        let c = form_coeffs::<T>();
        self.coords
            .iter()
            .zip(c.iter())
            .fold(Eisenstein::zero(), |acc, (x, ci)| &acc + &(ci * &x.pow(3)))
    }

    /// Whether `F` vanishes to the point's precision (exactly, for exact points).
    pub fn on_surface(&self) -> bool {
        !matches!(self.eval_form().valuation(), Valuation::Finite(_))
    }

    /// Divide out `𝔭^{ν_min}` and return the scaled point with the pivot index:
    /// the first coordinate attaining the minimal valuation.
    pub(crate) fn strip(&self) -> Result<(Point<T>, usize, u32)> {
        let vals = self.coords.clone().map(|c| c.valuation());
        let (pivot, vmin) = vals
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.finite().map(|v| (i, v)))
            .min_by_key(|&(i, v)| (v, i))
            .ok_or(Error::PrecisionExhausted {
                needed: 1,
                available: 0,
            })?;
        // a coordinate known only to be ≡ 0 mod 𝔭^c with c ≤ ν_min could still be the pivot
        if let Some(c) = vals.iter().find_map(|v| match v {
            Valuation::AtLeast(c) if *c <= vmin => Some(*c),
            _ => None,
        }) {
            return Err(Error::PrecisionExhausted {
                needed: vmin + 1,
                available: c,
            });
        }
        let coords = self.coords.clone().map(|c| {
            c.div_uniformizer_pow(vmin)
                .expect("every coordinate is divisible by p^vmin")
        });
        Ok((Point::new(coords), pivot, vmin))
    }

    /// Digits of precision left once `𝔭^{ν_min}` is divided out (`None` when exact).
    pub fn margin(&self) -> Result<Option<u32>> {
        let (stripped, _, _) = self.strip()?;
        Ok(stripped.precision().cap())
    }

    /// Scale so that the pivot coordinate is 1, keeping `n` digits.
    pub fn normalized(&self, n: u32) -> Result<Point<T>> {
        self.normalized_with_pivot(n).map(|(p, _)| p)
    }

    fn normalized_with_pivot(&self, n: u32) -> Result<(Point<T>, usize)> {
        let (stripped, pivot, _) = self.strip()?;
        let avail = stripped.precision();
        if !avail.covers(n) {
            return Err(Error::PrecisionExhausted {
                needed: n,
                available: avail.available(n),
            });
        }
        let inv = stripped.coords[pivot].invert(n)?;
        let mut coords = stripped.coords.map(|c| (&c * &inv).truncated(n));
        coords[pivot] = Eisenstein::one().with_precision(n);
        Ok((Point::new(coords), pivot))
    }

    /// Canonical representative modulo `𝔭ⁿ`: pivot coordinate 1 and all
    /// earlier coordinates of positive valuation.
    pub fn normalize(&self, n: u32) -> Result<CanonicalForm> {
        let (norm, pivot) = self.normalized_with_pivot(n)?;
        let coords = norm
            .coords
            .iter()
            .map(|c| c.to_digits(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(CanonicalForm {
            coords: coords.try_into().expect("four coordinates"),
            pivot,
        })
    }

    /// Projective equality at the common working precision.
    pub fn projectively_equal(&self, other: &Point<T>) -> Result<bool> {
        let (p, i, _) = self.strip()?;
        let (q, j, _) = other.strip()?;
        if i != j {
            return Ok(false);
        }
        Ok((0..4).all(|k| {
            let minor = &(&p.coords[k] * &q.coords[i]) - &(&q.coords[k] * &p.coords[i]);
            !matches!(minor.valuation(), Valuation::Finite(_))
        }))
    }

    /// Coordinates reduced to `n` digits.
    pub fn truncated(&self, n: u32) -> Point<T> {
        Point::new(self.coords.clone().map(|c| c.truncated(n)))
    }
}

impl<T: Coeff> fmt::Debug for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", format_point(&self.coords))?;
        if let Precision::Capped(n) = self.precision() {
            write!(f, " + O(p^{n})")?;
        }
        Ok(())
    }
}

impl<T: Coeff> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_point(&self.coords))
    }
}

/// Canonical form of a point modulo `𝔭ⁿ`, as balanced digit vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    coords: [DigitVector; 4],
    pivot: usize,
}

impl CanonicalForm {
    pub fn from_digits(coords: [DigitVector; 4]) -> Result<Self> {
        let n = coords[0].len();
        if n == 0 || coords.iter().any(|c| c.len() != n) {
            return Err(Error::Parse(
                "canonical form needs four digit vectors of one positive length".into(),
            ));
        }
        let pivot = coords
            .iter()
            .position(|c| c.digits()[0] != 0)
            .ok_or_else(|| Error::Parse("canonical form has no unit coordinate".into()))?;
        let pivot_digits = coords[pivot].digits();
        if pivot_digits[0] != 1 || pivot_digits[1..].iter().any(|&d| d != 0) {
            return Err(Error::Parse(
                "pivot coordinate of a canonical form must be 1".into(),
            ));
        }
        Ok(CanonicalForm { coords, pivot })
    }

    pub fn coords(&self) -> &[DigitVector; 4] {
        &self.coords
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn modulus(&self) -> u32 {
        self.coords[0].len() as u32
    }

    /// Canonical form modulo `𝔭ᵏ`, `k ≤ n`: digit truncation preserves the
    /// pivot conditions.
    pub fn truncated(&self, k: u32) -> CanonicalForm {
        CanonicalForm {
            coords: self.coords.clone().map(|c| c.truncated(k as usize)),
            pivot: self.pivot,
        }
    }

    pub fn to_point<T: Coeff>(&self) -> Point<T> {
        Point::new(self.coords.clone().map(|d| d.to_element()))
    }

    /// Digits as `i8` rows, `d₀` first.
    pub fn digit_rows(&self) -> [Vec<i8>; 4] {
        self.coords.clone().map(|d| d.digits().to_vec())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_digits).collect();
        f.write_str(&parts.join(":"))
    }
}
