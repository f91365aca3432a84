use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Eisenstein;
use crate::error::Error;
use crate::scalar::Coeff;

/// Balanced `𝔭`-adic digits `d₀, d₁, …` with `dᵢ ∈ {−1, 0, 1}`, `d₀` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DigitVector(Vec<i8>);

impl DigitVector {
    pub fn new(digits: Vec<i8>) -> Self {
        assert!(
            digits.iter().all(|d| (-1..=1).contains(d)),
            "digits must be balanced"
        );
        DigitVector(digits)
    }

    pub fn zeros(n: usize) -> Self {
        DigitVector(vec![0; n])
    }

    pub fn digits(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The first `n` digits.
    pub fn truncated(&self, n: usize) -> Self {
        DigitVector(self.0[..n.min(self.0.len())].to_vec())
    }

    /// Index of the first non-zero digit.
    pub fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|&d| d != 0)
    }

    /// `Σ dᵢ𝔭ⁱ`, tagged with precision `len`.
    pub fn to_element<T: Coeff>(&self) -> Eisenstein<T> {
        let p = Eisenstein::<T>::uniformizer();
        let mut acc = Eisenstein::zero();
        // Horner from the top digit down
        for &d in self.0.iter().rev() {
            acc = &(&acc * &p) + &Eisenstein::from_int(d as i64);
        }
        acc.with_precision(self.0.len() as u32)
    }
}

impl fmt::Display for DigitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for DigitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("digit vector must be bracketed: {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(DigitVector(Vec::new()));
        }
        let digits = inner
            .split(',')
            .map(|t| match t.trim().parse::<i8>() {
                Ok(d) if (-1..=1).contains(&d) => Ok(d),
                _ => Err(Error::Parse(format!("bad digit {t:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DigitVector(digits))
    }
}
