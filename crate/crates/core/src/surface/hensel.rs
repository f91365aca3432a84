use crate::eisenstein::{Eisenstein, Precision, Valuation};
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Univariate polynomial `c₀ + c₁y + c₂y² + …` over `Z₃[θ]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<T: Coeff> {
    coeffs: Vec<Eisenstein<T>>,
}

impl<T: Coeff> UniPoly<T> {
    pub fn new(coeffs: Vec<Eisenstein<T>>) -> Self {
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Eisenstein<T>] {
        &self.coeffs
    }

    pub fn eval(&self, y: &Eisenstein<T>) -> Eisenstein<T> {
        self.coeffs
            .iter()
            .rev()
            .fold(Eisenstein::zero(), |acc, c| &(&acc * y) + c)
    }

    pub fn derivative(&self) -> UniPoly<T> {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(k as i64))
                .collect(),
        )
    }
}

const MAX_NEWTON_STEPS: usize = 64;

/// Newton iteration `y ← y − g(y)/g′(y)` from `y0` until `ν(g(y)) ≥ n`.
///
/// Requires `ν(g(y0)) > 2ν(g′(y0))`. The returned representative is exact; the
/// genuine root agrees with it modulo `𝔭^{ν(g(y)) − ν(g′(y0))}`.
pub fn hensel_lift_root<T: Coeff>(
    g: &UniPoly<T>,
    y0: &Eisenstein<T>,
    n: u32,
) -> Result<Eisenstein<T>> {
    let dg = g.derivative();
    let vd = match dg.eval(y0).valuation() {
        Valuation::Finite(v) => v,
        _ => return Err(Error::HenselCriterionFailed),
    };
    match g.eval(y0).valuation() {
        Valuation::Infinite => return Ok(y0.clone()),
        v if v.lower_bound() <= 2 * vd => return Err(Error::HenselCriterionFailed),
        _ => {}
    }
    // reducing y modulo 𝔭^keep moves g(y) by at most 𝔭^{keep + vd}
    let keep = n + 2;
    let mut y = y0.clone();
    for _ in 0..MAX_NEWTON_STEPS {
        let gy = g.eval(&y);
        match gy.valuation() {
            Valuation::Infinite => return Ok(y),
            Valuation::Finite(v) if v >= n => return Ok(y),
            Valuation::AtLeast(c) if c >= n => return Ok(y),
            Valuation::AtLeast(c) => {
                return Err(Error::PrecisionExhausted {
                    needed: n,
                    available: c,
                })
            }
            Valuation::Finite(_) => {}
        }
        let step = gy.div_exact(&dg.eval(&y), keep + vd)?;
        y = (&y - &step).reduced(keep).with_prec_tag(Precision::Exact);
    }
    Err(Error::PrecisionExhausted {
        needed: n,
        available: 0,
    })
}
