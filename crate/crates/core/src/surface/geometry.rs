use super::{form_coeffs, Point, CLASS_MODULUS};
use crate::eisenstein::{Eisenstein, Precision, Valuation};
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Bookkeeping for one chord computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionTrace<T: Coeff> {
    /// `Σ cᵢ Pᵢ² Qᵢ`
    pub a: Eisenstein<T>,
    /// `Σ cᵢ Pᵢ Qᵢ²`
    pub b: Eisenstein<T>,
    /// Digits left in the third point after normalization; `None` if exact.
    pub margin: Option<u32>,
    /// `τ′` of the closed-form composition, when that path produced the result.
    pub tau_prime: Option<Eisenstein<T>>,
}

fn vanishes<T: Coeff>(x: &Eisenstein<T>) -> bool {
    !matches!(x.valuation(), Valuation::Finite(_))
}

fn weighted_sum<T: Coeff>(terms: impl Fn(usize) -> Eisenstein<T>) -> Eisenstein<T> {
    let c = form_coeffs::<T>();
    (0..4).fold(Eisenstein::zero(), |acc, i| &acc + &(&c[i] * &terms(i)))
}

/// Third intersection of the line `PQ` with `V`.
///
/// `F(sP + tQ) = 3st(sA + tB)` once `F(P) = F(Q) = 0`, so the third point is
/// `B·P − A·Q`; the factor 3 is dropped.
pub fn chord<T: Coeff>(p: &Point<T>, q: &Point<T>) -> Result<(Point<T>, CompositionTrace<T>)> {
    let (pc, qc) = (p.coords(), q.coords());
    let a = weighted_sum(|i| &(&pc[i] * &pc[i]) * &qc[i]);
    let b = weighted_sum(|i| &pc[i] * &(&qc[i] * &qc[i]));
    if vanishes(&a) && vanishes(&b) {
        if p.projectively_equal(q)? {
            return Err(Error::PointsCoincide);
        }
        if a.is_exact() && b.is_exact() {
            return Err(Error::DegenerateLine);
        }
        return Err(Error::PrecisionExhausted {
            needed: CLASS_MODULUS,
            available: 0,
        });
    }
    let coords: [Eisenstein<T>; 4] = std::array::from_fn(|i| {
        let r = &(&b * &pc[i]) - &(&a * &qc[i]);
        match r.precision() {
            Precision::Capped(n) => r.reduced(n),
            Precision::Exact => r,
        }
    });
    let r = Point::new(coords);
    let margin = match r.margin() {
        Ok(m) => m,
        Err(Error::PrecisionExhausted { available, .. }) => Some(available),
        Err(e) => return Err(e),
    };
    if let Some(m) = margin {
        if m < CLASS_MODULUS {
            return Err(Error::PrecisionExhausted {
                needed: CLASS_MODULUS,
                available: m,
            });
        }
    }
    Ok((
        r,
        CompositionTrace {
            a,
            b,
            margin,
            tau_prime: None,
        },
    ))
}

/// Third point on the line through `P` in the tangent direction `D`.
///
/// With `L₁ = Σcᵢ Pᵢ² Dᵢ = 0`, `F(sP + tD) = t²(3s·L₂ + t·L₃)` where
/// `L₂ = Σcᵢ Pᵢ Dᵢ²` and `L₃ = F(D)`, giving `L₃·P − 3L₂·D`. When both
/// coefficients vanish the line lies in the tangent cone and `P` is returned.
pub fn tangent_section_point<T: Coeff>(p: &Point<T>, d: &Point<T>) -> Result<Point<T>> {
    let (pc, dc) = (p.coords(), d.coords());
    let l1 = weighted_sum(|i| &(&pc[i] * &pc[i]) * &dc[i]);
    if !vanishes(&l1) {
        return Err(Error::NotTangentDirection);
    }
    let l2 = weighted_sum(|i| &pc[i] * &(&dc[i] * &dc[i])).scale(3);
    let l3 = d.eval_form();
    if vanishes(&l2) && vanishes(&l3) {
        return Ok(p.clone());
    }
    Ok(Point::new(std::array::from_fn(|i| {
        &(&l3 * &pc[i]) - &(&l2 * &dc[i])
    })))
}
