use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{
    derive_seed, form_coeffs, hensel_lift_root, CanonicalForm, Point, UniPoly, CLASS_MODULUS,
};
use crate::eisenstein::Eisenstein;
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// The three parametric families of residue classes modulo `𝔭³`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    P,
    Q,
    R,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::P, Family::Q, Family::R];

    /// Coordinate normalized to 1.
    pub fn pivot(self) -> usize {
        match self {
            Family::P | Family::Q => 0,
            Family::R => 1,
        }
    }

    /// Coordinate `≡ −θᵉ` that is solved for when lifting.
    pub fn hensel_coord(self) -> usize {
        match self {
            Family::P => 1,
            Family::Q | Family::R => 2,
        }
    }

    /// Coordinates that may be varied freely when lifting.
    pub fn free_coords(self) -> [usize; 2] {
        match self {
            Family::P => [2, 3],
            Family::Q => [1, 3],
            Family::R => [0, 3],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::P => "P",
            Family::Q => "Q",
            Family::R => "R",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" => Ok(Family::P),
            "Q" => Ok(Family::Q),
            "R" => Ok(Family::R),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// Label of one class modulo `𝔭³`.
///
/// With free digits `(d₀, d₁, d₂)` the representative tuples are
/// - `P`: `(1, −θᵉ + 𝔭²d₀, d₀𝔭 + 𝔭²d₁, −d₀𝔭 + 𝔭²d₂)`
/// - `Q`: `(1, d₁𝔭 + 𝔭²d₀, −θᵉ + 𝔭²d₁, −d₁𝔭 + 𝔭²d₂)`
/// - `R`: `(d₁𝔭 + 𝔭²d₀, 1, −θᵉ + 𝔭²d₁, −d₁𝔭 + 𝔭²d₂)`
///
/// so the `𝔭`-coefficient of the off-diagonal coordinates is tied to one of
/// the free digits. The derived order (family, exponent, digits) is the class
/// numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LambdaParams {
    family: Family,
    exp: u8,
    digits: [i8; 3],
}

impl LambdaParams {
    pub const COUNT: usize = 243;

    pub fn new(family: Family, exp: u8, digits: [i8; 3]) -> Result<Self> {
        if exp > 2 {
            return Err(Error::InvalidParams(format!("exponent {exp} not in 0..=2")));
        }
        if digits.iter().any(|d| !(-1..=1).contains(d)) {
            return Err(Error::InvalidParams(format!(
                "digits {digits:?} not in {{-1,0,1}}"
            )));
        }
        Ok(LambdaParams {
            family,
            exp,
            digits,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn exp(&self) -> u8 {
        self.exp
    }

    pub fn digits(&self) -> [i8; 3] {
        self.digits
    }

    /// Position in the class numbering, `0..243`.
    pub fn index(&self) -> usize {
        let fam = self.family as usize;
        let d = |k: usize| (self.digits[k] + 1) as usize;
        fam * 81 + self.exp as usize * 27 + d(0) * 9 + d(1) * 3 + d(2)
    }

    pub fn from_index(index: usize) -> Option<Self> {
        if index >= Self::COUNT {
            return None;
        }
        let digit = |k: usize| (k % 3) as i8 - 1;
        Some(LambdaParams {
            family: Family::ALL[index / 81],
            exp: ((index / 27) % 3) as u8,
            digits: [digit(index / 9), digit(index / 3), digit(index)],
        })
    }

    /// All 243 labels in class order.
    pub fn all() -> Vec<LambdaParams> {
        (0..Self::COUNT)
            .map(|i| Self::from_index(i).expect("in range"))
            .collect()
    }

    /// Exact representative tuple in `K⁴`.
    pub fn tuple<T: Coeff>(&self) -> Point<T> {
        let p = Eisenstein::<T>::uniformizer();
        let p2 = p.pow(2);
        let k = |d: i8| Eisenstein::<T>::from_int(d as i64);
        let [d0, d1, d2] = self.digits;
        let unit = -Eisenstein::<T>::theta_pow(self.exp as i64);
        let lin = |coupled: i8, free: i8| &(&k(coupled) * &p) + &(&k(free) * &p2);
        let neg_lin = |coupled: i8, free: i8| &(&k(-coupled) * &p) + &(&k(free) * &p2);
        let coords = match self.family {
            Family::P => [
                Eisenstein::one(),
                &unit + &(&k(d0) * &p2),
                lin(d0, d1),
                neg_lin(d0, d2),
            ],
            Family::Q => [
                Eisenstein::one(),
                lin(d1, d0),
                &unit + &(&k(d1) * &p2),
                neg_lin(d1, d2),
            ],
            Family::R => [
                lin(d1, d0),
                Eisenstein::one(),
                &unit + &(&k(d1) * &p2),
                neg_lin(d1, d2),
            ],
        };
        Point::new(coords)
    }

    /// The canonical form modulo `𝔭³` of this class.
    pub fn canonical(&self) -> CanonicalForm {
        self.tuple::<i64>()
            .normalize(CLASS_MODULUS)
            .expect("exact tuples normalize")
    }
}

impl fmt::Display for LambdaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.digits;
        write!(f, "{}(e={}; {},{},{})", self.family, self.exp, a, b, c)
    }
}

/// Solve the Hensel coordinate of `start` so that the result is accurate to `n` digits.
fn lift_tuple<T: Coeff>(start: Point<T>, family: Family, n: u32) -> Result<Point<T>> {
    let h = family.hensel_coord();
    let c = form_coeffs::<T>();
    let rest = (0..4)
        .filter(|&i| i != h)
        .fold(Eisenstein::zero(), |acc, i| {
            &acc + &(&c[i] * &start.coord(i).pow(3))
        });
    let g = UniPoly::new(vec![
        rest,
        Eisenstein::zero(),
        Eisenstein::zero(),
        c[h].clone(),
    ]);
    // g′ = 3cₕy² has valuation 2 at a unit y
    let y = hensel_lift_root(&g, start.coord(h), n + 2)?;
    let root_exact = g.eval(&y).is_zero_repr();
    let mut coords = start.into_coords();
    coords[h] = if root_exact { y } else { y.with_precision(n) };
    Ok(Point::new(coords))
}

/// A point of `V` in the class `lp`, accurate to `n` digits. Only the tail of
/// the Hensel coordinate moves, so the residue modulo `𝔭³` is unchanged.
pub fn lift_representative<T: Coeff>(lp: &LambdaParams, n: u32) -> Result<Point<T>> {
    lift_tuple(lp.tuple(), lp.family, n)
}

/// Like [`lift_representative`], but with the free coordinates perturbed by
/// pseudo-random balanced digits at levels `𝔭³ … 𝔭^{n+1}` drawn from `seed`.
pub fn random_lift<T: Coeff>(lp: &LambdaParams, n: u32, seed: u64) -> Result<Point<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &[lp.index() as u64, n as u64]));
    let p = Eisenstein::<T>::uniformizer();
    let mut coords = lp.tuple::<T>().into_coords();
    for i in lp.family.free_coords() {
        let mut pk = p.pow(CLASS_MODULUS);
        for _ in CLASS_MODULUS..=n + 1 {
            let d: i64 = rng.gen_range(-1..=1);
            coords[i] = &coords[i] + &pk.scale(d);
            pk = &pk * &p;
        }
    }
    lift_tuple(Point::new(coords), lp.family, n)
}
