use super::{CanonicalForm, Family, LambdaParams, Point, CLASS_MODULUS};
use crate::eisenstein::Eisenstein;
use crate::error::{Error, Result};

type E = Eisenstein<i64>;

fn check_families(lp_p: &LambdaParams, lp_q: &LambdaParams) -> Result<()> {
    if lp_p.family() != Family::P || lp_q.family() != Family::Q {
        return Err(Error::InvalidParams(format!(
            "closed-form composition takes a P label and a Q label, got {lp_p} and {lp_q}"
        )));
    }
    Ok(())
}

/// `τ′ = 𝔭(θ^{2i}z₁ − θ^{2j}y) + 𝔭²(y₁ − z − y² + y·z₁)` for labels
/// `P(i; y, z, u)` and `Q(j; y₁, z₁, u₁)`.
pub fn parametric_tau_prime(lp_p: &LambdaParams, lp_q: &LambdaParams) -> Result<Eisenstein<i64>> {
    check_families(lp_p, lp_q)?;
    let (i, j) = (lp_p.exp() as i64, lp_q.exp() as i64);
    let [y, z, _] = lp_p.digits().map(|d| d as i64);
    let [y1, z1, _] = lp_q.digits().map(|d| d as i64);
    let p = E::uniformizer();
    let first =
        &(&E::theta_pow(2 * i) * &E::from_int(z1)) - &(&E::theta_pow(2 * j) * &E::from_int(y));
    let second = E::from_int(y1 - z - y * y + y * z1);
    Ok(&(&p * &first) + &(&p.pow(2) * &second))
}

/// Class modulo `𝔭³` of the third point on the line through lifts of a
/// `P`-class and a `Q`-class, from the closed formula alone.
pub fn compose_parametric(lp_p: &LambdaParams, lp_q: &LambdaParams) -> Result<CanonicalForm> {
    let tau = parametric_tau_prime(lp_p, lp_q)?;
    let (i, j) = (lp_p.exp() as i64, lp_q.exp() as i64);
    let [y, z, u] = lp_p.digits().map(|d| E::from_int(d as i64));
    let [y1, z1, u1] = lp_q.digits().map(|d| E::from_int(d as i64));
    let p = E::uniformizer();
    let p2 = p.pow(2);
    let ti = E::theta_pow(i);
    let tj = E::theta_pow(j);

    // coordinates of the P-side tuple
    let big_y = &(-&ti) + &(&p2 * &y);
    let big_z = &(&p * &y) + &(&p2 * &z);
    let big_u = &(&(-&p) * &y) + &(&p2 * &u);

    let r0 = tau.clone();
    let r1 = &(&(&big_y * &tau) + &(&p * &z1)) + &(&(&(&p2 * &y1) + &ti) - &(&p2 * &y));
    let r2 = &(&(&big_z * &tau) - &tj) + &(&(&(&p2 * &z1) - &(&p * &y)) - &(&p2 * &z));
    let r3 = &(&(&big_u * &tau) - &(&p * &z1)) + &(&(&(&p2 * &u1) + &(&p * &y)) - &(&p2 * &u));

    // the formula is only valid modulo 𝔭³
    Point::new([r0, r1, r2, r3])
        .with_precision(CLASS_MODULUS)
        .normalize(CLASS_MODULUS)
}
