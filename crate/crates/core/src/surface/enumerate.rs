use num_bigint::BigInt;

use super::{lift_representative, CanonicalForm, LambdaParams, CLASS_MODULUS, DEFAULT_PRECISION};
use crate::error::{Error, Result};

/// Canonical residue tuples of `V(K)` modulo `𝔭ⁿ`, `n ∈ {1, 2, 3}`.
///
/// Modulo `𝔭³` these are the 243 labelled classes in class order, each
/// checked to lift to a point of `V`. The coarser levels are the distinct
/// truncations, in order of first appearance.
pub fn enumerate_classes(n: u32) -> Result<Vec<CanonicalForm>> {
    if !(1..=CLASS_MODULUS).contains(&n) {
        return Err(Error::InvalidParams(format!(
            "modulus exponent {n} not in 1..=3"
        )));
    }
    let mut out: Vec<CanonicalForm> = Vec::new();
    for lp in LambdaParams::all() {
        let canon = lp.canonical();
        if n == CLASS_MODULUS {
            let lifted = lift_representative::<BigInt>(&lp, DEFAULT_PRECISION)?;
            let lifted_canon = lifted.normalize(CLASS_MODULUS)?;
            assert_eq!(lifted_canon, canon, "lift of {lp} left its class");
            out.push(canon);
        } else {
            let t = canon.truncated(n);
            if !out.contains(&t) {
                out.push(t);
            }
        }
    }
    Ok(out)
}
