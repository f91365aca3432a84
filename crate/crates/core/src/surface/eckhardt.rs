use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{chord, derive_seed, random_lift, LambdaParams, Point, MAX_PRECISION};
use crate::error::{Error, Result};

/// `U0`, `U1`, `U2` with the coordinate pair each one swaps under `P ↦ U∘P`.
pub fn eckhardt_points() -> [(Point<BigInt>, (usize, usize)); 3] {
    [
        (Point::from_ints([1, -1, 0, 0]), (0, 1)),
        (Point::from_ints([1, 0, -1, 0]), (0, 2)),
        (Point::from_ints([0, 1, -1, 0]), (1, 2)),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EckhardtReport {
    pub checked: usize,
    /// `(which U, point)` for each failed swap.
    pub failures: Vec<(usize, String)>,
}

impl EckhardtReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compose each `Uᵢ` with `samples` random lifted points and compare the
/// result with the swapped point at full working precision. Points too close
/// to `Uᵢ` are relifted with more digits.
pub fn check_eckhardt_swaps(samples: usize, n: u32, seed: u64) -> Result<EckhardtReport> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (k, (u, (i, j))) in eckhardt_points().iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &[k as u64]));
        let mut s = 0;
        while s < samples {
            let lp =
                LambdaParams::from_index(rng.gen_range(0..LambdaParams::COUNT)).expect("in range");
            let (mut prec, lift_seed) = (n, rng.gen());
            let (p, r) = loop {
                let p = random_lift::<BigInt>(&lp, prec, lift_seed)?;
                match chord(u, &p) {
                    Ok((r, _)) => break (p, r),
                    Err(Error::PrecisionExhausted { .. }) if prec < MAX_PRECISION => {
                        prec = (2 * prec).min(MAX_PRECISION)
                    }
                    Err(e) => return Err(e),
                }
            };
            if !r.projectively_equal(&p.swapped(*i, *j))? {
                failures.push((k, p.to_string()));
            }
            checked += 1;
            s += 1;
        }
    }
    Ok(EckhardtReport { checked, failures })
}
