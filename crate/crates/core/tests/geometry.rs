use num_bigint::BigInt;
use proptest::prelude::*;

use cubic_cml::surface::{
    chord, hensel_lift_root, lift_representative, random_lift, LambdaParams, Point, UniPoly,
    CLASS_MODULUS,
};
use cubic_cml::{Error, RingElt};

type Pt = Point<BigInt>;

/// Chord at increasing precision until the result keeps a class's worth of digits.
fn chord_retry(x: &LambdaParams, y: &LambdaParams, s: (u64, u64)) -> Option<(Pt, Pt, Pt)> {
    let mut n = 12;
    loop {
        let p = random_lift::<BigInt>(x, n, s.0).unwrap();
        let q = random_lift::<BigInt>(y, n, s.1).unwrap();
        match chord(&p, &q) {
            Ok((r, _)) => return Some((p, q, r)),
            Err(Error::PrecisionExhausted { .. }) if n < 48 => n *= 2,
            Err(Error::PointsCoincide) => return None,
            Err(e) => panic!("{x} {y}: {e}"),
        }
    }
}

fn label() -> impl Strategy<Value = LambdaParams> {
    (0..LambdaParams::COUNT).prop_map(|i| LambdaParams::from_index(i).unwrap())
}

#[test]
fn chord_is_symmetric_on_all_representatives() {
    let reps: Vec<Pt> = LambdaParams::all()
        .iter()
        .map(|l| lift_representative(l, 24).unwrap())
        .collect();
    for (i, p) in reps.iter().enumerate() {
        for q in &reps[i + 1..] {
            let (r1, _) = chord(p, q).unwrap();
            let (r2, _) = chord(q, p).unwrap();
            assert_eq!(
                r1.normalize(CLASS_MODULUS).unwrap(),
                r2.normalize(CLASS_MODULUS).unwrap(),
                "{p} {q}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chord_stays_on_surface(x in label(), y in label(), s in any::<(u64, u64)>()) {
        if let Some((_, _, r)) = chord_retry(&x, &y, s) {
            let m = r.margin().unwrap().expect("lifted inputs are inexact");
            let f = r.normalized(m).unwrap().eval_form();
            prop_assert!(f.valuation().at_least(m), "F = {f:?} at margin {m}");
        }
    }

    #[test]
    fn chord_is_an_involution(x in label(), y in label(), s in any::<(u64, u64)>()) {
        if let Some((p, q, r)) = chord_retry(&x, &y, s) {
            let m = r.margin().unwrap().unwrap();
            match chord(&r, &q) {
                Ok((back, _)) => {
                    let k = back.margin().unwrap().unwrap().min(m);
                    prop_assert!(k >= CLASS_MODULUS);
                    prop_assert_eq!(back.normalize(k).unwrap(), p.normalize(k).unwrap());
                }
                // R and Q too close to separate at this precision
                Err(Error::PrecisionExhausted { .. }) | Err(Error::PointsCoincide) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }

    #[test]
    fn hensel_finds_simple_roots(a in -40i64..40, b in -40i64..40, c in -40i64..40, d in -40i64..40, n in 1u32..30) {
        // g(y) = (y − r)(y² + s) with r = a + bθ, s = 1 + 𝔭(c + dθ): r is a simple root
        let r = RingElt::from_i64(a, b);
        let s = &RingElt::one() + &(&RingElt::uniformizer() * &RingElt::from_i64(c, d));
        let coeffs = vec![-(&r * &s), s.clone(), -r.clone(), RingElt::one()];
        let g = UniPoly::new(coeffs);
        let noisy = &r + &RingElt::uniformizer().pow(n.min(3) + 1).scale(7);
        let root = hensel_lift_root(&g, &noisy, n + 4).unwrap();
        prop_assert!(g.eval(&root).valuation().at_least(n + 4));
        prop_assert!(root.equal_mod(&r, n).unwrap());
    }
}
