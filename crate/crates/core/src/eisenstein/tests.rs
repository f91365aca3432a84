use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::literal::{format_digits, format_exact, parse_element};
use super::*;
use crate::error::Error;

type E = Eisenstein<BigInt>;

fn e(a: i64, b: i64) -> E {
    E::from_i64(a, b)
}

fn lit(s: &str) -> E {
    parse_element(s).unwrap()
}

/// Valuation oracle independent of `Eisenstein::valuation`: strip factors of 3
/// from the integer norm by repeated division.
fn norm_valuation(a: i64, b: i64) -> u32 {
    let mut n = (a as i128) * (a as i128) - (a as i128) * (b as i128) + (b as i128) * (b as i128);
    assert!(n != 0);
    let mut v = 0;
    while n % 3 == 0 {
        n /= 3;
        v += 1;
    }
    v
}

#[test]
fn theta_identities() {
    let t = E::theta();
    let p = E::uniformizer();
    assert_eq!(&t * &t.pow(2), E::one());
    assert_eq!(t.pow(3), E::one());
    assert_eq!(&(&E::one() + &t) + &t.pow(2), E::zero());
    assert_eq!(&p * &p, &e(-3, 0) * &t);
    assert_eq!(e(3, 0), -(&t.pow(2) * &p.pow(2)));
    assert_eq!(&e(2, 0) + &e(1, 0), e(3, 0));
}

#[test]
fn multiplication_rule() {
    // (a+bθ)(c+dθ) = (ac−bd) + (ad+bc−bd)θ
    let x = e(2, 5);
    let y = e(-3, 7);
    assert_eq!(&x * &y, e(2 * -3 - 5 * 7, 2 * 7 + 5 * -3 - 5 * 7));
}

#[test]
fn precision_propagates_as_minimum() {
    let x = e(1, 2).with_precision(5);
    let y = e(4, 1).with_precision(3);
    assert_eq!((&x + &y).precision(), Precision::Capped(3));
    assert_eq!((&x * &y).precision(), Precision::Capped(3));
    assert_eq!((&x * &E::one()).precision(), Precision::Capped(5));
}

#[test]
fn valuation_examples() {
    assert_eq!(e(3, 0).valuation(), Valuation::Finite(2));
    assert_eq!(E::uniformizer().valuation(), Valuation::Finite(1));
    assert_eq!(e(1, 1).valuation(), Valuation::Finite(0));
    assert_eq!(E::zero().valuation(), Valuation::Infinite);
    assert_eq!(e(9, 0).with_precision(3).valuation(), Valuation::AtLeast(3));
    assert!(e(9, 0).with_precision(3).valuation().is_below_precision());
    assert_eq!(e(3, 0).with_precision(3).valuation(), Valuation::Finite(2));
}

#[test]
fn digit_examples() {
    assert_eq!(E::theta().to_digits(3).unwrap().digits(), &[1, -1, 0]);
    assert_eq!(
        E::uniformizer().pow(2).to_digits(3).unwrap().digits(),
        &[0, 0, 1]
    );

    // 2 − (−1 − 𝔭²) = 3 + 𝔭² = 3 − 3θ, norm 27
    assert_eq!(norm_valuation(3, -3), 3);
    assert_eq!(e(2, 0).to_digits(3).unwrap().digits(), &[-1, 0, -1]);
}

#[test]
fn to_digits_needs_precision() {
    let x = e(5, 1).with_precision(2);
    assert_eq!(
        x.to_digits(3),
        Err(Error::PrecisionExhausted {
            needed: 3,
            available: 2
        })
    );
}

#[test]
fn invert_examples() {
    let t = E::theta();
    let inv = t.invert(6).unwrap();
    assert!(inv.equal_mod(&e(-1, -1), 6).unwrap());

    let one_plus_p = lit("1+p");
    let inv = one_plus_p.invert(3).unwrap();
    assert!(inv.equal_mod(&lit("1-p+p^2"), 3).unwrap());
    // multiply back
    assert!((&one_plus_p * &inv).equal_mod(&E::one(), 3).unwrap());

    assert_eq!(E::uniformizer().invert(5), Err(Error::NonUnitInverse));
}

#[test]
fn div_exact_examples() {
    let q = e(3, 0).div_exact(&E::uniformizer(), 6).unwrap();
    assert!(q.equal_mod(&lit("-T^2*p"), 5).unwrap());

    let x = e(7, -4);
    assert_eq!(x.div_exact(&E::one(), 10).unwrap(), x);

    assert!(matches!(
        E::one().div_exact(&E::uniformizer(), 6),
        Err(Error::NonIntegralQuotient {
            numerator: 0,
            denominator: 1
        })
    ));
}

#[test]
fn div_exact_tracks_precision() {
    // 9 / 2 with 2 a non-trivial unit: truncated to n − v(y)
    let q = e(9, 0).div_exact(&e(2, 0), 8).unwrap();
    assert_eq!(q.precision(), Precision::Capped(8));
    assert!((&q * &e(2, 0)).equal_mod(&e(9, 0), 8).unwrap());

    let q = e(9, 0).div_exact(&e(6, 0), 8).unwrap();
    assert_eq!(q.precision(), Precision::Capped(6));
    assert!((&q * &e(6, 0)).equal_mod(&e(9, 0), 6).unwrap());

    let coarse = e(9, 0).with_precision(3).div_exact(&e(3, 0), 6).unwrap();
    assert_eq!(coarse.precision(), Precision::Capped(1));
    let tiny = e(9, 0).with_precision(2);
    assert!(matches!(
        tiny.div_exact(&e(3, 0), 6),
        Err(Error::PrecisionExhausted { .. })
    ));
}

#[test]
fn equal_mod_examples() {
    let p = E::uniformizer();
    assert!(!p.equal_mod(&lit("p-p^2"), 3).unwrap());
    assert!(p.equal_mod(&p, 7).unwrap());
    assert!(e(2, 0).equal_mod(&e(-1, 0), 2).unwrap());
    assert!(!e(2, 0).equal_mod(&e(-1, 0), 3).unwrap());
    assert!(e(1, 0).with_precision(2).equal_mod(&E::one(), 3).is_err());
}

#[test]
fn valuation_is_multiplicative_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 10_000 {
        let (a, b, c, d) = (
            rng.gen_range(-500..=500i64),
            rng.gen_range(-500..=500i64),
            rng.gen_range(-500..=500i64),
            rng.gen_range(-500..=500i64),
        );
        let (x, y) = (e(a, b), e(c, d));
        if x.is_zero_repr() || y.is_zero_repr() {
            continue;
        }
        let vx = x.valuation().finite().unwrap();
        let vy = y.valuation().finite().unwrap();
        assert_eq!(vx, norm_valuation(a, b));
        assert_eq!((&x * &y).valuation(), Valuation::Finite(vx + vy));
        assert!((&x + &y).valuation().lower_bound() >= vx.min(vy));
        checked += 1;
    }
}

#[test]
fn literal_printing() {
    assert_eq!(format_exact(&lit("-T")), "-T");
    assert_eq!(format_exact(&lit("1+T")), "1+T");
    assert_eq!(format_exact(&lit("0")), "0");
    assert_eq!(format_exact(&e(2, -3)), "2-3*T");
    assert_eq!(
        format_digits(&DigitVector::new(vec![-1, -1, 1])),
        "-1-p+p^2"
    );
    assert_eq!(format_digits(&DigitVector::new(vec![0, 1, -1])), "p-p^2");
    assert_eq!(format_digits(&DigitVector::zeros(3)), "0");
}

#[test]
fn literal_grammar() {
    assert_eq!(lit("-1+p^2"), &e(-1, 0) + &E::uniformizer().pow(2));
    assert_eq!(lit("(1+T)*p^2"), &e(1, 1) * &E::uniformizer().pow(2));
    assert_eq!(lit("-p^2"), -E::uniformizer().pow(2));
    assert_eq!(lit("2*-T"), e(0, -2));
    assert_eq!(lit("T^3"), E::one());
    assert!(parse_element::<BigInt>("1+").is_err());
    assert!(parse_element::<BigInt>("(1").is_err());
    assert!(parse_element::<BigInt>("x").is_err());
    assert!(parse_element::<BigInt>("").is_err());
    assert!(parse_element::<BigInt>("p^T").is_err());
}

#[test]
fn digit_vector_text_form() {
    let d: DigitVector = "[1,-1,0]".parse().unwrap();
    assert_eq!(d.digits(), &[1, -1, 0]);
    assert_eq!(d.to_string(), "[1,-1,0]");
    assert!("[2]".parse::<DigitVector>().is_err());
    assert!("1,0".parse::<DigitVector>().is_err());
}

#[test]
fn small_and_big_coefficients_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let (a, b, c, d) = (
            rng.gen_range(-1000..=1000i64),
            rng.gen_range(-1000..=1000i64),
            rng.gen_range(-1000..=1000i64),
            rng.gen_range(-1000..=1000i64),
        );
        let big = &e(a, b) * &e(c, d);
        let small = &Eisenstein::<i128>::from_i64(a, b) * &Eisenstein::<i128>::from_i64(c, d);
        assert_eq!(big.a().to_string(), small.a().to_string());
        assert_eq!(big.b().to_string(), small.b().to_string());
        assert_eq!(big.valuation(), small.valuation());
        if small.is_unit() {
            let n = 9;
            assert_eq!(
                big.invert(n).unwrap().to_digits(n).unwrap(),
                small.invert(n).unwrap().to_digits(n).unwrap()
            );
        }
    }
}

fn arb_elt() -> impl Strategy<Value = E> {
    (-100_000i64..100_000, -100_000i64..100_000).prop_map(|(a, b)| e(a, b))
}

proptest! {
    #[test]
    fn digits_round_trip(x in arb_elt(), n in 1u32..=24) {
        let d = x.to_digits(n).unwrap();
        prop_assert_eq!(d.len(), n as usize);
        prop_assert!(d.to_element::<BigInt>().equal_mod(&x, n).unwrap());
    }

    #[test]
    fn first_nonzero_digit_is_valuation(x in arb_elt()) {
        prop_assume!(!x.is_zero_repr());
        let d = x.to_digits(20).unwrap();
        match x.valuation().finite() {
            Some(v) if v < 20 => prop_assert_eq!(d.leading_index(), Some(v as usize)),
            _ => prop_assert_eq!(d.leading_index(), None),
        }
    }

    #[test]
    fn invert_contract(x in arb_elt(), n in 1u32..=30) {
        prop_assume!(x.is_unit());
        let inv = x.invert(n).unwrap();
        prop_assert!((&x * &inv).equal_mod(&E::one(), n).unwrap());
    }

    #[test]
    fn div_exact_contract(x in arb_elt(), y in arb_elt(), k in 0u32..4) {
        prop_assume!(!y.is_zero_repr());
        let num = &x * &y.pow(1) * E::uniformizer().pow(k);
        let q = num.div_exact(&y, 16).unwrap();
        let vy = y.valuation().finite().unwrap();
        let prec = q.precision().available(16);
        prop_assert!(prec + vy >= 16 || q.is_exact());
        prop_assert!((&q * &y).equal_mod(&num, prec.min(16)).unwrap());
    }

    #[test]
    fn literal_round_trip(x in arb_elt()) {
        prop_assert_eq!(parse_element::<BigInt>(&format_exact(&x)).unwrap(), x);
    }
}
