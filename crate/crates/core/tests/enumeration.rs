mod common;

use std::collections::BTreeSet;

use cubic_cml::surface::{enumerate_classes, LambdaParams};

fn library(n: u32) -> BTreeSet<[Vec<i8>; 4]> {
    enumerate_classes(n)
        .unwrap()
        .iter()
        .map(|c| c.digit_rows())
        .collect()
}

#[test]
fn brute_force_agrees_at_every_level() {
    for n in 1..=3 {
        let oracle = common::brute_force_classes(n);
        assert_eq!(library(n as u32), oracle, "level {n}");
    }
}

#[test]
fn label_forms_are_exactly_the_classes() {
    let labels: BTreeSet<[Vec<i8>; 4]> = LambdaParams::all()
        .iter()
        .map(|l| l.canonical().digit_rows())
        .collect();
    assert_eq!(labels, common::brute_force_classes(3));
}

#[test]
fn coarser_levels_are_truncations() {
    let three = enumerate_classes(3).unwrap();
    for n in 1..=2 {
        let truncated: BTreeSet<_> = three.iter().map(|c| c.truncated(n).digit_rows()).collect();
        assert_eq!(truncated, library(n));
    }
}

#[test]
fn oracle_arithmetic_sanity() {
    use common::{form, from_digits, P, THETA, Z3};
    // θ² + θ + 1 = 0 and 𝔭² = −3θ
    assert_eq!(THETA.mul(THETA).add(THETA).add(Z3(1, 0)), Z3(0, 0));
    assert_eq!(P.mul(P), Z3(0, -3));
    assert_eq!(P.val(), Some(1));
    assert_eq!(Z3(3, 0).val(), Some(2));
    assert_eq!(
        from_digits(&[1, -1, 1]),
        Z3(1, 0).add(Z3(-1, 0).mul(P)).add(P.mul(P))
    );
    assert_eq!(form([Z3(1, 0), Z3(-1, 0), Z3(0, 0), Z3(0, 0)]).val(), None);
}
