use std::sync::OnceLock;

use proptest::prelude::*;

use cubic_cml::moufang::{
    build_class_table, ch_check, is_subloop, loop_from, nucleus, subloop, ChMode, ClassId,
    ClassTable, LoopTable, TableConfig, WitnessReport,
};

fn table() -> &'static ClassTable {
    static T: OnceLock<ClassTable> = OnceLock::new();
    T.get_or_init(|| {
        let cfg = TableConfig {
            admissibility_cells: 50,
            lift_samples: 5,
            seed: 42,
            ..TableConfig::default()
        };
        build_class_table(&cfg).unwrap()
    })
}

fn default_loop() -> &'static LoopTable {
    static L: OnceLock<LoopTable> = OnceLock::new();
    L.get_or_init(|| loop_from(table(), ClassId::u0()).unwrap())
}

fn id() -> impl Strategy<Value = ClassId> {
    (0..243usize).prop_map(|i| ClassId::new(i).unwrap())
}

fn is_power_of_three(mut n: usize) -> bool {
    while n > 1 && n.is_multiple_of(3) {
        n /= 3;
    }
    n == 1
}

#[test]
fn table_does_not_depend_on_seed() {
    let other = build_class_table(&TableConfig {
        admissibility_cells: 10,
        lift_samples: 2,
        seed: 7,
        ..TableConfig::default()
    })
    .unwrap();
    assert_eq!(other.rows(), table().rows());
}

#[test]
fn sampled_triples_generate_abelian_subquasigroups() {
    let r = ch_check(
        table(),
        &ChMode::Sampled {
            count: 1000,
            seed: 1,
        }
        .triples(),
    );
    assert!(r.passed(), "{:?}", &r.failures[..r.failures.len().min(5)]);
    assert_eq!(r.checked, 1000);
    let units = ch_check(table(), &[[ClassId::u0(), ClassId::u1(), ClassId::u2()]]);
    assert!(units.passed());
}

#[test]
fn nucleus_is_an_associative_subloop() {
    let l = default_loop();
    let n = nucleus(l);
    assert!(is_subloop(l, &n));
    assert!(is_power_of_three(n.len()));
    for &a in &n {
        for &b in &n {
            for &c in &n {
                assert_eq!(l.mul(l.mul(a, b), c), l.mul(a, l.mul(b, c)));
            }
        }
    }
}

#[test]
fn witness_generates_a_three_power_subloop() {
    let s = subloop(default_loop(), &WitnessReport::standard_triple());
    assert!(is_power_of_three(s.len()), "{}", s.len());
    assert!(s.len() > 9);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cyclic_subloops_have_order_three(x in id()) {
        let l = default_loop();
        let expected = if x == l.unit() { 1 } else { 3 };
        prop_assert_eq!(subloop(l, &[x]).len(), expected);
    }

    #[test]
    fn loop_units_are_interchangeable(u in id(), x in id(), y in id()) {
        // x·y with unit u equals u∘(x∘y), and u∘u = u makes x⁻¹ = x∘u
        let t = table();
        let l = loop_from(t, u).unwrap();
        prop_assert_eq!(l.mul(x, y), t.get(u, t.get(x, y)));
        prop_assert_eq!(l.inv(x), t.get(x, u));
        prop_assert_eq!(l.mul(l.unit(), x), x);
    }

    #[test]
    fn moufang_identity_holds(x in id(), y in id(), z in id()) {
        let l = default_loop();
        let m = |a, b| l.mul(a, b);
        // (xy)(zx) = (x(yz))x
        prop_assert_eq!(m(m(x, y), m(z, x)), m(m(x, m(y, z)), x));
    }
}
