use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::class_id::{ClassId, CLASS_COUNT};
use super::loops::LoopTable;
use super::table::ClassTable;
use crate::surface::{Family, LambdaParams};

fn assoc(l: &LoopTable, x: ClassId, y: ClassId, z: ClassId) -> bool {
    l.mul(l.mul(x, y), z) == l.mul(x, l.mul(y, z))
}

/// Least `e ≥ 1` with `xᵉ = 1` for every class, if one exists up to the loop order.
pub fn exponent(l: &LoopTable) -> Option<u32> {
    let orders: Option<Vec<u32>> = ClassId::all()
        .map(|x| (1..=CLASS_COUNT as u32).find(|&k| l.pow(x, k) == l.unit()))
        .collect();
    let lcm = orders?.into_iter().fold(1u32, num_integer::lcm);
    ClassId::all()
        .all(|x| l.pow(x, lcm) == l.unit())
        .then_some(lcm)
}

/// Elements `a` with `(ax)y = a(xy)` for all `x, y`.
///
/// In a commutative loop this is the whole nucleus.
pub fn nucleus(l: &LoopTable) -> Vec<ClassId> {
    let ids: Vec<ClassId> = ClassId::all().collect();
    ids.into_par_iter()
        .filter(|&a| ClassId::all().all(|x| ClassId::all().all(|y| assoc(l, a, x, y))))
        .collect()
}

/// Whether `set` contains the unit and is closed under products and inverses.
pub fn is_subloop(l: &LoopTable, set: &[ClassId]) -> bool {
    let s: BTreeSet<ClassId> = set.iter().copied().collect();
    s.contains(&l.unit())
        && s.iter()
            .all(|&x| s.contains(&l.inv(x)) && s.iter().all(|&y| s.contains(&l.mul(x, y))))
}

/// Subloop generated by `gens`, sorted.
pub fn subloop(l: &LoopTable, gens: &[ClassId]) -> Vec<ClassId> {
    let mut set: BTreeSet<ClassId> = gens.iter().copied().collect();
    set.insert(l.unit());
    loop {
        let current: Vec<ClassId> = set.iter().copied().collect();
        let before = set.len();
        for &x in &current {
            set.insert(l.inv(x));
            for &y in &current {
                set.insert(l.mul(x, y));
            }
        }
        if set.len() == before {
            return current;
        }
    }
}

/// Triples with `(xy)z ≠ x(yz)` in lexicographic order, at most `limit` of them.
pub fn find_nonassoc(l: &LoopTable, limit: usize) -> Vec<[ClassId; 3]> {
    let mut out = Vec::new();
    for x in ClassId::all() {
        for y in ClassId::all() {
            for z in ClassId::all() {
                if out.len() >= limit {
                    return out;
                }
                if !assoc(l, x, y, z) {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

/// Number of triples with `(xy)z ≠ x(yz)`.
pub fn count_nonassoc(l: &LoopTable) -> u64 {
    let ids: Vec<ClassId> = ClassId::all().collect();
    ids.par_iter()
        .map(|&x| {
            ClassId::all()
                .map(|y| ClassId::all().filter(|&z| !assoc(l, x, y, z)).count() as u64)
                .sum::<u64>()
        })
        .sum()
}

/// Both association orders of one triple, at the `∘` level and in the loop.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub triple: [ClassId; 3],
    pub unit: ClassId,
    /// `(xy)∘z`
    pub left_circ: ClassId,
    /// `x∘(yz)`
    pub right_circ: ClassId,
    /// `(xy)z`
    pub left: ClassId,
    /// `x(yz)`
    pub right: ClassId,
}

impl WitnessReport {
    pub fn is_violation(&self) -> bool {
        self.left != self.right
    }

    /// `Q0 = (1, −1+𝔭², 𝔭, −𝔭)`, `Q1 = U1`, `Q2 = (0, 1, −θ, 0)`.
    pub fn standard_triple() -> [ClassId; 3] {
        let id = |f, e, d| ClassId::from_params(&LambdaParams::new(f, e, d).expect("valid label"));
        [
            id(Family::P, 0, [1, 0, 0]),
            id(Family::Q, 0, [0, 0, 0]),
            id(Family::R, 1, [0, 0, 0]),
        ]
    }
}

/// Evaluate both association orders of `triple` in the loop with unit `l.unit()`.
pub fn witness(t: &ClassTable, l: &LoopTable, triple: [ClassId; 3]) -> WitnessReport {
    let [x, y, z] = triple;
    let xy = l.mul(x, y);
    let yz = l.mul(y, z);
    WitnessReport {
        triple,
        unit: l.unit(),
        left_circ: t.get(xy, z),
        right_circ: t.get(x, yz),
        left: l.mul(xy, z),
        right: l.mul(x, yz),
    }
}

/// Which triples the CH check visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChMode {
    Sampled {
        count: usize,
        seed: u64,
    },
    /// Every unordered triple; slow.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChReport {
    pub checked: usize,
    pub largest_closure: usize,
    /// Triples whose closure failed to be an abelian group under the induced law.
    pub failures: Vec<[ClassId; 3]>,
}

impl ChReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn circ_closure(t: &ClassTable, gens: &[ClassId]) -> Vec<ClassId> {
    let mut set: BTreeSet<ClassId> = gens.iter().copied().collect();
    loop {
        let current: Vec<ClassId> = set.iter().copied().collect();
        for &a in &current {
            for &b in &current {
                set.insert(t.get(a, b));
            }
        }
        if set.len() == current.len() {
            return current;
        }
    }
}

/// The closure is an abelian group under `a·b = u∘(a∘b)` with `u` its least element.
fn closure_is_abelian(t: &ClassTable, closure: &[ClassId]) -> bool {
    let u = closure[0];
    let m = |a, b| t.get(u, t.get(a, b));
    closure.iter().all(|&a| {
        closure
            .iter()
            .all(|&b| m(a, b) == m(b, a) && closure.iter().all(|&c| m(m(a, b), c) == m(a, m(b, c))))
    })
}

/// Random triples of classes, reproducible from `seed`.
pub fn ch_sample_triples(count: usize, seed: u64) -> Vec<[ClassId; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pick = || ClassId::new(rng.gen_range(0..CLASS_COUNT)).expect("in range");
    (0..count).map(|_| [pick(), pick(), pick()]).collect()
}

impl ChMode {
    pub fn triples(self) -> Vec<[ClassId; 3]> {
        match self {
            ChMode::Sampled { count, seed } => ch_sample_triples(count, seed),
            ChMode::Exhaustive => {
                let ids: Vec<ClassId> = ClassId::all().collect();
                let mut v = Vec::new();
                for (i, &x) in ids.iter().enumerate() {
                    for (j, &y) in ids.iter().enumerate().skip(i) {
                        for &z in &ids[j..] {
                            v.push([x, y, z]);
                        }
                    }
                }
                v
            }
        }
    }
}

/// Check that each triple generates a subquasigroup that becomes an abelian
/// group once a unit is fixed inside it.
pub fn ch_check(t: &ClassTable, triples: &[[ClassId; 3]]) -> ChReport {
    let closures: Vec<Vec<ClassId>> = triples.par_iter().map(|tr| circ_closure(t, tr)).collect();
    // many triples share a closure; check each distinct one once
    let distinct: BTreeSet<&Vec<ClassId>> = closures.iter().collect();
    let bad: BTreeSet<&Vec<ClassId>> = distinct
        .into_par_iter()
        .filter(|c| !closure_is_abelian(t, c))
        .collect();
    ChReport {
        checked: triples.len(),
        largest_closure: closures.iter().map(Vec::len).max().unwrap_or(0),
        failures: triples
            .iter()
            .zip(&closures)
            .filter(|(_, c)| bad.contains(c))
            .map(|(tr, _)| *tr)
            .collect(),
    }
}
