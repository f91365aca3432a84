use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::class_id::{ClassId, CLASS_COUNT};
use super::table::ClassTable;
use crate::error::{Error, Result};

/// Loop `x·y = u∘(x∘y)` for a fixed unit `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopTable {
    mul: Vec<ClassId>,
    unit: ClassId,
    inv: Vec<ClassId>,
}

impl LoopTable {
    /// Derive the loop with unit `unit`; inverses come from a row scan.
    pub fn from_table(t: &ClassTable, unit: ClassId) -> Result<Self> {
        let mul: Vec<ClassId> = ClassId::all()
            .flat_map(|x| ClassId::all().map(move |y| (x, y)))
            .map(|(x, y)| t.get(unit, t.get(x, y)))
            .collect();
        let mut l = LoopTable {
            mul,
            unit,
            inv: Vec::new(),
        };
        l.inv = ClassId::all()
            .map(|x| {
                ClassId::all()
                    .find(|&y| l.mul(x, y) == unit)
                    .ok_or_else(|| Error::InvalidParams(format!("class {x} has no inverse")))
            })
            .collect::<Result<_>>()?;
        Ok(l)
    }

    pub fn mul(&self, x: ClassId, y: ClassId) -> ClassId {
        self.mul[x.index() * CLASS_COUNT + y.index()]
    }

    pub fn unit(&self) -> ClassId {
        self.unit
    }

    pub fn inv(&self, x: ClassId) -> ClassId {
        self.inv[x.index()]
    }

    /// Overwrite one product; inverses are left as they were.
    pub fn set(&mut self, x: ClassId, y: ClassId, v: ClassId) {
        self.mul[x.index() * CLASS_COUNT + y.index()] = v;
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        ClassId::all()
            .map(|x| ClassId::all().map(|y| self.mul(x, y).index()).collect())
            .collect()
    }

    /// `xᵏ` by repeated left multiplication; `x⁰` is the unit.
    pub fn pow(&self, x: ClassId, k: u32) -> ClassId {
        (0..k).fold(self.unit, |acc, _| self.mul(x, acc))
    }
}

/// Result of one identity checked over all tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub tuples: u64,
    /// First failing tuple in lexicographic order.
    pub counterexample: Option<Vec<ClassId>>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.counterexample {
                None => writeln!(f, "  {:<28} ok ({} tuples)", c.name, c.tuples)?,
                Some(t) => {
                    let t: Vec<String> = t.iter().map(|x| x.to_string()).collect();
                    writeln!(f, "  {:<28} FAILED at ({})", c.name, t.join(", "))?
                }
            }
        }
        Ok(())
    }
}

fn check1(name: &'static str, holds: impl Fn(ClassId) -> bool + Sync) -> AxiomCheck {
    AxiomCheck {
        name,
        tuples: CLASS_COUNT as u64,
        counterexample: ClassId::all().find(|&x| !holds(x)).map(|x| vec![x]),
    }
}

fn check2(name: &'static str, holds: impl Fn(ClassId, ClassId) -> bool + Sync) -> AxiomCheck {
    let ids: Vec<ClassId> = ClassId::all().collect();
    let counterexample = ids
        .par_iter()
        .find_map_first(|&x| ClassId::all().find(|&y| !holds(x, y)).map(|y| vec![x, y]));
    AxiomCheck {
        name,
        tuples: (CLASS_COUNT as u64).pow(2),
        counterexample,
    }
}

fn check3(
    name: &'static str,
    holds: impl Fn(ClassId, ClassId, ClassId) -> bool + Sync,
) -> AxiomCheck {
    let ids: Vec<ClassId> = ClassId::all().collect();
    let counterexample = ids.par_iter().find_map_first(|&x| {
        ClassId::all().find_map(|y| {
            ClassId::all()
                .find(|&z| !holds(x, y, z))
                .map(|z| vec![x, y, z])
        })
    });
    AxiomCheck {
        name,
        tuples: (CLASS_COUNT as u64).pow(3),
        counterexample,
    }
}

/// Totally symmetric quasigroup: `x∘y = y∘x` and `x∘(x∘y) = y`.
pub fn verify_quasigroup(t: &ClassTable) -> AxiomReport {
    AxiomReport {
        checks: vec![
            check2("commutative", |x, y| t.get(x, y) == t.get(y, x)),
            check2("x∘(x∘y) = y", |x, y| t.get(x, t.get(x, y)) == y),
        ],
    }
}

/// Commutative Moufang loop identities, each over every tuple.
pub fn verify_cml(l: &LoopTable) -> AxiomReport {
    let m = |x, y| l.mul(x, y);
    let u = l.unit();
    AxiomReport {
        checks: vec![
            check2("commutative", |x, y| m(x, y) == m(y, x)),
            check1("unit", |x| m(u, x) == x && m(x, u) == x),
            check2("inverse", |x, y| {
                m(x, l.inv(x)) == u && m(l.inv(x), m(x, y)) == y
            }),
            check2("x(xy) = x²y", |x, y| m(x, m(x, y)) == m(m(x, x), y)),
            check3("(xy)(xz) = x²(yz)", |x, y, z| {
                m(m(x, y), m(x, z)) == m(m(x, x), m(y, z))
            }),
            check3("x(y(xz)) = (x²y)z", |x, y, z| {
                m(x, m(y, m(x, z))) == m(m(m(x, x), y), z)
            }),
        ],
    }
}

/// `x⁻¹ = x∘u` for every class.
pub fn verify_inverse_is_unit_product(t: &ClassTable, l: &LoopTable) -> AxiomCheck {
    check1("x⁻¹ = x∘u", |x| l.inv(x) == t.get(x, l.unit()))
}

/// Shorthand for [`LoopTable::from_table`].
pub fn loop_from(t: &ClassTable, unit: ClassId) -> Result<LoopTable> {
    LoopTable::from_table(t, unit)
}
