use std::fmt;

use serde::Serialize;

use super::analysis::{count_nonassoc, exponent, find_nonassoc, nucleus};
use super::class_id::{ClassId, CLASS_COUNT};
use super::loops::LoopTable;
use super::table::{AdmissibilityStats, ClassTable};

const WITNESS_SAMPLES: usize = 5;

/// Summary of the loop structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoopReport {
    pub order: usize,
    pub unit: ClassId,
    pub exponent: Option<u32>,
    pub nucleus: Vec<ClassId>,
    pub witness_count: u64,
    pub witnesses: Vec<[ClassId; 3]>,
    pub admissibility: AdmissibilityStats,
}

pub fn loop_report(t: &ClassTable, l: &LoopTable) -> LoopReport {
    LoopReport {
        order: CLASS_COUNT,
        unit: l.unit(),
        exponent: exponent(l),
        nucleus: nucleus(l),
        witness_count: count_nonassoc(l),
        witnesses: find_nonassoc(l, WITNESS_SAMPLES),
        admissibility: t.admissibility(),
    }
}

impl fmt::Display for LoopReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order              {}", self.order)?;
        writeln!(
            f,
            "unit               {} ({})",
            self.unit,
            self.unit.canonical()
        )?;
        match self.exponent {
            Some(e) => writeln!(f, "exponent           {e}")?,
            None => writeln!(f, "exponent           none")?,
        }
        let ids: Vec<String> = self.nucleus.iter().map(|c| c.to_string()).collect();
        writeln!(f, "nucleus size       {}", self.nucleus.len())?;
        writeln!(f, "nucleus            {}", ids.join(" "))?;
        writeln!(f, "non-assoc triples  {}", self.witness_count)?;
        for [x, y, z] in &self.witnesses {
            writeln!(f, "  ({x}, {y}, {z})")?;
        }
        let a = &self.admissibility;
        write!(
            f,
            "admissibility      {} cells, {} pairs, {} passed, {} failed",
            a.cells, a.pairs, a.passed, a.failed
        )
    }
}
