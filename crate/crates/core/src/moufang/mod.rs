//! The class composition table and the commutative Moufang loop it defines.
//!
//! Classes of points modulo `𝔭³` are numbered `0..243` in label order
//! (family, then exponent, then digits). `circ` is the chord composition of
//! classes; fixing a unit `u` gives the loop `x·y = u∘(x∘y)`.

mod analysis;
mod class_id;
mod loops;
mod report;
mod table;

pub use analysis::{
    ch_check, ch_sample_triples, count_nonassoc, exponent, find_nonassoc, is_subloop, nucleus,
    subloop, witness, ChMode, ChReport, WitnessReport,
};
pub use class_id::{ClassId, CLASS_COUNT};
pub use loops::{
    loop_from, verify_cml, verify_inverse_is_unit_product, verify_quasigroup, AxiomCheck,
    AxiomReport, LoopTable,
};
pub use report::{loop_report, LoopReport};
pub use table::{build_class_table, compose_classes, AdmissibilityStats, ClassTable, TableConfig};
