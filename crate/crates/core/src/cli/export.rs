//! JSON and CSV forms of the class and loop tables.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moufang::{loop_from, ClassId, ClassTable, LoopTable, TableConfig};

#[derive(Debug, Serialize, Deserialize)]
struct ClassEntry {
    id: usize,
    family: String,
    exp: u8,
    digits: [i8; 3],
    rep: [Vec<i8>; 4],
}

#[derive(Debug, Serialize, Deserialize)]
struct TableFile {
    modulus: String,
    precision: u32,
    unit: usize,
    classes: Vec<ClassEntry>,
    circ: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

const MODULUS: &str = "p^3";

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("i/o: {e}"))
}

pub fn write_json<W: Write>(t: &ClassTable, l: &LoopTable, mut w: W) -> Result<()> {
    let classes = ClassId::all()
        .map(|c| {
            let lp = c.params();
            ClassEntry {
                id: c.index(),
                family: lp.family().to_string(),
                exp: lp.exp(),
                digits: lp.digits(),
                rep: lp.canonical().digit_rows(),
            }
        })
        .collect();
    let file = TableFile {
        modulus: MODULUS.to_string(),
        precision: t.config().precision,
        unit: l.unit().index(),
        classes,
        circ: t.rows(),
        mul: l.rows(),
    };
    serde_json::to_writer(&mut w, &file).map_err(io_err)?;
    writeln!(w).map_err(io_err)
}

/// Read a table written by [`write_json`], checking that the stored loop
/// agrees with the one derived from `circ` and the stored unit.
pub fn read_json<R: Read>(r: R) -> Result<(ClassTable, LoopTable)> {
    let file: TableFile = serde_json::from_reader(r).map_err(|e| Error::Parse(e.to_string()))?;
    if file.modulus != MODULUS {
        return Err(Error::Parse(format!(
            "unsupported modulus {:?}",
            file.modulus
        )));
    }
    for (i, entry) in file.classes.iter().enumerate() {
        let c = ClassId::new(i).ok_or_else(|| Error::Parse("too many classes".into()))?;
        if entry.id != i || entry.rep != c.canonical().digit_rows() {
            return Err(Error::Parse(format!("class {i} does not match its label")));
        }
    }
    let config = TableConfig {
        precision: file.precision,
        ..TableConfig::default()
    };
    let t = ClassTable::from_rows(&file.circ, config)?;
    let unit = ClassId::new(file.unit)
        .ok_or_else(|| Error::Parse(format!("unit {} out of range", file.unit)))?;
    let l = loop_from(&t, unit)?;
    if l.rows() != file.mul {
        return Err(Error::Parse(
            "mul table disagrees with circ and unit".into(),
        ));
    }
    Ok((t, l))
}

pub fn write_csv<W: Write>(t: &ClassTable, l: &LoopTable, w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["op", "row", "col", "value"])
        .map_err(io_err)?;
    for (op, rows) in [("circ", t.rows()), ("mul", l.rows())] {
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out.write_record([op, &i.to_string(), &j.to_string(), &v.to_string()])
                    .map_err(io_err)?;
            }
        }
    }
    out.flush().map_err(io_err)
}
