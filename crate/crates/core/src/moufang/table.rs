use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::class_id::{ClassId, CLASS_COUNT};
use crate::error::{Error, Result};
use crate::surface::{
    chord, derive_seed, lift_representative, random_lift, Point, CLASS_MODULUS, DEFAULT_PRECISION,
    MAX_PRECISION,
};

const ADMISSIBILITY_TAG: u64 = 0xAD;
const DIAGONAL_TAG: u64 = 0xD1;
const MAX_RESEEDS: u64 = 8;

/// Parameters of a table build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableConfig {
    pub precision: u32,
    pub lift_samples: usize,
    pub admissibility_cells: usize,
    pub seed: u64,
}

impl Default for TableConfig {
    fn default() -> Self {
        TableConfig {
            precision: DEFAULT_PRECISION,
            lift_samples: 20,
            admissibility_cells: 500,
            seed: 0,
        }
    }
}

/// Outcome of the representative-independence sampling.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityStats {
    pub cells: usize,
    pub pairs: usize,
    pub passed: usize,
    pub failed: usize,
}

/// The `∘` table on the 243 classes, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTable {
    circ: Vec<ClassId>,
    config: TableConfig,
    admissibility: AdmissibilityStats,
}

impl ClassTable {
    /// Wrap an existing table, e.g. one read back from disk.
    pub fn from_rows(rows: &[Vec<usize>], config: TableConfig) -> Result<Self> {
        if rows.len() != CLASS_COUNT || rows.iter().any(|r| r.len() != CLASS_COUNT) {
            return Err(Error::Parse(format!(
                "table must be {CLASS_COUNT}x{CLASS_COUNT}"
            )));
        }
        let circ = rows
            .iter()
            .flatten()
            .map(|&v| {
                ClassId::new(v).ok_or_else(|| Error::Parse(format!("class id {v} out of range")))
            })
            .collect::<Result<_>>()?;
        Ok(ClassTable {
            circ,
            config,
            admissibility: AdmissibilityStats::default(),
        })
    }

    pub fn get(&self, x: ClassId, y: ClassId) -> ClassId {
        self.circ[x.index() * CLASS_COUNT + y.index()]
    }

    /// Overwrite one cell; only useful for building broken tables in tests.
    pub fn set(&mut self, x: ClassId, y: ClassId, v: ClassId) {
        self.circ[x.index() * CLASS_COUNT + y.index()] = v;
    }

    pub fn row(&self, x: ClassId) -> &[ClassId] {
        &self.circ[x.index() * CLASS_COUNT..(x.index() + 1) * CLASS_COUNT]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        ClassId::all()
            .map(|x| self.row(x).iter().map(|c| c.index()).collect())
            .collect()
    }

    pub fn config(&self) -> &TableConfig {
        &self.config
    }

    pub fn admissibility(&self) -> AdmissibilityStats {
        self.admissibility
    }
}

fn compose_points(p: &Point<BigInt>, q: &Point<BigInt>) -> Result<ClassId> {
    let (r, _) = chord(p, q)?;
    let form = r.normalize(CLASS_MODULUS)?;
    ClassId::of(&form).ok_or_else(|| {
        let f = form.to_point::<BigInt>().eval_form();
        Error::NotOnSurface(f.valuation().lower_bound())
    })
}

/// Compose two classes through a pair of representatives produced by `reps`,
/// doubling the precision on shortfall and drawing fresh lifts when the two
/// representatives coincide.
fn compose_with<F>(n0: u32, mut reps: F) -> Result<ClassId>
where
    F: FnMut(u32, u64) -> Result<(Point<BigInt>, Point<BigInt>)>,
{
    let mut n = n0;
    loop {
        let mut last = Error::PointsCoincide;
        for attempt in 0..MAX_RESEEDS {
            let (p, q) = reps(n, attempt)?;
            match compose_points(&p, &q) {
                Ok(c) => return Ok(c),
                Err(Error::PointsCoincide) => last = Error::PointsCoincide,
                Err(e) => {
                    last = e;
                    break;
                }
            }
        }
        match last {
            Error::PrecisionExhausted { .. } if n < MAX_PRECISION => n = (2 * n).min(MAX_PRECISION),
            e => return Err(e),
        }
    }
}

fn random_pair(
    x: ClassId,
    y: ClassId,
    n: u32,
    seed: u64,
) -> Result<(Point<BigInt>, Point<BigInt>)> {
    let p = random_lift(&x.params(), n, derive_seed(seed, &[0]))?;
    let q = random_lift(&y.params(), n, derive_seed(seed, &[1]))?;
    Ok((p, q))
}

/// `x ∘ y` from one pair of representatives at working precision `n`.
///
/// Distinct classes use the fixed Hensel lifts; a class composed with itself
/// uses two random lifts, since a point cannot be composed with itself.
pub fn compose_classes(x: ClassId, y: ClassId, n: u32, seed: u64) -> Result<ClassId> {
    compose_cell(x, y, n, seed, None)
}

fn compose_cell(
    x: ClassId,
    y: ClassId,
    n: u32,
    seed: u64,
    cached: Option<(u32, &[Point<BigInt>])>,
) -> Result<ClassId> {
    compose_with(n, |n, attempt| {
        if x == y {
            let s = derive_seed(seed, &[DIAGONAL_TAG, x.index() as u64, attempt]);
            return random_pair(x, y, n, s);
        }
        match cached {
            Some((at, reps)) if at == n => Ok((reps[x.index()].clone(), reps[y.index()].clone())),
            _ => Ok((
                lift_representative(&x.params(), n)?,
                lift_representative(&y.params(), n)?,
            )),
        }
    })
}

fn sample_cell(x: ClassId, y: ClassId, n: u32, seed: u64, sample: usize) -> Result<ClassId> {
    compose_with(n, |n, attempt| {
        let s = derive_seed(
            seed,
            &[
                ADMISSIBILITY_TAG,
                x.index() as u64,
                y.index() as u64,
                sample as u64,
                attempt,
            ],
        );
        random_pair(x, y, n, s)
    })
}

/// Build the full `∘` table and sample representative independence.
///
/// Every ordered pair is composed separately, so symmetry is a checked
/// property of the result rather than an assumption. Any sampled pair of
/// representatives that lands in a different class aborts the build.
pub fn build_class_table(config: &TableConfig) -> Result<ClassTable> {
    if config.precision < DEFAULT_PRECISION {
        return Err(Error::InvalidParams(format!(
            "table precision must be at least {DEFAULT_PRECISION}, got {}",
            config.precision
        )));
    }
    let n = config.precision;
    let reps: Vec<Point<BigInt>> = ClassId::all()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|c| lift_representative(&c.params(), n))
        .collect::<Result<_>>()?;

    let rows: Vec<Vec<ClassId>> = ClassId::all()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&x| {
            ClassId::all()
                .map(|y| compose_cell(x, y, n, config.seed, Some((n, &reps))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let circ: Vec<ClassId> = rows.into_iter().flatten().collect();

    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(config.seed, &[ADMISSIBILITY_TAG]));
    let cells: Vec<(ClassId, ClassId)> = (0..config.admissibility_cells)
        .map(|_| {
            let x = ClassId::new(rng.gen_range(0..CLASS_COUNT)).expect("in range");
            let y = ClassId::new(rng.gen_range(0..CLASS_COUNT)).expect("in range");
            (x, y)
        })
        .collect();
    let checked: Vec<usize> = cells
        .par_iter()
        .map(|&(x, y)| {
            let expected = circ[x.index() * CLASS_COUNT + y.index()];
            for s in 0..config.lift_samples {
                let found = sample_cell(x, y, n, config.seed, s)?;
                if found != expected {
                    return Err(Error::AdmissibilityViolation {
                        row: x.index() as u8,
                        col: y.index() as u8,
                        expected: expected.index() as u8,
                        found: found.index() as u8,
                    });
                }
            }
            Ok(config.lift_samples)
        })
        .collect::<Result<_>>()?;
    let pairs = checked.iter().sum();

    Ok(ClassTable {
        circ,
        config: *config,
        admissibility: AdmissibilityStats {
            cells: cells.len(),
            pairs,
            passed: pairs,
            failed: 0,
        },
    })
}
