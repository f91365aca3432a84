use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::surface::{CanonicalForm, Family, LambdaParams};

/// Number of point classes modulo `𝔭³`.
pub const CLASS_COUNT: usize = LambdaParams::COUNT;

/// Index of a point class, `0..243`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassId(u8);

fn canonical_index() -> &'static HashMap<CanonicalForm, ClassId> {
    static INDEX: OnceLock<HashMap<CanonicalForm, ClassId>> = OnceLock::new();
    INDEX.get_or_init(|| {
        LambdaParams::all()
            .iter()
            .map(|lp| (lp.canonical(), ClassId(lp.index() as u8)))
            .collect()
    })
}

impl ClassId {
    pub fn new(id: usize) -> Option<Self> {
        (id < CLASS_COUNT).then_some(ClassId(id as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn params(self) -> LambdaParams {
        LambdaParams::from_index(self.index()).expect("class id in range")
    }

    pub fn canonical(self) -> CanonicalForm {
        self.params().canonical()
    }

    /// Class of a canonical form modulo `𝔭³`; `None` if it is not a point class.
    pub fn of(form: &CanonicalForm) -> Option<Self> {
        canonical_index().get(form).copied()
    }

    pub fn from_params(lp: &LambdaParams) -> Self {
        ClassId(lp.index() as u8)
    }

    pub fn all() -> impl Iterator<Item = ClassId> + Clone {
        (0..CLASS_COUNT as u8).map(ClassId)
    }

    /// `U0 = (1 : −1 : 0 : 0)`, the default unit.
    pub fn u0() -> Self {
        Self::label(Family::P, 0, [0, 0, 0])
    }

    /// `U1 = (1 : 0 : −1 : 0)`.
    pub fn u1() -> Self {
        Self::label(Family::Q, 0, [0, 0, 0])
    }

    /// `U2 = (0 : 1 : −1 : 0)`.
    pub fn u2() -> Self {
        Self::label(Family::R, 0, [0, 0, 0])
    }

    fn label(family: Family, exp: u8, digits: [i8; 3]) -> Self {
        Self::from_params(&LambdaParams::new(family, exp, digits).expect("valid label"))
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
