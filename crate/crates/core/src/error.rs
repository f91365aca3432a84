use thiserror::Error;

/// Errors raised by the arithmetic, geometry and loop layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precision exhausted: need {needed} p-adic digits, only {available} available")]
    PrecisionExhausted { needed: u32, available: u32 },

    #[error("element has positive valuation and is not invertible")]
    NonUnitInverse,

    #[error("quotient is not integral: numerator valuation {numerator} < denominator valuation {denominator}")]
    NonIntegralQuotient { numerator: u32, denominator: u32 },

    #[error("points coincide at working precision")]
    PointsCoincide,

    #[error("chord coefficients vanish for distinct points (line contained in the surface)")]
    DegenerateLine,

    #[error("direction does not lie in the tangent plane")]
    NotTangentDirection,

    #[error("Hensel criterion v(g(y0)) > 2 v(g'(y0)) fails")]
    HenselCriterionFailed,

    #[error("point is not on the surface (F has valuation {0})")]
    NotOnSurface(u32),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("admissibility violated for cell ({row}, {col}): expected {expected}, got {found}")]
    AdmissibilityViolation {
        row: u8,
        col: u8,
        expected: u8,
        found: u8,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
