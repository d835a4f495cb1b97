use thiserror::Error;

use crate::picard::{Basis, Space};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("polynomial degree {degree} exceeds the cap of {cap}")]
    DegreeOverflow { degree: usize, cap: usize },

    #[error("identity check needs at least {needed} distinct sample genera, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("genus {0} is not supported here (need {1})")]
    InvalidGenus(u32, &'static str),

    #[error("basis element {basis} is not valid on {space} of genus {genus}")]
    InvalidBasis {
        basis: Basis,
        space: Space,
        genus: u32,
    },

    #[error("cannot combine a class on {left} with a class on {right}")]
    SpaceMismatch { left: Space, right: Space },

    #[error("cannot combine classes of genus {left} and {right}")]
    GenusMismatch { left: u32, right: u32 },

    #[error("indeterminate: unknown coefficient reaches {0}")]
    Indeterminate(String),

    #[error("coefficient of {0} is unknown")]
    UnknownCoefficient(Basis),

    #[error("partial class where a full class is required")]
    PartialClass,

    #[error("{0}")]
    Domain(String),

    #[error("outside certified range: {0}")]
    OutsideScope(String),

    #[error("consistency failure: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
