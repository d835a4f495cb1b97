//! Exact divisor-class calculus on the moduli spaces `M̄_g` and `M̄_{g,1}`.
//!
//! The crate models divisor classes in the standard bases, the quadratic
//! pushforward along the forgetful map, pullbacks, test curves given by
//! their intersection numbers, and the slope inequalities that follow from
//! them. All arithmetic is exact.

pub mod catalog;
pub mod cli;
pub mod curves;
pub mod error;
pub mod format;
pub mod picard;
pub mod pushpull;
pub mod scalar;
pub mod theorems;
pub mod verify;

pub use error::{Error, Result};
pub use picard::{
    AnyClass, Basis, ClassView, Coeff, DivisorClass, PartialDivisorClass, PointedDivisorClass,
    Slope, Space,
};
pub use scalar::{GenusPolynomial, Rational};
