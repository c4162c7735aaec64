//! Formula representations shared by every logic in the crate.
//!
//! Each family renders to the canonical ASCII syntax through `Display`.
//! Rendering only omits parentheses where the reading cannot depend on the
//! relative precedence of two different operators: a composite operand of a
//! binary connective is always parenthesized, except when it is the right
//! operand of the same right-associative connective.

mod free;
mod linear;
mod temporal;

pub use free::{FreeFormula, FreeTerm};
pub use linear::LinearFormula;
pub use temporal::TemporalFormula;
