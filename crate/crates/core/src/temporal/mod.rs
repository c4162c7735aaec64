//! Finite-trace temporal descriptors: direct semantics, expansion of the
//! bounded modalities, formula progression, and an online monitor.
//!
//! Traces are finite. At the end of a trace `()` is strong (false), `[]` is
//! vacuously true and `<>` is false. Bounded always uses a weak next for its
//! later steps, so a document that stops early cannot violate it; bounded
//! eventually uses a strong next, so silence never satisfies it.

mod monitor;
mod progress;
mod semantics;
mod trace;

pub use monitor::{monitor, Monitor, Verdict};
pub use progress::{progress, simplify, BoundedModalityPresent};
pub use semantics::{end_value, evaluate, expand_bounded, PositionOutOfRange};
pub use trace::{Trace, Utterance};
