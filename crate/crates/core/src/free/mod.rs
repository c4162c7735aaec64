//! Negative free logic with definite and indefinite descriptions.
//!
//! `iota x. A` denotes the unique individual satisfying `A` and nothing
//! otherwise. `eps x. A` denotes the first satisfier in domain order, and
//! nothing if there is none. Variables and quantifiers range over the domain
//! only, so they always denote. An atomic formula with a non-denoting
//! argument is false, including `t = t`.

mod eval;
mod model;

pub use eval::{check_sentence, eval_formula, eval_term, Denotation, Environment, EvalError};
pub use model::{Model, ModelError};
