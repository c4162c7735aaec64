//! Intuitionistic linear logic over atoms, `&`, `(+)`, `*` and `-o`.
//!
//! Every assumption in a sequent's context must be used exactly once: there
//! is no weakening and no contraction. [`prove`] searches for a cut-free
//! derivation and [`check_proof`] validates a [`ProofTree`] node by node
//! without any search.

mod check;
mod proof;
mod prover;

use std::collections::BTreeMap;
use std::fmt;

use crate::ast::LinearFormula;

pub use check::{check_proof, ProofError};
pub use proof::{ProofTree, ProofTreeError, Rule};
pub use prover::{derivable, prove, Outcome, Prover, ResourceLimit, DEFAULT_BUDGET};

/// `context |- goal`. The context is a multiset; written order is kept but
/// carries no meaning.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub context: Vec<LinearFormula>,
    pub goal: LinearFormula,
}

impl Sequent {
    pub fn new(context: Vec<LinearFormula>, goal: LinearFormula) -> Self {
        Sequent { context, goal }
    }

    /// Equality with the context compared as a multiset.
    pub fn same_as(&self, other: &Sequent) -> bool {
        self.goal == other.goal && same_multiset(&self.context, &other.context)
    }

    pub fn size(&self) -> usize {
        self.goal.size() + self.context.iter().map(LinearFormula::size).sum::<usize>()
    }
}

pub(crate) fn multiset(items: &[LinearFormula]) -> BTreeMap<&LinearFormula, usize> {
    let mut counts = BTreeMap::new();
    for f in items {
        *counts.entry(f).or_insert(0) += 1;
    }
    counts
}

pub(crate) fn same_multiset(a: &[LinearFormula], b: &[LinearFormula]) -> bool {
    a.len() == b.len() && multiset(a) == multiset(b)
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.context.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        if self.context.is_empty() {
            write!(f, "|- {}", self.goal)
        } else {
            write!(f, " |- {}", self.goal)
        }
    }
}
