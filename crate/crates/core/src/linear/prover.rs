use std::collections::HashMap;

use thiserror::Error;

use super::{ProofTree, Rule, Sequent};
use crate::ast::LinearFormula;

/// Default number of search nodes before giving up.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("proof search exhausted its budget of {budget} nodes")]
pub struct ResourceLimit {
    pub budget: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Proved(ProofTree),
    NotDerivable,
}

impl Outcome {
    pub fn is_proved(&self) -> bool {
        matches!(self, Outcome::Proved(_))
    }

    pub fn proof(&self) -> Option<&ProofTree> {
        match self {
            Outcome::Proved(p) => Some(p),
            Outcome::NotDerivable => None,
        }
    }
}

/// Backward proof search over multiset contexts.
///
/// Every rule's premises are strictly smaller than its conclusion, so the
/// search terminates without loop checking. The invertible rules (`WithR`,
/// `LolliR`, `TensorL`, `PlusL`) are applied eagerly and never backtracked;
/// the remaining rules are tried exhaustively, with context splits
/// enumerated as sub-multisets. Results are memoized per sequent.
#[derive(Debug, Clone, Copy)]
pub struct Prover {
    budget: u64,
}

impl Default for Prover {
    fn default() -> Self {
        Prover {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl Prover {
    pub fn with_budget(budget: u64) -> Self {
        Prover { budget }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn prove(&self, sequent: &Sequent) -> Result<Outcome, ResourceLimit> {
        let mut search = Search {
            budget: self.budget,
            visited: 0,
            memo: HashMap::new(),
        };
        let mut ctx = sequent.context.clone();
        ctx.sort();
        Ok(match search.run(ctx, sequent.goal.clone())? {
            Some(mut proof) => {
                proof.conclusion = sequent.clone();
                Outcome::Proved(proof)
            }
            None => Outcome::NotDerivable,
        })
    }
}

pub fn prove(sequent: &Sequent) -> Result<Outcome, ResourceLimit> {
    Prover::default().prove(sequent)
}

/// Whether `goal` is derivable from no assumptions.
pub fn derivable(goal: &LinearFormula) -> Result<bool, ResourceLimit> {
    Ok(prove(&Sequent::new(Vec::new(), goal.clone()))?.is_proved())
}

type Key = (Vec<LinearFormula>, LinearFormula);

struct Search {
    budget: u64,
    visited: u64,
    memo: HashMap<Key, Option<ProofTree>>,
}

fn sorted_with(rest: &[LinearFormula], extra: &[&LinearFormula]) -> Vec<LinearFormula> {
    let mut out = rest.to_vec();
    out.extend(extra.iter().map(|f| (*f).clone()));
    out.sort();
    out
}

fn remove_at(ctx: &[LinearFormula], i: usize) -> Vec<LinearFormula> {
    let mut rest = ctx.to_vec();
    rest.remove(i);
    rest
}

/// All ways to split a sorted multiset in two, each split listed once.
fn splits(ctx: &[LinearFormula]) -> Vec<(Vec<LinearFormula>, Vec<LinearFormula>)> {
    let mut groups: Vec<(&LinearFormula, usize)> = Vec::new();
    for f in ctx {
        match groups.last_mut() {
            Some((g, n)) if *g == f => *n += 1,
            _ => groups.push((f, 1)),
        }
    }
    let mut out = vec![(Vec::new(), Vec::new())];
    for (f, n) in groups {
        let mut next = Vec::with_capacity(out.len() * (n + 1));
        for (left, right) in &out {
            for take in 0..=n {
                let mut l = left.clone();
                let mut r = right.clone();
                l.extend(std::iter::repeat_n(f.clone(), take));
                r.extend(std::iter::repeat_n(f.clone(), n - take));
                next.push((l, r));
            }
        }
        out = next;
    }
    out
}

/// Indices of the first occurrence of each distinct formula matching `pred`.
fn distinct_positions(ctx: &[LinearFormula], pred: fn(&LinearFormula) -> bool) -> Vec<usize> {
    (0..ctx.len())
        .filter(|&i| pred(&ctx[i]) && (i == 0 || ctx[i - 1] != ctx[i]))
        .collect()
}

impl Search {
    fn run(
        &mut self,
        ctx: Vec<LinearFormula>,
        goal: LinearFormula,
    ) -> Result<Option<ProofTree>, ResourceLimit> {
        let key = (ctx, goal);
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        self.visited += 1;
        if self.visited > self.budget {
            return Err(ResourceLimit {
                budget: self.budget,
            });
        }
        let result = self.expand(&key.0, &key.1)?;
        self.memo.insert(key, result.clone());
        Ok(result)
    }

    fn expand(
        &mut self,
        ctx: &[LinearFormula],
        goal: &LinearFormula,
    ) -> Result<Option<ProofTree>, ResourceLimit> {
        use LinearFormula::*;
        let conclusion = || Sequent::new(ctx.to_vec(), goal.clone());
        let node = |rule, premises| Some(ProofTree::new(rule, conclusion(), premises));

        // Invertible right rules.
        match goal {
            With(a, b) => {
                let Some(pa) = self.run(ctx.to_vec(), (**a).clone())? else {
                    return Ok(None);
                };
                let Some(pb) = self.run(ctx.to_vec(), (**b).clone())? else {
                    return Ok(None);
                };
                return Ok(node(Rule::WithR, vec![pa, pb]));
            }
            Lolli(a, b) => {
                let premise = self.run(sorted_with(ctx, &[a]), (**b).clone())?;
                return Ok(premise.and_then(|p| node(Rule::LolliR, vec![p])));
            }
            _ => {}
        }

        // Invertible left rules.
        for (i, f) in ctx.iter().enumerate() {
            match f {
                Tensor(a, b) => {
                    let rest = remove_at(ctx, i);
                    let premise = self.run(sorted_with(&rest, &[a, b]), goal.clone())?;
                    return Ok(premise.and_then(|p| node(Rule::TensorL, vec![p])));
                }
                Plus(a, b) => {
                    let rest = remove_at(ctx, i);
                    let Some(pa) = self.run(sorted_with(&rest, &[a]), goal.clone())? else {
                        return Ok(None);
                    };
                    let Some(pb) = self.run(sorted_with(&rest, &[b]), goal.clone())? else {
                        return Ok(None);
                    };
                    return Ok(node(Rule::PlusL, vec![pa, pb]));
                }
                _ => {}
            }
        }

        // The context now holds only atoms, external choices and implications.
        if goal.is_atom() && ctx.len() == 1 && &ctx[0] == goal {
            return Ok(node(Rule::Id, vec![]));
        }

        for i in distinct_positions(ctx, |f| matches!(f, With(..))) {
            let With(a, b) = &ctx[i] else { unreachable!() };
            let rest = remove_at(ctx, i);
            if let Some(p) = self.run(sorted_with(&rest, &[a]), goal.clone())? {
                return Ok(node(Rule::WithL1, vec![p]));
            }
            if let Some(p) = self.run(sorted_with(&rest, &[b]), goal.clone())? {
                return Ok(node(Rule::WithL2, vec![p]));
            }
        }

        match goal {
            Plus(a, b) => {
                if let Some(p) = self.run(ctx.to_vec(), (**a).clone())? {
                    return Ok(node(Rule::PlusR1, vec![p]));
                }
                if let Some(p) = self.run(ctx.to_vec(), (**b).clone())? {
                    return Ok(node(Rule::PlusR2, vec![p]));
                }
            }
            Tensor(a, b) => {
                for (left, right) in splits(ctx) {
                    let Some(pa) = self.run(left, (**a).clone())? else {
                        continue;
                    };
                    if let Some(pb) = self.run(right, (**b).clone())? {
                        return Ok(node(Rule::TensorR, vec![pa, pb]));
                    }
                }
            }
            _ => {}
        }

        for i in distinct_positions(ctx, |f| matches!(f, Lolli(..))) {
            let Lolli(a, b) = &ctx[i] else { unreachable!() };
            let rest = remove_at(ctx, i);
            for (gamma, delta) in splits(&rest) {
                let Some(pa) = self.run(gamma, (**a).clone())? else {
                    continue;
                };
                if let Some(pb) = self.run(sorted_with(&delta, &[b]), goal.clone())? {
                    return Ok(node(Rule::LolliL, vec![pa, pb]));
                }
            }
        }

        Ok(None)
    }
}
