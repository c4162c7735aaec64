use std::fmt;

use thiserror::Error;

use super::{same_multiset, ProofTree, Rule, Sequent};
use crate::ast::LinearFormula;

/// The first node, in pre-order, that is not a correct rule instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ProofError {
    /// Premise indices from the root to the offending node.
    pub path: Vec<usize>,
    pub rule: Rule,
    pub reason: String,
}

impl fmt::Display for ProofError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("node root")?;
        for i in &self.path {
            write!(f, ".{i}")?;
        }
        write!(f, " ({}): {}", self.rule, self.reason)
    }
}

/// Accepts iff every node is a correct instance of its rule.
pub fn check_proof(proof: &ProofTree) -> Result<(), ProofError> {
    let mut path = Vec::new();
    check_node(proof, &mut path)
}

fn check_node(node: &ProofTree, path: &mut Vec<usize>) -> Result<(), ProofError> {
    check_rule(node).map_err(|reason| ProofError {
        path: path.clone(),
        rule: node.rule,
        reason,
    })?;
    for (i, p) in node.premises.iter().enumerate() {
        path.push(i);
        check_node(p, path)?;
        path.pop();
    }
    Ok(())
}

fn without(ctx: &[LinearFormula], i: usize) -> Vec<LinearFormula> {
    let mut rest = ctx.to_vec();
    rest.remove(i);
    rest
}

fn with_added(ctx: &[LinearFormula], extra: &[&LinearFormula]) -> Vec<LinearFormula> {
    let mut out = ctx.to_vec();
    out.extend(extra.iter().map(|f| (*f).clone()));
    out
}

fn premise_count(node: &ProofTree, n: usize) -> Result<(), String> {
    if node.premises.len() == n {
        Ok(())
    } else {
        Err(format!(
            "expects {n} premise(s), found {}",
            node.premises.len()
        ))
    }
}

fn same_goal(premise: &Sequent, goal: &LinearFormula) -> Result<(), String> {
    if &premise.goal == goal {
        Ok(())
    } else {
        Err(format!(
            "premise goal `{}` differs from conclusion goal `{goal}`",
            premise.goal
        ))
    }
}

/// Tries every context position holding a formula of the decomposed shape;
/// the rule is correct if some position fits.
fn some_position<'a, F>(
    ctx: &'a [LinearFormula],
    shape: fn(&LinearFormula) -> Option<(&LinearFormula, &LinearFormula)>,
    what: &str,
    mut fits: F,
) -> Result<(), String>
where
    F: FnMut(Vec<LinearFormula>, &'a LinearFormula, &'a LinearFormula) -> bool,
{
    let mut found = false;
    for (i, f) in ctx.iter().enumerate() {
        if let Some((a, b)) = shape(f) {
            found = true;
            if fits(without(ctx, i), a, b) {
                return Ok(());
            }
        }
    }
    if found {
        Err(format!("no {what} in the context matches the premises"))
    } else {
        Err(format!("context has no {what} to decompose"))
    }
}

fn tensor(f: &LinearFormula) -> Option<(&LinearFormula, &LinearFormula)> {
    match f {
        LinearFormula::Tensor(a, b) => Some((a, b)),
        _ => None,
    }
}

fn with(f: &LinearFormula) -> Option<(&LinearFormula, &LinearFormula)> {
    match f {
        LinearFormula::With(a, b) => Some((a, b)),
        _ => None,
    }
}

fn plus(f: &LinearFormula) -> Option<(&LinearFormula, &LinearFormula)> {
    match f {
        LinearFormula::Plus(a, b) => Some((a, b)),
        _ => None,
    }
}

fn lolli(f: &LinearFormula) -> Option<(&LinearFormula, &LinearFormula)> {
    match f {
        LinearFormula::Lolli(a, b) => Some((a, b)),
        _ => None,
    }
}

fn check_rule(node: &ProofTree) -> Result<(), String> {
    let ctx = &node.conclusion.context;
    let goal = &node.conclusion.goal;
    let ps = &node.premises;
    match node.rule {
        Rule::Id => {
            premise_count(node, 0)?;
            if !goal.is_atom() {
                return Err(format!("Id requires an atomic goal, found `{goal}`"));
            }
            if ctx.len() != 1 || &ctx[0] != goal {
                return Err("Id requires the context to be exactly the goal".into());
            }
            Ok(())
        }
        Rule::TensorR => {
            premise_count(node, 2)?;
            let (a, b) = tensor(goal).ok_or("goal is not a tensor")?;
            same_goal(&ps[0].conclusion, a)?;
            same_goal(&ps[1].conclusion, b)?;
            let joined = with_added(
                &ps[0].conclusion.context,
                &ps[1].conclusion.context.iter().collect::<Vec<_>>(),
            );
            if !same_multiset(&joined, ctx) {
                return Err("premise contexts do not partition the conclusion context".into());
            }
            Ok(())
        }
        Rule::TensorL => {
            premise_count(node, 1)?;
            let p = &ps[0].conclusion;
            same_goal(p, goal)?;
            some_position(ctx, tensor, "tensor", |rest, a, b| {
                same_multiset(&p.context, &with_added(&rest, &[a, b]))
            })
        }
        Rule::WithR => {
            premise_count(node, 2)?;
            let (a, b) = with(goal).ok_or("goal is not an external choice")?;
            same_goal(&ps[0].conclusion, a)?;
            same_goal(&ps[1].conclusion, b)?;
            for p in ps {
                if !same_multiset(&p.conclusion.context, ctx) {
                    return Err("both premises must share the conclusion context".into());
                }
            }
            Ok(())
        }
        Rule::WithL1 | Rule::WithL2 => {
            premise_count(node, 1)?;
            let p = &ps[0].conclusion;
            same_goal(p, goal)?;
            let first = node.rule == Rule::WithL1;
            some_position(ctx, with, "external choice", |rest, a, b| {
                let kept = if first { a } else { b };
                same_multiset(&p.context, &with_added(&rest, &[kept]))
            })
        }
        Rule::PlusR1 | Rule::PlusR2 => {
            premise_count(node, 1)?;
            let (a, b) = plus(goal).ok_or("goal is not an internal choice")?;
            let p = &ps[0].conclusion;
            same_goal(p, if node.rule == Rule::PlusR1 { a } else { b })?;
            if !same_multiset(&p.context, ctx) {
                return Err("premise context differs from conclusion context".into());
            }
            Ok(())
        }
        Rule::PlusL => {
            premise_count(node, 2)?;
            let (p0, p1) = (&ps[0].conclusion, &ps[1].conclusion);
            same_goal(p0, goal)?;
            same_goal(p1, goal)?;
            some_position(ctx, plus, "internal choice", |rest, a, b| {
                same_multiset(&p0.context, &with_added(&rest, &[a]))
                    && same_multiset(&p1.context, &with_added(&rest, &[b]))
            })
        }
        Rule::LolliR => {
            premise_count(node, 1)?;
            let (a, b) = lolli(goal).ok_or("goal is not a linear implication")?;
            let p = &ps[0].conclusion;
            same_goal(p, b)?;
            if !same_multiset(&p.context, &with_added(ctx, &[a])) {
                return Err(
                    "premise context must be the conclusion context plus the antecedent".into(),
                );
            }
            Ok(())
        }
        Rule::LolliL => {
            premise_count(node, 2)?;
            let (p0, p1) = (&ps[0].conclusion, &ps[1].conclusion);
            same_goal(p1, goal)?;
            some_position(ctx, lolli, "linear implication", |rest, a, b| {
                if &p0.goal != a {
                    return false;
                }
                let Some(at) = p1.context.iter().position(|f| f == b) else {
                    return false;
                };
                let delta = without(&p1.context, at);
                let joined = with_added(&p0.context, &delta.iter().collect::<Vec<_>>());
                same_multiset(&joined, &rest)
            })
        }
    }
}
