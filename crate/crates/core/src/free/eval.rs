use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::Model;
use crate::ast::{FreeFormula, FreeTerm};

/// What a term refers to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Denotation {
    Value(String),
    NonDenoting,
}

impl Denotation {
    pub fn denotes(&self) -> bool {
        matches!(self, Denotation::Value(_))
    }
}

impl fmt::Display for Denotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Denotation::Value(v) => f.write_str(v),
            Denotation::NonDenoting => f.write_str("non-denoting"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable `{0}` is not bound")]
    UnboundVariable(String),
    #[error("sentence has free variable `{0}`")]
    FreeVariable(String),
    #[error("model does not declare predicate `{name}/{arity}`")]
    UnknownPredicate { name: String, arity: usize },
    #[error("environment binds `{var}` to `{individual}`, which is not in the domain")]
    UnknownIndividual { var: String, individual: String },
}

/// Variable assignment. Variables only ever range over individuals.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Environment {
    bindings: BTreeMap<String, String>,
}

impl Environment {
    pub fn new() -> Self {
        Environment::default()
    }

    pub fn bind(mut self, var: &str, individual: &str) -> Self {
        self.bindings.insert(var.into(), individual.into());
        self
    }

    pub fn get(&self, var: &str) -> Option<&str> {
        self.bindings.get(var).map(String::as_str)
    }
}

/// Resolved environment: variable to domain index, innermost binding last.
struct Scope<'m> {
    model: &'m Model,
    vars: Vec<(String, usize)>,
}

fn prepare<'m>(
    model: &'m Model,
    env: &'m Environment,
    free: impl IntoIterator<Item = String>,
    preds: impl IntoIterator<Item = (String, usize)>,
) -> Result<Scope<'m>, EvalError> {
    for (name, arity) in preds {
        if !model.has_predicate(&name, arity) {
            return Err(EvalError::UnknownPredicate { name, arity });
        }
    }
    for v in free {
        if env.get(&v).is_none() {
            return Err(EvalError::UnboundVariable(v));
        }
    }
    let mut vars = Vec::new();
    for (var, individual) in &env.bindings {
        let i = model
            .individual(individual)
            .map_err(|_| EvalError::UnknownIndividual {
                var: var.clone(),
                individual: individual.clone(),
            })?;
        vars.push((var.clone(), i));
    }
    Ok(Scope { model, vars })
}

fn term_predicates(term: &FreeTerm) -> Vec<(String, usize)> {
    match term {
        FreeTerm::Var(_) => Vec::new(),
        FreeTerm::Iota(_, body) | FreeTerm::Epsilon(_, body) => {
            body.predicates().into_iter().collect()
        }
    }
}

pub fn eval_term(
    model: &Model,
    env: &Environment,
    term: &FreeTerm,
) -> Result<Denotation, EvalError> {
    let mut scope = prepare(model, env, term.free_vars(), term_predicates(term))?;
    Ok(match scope.term(term) {
        Some(i) => Denotation::Value(model.domain()[i].clone()),
        None => Denotation::NonDenoting,
    })
}

pub fn eval_formula(
    model: &Model,
    env: &Environment,
    formula: &FreeFormula,
) -> Result<bool, EvalError> {
    let mut scope = prepare(model, env, formula.free_vars(), formula.predicates())?;
    Ok(scope.formula(formula))
}

/// Truth of a closed formula.
pub fn check_sentence(model: &Model, formula: &FreeFormula) -> Result<bool, EvalError> {
    if let Some(v) = formula.free_vars().into_iter().next() {
        return Err(EvalError::FreeVariable(v));
    }
    eval_formula(model, &Environment::new(), formula)
}

impl<'m> Scope<'m> {
    fn lookup(&self, var: &str) -> usize {
        self.vars
            .iter()
            .rev()
            .find(|(v, _)| v == var)
            .map(|(_, i)| *i)
            .expect("free variables checked before evaluation")
    }

    fn holds_with(&mut self, var: &str, value: usize, body: &FreeFormula) -> bool {
        self.vars.push((var.to_string(), value));
        let out = self.formula(body);
        self.vars.pop();
        out
    }

    /// Up to `limit` satisfiers of `body`, in domain order.
    fn satisfiers(&mut self, var: &str, body: &FreeFormula, limit: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for d in 0..self.model.domain().len() {
            if out.len() == limit {
                break;
            }
            if self.holds_with(var, d, body) {
                out.push(d);
            }
        }
        out
    }

    fn term(&mut self, term: &FreeTerm) -> Option<usize> {
        match term {
            FreeTerm::Var(v) => Some(self.lookup(v)),
            FreeTerm::Iota(var, body) => match self.satisfiers(var, body, 2)[..] {
                [only] => Some(only),
                _ => None,
            },
            FreeTerm::Epsilon(var, body) => self.satisfiers(var, body, 1).first().copied(),
        }
    }

    fn formula(&mut self, formula: &FreeFormula) -> bool {
        use FreeFormula::*;
        match formula {
            Pred(name, args) => {
                let mut values = Vec::with_capacity(args.len());
                for a in args {
                    match self.term(a) {
                        Some(v) => values.push(v),
                        None => return false,
                    }
                }
                self.model.holds(name, &values)
            }
            Eq(l, r) => match (self.term(l), self.term(r)) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            },
            Not(f) => !self.formula(f),
            And(l, r) => self.formula(l) && self.formula(r),
            Or(l, r) => self.formula(l) || self.formula(r),
            Implies(l, r) => !self.formula(l) || self.formula(r),
            Forall(var, body) => {
                (0..self.model.domain().len()).all(|d| self.holds_with(var, d, body))
            }
            Exists(var, body) => {
                (0..self.model.domain().len()).any(|d| self.holds_with(var, d, body))
            }
        }
    }
}
