use thiserror::Error;

use super::Trace;
use crate::ast::TemporalFormula;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("position {position} is outside a trace of length {len}")]
pub struct PositionOutOfRange {
    pub position: usize,
    pub len: usize,
}

/// Truth of `formula` on the suffix of `trace` starting at `position`.
///
/// `position == trace.len()` denotes the empty suffix. End-of-trace
/// conventions: atoms are false, `()` is strong (false at the last
/// utterance), `[]` is vacuously true, `<>` is false.
pub fn evaluate(
    formula: &TemporalFormula,
    trace: &Trace,
    position: usize,
) -> Result<bool, PositionOutOfRange> {
    if position > trace.len() {
        return Err(PositionOutOfRange {
            position,
            len: trace.len(),
        });
    }
    Ok(eval_at(formula, trace, position))
}

fn eval_at(formula: &TemporalFormula, trace: &Trace, i: usize) -> bool {
    use TemporalFormula::*;
    let n = trace.len();
    match formula {
        Atom(a) => trace.get(i).is_some_and(|u| u.uses(a)),
        True => true,
        False => false,
        Not(f) => !eval_at(f, trace, i),
        And(l, r) => eval_at(l, trace, i) && eval_at(r, trace, i),
        Or(l, r) => eval_at(l, trace, i) || eval_at(r, trace, i),
        Implies(l, r) => !eval_at(l, trace, i) || eval_at(r, trace, i),
        Next(f) => i + 1 < n && eval_at(f, trace, i + 1),
        Box(f) => (i..n).all(|j| eval_at(f, trace, j)),
        Diamond(f) => (i..n).any(|j| eval_at(f, trace, j)),
        BoxK(k, f) => (i..window_end(i, *k, n)).all(|j| eval_at(f, trace, j)),
        DiamondK(k, f) => (i..window_end(i, *k, n)).any(|j| eval_at(f, trace, j)),
    }
}

fn window_end(i: usize, k: u32, n: usize) -> usize {
    i.saturating_add(k as usize).min(n)
}

/// Truth value on the empty suffix. Every formula has one, independent of
/// any trace.
pub fn end_value(formula: &TemporalFormula) -> bool {
    use TemporalFormula::*;
    match formula {
        Atom(_) | False | Next(_) | Diamond(_) | DiamondK(..) => false,
        True | Box(_) | BoxK(..) => true,
        Not(f) => !end_value(f),
        And(l, r) => end_value(l) && end_value(r),
        Or(l, r) => end_value(l) || end_value(r),
        Implies(l, r) => !end_value(l) || end_value(r),
    }
}

/// `<> true`: holds exactly when at least one utterance remains.
pub(crate) fn nonempty() -> TemporalFormula {
    TemporalFormula::eventually(TemporalFormula::True)
}

fn nexts(m: u32, f: TemporalFormula) -> TemporalFormula {
    (0..m).fold(f, |acc, _| TemporalFormula::next(acc))
}

fn right_nested(
    mut terms: Vec<TemporalFormula>,
    join: fn(TemporalFormula, TemporalFormula) -> TemporalFormula,
) -> TemporalFormula {
    let mut acc = terms.pop().expect("k >= 1 terms");
    while let Some(t) = terms.pop() {
        acc = join(t, acc);
    }
    acc
}

/// Rewrites `[]<=k` and `<><=k` into `()`, `!` and the propositional
/// connectives, preserving truth at every position of every trace.
///
/// `[]<=k f` becomes `f /\ !()!f /\ ... /\ !()^(k-1)!f`: the weak-next
/// conjuncts are true past the end, so a trace that stops early never
/// violates it. `<><=k f` becomes `f \/ () f \/ ... \/ ()^(k-1) f` with
/// strong next, so silence never satisfies it. When `f` itself would be
/// falsified (resp. satisfied) by the empty suffix, the leading term is
/// guarded with `<> true`, which keeps the rewrite exact at the end of the
/// trace.
pub fn expand_bounded(formula: &TemporalFormula) -> TemporalFormula {
    use TemporalFormula::*;
    match formula {
        Atom(_) | True | False => formula.clone(),
        Not(f) => TemporalFormula::not(expand_bounded(f)),
        And(l, r) => TemporalFormula::and(expand_bounded(l), expand_bounded(r)),
        Or(l, r) => TemporalFormula::or(expand_bounded(l), expand_bounded(r)),
        Implies(l, r) => TemporalFormula::implies(expand_bounded(l), expand_bounded(r)),
        Box(f) => TemporalFormula::always(expand_bounded(f)),
        Diamond(f) => TemporalFormula::eventually(expand_bounded(f)),
        Next(f) => TemporalFormula::next(expand_bounded(f)),
        BoxK(k, f) => {
            let f = expand_bounded(f);
            let head = if end_value(&f) {
                f.clone()
            } else {
                TemporalFormula::implies(nonempty(), f.clone())
            };
            let mut terms = vec![head];
            for m in 1..*k {
                terms.push(TemporalFormula::not(nexts(
                    m,
                    TemporalFormula::not(f.clone()),
                )));
            }
            right_nested(terms, TemporalFormula::and)
        }
        DiamondK(k, f) => {
            let f = expand_bounded(f);
            let head = if end_value(&f) {
                TemporalFormula::and(nonempty(), f.clone())
            } else {
                f.clone()
            };
            let mut terms = vec![head];
            for m in 1..*k {
                terms.push(nexts(m, f.clone()));
            }
            right_nested(terms, TemporalFormula::or)
        }
    }
}
