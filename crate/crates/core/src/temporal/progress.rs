use thiserror::Error;

use super::semantics::{end_value, nonempty};
use super::Utterance;
use crate::ast::TemporalFormula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("formula contains a bounded modality; expand it first")]
pub struct BoundedModalityPresent;

/// One-step derivative: the obligation left for the rest of the trace once
/// `utterance` has been observed.
///
/// For every nonempty trace `t`, `f` holds on `t` exactly when
/// `progress(f, t[0])` holds on `t[1..]`, including when `t[1..]` is empty.
/// A strong next is carried over as `f /\ <> true` whenever `f` alone would
/// be satisfied by the empty remainder.
pub fn progress(
    formula: &TemporalFormula,
    utterance: &Utterance,
) -> Result<TemporalFormula, BoundedModalityPresent> {
    use TemporalFormula::*;
    Ok(match formula {
        Atom(a) => {
            if utterance.uses(a) {
                True
            } else {
                False
            }
        }
        True => True,
        False => False,
        Not(f) => mk_not(progress(f, utterance)?),
        And(l, r) => mk_and(progress(l, utterance)?, progress(r, utterance)?),
        Or(l, r) => mk_or(progress(l, utterance)?, progress(r, utterance)?),
        Implies(l, r) => mk_implies(progress(l, utterance)?, progress(r, utterance)?),
        Next(f) => {
            if end_value(f) {
                mk_and((**f).clone(), nonempty())
            } else {
                (**f).clone()
            }
        }
        Box(f) => mk_and(progress(f, utterance)?, formula.clone()),
        Diamond(f) => mk_or(progress(f, utterance)?, formula.clone()),
        BoxK(..) | DiamondK(..) => return Err(BoundedModalityPresent),
    })
}

/// Bottom-up simplification: constant absorption, double negation, and
/// removal of repeated operands in `/\` and `\/` chains.
pub fn simplify(formula: &TemporalFormula) -> TemporalFormula {
    use TemporalFormula::*;
    match formula {
        Not(f) => mk_not(simplify(f)),
        And(l, r) => mk_and(simplify(l), simplify(r)),
        Or(l, r) => mk_or(simplify(l), simplify(r)),
        Implies(l, r) => mk_implies(simplify(l), simplify(r)),
        Box(f) => TemporalFormula::always(simplify(f)),
        Diamond(f) => TemporalFormula::eventually(simplify(f)),
        Next(f) => TemporalFormula::next(simplify(f)),
        BoxK(k, f) => BoxK(*k, std::boxed::Box::new(simplify(f))),
        DiamondK(k, f) => DiamondK(*k, std::boxed::Box::new(simplify(f))),
        Atom(_) | True | False => formula.clone(),
    }
}

fn mk_not(f: TemporalFormula) -> TemporalFormula {
    match f {
        TemporalFormula::True => TemporalFormula::False,
        TemporalFormula::False => TemporalFormula::True,
        TemporalFormula::Not(inner) => *inner,
        other => TemporalFormula::not(other),
    }
}

fn flatten<'a>(
    f: &'a TemporalFormula,
    split: fn(&TemporalFormula) -> Option<(&TemporalFormula, &TemporalFormula)>,
    out: &mut Vec<&'a TemporalFormula>,
) {
    match split(f) {
        Some((l, r)) => {
            flatten(l, split, out);
            flatten(r, split, out);
        }
        None => out.push(f),
    }
}

fn as_and(f: &TemporalFormula) -> Option<(&TemporalFormula, &TemporalFormula)> {
    match f {
        TemporalFormula::And(l, r) => Some((l, r)),
        _ => None,
    }
}

fn as_or(f: &TemporalFormula) -> Option<(&TemporalFormula, &TemporalFormula)> {
    match f {
        TemporalFormula::Or(l, r) => Some((l, r)),
        _ => None,
    }
}

/// Joins two operands of an associative, idempotent connective, dropping
/// repeated operands and keeping first-occurrence order.
fn join_chain(
    l: TemporalFormula,
    r: TemporalFormula,
    split: fn(&TemporalFormula) -> Option<(&TemporalFormula, &TemporalFormula)>,
    build: fn(TemporalFormula, TemporalFormula) -> TemporalFormula,
) -> TemporalFormula {
    let mut items = Vec::new();
    flatten(&l, split, &mut items);
    flatten(&r, split, &mut items);
    let mut unique: Vec<&TemporalFormula> = Vec::with_capacity(items.len());
    for item in items {
        if !unique.contains(&item) {
            unique.push(item);
        }
    }
    let mut iter = unique.into_iter().rev().cloned();
    let last = iter.next().expect("at least one operand");
    iter.fold(last, |acc, f| build(f, acc))
}

fn mk_and(l: TemporalFormula, r: TemporalFormula) -> TemporalFormula {
    use TemporalFormula::*;
    match (l, r) {
        (False, _) | (_, False) => False,
        (True, f) | (f, True) => f,
        (l, r) => join_chain(l, r, as_and, TemporalFormula::and),
    }
}

fn mk_or(l: TemporalFormula, r: TemporalFormula) -> TemporalFormula {
    use TemporalFormula::*;
    match (l, r) {
        (True, _) | (_, True) => True,
        (False, f) | (f, False) => f,
        (l, r) => join_chain(l, r, as_or, TemporalFormula::or),
    }
}

fn mk_implies(l: TemporalFormula, r: TemporalFormula) -> TemporalFormula {
    use TemporalFormula::*;
    match (l, r) {
        (False, _) | (_, True) => True,
        (True, f) => f,
        (f, False) => mk_not(f),
        (l, r) if l == r => True,
        (l, r) => TemporalFormula::implies(l, r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_temporal;

    fn t(s: &str) -> TemporalFormula {
        parse_temporal(s).unwrap()
    }

    fn u(keys: &[&str]) -> Utterance {
        Utterance::new(keys.iter().map(|k| k.parse().unwrap()))
    }

    #[test]
    fn examples() {
        assert_eq!(progress(&t("[] a/b"), &u(&["a/b"])).unwrap(), t("[] a/b"));
        assert_eq!(
            progress(&t("[] a/b"), &u(&[])).unwrap(),
            TemporalFormula::False
        );
        assert_eq!(progress(&t("() a/b"), &u(&["c/d"])).unwrap(), t("a/b"));
        assert_eq!(
            progress(&t("<> a/b"), &u(&["a/b"])).unwrap(),
            TemporalFormula::True
        );
        assert_eq!(progress(&t("<> a/b"), &u(&[])).unwrap(), t("<> a/b"));
    }

    #[test]
    fn strong_next_keeps_its_demand() {
        assert_eq!(
            progress(&t("() [] a/b"), &u(&["a/b"])).unwrap(),
            t("[] a/b /\\ <> true")
        );
    }

    #[test]
    fn rejects_bounded() {
        assert_eq!(
            progress(&t("[]<=2 a/b"), &u(&[])),
            Err(BoundedModalityPresent)
        );
    }

    #[test]
    fn residuals_stay_small() {
        let f = t("[] <> a/b");
        let mut residual = f.clone();
        for _ in 0..50 {
            residual = progress(&residual, &u(&["c/d"])).unwrap();
        }
        assert_eq!(residual, t("<> a/b /\\ [] <> a/b"));
    }

    #[test]
    fn simplification_rules() {
        assert_eq!(simplify(&t("!!a/b")), t("a/b"));
        assert_eq!(simplify(&t("a/b /\\ true")), t("a/b"));
        assert_eq!(simplify(&t("a/b \\/ false \\/ a/b")), t("a/b"));
        assert_eq!(simplify(&t("false -> a/b")), TemporalFormula::True);
        assert_eq!(simplify(&t("a/b -> false")), t("!a/b"));
        assert_eq!(simplify(&t("[] (a/b /\\ a/b)")), t("[] a/b"));
        assert_eq!(simplify(&t("(a/b /\\ c/d) /\\ a/b")), t("a/b /\\ c/d"));
    }
}
