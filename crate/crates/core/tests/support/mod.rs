//! Oracles, enumerators and random generators shared by the integration
//! tests. Nothing here calls into the code under test except for AST
//! constructors and the trace types.

#![allow(dead_code)]

use std::collections::HashMap;

use pronoun_logic::ast::{FreeFormula, FreeTerm, LinearFormula, TemporalFormula};
use pronoun_logic::linear::Sequent;
use pronoun_logic::temporal::{Trace, Utterance};
use pronoun_logic::PronounAtom;
use rand::seq::SliceRandom;
use rand::Rng;

// ---------------------------------------------------------------------------
// Linear logic

pub fn lin(key: &str) -> LinearFormula {
    LinearFormula::atom(key.parse().unwrap())
}

/// Naive backward search: every rule at every context position, every
/// context split as a bitmask, no memo and no invertibility shortcuts.
/// Terminates because each premise is smaller than its conclusion.
pub fn oracle_derivable(ctx: &[LinearFormula], goal: &LinearFormula) -> bool {
    use LinearFormula::*;
    if goal.is_atom() && ctx.len() == 1 && &ctx[0] == goal {
        return true;
    }
    let right = match goal {
        With(a, b) => oracle_derivable(ctx, a) && oracle_derivable(ctx, b),
        Plus(a, b) => oracle_derivable(ctx, a) || oracle_derivable(ctx, b),
        Tensor(a, b) => bipartitions(ctx)
            .into_iter()
            .any(|(l, r)| oracle_derivable(&l, a) && oracle_derivable(&r, b)),
        Lolli(a, b) => oracle_derivable(&plus(ctx, &[a]), b),
        Atom(_) => false,
    };
    if right {
        return true;
    }
    (0..ctx.len()).any(|i| {
        let rest: Vec<LinearFormula> = ctx
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, f)| f.clone())
            .collect();
        match &ctx[i] {
            Tensor(a, b) => oracle_derivable(&plus(&rest, &[a, b]), goal),
            With(a, b) => {
                oracle_derivable(&plus(&rest, &[a]), goal)
                    || oracle_derivable(&plus(&rest, &[b]), goal)
            }
            Plus(a, b) => {
                oracle_derivable(&plus(&rest, &[a]), goal)
                    && oracle_derivable(&plus(&rest, &[b]), goal)
            }
            Lolli(a, b) => bipartitions(&rest)
                .into_iter()
                .any(|(g, d)| oracle_derivable(&g, a) && oracle_derivable(&plus(&d, &[b]), goal)),
            Atom(_) => false,
        }
    })
}

fn plus(ctx: &[LinearFormula], extra: &[&LinearFormula]) -> Vec<LinearFormula> {
    let mut out = ctx.to_vec();
    out.extend(extra.iter().map(|f| (*f).clone()));
    out
}

fn bipartitions(ctx: &[LinearFormula]) -> Vec<(Vec<LinearFormula>, Vec<LinearFormula>)> {
    (0u32..1 << ctx.len())
        .map(|mask| {
            let (mut l, mut r) = (Vec::new(), Vec::new());
            for (i, f) in ctx.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    l.push(f.clone());
                } else {
                    r.push(f.clone());
                }
            }
            (l, r)
        })
        .collect()
}

/// All linear formulas of exactly `size` nodes over `atoms`.
pub fn linear_of_size(
    size: usize,
    atoms: &[LinearFormula],
    memo: &mut HashMap<usize, Vec<LinearFormula>>,
) -> Vec<LinearFormula> {
    if let Some(v) = memo.get(&size) {
        return v.clone();
    }
    let out = if size == 0 {
        Vec::new()
    } else if size == 1 {
        atoms.to_vec()
    } else {
        let mut out = Vec::new();
        for left in 1..size - 1 {
            let ls = linear_of_size(left, atoms, memo);
            let rs = linear_of_size(size - 1 - left, atoms, memo);
            for l in &ls {
                for r in &rs {
                    out.push(LinearFormula::with(l.clone(), r.clone()));
                    out.push(LinearFormula::plus(l.clone(), r.clone()));
                    out.push(LinearFormula::tensor(l.clone(), r.clone()));
                    out.push(LinearFormula::lolli(l.clone(), r.clone()));
                }
            }
        }
        out
    };
    memo.insert(size, out.clone());
    out
}

/// Every sequent with at most two assumptions whose formulas have `total`
/// nodes or fewer in all. Contexts are multisets, so each is listed once.
pub fn sequents_up_to(total: usize, atoms: &[LinearFormula]) -> Vec<Sequent> {
    let mut memo = HashMap::new();
    let by_size: Vec<Vec<LinearFormula>> = (0..=total)
        .map(|n| linear_of_size(n, atoms, &mut memo))
        .collect();
    let all_up_to =
        |n: usize| -> Vec<&LinearFormula> { (1..=n).flat_map(|s| by_size[s].iter()).collect() };
    let mut out = Vec::new();
    for (g, goals) in by_size.iter().enumerate().skip(1) {
        for goal in goals {
            out.push(Sequent::new(vec![], goal.clone()));
            let budget = total - g;
            let singles = all_up_to(budget);
            for a in &singles {
                out.push(Sequent::new(vec![(*a).clone()], goal.clone()));
            }
            for (i, a) in singles.iter().enumerate() {
                for b in &singles[i..] {
                    if a.size() + b.size() <= budget {
                        out.push(Sequent::new(vec![(*a).clone(), (*b).clone()], goal.clone()));
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Temporal logic

pub fn atom(key: &str) -> PronounAtom {
    key.parse().unwrap()
}

/// Reference semantics written independently of the library: bounded
/// operators are evaluated by explicit window scans.
pub fn reference_eval(f: &TemporalFormula, trace: &[Vec<PronounAtom>], i: usize) -> bool {
    use TemporalFormula::*;
    let n = trace.len();
    match f {
        Atom(a) => i < n && trace[i].contains(a),
        True => true,
        False => false,
        Not(g) => !reference_eval(g, trace, i),
        And(l, r) => reference_eval(l, trace, i) && reference_eval(r, trace, i),
        Or(l, r) => reference_eval(l, trace, i) || reference_eval(r, trace, i),
        Implies(l, r) => !reference_eval(l, trace, i) || reference_eval(r, trace, i),
        Next(g) => i + 1 < n && reference_eval(g, trace, i + 1),
        Box(g) => {
            let mut ok = true;
            for j in i..n {
                ok &= reference_eval(g, trace, j);
            }
            ok
        }
        Diamond(g) => {
            let mut found = false;
            for j in i..n {
                found |= reference_eval(g, trace, j);
            }
            found
        }
        BoxK(k, g) => {
            let mut ok = true;
            let mut j = i;
            while j < n && j < i + *k as usize {
                ok &= reference_eval(g, trace, j);
                j += 1;
            }
            ok
        }
        DiamondK(k, g) => {
            let mut found = false;
            let mut j = i;
            while j < n && j < i + *k as usize {
                found |= reference_eval(g, trace, j);
                j += 1;
            }
            found
        }
    }
}

/// All formulas of depth at most `depth` over the given atoms, `true` and
/// `false`, with bounds `1..=max_k`.
pub fn temporal_up_to_depth(
    depth: usize,
    atoms: &[PronounAtom],
    max_k: u32,
) -> Vec<TemporalFormula> {
    let leaves: Vec<TemporalFormula> = atoms
        .iter()
        .map(|a| TemporalFormula::atom(a.clone()))
        .chain([TemporalFormula::True, TemporalFormula::False])
        .collect();
    let mut level = leaves.clone();
    for _ in 1..depth {
        let mut next = leaves.clone();
        for f in &level {
            next.push(TemporalFormula::not(f.clone()));
            next.push(TemporalFormula::next(f.clone()));
            next.push(TemporalFormula::always(f.clone()));
            next.push(TemporalFormula::eventually(f.clone()));
            for k in 1..=max_k {
                next.push(TemporalFormula::always_within(k, f.clone()));
                next.push(TemporalFormula::eventually_within(k, f.clone()));
            }
        }
        for l in &level {
            for r in &level {
                next.push(TemporalFormula::and(l.clone(), r.clone()));
                next.push(TemporalFormula::or(l.clone(), r.clone()));
                next.push(TemporalFormula::implies(l.clone(), r.clone()));
            }
        }
        level = next;
    }
    level
}

/// Every subset of `atoms`, as utterances.
pub fn utterance_alphabet(atoms: &[PronounAtom]) -> Vec<Utterance> {
    (0u32..1 << atoms.len())
        .map(|mask| {
            Utterance::new(
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, a)| a.clone()),
            )
        })
        .collect()
}

/// All traces of length at most `max_len` over `alphabet`.
pub fn traces_up_to(max_len: usize, alphabet: &[Utterance]) -> Vec<Trace> {
    let mut out = vec![Trace::default()];
    let mut frontier = vec![Vec::<Utterance>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &frontier {
            for u in alphabet {
                let mut t = prefix.clone();
                t.push(u.clone());
                out.push(Trace::new(t.clone()));
                next.push(t);
            }
        }
        frontier = next;
    }
    out
}

pub fn atom_sets(trace: &Trace) -> Vec<Vec<PronounAtom>> {
    trace
        .utterances
        .iter()
        .map(|u| u.atoms.iter().cloned().collect())
        .collect()
}

// ---------------------------------------------------------------------------
// Random generators

const ATOM_KEYS: [&str; 6] = ["she/her", "he/him", "they/them", "ze/zir", "a/b", "c/d"];

pub fn random_atom<R: Rng>(rng: &mut R) -> PronounAtom {
    atom(ATOM_KEYS.choose(rng).unwrap())
}

pub fn random_linear<R: Rng>(rng: &mut R, depth: u32) -> LinearFormula {
    if depth == 0 || rng.gen_ratio(1, 4) {
        return LinearFormula::atom(random_atom(rng));
    }
    let l = random_linear(rng, depth - 1);
    let r = random_linear(rng, depth - 1);
    match rng.gen_range(0..4) {
        0 => LinearFormula::with(l, r),
        1 => LinearFormula::plus(l, r),
        2 => LinearFormula::tensor(l, r),
        _ => LinearFormula::lolli(l, r),
    }
}

pub fn random_temporal<R: Rng>(rng: &mut R, depth: u32) -> TemporalFormula {
    if depth == 0 || rng.gen_ratio(1, 5) {
        return match rng.gen_range(0..6) {
            0 => TemporalFormula::True,
            1 => TemporalFormula::False,
            _ => TemporalFormula::atom(random_atom(rng)),
        };
    }
    let sub = |rng: &mut R| random_temporal(rng, depth - 1);
    match rng.gen_range(0..10) {
        0 => TemporalFormula::not(sub(rng)),
        1 => TemporalFormula::next(sub(rng)),
        2 => TemporalFormula::always(sub(rng)),
        3 => TemporalFormula::eventually(sub(rng)),
        4 => TemporalFormula::always_within(rng.gen_range(1..=20), sub(rng)),
        5 => TemporalFormula::eventually_within(rng.gen_range(1..=20), sub(rng)),
        6 => TemporalFormula::and(sub(rng), sub(rng)),
        7 => TemporalFormula::or(sub(rng), sub(rng)),
        _ => TemporalFormula::implies(sub(rng), sub(rng)),
    }
}

const VARS: [&str; 3] = ["x", "y", "z"];
const PREDS: [(&str, usize); 3] = [("man", 1), ("woman", 1), ("loves", 2)];

pub fn random_term<R: Rng>(rng: &mut R, depth: u32) -> FreeTerm {
    let var = *VARS.choose(rng).unwrap();
    if depth == 0 || rng.gen_ratio(2, 3) {
        return FreeTerm::var(var);
    }
    let body = random_free(rng, depth - 1);
    if rng.gen_bool(0.5) {
        FreeTerm::iota(var, body)
    } else {
        FreeTerm::epsilon(var, body)
    }
}

pub fn random_free<R: Rng>(rng: &mut R, depth: u32) -> FreeFormula {
    if depth == 0 || rng.gen_ratio(1, 5) {
        if rng.gen_ratio(1, 4) {
            return FreeFormula::eq(
                random_term(rng, depth.saturating_sub(1)),
                random_term(rng, depth.saturating_sub(1)),
            );
        }
        let (name, arity) = *PREDS.choose(rng).unwrap();
        let args = (0..arity)
            .map(|_| random_term(rng, depth.saturating_sub(1)))
            .collect();
        return FreeFormula::pred(name, args);
    }
    let sub = |rng: &mut R| random_free(rng, depth - 1);
    let var = *VARS.choose(rng).unwrap();
    match rng.gen_range(0..6) {
        0 => FreeFormula::not(sub(rng)),
        1 => FreeFormula::and(sub(rng), sub(rng)),
        2 => FreeFormula::or(sub(rng), sub(rng)),
        3 => FreeFormula::implies(sub(rng), sub(rng)),
        4 => FreeFormula::forall(var, sub(rng)),
        _ => FreeFormula::exists(var, sub(rng)),
    }
}
