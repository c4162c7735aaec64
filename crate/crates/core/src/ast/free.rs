use std::collections::BTreeSet;
use std::fmt;

/// A term of the free logic. Description terms may fail to denote.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FreeTerm {
    Var(String),
    /// `iota x. A`: the unique `x` satisfying `A`.
    Iota(String, Box<FreeFormula>),
    /// `eps x. A`: some fixed `x` satisfying `A`.
    Epsilon(String, Box<FreeFormula>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FreeFormula {
    Pred(String, Vec<FreeTerm>),
    Eq(FreeTerm, FreeTerm),
    Not(Box<FreeFormula>),
    And(Box<FreeFormula>, Box<FreeFormula>),
    Or(Box<FreeFormula>, Box<FreeFormula>),
    Implies(Box<FreeFormula>, Box<FreeFormula>),
    Forall(String, Box<FreeFormula>),
    Exists(String, Box<FreeFormula>),
}

impl FreeTerm {
    pub fn var(name: &str) -> Self {
        FreeTerm::Var(name.to_string())
    }

    pub fn iota(var: &str, body: FreeFormula) -> Self {
        FreeTerm::Iota(var.to_string(), Box::new(body))
    }

    pub fn epsilon(var: &str, body: FreeFormula) -> Self {
        FreeTerm::Epsilon(var.to_string(), Box::new(body))
    }

    pub fn size(&self) -> usize {
        match self {
            FreeTerm::Var(_) => 1,
            FreeTerm::Iota(_, body) | FreeTerm::Epsilon(_, body) => 1 + body.size(),
        }
    }

    pub fn is_description(&self) -> bool {
        !matches!(self, FreeTerm::Var(_))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            FreeTerm::Var(x) => {
                if !bound.contains(x) {
                    out.insert(x.clone());
                }
            }
            FreeTerm::Iota(x, body) | FreeTerm::Epsilon(x, body) => {
                bound.push(x.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }
}

impl FreeFormula {
    pub fn pred(name: &str, args: Vec<FreeTerm>) -> Self {
        FreeFormula::Pred(name.to_string(), args)
    }

    pub fn eq(l: FreeTerm, r: FreeTerm) -> Self {
        FreeFormula::Eq(l, r)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: FreeFormula) -> Self {
        FreeFormula::Not(Box::new(f))
    }

    pub fn and(l: FreeFormula, r: FreeFormula) -> Self {
        FreeFormula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: FreeFormula, r: FreeFormula) -> Self {
        FreeFormula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: FreeFormula, r: FreeFormula) -> Self {
        FreeFormula::Implies(Box::new(l), Box::new(r))
    }

    pub fn forall(var: &str, body: FreeFormula) -> Self {
        FreeFormula::Forall(var.to_string(), Box::new(body))
    }

    pub fn exists(var: &str, body: FreeFormula) -> Self {
        FreeFormula::Exists(var.to_string(), Box::new(body))
    }

    fn binary(&self) -> Option<(&'static str, &FreeFormula, &FreeFormula)> {
        match self {
            FreeFormula::And(l, r) => Some(("/\\", l, r)),
            FreeFormula::Or(l, r) => Some(("\\/", l, r)),
            FreeFormula::Implies(l, r) => Some(("->", l, r)),
            _ => None,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            FreeFormula::Pred(_, args) => 1 + args.iter().map(FreeTerm::size).sum::<usize>(),
            FreeFormula::Eq(l, r) => 1 + l.size() + r.size(),
            FreeFormula::Not(f) | FreeFormula::Forall(_, f) | FreeFormula::Exists(_, f) => {
                1 + f.size()
            }
            FreeFormula::And(l, r) | FreeFormula::Or(l, r) | FreeFormula::Implies(l, r) => {
                1 + l.size() + r.size()
            }
        }
    }

    /// Variables occurring unbound by any enclosing quantifier or description.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            FreeFormula::Pred(_, args) => {
                for t in args {
                    t.collect_free(bound, out);
                }
            }
            FreeFormula::Eq(l, r) => {
                l.collect_free(bound, out);
                r.collect_free(bound, out);
            }
            FreeFormula::Not(f) => f.collect_free(bound, out),
            FreeFormula::And(l, r) | FreeFormula::Or(l, r) | FreeFormula::Implies(l, r) => {
                l.collect_free(bound, out);
                r.collect_free(bound, out);
            }
            FreeFormula::Forall(x, f) | FreeFormula::Exists(x, f) => {
                bound.push(x.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Every `(name, arity)` pair used as a predicate, including inside descriptions.
    pub fn predicates(&self) -> BTreeSet<(String, usize)> {
        let mut out = BTreeSet::new();
        self.collect_preds(&mut out);
        out
    }

    fn collect_preds(&self, out: &mut BTreeSet<(String, usize)>) {
        let term = |t: &FreeTerm, out: &mut BTreeSet<(String, usize)>| {
            if let FreeTerm::Iota(_, body) | FreeTerm::Epsilon(_, body) = t {
                body.collect_preds(out);
            }
        };
        match self {
            FreeFormula::Pred(name, args) => {
                out.insert((name.clone(), args.len()));
                for t in args {
                    term(t, out);
                }
            }
            FreeFormula::Eq(l, r) => {
                term(l, out);
                term(r, out);
            }
            FreeFormula::Not(f) | FreeFormula::Forall(_, f) | FreeFormula::Exists(_, f) => {
                f.collect_preds(out)
            }
            FreeFormula::And(l, r) | FreeFormula::Or(l, r) | FreeFormula::Implies(l, r) => {
                l.collect_preds(out);
                r.collect_preds(out);
            }
        }
    }

    // Binder bodies extend as far right as possible, so a formula whose
    // rendering ends in an open binder cannot appear unparenthesized to the
    // left of a connective.
    fn right_open(&self) -> bool {
        match self {
            FreeFormula::Forall(..) | FreeFormula::Exists(..) => true,
            FreeFormula::Not(f) => f.right_open(),
            FreeFormula::Eq(_, r) => r.is_description(),
            FreeFormula::Pred(..) => false,
            // binary operands on the left are always parenthesized
            FreeFormula::And(..) | FreeFormula::Or(..) | FreeFormula::Implies(..) => true,
        }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FreeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreeTerm::Var(x) => f.write_str(x),
            FreeTerm::Iota(x, body) => write!(f, "iota {x}. {body}"),
            FreeTerm::Epsilon(x, body) => write!(f, "eps {x}. {body}"),
        }
    }
}

impl fmt::Display for FreeFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((sym, l, r)) = self.binary() {
            if l.right_open() {
                write!(f, "({l})")?;
            } else {
                write!(f, "{l}")?;
            }
            write!(f, " {sym} ")?;
            return match r.binary() {
                Some((rsym, _, _)) if rsym == sym => write!(f, "{r}"),
                Some(_) => write!(f, "({r})"),
                None => write!(f, "{r}"),
            };
        }
        match self {
            FreeFormula::Pred(name, args) => {
                write!(f, "{name}(")?;
                for (i, t) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_str(")")
            }
            FreeFormula::Eq(l, r) => {
                if l.is_description() {
                    write!(f, "({l}) = {r}")
                } else {
                    write!(f, "{l} = {r}")
                }
            }
            FreeFormula::Not(g) => {
                if g.binary().is_some() {
                    write!(f, "!({g})")
                } else {
                    write!(f, "!{g}")
                }
            }
            FreeFormula::Forall(x, body) => write!(f, "forall {x}. {body}"),
            FreeFormula::Exists(x, body) => write!(f, "exists {x}. {body}"),
            FreeFormula::And(..) | FreeFormula::Or(..) | FreeFormula::Implies(..) => {
                unreachable!("handled above")
            }
        }
    }
}
