use std::collections::BTreeSet;
use std::fmt;

use crate::atom::PronounAtom;

/// A linear pronoun descriptor.
///
/// Operand order is kept exactly as written: `Tensor(a, b)` and
/// `Tensor(b, a)` are different syntax even though the prover treats them
/// as interderivable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LinearFormula {
    Atom(PronounAtom),
    /// External choice `A & B`: the speaker picks.
    With(Box<LinearFormula>, Box<LinearFormula>),
    /// Internal choice `A (+) B`: the referent picks.
    Plus(Box<LinearFormula>, Box<LinearFormula>),
    /// `A * B`: both must be used.
    Tensor(Box<LinearFormula>, Box<LinearFormula>),
    /// `A -o B`: correct an `A` into a `B`.
    Lolli(Box<LinearFormula>, Box<LinearFormula>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum LinearOp {
    With,
    Plus,
    Tensor,
    Lolli,
}

impl LinearOp {
    pub(crate) fn symbol(self) -> &'static str {
        match self {
            LinearOp::With => "&",
            LinearOp::Plus => "(+)",
            LinearOp::Tensor => "*",
            LinearOp::Lolli => "-o",
        }
    }
}

impl LinearFormula {
    pub fn atom(atom: PronounAtom) -> Self {
        LinearFormula::Atom(atom)
    }

    pub fn with(l: LinearFormula, r: LinearFormula) -> Self {
        LinearFormula::With(Box::new(l), Box::new(r))
    }

    pub fn plus(l: LinearFormula, r: LinearFormula) -> Self {
        LinearFormula::Plus(Box::new(l), Box::new(r))
    }

    pub fn tensor(l: LinearFormula, r: LinearFormula) -> Self {
        LinearFormula::Tensor(Box::new(l), Box::new(r))
    }

    pub fn lolli(l: LinearFormula, r: LinearFormula) -> Self {
        LinearFormula::Lolli(Box::new(l), Box::new(r))
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, LinearFormula::Atom(_))
    }

    pub(crate) fn split(&self) -> Option<(LinearOp, &LinearFormula, &LinearFormula)> {
        match self {
            LinearFormula::Atom(_) => None,
            LinearFormula::With(l, r) => Some((LinearOp::With, l, r)),
            LinearFormula::Plus(l, r) => Some((LinearOp::Plus, l, r)),
            LinearFormula::Tensor(l, r) => Some((LinearOp::Tensor, l, r)),
            LinearFormula::Lolli(l, r) => Some((LinearOp::Lolli, l, r)),
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self.split() {
            None => 1,
            Some((_, l, r)) => 1 + l.size() + r.size(),
        }
    }

    pub fn atoms(&self) -> BTreeSet<PronounAtom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<PronounAtom>) {
        match self {
            LinearFormula::Atom(a) => {
                out.insert(a.clone());
            }
            _ => {
                if let Some((_, l, r)) = self.split() {
                    l.collect_atoms(out);
                    r.collect_atoms(out);
                }
            }
        }
    }

    /// Canonical ASCII concrete syntax; same as `to_string()`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl From<PronounAtom> for LinearFormula {
    fn from(atom: PronounAtom) -> Self {
        LinearFormula::Atom(atom)
    }
}

// A composite operand is parenthesized unless it is the right operand of
// the same (right-associative) operator.
fn fmt_operand(
    f: &mut fmt::Formatter<'_>,
    parent: LinearOp,
    child: &LinearFormula,
    right: bool,
) -> fmt::Result {
    match child.split() {
        None => write!(f, "{child}"),
        Some((op, _, _)) if right && op == parent => write!(f, "{child}"),
        Some(_) => write!(f, "({child})"),
    }
}

impl fmt::Display for LinearFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.split() {
            None => match self {
                LinearFormula::Atom(a) => write!(f, "{a}"),
                _ => unreachable!("only atoms are leaves"),
            },
            Some((op, l, r)) => {
                fmt_operand(f, op, l, false)?;
                write!(f, " {} ", op.symbol())?;
                fmt_operand(f, op, r, true)
            }
        }
    }
}
