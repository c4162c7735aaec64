use std::collections::BTreeSet;
use std::fmt;

use crate::atom::PronounAtom;

/// A temporal pronoun descriptor over a finite sequence of utterances.
///
/// `True` and `False` are not part of the descriptor language proper; they
/// exist so that formula progression has verdict constants to reduce to.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TemporalFormula {
    Atom(PronounAtom),
    True,
    False,
    Not(Box<TemporalFormula>),
    And(Box<TemporalFormula>, Box<TemporalFormula>),
    Or(Box<TemporalFormula>, Box<TemporalFormula>),
    Implies(Box<TemporalFormula>, Box<TemporalFormula>),
    /// `[] A`: every utterance from now on.
    Box(Box<TemporalFormula>),
    /// `<> A`: some utterance from now on.
    Diamond(Box<TemporalFormula>),
    /// `() A`: the next utterance (strong: false when there is none).
    Next(Box<TemporalFormula>),
    /// `[]<=k A`: each of the next `k` utterances, counting this one.
    BoxK(u32, Box<TemporalFormula>),
    /// `<><=k A`: some one of the next `k` utterances, counting this one.
    DiamondK(u32, Box<TemporalFormula>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum BinOp {
    And,
    Or,
    Implies,
}

impl BinOp {
    pub(crate) fn symbol(self) -> &'static str {
        match self {
            BinOp::And => "/\\",
            BinOp::Or => "\\/",
            BinOp::Implies => "->",
        }
    }
}

impl TemporalFormula {
    pub fn atom(atom: PronounAtom) -> Self {
        TemporalFormula::Atom(atom)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: TemporalFormula) -> Self {
        TemporalFormula::Not(Box::new(f))
    }

    pub fn and(l: TemporalFormula, r: TemporalFormula) -> Self {
        TemporalFormula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: TemporalFormula, r: TemporalFormula) -> Self {
        TemporalFormula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: TemporalFormula, r: TemporalFormula) -> Self {
        TemporalFormula::Implies(Box::new(l), Box::new(r))
    }

    pub fn always(f: TemporalFormula) -> Self {
        TemporalFormula::Box(Box::new(f))
    }

    pub fn eventually(f: TemporalFormula) -> Self {
        TemporalFormula::Diamond(Box::new(f))
    }

    pub fn next(f: TemporalFormula) -> Self {
        TemporalFormula::Next(Box::new(f))
    }

    /// # Panics
    /// If `k` is zero.
    pub fn always_within(k: u32, f: TemporalFormula) -> Self {
        assert!(k >= 1, "bounded modality needs k >= 1");
        TemporalFormula::BoxK(k, Box::new(f))
    }

    /// # Panics
    /// If `k` is zero.
    pub fn eventually_within(k: u32, f: TemporalFormula) -> Self {
        assert!(k >= 1, "bounded modality needs k >= 1");
        TemporalFormula::DiamondK(k, Box::new(f))
    }

    pub(crate) fn binary(&self) -> Option<(BinOp, &TemporalFormula, &TemporalFormula)> {
        match self {
            TemporalFormula::And(l, r) => Some((BinOp::And, l, r)),
            TemporalFormula::Or(l, r) => Some((BinOp::Or, l, r)),
            TemporalFormula::Implies(l, r) => Some((BinOp::Implies, l, r)),
            _ => None,
        }
    }

    fn unary(&self) -> Option<&TemporalFormula> {
        match self {
            TemporalFormula::Not(f)
            | TemporalFormula::Box(f)
            | TemporalFormula::Diamond(f)
            | TemporalFormula::Next(f)
            | TemporalFormula::BoxK(_, f)
            | TemporalFormula::DiamondK(_, f) => Some(f),
            _ => None,
        }
    }

    pub fn size(&self) -> usize {
        if let Some((_, l, r)) = self.binary() {
            1 + l.size() + r.size()
        } else if let Some(f) = self.unary() {
            1 + f.size()
        } else {
            1
        }
    }

    /// Maximum nesting depth; leaves have depth 1.
    pub fn depth(&self) -> usize {
        if let Some((_, l, r)) = self.binary() {
            1 + l.depth().max(r.depth())
        } else if let Some(f) = self.unary() {
            1 + f.depth()
        } else {
            1
        }
    }

    pub fn atoms(&self) -> BTreeSet<PronounAtom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<PronounAtom>) {
        if let TemporalFormula::Atom(a) = self {
            out.insert(a.clone());
        } else if let Some((_, l, r)) = self.binary() {
            l.collect_atoms(out);
            r.collect_atoms(out);
        } else if let Some(f) = self.unary() {
            f.collect_atoms(out);
        }
    }

    /// True when the formula contains `[]<=k` or `<><=k`.
    pub fn has_bounded(&self) -> bool {
        match self {
            TemporalFormula::BoxK(..) | TemporalFormula::DiamondK(..) => true,
            _ => {
                if let Some((_, l, r)) = self.binary() {
                    l.has_bounded() || r.has_bounded()
                } else {
                    self.unary().is_some_and(TemporalFormula::has_bounded)
                }
            }
        }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl From<PronounAtom> for TemporalFormula {
    fn from(atom: PronounAtom) -> Self {
        TemporalFormula::Atom(atom)
    }
}

impl fmt::Display for TemporalFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use TemporalFormula::*;
        if let Some((op, l, r)) = self.binary() {
            match l.binary() {
                Some(_) => write!(f, "({l})")?,
                None => write!(f, "{l}")?,
            }
            write!(f, " {} ", op.symbol())?;
            return match r.binary() {
                Some((rop, _, _)) if rop == op => write!(f, "{r}"),
                Some(_) => write!(f, "({r})"),
                None => write!(f, "{r}"),
            };
        }
        let (prefix, body) = match self {
            Atom(a) => return write!(f, "{a}"),
            True => return f.write_str("true"),
            False => return f.write_str("false"),
            Not(g) => ("!".to_string(), g),
            Box(g) => ("[] ".to_string(), g),
            Diamond(g) => ("<> ".to_string(), g),
            Next(g) => ("() ".to_string(), g),
            BoxK(k, g) => (format!("[]<={k} "), g),
            DiamondK(k, g) => (format!("<><={k} "), g),
            And(..) | Or(..) | Implies(..) => unreachable!("handled above"),
        };
        f.write_str(&prefix)?;
        if body.binary().is_some() {
            write!(f, "({body})")
        } else {
            write!(f, "{body}")
        }
    }
}
