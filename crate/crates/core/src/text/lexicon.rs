use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::atom::PronounAtom;

const DEFAULT_LEXICON: &str = include_str!("../../data/english.lex");

/// How a surface form relates to its atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormKind {
    Subject,
    Object,
    /// Possessive, reflexive and other forms.
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Form {
    pub atom: PronounAtom,
    pub kind: FormKind,
    /// Only tracked when the descriptor mentions `atom`.
    pub conditional: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("atom {atom} has no {kind} form `{form}` in the lexicon")]
    MissingForm {
        atom: PronounAtom,
        kind: &'static str,
        form: String,
    },
}

/// Surface forms to pronoun atoms. Lookup is case-insensitive.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: BTreeMap<String, BTreeSet<Form>>,
}

fn kind_of(token: &str, atom: &PronounAtom) -> FormKind {
    if token == atom.subject() {
        FormKind::Subject
    } else if token == atom.object() {
        FormKind::Object
    } else {
        FormKind::Other
    }
}

impl Lexicon {
    /// The bundled English lexicon.
    pub fn english() -> Self {
        DEFAULT_LEXICON.parse().expect("bundled lexicon is valid")
    }

    /// Adds `token` as a form of `atom`.
    pub fn insert(&mut self, token: &str, atom: PronounAtom, conditional: bool) {
        let token = token.to_lowercase();
        let kind = kind_of(&token, &atom);
        self.entries.entry(token).or_default().insert(Form {
            atom,
            kind,
            conditional,
        });
    }

    pub fn forms(&self, token: &str) -> impl Iterator<Item = &Form> {
        self.entries
            .get(&token.to_lowercase())
            .into_iter()
            .flatten()
    }

    /// Atoms `token` counts as when checking a descriptor over `tracked`.
    pub fn lookup<'a>(
        &'a self,
        token: &str,
        tracked: &'a BTreeSet<PronounAtom>,
    ) -> impl Iterator<Item = &'a PronounAtom> + 'a {
        self.entries
            .get(&token.to_lowercase())
            .into_iter()
            .flatten()
            .filter(|f| !f.conditional || tracked.contains(&f.atom))
            .map(|f| &f.atom)
    }

    /// Every atom with at least one form.
    pub fn atoms(&self) -> BTreeSet<&PronounAtom> {
        self.entries.values().flatten().map(|f| &f.atom).collect()
    }

    pub fn covers(&self, atom: &PronounAtom) -> bool {
        self.atoms().contains(atom)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Checks that each atom has both its subject and its object form.
    pub fn validate(&self) -> Result<(), LexiconError> {
        for atom in self.atoms() {
            for (name, form) in [("subject", atom.subject()), ("object", atom.object())] {
                if !self.forms(form).any(|f| &f.atom == atom) {
                    return Err(LexiconError::MissingForm {
                        atom: atom.clone(),
                        kind: name,
                        form: form.into(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// One entry per line, `<form> -> <atom> [<atom>...]`; a trailing `?` on
/// the form marks it conditional. `#` starts a comment line.
impl FromStr for Lexicon {
    type Err = LexiconError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lex = Lexicon::default();
        for (i, raw) in s.lines().enumerate() {
            let line = i + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let syntax = |message: String| LexiconError::Syntax { line, message };
            let (form, atoms) = body
                .split_once("->")
                .ok_or_else(|| syntax("expected `<form> -> <atom>...`".into()))?;
            let form = form.trim();
            let (form, conditional) = match form.strip_suffix('?') {
                Some(f) => (f, true),
                None => (form, false),
            };
            if form.is_empty() || !form.chars().all(char::is_alphabetic) {
                return Err(syntax(format!("invalid surface form `{form}`")));
            }
            let mut any = false;
            for a in atoms.split_whitespace() {
                let atom: PronounAtom = a.parse().map_err(|e| syntax(format!("{e}")))?;
                lex.insert(form, atom, conditional);
                any = true;
            }
            if !any {
                return Err(syntax(format!("form `{form}` lists no atoms")));
            }
        }
        lex.validate()?;
        Ok(lex)
    }
}

impl fmt::Display for Lexicon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (token, forms) in &self.entries {
            let mut by_flag: BTreeMap<bool, Vec<&PronounAtom>> = BTreeMap::new();
            for form in forms {
                by_flag
                    .entry(form.conditional)
                    .or_default()
                    .push(&form.atom);
            }
            for (conditional, atoms) in by_flag {
                let mark = if conditional { "?" } else { "" };
                let atoms: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
                writeln!(f, "{token}{mark} -> {}", atoms.join(" "))?;
            }
        }
        Ok(())
    }
}
