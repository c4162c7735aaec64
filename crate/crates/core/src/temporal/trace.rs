use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::atom::PronounAtom;
use crate::parse::ParseError;

/// One time step: the set of pronoun classes used in it.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Utterance {
    pub atoms: BTreeSet<PronounAtom>,
    /// Byte range in the source document, when extracted from text.
    pub source_span: Option<(usize, usize)>,
}

impl Utterance {
    pub fn new(atoms: impl IntoIterator<Item = PronounAtom>) -> Self {
        Utterance {
            atoms: atoms.into_iter().collect(),
            source_span: None,
        }
    }

    pub fn empty() -> Self {
        Utterance::default()
    }

    pub fn with_span(mut self, start: usize, end: usize) -> Self {
        self.source_span = Some((start, end));
        self
    }

    pub fn uses(&self, atom: &PronounAtom) -> bool {
        self.atoms.contains(atom)
    }
}

impl fmt::Display for Utterance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("-");
        }
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// A finite sequence of utterances, indexed from 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Trace {
    pub utterances: Vec<Utterance>,
}

impl Trace {
    pub fn new(utterances: Vec<Utterance>) -> Self {
        Trace { utterances }
    }

    pub fn len(&self) -> usize {
        self.utterances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.utterances.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Utterance> {
        self.utterances.get(i)
    }

    /// Builds a trace from atom-key lists, e.g. `[&["she/her"], &[]]`.
    ///
    /// # Panics
    /// On a malformed atom key.
    pub fn from_keys(steps: &[&[&str]]) -> Self {
        Trace::new(
            steps
                .iter()
                .map(|keys| Utterance::new(keys.iter().map(|k| k.parse().expect("atom key"))))
                .collect(),
        )
    }
}

impl FromIterator<Utterance> for Trace {
    fn from_iter<I: IntoIterator<Item = Utterance>>(iter: I) -> Self {
        Trace::new(iter.into_iter().collect())
    }
}

/// One utterance per line: whitespace-separated atoms, or a lone `-` for an
/// utterance with none. `#` lines are comments; blank lines are ignored.
impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for u in &self.utterances {
            writeln!(f, "{u}")?;
        }
        Ok(())
    }
}

impl FromStr for Trace {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut utterances = Vec::new();
        let mut offset = 0;
        for line in s.split_inclusive('\n') {
            let line_start = offset;
            offset += line.len();
            let body = line.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            if body == "-" {
                utterances.push(Utterance::empty());
                continue;
            }
            let mut atoms = BTreeSet::new();
            let mut col = 0;
            for word in line.split_whitespace() {
                let at = line_start + col + line[col..].find(word).expect("word in line");
                col = at - line_start + word.len();
                let atom = word.parse::<PronounAtom>().map_err(|e| {
                    ParseError::new(
                        s,
                        at,
                        e.to_string(),
                        vec!["pronoun atom".into(), "'-'".into()],
                    )
                })?;
                atoms.insert(atom);
            }
            utterances.push(Utterance {
                atoms,
                source_span: None,
            });
        }
        Ok(Trace::new(utterances))
    }
}
