//! Subject/object pronoun classes, the propositional letters of the descriptor logics.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A subject/object pronoun class such as `she/her` or `ze/zir`.
///
/// The set of atoms is open: any pair of ASCII-letter tokens is admissible.
/// Both halves are stored lowercase, so equality, ordering and hashing all
/// follow the canonical `subject/object` key.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PronounAtom {
    subject: String,
    object: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtomError {
    #[error("pronoun token `{0}` must be a nonempty run of ASCII letters")]
    BadToken(String),
    #[error("pronoun atom `{0}` must have the shape subject/object")]
    MissingSlash(String),
}

fn check_token(token: &str) -> Result<String, AtomError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_alphabetic()) {
        return Err(AtomError::BadToken(token.to_string()));
    }
    Ok(token.to_ascii_lowercase())
}

impl PronounAtom {
    pub fn new(subject: &str, object: &str) -> Result<Self, AtomError> {
        Ok(PronounAtom {
            subject: check_token(subject)?,
            object: check_token(object)?,
        })
    }

    pub fn subject(&self) -> &str {
        &self.subject
    }

    pub fn object(&self) -> &str {
        &self.object
    }

    /// The canonical `subject/object` key.
    pub fn key(&self) -> String {
        format!("{}/{}", self.subject, self.object)
    }
}

impl FromStr for PronounAtom {
    type Err = AtomError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (subject, object) = s
            .split_once('/')
            .ok_or_else(|| AtomError::MissingSlash(s.to_string()))?;
        PronounAtom::new(subject, object)
    }
}

impl fmt::Display for PronounAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.subject, self.object)
    }
}
