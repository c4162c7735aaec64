use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::{Lexicon, LexiconError};
use crate::ast::TemporalFormula;
use crate::atom::PronounAtom;
use crate::parse::{parse_temporal, ParseError};
use crate::temporal::{Monitor, Trace, Utterance, Verdict};

/// Splits `text` into sentences with their byte spans.
///
/// A sentence ends at `.`, `!` or `?` followed by whitespace or the end of
/// the text, and includes that terminator. Leading whitespace is not part of
/// a sentence; trailing text without a terminator is a final sentence.
pub fn segment(text: &str) -> Vec<(&str, (usize, usize))> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        if start.is_none() {
            if c.is_whitespace() {
                continue;
            }
            start = Some(i);
        }
        let ends = matches!(c, '.' | '!' | '?')
            && chars.peek().is_none_or(|&(_, next)| next.is_whitespace());
        if ends {
            let s = start.take().expect("inside a sentence");
            let e = i + c.len_utf8();
            out.push((&text[s..e], (s, e)));
        }
    }
    if let Some(s) = start {
        let e = s + text[s..].trim_end().len();
        out.push((&text[s..e], (s, e)));
    }
    out
}

fn words(sentence: &str) -> impl Iterator<Item = &str> {
    sentence
        .split(|c: char| !c.is_alphabetic())
        .filter(|w| !w.is_empty())
}

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: invalid descriptor: {source}")]
    Descriptor { line: usize, source: ParseError },
    #[error("spec has no `{0}:` line")]
    Missing(&'static str),
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("lexicon {}: {source}", path.display())]
    Lexicon { path: PathBuf, source: LexiconError },
    #[error("descriptor atom {0} has no forms in the lexicon")]
    Uncovered(PronounAtom),
}

/// Who is being referred to, how they want to be referred to, and which
/// words count as pronouns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferentSpec {
    pub names: Vec<String>,
    pub descriptor: TemporalFormula,
    pub lexicon: Lexicon,
}

impl ReferentSpec {
    /// Fails if the descriptor mentions an atom the lexicon cannot detect.
    pub fn new(
        names: Vec<String>,
        descriptor: TemporalFormula,
        lexicon: Lexicon,
    ) -> Result<Self, SpecError> {
        if names.is_empty() {
            return Err(SpecError::Missing("referent"));
        }
        if let Some(a) = descriptor.atoms().into_iter().find(|a| !lexicon.covers(a)) {
            return Err(SpecError::Uncovered(a.clone()));
        }
        Ok(ReferentSpec {
            names,
            descriptor,
            lexicon,
        })
    }

    pub fn load(path: &Path) -> Result<Self, SpecError> {
        let text = fs::read_to_string(path).map_err(|source| SpecError::Io {
            path: path.into(),
            source,
        })?;
        ReferentSpec::parse(&text, path.parent())
    }

    /// Parses a spec file. A relative `lexicon:` path is resolved against
    /// `base`; without a `lexicon:` line the bundled English lexicon is used.
    ///
    /// ```text
    /// referent: Alex
    /// descriptor: [] she/her
    /// lexicon: custom.lex
    /// ```
    pub fn parse(text: &str, base: Option<&Path>) -> Result<Self, SpecError> {
        let mut names = None;
        let mut descriptor = None;
        let mut lexicon_path = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let syntax = |message: String| SpecError::Syntax { line, message };
            let (key, value) = body
                .split_once(':')
                .ok_or_else(|| syntax("expected `key: value`".into()))?;
            let value = value.trim();
            let slot_taken = match key.trim() {
                "referent" => names
                    .replace(
                        value
                            .split_whitespace()
                            .map(String::from)
                            .collect::<Vec<_>>(),
                    )
                    .is_some(),
                "descriptor" => {
                    let f = parse_temporal(value)
                        .map_err(|source| SpecError::Descriptor { line, source })?;
                    descriptor.replace(f).is_some()
                }
                "lexicon" => lexicon_path.replace(PathBuf::from(value)).is_some(),
                other => return Err(syntax(format!("unknown key `{other}`"))),
            };
            if slot_taken {
                return Err(syntax(format!("`{}` given more than once", key.trim())));
            }
        }
        let names = names.ok_or(SpecError::Missing("referent"))?;
        let descriptor = descriptor.ok_or(SpecError::Missing("descriptor"))?;
        let lexicon = match lexicon_path {
            None => Lexicon::english(),
            Some(p) => {
                let path = match base {
                    Some(b) if p.is_relative() => b.join(p),
                    _ => p,
                };
                let text = fs::read_to_string(&path).map_err(|source| SpecError::Io {
                    path: path.clone(),
                    source,
                })?;
                text.parse()
                    .map_err(|source| SpecError::Lexicon { path, source })?
            }
        };
        ReferentSpec::new(names, descriptor, lexicon)
    }

    fn tracked(&self) -> BTreeSet<PronounAtom> {
        self.descriptor.atoms()
    }
}

/// One utterance per sentence containing at least one pronoun form, with
/// the indices of those sentences.
fn extract(text: &str, spec: &ReferentSpec) -> (Trace, Vec<usize>) {
    let tracked = spec.tracked();
    let mut utterances = Vec::new();
    let mut indices = Vec::new();
    for (i, (sentence, (s, e))) in segment(text).into_iter().enumerate() {
        let atoms: BTreeSet<PronounAtom> = words(sentence)
            .flat_map(|w| spec.lexicon.lookup(w, &tracked))
            .cloned()
            .collect();
        if !atoms.is_empty() {
            utterances.push(Utterance::new(atoms).with_span(s, e));
            indices.push(i);
        }
    }
    (Trace::new(utterances), indices)
}

/// Sentences that use a pronoun, as a trace. Every pronoun is attributed to
/// the referent.
pub fn extract_trace(text: &str, spec: &ReferentSpec) -> Trace {
    extract(text, spec).0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub span: (usize, usize),
    /// `None` for a problem found at the end of the document.
    pub sentence_index: Option<usize>,
    pub atoms: BTreeSet<PronounAtom>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub verdict: Verdict,
    pub diagnostics: Vec<Diagnostic>,
    pub trace: Trace,
}

pub fn check_document(text: &str, spec: &ReferentSpec) -> Report {
    let (trace, sentences) = extract(text, spec);
    let mut monitor = Monitor::new(&spec.descriptor);
    for u in &trace.utterances {
        if monitor.step(u).is_final() {
            break;
        }
    }
    let residual = monitor.residual().clone();
    let verdict = monitor.finish();
    let mut diagnostics = Vec::new();
    if let Verdict::Violated(at) = verdict {
        diagnostics.push(match at {
            Some(p) => {
                let u = &trace.utterances[p];
                Diagnostic {
                    span: u.source_span.expect("extracted utterances have spans"),
                    sentence_index: Some(sentences[p]),
                    atoms: u.atoms.clone(),
                    message: format!("uses {u}, which violates `{}`", spec.descriptor),
                }
            }
            None => Diagnostic {
                span: (text.len(), text.len()),
                sentence_index: None,
                atoms: BTreeSet::new(),
                message: format!("`{residual}` is still unmet"),
            },
        });
    }
    Report {
        verdict,
        diagnostics,
        trace,
    }
}

fn atoms_field(atoms: &BTreeSet<PronounAtom>) -> String {
    if atoms.is_empty() {
        return "-".into();
    }
    atoms
        .iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// 1-based line and column (in characters) of a byte offset.
fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    (line, before[line_start..].chars().count() + 1)
}

impl Report {
    /// Tab-separated lines: one per diagnostic, `start end kind atoms`, then
    /// a summary line spanning the document with the verdict and every atom
    /// found.
    pub fn render_machine(&self, text: &str) -> String {
        let mut out = String::new();
        for d in &self.diagnostics {
            let (s, e) = d.span;
            let _ = writeln!(
                out,
                "{s}\t{e}\t{}\t{}",
                self.verdict.kind(),
                atoms_field(&d.atoms)
            );
        }
        let all: BTreeSet<PronounAtom> = self
            .trace
            .utterances
            .iter()
            .flat_map(|u| u.atoms.iter().cloned())
            .collect();
        let _ = writeln!(
            out,
            "0\t{}\t{}\t{}",
            text.len(),
            self.verdict.kind(),
            atoms_field(&all)
        );
        out
    }

    /// Human-readable report; `source` names the document in positions.
    pub fn render_human(&self, text: &str, source: &str, spec: &ReferentSpec) -> String {
        let mut out = String::new();
        for d in &self.diagnostics {
            let (line, col) = line_col(text, d.span.0);
            let sentence = match d.sentence_index {
                Some(i) => format!("sentence {}", i + 1),
                None => "end of document".into(),
            };
            let _ = writeln!(out, "{source}:{line}:{col}: {sentence}: {}", d.message);
        }
        let n = self.trace.len();
        let _ = writeln!(
            out,
            "{source}: {} ({n} utterance{} checked against `{}`)",
            self.verdict.kind(),
            if n == 1 { "" } else { "s" },
            spec.descriptor
        );
        let _ = writeln!(
            out,
            "note: every pronoun in the document is attributed to {}; pronouns for other people are not told apart",
            spec.names.join("/")
        );
        out
    }
}
