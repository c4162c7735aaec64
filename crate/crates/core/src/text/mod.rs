//! Checking prose against a referent's temporal descriptor.
//!
//! A document is split into sentences. Each sentence that contains a
//! pronoun form from the lexicon becomes one utterance; sentences without
//! one are skipped. The resulting trace is run through the temporal monitor
//! and violations are reported with byte spans.
//!
//! There is no coreference resolution: every pronoun in the document is
//! attributed to the referent. Documents that mention other people will
//! produce false reports.

mod document;
mod lexicon;

pub use document::{
    check_document, extract_trace, segment, Diagnostic, ReferentSpec, Report, SpecError,
};
pub use lexicon::{Form, FormKind, Lexicon, LexiconError};
