use std::fmt;

use super::progress::progress;
use super::semantics::{end_value, expand_bounded};
use super::Utterance;
use crate::ast::TemporalFormula;

/// Outcome of monitoring so far. The position is the utterance that
/// decided the verdict; a verdict forced at end-of-stream has none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Satisfied(Option<usize>),
    Violated(Option<usize>),
    Inconclusive,
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Satisfied(_) => "Satisfied",
            Verdict::Violated(_) => "Violated",
            Verdict::Inconclusive => "Inconclusive",
        }
    }

    pub fn is_final(&self) -> bool {
        !matches!(self, Verdict::Inconclusive)
    }

    pub fn position(&self) -> Option<usize> {
        match self {
            Verdict::Satisfied(p) | Verdict::Violated(p) => *p,
            Verdict::Inconclusive => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind())?;
        if let Some(p) = self.position() {
            write!(f, " at {p}")?;
        }
        Ok(())
    }
}

/// Online monitor driven by formula progression.
///
/// Once a verdict is reached it is kept for the rest of the stream.
#[derive(Debug, Clone)]
pub struct Monitor {
    residual: TemporalFormula,
    position: usize,
    verdict: Verdict,
}

impl Monitor {
    pub fn new(formula: &TemporalFormula) -> Self {
        Monitor {
            residual: expand_bounded(formula),
            position: 0,
            verdict: Verdict::Inconclusive,
        }
    }

    /// The obligation on the rest of the stream.
    pub fn residual(&self) -> &TemporalFormula {
        &self.residual
    }

    /// Number of utterances consumed.
    pub fn position(&self) -> usize {
        self.position
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn step(&mut self, utterance: &Utterance) -> Verdict {
        let at = self.position;
        self.position += 1;
        if self.verdict.is_final() {
            return self.verdict;
        }
        self.residual = progress(&self.residual, utterance).expect("bounded modalities expanded");
        self.verdict = match self.residual {
            TemporalFormula::True => Verdict::Satisfied(Some(at)),
            TemporalFormula::False => Verdict::Violated(Some(at)),
            _ => Verdict::Inconclusive,
        };
        self.verdict
    }

    /// Ends the stream, deciding any open obligation against the empty
    /// remainder.
    pub fn finish(&mut self) -> Verdict {
        if !self.verdict.is_final() {
            self.verdict = if end_value(&self.residual) {
                Verdict::Satisfied(None)
            } else {
                Verdict::Violated(None)
            };
        }
        self.verdict
    }
}

/// Verdict after each utterance, followed by the forced end-of-stream
/// verdict. The result is one longer than the input.
pub fn monitor<'a>(
    formula: &TemporalFormula,
    utterances: impl IntoIterator<Item = &'a Utterance>,
) -> Vec<Verdict> {
    let mut m = Monitor::new(formula);
    let mut out: Vec<Verdict> = utterances.into_iter().map(|u| m.step(u)).collect();
    out.push(m.finish());
    out
}
