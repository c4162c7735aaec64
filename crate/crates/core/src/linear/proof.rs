use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::Sequent;
use crate::parse::{parse_sequent, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Id,
    TensorR,
    TensorL,
    WithR,
    WithL1,
    WithL2,
    PlusR1,
    PlusR2,
    PlusL,
    LolliR,
    LolliL,
}

impl Rule {
    pub const ALL: [Rule; 11] = [
        Rule::Id,
        Rule::TensorR,
        Rule::TensorL,
        Rule::WithR,
        Rule::WithL1,
        Rule::WithL2,
        Rule::PlusR1,
        Rule::PlusR2,
        Rule::PlusL,
        Rule::LolliR,
        Rule::LolliL,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Id => "Id",
            Rule::TensorR => "TensorR",
            Rule::TensorL => "TensorL",
            Rule::WithR => "WithR",
            Rule::WithL1 => "WithL1",
            Rule::WithL2 => "WithL2",
            Rule::PlusR1 => "PlusR1",
            Rule::PlusR2 => "PlusR2",
            Rule::PlusL => "PlusL",
            Rule::LolliR => "LolliR",
            Rule::LolliL => "LolliL",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rule::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

/// A derivation: `conclusion` follows from the premises' conclusions by `rule`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTree {
    pub rule: Rule,
    pub conclusion: Sequent,
    pub premises: Vec<ProofTree>,
}

impl ProofTree {
    pub fn new(rule: Rule, conclusion: Sequent, premises: Vec<ProofTree>) -> Self {
        ProofTree {
            rule,
            conclusion,
            premises,
        }
    }

    /// Number of rule applications.
    pub fn node_count(&self) -> usize {
        1 + self
            .premises
            .iter()
            .map(ProofTree::node_count)
            .sum::<usize>()
    }

    pub fn height(&self) -> usize {
        1 + self
            .premises
            .iter()
            .map(ProofTree::height)
            .max()
            .unwrap_or(0)
    }

    fn write_indented(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        writeln!(
            f,
            "{:width$}{} | {}",
            "",
            self.rule,
            self.conclusion,
            width = depth * 2
        )?;
        for p in &self.premises {
            p.write_indented(f, depth + 1)?;
        }
        Ok(())
    }
}

/// One node per line, `rule | sequent`, children indented two spaces
/// beneath their parent.
impl fmt::Display for ProofTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofTreeError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: bad sequent: {source}")]
    Sequent { line: usize, source: ParseError },
    #[error("empty proof")]
    Empty,
}

impl FromStr for ProofTree {
    type Err = ProofTreeError;

    /// Reads back the format produced by `Display`. Blank lines and lines
    /// starting with `#` are skipped.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut nodes: Vec<(usize, usize, ProofTree)> = Vec::new();
        for (idx, raw) in s.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let indent = raw.len() - trimmed.len();
            if indent % 2 != 0 || raw[..indent].contains('\t') {
                return Err(ProofTreeError::Malformed {
                    line,
                    message: "indentation must be a multiple of two spaces".into(),
                });
            }
            let (rule, sequent) =
                trimmed
                    .split_once(" | ")
                    .ok_or_else(|| ProofTreeError::Malformed {
                        line,
                        message: "expected `rule | sequent`".into(),
                    })?;
            let rule: Rule = rule
                .trim()
                .parse()
                .map_err(|message| ProofTreeError::Malformed { line, message })?;
            let conclusion = parse_sequent(sequent)
                .map_err(|source| ProofTreeError::Sequent { line, source })?;
            nodes.push((
                indent / 2,
                line,
                ProofTree::new(rule, conclusion, Vec::new()),
            ));
        }
        if nodes.is_empty() {
            return Err(ProofTreeError::Empty);
        }
        if nodes[0].0 != 0 {
            return Err(ProofTreeError::Malformed {
                line: nodes[0].1,
                message: "root must not be indented".into(),
            });
        }
        // Fold the flat list into a tree with an explicit stack of open
        // ancestors.
        let mut stack: Vec<(usize, ProofTree)> = Vec::new();
        let mut root = None;
        for (depth, line, node) in nodes {
            while stack.last().is_some_and(|(d, _)| *d >= depth) {
                let (_, done) = stack.pop().expect("nonempty");
                attach(&mut stack, &mut root, done, line)?;
            }
            if depth != stack.last().map_or(0, |(d, _)| d + 1) {
                return Err(ProofTreeError::Malformed {
                    line,
                    message: "indentation skips a level".into(),
                });
            }
            if depth == 0 && root.is_some() {
                return Err(ProofTreeError::Malformed {
                    line,
                    message: "more than one root".into(),
                });
            }
            stack.push((depth, node));
        }
        while let Some((_, done)) = stack.pop() {
            attach(&mut stack, &mut root, done, 0)?;
        }
        root.ok_or(ProofTreeError::Empty)
    }
}

fn attach(
    stack: &mut [(usize, ProofTree)],
    root: &mut Option<ProofTree>,
    node: ProofTree,
    line: usize,
) -> Result<(), ProofTreeError> {
    match stack.last_mut() {
        Some((_, parent)) => parent.premises.push(node),
        None if root.is_none() => *root = Some(node),
        None => {
            return Err(ProofTreeError::Malformed {
                line,
                message: "more than one root".into(),
            })
        }
    }
    Ok(())
}
