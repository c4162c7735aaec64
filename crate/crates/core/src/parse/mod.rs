//! Concrete ASCII syntax for descriptors, sequents and free-logic formulas.
//!
//! | meaning          | ASCII     | also accepted |
//! |------------------|-----------|---------------|
//! | external choice  | `&`       |               |
//! | internal choice  | `(+)`     | `⊕`           |
//! | tensor           | `*`       | `⊗`           |
//! | linear implication | `-o`    | `⊸`           |
//! | always           | `[]`      | `□`           |
//! | eventually       | `<>`      | `◇`           |
//! | next             | `()`      | `○`           |
//! | bounded          | `[]<=k`, `<><=k` | `≤`    |
//! | not / and / or / implies | `!` `/\` `\/` `->` | `¬ ∧ ∨ →` |
//! | descriptions     | `iota x.`, `eps x.` | `ι`, `ε` |
//! | quantifiers      | `forall x.`, `exists x.` | `∀`, `∃` |
//! | turnstile        | `\|-`     | `⊢`           |
//!
//! Linear connectives, tightest first: `*`, `&`, `(+)`, `-o`, all right
//! associative. Temporal and free connectives: prefix operators tightest,
//! then `/\`, `\/`, `->`, all right associative. Binder bodies extend as far
//! right as possible. `#` starts a line comment anywhere.

mod free;
mod lexer;
mod linear;
mod temporal;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::ast::{FreeFormula, FreeTerm, LinearFormula, TemporalFormula};
use crate::linear::Sequent;
use lexer::{Tok, Token};

/// The first error found in an input; there is no recovery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub byte_offset: usize,
    /// 1-based.
    pub line: usize,
    /// 1-based, counted in characters.
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl ParseError {
    pub(crate) fn new(input: &str, offset: usize, message: String, expected: Vec<String>) -> Self {
        let offset = offset.min(input.len());
        let before = &input[..offset];
        let line = before.matches('\n').count() + 1;
        let line_start = before.rfind('\n').map_or(0, |p| p + 1);
        let column = input[line_start..offset].chars().count() + 1;
        ParseError {
            byte_offset: offset,
            line,
            column,
            message,
            expected,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

pub fn parse_linear(input: &str) -> Result<LinearFormula, ParseError> {
    let mut p = Parser::new(input)?;
    let f = p.linear()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_temporal(input: &str) -> Result<TemporalFormula, ParseError> {
    let mut p = Parser::new(input)?;
    let f = p.temporal()?;
    p.finish()?;
    Ok(f)
}

/// Parses a free-logic formula. Unbound variables are allowed and show up
/// in [`FreeFormula::free_vars`].
pub fn parse_free(input: &str) -> Result<FreeFormula, ParseError> {
    let mut p = Parser::new(input)?;
    let f = p.free_formula()?;
    p.finish()?;
    Ok(f)
}

/// Parses a single free-logic term such as `iota x. man(x)`.
pub fn parse_free_term(input: &str) -> Result<FreeTerm, ParseError> {
    let mut p = Parser::new(input)?;
    let t = p.free_term()?;
    p.finish()?;
    Ok(t)
}

/// Parses `F1, F2, ... |- G` or `|- G`.
pub fn parse_sequent(input: &str) -> Result<Sequent, ParseError> {
    let mut p = Parser::new(input)?;
    let mut context = Vec::new();
    if !p.at(&Tok::Turnstile) {
        loop {
            context.push(p.linear()?);
            if p.eat(&Tok::Comma) {
                continue;
            }
            if p.at(&Tok::Turnstile) {
                break;
            }
            return Err(p.error_here(vec!["','".into(), "'|-'".into()]));
        }
    }
    p.expect(&Tok::Turnstile)?;
    let goal = p.linear()?;
    p.finish()?;
    Ok(Sequent::new(context, goal))
}

pub(crate) struct Parser<'a> {
    input: &'a str,
    tokens: Vec<Token>,
    pos: usize,
    /// Arity of each predicate seen so far in a free-logic input.
    arities: HashMap<String, usize>,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Result<Self, ParseError> {
        Ok(Parser {
            input,
            tokens: lexer::tokenize(input)?,
            pos: 0,
            arities: HashMap::new(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn peek_at(&self, ahead: usize) -> Option<&Tok> {
        self.tokens.get(self.pos + ahead).map(|t| &t.tok)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.input.len(), |t| t.start)
    }

    fn at(&self, tok: &Tok) -> bool {
        self.peek() == Some(tok)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|t| t.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.at(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error_here(vec![tok.to_string()]))
        }
    }

    fn error_at(&self, offset: usize, message: String, expected: Vec<String>) -> ParseError {
        ParseError::new(self.input, offset, message, expected)
    }

    /// "unexpected X" at the current token.
    fn error_here(&self, expected: Vec<String>) -> ParseError {
        let message = match self.peek() {
            Some(t) => format!("unexpected {t}"),
            None => "unexpected end of input".to_string(),
        };
        self.error_at(self.offset(), message, expected)
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            Err(self.error_here(vec!["operator".into(), "end of input".into()]))
        } else {
            Ok(())
        }
    }
}
