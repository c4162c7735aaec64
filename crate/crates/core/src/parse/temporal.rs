use super::lexer::Tok;
use super::{ParseError, Parser};
use crate::ast::TemporalFormula;

impl Parser<'_> {
    pub(crate) fn temporal(&mut self) -> Result<TemporalFormula, ParseError> {
        let l = self.temporal_or()?;
        if self.eat(&Tok::Arrow) {
            return Ok(TemporalFormula::implies(l, self.temporal()?));
        }
        Ok(l)
    }

    fn temporal_or(&mut self) -> Result<TemporalFormula, ParseError> {
        let l = self.temporal_and()?;
        if self.eat(&Tok::OrOp) {
            return Ok(TemporalFormula::or(l, self.temporal_or()?));
        }
        Ok(l)
    }

    fn temporal_and(&mut self) -> Result<TemporalFormula, ParseError> {
        let l = self.temporal_unary()?;
        if self.eat(&Tok::AndOp) {
            return Ok(TemporalFormula::and(l, self.temporal_and()?));
        }
        Ok(l)
    }

    /// Parses an optional `<= k` after `[]` or `<>`.
    fn bound(&mut self) -> Result<Option<u32>, ParseError> {
        if !self.eat(&Tok::Le) {
            return Ok(None);
        }
        let offset = self.offset();
        match self.peek() {
            Some(Tok::Int(digits)) => {
                let k = digits.parse::<u32>().map_err(|_| {
                    self.error_at(offset, format!("bound {digits} is too large"), vec![])
                })?;
                if k == 0 {
                    return Err(self.error_at(
                        offset,
                        "bound k must be at least 1".into(),
                        vec!["positive integer".into()],
                    ));
                }
                self.bump();
                Ok(Some(k))
            }
            _ => Err(self.error_here(vec!["positive integer".into()])),
        }
    }

    fn temporal_unary(&mut self) -> Result<TemporalFormula, ParseError> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.bump();
                Ok(TemporalFormula::not(self.temporal_unary()?))
            }
            Some(Tok::Next) => {
                self.bump();
                Ok(TemporalFormula::next(self.temporal_unary()?))
            }
            Some(Tok::Always) => {
                self.bump();
                let k = self.bound()?;
                let body = self.temporal_unary()?;
                Ok(match k {
                    Some(k) => TemporalFormula::always_within(k, body),
                    None => TemporalFormula::always(body),
                })
            }
            Some(Tok::Eventually) => {
                self.bump();
                let k = self.bound()?;
                let body = self.temporal_unary()?;
                Ok(match k {
                    Some(k) => TemporalFormula::eventually_within(k, body),
                    None => TemporalFormula::eventually(body),
                })
            }
            _ => self.temporal_primary(),
        }
    }

    fn temporal_primary(&mut self) -> Result<TemporalFormula, ParseError> {
        let f = match self.peek() {
            Some(Tok::Atom(a)) => TemporalFormula::Atom(a.clone()),
            Some(Tok::True) => TemporalFormula::True,
            Some(Tok::False) => TemporalFormula::False,
            Some(Tok::LParen) => {
                self.bump();
                let f = self.temporal()?;
                self.expect(&Tok::RParen)?;
                return Ok(f);
            }
            Some(_) => return Err(self.error_here(vec!["formula".into()])),
            None => {
                return Err(self.error_at(
                    self.offset(),
                    "expected formula".into(),
                    vec!["formula".into()],
                ))
            }
        };
        self.bump();
        Ok(f)
    }
}
