use super::lexer::Tok;
use super::{ParseError, Parser};
use crate::ast::LinearFormula;

impl Parser<'_> {
    pub(crate) fn linear(&mut self) -> Result<LinearFormula, ParseError> {
        self.linear_lolli()
    }

    fn linear_lolli(&mut self) -> Result<LinearFormula, ParseError> {
        let l = self.linear_plus()?;
        if self.eat(&Tok::Lolli) {
            return Ok(LinearFormula::lolli(l, self.linear_lolli()?));
        }
        Ok(l)
    }

    fn linear_plus(&mut self) -> Result<LinearFormula, ParseError> {
        let l = self.linear_with()?;
        if self.eat(&Tok::Plus) {
            return Ok(LinearFormula::plus(l, self.linear_plus()?));
        }
        Ok(l)
    }

    fn linear_with(&mut self) -> Result<LinearFormula, ParseError> {
        let l = self.linear_tensor()?;
        if self.eat(&Tok::With) {
            return Ok(LinearFormula::with(l, self.linear_with()?));
        }
        Ok(l)
    }

    fn linear_tensor(&mut self) -> Result<LinearFormula, ParseError> {
        let l = self.linear_primary()?;
        if self.eat(&Tok::Star) {
            return Ok(LinearFormula::tensor(l, self.linear_tensor()?));
        }
        Ok(l)
    }

    fn linear_primary(&mut self) -> Result<LinearFormula, ParseError> {
        match self.peek() {
            Some(Tok::Atom(a)) => {
                let f = LinearFormula::Atom(a.clone());
                self.bump();
                Ok(f)
            }
            Some(Tok::LParen) => {
                self.bump();
                let f = self.linear()?;
                self.expect(&Tok::RParen)?;
                Ok(f)
            }
            Some(_) => Err(self.error_here(vec!["formula".into()])),
            None => Err(self.error_at(
                self.offset(),
                "expected formula".into(),
                vec!["formula".into()],
            )),
        }
    }
}
