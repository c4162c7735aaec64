use super::lexer::Tok;
use super::{ParseError, Parser};
use crate::ast::{FreeFormula, FreeTerm};

impl Parser<'_> {
    pub(crate) fn free_formula(&mut self) -> Result<FreeFormula, ParseError> {
        let l = self.free_or()?;
        if self.eat(&Tok::Arrow) {
            return Ok(FreeFormula::implies(l, self.free_formula()?));
        }
        Ok(l)
    }

    fn free_or(&mut self) -> Result<FreeFormula, ParseError> {
        let l = self.free_and()?;
        if self.eat(&Tok::OrOp) {
            return Ok(FreeFormula::or(l, self.free_or()?));
        }
        Ok(l)
    }

    fn free_and(&mut self) -> Result<FreeFormula, ParseError> {
        let l = self.free_unary()?;
        if self.eat(&Tok::AndOp) {
            return Ok(FreeFormula::and(l, self.free_and()?));
        }
        Ok(l)
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(x)) => {
                let x = x.clone();
                self.bump();
                Ok(x)
            }
            _ => Err(self.error_here(vec![what.to_string()])),
        }
    }

    /// `x. body` after a binder keyword.
    fn binder(&mut self) -> Result<(String, FreeFormula), ParseError> {
        let var = self.ident("variable")?;
        self.expect(&Tok::Dot)?;
        let body = self.free_formula()?;
        Ok((var, body))
    }

    fn free_unary(&mut self) -> Result<FreeFormula, ParseError> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.bump();
                Ok(FreeFormula::not(self.free_unary()?))
            }
            Some(Tok::Forall) => {
                self.bump();
                let (x, body) = self.binder()?;
                Ok(FreeFormula::Forall(x, Box::new(body)))
            }
            Some(Tok::Exists) => {
                self.bump();
                let (x, body) = self.binder()?;
                Ok(FreeFormula::Exists(x, Box::new(body)))
            }
            _ => self.free_primary(),
        }
    }

    fn free_primary(&mut self) -> Result<FreeFormula, ParseError> {
        match (self.peek(), self.peek_at(1)) {
            (Some(Tok::Ident(_)), Some(Tok::LParen)) => self.predicate(),
            (Some(Tok::LParen), _) => {
                // `(` opens either a parenthesized formula or a
                // parenthesized term on the left of `=`.
                let start = self.pos;
                let saved = self.arities.clone();
                let as_eq = self.equation();
                match as_eq {
                    Ok(f) => Ok(f),
                    Err(eq_err) => {
                        self.pos = start;
                        self.arities = saved;
                        self.bump();
                        let inner = self.free_formula().and_then(|f| {
                            self.expect(&Tok::RParen)?;
                            Ok(f)
                        });
                        match inner {
                            Ok(f) => Ok(f),
                            Err(e) if eq_err.byte_offset > e.byte_offset => Err(eq_err),
                            Err(e) => Err(e),
                        }
                    }
                }
            }
            (None, _) => Err(self.error_at(
                self.offset(),
                "expected formula".into(),
                vec!["formula".into()],
            )),
            _ => self.equation(),
        }
    }

    fn equation(&mut self) -> Result<FreeFormula, ParseError> {
        let l = self.free_term()?;
        self.expect(&Tok::Equals)?;
        let r = self.free_term()?;
        Ok(FreeFormula::Eq(l, r))
    }

    fn predicate(&mut self) -> Result<FreeFormula, ParseError> {
        let offset = self.offset();
        let name = self.ident("predicate")?;
        self.expect(&Tok::LParen)?;
        let mut args = vec![self.free_term()?];
        while self.eat(&Tok::Comma) {
            args.push(self.free_term()?);
        }
        self.expect(&Tok::RParen)?;
        match self.arities.get(&name) {
            Some(&n) if n != args.len() => {
                return Err(self.error_at(
                    offset,
                    format!(
                        "predicate `{name}` used with {} argument(s) but earlier with {n}",
                        args.len()
                    ),
                    vec![],
                ))
            }
            _ => {
                self.arities.insert(name.clone(), args.len());
            }
        }
        Ok(FreeFormula::Pred(name, args))
    }

    pub(crate) fn free_term(&mut self) -> Result<FreeTerm, ParseError> {
        match self.peek() {
            Some(Tok::Ident(x)) => {
                let t = FreeTerm::Var(x.clone());
                self.bump();
                Ok(t)
            }
            Some(Tok::Iota) => {
                self.bump();
                let (x, body) = self.binder()?;
                Ok(FreeTerm::Iota(x, Box::new(body)))
            }
            Some(Tok::Eps) => {
                self.bump();
                let (x, body) = self.binder()?;
                Ok(FreeTerm::Epsilon(x, Box::new(body)))
            }
            Some(Tok::LParen) => {
                self.bump();
                let t = self.free_term()?;
                self.expect(&Tok::RParen)?;
                Ok(t)
            }
            _ => Err(self.error_here(vec!["term".into()])),
        }
    }
}
