//! Recursive-descent parser for polynomial expressions.

use super::{PolyError, Polynomial, Result, VarTable};
use crate::rat::Rat;
use std::sync::Arc;

pub(super) struct Parser<'a> {
    table: &'a Arc<VarTable>,
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(super) fn new(table: &'a Arc<VarTable>, src: &'a str) -> Self {
        Parser { table, src: src.as_bytes(), pos: 0 }
    }

    pub(super) fn parse(mut self) -> Result<Polynomial> {
        let p = self.expr()?;
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(p)
    }

    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            self.skip_ws();
            if self.src[self.pos..].starts_with(b"**") {
                return Err(self.err("misplaced `**`"));
            }
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    match d.as_constant() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                        Some(_) => return Err(PolyError::Parse { pos: at, msg: "division by zero".into() }),
                        None => return Err(PolyError::Parse { pos: at, msg: "division by a non-constant".into() }),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat("^") || self.eat("**") {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected a non-negative integer exponent"));
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.expr()?;
                if !self.eat(")") {
                    return Err(self.err("expected `)`"));
                }
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let r: Rat = s.parse().map_err(|_| self.err("bad number"))?;
                Ok(Polynomial::constant(self.table, r))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let i = self
                    .table
                    .index_of(name)
                    .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
                Ok(Polynomial::var_idx(self.table, i))
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse, var, PolyError, VarTable};

    #[test]
    fn precedence_and_powers() {
        let t = VarTable::new(&["x", "y"]);
        let p = parse(&t, "-x^2 + 3*(x - y)**2/2").unwrap();
        let q = parse(&t, "1/2*x^2 - 3*x*y + 3/2*y^2").unwrap();
        assert_eq!(p, q);
        assert_eq!(parse(&t, "x*-y").unwrap(), -(var(&t, "x").unwrap() * var(&t, "y").unwrap()));
    }

    #[test]
    fn errors() {
        let t = VarTable::new(&["x"]);
        assert!(matches!(parse(&t, "x/x"), Err(PolyError::Parse { .. })));
        assert!(matches!(parse(&t, "q"), Err(PolyError::UnknownVariable(_))));
        assert!(matches!(parse(&t, "(x"), Err(PolyError::Parse { .. })));
        assert!(matches!(parse(&t, "x)"), Err(PolyError::Parse { .. })));
        assert!(matches!(parse(&t, "1/0"), Err(PolyError::Parse { .. })));
    }
}
