//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace ignored, `−` accepted as a minus sign):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ('^' ['-'] integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants that are units of the domain.

use num_bigint::BigInt;

use crate::algebra::poly::Polynomial;
use crate::algebra::ring::PolyRing;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    ring: &'a PolyRing,
}

fn is_minus(c: char) -> bool {
    c == '-' || c == '−'
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek_raw(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(c) if is_minus(c) => {
                self.bump();
                -&self.term()?
            }
            Some('+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc.try_add(&self.term()?)?;
                }
                Some(c) if is_minus(c) => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = acc.try_mul(&self.factor()?)?;
                }
                Some('/') => {
                    self.bump();
                    let at = self.pos;
                    let d = self.factor()?;
                    if d.is_zero() {
                        let text = self.src[at..self.pos].trim().to_string();
                        return Err(Error::NotInvertible(text, self.ring.domain().to_string()));
                    }
                    if !d.is_unit_constant() {
                        return Err(Error::Parse { offset: at, message: "division only by nonzero constants".into() });
                    }
                    let c = d.leading_coeff().expect("nonzero");
                    let inv = c.inv().map_err(|_| {
                        Error::NotInvertible(c.to_string(), self.ring.domain().to_string())
                    })?;
                    acc = acc.scalar_mul(&inv)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        let negative = matches!(self.peek(), Some(c) if is_minus(c));
        if negative {
            self.bump();
        }
        let e = self.integer()?;
        if negative {
            return Err(Error::NegativeExponent(-i64::try_from(&e).unwrap_or(i64::MAX)));
        }
        let e = u32::try_from(&e).map_err(|_| Error::ExponentOverflow)?;
        base.pow(e)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let p = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(self.ring, self.ring.domain().from_bigint(&n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek_raw(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                match self.ring.var_index(name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

/// Parses `text` as a polynomial in `ring`.
pub fn parse_poly(text: &str, ring: &PolyRing) -> Result<Polynomial> {
    let mut p = Parser { src: text, pos: 0, ring };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::Domain;

    #[test]
    fn parses_examples() {
        let f2 = PolyRing::new(Domain::PrimeField(2), &["x", "y", "z", "a", "b", "c"]).unwrap();
        assert_eq!(parse_poly("x*a+y*b+z*c", &f2).unwrap().len(), 3);
        assert!(parse_poly("0", &f2).unwrap().is_zero());
        assert_eq!(parse_poly("(x+y)^2", &f2).unwrap(), parse_poly("x^2+y^2", &f2).unwrap());
    }

    #[test]
    fn errors() {
        let f2 = PolyRing::new(Domain::PrimeField(2), &["x", "y"]).unwrap();
        assert!(matches!(parse_poly("q + x", &f2), Err(Error::UnknownVariable(v)) if v == "q"));
        assert!(matches!(parse_poly("1/2*x", &f2), Err(Error::NotInvertible(..))));
        assert!(matches!(parse_poly("x^-1", &f2), Err(Error::NegativeExponent(-1))));
        assert!(matches!(parse_poly("x^", &f2), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x/y", &f2), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x y", &f2), Err(Error::Parse { .. })));
    }

    #[test]
    fn unicode_minus_and_rationals() {
        let q = PolyRing::new(Domain::Rationals, &["x", "y"]).unwrap();
        assert_eq!(parse_poly("x − y", &q).unwrap(), parse_poly("x - y", &q).unwrap());
        assert_eq!(parse_poly("x/2 + x/2", &q).unwrap(), parse_poly("x", &q).unwrap());
        assert_eq!(parse_poly("-(x+y)*(x-y)", &q).unwrap(), parse_poly("y^2 - x^2", &q).unwrap());
    }
}
