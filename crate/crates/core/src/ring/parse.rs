//! Hand-written recursive descent over the scalar text grammar:
//!
//! ```text
//! rational := ['-'] int ['/' posint]
//! laurent  := term (('+'|'-') term)*
//! term     := [rational '*'] 'v' ['^' exponent] | rational
//! ```
//!
//! where `exponent` is a rational whose denominator divides 2. A leading
//! `-` directly before `v` is accepted so that canonical output such as
//! `-v^-4 + v^-3` parses back.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{LaurentHalf, Rational, Ring};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("syntax error at offset {position}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

pub(crate) struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    pub(crate) fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(b) => Err(self.error(format!("unexpected `{}`", b as char))),
        }
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.text[start..self.pos]
            .parse()
            .expect("ascii digits form an integer"))
    }

    pub(crate) fn rational(&mut self) -> Result<Rational, ParseError> {
        let negative = self.eat(b'-');
        let num = self.unsigned_rational()?;
        Ok(if negative { num.neg() } else { num })
    }

    fn unsigned_rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.digits()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(ParseError {
                    position: at,
                    message: "zero denominator".into(),
                });
            }
            Ok(Rational::from_big(num, den))
        } else {
            Ok(Rational::from_big(num, BigInt::from(1)))
        }
    }

    /// Exponent in halves after `v^`.
    fn half_exponent(&mut self) -> Result<i64, ParseError> {
        let at = self.pos;
        let e = self.rational()?;
        let doubled = e.mul(&Rational::from_i64(2));
        doubled.to_i64().ok_or(ParseError {
            position: at,
            message: "exponent must be an integer or half-integer".into(),
        })
    }

    /// One term as `(exponent in halves, coefficient)`.
    fn term(&mut self) -> Result<(i64, Rational), ParseError> {
        let negative = self.eat(b'-');
        let sign = |r: Rational| if negative { r.neg() } else { r };
        if self.peek() == Some(b'v') {
            self.pos += 1;
            let e = self.power()?;
            return Ok((e, sign(Rational::one())));
        }
        let coeff = sign(self.unsigned_rational()?);
        self.skip_ws();
        if self.eat(b'*') {
            self.skip_ws();
            if !self.eat(b'v') {
                return Err(self.error("expected `v` after `*`"));
            }
            let e = self.power()?;
            Ok((e, coeff))
        } else {
            Ok((0, coeff))
        }
    }

    fn power(&mut self) -> Result<i64, ParseError> {
        if self.eat(b'^') {
            self.half_exponent()
        } else {
            Ok(2)
        }
    }

    pub(crate) fn laurent(&mut self) -> Result<LaurentHalf, ParseError> {
        self.skip_ws();
        let mut terms = vec![self.term()?];
        loop {
            self.skip_ws();
            let negate = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                None => break,
                Some(b) => return Err(self.error(format!("unexpected `{}`", b as char))),
            };
            self.pos += 1;
            self.skip_ws();
            let (e, c) = self.term()?;
            terms.push((e, if negate { c.neg() } else { c }));
        }
        Ok(LaurentHalf::from_terms(terms))
    }
}
