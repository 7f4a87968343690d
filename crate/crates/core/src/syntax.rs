//! Text syntax for forms.
//!
//! ```text
//! tuple  := expr (';' expr)*
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := int ['/' int] | 't' ['^' int] | 'dt' | '(' expr ')'
//! ```
//!
//! Factors in a term are multiplied with the wedge product, so `3/2*t^2`,
//! `t dt`, `(1/3)dt` and `(1 + t)*dt` all parse. Error positions are byte
//! offsets into the original string.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::interval::{wedge, PolyForm};
use crate::rational::Rational;

pub fn parse_form(src: &str) -> Result<PolyForm> {
    parse_form_at(src, 0)
}

/// Parses a `;`-separated tuple of forms.
pub fn parse_tuple(src: &str) -> Result<Vec<PolyForm>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in src.split(';') {
        out.push(parse_form_at(piece, offset)?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

fn parse_form_at(src: &str, offset: usize) -> Result<PolyForm> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        offset,
    };
    let form = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(form)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    offset: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.offset + self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<PolyForm> {
        self.skip_ws();
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.scale(&-Rational::from_integer(1.into()));
        }
        loop {
            self.skip_ws();
            let sub = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let t = self.term()?;
            acc = if sub {
                acc.add(&t.scale(&-Rational::from_integer(1.into())))
            } else {
                acc.add(&t)
            };
        }
    }

    fn term(&mut self) -> Result<PolyForm> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = wedge(&acc, &f);
                }
                Some(c) if c.is_ascii_digit() || matches!(c, b't' | b'd' | b'(') => {
                    let f = self.factor()?;
                    acc = wedge(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<PolyForm> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let den = self.integer()?;
                    if den == BigInt::from(0) {
                        self.pos = at;
                        return Err(self.error("zero denominator"));
                    }
                    Ok(PolyForm::constant(Rational::new(num, den)))
                } else {
                    Ok(PolyForm::constant(Rational::from_integer(num)))
                }
            }
            Some(b't') => {
                self.pos += 1;
                self.skip_ws();
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let k = self.integer()?;
                    let k: usize = k.try_into().map_err(|_| {
                        self.pos = at;
                        self.error("exponent too large")
                    })?;
                    Ok(PolyForm::t_pow(k))
                } else {
                    Ok(PolyForm::t_pow(1))
                }
            }
            Some(b'd') => {
                if self.src.get(self.pos + 1) == Some(&b't') {
                    self.pos += 2;
                    Ok(PolyForm::dt())
                } else {
                    Err(self.error("expected 'dt'"))
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(self.error("expected a number, 't', 'dt' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }
}
