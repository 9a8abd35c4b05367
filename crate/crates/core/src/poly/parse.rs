//! Expression parser.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := ('-'|'+') factor | base ('^' nat)?
//! base   := var | ident | rational | '(' expr ')'
//! ```
//!
//! `ident` is any identifier other than `x`, `y`, `z`; it is resolved
//! against a parameter table (e.g. `lambda`).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Poly, PolyError, Rational};

pub fn parse_poly(text: &str, arity: usize) -> Result<Poly, PolyError> {
    parse_poly_with(text, arity, &BTreeMap::new())
}

pub fn parse_poly_with(
    text: &str,
    arity: usize,
    params: &BTreeMap<String, Rational>,
) -> Result<Poly, PolyError> {
    if arity != 2 && arity != 3 {
        return Err(PolyError::UnsupportedArity(arity));
    }
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        arity,
        params,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(parser.syntax(format!("unexpected `{}`", parser.chars[parser.pos])));
    }
    Ok(p)
}

/// Parse a rational literal `int` or `int/posint`, with optional sign.
pub fn parse_rational(text: &str) -> Result<Rational, PolyError> {
    let mut parser = Parser {
        chars: text.trim().chars().collect(),
        pos: 0,
        arity: 2,
        params: &BTreeMap::new(),
    };
    let negative = match parser.peek() {
        Some('-') => {
            parser.pos += 1;
            true
        }
        Some('+') => {
            parser.pos += 1;
            false
        }
        _ => false,
    };
    let value = parser.rational()?;
    if parser.pos < parser.chars.len() {
        return Err(parser.syntax("trailing characters after rational".into()));
    }
    Ok(if negative { -value } else { value })
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    arity: usize,
    params: &'a BTreeMap<String, Rational>,
}

impl Parser<'_> {
    fn syntax(&self, message: String) -> PolyError {
        PolyError::Syntax {
            position: self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, PolyError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                return Ok(-self.factor()?);
            }
            Some('+') => {
                self.pos += 1;
                return self.factor();
            }
            _ => {}
        }
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                self.pos = start;
                return Err(self.syntax("expected a natural exponent after `^`".into()));
            }
            let e: u32 = digits.parse().map_err(|_| PolyError::Syntax {
                position: start,
                message: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn rational(&mut self) -> Result<Rational, PolyError> {
        self.skip_ws();
        let num = self.digits();
        if num.is_empty() {
            return Err(self.syntax("expected a number".into()));
        }
        let num: BigInt = num.parse().expect("digits parse");
        // Only treat '/' as part of the literal when a digit follows.
        let save = self.pos;
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let den = self.digits();
            if den.is_empty() {
                return Err(self.syntax("expected a positive denominator after `/`".into()));
            }
            let den: BigInt = den.parse().expect("digits parse");
            if den.is_zero() {
                self.pos = save;
                return Err(self.syntax("zero denominator".into()));
            }
            return Ok(Rational::new(num, den));
        }
        self.pos = save;
        Ok(Rational::from_integer(num))
    }

    fn base(&mut self) -> Result<Poly, PolyError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.syntax("expected `)`".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                Ok(Poly::constant(self.arity, r))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let var = match name.as_str() {
                    "x" => Some(0),
                    "y" => Some(1),
                    "z" => Some(2),
                    _ => None,
                };
                match var {
                    Some(i) if i < self.arity => Ok(Poly::var(self.arity, i)),
                    Some(_) => Err(PolyError::WrongVariable {
                        position: start,
                        name,
                        arity: self.arity,
                    }),
                    None => match self.params.get(&name) {
                        Some(v) => Ok(Poly::constant(self.arity, v.clone())),
                        None => Err(PolyError::UnknownIdentifier {
                            position: start,
                            name,
                        }),
                    },
                }
            }
            Some(c) => Err(self.syntax(format!("unexpected `{c}`"))),
            None => Err(self.syntax("unexpected end of input".into())),
        }
    }
}
