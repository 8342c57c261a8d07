//! Parser for ideal expressions in the CLI input grammar.
//!
//! ```text
//! ideal  := '(' [ term (',' term)* ] ')'
//! term   := factor ('*' factor)*
//! factor := identifier ('^' integer)? | '1'
//! ```
//!
//! Identifiers are an ASCII letter followed by alphanumerics; whitespace is
//! insignificant. `^0` is accepted (the factor contributes nothing), the
//! bare factor `1` is the constant monomial, and an empty generator list is
//! the zero ideal. Anything additive (`+`, `-`) is rejected with a
//! position-annotated "non-monomial generator" error. Variables either come
//! from an explicit list (undeclared names are errors) or are inferred in
//! first-appearance order.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, Ring};

/// A parsed ideal expression: the source text, the ambient ring (declared
/// or inferred), and the canonicalized ideal.
#[derive(Clone, Debug)]
pub struct IdealExpression {
    pub source: String,
    pub ring: Ring,
    pub ideal: MonomialIdeal,
}

/// One parsed factor: a variable name (with position, for error reporting)
/// raised to an exponent.
#[derive(Debug)]
struct Factor {
    name: String,
    pos: usize,
    exponent: u64,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    fn skip_whitespace(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_whitespace();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(self.pos, format!("expected '{}'", byte as char))),
        }
    }

    fn check_additive(&mut self) -> Result<()> {
        if let Some(b) = self.peek() {
            if b == b'+' || b == b'-' {
                return Err(self.error(self.pos, "non-monomial generator"));
            }
        }
        Ok(())
    }

    fn parse_integer(&mut self) -> Result<u64> {
        self.skip_whitespace();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(start, "expected an integer"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        digits
            .parse::<u64>()
            .map_err(|_| self.error(start, "integer too large"))
    }

    fn parse_identifier(&mut self) -> Result<(String, usize)> {
        self.skip_whitespace();
        let start = self.pos;
        match self.bytes.get(self.pos) {
            Some(b) if b.is_ascii_alphabetic() => self.pos += 1,
            _ => return Err(self.error(start, "expected a variable name")),
        }
        while self
            .bytes
            .get(self.pos)
            .is_some_and(u8::is_ascii_alphanumeric)
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii identifier")
            .to_string();
        Ok((name, start))
    }

    fn parse_factor(&mut self) -> Result<Option<Factor>> {
        self.check_additive()?;
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                // The constant factor contributes no variable.
                Ok(None)
            }
            Some(b) if b.is_ascii_digit() => Err(self.error(
                self.pos,
                "numeric coefficients are not supported; only the constant 1",
            )),
            _ => {
                let (name, pos) = self.parse_identifier()?;
                let exponent = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.parse_integer()?
                } else {
                    1
                };
                Ok(Some(Factor {
                    name,
                    pos,
                    exponent,
                }))
            }
        }
    }

    fn parse_term(&mut self) -> Result<Vec<Factor>> {
        let mut factors = Vec::new();
        if let Some(f) = self.parse_factor()? {
            factors.push(f);
        }
        loop {
            self.check_additive()?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                if let Some(f) = self.parse_factor()? {
                    factors.push(f);
                }
            } else {
                return Ok(factors);
            }
        }
    }

    fn parse_ideal_body(&mut self) -> Result<Vec<Vec<Factor>>> {
        self.expect(b'(')?;
        let mut terms = Vec::new();
        if self.peek() == Some(b')') {
            self.pos += 1;
            return Ok(terms);
        }
        loop {
            terms.push(self.parse_term()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b')') => {
                    self.pos += 1;
                    return Ok(terms);
                }
                Some(b'+') | Some(b'-') => {
                    return Err(self.error(self.pos, "non-monomial generator"))
                }
                _ => return Err(self.error(self.pos, "expected ',' or ')'")),
            }
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_whitespace();
        if self.pos != self.bytes.len() {
            return Err(self.error(self.pos, "unexpected trailing input"));
        }
        Ok(())
    }
}

/// Parse an ideal expression. With `vars`, the exponent positions are fixed
/// by the declared order and undeclared identifiers are errors; without,
/// the ring is inferred in first-appearance order.
pub fn parse_ideal(text: &str, vars: Option<&[String]>) -> Result<IdealExpression> {
    let mut parser = Parser::new(text);
    let terms = parser.parse_ideal_body()?;
    parser.finish()?;

    let ring = match vars {
        Some(vars) => Ring::new(vars.to_vec())?,
        None => {
            let mut seen: Vec<String> = Vec::new();
            for term in &terms {
                for factor in term {
                    if !seen.contains(&factor.name) {
                        seen.push(factor.name.clone());
                    }
                }
            }
            if seen.is_empty() {
                // No variables appear (e.g. "()" or "(1)"): a one-variable
                // ring still hosts the zero and unit ideals.
                seen.push("x".to_string());
            }
            Ring::new(seen)?
        }
    };

    let mut gens = Vec::with_capacity(terms.len());
    for term in &terms {
        let mut exps = vec![0u64; ring.num_vars()];
        for factor in term {
            let index = ring
                .variable_index(&factor.name)
                .ok_or_else(|| Error::Parse {
                    pos: factor.pos,
                    msg: format!("undeclared variable `{}`", factor.name),
                })?;
            exps[index] = exps[index]
                .checked_add(factor.exponent)
                .ok_or(Error::ExponentOverflow)?;
        }
        gens.push(Monomial::new(ring.clone(), exps));
    }

    Ok(IdealExpression {
        source: text.to_string(),
        ring: ring.clone(),
        ideal: MonomialIdeal::new(ring, gens)?,
    })
}
