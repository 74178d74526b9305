//! Text form of polynomials: a small expression parser and a printer.
//!
//! The parser accepts sums, differences, products (explicit `*` or
//! adjacency, as in `3(x+1)(x+2)`), parentheses, caret powers, and unary
//! minus, over the indeterminate `x` with integer constants reduced mod `p`.
//! Errors carry the byte offset of the offending character so callers can
//! point at it. The printer emits descending-degree form (`x^3+2x+4`)
//! using only canonical coefficients, and parses back to the same
//! polynomial.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::DensePolynomial;

/// Cap on the degree an expression may reach while being evaluated.
pub const DEGREE_LIMIT: u64 = 1 << 16;

/// Parse failure at a byte offset of the input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl core::fmt::Display for ParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "at offset {}: {}", self.pos, self.msg)
    }
}

/// Parses an expression like `(x+1)^8-1` into a polynomial over `Z_p`.
pub fn parse(input: &str, p: u32) -> Result<DensePolynomial, ParseError> {
    let mut parser = Parser {
        bytes: input.as_bytes(),
        pos: 0,
        p,
    };
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.error("empty input"));
    }
    let value = parser.expr()?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    p: u32,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: String::from(msg),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<DensePolynomial, ParseError> {
        self.skip_ws();
        let mut negated = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negated = true;
        }
        let mut acc = self.term()?;
        if negated {
            acc = acc.neg(self.p);
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.add(&rhs, self.p);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs, self.p);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<DensePolynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs, self.p);
                }
                // adjacency: 3(x+1), (x+1)(x+2), 2x
                Some(c) if c == b'(' || c == b'x' || c.is_ascii_digit() => {
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs, self.p);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<DensePolynomial, ParseError> {
        let base = self.primary()?;
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        let caret_pos = self.pos;
        self.pos += 1;
        self.skip_ws();
        let exp = self.uint()?;
        if let Some(d) = base.degree() {
            if d as u64 * exp > DEGREE_LIMIT {
                return Err(ParseError {
                    pos: caret_pos,
                    msg: format!("power exceeds the degree limit of {DEGREE_LIMIT}"),
                });
            }
        }
        Ok(pow(&base, exp, self.p))
    }

    fn primary(&mut self) -> Result<DensePolynomial, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(DensePolynomial::x(self.p))
            }
            Some(b'(') => {
                let open_pos = self.pos;
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(ParseError {
                        pos: open_pos,
                        msg: String::from("unclosed parenthesis"),
                    });
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let value = self.uint()?;
                Ok(DensePolynomial::constant((value % self.p as u64) as u32, self.p))
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg(self.p))
            }
            Some(_) => Err(self.error("expected a number, 'x', or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as u64))
                .ok_or_else(|| ParseError {
                    pos: start,
                    msg: String::from("number too large"),
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        Ok(value)
    }
}

fn pow(base: &DensePolynomial, mut k: u64, p: u32) -> DensePolynomial {
    let mut acc = DensePolynomial::constant(1, p);
    let mut sq = base.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = acc.mul(&sq, p);
        }
        k >>= 1;
        if k > 0 {
            sq = sq.mul(&sq, p);
        }
    }
    acc
}

/// Descending-degree rendering with canonical coefficients, e.g. `x^3+2x+4`.
pub fn print(f: &DensePolynomial) -> String {
    if f.is_zero() {
        return String::from("0");
    }
    let mut parts: Vec<String> = Vec::new();
    for (d, &c) in f.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match (d, c) {
            (0, _) => format!("{c}"),
            (1, 1) => String::from("x"),
            (1, _) => format!("{c}x"),
            (_, 1) => format!("x^{d}"),
            (_, _) => format!("{c}x^{d}"),
        };
        parts.push(part);
    }
    parts.join("+")
}
