//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! poly   := ["+"|"-"] term (("+"|"-") term)*
//! term   := integer ["*" factor ("*" factor)*]
//!         | factor ("*" factor)*
//! factor := "a[" int "," int "]" ["^" int]
//! ```
//!
//! Whitespace is allowed between tokens. The bare-integer term form covers
//! constants (including `"0"`); the optional leading sign covers printed
//! polynomials whose first term is negative.

use num_bigint::BigInt;
use num_traits::One;

use super::{Monomial, Poly, PolyError, Var};

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

pub(super) fn parse_poly(text: &str) -> Result<Poly, PolyError> {
    let mut p = Parser {
        input: text.as_bytes(),
        pos: 0,
    };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos < p.input.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> PolyError {
        PolyError::Syntax {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), PolyError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", byte as char)))
        }
    }

    fn poly(&mut self) -> Result<Poly, PolyError> {
        let mut negative = false;
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
            }
            Some(b'-') => {
                negative = true;
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.term(negative)?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term(false)?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term(true)?;
                    acc = acc.add(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self, negative: bool) -> Result<Poly, PolyError> {
        let mut coeff = BigInt::one();
        let mut powers: Vec<(Var, u32)> = Vec::new();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff = self.integer()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    powers.push(self.factor()?);
                } else {
                    // Bare integer constant.
                    if negative {
                        coeff = -coeff;
                    }
                    return Ok(Poly::constant(coeff));
                }
            }
            Some(b'a') => powers.push(self.factor()?),
            _ => return Err(self.error("expected a term")),
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            powers.push(self.factor()?);
        }
        if negative {
            coeff = -coeff;
        }
        Ok(Poly::term(Monomial::from_powers(powers), coeff))
    }

    fn factor(&mut self) -> Result<(Var, u32), PolyError> {
        self.expect(b'a')?;
        self.expect(b'[')?;
        let row = self.index()?;
        self.expect(b',')?;
        let col = self.index()?;
        self.expect(b']')?;
        let mut exp = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            exp = self.small_int()?;
        }
        Ok((Var::new(row, col), exp))
    }

    fn index(&mut self) -> Result<u32, PolyError> {
        let n = self.small_int()?;
        if n == 0 {
            return Err(self.error("entry indices are 1-based"));
        }
        Ok(n)
    }

    fn small_int(&mut self) -> Result<u32, PolyError> {
        let start = self.pos_of_next_digit()?;
        let mut value: u64 = 0;
        let mut pos = start;
        while pos < self.input.len() && self.input[pos].is_ascii_digit() {
            value = value * 10 + u64::from(self.input[pos] - b'0');
            if value > u64::from(u32::MAX) {
                self.pos = start;
                return Err(self.error("number too large"));
            }
            pos += 1;
        }
        self.pos = pos;
        Ok(value as u32)
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos_of_next_digit()?;
        let mut pos = start;
        while pos < self.input.len() && self.input[pos].is_ascii_digit() {
            pos += 1;
        }
        self.pos = pos;
        let text = std::str::from_utf8(&self.input[start..pos]).expect("ascii digits");
        Ok(text.parse().expect("digit string parses as BigInt"))
    }

    fn pos_of_next_digit(&mut self) -> Result<usize, PolyError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(self.pos),
            _ => Err(self.error("expected a number")),
        }
    }
}
