//! Parser for hand-written rational functions such as `-(3d+2)/((d-2)(d+4))`.
//!
//! The variable is `d` or `δ`. Juxtaposition multiplies, `^` takes an integer
//! exponent (negative allowed), and `*`, `/` associate to the left.

use brauer_core::{Polynomial, RationalFunction};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprError {
    pub input: String,
    pub at: usize,
    pub message: &'static str,
}

impl std::fmt::Display for ExprError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at offset {} in {:?}", self.message, self.at, self.input)
    }
}

impl std::error::Error for ExprError {}

pub fn parse(input: &str) -> Result<RationalFunction, ExprError> {
    let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { input, chars, pos: 0 };
    let value = p.sum()?;
    if p.pos != p.chars.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(value)
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &'static str) -> ExprError {
        ExprError { input: self.input.to_string(), at: self.pos, message }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<RationalFunction, ExprError> {
        let negate = self.eat('-');
        if !negate {
            self.eat('+');
        }
        let first = self.product()?;
        let mut acc = if negate { -first } else { first };
        loop {
            if self.eat('+') {
                acc = &acc + &self.product()?;
            } else if self.eat('-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<RationalFunction, ExprError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let rhs = self.power()?;
                acc = acc.checked_div(&rhs).map_err(|_| self.error("division by zero"))?;
            } else if matches!(self.peek(), Some('(' | 'd' | 'δ' | '0'..='9')) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RationalFunction, ExprError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let k: i32 = self.digits()?.to_string().parse().map_err(|_| self.error("exponent too large"))?;
        let mut out = RationalFunction::one();
        for _ in 0..k {
            out = &out * &base;
        }
        if negative {
            out = out.inv().map_err(|_| self.error("division by zero"))?;
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<RationalFunction, ExprError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some('d' | 'δ') => {
                self.pos += 1;
                Ok(RationalFunction::from_poly(Polynomial::monomial(1)))
            }
            Some('0'..='9') => Ok(RationalFunction::from_poly(Polynomial::constant(self.digits()?))),
            _ => Err(self.error("expected a number, d or '('")),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ExprError> {
        let start = self.pos;
        while matches!(self.peek(), Some('0'..='9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        Ok(text.parse().expect("ASCII digits form an integer"))
    }
}
