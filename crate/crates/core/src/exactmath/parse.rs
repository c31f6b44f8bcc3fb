//! Polynomial text format shared by `BivariatePoly` and `MultiPoly`.
//!
//! A polynomial is a sequence of terms joined by `+`/`-`. A term is a
//! `*`-separated product of factors: rationals (`3`, `3/2`), ring symbols
//! (`i`, `s2`, `s5`, `s10`) and variables (`u`, `v`, `x1`, `x2`, …), each
//! optionally raised to a `^` power. Example: `u^3*v - 33/2*s5*u^8*v^4`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{basis_symbol, ExactScalar};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Variable {
    U,
    V,
    /// `x1`, `x2`, …, stored zero-based.
    X(usize),
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<Token>, Error> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let ch = chars[k];
        match ch {
            c if c.is_whitespace() => k += 1,
            '+' => {
                out.push(Token::Plus);
                k += 1;
            }
            '-' => {
                out.push(Token::Minus);
                k += 1;
            }
            '*' => {
                out.push(Token::Star);
                k += 1;
            }
            '/' => {
                out.push(Token::Slash);
                k += 1;
            }
            '^' => {
                out.push(Token::Caret);
                k += 1;
            }
            c if c.is_ascii_digit() => {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let digits: String = chars[start..k].iter().collect();
                out.push(Token::Num(digits.parse().expect("ascii digits")));
            }
            c if c.is_ascii_alphabetic() => {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_alphanumeric() {
                    k += 1;
                }
                out.push(Token::Ident(chars[start..k].iter().collect()));
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character {other:?} in polynomial {s:?}"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    src: &'a str,
}

pub(crate) type ParsedTerm = (ExactScalar, Vec<(Variable, u32)>);

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn exponent(&mut self) -> Result<u32, Error> {
        if self.peek() != Some(&Token::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        match self.next() {
            Some(Token::Num(n)) => u32::try_from(n).map_err(|_| self.err("exponent too large")),
            _ => Err(self.err("expected exponent after '^'")),
        }
    }

    fn factor(&mut self, coeff: &mut ExactScalar, vars: &mut Vec<(Variable, u32)>) -> Result<(), Error> {
        match self.next() {
            Some(Token::Num(n)) => {
                let mut r = BigRational::from_integer(n);
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Num(d)) if !d.is_zero() => r /= BigRational::from_integer(d),
                        _ => return Err(self.err("expected nonzero denominator")),
                    }
                }
                let e = self.exponent()?;
                *coeff = coeff.scale(&num_traits::pow(r, e as usize));
            }
            Some(Token::Ident(id)) => {
                let sym = match id.as_str() {
                    "i" => Some(ExactScalar::i()),
                    "s2" => Some(ExactScalar::sqrt2()),
                    "s5" => Some(ExactScalar::sqrt5()),
                    "s10" => Some(ExactScalar::sqrt10()),
                    _ => None,
                };
                let var = match id.as_str() {
                    "u" => Some(Variable::U),
                    "v" => Some(Variable::V),
                    x if x.len() > 1 && x.starts_with('x') => {
                        let idx: usize = x[1..]
                            .parse()
                            .map_err(|_| self.err(&format!("bad variable name {x:?}")))?;
                        if idx == 0 {
                            return Err(self.err("variables are numbered from x1"));
                        }
                        Some(Variable::X(idx - 1))
                    }
                    _ => None,
                };
                let e = self.exponent()?;
                match (sym, var) {
                    (Some(s), _) => *coeff = &*coeff * &s.pow(e),
                    (None, Some(v)) => {
                        if e > 0 {
                            vars.push((v, e));
                        }
                    }
                    (None, None) => return Err(self.err(&format!("unknown symbol {id:?}"))),
                }
            }
            _ => return Err(self.err("expected a number, symbol or variable")),
        }
        Ok(())
    }

    fn term(&mut self, negative: bool) -> Result<ParsedTerm, Error> {
        let mut coeff = ExactScalar::from_int(if negative { -1 } else { 1 });
        let mut vars = Vec::new();
        self.factor(&mut coeff, &mut vars)?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            self.factor(&mut coeff, &mut vars)?;
        }
        Ok((coeff, vars))
    }

    fn poly(&mut self) -> Result<Vec<ParsedTerm>, Error> {
        let mut terms = Vec::new();
        if self.toks.is_empty() {
            return Err(self.err("empty polynomial"));
        }
        let mut negative = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            terms.push(self.term(negative)?);
            match self.next() {
                None => break,
                Some(Token::Plus) => negative = false,
                Some(Token::Minus) => negative = true,
                Some(_) => return Err(self.err("expected '+' or '-' between terms")),
            }
        }
        Ok(terms)
    }
}

pub(crate) fn parse_terms(s: &str) -> Result<Vec<ParsedTerm>, Error> {
    let toks = tokenize(s)?;
    Parser { toks, pos: 0, src: s }.poly()
}

/// Writes `(monomial text, coefficient)` items; each nonzero coordinate of
/// a coefficient becomes its own textual term.
pub(crate) fn write_terms<'a, W, I>(f: &mut W, items: I) -> fmt::Result
where
    W: fmt::Write,
    I: IntoIterator<Item = (String, &'a ExactScalar)>,
{
    let mut first = true;
    for (mono, c) in items {
        for (mask, r) in c.nonzero_parts() {
            let neg = r.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = r.abs();
            let mut pieces: Vec<String> = Vec::new();
            let sym = basis_symbol(mask);
            if !mag.is_one() || (sym.is_empty() && mono.is_empty()) {
                pieces.push(mag.to_string());
            }
            if !sym.is_empty() {
                pieces.push(sym.to_string());
            }
            if !mono.is_empty() {
                pieces.push(mono.clone());
            }
            f.write_str(&pieces.join("*"))?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
