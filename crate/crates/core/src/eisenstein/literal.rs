//! Text form of elements and points.
//!
//! Grammar: integers, `T` for θ, `p` for 𝔭 = 1 − T, binary `+ - *`, `^` with a
//! non-negative integer exponent, unary minus and parentheses. `^` binds
//! tighter than unary minus, so `-p^2` is `-(p^2)`. Points are four
//! expressions joined by `:`.

use super::{DigitVector, Eisenstein};
use crate::error::{Error, Result};
use crate::scalar::Coeff;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(i64),
    Theta,
    Uniformizer,
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut n: i64 = 0;
                while let Some(&d) = chars.peek() {
                    let Some(v) = d.to_digit(10) else { break };
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(v as i64))
                        .ok_or_else(|| {
                            Error::Parse(format!("integer literal too large in {s:?}"))
                        })?;
                    chars.next();
                }
                out.push(Token::Int(n));
            }
            _ => {
                let t = match c {
                    'T' => Token::Theta,
                    'p' => Token::Uniformizer,
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::Open,
                    ')' => Token::Close,
                    other => {
                        return Err(Error::Parse(format!(
                            "unexpected character {other:?} in {s:?}"
                        )))
                    }
                };
                out.push(t);
                chars.next();
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    fn expr<T: Coeff>(&mut self) -> Result<Eisenstein<T>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<T: Coeff>(&mut self) -> Result<Eisenstein<T>> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary<T: Coeff>(&mut self) -> Result<Eisenstein<T>> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power<T: Coeff>(&mut self) -> Result<Eisenstein<T>> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.bump() {
                Some(Token::Int(e)) if *e <= u32::MAX as i64 => Ok(base.pow(*e as u32)),
                other => Err(Error::Parse(format!(
                    "expected exponent after '^', found {other:?}"
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom<T: Coeff>(&mut self) -> Result<Eisenstein<T>> {
        match self.bump() {
            Some(Token::Int(n)) => Ok(Eisenstein::from_int(*n)),
            Some(Token::Theta) => Ok(Eisenstein::theta()),
            Some(Token::Uniformizer) => Ok(Eisenstein::uniformizer()),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    other => Err(Error::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse an exact element literal such as `-1+p^2` or `(1+T)*p^2`.
pub fn parse_element<T: Coeff>(s: &str) -> Result<Eisenstein<T>> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
    };
    let value = parser.expr()?;
    if parser.pos != tokens.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(value)
}

/// Parse four `:`-separated element literals.
pub fn parse_point<T: Coeff>(s: &str) -> Result<[Eisenstein<T>; 4]> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 4 {
        return Err(Error::Parse(format!(
            "point needs 4 coordinates, got {} in {s:?}",
            parts.len()
        )));
    }
    let coords = parts
        .iter()
        .map(|p| parse_element(p))
        .collect::<Result<Vec<_>>>()?;
    Ok(coords.try_into().expect("four coordinates"))
}

/// Exact `a + b*T` form, e.g. `0`, `-T`, `1+T`, `2-3*T`.
pub fn format_exact<T: Coeff>(x: &Eisenstein<T>) -> String {
    let (a, b) = (x.a(), x.b());
    let mut out = String::new();
    if !a.is_zero() {
        out.push_str(&a.to_string());
    }
    if !b.is_zero() {
        let mag = b.abs();
        if b.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push('T');
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Residue `Σ dᵢpⁱ` written as a polynomial in `p`, e.g. `-1-p+p^2`.
pub fn format_digits(d: &DigitVector) -> String {
    let mut out = String::new();
    for (i, &digit) in d.digits().iter().enumerate() {
        if digit == 0 {
            continue;
        }
        if digit < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        match i {
            0 => out.push('1'),
            1 => out.push('p'),
            _ => out.push_str(&format!("p^{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Join four coordinates with `:`.
pub fn format_point<T: Coeff>(coords: &[Eisenstein<T>; 4]) -> String {
    coords
        .iter()
        .map(format_exact)
        .collect::<Vec<_>>()
        .join(":")
}
