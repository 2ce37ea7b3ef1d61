//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/' | <implicit>) unary)*
//! unary   := ('+' | '-') unary | power
//! power   := primary ('^' ['+' | '-'] integer)?
//! primary := integer | VAR | '(' expr ')'
//! ```
//!
//! Division is only allowed by non-zero constants (so `3/4*t` and `(t+1)/2`
//! parse), negative powers only of monomials. Implicit multiplication applies
//! when a variable or parenthesis follows a factor, as in `4t^2`. Whitespace is
//! insignificant. Errors carry the 0-based character position of the offending
//! token.

use num_bigint::BigInt;
use num_traits::Zero;

use super::laurent::LaurentPolynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

const MAX_POLY_POWER: u64 = 1000;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

pub fn parse_polynomial(input: &str, var: char) -> Result<LaurentPolynomial> {
    let toks = tokenize(input, var)?;
    let mut p = Parser { toks, pos: 0 };
    if p.peek() == &Tok::End {
        return Err(p.error("empty polynomial"));
    }
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return Err(p.error("unexpected token"));
    }
    Ok(e)
}

fn tokenize(input: &str, var: char) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(digits.parse().unwrap())));
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c == var => Tok::Var,
            other => {
                return Err(Error::Parse {
                    position: start,
                    message: format!("unexpected character {other:?} (expected digits, '{var}', + - * / ^ or parentheses)"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn position(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: &str) -> Error {
        let found = match self.peek() {
            Tok::End => "end of input".to_string(),
            t => format!("{t:?}"),
        };
        Error::Parse { position: self.position(), message: format!("{msg} (found {found})") }
    }

    fn expr(&mut self) -> Result<LaurentPolynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPolynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.position();
                    let d = self.unary()?;
                    let c = constant_value(&d).ok_or(Error::Parse {
                        position: at,
                        message: "division is only allowed by a non-zero constant".into(),
                    })?;
                    acc = acc.scale(&c.recip());
                }
                Tok::Var | Tok::LParen => {
                    acc = &acc * &self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<LaurentPolynomial> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<LaurentPolynomial> {
        let base = self.primary()?;
        if self.peek() != &Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.position();
        let negative = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let Tok::Int(n) = self.peek().clone() else {
            return Err(self.error("expected integer exponent"));
        };
        self.bump();
        let mag: u64 = n.try_into().map_err(|_| Error::Parse { position: at, message: "exponent too large".into() })?;
        if base.is_unit_multiple() {
            let (e, c) = base.terms().next().map(|(e, c)| (e, c.clone())).unwrap();
            let k = i64::try_from(mag).ok().filter(|k| e.checked_mul(*k).is_some()).ok_or(Error::Parse {
                position: at,
                message: "exponent too large".into(),
            })?;
            let k = if negative { -k } else { k };
            let coeff = num_traits::pow(if k < 0 { c.recip() } else { c }, k.unsigned_abs() as usize);
            return Ok(LaurentPolynomial::monomial(coeff, e * k));
        }
        if base.is_zero() {
            if negative {
                return Err(Error::Parse { position: at, message: "negative power of zero".into() });
            }
            return Ok(if mag == 0 { LaurentPolynomial::one() } else { base });
        }
        if negative {
            return Err(Error::Parse { position: at, message: "negative powers are only allowed for monomials".into() });
        }
        if mag > MAX_POLY_POWER {
            return Err(Error::Parse { position: at, message: format!("exponent exceeds {MAX_POLY_POWER}") });
        }
        Ok(base.pow(mag as u32))
    }

    fn primary(&mut self) -> Result<LaurentPolynomial> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(LaurentPolynomial::constant(Rational::from_integer(n)))
            }
            Tok::Var => {
                self.bump();
                Ok(LaurentPolynomial::monomial(Rational::from_integer(1.into()), 1))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if self.peek() != &Tok::RParen {
                    return Err(self.error("expected ')'"));
                }
                self.bump();
                Ok(e)
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}

fn constant_value(p: &LaurentPolynomial) -> Option<Rational> {
    if p.is_zero() {
        return None;
    }
    let c = p.coeff(0);
    (p.terms().count() == 1 && !c.is_zero()).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn parse(s: &str) -> Result<LaurentPolynomial> {
        parse_polynomial(s, 't')
    }

    #[test]
    fn grammar_examples() {
        let p = parse("4*t^2 - 9*t + 4").unwrap();
        assert_eq!(p, LaurentPolynomial::from_i64s(&[4, -9, 4]));
        let q = parse("t^-1 + 1 + t").unwrap();
        assert_eq!(q.coeff(-1), int(1));
        assert_eq!(q.coeff(1), int(1));
        assert_eq!(parse("  (t - 2) * (t + 2) ").unwrap(), LaurentPolynomial::from_i64s(&[-4, 0, 1]));
        assert_eq!(parse("3/4*t").unwrap().coeff(1), rat(3, 4));
        assert_eq!(parse("4t^2").unwrap().coeff(2), int(4));
        assert_eq!(parse("(2*t)^-2").unwrap().coeff(-2), rat(1, 4));
        assert_eq!(parse("-t^2").unwrap().coeff(2), int(-1));
    }

    #[test]
    fn errors_report_position() {
        match parse("4*t^2 - 9*x + 4") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 10),
            other => panic!("unexpected {other:?}"),
        }
        match parse("t + ") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        match parse("(t+1)^-1") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("t/(t+1)"), Err(Error::Parse { position: 2, .. })));
        assert!(parse("").is_err());
        assert!(parse("t)").is_err());
    }

    #[test]
    fn alternative_variable() {
        let p = parse_polynomial("x^2 - 3", 'x').unwrap();
        assert_eq!(p, LaurentPolynomial::from_i64s(&[-3, 0, 1]));
        assert!(parse_polynomial("t", 'x').is_err());
    }
}
