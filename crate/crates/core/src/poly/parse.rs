//! Text syntax for polynomials: `3*x^2*y - 1/2*y^3`, with `*` optional
//! between factors and parentheses allowed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Poly, PolyRing};
use crate::arith::Field;
use crate::error::{Error, Result};

/// A polynomial with rational coefficients and no attached ring, the
/// field-independent result of parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoly {
    pub terms: Vec<(Vec<u32>, BigRational)>,
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
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = text.chars().collect();
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
                let s: String = chars[start..i].iter().collect();
                out.push((start, Token::Num(s.parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Token::Ident(chars[start..i].iter().collect())));
                continue;
            }
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            other => {
                return Err(Error::Parse(format!("column {}: unexpected character `{other}`", start + 1)))
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

type Sparse = BTreeMap<Vec<u32>, BigRational>;

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    vars: &'a [String],
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.1)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.0) + 1
    }

    fn error<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("column {}: {msg}", self.column())))
    }

    fn constant(&self, c: BigRational) -> Sparse {
        let mut s = Sparse::new();
        if !c.is_zero() {
            s.insert(vec![0; self.vars.len()], c);
        }
        s
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                negate(self.term()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = add(acc, self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = add(acc, negate(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = mul(&acc, &self.factor()?);
                }
                Some(Token::Num(_) | Token::Ident(_) | Token::LParen) => {
                    acc = mul(&acc, &self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Sparse> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let e = match self.peek() {
                Some(Token::Num(n)) => {
                    let e = u32::try_from(n.clone()).ok().filter(|&e| e <= u16::MAX as u32);
                    match e {
                        Some(e) => e,
                        None => return self.error("exponent too large"),
                    }
                }
                _ => return self.error("expected a nonnegative integer exponent"),
            };
            self.pos += 1;
            let mut acc = self.constant(BigRational::one());
            for _ in 0..e {
                acc = mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Sparse> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Token::Num(d)) if !d.is_zero() => {
                            self.pos += 1;
                            Ok(self.constant(BigRational::new(n, d)))
                        }
                        Some(Token::Num(_)) => self.error("division by zero"),
                        _ => self.error("expected a denominator"),
                    }
                } else {
                    Ok(self.constant(BigRational::from_integer(n)))
                }
            }
            Some(Token::Ident(name)) => {
                let Some(i) = self.vars.iter().position(|v| *v == name) else {
                    return self.error(&format!("unknown variable `{name}`"));
                };
                self.pos += 1;
                let mut exps = vec![0; self.vars.len()];
                exps[i] = 1;
                Ok(Sparse::from([(exps, BigRational::one())]))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => self.error("expected a number, variable or `(`"),
        }
    }
}

fn negate(a: Sparse) -> Sparse {
    a.into_iter().map(|(m, c)| (m, -c)).collect()
}

fn add(mut a: Sparse, b: Sparse) -> Sparse {
    for (m, c) in b {
        let e = a.entry(m).or_insert_with(BigRational::zero);
        *e += c;
    }
    a.retain(|_, c| !c.is_zero());
    a
}

fn mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            let e = out.entry(m).or_insert_with(BigRational::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Parses a polynomial in the given variables.
pub fn parse_rational_poly(text: &str, vars: &[String]) -> Result<RationalPoly> {
    let tokens = tokenize(text)?;
    let end = text.chars().count();
    let mut p = Parser { tokens, pos: 0, vars, end };
    let s = p.expr()?;
    if p.pos != p.tokens.len() {
        return p.error("unexpected trailing input");
    }
    Ok(RationalPoly { terms: s.into_iter().collect() })
}

pub(super) fn render<F: Field>(ring: &PolyRing<F>, a: &Poly<F>) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    let k = ring.field();
    let mut out = String::new();
    for (idx, (m, c)) in a.terms().iter().enumerate() {
        let negative = k.is_negative(c);
        let abs = if negative { k.neg(c) } else { c.clone() };
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut factors = Vec::new();
        if m.is_one() || !k.is_one(&abs) {
            factors.push(k.render(&abs));
        }
        for (i, e) in m.exponents().enumerate() {
            match e {
                0 => {}
                1 => factors.push(ring.vars()[i].clone()),
                e => factors.push(format!("{}^{e}", ring.vars()[i])),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn vars() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn renders_canonically() {
        let r = PolyRing::new(Rationals, &["x", "y"]).unwrap();
        let f = r.parse("3*x^2*y - 1/2*y^3").unwrap();
        assert_eq!(r.render(&f), "3*x^2*y - 1/2*y^3");
        let g = r.parse("-x + 2 - (1/3)y").unwrap();
        assert_eq!(r.render(&g), "-x - 1/3*y + 2");
        assert_eq!(r.render(&r.parse("x y - x*y").unwrap()), "0");
        assert_eq!(r.render(&r.parse("3x^2y").unwrap()), "3*x^2*y");
    }

    #[test]
    fn prime_field_rendering() {
        let r = PolyRing::new(PrimeField::new(5).unwrap(), &["x", "y"]).unwrap();
        let f = r.parse("x - y + 1/2").unwrap();
        assert_eq!(r.render(&f), "x + 4*y + 3");
    }

    #[test]
    fn parse_errors_carry_columns() {
        let e = parse_rational_poly("x + z", &vars()).unwrap_err();
        assert_eq!(e, Error::Parse("column 5: unknown variable `z`".into()));
        assert!(parse_rational_poly("x +", &vars()).is_err());
        assert!(parse_rational_poly("x^y", &vars()).is_err());
        assert!(parse_rational_poly("1/0", &vars()).is_err());
        assert!(parse_rational_poly("(x", &vars()).is_err());
    }

    #[test]
    fn expands_products() {
        let r = PolyRing::new(Rationals, &["x", "y"]).unwrap();
        let f = r.parse("(x + y)^2 - (x - y)^2").unwrap();
        assert_eq!(r.render(&f), "4*x*y");
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(
            terms in proptest::collection::vec(((0u32..4, 0u32..4), -5i64..5, 1i64..4), 0..6)
        ) {
            let r = PolyRing::new(Rationals, &["x", "y"]).unwrap();
            let f = r.from_terms(terms.iter().map(|((a, b), n, d)| {
                (super::super::Monomial::from_exponents(&[*a, *b]),
                 BigRational::new(BigInt::from(*n), BigInt::from(*d)))
            }).collect());
            let text = r.render(&f);
            prop_assert_eq!(r.parse(&text).unwrap(), f);
        }
    }
}
