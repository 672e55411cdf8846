//! Expressions for elements of `Y_{d,n}(q)`.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' '-'? int)?
//! primary := int | atom | '(' expr ')'
//! atom    := g<i> | t<j> | e<i> | T<j> | E(k; μ_1, …, μ_d) | E(μ_1, …, μ_d) | q | z
//! ```
//!
//! `z` is `ζ_d`. Division is only by invertible scalars, so `3/4` and
//! `(q + 1)/(q - 1)` are accepted.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;
use yokonuma::exactnum::{CyclotomicElement, RationalFunction};
use yokonuma::permgroup::{Composition, CosetSystem};
use yokonuma::ykalgebra::{YAlgebra, YElement, YError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Q,
    Zeta,
    G(usize),
    T(usize),
    E(usize),
    BigT(usize),
    EChi { k: usize, mu: Vec<usize> },
    EMu(Vec<usize>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: Option<char>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let found = match self.found {
            Some(c) => format!("{c:?}"),
            None => "end of input".into(),
        };
        write!(f, "at position {}: expected {}, found {found}", self.position, self.expected.join(" or "))
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error(&mut self, expected: Vec<&'static str>) -> ParseError {
        let found = self.peek();
        ParseError {
            position: self.pos,
            expected,
            found,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, name: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(vec![name]))
        }
    }

    /// Digits directly at the cursor (no whitespace skipping).
    fn digits(&mut self) -> Option<&'a str> {
        let rest = &self.src[self.pos..];
        let len = rest.chars().take_while(char::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(&rest[..len])
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        match self.digits() {
            Some(s) => Ok(s.parse().expect("digits")),
            None => Err(self.error(vec!["integer"])),
        }
    }

    fn small_int(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        let v = self.int()?;
        usize::try_from(v).map_err(|_| ParseError {
            position: start,
            expected: vec!["small integer"],
            found: None,
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let start = self.pos;
        let e = self.int()?;
        let e = i64::try_from(e).map_err(|_| ParseError {
            position: start,
            expected: vec!["exponent that fits in 64 bits"],
            found: None,
        })?;
        Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        const EXPECTED: [&str; 4] = ["integer", "atom (g, t, e, T, E, q, z)", "'('", "'-'"];
        let Some(c) = self.peek() else {
            return Err(self.error(EXPECTED.to_vec()));
        };
        if c.is_ascii_digit() {
            return Ok(Expr::Int(self.int()?));
        }
        if c == '(' {
            self.pos += 1;
            let inner = self.expr()?;
            self.expect(')', "')'")?;
            return Ok(inner);
        }
        let indexed = |p: &mut Self, make: fn(usize) -> Expr| -> Result<Expr, ParseError> {
            p.pos += 1;
            let start = p.pos;
            match p.digits() {
                Some(s) => s.parse().map(make).map_err(|_| ParseError {
                    position: start,
                    expected: vec!["small integer"],
                    found: None,
                }),
                None => Err(p.error(vec!["index digits"])),
            }
        };
        match c {
            'g' => indexed(self, Expr::G),
            't' => indexed(self, Expr::T),
            'e' => indexed(self, Expr::E),
            'T' => indexed(self, Expr::BigT),
            'q' => {
                self.pos += 1;
                Ok(Expr::Q)
            }
            'z' => {
                self.pos += 1;
                Ok(Expr::Zeta)
            }
            'E' => {
                self.pos += 1;
                self.expect('(', "'('")?;
                let first = self.small_int()?;
                let (k, mut mu) = if self.eat(';') {
                    (Some(first), vec![self.small_int()?])
                } else {
                    (None, vec![first])
                };
                while self.eat(',') {
                    mu.push(self.small_int()?);
                }
                self.expect(')', "')' or ','")?;
                Ok(match k {
                    Some(k) => Expr::EChi { k, mu },
                    None => Expr::EMu(mu),
                })
            }
            _ => Err(self.error(EXPECTED.to_vec())),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error(vec!["'+'", "'-'", "'*'", "'/'", "'^'", "end of input"]));
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Algebra(#[from] YError),
    #[error("composition {0:?} is not a composition of n = {1} with d = {2} parts")]
    BadComposition(Vec<usize>, usize, usize),
    #[error("character index {0} out of range 1..={1}")]
    CharacterIndex(usize, usize),
    #[error("negative power of an expression that is not a generator or scalar")]
    NotInvertible,
    #[error("division by something that is not a nonzero scalar")]
    BadDivision,
}

/// The scalar value of `x`, if it is a multiple of the unit.
fn as_scalar(x: &YElement) -> Option<RationalFunction> {
    match x.raw_terms() {
        [] => Some(RationalFunction::zero(x.algebra().order())),
        [(0, c)] => Some(c.clone()),
        _ => None,
    }
}

fn composition(mu: &[usize], alg: &YAlgebra) -> Result<Composition, EvalError> {
    if mu.len() != alg.d() || mu.iter().sum::<usize>() != alg.n() {
        return Err(EvalError::BadComposition(mu.to_vec(), alg.n(), alg.d()));
    }
    Ok(Composition::new(mu.to_vec()))
}

pub fn evaluate(expr: &Expr, alg: &Arc<YAlgebra>) -> Result<YElement, EvalError> {
    let order = alg.order();
    Ok(match expr {
        Expr::Int(v) => {
            let c = CyclotomicElement::from_rational(order, v.clone().into());
            alg.scalar(RationalFunction::constant(c))
        }
        Expr::Q => alg.scalar(RationalFunction::q(order)),
        Expr::Zeta => {
            let z = CyclotomicElement::zeta_pow(alg.d() as u32, 1).lift_to(order).map_err(YError::from)?;
            alg.scalar(RationalFunction::constant(z))
        }
        Expr::G(i) => alg.gen_g(*i)?,
        Expr::T(j) => alg.gen_t(*j)?,
        Expr::E(i) => alg.e(*i)?,
        Expr::BigT(j) => alg.big_t(*j)?,
        Expr::EMu(mu) => alg.e_mu_of(&composition(mu, alg)?)?,
        Expr::EChi { k, mu } => {
            let sys = CosetSystem::new(&composition(mu, alg)?);
            if *k == 0 || *k > sys.len() {
                return Err(EvalError::CharacterIndex(*k, sys.len()));
            }
            alg.e_chi(&sys.character(k - 1))?
        }
        Expr::Neg(a) => evaluate(a, alg)?.neg(),
        Expr::Add(a, b) => evaluate(a, alg)?.add(&evaluate(b, alg)?),
        Expr::Sub(a, b) => evaluate(a, alg)?.sub(&evaluate(b, alg)?),
        Expr::Mul(a, b) => evaluate(a, alg)?.mul(&evaluate(b, alg)?),
        Expr::Div(a, b) => {
            let den = as_scalar(&evaluate(b, alg)?).ok_or(EvalError::BadDivision)?;
            let inv = den.inv().map_err(|_| EvalError::BadDivision)?;
            evaluate(a, alg)?.scale(&inv)
        }
        Expr::Pow(base, e) => {
            let k = e.unsigned_abs() as u32;
            if *e >= 0 {
                return Ok(evaluate(base, alg)?.pow(k));
            }
            match base.as_ref() {
                Expr::G(i) => alg.gen_g_inv(*i)?.pow(k),
                Expr::T(j) => alg.gen_t_pow(*j, *e)?,
                other => {
                    let c = as_scalar(&evaluate(other, alg)?).ok_or(EvalError::NotInvertible)?;
                    alg.scalar(c.pow(*e).map_err(|_| EvalError::NotInvertible)?)
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_associativity() {
        let e = parse("1 - 2 - 3").unwrap();
        assert!(matches!(e, Expr::Sub(ref a, _) if matches!(**a, Expr::Sub(..))));
        let e = parse("-q^2").unwrap();
        assert!(matches!(e, Expr::Neg(ref a) if matches!(**a, Expr::Pow(_, 2))));
        assert_eq!(parse("g1*g1").unwrap(), Expr::Mul(Box::new(Expr::G(1)), Box::new(Expr::G(1))));
        assert_eq!(parse(" E( 2 ; 1 , 3 ) ").unwrap(), Expr::EChi { k: 2, mu: vec![1, 3] });
    }

    #[test]
    fn errors_carry_position_and_expectations() {
        let err = parse("g1 + ").unwrap_err();
        assert_eq!(err.position, 5);
        assert!(err.expected.contains(&"'('"));
        let err = parse("g1 g2").unwrap_err();
        assert_eq!(err.position, 3);
        assert_eq!(err.found, Some('g'));
        assert_eq!(parse("gx").unwrap_err().expected, vec!["index digits"]);
        assert_eq!(parse("(g1").unwrap_err().expected, vec!["')'"]);
    }
}
