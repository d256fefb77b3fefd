//! Map expressions: `"(P, Q)"` with exact complex-rational literals.
//!
//! Grammar:
//!
//! ```text
//! map     := '(' expr ',' expr ')'
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary | power)*        -- juxtaposition multiplies
//! unary   := ('-' | '+') unary | power
//! power   := primary ('^' INT)?
//! primary := NUMBER | 'z' | 'w' | 'i' | '(' expr ')'
//! NUMBER  := DIGITS ('.' DIGITS)? ('/' DIGITS)? 'i'?
//! ```
//!
//! So `-z^2` is `-(z^2)`, `-2*z` is `(-2)*z`, and `1/3i` is `i/3`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::algebra::{ComplexRational, SkewPoly};
use crate::error::{Error, Result};
use crate::skew::SkewProduct;

const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    /// A literal: nonnegative rational, optionally times `i`.
    Num(ComplexRational),
    Z,
    W,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Num(_) | Expr::Z | Expr::W => 5,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.prec() < min;
        if paren {
            write!(f, "(")?;
        }
        match self {
            Expr::Num(c) => write_literal(f, c)?,
            Expr::Z => write!(f, "z")?,
            Expr::W => write!(f, "w")?,
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.write(f, 3)?;
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write(f, 1)?;
                write!(f, "{}", if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                b.write(f, 2)?;
            }
            Expr::Mul(a, b) => {
                a.write(f, 2)?;
                write!(f, "*")?;
                b.write(f, 3)?;
            }
            Expr::Pow(a, e) => {
                a.write(f, 5)?;
                write!(f, "^{e}")?;
            }
        }
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }

    pub fn to_skew_poly(&self) -> Result<SkewPoly> {
        Ok(match self {
            Expr::Num(c) => SkewPoly::constant(c.clone()),
            Expr::Z => SkewPoly::z(),
            Expr::W => SkewPoly::w(),
            Expr::Neg(a) => a.to_skew_poly()?.scale(&ComplexRational::from_int(-1)),
            Expr::Add(a, b) => a.to_skew_poly()?.add(&b.to_skew_poly()?),
            Expr::Sub(a, b) => a.to_skew_poly()?.sub(&b.to_skew_poly()?),
            Expr::Mul(a, b) => a.to_skew_poly()?.mul(&b.to_skew_poly()?),
            Expr::Pow(a, e) => a.to_skew_poly()?.pow(*e),
        })
    }
}

fn write_rat(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

fn write_literal(f: &mut fmt::Formatter<'_>, c: &ComplexRational) -> fmt::Result {
    if c.im.is_zero() {
        write_rat(f, &c.re)
    } else if c.im.is_one() {
        write!(f, "i")
    } else {
        write_rat(f, &c.im)?;
        write!(f, "i")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

/// A parsed `(P, Q)` pair.
#[derive(Clone, Debug, PartialEq)]
pub struct MapExpression {
    pub source: String,
    pub first: Expr,
    pub second: Expr,
}

impl fmt::Display for MapExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

impl MapExpression {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser::new(text);
        p.skip_ws();
        p.expect('(')?;
        let first = p.expr()?;
        p.expect(',')?;
        let second = p.expr()?;
        p.expect(')')?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.err("trailing input"));
        }
        Ok(MapExpression { source: text.to_string(), first, second })
    }

    pub fn to_skew_product(&self) -> Result<SkewProduct> {
        SkewProduct::validate(&self.first.to_skew_poly()?, &self.second.to_skew_poly()?)
    }
}

pub fn parse_map(text: &str) -> Result<SkewProduct> {
    MapExpression::parse(text)?.to_skew_product()
}

/// A single expression, e.g. a fiber coordinate.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// A constant expression such as `1/2+1/3i`.
pub fn parse_constant(text: &str) -> Result<ComplexRational> {
    let q = parse_expr(text)?.to_skew_poly()?;
    if q.terms().any(|(n, m, _)| n != 0 || m != 0) {
        return Err(Error::Syntax { pos: 0, msg: "expected a constant".into() });
    }
    Ok(q.coeff(0, 0))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser { chars: text.chars().collect(), pos: 0 }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some('-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(c) if c.is_ascii_digit() || c.is_alphabetic() || c == '(' => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::BadExponent);
        }
        if self.chars.get(self.pos).is_some_and(|&c| c == '.' || c == '/') {
            return Err(Error::BadExponent);
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let e: u32 = digits.parse().map_err(|_| self.err("exponent too large"))?;
        if e > MAX_EXPONENT {
            return Err(self.err("exponent too large"));
        }
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                match c {
                    'z' => Ok(Expr::Z),
                    'w' => Ok(Expr::W),
                    'i' => Ok(Expr::Num(ComplexRational::i())),
                    _ => {
                        self.pos = start;
                        Err(self.err(&format!("unknown symbol '{c}'")))
                    }
                }
            }
            Some(_) => Err(self.err("expected a number, variable or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<Expr> {
        let int = self.digits();
        let mut value = BigRational::from_integer(int.parse::<BigInt>().unwrap());
        if self.chars.get(self.pos) == Some(&'.') {
            self.pos += 1;
            let frac = self.digits();
            if frac.is_empty() {
                return Err(self.err("expected digits after '.'"));
            }
            let scale = BigInt::from(10).pow(frac.len() as u32);
            value += BigRational::new(frac.parse::<BigInt>().unwrap(), scale);
        }
        if self.chars.get(self.pos) == Some(&'/') && self.chars.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
            let den = self.digits().parse::<BigInt>().unwrap();
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            value /= BigRational::from_integer(den);
        }
        if self.chars.get(self.pos) == Some(&'i') && !self.chars.get(self.pos + 1).is_some_and(|c| c.is_alphanumeric()) {
            self.pos += 1;
            return Ok(Expr::Num(ComplexRational::new(BigRational::zero(), value)));
        }
        Ok(Expr::Num(ComplexRational::real(value)))
    }
}
