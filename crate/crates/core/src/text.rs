//! A small recursive-descent parser for polynomial text such as
//! `y^2 - x^5 - 2x^-1*y` or `(x1 + 1/2 x2)^3`.
//!
//! Grammar: sums and differences of products; factors are numbers
//! (`3`, `3/4`), variables, and parenthesized expressions, optionally raised
//! to an integer power. `*` may be omitted. Negative powers are allowed only
//! on monomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly2;
use crate::multipoly::MultiPoly;
use crate::rational::{pow_rat, Rat};

#[derive(Debug, Clone, PartialEq)]
struct Poly {
    terms: BTreeMap<Vec<i64>, Rat>,
}

impl Poly {
    fn constant(nv: usize, c: Rat) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nv], c);
        }
        Poly { terms }
    }

    fn var(nv: usize, i: usize) -> Poly {
        let mut e = vec![0; nv];
        e[i] = 1;
        Poly {
            terms: BTreeMap::from([(e, Rat::one())]),
        }
    }

    fn add(mut self, other: Poly, sign: bool) -> Poly {
        for (e, c) in other.terms {
            let slot = self.terms.entry(e).or_insert_with(Rat::zero);
            if sign {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut terms: BTreeMap<Vec<i64>, Rat> = BTreeMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_insert_with(Rat::zero) += c * d;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { terms }
    }

    fn pow(&self, k: i64, nv: usize) -> std::result::Result<Poly, &'static str> {
        if k >= 0 {
            let mut acc = Poly::constant(nv, Rat::one());
            for _ in 0..k {
                acc = acc.mul(self);
            }
            return Ok(acc);
        }
        if self.terms.len() != 1 {
            return Err("negative powers are only allowed on monomials");
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Ok(Poly {
            terms: BTreeMap::from([(e.iter().map(|a| a * k).collect(), pow_rat(c, k))]),
        })
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn nv(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Poly::constant(self.nv(), Rat::zero()).add(self.term()?, false)
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(self.term()?, true);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.add(self.term()?, false);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.number()?;
                    if d.is_zero() {
                        return self.err("division by zero");
                    }
                    acc = acc.mul(&Poly::constant(self.nv(), d.recip()));
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' || c == b'_' => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.exponent()?;
            let at = self.pos;
            return base.pow(k, self.nv()).map_err(|m| Error::Parse {
                offset: at,
                message: m.into(),
            });
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
        }
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer exponent");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let Ok(k) = digits.parse::<i64>() else {
            return self.err("exponent too large");
        };
        if k > 10_000 {
            return self.err("exponent too large");
        }
        if paren {
            if self.peek() != Some(b')') {
                return self.err("expected ')'");
            }
            self.pos += 1;
        }
        Ok(if neg { -k } else { k })
    }

    fn number(&mut self) -> Result<Rat> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(Rat::from_integer(digits.parse::<BigInt>().expect("digits")))
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                Ok(Poly::constant(self.nv(), n))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => Ok(Poly::var(self.nv(), i)),
                    None => {
                        self.pos = start;
                        self.err(format!(
                            "unknown variable '{name}' (expected one of {})",
                            self.names.join(", ")
                        ))
                    }
                }
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse(src: &str, names: &[&str]) -> Result<Poly> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        names,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Parses a Laurent polynomial in `x` and `y` (nonnegative powers of `y`).
pub fn parse_laurent2(src: &str) -> Result<LaurentPoly2> {
    let p = parse(src, &["x", "y"])?;
    let mut terms = Vec::new();
    for (e, c) in p.terms {
        if e[1] < 0 {
            return Err(Error::Parse {
                offset: 0,
                message: "negative powers of y are not allowed".into(),
            });
        }
        terms.push(((e[0], e[1] as u32), c));
    }
    Ok(LaurentPoly2::from_terms(terms))
}

/// Parses a polynomial in the named variables.
pub fn parse_multipoly<S: AsRef<str>>(src: &str, names: &[S]) -> Result<MultiPoly> {
    let names: Vec<&str> = names.iter().map(AsRef::as_ref).collect();
    let p = parse(src, &names)?;
    let mut terms = Vec::new();
    for (e, c) in p.terms {
        if e.iter().any(|&a| a < 0) {
            return Err(Error::Parse {
                offset: 0,
                message: "negative powers are not allowed in a polynomial".into(),
            });
        }
        terms.push((e.into_iter().map(|a| a as u32).collect(), c));
    }
    Ok(MultiPoly::from_terms(names.len(), terms))
}
