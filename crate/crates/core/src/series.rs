//! Finite Laurent–Puiseux series in `x` with coefficients in ℚ[ξ].

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{den_u64, fmt_rat, lcm_u64, Rat};
use crate::xipoly::XiPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
}

/// Terms are kept in strictly descending exponent order with no zero
/// coefficients, so the leading term is always `terms[0]`.
///
/// `ram` is a ramification index `N` with every exponent in `(1/N)·ℤ`. It is
/// propagated as the lcm of operand indices and never shrinks on cancellation.
#[derive(Debug, Clone)]
pub struct PuiseuxSeries {
    terms: Vec<(Rat, XiPoly)>,
    ram: u64,
}

impl PartialEq for PuiseuxSeries {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for PuiseuxSeries {}

impl Default for PuiseuxSeries {
    fn default() -> Self {
        PuiseuxSeries {
            terms: Vec::new(),
            ram: 1,
        }
    }
}

impl PuiseuxSeries {
    /// Collects the given terms, summing duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Rat, XiPoly)>>(terms: I) -> Self {
        let mut map: BTreeMap<Rat, XiPoly> = BTreeMap::new();
        for (e, c) in terms {
            let slot = map.entry(e).or_default();
            *slot = &*slot + &c;
        }
        Self::from_map(map, 1)
    }

    /// ξ-free series from `(coefficient, exponent)` pairs.
    pub fn from_rat_terms<I: IntoIterator<Item = (Rat, Rat)>>(terms: I) -> Self {
        Self::from_terms(terms.into_iter().map(|(c, e)| (e, XiPoly::constant(c))))
    }

    fn from_map(map: BTreeMap<Rat, XiPoly>, ram: u64) -> Self {
        let terms: Vec<_> = map
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let ram = terms
            .iter()
            .fold(ram, |acc, (e, _)| lcm_u64(acc, den_u64(e)));
        PuiseuxSeries { terms, ram }
    }

    pub fn monomial(c: XiPoly, e: Rat) -> Self {
        Self::from_terms([(e, c)])
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(XiPoly::constant(c), Rat::zero())
    }

    /// `x^e`
    pub fn x_pow(e: Rat) -> Self {
        Self::monomial(XiPoly::one(), e)
    }

    pub fn terms(&self) -> &[(Rat, XiPoly)] {
        &self.terms
    }

    pub fn ram(&self) -> u64 {
        self.ram
    }

    pub fn with_ram(mut self, ram: u64) -> Self {
        self.ram = lcm_u64(self.ram, ram);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Rat) -> XiPoly {
        self.terms
            .iter()
            .find(|(k, _)| k == e)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// Highest exponent together with its coefficient.
    pub fn leading_term(&self) -> Result<(Rat, XiPoly)> {
        self.terms.first().cloned().ok_or(Error::NoLeadingTerm)
    }

    pub fn leading_exponent(&self) -> Option<&Rat> {
        self.terms.first().map(|(e, _)| e)
    }

    /// Lowest exponent present.
    pub fn order(&self) -> Option<&Rat> {
        self.terms.last().map(|(e, _)| e)
    }

    pub fn is_xi_free(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_constant())
    }

    pub fn combine(&self, other: &Self, op: SeriesOp) -> Self {
        match op {
            SeriesOp::Add => self.add(other),
            SeriesOp::Mul => self.mul(other),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut map: BTreeMap<Rat, XiPoly> = BTreeMap::new();
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            let slot = map.entry(e.clone()).or_default();
            *slot = &*slot + c;
        }
        Self::from_map(map, lcm_u64(self.ram, other.ram))
    }

    pub fn neg(&self) -> Self {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
            ram: self.ram,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut map: BTreeMap<Rat, XiPoly> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let slot = map.entry(e1 + e2).or_default();
                *slot = &*slot + &(c1 * c2);
            }
        }
        Self::from_map(map, lcm_u64(self.ram, other.ram))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return PuiseuxSeries {
                terms: Vec::new(),
                ram: self.ram,
            };
        }
        PuiseuxSeries {
            terms: self
                .terms
                .iter()
                .map(|(e, p)| (e.clone(), p.scale(c)))
                .collect(),
            ram: self.ram,
        }
    }

    /// Multiplies by `x^e`.
    pub fn shift(&self, e: &Rat) -> Self {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
            ram: lcm_u64(self.ram, den_u64(e)),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(Rat::one()).with_ram(self.ram);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes a value for ξ.
    pub fn eval_xi(&self, xi: &Rat) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), XiPoly::constant(c.eval(xi)))),
        )
        .with_ram(self.ram)
    }

    /// Terms with exponent strictly greater than `bound`.
    pub fn truncate_above(&self, bound: &Rat) -> Self {
        PuiseuxSeries {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e > bound)
                .cloned()
                .collect(),
            ram: self.ram,
        }
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let (neg, body) = match c.as_constant() {
                Some(k) => {
                    let neg = k < Rat::zero();
                    let mag = if neg { -k } else { k };
                    let body = if mag.is_one() && !e.is_zero() {
                        String::new()
                    } else {
                        fmt_rat(&mag)
                    };
                    (neg, body)
                }
                None => (false, format!("({c})")),
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            write!(f, "{body}")?;
            if !e.is_zero() {
                if !body.is_empty() {
                    write!(f, "*")?;
                }
                if e.is_one() {
                    write!(f, "x")?;
                } else if e.is_integer() {
                    write!(f, "x^{}", fmt_rat(e))?;
                } else {
                    write!(f, "x^({})", fmt_rat(e))?;
                }
            }
        }
        Ok(())
    }
}
