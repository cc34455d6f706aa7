//! Elements of ℚ[x, x⁻¹, y] and the substitution kernel `f(x, s(x))`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_rat, int, pow_rat, Rat};
use crate::series::PuiseuxSeries;

/// Sparse map `(a, b) ↦ coefficient of x^a·y^b`. `a` may be negative, `b`
/// never is, and no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, u32), Rat>,
}

impl LaurentPoly2 {
    pub fn from_terms<I: IntoIterator<Item = ((i64, u32), Rat)>>(terms: I) -> Self {
        let mut map: BTreeMap<(i64, u32), Rat> = BTreeMap::new();
        for (k, c) in terms {
            *map.entry(k).or_insert_with(Rat::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly2 { terms: map }
    }

    pub fn monomial(c: Rat, a: i64, b: u32) -> Self {
        Self::from_terms([((a, b), c)])
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    pub fn terms(&self) -> &BTreeMap<(i64, u32), Rat> {
        &self.terms
    }

    pub fn coeff(&self, a: i64, b: u32) -> Rat {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rat::zero)
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

    /// No negative powers of `x`.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(a, _)| a >= 0)
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// Total degree `a + b`, which for Laurent inputs may be negative.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|&(a, b)| a + b as i64).max()
    }

    /// `max (wx·a + wy·b)` over the support.
    pub fn weighted_degree(&self, wx: &Rat, wy: &Rat) -> Option<Rat> {
        self.terms
            .keys()
            .map(|&(a, b)| wx * int(a) + wy * int(b as i64))
            .max()
    }

    /// Coefficient of `y^b` as a Laurent polynomial in `x` (keys are `a`).
    pub fn y_coeff(&self, b: u32) -> BTreeMap<i64, Rat> {
        self.terms
            .iter()
            .filter(|((_, bb), _)| *bb == b)
            .map(|(&(a, _), c)| (a, c.clone()))
            .collect()
    }

    pub fn neg(&self) -> Self {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(k, c)| (*k, c.clone())),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v * c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut map: BTreeMap<(i64, u32), Rat> = BTreeMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                *map.entry((a1 + a2, b1 + b2)).or_insert_with(Rat::zero) += c1 * c2;
            }
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly2 { terms: map }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(Rat::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by `x^a·y^b`.
    pub fn shift(&self, a: i64, b: u32) -> Self {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(aa, bb), c)| ((aa + a, bb + b), c.clone()))
                .collect(),
        }
    }

    /// Exact expansion of `f(x, s(x))` collected by powers of `x`.
    pub fn substitute(&self, y_series: &PuiseuxSeries) -> PuiseuxSeries {
        let Some(top) = self.y_degree() else {
            return PuiseuxSeries::default().with_ram(y_series.ram());
        };
        let powers = series_powers(y_series, top);
        self.substitute_with_powers(&powers)
    }

    /// Same as [`substitute`](Self::substitute) with `powers[b] = s^b`
    /// precomputed by the caller.
    pub fn substitute_with_powers(&self, powers: &[PuiseuxSeries]) -> PuiseuxSeries {
        let mut terms = Vec::new();
        for (&(a, b), c) in &self.terms {
            let shifted = powers[b as usize].shift(&int(a)).scale(c);
            terms.extend(shifted.terms().iter().cloned());
        }
        let ram = powers.first().map_or(1, PuiseuxSeries::ram);
        PuiseuxSeries::from_terms(terms).with_ram(ram)
    }

    /// `f(x, g(x, y))`, staying inside ℚ[x, x⁻¹, y].
    pub fn compose_y(&self, g: &LaurentPoly2) -> LaurentPoly2 {
        let top = self.y_degree().unwrap_or(0);
        let mut powers = vec![Self::constant(Rat::one())];
        for b in 1..=top as usize {
            let next = powers[b - 1].mul(g);
            powers.push(next);
        }
        let mut acc = LaurentPoly2::default();
        for (&(a, b), c) in &self.terms {
            acc = acc.add(&powers[b as usize].shift(a, 0).scale(c));
        }
        acc
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * pow_rat(x, a) * pow_rat(y, b as i64))
            .fold(Rat::zero(), |acc, v| acc + v)
    }

    /// Division with remainder by `g`, which must be monic in `y`
    /// (its top `y`-coefficient is exactly `1`).
    pub fn divrem_y(&self, g: &LaurentPoly2) -> Result<(LaurentPoly2, LaurentPoly2)> {
        let dg = g.y_degree().ok_or(Error::ZeroPolynomial)?;
        let lead = g.y_coeff(dg);
        if lead.len() != 1 || lead.get(&0) != Some(&Rat::one()) {
            return Err(Error::InvalidInput("divisor is not monic in y".into()));
        }
        let mut rem = self.clone();
        let mut quo = LaurentPoly2::default();
        while let Some(dr) = rem.y_degree().filter(|&d| d >= dg) {
            let top: LaurentPoly2 = LaurentPoly2::from_terms(
                rem.y_coeff(dr).into_iter().map(|(a, c)| ((a, dr - dg), c)),
            );
            quo = quo.add(&top);
            rem = rem.sub(&top.mul(g));
        }
        Ok((quo, rem))
    }
}

/// `[s^0, s^1, …, s^top]`
pub fn series_powers(s: &PuiseuxSeries, top: u32) -> Vec<PuiseuxSeries> {
    let mut powers = vec![PuiseuxSeries::constant(Rat::one()).with_ram(s.ram())];
    for b in 1..=top as usize {
        let next = powers[b - 1].mul(s);
        powers.push(next);
    }
    powers
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|l, r| r.1.cmp(&l.1).then(r.0.cmp(&l.0)));
        for (i, (a, b)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(a, b)];
            let neg = *c < Rat::zero();
            let mag = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                factors.push(fmt_rat(&mag));
            }
            match a {
                0 => {}
                1 => factors.push("x".to_string()),
                _ => factors.push(format!("x^{a}")),
            }
            match b {
                0 => {}
                1 => factors.push("y".to_string()),
                _ => factors.push(format!("y^{b}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
