//! Sparse polynomials in `n` variables over ℚ.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly2;
use crate::rational::{fmt_rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rat)>>(nvars: usize, terms: I) -> Self {
        let mut map: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length must match nvars");
            *map.entry(e).or_insert_with(Rat::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        MultiPoly { nvars, terms: map }
    }

    pub fn monomial(c: Rat, exps: Vec<u32>) -> Self {
        let n = exps.len();
        Self::from_terms(n, [(exps, c)])
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::from_terms(nvars, [(vec![0; nvars], c)])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(Rat::one(), e)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `deg_z(f) = max z·α` over the support.
    pub fn weighted_degree(&self, z: &[i64]) -> Result<i64> {
        if z.len() != self.nvars {
            return Err(Error::InvalidInput(format!(
                "weight vector has length {}, polynomial has {} variables",
                z.len(),
                self.nvars
            )));
        }
        self.terms
            .keys()
            .map(|e| e.iter().zip(z).map(|(&a, &w)| a as i64 * w).sum())
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        Self::from_terms(
            self.nvars,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, v)| (e.clone(), v * c)),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut map: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *map.entry(e).or_insert_with(Rat::zero) += c1 * c2;
            }
        }
        map.retain(|_, c| !c.is_zero());
        MultiPoly {
            nvars: self.nvars,
            terms: map,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, Rat::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&a, v)| {
                    acc * num_traits::pow(v.clone(), a as usize)
                })
            })
            .fold(Rat::zero(), |acc, v| acc + v)
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(crate::rational::to_f64(c), |acc, (&a, v)| {
                        acc * v.powi(a as i32)
                    })
            })
            .sum()
    }

    pub fn to_laurent2(&self) -> Result<LaurentPoly2> {
        if self.nvars != 2 {
            return Err(Error::InvalidInput(format!(
                "expected a polynomial in 2 variables, got {}",
                self.nvars
            )));
        }
        Ok(LaurentPoly2::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| ((e[0] as i64, e[1]), c.clone())),
        ))
    }

    pub fn from_laurent2(f: &LaurentPoly2) -> Result<Self> {
        if !f.is_polynomial() {
            return Err(Error::InvalidInput(format!("{f} has negative powers of x")));
        }
        Ok(Self::from_terms(
            2,
            f.terms()
                .iter()
                .map(|(&(a, b), c)| (vec![a as u32, b], c.clone())),
        ))
    }

    /// Renders with the given variable names (must have `nvars` entries).
    pub fn display_with<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> impl fmt::Display + 'a {
        Named { p: self, names }
    }

    pub fn default_names(nvars: usize) -> Vec<String> {
        match nvars {
            1 => vec!["x".into()],
            2 => vec!["x".into(), "y".into()],
            _ => (1..=nvars).map(|i| format!("x{i}")).collect(),
        }
    }
}

struct Named<'a, S> {
    p: &'a MultiPoly,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for Named<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.terms.is_empty() {
            return write!(f, "0");
        }
        // graded, then lexicographically descending
        let mut keys: Vec<&Vec<u32>> = self.p.terms.keys().collect();
        keys.sort_by(|l, r| {
            let dl: u32 = l.iter().sum();
            let dr: u32 = r.iter().sum();
            dr.cmp(&dl).then(r.cmp(l))
        });
        for (i, e) in keys.into_iter().enumerate() {
            let c = &self.p.terms[e];
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
            if !mag.is_one() || e.iter().all(|&a| a == 0) {
                factors.push(fmt_rat(&mag));
            }
            for (a, name) in e.iter().zip(self.names) {
                match a {
                    0 => {}
                    1 => factors.push(name.as_ref().to_string()),
                    _ => factors.push(format!("{}^{a}", name.as_ref())),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = Self::default_names(self.nvars);
        fmt::Display::fmt(
            &Named {
                p: self,
                names: &names,
            },
            f,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn weighted_degrees() {
        let f = MultiPoly::monomial(int(1), vec![3, 1]);
        assert_eq!(f.weighted_degree(&[1, -3]).unwrap(), 0);
        let g = MultiPoly::monomial(int(1), vec![1, 1]);
        assert_eq!(g.weighted_degree(&[0, 1]).unwrap(), 1);
        assert_eq!(
            MultiPoly::zero(2).weighted_degree(&[1, 1]),
            Err(Error::ZeroPolynomial)
        );
        assert!(f.weighted_degree(&[1]).is_err());
    }

    #[test]
    fn display_three_vars() {
        let x1 = MultiPoly::var(3, 0);
        let t = MultiPoly::var(3, 2);
        let p = x1.mul(&t).add(&MultiPoly::constant(3, int(-2)));
        assert_eq!(p.to_string(), "x1*x3 - 2");
        assert_eq!(p.display_with(&["a", "b", "t"]).to_string(), "a*t - 2");
    }

    #[test]
    fn laurent_round_trip() {
        let p = MultiPoly::from_terms(2, [(vec![0, 2], int(1)), (vec![6, 0], int(-1))]);
        let l = p.to_laurent2().unwrap();
        assert_eq!(MultiPoly::from_laurent2(&l).unwrap(), p);
        assert!(MultiPoly::from_laurent2(&LaurentPoly2::monomial(int(1), -1, 0)).is_err());
    }
}
