//! Univariate polynomials over ℚ: rational roots and real-root counting.
//! Used for the characteristic equations of Newton polygon edges.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::rational::Rat;

/// Ascending coefficients; trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly(pub Vec<Rat>);

impl UniPoly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UniPoly(c)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    fn lead(&self) -> &Rat {
        self.0.last().expect("zero polynomial has no lead")
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.divrem(d).1
    }

    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        let mut q = vec![Rat::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r.last().unwrap() / d.lead();
            for (i, c) in d.0.iter().enumerate() {
                r[k + i] -= &f * c;
            }
            q[k] = f;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Divides by `(x - root)`, assuming it is a root.
    fn deflate(&self, root: &Rat) -> UniPoly {
        let d = UniPoly::new(vec![-root.clone(), Rat::one()]);
        self.divrem(&d).0
    }

    fn monic(&self) -> UniPoly {
        let l = self.lead().clone();
        UniPoly(self.0.iter().map(|c| c / &l).collect())
    }

    fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn sturm_sequence(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(UniPoly::new(r.0.into_iter().map(|c| -c).collect()));
        }
        seq
    }

    /// Number of distinct real roots, via a Sturm sequence.
    pub fn count_real_roots(&self) -> usize {
        match self.degree() {
            None | Some(0) => return 0,
            _ => {}
        }
        let seq = self.sturm_sequence();
        let sign_at = |p: &UniPoly, neg_inf: bool| -> i8 {
            let s = if p.lead().is_positive() { 1 } else { -1 };
            if neg_inf && p.degree().unwrap() % 2 == 1 {
                -s
            } else {
                s
            }
        };
        let changes = |neg_inf: bool| {
            let signs: Vec<i8> = seq.iter().map(|p| sign_at(p, neg_inf)).collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        changes(true) - changes(false)
    }

    /// Nonzero rational roots with multiplicity, plus the leftover factor
    /// carrying all non-rational roots.
    ///
    /// A rational root of a primitive integer polynomial has a denominator
    /// dividing the leading coefficient `a`, so isolating each real root of
    /// the square-free part to width below `1/a` leaves one candidate `k/a`.
    pub fn rational_roots(&self) -> Result<(Vec<(Rat, usize)>, UniPoly)> {
        let z = self.0.iter().take_while(|c| c.is_zero()).count();
        let mut p = UniPoly::new(self.0[z..].to_vec());
        let mut roots: Vec<(Rat, usize)> = Vec::new();
        let candidates = match p.degree() {
            None | Some(0) => return Ok((roots, p)),
            Some(1) => vec![-&p.0[0] / &p.0[1]],
            Some(_) => {
                let g = p.gcd(&p.derivative());
                isolate_rational_roots(&p.divrem(&g).0)
            }
        };
        for c in candidates {
            let mut mult = 0;
            while p.degree().unwrap_or(0) > 0 && p.eval(&c).is_zero() {
                p = p.deflate(&c);
                mult += 1;
            }
            if mult > 0 {
                roots.push((c, mult));
            }
        }
        Ok((roots, p))
    }
}

fn sign(r: &Rat) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(seq: &[UniPoly], x: &Rat) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| sign(&p.eval(x)))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Rational roots of a square-free polynomial, ascending.
fn isolate_rational_roots(sq: &UniPoly) -> Vec<Rat> {
    let ints = integer_coefficients(sq);
    let a = Rat::from_integer(ints.last().unwrap().abs());
    let lead = sq.lead().abs();
    let bound = sq.0.iter().map(|c| c.abs() / &lead).max().unwrap() + Rat::one();
    let seq = sq.sturm_sequence();
    let mut out = Vec::new();
    // intervals (lo, hi] with their root counts
    let mut stack = vec![(-bound.clone(), bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let n = sign_changes(&seq, &lo) - sign_changes(&seq, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 && (&hi - &lo) * &a < Rat::one() {
            let k = (&hi * &a).floor();
            let c = k / &a;
            if c > lo && sq.eval(&c).is_zero() {
                out.push(c);
            }
            continue;
        }
        let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort();
    out
}

fn integer_coefficients(p: &UniPoly) -> Vec<BigInt> {
    let l = p.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> =
        p.0.iter()
            .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
            .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}
