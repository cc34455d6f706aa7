//! Random inputs shared by the integration and acceptance tests.
#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use semigrowth::keyforms::{build_keyforms, digit_representation, Plan, PlanTail};
use semigrowth::rational::{den_u64, int, lcm_u64, pow_rat, rat};
use semigrowth::{LaurentPoly2, MultiPoly, PuiseuxSeries, Rat, SemidegreeSpec};

/// `p` and the digits of `p·ω` for a prospective value `ω` appended to
/// `values` (with periods `periods`).
fn period_and_digits(values: &[Rat], periods: &[u64], omega: &Rat) -> (u64, Vec<i64>) {
    let n = values.iter().fold(1, |acc, v| lcm_u64(acc, den_u64(v)));
    let p = den_u64(&(omega * int(n as i64)));
    let digits = digit_representation(values, periods, &(omega * int(p as i64))).unwrap();
    (p, digits)
}

fn small_positive(rng: &mut impl Rng) -> Rat {
    [rat(1, 1), rat(2, 1), rat(1, 2), rat(3, 1), rat(3, 2)]
        .choose(rng)
        .unwrap()
        .clone()
}

/// A plan with `len` entries in total (`len − 1` steps and the tail) whose
/// boundary branches have rational coefficients: every constant is
/// `a^p / ∏ a_j^{α_j}` for chosen positive leading coefficients `a`.
pub fn random_plan(rng: &mut impl Rng, len: usize) -> Plan {
    let denoms = [1i64, 1, 2, 2, 3];
    loop {
        let mut values = vec![Rat::one()];
        let mut periods: Vec<u64> = Vec::new();
        let mut leads = vec![Rat::one()];
        let mut steps = Vec::new();
        let mut total_period = 1u64;
        let mut ok = true;
        let d = *denoms.choose(rng).unwrap();
        let mut omega = rat(rng.gen_range(1..=4 * d), d);
        if omega == Rat::one() {
            // two lines through the origin: the total degree, which has no key forms
            continue;
        }
        for _ in 0..len - 1 {
            let (p, digits) = period_and_digits(&values, &periods, &omega);
            total_period *= p;
            if total_period > 6 {
                ok = false;
                break;
            }
            let a = small_positive(rng);
            let b = digits
                .iter()
                .zip(&leads)
                .skip(1)
                .fold(Rat::one(), |acc, (&k, l)| acc * pow_rat(l, k));
            let c = pow_rat(&a, p as i64) / b;
            steps.push((omega.clone(), c));
            values.push(omega.clone());
            periods.push(p);
            leads.push(a);
            let d = *denoms.choose(rng).unwrap();
            omega = &omega * int(p as i64) - rat(rng.gen_range(1..=3 * d), d);
        }
        if !ok {
            continue;
        }
        let (p, digits) = period_and_digits(&values, &periods, &omega);
        if total_period * p > 8 {
            continue;
        }
        let b = digits
            .iter()
            .zip(&leads)
            .skip(1)
            .fold(Rat::one(), |acc, (&k, l)| acc * pow_rat(l, k));
        // with no steps, a zero constant makes the boundary the x-axis
        let s1 = if !steps.is_empty() && rng.gen_bool(0.5) {
            Rat::zero()
        } else {
            small_positive(rng)
        };
        let mut s2 = small_positive(rng);
        while s2 == s1 {
            s2 = small_positive(rng);
        }
        let c1 = pow_rat(&s1, p as i64) / &b;
        let c2 = pow_rat(&s2, p as i64) / &b;
        assert!(build_keyforms(&steps).is_ok());
        return Plan {
            steps,
            tail: PlanTail { omega, c1, c2 },
        };
    }
}

/// Random polynomial in `x, y` with total degree at most `deg` and at most
/// `max_terms` terms with small integer coefficients.
pub fn random_poly(rng: &mut impl Rng, deg: u32, max_terms: usize) -> LaurentPoly2 {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let terms = (0..n).map(|_| {
            let a = rng.gen_range(0..=deg);
            let b = rng.gen_range(0..=deg - a);
            let mut c = rng.gen_range(-5i64..=5);
            if c == 0 {
                c = 1;
            }
            ((a as i64, b), int(c))
        });
        let p = LaurentPoly2::from_terms(terms);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_multipoly(rng: &mut impl Rng, nvars: usize, deg: u32, max_terms: usize) -> MultiPoly {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let terms = (0..n).map(|_| {
            let mut left = rng.gen_range(0..=deg);
            let e: Vec<u32> = (0..nvars)
                .map(|_| {
                    let k = rng.gen_range(0..=left);
                    left -= k;
                    k
                })
                .collect();
            (e, int(rng.gen_range(-4i64..=4)))
        });
        let p = MultiPoly::from_terms(nvars, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random spec `φ + ξx^ω` with exponents in `(1/ram)ℤ`.
pub fn random_spec(rng: &mut impl Rng, ram: i64, max_terms: usize) -> SemidegreeSpec {
    let n = rng.gen_range(0..=max_terms);
    let mut e = rat(rng.gen_range(ram..=3 * ram), ram);
    let mut terms = Vec::new();
    for _ in 0..n {
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        terms.push((int(c), e.clone()));
        e -= rat(rng.gen_range(1..=2 * ram), ram);
    }
    SemidegreeSpec::new(PuiseuxSeries::from_rat_terms(terms), e).unwrap()
}

pub fn poly(src: &str) -> LaurentPoly2 {
    semigrowth::text::parse_laurent2(src).unwrap()
}

pub fn series(terms: &[(i64, i64, i64, i64)]) -> PuiseuxSeries {
    PuiseuxSeries::from_rat_terms(terms.iter().map(|&(cn, cd, n, d)| (rat(cn, cd), rat(n, d))))
}
