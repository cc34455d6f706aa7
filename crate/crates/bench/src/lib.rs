//! Shared inputs for the benchmarks.

use semigrowth::keyforms::{Plan, PlanTail};
use semigrowth::rational::{int, rat};
use semigrowth::text::parse_laurent2;
use semigrowth::{LaurentPoly2, PuiseuxSeries, SemidegreeSpec};

/// The two tentacles `±x³ + x⁻² + ξx⁻³`.
pub fn two_tentacles() -> Vec<SemidegreeSpec> {
    [1, -1]
        .iter()
        .map(|&s| {
            SemidegreeSpec::new(
                PuiseuxSeries::from_rat_terms([(int(s), int(3)), (int(1), int(-2))]),
                int(-3),
            )
            .expect("valid spec")
        })
        .collect()
}

/// Key forms `x, y, y² − x⁵, y² − x⁵ − x⁻¹y` closed with value `0`.
pub fn three_step_plan() -> Plan {
    Plan {
        steps: vec![(rat(5, 2), int(1)), (rat(3, 2), int(1))],
        tail: PlanTail {
            omega: int(0),
            c1: int(0),
            c2: int(1),
        },
    }
}

/// A dense bivariate polynomial of total degree `deg` with small coefficients.
pub fn dense_poly(deg: i64) -> LaurentPoly2 {
    let mut src = String::new();
    for a in 0..=deg {
        for b in 0..=deg - a {
            let c = (a * 7 + b * 3) % 5 + 1;
            src.push_str(&format!(" + {c}*x^{a}*y^{b}"));
        }
    }
    parse_laurent2(&src).expect("valid polynomial")
}
