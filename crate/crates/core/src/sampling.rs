//! Floating-point corroboration of exact semidegrees: points on the curves
//! `φ_t = t·φ₁ + (1−t)·φ₂` inside a tentacle and the slope of
//! `log(1 + |f|)` against `log x` along them.
//!
//! Points are computed exactly (grid values are chosen so that every
//! `x^e` is rational); only the final logarithms and the regression use
//! `f64`.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly2;
use crate::newton::SemidegreeSpec;
use crate::rational::{int, ln_abs, rat_pow_exact, Rat};
use crate::series::PuiseuxSeries;

/// Exact value of a ξ-free series at `x`, when every power is rational.
pub fn eval_series(s: &PuiseuxSeries, x: &Rat) -> Result<Rat> {
    let mut acc = Rat::zero();
    for (e, c) in s.terms() {
        let c = c
            .as_constant()
            .ok_or_else(|| Error::InvalidInput("series depends on xi".into()))?;
        let p = rat_pow_exact(x, e)
            .ok_or_else(|| Error::Unsupported(format!("x = {x} has no rational power {e}")))?;
        acc += c * p;
    }
    Ok(acc)
}

/// `(x, t·φ₁(x) + (1−t)·φ₂(x))`
pub fn curve_point(
    phi1: &PuiseuxSeries,
    phi2: &PuiseuxSeries,
    t: &Rat,
    x: &Rat,
) -> Result<(Rat, Rat)> {
    if *x < Rat::one() {
        return Err(Error::InvalidInput("x must be at least 1".into()));
    }
    let y = t * eval_series(phi1, x)? + (Rat::one() - t) * eval_series(phi2, x)?;
    Ok((x.clone(), y))
}

/// Boundary series `φ + x^ω` and `φ + 2x^ω` of a tentacle with generic
/// series `φ + ξx^ω`; the curve at `t` is `φ + (2 − t)x^ω`.
pub fn tentacle_boundaries(spec: &SemidegreeSpec) -> Result<(PuiseuxSeries, PuiseuxSeries)> {
    if spec.is_total_degree() {
        return Err(Error::Unsupported(
            "no boundary series for the total degree".into(),
        ));
    }
    let b = |a: i64| {
        spec.phi().add(&PuiseuxSeries::from_rat_terms([(
            int(a),
            spec.omega().clone(),
        )]))
    };
    Ok((b(1), b(2)))
}

/// `ξ`-value of the curve at parameter `t`.
pub fn xi_at(t: &Rat) -> Rat {
    int(2) - t
}

/// Whether `t` is a bad parameter: the leading coefficient `f₀(ξ)` of
/// `f(x, φ + ξx^ω)` vanishes at `ξ = 2 − t`.
pub fn is_degenerate_t(spec: &SemidegreeSpec, f: &LaurentPoly2, t: &Rat) -> Result<bool> {
    let (_, c) = f.substitute(&spec.generic_series()).leading_term()?;
    Ok(c.eval(&xi_at(t)).is_zero())
}

/// About `count` values `x = m^N` with `m` integral, log-spaced between
/// `2^lo_log2` and `2^hi_log2`, where `N` is the ramification of the generic series.
/// Every power `x^e` with `e ∈ (1/N)ℤ` is then an integer power of `m`.
pub fn exact_grid(ram: u64, lo_log2: u32, hi_log2: u32, count: usize) -> Vec<Rat> {
    let n = ram.max(1) as f64;
    let mut out: Vec<Rat> = Vec::new();
    for j in 0..count.max(2) {
        let l = lo_log2 as f64
            + (hi_log2 as f64 - lo_log2 as f64) * j as f64 / (count.max(2) - 1) as f64;
        let m = (2f64.powf(l / n)).round().max(2.0) as u64;
        let x = Rat::from_integer(BigInt::from(m).pow(ram.max(1) as u32));
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

fn slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

fn ln_one_plus_abs(v: &Rat) -> f64 {
    let l = ln_abs(v);
    // ln(1 + e^l) without overflow
    if l > 30.0 {
        l + (-l).exp().ln_1p()
    } else {
        l.exp().ln_1p()
    }
}

/// Least-squares slope of `ln(1 + |f|)` against `ln x` along `φ_t`,
/// maximized over `t_grid`. Tends to `max(0, δ*(f))` for generic `t`.
pub fn growth_exponent(
    spec: &SemidegreeSpec,
    f: &LaurentPoly2,
    x_grid: &[Rat],
    t_grid: &[Rat],
) -> Result<f64> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if x_grid.len() < 2 || t_grid.is_empty() {
        return Err(Error::InvalidInput(
            "grids need at least two x values and one t".into(),
        ));
    }
    let (phi1, phi2) = tentacle_boundaries(spec)?;
    let mut best: Option<f64> = None;
    let mut any_nonzero = false;
    for t in t_grid {
        let mut pts = Vec::with_capacity(x_grid.len());
        for x in x_grid {
            let (x, y) = curve_point(&phi1, &phi2, t, x)?;
            let v = f.eval(&x, &y);
            any_nonzero |= !v.is_zero();
            let fy = if v.is_zero() {
                0.0
            } else {
                ln_one_plus_abs(&v)
            };
            pts.push((ln_abs(&x), fy));
        }
        let s = slope(&pts);
        best = Some(best.map_or(s, |b: f64| b.max(s)));
    }
    if !any_nonzero {
        return Err(Error::DegenerateSample);
    }
    Ok(best.unwrap())
}
