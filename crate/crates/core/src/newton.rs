//! Branches of `f(x, y) = 0` as `x → +∞`, expanded by the Newton polygon
//! method, and the generic degree-wise series `φ + ξ·x^ω` of a tentacle
//! bounded by two such branches.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly2;
use crate::rational::{binomial, Rat};
use crate::series::PuiseuxSeries;
use crate::univariate::UniPoly;
use crate::xipoly::XiPoly;

pub const DEFAULT_TERM_LIMIT: usize = 32;

/// The pair `(φ, ω)` of a generic degree-wise Puiseux series
/// `φ(x) + ξ·x^ω`, or the total degree when `is_total_degree` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidegreeSpec {
    phi: PuiseuxSeries,
    omega: Rat,
    is_total_degree: bool,
}

impl SemidegreeSpec {
    /// Requires `φ` to be ξ-free and `ω` below every exponent of `φ`.
    pub fn new(phi: PuiseuxSeries, omega: Rat) -> Result<Self> {
        if !phi.is_xi_free() {
            return Err(Error::InvalidInput("phi must not involve xi".into()));
        }
        if let Some(ord) = phi.order() {
            if omega >= *ord {
                return Err(Error::InvalidInput(format!(
                    "omega must be below the smallest exponent of phi ({} >= {})",
                    crate::rational::fmt_rat(&omega),
                    crate::rational::fmt_rat(ord)
                )));
            }
        }
        Ok(SemidegreeSpec {
            phi,
            omega,
            is_total_degree: false,
        })
    }

    pub fn total_degree() -> Self {
        SemidegreeSpec {
            phi: PuiseuxSeries::default(),
            omega: Rat::zero(),
            is_total_degree: true,
        }
    }

    pub fn phi(&self) -> &PuiseuxSeries {
        &self.phi
    }

    pub fn omega(&self) -> &Rat {
        &self.omega
    }

    pub fn is_total_degree(&self) -> bool {
        self.is_total_degree
    }

    /// `φ(x) + ξ·x^ω`
    pub fn generic_series(&self) -> PuiseuxSeries {
        self.phi
            .add(&PuiseuxSeries::monomial(XiPoly::xi(), self.omega.clone()))
    }
}

impl fmt::Display for SemidegreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_total_degree {
            write!(f, "deg")
        } else {
            write!(f, "{}", self.generic_series())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BranchKind {
    Real,
    /// Non-real conjugate roots of the characteristic equation at
    /// `exponent`; `series` holds the common real prefix.
    ComplexPairs {
        exponent: Rat,
        pairs: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub series: PuiseuxSeries,
    pub kind: BranchKind,
    /// The series is an exact root rather than a truncation.
    pub exact: bool,
}

impl Branch {
    pub fn is_real(&self) -> bool {
        self.kind == BranchKind::Real
    }
}

/// `coeffs[j]` is the coefficient of `y^j`, a ξ-free series in `x`.
#[derive(Debug, Clone)]
struct YPoly {
    coeffs: Vec<PuiseuxSeries>,
}

impl YPoly {
    fn from_laurent(f: &LaurentPoly2) -> Self {
        let top = f.y_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![PuiseuxSeries::default(); top + 1];
        for (&(a, b), c) in f.terms() {
            coeffs[b as usize] = coeffs[b as usize].add(&PuiseuxSeries::from_rat_terms([(
                c.clone(),
                Rat::from_integer(a.into()),
            )]));
        }
        YPoly { coeffs }
    }

    /// `f(x, c·x^μ + y)`
    fn shift(&self, c: &Rat, mu: &Rat) -> YPoly {
        let n = self.coeffs.len();
        let t = PuiseuxSeries::from_rat_terms([(c.clone(), mu.clone())]);
        let tp = crate::laurent::series_powers(&t, n as u32);
        let mut out = vec![PuiseuxSeries::default(); n];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, slot) in out.iter_mut().enumerate().take(j + 1) {
                let bin = Rat::from_integer(binomial(j as u64, k as u64));
                *slot = slot.add(&a.mul(&tp[j - k]).scale(&bin));
            }
        }
        YPoly { coeffs: out }
    }
}

/// What the Newton polygon offers at one step.
struct Step {
    /// `y = 0` is an exact root of the current polynomial.
    zero_root: bool,
    /// `(μ, c)` for rational nonzero roots `y ≈ c·x^μ`.
    candidates: Vec<(Rat, Rat)>,
    complex: Vec<(Rat, usize)>,
}

fn lead_const(s: &PuiseuxSeries) -> (Rat, Rat) {
    let (e, c) = s.leading_term().expect("nonzero");
    (e, c.as_constant().expect("xi-free"))
}

fn newton_step(p: &YPoly, upper: Option<&Rat>) -> Result<Step> {
    let points: Vec<(usize, Rat, Rat)> = p
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(j, a)| {
            let (e, c) = lead_const(a);
            (j, e, c)
        })
        .collect();
    let zero_root = p.coeffs[0].is_zero();
    let mut slopes: Vec<Rat> = Vec::new();
    for (i, (j1, e1, _)) in points.iter().enumerate() {
        for (j2, e2, _) in &points[i + 1..] {
            let mu = (e1 - e2) / Rat::from_integer(((j2 - j1) as i64).into());
            if upper.is_some_and(|u| mu >= *u) || slopes.contains(&mu) {
                continue;
            }
            let val = e1 + &mu * Rat::from_integer((*j1 as i64).into());
            let is_max = points
                .iter()
                .all(|(j, e, _)| e + &mu * Rat::from_integer((*j as i64).into()) <= val);
            if is_max {
                slopes.push(mu);
            }
        }
    }
    slopes.sort();
    let mut candidates = Vec::new();
    let mut complex = Vec::new();
    for mu in slopes {
        let vals: Vec<Rat> = points
            .iter()
            .map(|(j, e, _)| e + &mu * Rat::from_integer((*j as i64).into()))
            .collect();
        let best = vals.iter().max().unwrap().clone();
        let active: Vec<&(usize, Rat, Rat)> = points
            .iter()
            .zip(&vals)
            .filter(|(_, v)| **v == best)
            .map(|(pt, _)| pt)
            .collect();
        let jmin = active.iter().map(|pt| pt.0).min().unwrap();
        let jmax = active.iter().map(|pt| pt.0).max().unwrap();
        let mut chars = vec![Rat::zero(); jmax - jmin + 1];
        for (j, _, c) in active {
            chars[j - jmin] = c.clone();
        }
        let (roots, rest) = UniPoly::new(chars).rational_roots()?;
        if rest.count_real_roots() > 0 {
            return Err(Error::NonRationalBranch);
        }
        if let Some(d) = rest.degree().filter(|&d| d > 0) {
            complex.push((mu.clone(), d / 2));
        }
        for (c, _) in roots {
            candidates.push((mu.clone(), c));
        }
    }
    Ok(Step {
        zero_root,
        candidates,
        complex,
    })
}

fn prefix_series(prefix: &[(Rat, Rat)]) -> PuiseuxSeries {
    PuiseuxSeries::from_rat_terms(prefix.iter().map(|(mu, c)| (c.clone(), mu.clone())))
}

fn check_input(f: &LaurentPoly2, term_limit: usize) -> Result<()> {
    if term_limit == 0 {
        return Err(Error::InvalidInput("term_limit must be at least 1".into()));
    }
    match f.y_degree() {
        Some(d) if d > 0 => Ok(()),
        _ => Err(Error::NoBranch),
    }
}

/// All branches of `f = 0` along which `x → +∞`, in descending order (the
/// top branch first; complex markers last). Each real branch is expanded to
/// at most `term_limit` terms or until it terminates exactly.
pub fn expand_at_infinity(f: &LaurentPoly2, term_limit: usize) -> Result<Vec<Branch>> {
    check_input(f, term_limit)?;
    let mut out = Vec::new();
    expand_rec(
        &YPoly::from_laurent(f),
        &mut Vec::new(),
        None,
        term_limit,
        &mut out,
    )?;
    let (mut real, complex): (Vec<Branch>, Vec<Branch>) =
        out.into_iter().partition(Branch::is_real);
    real.sort_by(|a, b| compare_series(&b.series, &a.series));
    real.dedup();
    real.extend(complex);
    Ok(real)
}

fn expand_rec(
    p: &YPoly,
    prefix: &mut Vec<(Rat, Rat)>,
    upper: Option<&Rat>,
    limit: usize,
    out: &mut Vec<Branch>,
) -> Result<()> {
    let step = newton_step(p, upper)?;
    if step.zero_root {
        out.push(Branch {
            series: prefix_series(prefix),
            kind: BranchKind::Real,
            exact: true,
        });
    }
    for (mu, pairs) in &step.complex {
        out.push(Branch {
            series: prefix_series(prefix),
            kind: BranchKind::ComplexPairs {
                exponent: mu.clone(),
                pairs: *pairs,
            },
            exact: false,
        });
    }
    if step.candidates.is_empty() {
        return Ok(());
    }
    if prefix.len() >= limit {
        out.push(Branch {
            series: prefix_series(prefix),
            kind: BranchKind::Real,
            exact: false,
        });
        return Ok(());
    }
    for (mu, c) in step.candidates {
        let next = p.shift(&c, &mu);
        prefix.push((mu.clone(), c));
        expand_rec(&next, prefix, Some(&mu), limit, out)?;
        prefix.pop();
    }
    Ok(())
}

/// The largest real branch as `x → +∞`, found by a depth-first search that
/// visits candidates in decreasing order.
pub fn top_branch(f: &LaurentPoly2, term_limit: usize) -> Result<Branch> {
    check_input(f, term_limit)?;
    top_rec(&YPoly::from_laurent(f), &mut Vec::new(), None, term_limit)?.ok_or(Error::NoBranch)
}

fn top_rec(
    p: &YPoly,
    prefix: &mut Vec<(Rat, Rat)>,
    upper: Option<&Rat>,
    limit: usize,
) -> Result<Option<Branch>> {
    let step = newton_step(p, upper)?;
    let exact_here = |prefix: &[(Rat, Rat)]| Branch {
        series: prefix_series(prefix),
        kind: BranchKind::Real,
        exact: true,
    };
    if prefix.len() >= limit {
        if step.candidates.is_empty() {
            return Ok(step.zero_root.then(|| exact_here(prefix)));
        }
        return Ok(Some(Branch {
            series: prefix_series(prefix),
            kind: BranchKind::Real,
            exact: false,
        }));
    }
    let (mut pos, mut neg): (Vec<_>, Vec<_>) = step
        .candidates
        .into_iter()
        .partition(|(_, c)| c.is_positive());
    pos.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
    neg.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    for (mu, c) in pos {
        if let Some(b) = descend(p, prefix, mu, c, limit)? {
            return Ok(Some(b));
        }
    }
    if step.zero_root {
        return Ok(Some(exact_here(prefix)));
    }
    for (mu, c) in neg {
        if let Some(b) = descend(p, prefix, mu, c, limit)? {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

fn descend(
    p: &YPoly,
    prefix: &mut Vec<(Rat, Rat)>,
    mu: Rat,
    c: Rat,
    limit: usize,
) -> Result<Option<Branch>> {
    let next = p.shift(&c, &mu);
    prefix.push((mu.clone(), c));
    let r = top_rec(&next, prefix, Some(&mu), limit);
    prefix.pop();
    r
}

/// Orders series by their values as `x → +∞`.
pub fn compare_series(a: &PuiseuxSeries, b: &PuiseuxSeries) -> Ordering {
    let d = a.sub(b);
    match d.terms().first() {
        None => Ordering::Equal,
        Some((_, c)) => {
            let lead = c.coeffs().last().unwrap();
            if lead.is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BranchChoice {
    /// The largest real branch.
    #[default]
    Top,
    /// Index into the real branches of [`expand_at_infinity`], top first.
    Index(usize),
}

fn select_branch(f: &LaurentPoly2, choice: BranchChoice, term_limit: usize) -> Result<Branch> {
    match choice {
        BranchChoice::Top => top_branch(f, term_limit),
        BranchChoice::Index(i) => {
            let real: Vec<Branch> = expand_at_infinity(f, term_limit)?
                .into_iter()
                .filter(Branch::is_real)
                .collect();
            let n = real.len();
            real.into_iter().nth(i).ok_or_else(|| {
                Error::InvalidInput(format!("branch index {i} out of range ({n} real branches)"))
            })
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
enum Direction {
    Vertical,
    Horizontal,
    Slope(Rat),
}

fn direction(s: &PuiseuxSeries) -> Direction {
    match s.terms().first() {
        None => Direction::Horizontal,
        Some((e, c)) => match e.cmp(&Rat::one()) {
            Ordering::Greater => Direction::Vertical,
            Ordering::Less => Direction::Horizontal,
            Ordering::Equal => Direction::Slope(c.as_constant().unwrap()),
        },
    }
}

/// `(φ, ω)` of the tentacle between the top branches of `f1 = 0` and `f2 = 0`.
pub fn generic_series_from_boundaries(
    f1: &LaurentPoly2,
    f2: &LaurentPoly2,
) -> Result<SemidegreeSpec> {
    generic_series_with(
        f1,
        f2,
        BranchChoice::Top,
        BranchChoice::Top,
        DEFAULT_TERM_LIMIT,
    )
}

pub fn generic_series_with(
    f1: &LaurentPoly2,
    f2: &LaurentPoly2,
    choice1: BranchChoice,
    choice2: BranchChoice,
    term_limit: usize,
) -> Result<SemidegreeSpec> {
    // start short and double up to the caller's limit
    let mut limit = term_limit.min(8);
    loop {
        match compare_boundaries(f1, f2, choice1, choice2, limit) {
            Err(Error::InsufficientPrecision { .. }) if limit < term_limit => {
                limit = (limit * 2).min(term_limit);
            }
            r => return r,
        }
    }
}

fn compare_boundaries(
    f1: &LaurentPoly2,
    f2: &LaurentPoly2,
    choice1: BranchChoice,
    choice2: BranchChoice,
    term_limit: usize,
) -> Result<SemidegreeSpec> {
    let b1 = select_branch(f1, choice1, term_limit)?;
    let b2 = select_branch(f2, choice2, term_limit)?;
    if direction(&b1.series) != direction(&b2.series) {
        return Ok(SemidegreeSpec::total_degree());
    }
    // Below the last computed term of a truncated branch nothing is known.
    let floor = [&b1, &b2]
        .iter()
        .filter(|b| !b.exact)
        .filter_map(|b| b.series.order().cloned())
        .max();
    let diff = b1.series.sub(&b2.series);
    let omega = diff
        .terms()
        .first()
        .map(|(e, _)| e.clone())
        .filter(|e| floor.as_ref().is_none_or(|fl| e >= fl));
    match omega {
        Some(omega) => SemidegreeSpec::new(b1.series.truncate_above(&omega), omega),
        None if b1.exact && b2.exact => Err(Error::DegenerateTentacle),
        None => Err(Error::InsufficientPrecision {
            term_limit,
            suggested: term_limit * 2,
        }),
    }
}

/// Retries [`generic_series_with`] with doubled term limits on
/// [`Error::InsufficientPrecision`], up to `max_limit`.
pub fn generic_series_retrying(
    f1: &LaurentPoly2,
    f2: &LaurentPoly2,
    choice1: BranchChoice,
    choice2: BranchChoice,
    mut term_limit: usize,
    max_limit: usize,
) -> Result<SemidegreeSpec> {
    loop {
        match generic_series_with(f1, f2, choice1, choice2, term_limit) {
            Err(Error::InsufficientPrecision { suggested, .. }) if suggested <= max_limit => {
                term_limit = suggested;
            }
            r => return r,
        }
    }
}
