//! Key forms of a semidegree: construction from plans, recovery from a
//! generic series, boundary curves of the corresponding tentacle, and the
//! classification of `B(S)` read off the last key form.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly2;
use crate::newton::SemidegreeSpec;
use crate::rational::{den_u64, fmt_rat, int, lcm_u64, pow_rat, Rat};
use crate::series::PuiseuxSeries;

const MAX_FORMS: usize = 64;

/// `f₀ = x, f₁ = y, …, f_l` with values `ω₀ = 1, ω₁, …`.
///
/// A sequence is *open* when the value of its last form is not yet assigned
/// (`values.len() + 1 == forms.len()`) and *closed* otherwise. Entry `i` of
/// `periods`, `digits` and `consts` describes step `k = i + 1`, i.e.
/// `f_{k+1} = f_k^{p_k} − c_k·∏ f_j^{α_{k,j}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyFormSequence {
    forms: Vec<LaurentPoly2>,
    values: Vec<Rat>,
    periods: Vec<u64>,
    digits: Vec<Vec<i64>>,
    consts: Vec<Rat>,
}

impl KeyFormSequence {
    fn start() -> Self {
        KeyFormSequence {
            forms: vec![LaurentPoly2::x(), LaurentPoly2::y()],
            values: vec![Rat::one()],
            periods: Vec::new(),
            digits: Vec::new(),
            consts: Vec::new(),
        }
    }

    pub fn forms(&self) -> &[LaurentPoly2] {
        &self.forms
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn periods(&self) -> &[u64] {
        &self.periods
    }

    pub fn digits(&self) -> &[Vec<i64>] {
        &self.digits
    }

    pub fn consts(&self) -> &[Rat] {
        &self.consts
    }

    pub fn is_closed(&self) -> bool {
        self.values.len() == self.forms.len()
    }

    /// Value of the last form, if assigned.
    pub fn omega_last(&self) -> Option<&Rat> {
        if self.is_closed() {
            self.values.last()
        } else {
            None
        }
    }

    fn check_next_value(&self, omega: &Rat) -> Result<()> {
        let k = self.forms.len() - 1;
        if k >= 2 {
            let bound = &self.values[k - 1] * int(self.periods[k - 2] as i64);
            if *omega >= bound {
                return Err(Error::InvalidPlan(format!(
                    "value {} of f_{k} must be below {}",
                    fmt_rat(omega),
                    fmt_rat(&bound)
                )));
            }
        }
        Ok(())
    }

    /// Assigns `ω_l` to the last form.
    pub fn close(mut self, omega: Rat) -> Result<Self> {
        if self.is_closed() {
            return Err(Error::InvalidPlan("sequence is already closed".into()));
        }
        self.check_next_value(&omega)?;
        self.values.push(omega);
        Ok(self)
    }

    /// `p_k`, the digits of `p_k·ω_k` and the monomial `∏ f_j^{α_j}` for a
    /// prospective value `ω_k` of the last form.
    fn step_data(&self, omega: &Rat) -> Result<(u64, Vec<i64>, LaurentPoly2)> {
        let n = self
            .values
            .iter()
            .fold(1, |acc, v| lcm_u64(acc, den_u64(v)));
        let p = den_u64(&(omega * int(n as i64)));
        let target = omega * int(p as i64);
        let digits = digit_representation(&self.values, &self.periods, &target)?;
        let m = self.monomial(&digits);
        Ok((p, digits, m))
    }

    fn monomial(&self, digits: &[i64]) -> LaurentPoly2 {
        let mut m = LaurentPoly2::monomial(Rat::one(), digits[0], 0);
        for (j, &a) in digits.iter().enumerate().skip(1) {
            if a > 0 {
                m = m.mul(&self.forms[j].pow(a as u32));
            }
        }
        m
    }

    /// Appends `f_{k+1} = f_k^{p_k} − c·∏ f_j^{α_j}` given `ω_k`.
    fn push_step(&mut self, omega: Rat, c: Rat) -> Result<()> {
        if c.is_zero() {
            return Err(Error::InvalidPlan("step constant must be nonzero".into()));
        }
        self.check_next_value(&omega)?;
        let (p, digits, m) = self.step_data(&omega)?;
        let last = self.forms.last().unwrap();
        let next = last.pow(p as u32).sub(&m.scale(&c));
        self.values.push(omega);
        self.periods.push(p);
        self.digits.push(digits);
        self.consts.push(c);
        self.forms.push(next);
        Ok(())
    }

    /// `true` iff `ω_l ≥ 0`; `None` for an open sequence.
    pub fn is_nonnegative(&self) -> Option<bool> {
        self.omega_last().map(|w| !w.is_negative())
    }

    /// `true` iff `ω_l > 0`, or `ω_l = 0` and `f_l` is not a polynomial.
    pub fn is_positive(&self) -> Option<bool> {
        let w = self.omega_last()?;
        Some(w.is_positive() || (w.is_zero() && !self.forms.last().unwrap().is_polynomial()))
    }

    /// `true` iff some digit `α_{k,0}` is negative.
    pub fn has_negative_x_digit(&self) -> bool {
        self.digits.iter().any(|a| a[0] < 0)
    }
}

impl fmt::Display for KeyFormSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, form) in self.forms.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{form}")?;
            if let Some(v) = self.values.get(k) {
                write!(f, " [{}]", fmt_rat(v))?;
            }
        }
        Ok(())
    }
}

/// The unique `(α₀, …, α_{k−1})` with `target = Σ α_j ω_j`,
/// `0 ≤ α_j < p_j` for `j ≥ 1` and `α₀` unrestricted. `periods[i]` is
/// `p_{i+1}`; `values[0]` must be `1`.
pub fn digit_representation(values: &[Rat], periods: &[u64], target: &Rat) -> Result<Vec<i64>> {
    if values.first() != Some(&Rat::one()) || periods.len() + 1 < values.len() {
        return Err(Error::InvalidInput(
            "values must start with 1 and have periods".into(),
        ));
    }
    let k = values.len();
    let mut lcms = vec![1u64; k];
    for j in 1..k {
        lcms[j] = lcm_u64(lcms[j - 1], den_u64(&values[j - 1]));
    }
    let mut rest = target.clone();
    let mut digits = vec![0i64; k];
    for j in (1..k).rev() {
        let n = int(lcms[j] as i64);
        let found = (0..periods[j - 1] as i64).find(|&a| {
            let r = (&rest - &values[j] * int(a)) * &n;
            r.is_integer()
        });
        let a = found.ok_or_else(|| Error::NotRepresentable {
            target: target.clone(),
        })?;
        rest -= &values[j] * int(a);
        digits[j] = a;
    }
    if !rest.is_integer() {
        return Err(Error::NotRepresentable {
            target: target.clone(),
        });
    }
    digits[0] = rest
        .to_integer()
        .try_into()
        .map_err(|_| Error::Unsupported("digit out of range".into()))?;
    Ok(digits)
}

/// Builds the open sequence `f₀, …, f_l` from steps `(ω_k, c_k)`,
/// `k = 1, …, l−1`.
pub fn build_keyforms(plan: &[(Rat, Rat)]) -> Result<KeyFormSequence> {
    let mut seq = KeyFormSequence::start();
    for (omega, c) in plan {
        seq.push_step(omega.clone(), c.clone())?;
    }
    Ok(seq)
}

/// Inequalities describing the region between two boundary curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionDescription {
    pub constraints: Vec<String>,
}

impl fmt::Display for RegionDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constraints.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryCurves {
    pub f1: LaurentPoly2,
    pub f2: LaurentPoly2,
    pub region: RegionDescription,
}

/// `f_{l+1,i} = f_l^{p_l} − c_i·∏ f_j^{α_{l,j}}` for an open sequence and
/// `ω_l`, together with the region `x ≥ 1` between them.
pub fn boundary_curves(
    seq: &KeyFormSequence,
    omega_l: &Rat,
    c1: &Rat,
    c2: &Rat,
) -> Result<BoundaryCurves> {
    if c1 == c2 {
        return Err(Error::DegenerateRegion);
    }
    if seq.is_closed() {
        return Err(Error::InvalidPlan(
            "boundary curves need an open sequence".into(),
        ));
    }
    seq.check_next_value(omega_l)?;
    let (p, _, m) = seq.step_data(omega_l)?;
    let top = seq.forms.last().unwrap().pow(p as u32);
    let f1 = top.sub(&m.scale(c1));
    let f2 = top.sub(&m.scale(c2));
    let (lo, hi) = if c1 < c2 { (c1, c2) } else { (c2, c1) };
    let mut constraints = vec!["x >= 1".to_string()];
    if seq.periods.first().is_some_and(|p| p.is_even()) {
        constraints.push("y >= 0".to_string());
    }
    constraints.push(format!("{} >= {} >= {}", m.scale(hi), top, m.scale(lo)));
    Ok(BoundaryCurves {
        f1,
        f2,
        region: RegionDescription { constraints },
    })
}

/// Recovers the key forms of `δ = deg_x f(x, φ + ξx^ω)`: forms are
/// extended while the leading coefficient along the generic series is
/// constant, and the first form with a ξ-dependent leading coefficient is
/// the last one. The result is closed.
pub fn keyforms_of_spec(spec: &SemidegreeSpec) -> Result<KeyFormSequence> {
    if spec.is_total_degree() {
        return Err(Error::Unsupported(
            "the total degree has no key forms here".into(),
        ));
    }
    let s = spec.generic_series();
    let mut seq = KeyFormSequence::start();
    let mut leads = vec![Rat::one()];
    while seq.forms.len() <= MAX_FORMS {
        let f = seq.forms.last().unwrap();
        let (e, c) = f.substitute(&s).leading_term()?;
        let Some(lead) = c.as_constant() else {
            seq.values.push(e);
            return Ok(seq);
        };
        let (p, digits, _) = seq.step_data(&e)?;
        let lc_m = digits
            .iter()
            .zip(&leads)
            .skip(1)
            .fold(Rat::one(), |acc, (&a, l)| acc * pow_rat(l, a));
        let constant = pow_rat(&lead, p as i64) / lc_m;
        leads.push(lead);
        seq.push_step(e, constant)?;
    }
    Err(Error::Unsupported(format!(
        "more than {MAX_FORMS} key forms"
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentStatus {
    NotSolvableFinitely,
    SolvableOutsideCompact,
    OpenNewMethods,
    NeedsGenus,
}

impl MomentStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            MomentStatus::NotSolvableFinitely => "not_solvable_finitely",
            MomentStatus::SolvableOutsideCompact => "solvable_outside_compact",
            MomentStatus::OpenNewMethods => "open_new_methods",
            MomentStatus::NeedsGenus => "needs_genus",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// `B₀(S) = ℝ`
    pub b0_trivial: bool,
    /// `B(S)` is finitely generated.
    pub b_fg: bool,
    pub bd_all_finite: bool,
    pub some_bd_infinite: bool,
    pub last_form_polynomial: bool,
    pub omega_last: Rat,
    pub moment_status: MomentStatus,
}

/// Verdicts for a single tentacle whose key forms end in `f_l` with value
/// `omega_last`. `genus_hint` is the genus of the generic fiber when known.
pub fn classify(
    seq: &KeyFormSequence,
    omega_last: &Rat,
    genus_hint: Option<u32>,
) -> Classification {
    let last_poly = seq.forms.last().unwrap().is_polynomial();
    let all_poly = seq.forms.iter().all(LaurentPoly2::is_polynomial);
    let w = omega_last;
    let moment_status = if w.is_positive() {
        MomentStatus::NotSolvableFinitely
    } else if w.is_negative() {
        MomentStatus::SolvableOutsideCompact
    } else if !last_poly {
        MomentStatus::OpenNewMethods
    } else {
        match genus_hint {
            None => MomentStatus::NeedsGenus,
            Some(0) => MomentStatus::SolvableOutsideCompact,
            Some(_) => MomentStatus::NotSolvableFinitely,
        }
    };
    Classification {
        b0_trivial: w.is_positive() || (w.is_zero() && !last_poly),
        b_fg: w.is_negative() || all_poly,
        bd_all_finite: w.is_positive(),
        some_bd_infinite: !w.is_positive(),
        last_form_polynomial: last_poly,
        omega_last: w.clone(),
        moment_status,
    }
}

/// Pulls `φ = Σ a_j x^{m_j/2}` back along `x ↦ x²`, giving the two integral
/// specs `Σ a_j x^{m_j} + ξx^{2ω}` and `Σ (−1)^{m_j} a_j x^{m_j} + ξx^{2ω}`.
/// At least one `m_j` must be odd.
pub fn squares_pullback(spec: &SemidegreeSpec) -> Result<(SemidegreeSpec, SemidegreeSpec)> {
    if spec.is_total_degree() {
        return Err(Error::InvalidInput("total degree has no series".into()));
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let mut any_odd = false;
    for (e, c) in spec.phi().terms() {
        let doubled = e * int(2);
        if !doubled.is_integer() {
            return Err(Error::InvalidInput(format!(
                "exponent {} is not a multiple of 1/2",
                fmt_rat(e)
            )));
        }
        let m: i64 = doubled
            .to_integer()
            .try_into()
            .map_err(|_| Error::Unsupported("exponent out of range".into()))?;
        any_odd |= m.is_odd();
        let a = c.as_constant().expect("phi is xi-free");
        let sign = if m.is_odd() { -a.clone() } else { a.clone() };
        plus.push((a, int(m)));
        minus.push((sign, int(m)));
    }
    if !any_odd {
        return Err(Error::InvalidInput("phi has no half-odd exponent".into()));
    }
    let omega = spec.omega() * int(2);
    Ok((
        SemidegreeSpec::new(PuiseuxSeries::from_rat_terms(plus), omega.clone())?,
        SemidegreeSpec::new(PuiseuxSeries::from_rat_terms(minus), omega)?,
    ))
}

/// The last step of a plan: `ω_l` and the two boundary constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanTail {
    pub omega: Rat,
    pub c1: Rat,
    pub c2: Rat,
}

/// A construction plan for a single tentacle: steps `(ω_k, c_k)` building
/// `f₂, …, f_l`, then the tail fixing `ω_l` and the boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plan {
    pub steps: Vec<(Rat, Rat)>,
    pub tail: PlanTail,
}

impl Plan {
    /// Open sequence `f₀, …, f_l`.
    pub fn sequence(&self) -> Result<KeyFormSequence> {
        build_keyforms(&self.steps)
    }

    /// The sequence closed with `ω_l`, as `keyforms_of_spec` should recover it.
    pub fn expected_keyforms(&self) -> Result<KeyFormSequence> {
        self.sequence()?.close(self.tail.omega.clone())
    }

    pub fn boundaries(&self) -> Result<BoundaryCurves> {
        boundary_curves(
            &self.sequence()?,
            &self.tail.omega,
            &self.tail.c1,
            &self.tail.c2,
        )
    }

    pub fn classify(&self, genus_hint: Option<u32>) -> Result<Classification> {
        Ok(classify(&self.sequence()?, &self.tail.omega, genus_hint))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn lp(terms: &[(i64, i64, u32)]) -> LaurentPoly2 {
        LaurentPoly2::from_terms(terms.iter().map(|&(c, a, b)| ((a, b), int(c))))
    }

    fn spec(terms: &[(i64, i64, i64)], omega: Rat) -> SemidegreeSpec {
        SemidegreeSpec::new(
            PuiseuxSeries::from_rat_terms(terms.iter().map(|&(c, n, d)| (int(c), rat(n, d)))),
            omega,
        )
        .unwrap()
    }

    fn plan(steps: &[(Rat, i64)], omega: Rat) -> Plan {
        Plan {
            steps: steps.iter().map(|(w, c)| (w.clone(), int(*c))).collect(),
            tail: PlanTail {
                omega,
                c1: int(0),
                c2: int(1),
            },
        }
    }

    #[test]
    fn digits() {
        let values = [int(1), rat(5, 2)];
        assert_eq!(
            digit_representation(&values, &[2], &int(5)).unwrap(),
            vec![5, 0]
        );
        assert_eq!(
            digit_representation(&values, &[2], &rat(3, 2)).unwrap(),
            vec![-1, 1]
        );
        assert_eq!(
            digit_representation(&values, &[2], &int(1)).unwrap(),
            vec![1, 0]
        );
        assert_eq!(
            digit_representation(&values, &[2], &int(0)).unwrap(),
            vec![0, 0]
        );
        assert!(matches!(
            digit_representation(&values, &[2], &rat(1, 3)),
            Err(Error::NotRepresentable { .. })
        ));
    }

    #[test]
    fn build_examples() {
        let a = build_keyforms(&[(rat(5, 2), int(1))]).unwrap();
        assert_eq!(a.forms()[2], lp(&[(1, 0, 2), (-1, 5, 0)]));
        let b = build_keyforms(&[(rat(5, 2), int(1)), (int(1), int(2))]).unwrap();
        assert_eq!(b.forms()[3], lp(&[(1, 0, 2), (-1, 5, 0), (-2, 1, 0)]));
        let c = build_keyforms(&[(rat(5, 2), int(1)), (rat(3, 2), int(2))]).unwrap();
        assert_eq!(c.forms()[3], lp(&[(1, 0, 2), (-1, 5, 0), (-2, -1, 1)]));
        assert_eq!(c.digits()[1], vec![-1, 1]);
        assert!(matches!(
            build_keyforms(&[(rat(5, 2), int(1)), (int(5), int(1))]),
            Err(Error::InvalidPlan(_))
        ));
        assert!(build_keyforms(&[(rat(5, 2), int(0))]).is_err());
    }

    #[test]
    fn boundary_examples() {
        let b = plan(&[(rat(5, 2), 1)], int(1)).boundaries().unwrap();
        assert_eq!(b.f1, lp(&[(1, 0, 2), (-1, 5, 0)]));
        assert_eq!(b.f2, lp(&[(1, 0, 2), (-1, 5, 0), (-1, 1, 0)]));
        assert_eq!(b.region.to_string(), "x >= 1, y >= 0, x >= y^2 - x^5 >= 0");
        let b4 = plan(&[(rat(5, 2), 1), (rat(3, 2), 1)], int(0))
            .boundaries()
            .unwrap();
        assert_eq!(
            b4.region.to_string(),
            "x >= 1, y >= 0, 1 >= y^2 - x^-1*y - x^5 >= 0"
        );
        let seq = build_keyforms(&[]).unwrap();
        let b0 = boundary_curves(&seq, &int(3), &int(0), &int(1)).unwrap();
        assert_eq!(b0.f2, lp(&[(1, 0, 1), (-1, 3, 0)]));
        assert_eq!(
            boundary_curves(&seq, &int(3), &int(1), &int(1)),
            Err(Error::DegenerateRegion)
        );
    }

    #[test]
    fn table_rows() {
        let r1 = keyforms_of_spec(&spec(&[], rat(7, 3))).unwrap();
        assert_eq!(r1.forms().len(), 2);
        assert_eq!(r1.values(), &[int(1), rat(7, 3)]);

        let r2 = keyforms_of_spec(&spec(&[(3, 2, 3)], int(-1))).unwrap();
        assert_eq!(r2.forms()[2], lp(&[(1, 0, 3), (-27, 2, 0)]));

        let r3 = keyforms_of_spec(&spec(&[(1, 5, 2), (1, -3, 2)], rat(-5, 2))).unwrap();
        assert_eq!(
            r3.forms(),
            &[
                LaurentPoly2::x(),
                LaurentPoly2::y(),
                lp(&[(1, 0, 2), (-1, 5, 0)]),
                lp(&[(1, 0, 2), (-1, 5, 0), (-2, 1, 0)]),
            ]
        );
        assert_eq!(r3.values(), &[int(1), rat(5, 2), int(1), int(0)]);

        let r4 = keyforms_of_spec(&spec(&[(1, 5, 2), (1, -1, 1), (1, -3, 2)], rat(-5, 2))).unwrap();
        assert_eq!(r4.forms().len(), 5);
        assert_eq!(
            r4.forms()[4],
            lp(&[(1, 0, 2), (-1, 5, 0), (-2, -1, 1), (-2, 1, 0)])
        );
        assert_eq!(r4.values(), &[int(1), rat(5, 2), rat(3, 2), int(1), int(0)]);
    }

    #[test]
    fn positivity() {
        let s = |steps: &[(Rat, i64)], w: Rat| {
            build_keyforms(
                &steps
                    .iter()
                    .map(|(a, c)| (a.clone(), int(*c)))
                    .collect::<Vec<_>>(),
            )
            .unwrap()
            .close(w)
            .unwrap()
        };
        let a = s(&[(rat(5, 2), 1)], int(1));
        assert_eq!(
            (a.is_nonnegative(), a.is_positive()),
            (Some(true), Some(true))
        );
        let b = s(&[(rat(5, 2), 1)], int(0));
        assert_eq!(b.is_positive(), Some(false));
        let c = s(&[(rat(5, 2), 1), (rat(3, 2), 1)], int(0));
        assert_eq!(c.is_positive(), Some(true));
        assert_eq!(build_keyforms(&[]).unwrap().is_positive(), None);
    }

    #[test]
    fn example_verdicts() {
        let c1 = plan(&[(rat(5, 2), 1)], int(1)).classify(None).unwrap();
        assert!(c1.b0_trivial && c1.b_fg);
        let c2 = plan(&[(rat(5, 2), 1)], int(0)).classify(None).unwrap();
        assert!(!c2.b0_trivial && c2.b_fg);
        assert_eq!(c2.moment_status, MomentStatus::NeedsGenus);
        let c3 = plan(&[(rat(5, 2), 1), (rat(3, 2), 1)], int(1))
            .classify(None)
            .unwrap();
        assert!(c3.b0_trivial && !c3.b_fg && c3.bd_all_finite);
        assert_eq!(c3.moment_status, MomentStatus::NotSolvableFinitely);
        let c4 = plan(&[(rat(5, 2), 1), (rat(3, 2), 1)], int(0))
            .classify(None)
            .unwrap();
        assert!(c4.b0_trivial && !c4.b_fg && c4.some_bd_infinite);
        assert_eq!(c4.moment_status, MomentStatus::OpenNewMethods);
    }

    #[test]
    fn pullback() {
        let (a, b) = squares_pullback(&spec(&[(1, 3, 2), (1, -1, 1)], rat(-3, 2))).unwrap();
        assert_eq!(a, spec(&[(1, 3, 1), (1, -2, 1)], int(-3)));
        assert_eq!(b, spec(&[(-1, 3, 1), (1, -2, 1)], int(-3)));
        let (c, d) = squares_pullback(&spec(&[(1, 5, 2)], rat(-1, 2))).unwrap();
        assert_eq!(c, spec(&[(1, 5, 1)], int(-1)));
        assert_eq!(d, spec(&[(-1, 5, 1)], int(-1)));
        assert!(squares_pullback(&spec(&[(1, 2, 1)], int(-1))).is_err());
        assert!(squares_pullback(&spec(&[(1, 1, 3)], int(-1))).is_err());
    }
}
