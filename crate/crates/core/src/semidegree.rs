//! Degree-like functions of tentacles: the semidegree `δ*`, the weighted
//! degrees of standard tentacles, and their maxima `δ̄_S`, `δ_S = ⌈δ̄_S⌉`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::keyforms::KeyFormSequence;
use crate::laurent::LaurentPoly2;
use crate::multipoly::MultiPoly;
use crate::newton::SemidegreeSpec;
use crate::rational::{ceil_int, int, Rat};

/// `δ*(f) = deg_x f(x, φ(x) + ξ·x^ω)`, or the total degree for a
/// total-degree spec.
pub fn delta_star(spec: &SemidegreeSpec, f: &LaurentPoly2) -> Result<Rat> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if spec.is_total_degree() {
        return Ok(int(f.total_degree().expect("nonzero")));
    }
    let s = f.substitute(&spec.generic_series());
    Ok(s.leading_term()?.0)
}

/// `deg_z(f) = max z·α` over the monomials `x^α` of `f`.
pub fn weighted_degree(z: &[i64], f: &MultiPoly) -> Result<i64> {
    f.weighted_degree(z)
}

/// `φ_z = max{0, z_1, …, z_n}`
pub fn phi_z(z: &[i64]) -> i64 {
    z.iter().copied().fold(0, i64::max)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardTentacleSpec {
    z: Vec<i64>,
}

impl StandardTentacleSpec {
    pub fn new(z: Vec<i64>) -> Result<Self> {
        if z.is_empty() {
            return Err(Error::InvalidInput(
                "direction vector must be nonempty".into(),
            ));
        }
        Ok(StandardTentacleSpec { z })
    }

    pub fn z(&self) -> &[i64] {
        &self.z
    }

    pub fn dim(&self) -> usize {
        self.z.len()
    }

    pub fn phi_z(&self) -> i64 {
        phi_z(&self.z)
    }

    /// `deg_z(f)/φ_z`, or `0` when `φ_z = 0`.
    pub fn normalized_degree(&self, f: &MultiPoly) -> Result<Rat> {
        let d = weighted_degree(&self.z, f)?;
        let phi = self.phi_z();
        Ok(if phi == 0 {
            Rat::zero()
        } else {
            Rat::new(d.into(), phi.into())
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tentacle {
    /// A planar tentacle with generic series `φ + ξ·x^ω`, or the total
    /// degree.
    Puiseux(SemidegreeSpec),
    Standard(StandardTentacleSpec),
}

impl Tentacle {
    /// Per-tentacle contribution to `δ̄_S`.
    pub fn value(&self, f: &MultiPoly) -> Result<Rat> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        match self {
            Tentacle::Puiseux(spec) => delta_star(spec, &f.to_laurent2()?),
            Tentacle::Standard(st) => {
                if st.dim() != f.nvars() {
                    return Err(Error::InvalidInput(format!(
                        "polynomial has {} variables but the tentacle lives in dimension {}",
                        f.nvars(),
                        st.dim()
                    )));
                }
                st.normalized_degree(f)
            }
        }
    }
}

/// A finite union of tentacles describing `S` outside a compact set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TentacleSet {
    tentacles: Vec<Tentacle>,
    ambient_dim: usize,
}

impl TentacleSet {
    pub fn new(tentacles: Vec<Tentacle>) -> Result<Self> {
        let mut dim: Option<usize> = None;
        for t in &tentacles {
            let d = match t {
                Tentacle::Puiseux(_) => 2,
                Tentacle::Standard(st) => st.dim(),
            };
            match dim {
                Some(prev) if prev != d => {
                    return Err(Error::InvalidInput(format!(
                        "tentacles of dimensions {prev} and {d} cannot be combined"
                    )))
                }
                _ => dim = Some(d),
            }
        }
        let ambient_dim = dim.ok_or_else(|| Error::InvalidInput("tentacle set is empty".into()))?;
        Ok(TentacleSet {
            tentacles,
            ambient_dim,
        })
    }

    pub fn tentacles(&self) -> &[Tentacle] {
        &self.tentacles
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// `δ̄_S(f) = max(0, max over tentacles)`.
    pub fn delta_bar(&self, f: &MultiPoly) -> Result<Rat> {
        let mut best = Rat::zero();
        for t in &self.tentacles {
            let v = t.value(f)?;
            if v > best {
                best = v;
            }
        }
        Ok(best)
    }

    /// `δ_S(f) = ⌈δ̄_S(f)⌉`
    pub fn delta_s(&self, f: &MultiPoly) -> Result<BigInt> {
        Ok(ceil_int(&self.delta_bar(f)?))
    }
}

/// One term `c·x^{α₀}·f₁^{α₁}⋯f_l^{α_l}` of an expansion in key forms.
pub type KeyTerm = (Rat, Vec<i64>);

/// Expands `f` in the key forms of a closed sequence by successive monic
/// division in `y`, highest form first. Every term satisfies
/// `0 ≤ α_j < deg_y f_{j+1} / deg_y f_j` for `1 ≤ j < l`.
pub fn maclane_expansion(seq: &KeyFormSequence, f: &LaurentPoly2) -> Result<Vec<KeyTerm>> {
    let l = seq.forms().len() - 1;
    let mut out = Vec::new();
    expand_level(seq, f, l, &mut vec![0; l + 1], &mut out)?;
    Ok(out)
}

fn expand_level(
    seq: &KeyFormSequence,
    f: &LaurentPoly2,
    level: usize,
    digits: &mut Vec<i64>,
    out: &mut Vec<KeyTerm>,
) -> Result<()> {
    if f.is_zero() {
        return Ok(());
    }
    if level == 1 {
        for (&(a, b), c) in f.terms() {
            digits[0] = a;
            digits[1] = b as i64;
            out.push((c.clone(), digits.clone()));
        }
        digits[0] = 0;
        digits[1] = 0;
        return Ok(());
    }
    let g = &seq.forms()[level];
    let mut rest = f.clone();
    let mut i = 0;
    while !rest.is_zero() {
        let (q, r) = rest.divrem_y(g)?;
        digits[level] = i;
        expand_level(seq, &r, level - 1, digits, out)?;
        rest = q;
        i += 1;
    }
    digits[level] = 0;
    Ok(())
}

/// `max Σ α_j ω_j` over the key-form expansion of `f`.
pub fn maclane_value(seq: &KeyFormSequence, f: &LaurentPoly2) -> Result<Rat> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let values = seq.values();
    if values.len() != seq.forms().len() {
        return Err(Error::InvalidInput(
            "key-form sequence has no last value".into(),
        ));
    }
    maclane_expansion(seq, f)?
        .into_iter()
        .filter(|(c, _)| !c.is_zero())
        .map(|(_, a)| {
            a.iter()
                .zip(values)
                .map(|(&k, w)| w * int(k))
                .fold(Rat::zero(), |acc, v| acc + v)
        })
        .max()
        .ok_or(Error::ZeroPolynomial)
}

/// `true` when the standard tentacle bound `deg_z(f) ≤ d·φ_z` holds.
pub fn within_level(st: &StandardTentacleSpec, f: &MultiPoly, d: i64) -> Result<bool> {
    Ok(weighted_degree(st.z(), f)? <= d * st.phi_z())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::keyforms::build_keyforms;
    use crate::rational::rat;
    use crate::series::PuiseuxSeries;

    fn spec(terms: &[(i64, i64, i64)], omega: Rat) -> SemidegreeSpec {
        SemidegreeSpec::new(
            PuiseuxSeries::from_rat_terms(terms.iter().map(|&(c, n, d)| (int(c), rat(n, d)))),
            omega,
        )
        .unwrap()
    }

    fn lp(terms: &[(i64, i64, u32)]) -> LaurentPoly2 {
        LaurentPoly2::from_terms(terms.iter().map(|&(c, a, b)| ((a, b), int(c))))
    }

    #[test]
    fn delta_star_examples() {
        let s3 = spec(&[(1, 3, 1), (1, -2, 1)], int(-3));
        assert_eq!(
            delta_star(&s3, &lp(&[(1, 0, 2), (-1, 6, 0)])).unwrap(),
            int(1)
        );
        let s = spec(&[(1, 5, 2), (1, -3, 2)], rat(-5, 2));
        assert_eq!(
            delta_star(&s, &lp(&[(1, 0, 2), (-1, 5, 0), (-2, 1, 0)])).unwrap(),
            int(0)
        );
        assert_eq!(delta_star(&s, &LaurentPoly2::x()).unwrap(), int(1));
        assert_eq!(
            delta_star(&s, &LaurentPoly2::default()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn standard_degrees() {
        let f = MultiPoly::monomial(int(1), vec![3, 1]);
        assert_eq!(weighted_degree(&[1, -3], &f).unwrap(), 0);
        assert_eq!(phi_z(&[1, -3]), 1);
        let g = MultiPoly::monomial(int(1), vec![1, 1]);
        assert_eq!(weighted_degree(&[0, 1], &g).unwrap(), 1);
        assert_eq!(phi_z(&[-1, -2]), 0);
    }

    #[test]
    fn delta_bar_examples() {
        let strips = TentacleSet::new(vec![
            Tentacle::Standard(StandardTentacleSpec::new(vec![0, 1]).unwrap()),
            Tentacle::Standard(StandardTentacleSpec::new(vec![1, 0]).unwrap()),
        ])
        .unwrap();
        let f = MultiPoly::monomial(int(1), vec![1, 1]);
        assert_eq!(strips.delta_bar(&f).unwrap(), int(1));

        let single = TentacleSet::new(vec![Tentacle::Puiseux(spec(
            &[(1, 3, 1), (1, -2, 1)],
            int(-3),
        ))])
        .unwrap();
        assert_eq!(
            single.delta_bar(&MultiPoly::constant(2, int(5))).unwrap(),
            int(0)
        );

        let total =
            TentacleSet::new(vec![Tentacle::Puiseux(SemidegreeSpec::total_degree())]).unwrap();
        let cubic = MultiPoly::from_terms(2, [(vec![2, 1], int(1)), (vec![0, 1], int(4))]);
        assert_eq!(total.delta_bar(&cubic).unwrap(), int(3));

        let xi_only = TentacleSet::new(vec![Tentacle::Puiseux(spec(&[], rat(5, 2)))]).unwrap();
        assert_eq!(
            xi_only.delta_s(&MultiPoly::var(2, 1)).unwrap(),
            BigInt::from(3)
        );

        let two_tentacles = TentacleSet::new(vec![
            Tentacle::Puiseux(spec(&[(-1, 3, 1), (1, -2, 1)], int(-3))),
            Tentacle::Puiseux(spec(&[(1, 3, 1), (1, -2, 1)], int(-3))),
        ])
        .unwrap();
        let q = MultiPoly::from_terms(2, [(vec![0, 2], int(1)), (vec![6, 0], int(-1))]);
        assert_eq!(two_tentacles.delta_s(&q).unwrap(), BigInt::from(1));
    }

    #[test]
    fn mixed_dimensions_rejected() {
        let r = TentacleSet::new(vec![
            Tentacle::Standard(StandardTentacleSpec::new(vec![0, 1, 1]).unwrap()),
            Tentacle::Puiseux(SemidegreeSpec::total_degree()),
        ]);
        assert!(r.is_err());
        assert!(TentacleSet::new(vec![]).is_err());
    }

    #[test]
    fn maclane_examples() {
        let seq = build_keyforms(&[(rat(5, 2), int(1))])
            .unwrap()
            .close(int(1))
            .unwrap();
        let f2 = lp(&[(1, 0, 2), (-1, 5, 0)]);
        assert_eq!(maclane_value(&seq, &f2).unwrap(), int(1));
        assert_eq!(maclane_value(&seq, &LaurentPoly2::y()).unwrap(), rat(5, 2));
        let g = LaurentPoly2::x().mul(&f2.pow(2));
        assert_eq!(maclane_value(&seq, &g).unwrap(), int(3));
        let terms = maclane_expansion(&seq, &g).unwrap();
        assert_eq!(terms, vec![(int(1), vec![1, 0, 2])]);
    }
}
