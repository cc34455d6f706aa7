//! Exact linear algebra for polynomials of bounded semidegree: the space
//! `{p : deg p ≤ D, δ*(p) ≤ d for every spec}` and witnesses inside it.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::{series_powers, LaurentPoly2};
use crate::linalg::{rref, Echelon};
use crate::newton::SemidegreeSpec;
use crate::rational::{int, Rat};

/// Grading used to bound the search degree `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Grading {
    /// Ordinary total degree.
    #[default]
    Total,
    /// `deg(x^a y^b) = wx·a + wy·b`, both weights positive.
    Weighted(u32, u32),
}

impl Grading {
    pub fn degree(self, a: u32, b: u32) -> u64 {
        match self {
            Grading::Total => (a + b) as u64,
            Grading::Weighted(wx, wy) => (wx * a + wy * b) as u64,
        }
    }

    fn weights(self) -> (u32, u32) {
        match self {
            Grading::Total => (1, 1),
            Grading::Weighted(wx, wy) => (wx, wy),
        }
    }

    /// Monomials `(a, b)` of degree at most `max_degree`, ordered by degree
    /// descending, then `x`-exponent descending.
    pub fn monomials(self, max_degree: u64) -> Result<Vec<(u32, u32)>> {
        let (wx, wy) = self.weights();
        if wx == 0 || wy == 0 {
            return Err(Error::InvalidInput(
                "grading weights must be positive".into(),
            ));
        }
        let mut out = Vec::new();
        for b in 0..=(max_degree / wy as u64) as u32 {
            for a in 0..=((max_degree - b as u64 * wy as u64) / wx as u64) as u32 {
                out.push((a, b));
            }
        }
        out.sort_by(|l, r| {
            self.degree(r.0, r.1)
                .cmp(&self.degree(l.0, l.1))
                .then(r.0.cmp(&l.0))
        });
        Ok(out)
    }

    /// Highest-degree part of a polynomial.
    pub fn leading_form(self, p: &LaurentPoly2) -> LaurentPoly2 {
        let deg = |&(a, b): &(i64, u32)| self.degree(a as u32, b);
        let top = p.terms().keys().map(deg).max().unwrap_or(0);
        LaurentPoly2::from_terms(
            p.terms()
                .iter()
                .filter(|(k, _)| deg(k) == top)
                .map(|(k, c)| (*k, c.clone())),
        )
    }

    pub fn degree_of(self, p: &LaurentPoly2) -> Option<u64> {
        p.terms()
            .keys()
            .map(|&(a, b)| self.degree(a as u32, b))
            .max()
    }
}

/// Rows of the linear conditions `δ*(p) ≤ d` for one spec, over the given
/// monomial columns.
fn constraint_rows(spec: &SemidegreeSpec, d: &Rat, cols: &[(u32, u32)], out: &mut Echelon) {
    if spec.is_total_degree() {
        for (j, &(a, b)) in cols.iter().enumerate() {
            if int((a + b) as i64) > *d {
                let mut row = vec![Rat::zero(); cols.len()];
                row[j] = int(1);
                out.insert(row);
            }
        }
        return;
    }
    let top = cols.iter().map(|c| c.1).max().unwrap_or(0);
    let powers = series_powers(&spec.generic_series(), top);
    let mut rows: BTreeMap<(Rat, usize), Vec<Rat>> = BTreeMap::new();
    for (j, &(a, b)) in cols.iter().enumerate() {
        let shift = int(a as i64);
        for (e, c) in powers[b as usize].terms() {
            let e = e + &shift;
            if e <= *d {
                continue;
            }
            for (k, v) in c.coeffs().iter().enumerate() {
                if !v.is_zero() {
                    rows.entry((e.clone(), k))
                        .or_insert_with(|| vec![Rat::zero(); cols.len()])[j] += v;
                }
            }
        }
    }
    for row in rows.into_values() {
        out.insert(row);
    }
}

fn to_poly(cols: &[(u32, u32)], v: &[Rat]) -> LaurentPoly2 {
    LaurentPoly2::from_terms(
        cols.iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&(a, b), c)| ((a as i64, b), c.clone())),
    )
}

/// Canonical basis of `{p : deg p ≤ max_degree, δ*(p) ≤ d for all specs}`:
/// the reduced echelon form over monomial coordinates ordered by degree
/// descending, then `x`-exponent descending.
pub fn low_degree_space(
    specs: &[SemidegreeSpec],
    d: &Rat,
    max_degree: u64,
    grading: Grading,
) -> Result<Vec<LaurentPoly2>> {
    if specs.is_empty() {
        return Err(Error::InvalidInput("at least one spec is required".into()));
    }
    let cols = grading.monomials(max_degree)?;
    let mut system = Echelon::new(cols.len());
    for spec in specs {
        constraint_rows(spec, d, &cols, &mut system);
    }
    let basis = rref(system.nullspace(), cols.len());
    Ok(basis.iter().map(|v| to_poly(&cols, v)).collect())
}

/// First element of the canonical basis for `max_degree` whose degree is
/// at least `min_degree`.
pub fn counterexample_witness(
    specs: &[SemidegreeSpec],
    d: &Rat,
    min_degree: u64,
    max_degree: u64,
    grading: Grading,
) -> Result<Option<LaurentPoly2>> {
    if min_degree > max_degree {
        return Err(Error::InvalidInput("min degree exceeds max degree".into()));
    }
    Ok(low_degree_space(specs, d, max_degree, grading)?
        .into_iter()
        .find(|p| grading.degree_of(p).is_some_and(|g| g >= min_degree)))
}

/// Dimensions of the low-degree spaces for each degree bound.
pub fn dimension_profile(
    specs: &[SemidegreeSpec],
    d: &Rat,
    degrees: &[u64],
    grading: Grading,
) -> Result<Vec<usize>> {
    degrees
        .iter()
        .map(|&m| low_degree_space(specs, d, m, grading).map(|b| b.len()))
        .collect()
}

/// Whether a profile ends in a strictly increasing run of length at least
/// two: a finite hint of infinite dimension, not a proof.
pub fn strictly_increasing_tail(profile: &[usize]) -> bool {
    profile.len() >= 2 && profile.windows(2).all(|w| w[0] < w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semidegree::delta_star;
    use crate::series::PuiseuxSeries;

    fn two_tentacles() -> Vec<SemidegreeSpec> {
        [-1, 1]
            .iter()
            .map(|&s| {
                SemidegreeSpec::new(
                    PuiseuxSeries::from_rat_terms([(int(s), int(3)), (int(1), int(-2))]),
                    int(-3),
                )
                .unwrap()
            })
            .collect()
    }

    #[test]
    fn monomial_order() {
        assert_eq!(
            Grading::Total.monomials(1).unwrap(),
            vec![(1, 0), (0, 1), (0, 0)]
        );
        assert_eq!(
            Grading::Weighted(1, 3).monomials(3).unwrap()[..2],
            [(3, 0), (0, 1)]
        );
    }

    #[test]
    fn bounded_space_is_constants() {
        let b = low_degree_space(&two_tentacles(), &int(0), 6, Grading::Total).unwrap();
        assert_eq!(b, vec![LaurentPoly2::constant(int(1))]);
    }

    #[test]
    fn level_one_contains_the_square() {
        let b = low_degree_space(&two_tentacles(), &int(1), 6, Grading::Total).unwrap();
        for p in &b {
            for s in &two_tentacles() {
                assert!(delta_star(s, p).unwrap() <= int(1));
            }
        }
        let q = LaurentPoly2::from_terms([((0, 2), int(1)), ((6, 0), int(-1))]);
        let w = counterexample_witness(&two_tentacles(), &int(1), 6, 6, Grading::Total)
            .unwrap()
            .unwrap();
        assert_eq!(
            Grading::Total.leading_form(&w),
            Grading::Total.leading_form(&q).scale(&int(-1))
        );
    }

    #[test]
    fn generic_monomial_spec_allows_everything() {
        let s = SemidegreeSpec::new(PuiseuxSeries::default(), int(1)).unwrap();
        assert_eq!(
            low_degree_space(&[s], &int(3), 3, Grading::Total)
                .unwrap()
                .len(),
            10
        );
    }

    #[test]
    fn profile_tail() {
        assert!(strictly_increasing_tail(&[1, 2, 4]));
        assert!(!strictly_increasing_tail(&[1, 2, 2]));
        assert!(!strictly_increasing_tail(&[3]));
    }
}
