//! Moving up one dimension: `p ∈ B_d(S)` corresponds to `p·t^d ∈ B₀(S′)`
//! with `S′ = {(a, s) : a ∈ S, ‖a‖ ≥ 1, ‖a‖²s² ≤ 1}`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{abs_row_sums, inverse};
use crate::multipoly::MultiPoly;
use crate::rational::{pow_rat, Rat};

/// `poly·t^level`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    pub poly: MultiPoly,
    pub level: u32,
}

/// `p(x)·t^d` as a polynomial in `(x₁, …, x_n, t)`.
pub fn lift_element(e: &GradedElement) -> MultiPoly {
    MultiPoly::from_terms(
        e.poly.nvars() + 1,
        e.poly.terms().iter().map(|(a, c)| {
            let mut a = a.clone();
            a.push(e.level);
            (a, c.clone())
        }),
    )
}

/// Splits `q = Σ p_i t^i` (with `t` the last variable) into its pieces,
/// ordered by level.
pub fn split_by_t(q: &MultiPoly) -> Result<Vec<GradedElement>> {
    let n = q
        .nvars()
        .checked_sub(1)
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::InvalidInput("need at least one variable besides t".into()))?;
    let mut pieces: BTreeMap<u32, Vec<(Vec<u32>, Rat)>> = BTreeMap::new();
    for (a, c) in q.terms() {
        pieces
            .entry(a[n])
            .or_default()
            .push((a[..n].to_vec(), c.clone()));
    }
    Ok(pieces
        .into_iter()
        .map(|(level, terms)| GradedElement {
            poly: MultiPoly::from_terms(n, terms),
            level,
        })
        .collect())
}

/// Constraints of `S′` given those of `S` in variables named by `names`,
/// with `t` as the new last coordinate.
pub fn lifted_set_description<S: AsRef<str>>(constraints: &[String], names: &[S]) -> Vec<String> {
    let norm = names
        .iter()
        .map(|v| format!("{}^2", v.as_ref()))
        .collect::<Vec<_>>()
        .join(" + ");
    let mut out = constraints.to_vec();
    out.push(format!("{norm} >= 1"));
    out.push(format!("({norm})*t^2 <= 1"));
    out
}

/// Bounds on `|p_i|` for `p = Σ p_i t^i` of degree `≤ d` with `|p| ≤ C` on
/// `[0, 1]`: with `V[n][i] = (1/n)^i` for nodes `n = 1, …, d+1`, the
/// coefficients are `V⁻¹·v` for some `|v_n| ≤ C`, so `C` times the absolute
/// row sums of `V⁻¹` bounds them.
pub fn coefficient_bound(d: u32, c: &Rat) -> Result<Vec<Rat>> {
    if *c <= Rat::zero() {
        return Err(Error::InvalidInput("C must be positive".into()));
    }
    let v: Vec<Vec<Rat>> = (1..=d as i64 + 1)
        .map(|n| {
            let node = Rat::new(1.into(), n.into());
            (0..=d as i64).map(|i| pow_rat(&node, i)).collect()
        })
        .collect();
    let inv = inverse(&v).expect("Vandermonde matrix on distinct nodes is invertible");
    Ok(abs_row_sums(&inv).into_iter().map(|s| s * c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn lifting() {
        let p = MultiPoly::monomial(int(1), vec![1, 1]);
        let l = lift_element(&GradedElement {
            poly: p.clone(),
            level: 1,
        });
        assert_eq!(l, MultiPoly::monomial(int(1), vec![1, 1, 1]));
        let one = lift_element(&GradedElement {
            poly: MultiPoly::constant(2, int(1)),
            level: 0,
        });
        assert_eq!(one, MultiPoly::constant(3, int(1)));
        let q = MultiPoly::from_terms(2, [(vec![0, 2], int(1)), (vec![6, 0], int(-1))]);
        let lq = lift_element(&GradedElement {
            poly: q.clone(),
            level: 1,
        });
        assert_eq!(
            lq.display_with(&["x", "y", "t"]).to_string(),
            "-x^6*t + y^2*t"
        );
        let back = split_by_t(&lq.add(&l)).unwrap();
        assert_eq!(
            back,
            vec![GradedElement {
                poly: q.add(&p),
                level: 1
            }]
        );
    }

    #[test]
    fn lifted_description() {
        let out = lifted_set_description(&["x >= 1".to_string()], &["x", "y"]);
        assert_eq!(
            out,
            vec!["x >= 1", "x^2 + y^2 >= 1", "(x^2 + y^2)*t^2 <= 1"]
        );
    }

    #[test]
    fn bounds() {
        assert_eq!(coefficient_bound(0, &int(1)).unwrap(), vec![int(1)]);
        assert_eq!(coefficient_bound(1, &int(1)).unwrap(), vec![int(3), int(4)]);
        assert_eq!(coefficient_bound(1, &int(2)).unwrap(), vec![int(6), int(8)]);
        assert!(coefficient_bound(1, &int(0)).is_err());
    }
}
