//! Unions of standard tentacles: the monomial bases of `B_d(S)` and the
//! generators of `B(S)` from the Hilbert basis of the lattice cone
//! `M = {(α, d) ∈ ℕ^{n+1} : z^{(i)}·α ≤ d·φ_i for all i}`.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::kernel_line;
use crate::multipoly::MultiPoly;
use crate::rational::{int, Rat};
use crate::semidegree::phi_z;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeSemigroup {
    n: usize,
    directions: Vec<Vec<i64>>,
}

impl ConeSemigroup {
    pub fn new(n: usize, directions: Vec<Vec<i64>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "ambient dimension must be positive".into(),
            ));
        }
        if let Some(z) = directions.iter().find(|z| z.len() != n) {
            return Err(Error::InvalidInput(format!(
                "direction {z:?} does not have length {n}"
            )));
        }
        Ok(ConeSemigroup { n, directions })
    }

    /// Infers `n` from the directions, which must be nonempty.
    pub fn from_directions(directions: Vec<Vec<i64>>) -> Result<Self> {
        let n = directions.first().map(Vec::len).ok_or_else(|| {
            Error::InvalidInput("no directions; give the dimension explicitly".into())
        })?;
        Self::new(n, directions)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn directions(&self) -> &[Vec<i64>] {
        &self.directions
    }

    /// Rows `(z^{(i)}, −φ_i)`; a point `(α, d)` lies in `M` iff every row
    /// pairs nonpositively with it.
    pub fn constraints(&self) -> Vec<Vec<i64>> {
        self.directions
            .iter()
            .map(|z| {
                let mut row = z.clone();
                row.push(-phi_z(z));
                row
            })
            .collect()
    }

    /// Membership of a lattice point `(α, d)`.
    pub fn contains(&self, point: &[u64]) -> bool {
        point.len() == self.n + 1
            && self.constraints().iter().all(|row| {
                row.iter()
                    .zip(point)
                    .map(|(&a, &b)| a as i128 * b as i128)
                    .sum::<i128>()
                    <= 0
            })
    }

    /// Primitive integer generators of the extreme rays of the real cone.
    pub fn extreme_rays(&self) -> Vec<Vec<u64>> {
        let dim = self.n + 1;
        let mut rows: Vec<Vec<Rat>> = self
            .constraints()
            .into_iter()
            .map(|r| r.into_iter().map(int).collect())
            .collect();
        for i in 0..dim {
            let mut r = vec![Rat::zero(); dim];
            r[i] = int(-1);
            rows.push(r);
        }
        let feasible = |v: &[Rat]| {
            rows.iter().all(|r| {
                r.iter().zip(v).fold(Rat::zero(), |acc, (a, b)| acc + a * b) <= Rat::zero()
            })
        };
        let mut rays: Vec<Vec<u64>> = Vec::new();
        for subset in subsets(rows.len(), dim - 1) {
            let tight: Vec<Vec<Rat>> = subset.iter().map(|&i| rows[i].clone()).collect();
            let Some(v) = kernel_line(&tight, dim) else {
                continue;
            };
            for cand in [v.clone(), v.iter().map(|c| -c).collect::<Vec<_>>()] {
                if feasible(&cand) {
                    let p = primitive(&cand);
                    if !rays.contains(&p) {
                        rays.push(p);
                    }
                }
            }
        }
        rays.sort_by(|a, b| graded_colex(a, b));
        rays
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Scales a nonnegative rational vector to a primitive integer vector.
fn primitive(v: &[Rat]) -> Vec<u64> {
    let l = v
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<_> = v
        .iter()
        .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints
        .iter()
        .fold(num_bigint::BigInt::zero(), |acc, c| acc.gcd(c));
    ints.iter()
        .map(|c| (c / &g).abs().to_u64().expect("ray coordinate fits in u64"))
        .collect()
}

/// Coordinate sum first, then colexicographic.
pub fn graded_colex(a: &[u64], b: &[u64]) -> Ordering {
    let sa: u64 = a.iter().sum();
    let sb: u64 = b.iter().sum();
    sa.cmp(&sb).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBasis {
    /// Irreducible elements of `M`, in graded colexicographic order.
    pub generators: Vec<Vec<u64>>,
    pub extreme_rays: Vec<Vec<u64>>,
    pub search_bound: u64,
    /// The bound reaches the sum of the extreme rays, so every Hilbert basis
    /// element is guaranteed to be within it.
    pub complete: bool,
}

/// All lattice points of `[0, bound]^len`, in graded colexicographic order.
fn box_points(len: usize, bound: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=bound).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out.sort_by(|a, b| graded_colex(a, b));
    out
}

fn sub(a: &[u64], b: &[u64]) -> Option<Vec<u64>> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

/// Irreducible elements of `M` with coordinates at most `search_bound`.
///
/// Points of the box are scanned by increasing coordinate sum; a point is
/// reducible iff it exceeds some earlier generator by an element of `M`.
/// Afterwards every point of `M` in the box is checked to be a sum of
/// generators, and every extreme ray must have its primitive vector inside
/// the box.
pub fn hilbert_basis(cs: &ConeSemigroup, search_bound: u64) -> Result<HilbertBasis> {
    if search_bound == 0 {
        return Err(Error::InvalidInput(
            "search bound must be at least 1".into(),
        ));
    }
    let rays = cs.extreme_rays();
    if let Some(needed) = rays
        .iter()
        .flatten()
        .copied()
        .filter(|&c| c > search_bound)
        .max()
    {
        return Err(Error::BoundTooSmall {
            needed,
            bound: search_bound,
        });
    }
    let points: Vec<Vec<u64>> = box_points(cs.n + 1, search_bound)
        .into_iter()
        .filter(|p| cs.contains(p))
        .collect();
    let mut generators: Vec<Vec<u64>> = Vec::new();
    for p in points.iter().skip(1) {
        let reducible = generators
            .iter()
            .any(|g| sub(p, g).is_some_and(|r| cs.contains(&r)));
        if !reducible {
            generators.push(p.clone());
        }
    }
    let mut reachable: HashSet<&Vec<u64>> = HashSet::new();
    reachable.insert(&points[0]);
    for p in points.iter().skip(1) {
        let ok = generators
            .iter()
            .any(|g| sub(p, g).is_some_and(|r| reachable.contains(&r)));
        assert!(
            ok,
            "point {p:?} of M does not decompose over the generators"
        );
        reachable.insert(p);
    }
    let sums: Vec<u64> = (0..=cs.n)
        .map(|i| rays.iter().map(|r| r[i]).sum())
        .collect();
    let complete = sums.iter().all(|&s| s <= search_bound);
    Ok(HilbertBasis {
        generators,
        extreme_rays: rays,
        search_bound,
        complete,
    })
}

/// Monomials `x^α` with `|α| ≤ degree_cap` and `z^{(i)}·α ≤ d·φ_i` for all
/// `i`, in graded colexicographic order.
pub fn bd_monomial_basis(cs: &ConeSemigroup, d: u64, degree_cap: u64) -> Vec<Vec<u64>> {
    box_points(cs.n, degree_cap)
        .into_iter()
        .filter(|a| a.iter().sum::<u64>() <= degree_cap)
        .filter(|a| {
            let mut p = a.clone();
            p.push(d);
            cs.contains(&p)
        })
        .collect()
}

/// Generators `x^α t^d` of `B(S) ⊆ ℝ[x, t]`, as polynomials in `n + 1`
/// variables with `t` last.
pub fn algebra_generators(cs: &ConeSemigroup, search_bound: u64) -> Result<Vec<MultiPoly>> {
    Ok(hilbert_basis(cs, search_bound)?
        .generators
        .into_iter()
        .map(|g| {
            MultiPoly::monomial(
                Rat::from_integer(1.into()),
                g.into_iter().map(|c| c as u32).collect(),
            )
        })
        .collect())
}

/// Variable names `x1, …, xn, t` for rendering generators.
pub fn generator_names(n: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.push("t".into());
    names
}
