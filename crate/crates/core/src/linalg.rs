//! Exact Gaussian elimination over ℚ.

use num_traits::{One, Signed, Zero};

use crate::rational::Rat;

/// Rows kept in reduced row echelon form as they are inserted. Suited to
/// constraint systems with many more (mostly redundant) rows than columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    /// `(pivot column, row)` sorted by pivot column.
    rows: Vec<(usize, Vec<Rat>)>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Vec<Rat>> {
        self.rows.iter().map(|(_, r)| r)
    }

    /// Inserts a row; returns whether it increased the rank.
    pub fn insert(&mut self, mut row: Vec<Rat>) -> bool {
        assert_eq!(row.len(), self.ncols);
        for (p, r) in &self.rows {
            if !row[*p].is_zero() {
                let f = row[*p].clone();
                for (a, b) in row.iter_mut().zip(r) {
                    if !b.is_zero() {
                        *a -= &f * b;
                    }
                }
            }
        }
        let Some(pivot) = row.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = row[pivot].recip();
        for c in row.iter_mut() {
            if !c.is_zero() {
                *c *= &inv;
            }
        }
        for (_, r) in self.rows.iter_mut() {
            if !r[pivot].is_zero() {
                let f = r[pivot].clone();
                for (a, b) in r.iter_mut().zip(&row) {
                    if !b.is_zero() {
                        *a -= &f * b;
                    }
                }
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, row));
        true
    }

    /// Basis of `{v : A v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let pivots = self.pivots();
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rat::zero(); self.ncols];
            v[free] = Rat::one();
            for (p, r) in &self.rows {
                v[*p] = -r[free].clone();
            }
            out.push(v);
        }
        out
    }
}

/// Reduced row echelon form of the given rows (zero rows dropped).
pub fn rref(rows: Vec<Vec<Rat>>, ncols: usize) -> Vec<Vec<Rat>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.rows.into_iter().map(|(_, r)| r).collect()
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for c in a[col].iter_mut() {
            *c *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Primitive integer direction spanning a one-dimensional nullspace, if the
/// nullspace of `rows` has dimension exactly one.
pub fn kernel_line(rows: &[Vec<Rat>], ncols: usize) -> Option<Vec<Rat>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r.clone());
    }
    let mut ns = e.nullspace();
    if ns.len() != 1 {
        return None;
    }
    Some(ns.pop().unwrap())
}

pub fn abs_row_sums(m: &[Vec<Rat>]) -> Vec<Rat> {
    m.iter()
        .map(|r| r.iter().fold(Rat::zero(), |acc, c| acc + c.abs()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn row(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn nullspace_of_rank_one() {
        let mut e = Echelon::new(3);
        assert!(e.insert(row(&[1, 2, 3])));
        assert!(!e.insert(row(&[2, 4, 6])));
        let ns = e.nullspace();
        assert_eq!(ns, vec![row(&[-2, 1, 0]), row(&[-3, 0, 1])]);
    }

    #[test]
    fn rref_is_reduced() {
        let r = rref(vec![row(&[0, 2, 4]), row(&[1, 1, 1]), row(&[1, 3, 5])], 3);
        assert_eq!(r, vec![row(&[1, 0, -1]), row(&[0, 1, 2])]);
    }

    #[test]
    fn inverse_two_by_two() {
        let m = vec![vec![int(1), int(1)], vec![int(1), rat(1, 2)]];
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, vec![row(&[-1, 2]), row(&[2, -2])]);
        assert_eq!(abs_row_sums(&inv), vec![int(3), int(4)]);
        assert!(inverse(&[row(&[1, 2]), row(&[2, 4])]).is_none());
    }
}
