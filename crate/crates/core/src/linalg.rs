//! Exact Gauss-Jordan elimination over the rationals.

use num_traits::{One, Zero};

use crate::coeff::Rational;

#[derive(Clone, Debug)]
pub struct Echelon {
    /// Nonzero rows of the reduced row echelon form.
    pub rows: Vec<Vec<Rational>>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (a, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// Reduced row echelon form of `rows`, all of length `ncols`.
pub fn rref(mut rows: Vec<Vec<Rational>>, ncols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][col];
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = std::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row.is_empty() || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (a, b) in row.iter_mut().zip(&pivot_row) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
        }
        rows[r] = pivot_row;
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

pub fn rank(rows: Vec<Vec<Rational>>, ncols: usize) -> usize {
    rref(rows, ncols).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, ratio};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]]), 2), 1);
        assert_eq!(rank(m(&[&[0, 0], &[0, 0]]), 2), 0);
        assert_eq!(rank(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]), 3), 3);
        assert_eq!(rank(Vec::new(), 4), 0);
    }

    #[test]
    fn reduced_form_and_membership() {
        let e = rref(m(&[&[2, 4, 0], &[1, 3, 1]]), 3);
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.rows[0], vec![rat(1), rat(0), rat(-2)]);
        assert_eq!(e.rows[1], vec![rat(0), rat(1), rat(1)]);
        assert!(e.contains(&[rat(3), rat(7), rat(1)]));
        assert!(!e.contains(&[rat(0), rat(0), rat(1)]));
        assert!(e.contains(&[ratio(1, 2), rat(1), rat(0)]));
    }
}
