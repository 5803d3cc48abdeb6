//! Dense linear algebra over a [`Field`]: invertible coordinate changes,
//! determinants and ranks.

use crate::error::{Error, Result};
use crate::field::Field;

/// An invertible `(n+1) x (n+1)` matrix acting on variables by
/// `x_j -> sum_k M[j][k] x_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange<F> {
    entries: Vec<Vec<F>>,
    det: F,
}

impl<F: Field> LinearChange<F> {
    pub fn new(entries: Vec<Vec<F>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("linear change must be square".into()));
        }
        let det = determinant(&entries);
        if det.is_zero() {
            return Err(Error::SingularChange);
        }
        Ok(LinearChange { entries, det })
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
            .collect();
        LinearChange { entries, det: F::one() }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &F {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.entries
    }

    pub fn determinant(&self) -> &F {
        &self.det
    }

    pub fn inverse(&self) -> Self {
        let inv = invert(&self.entries).expect("stored matrix is invertible");
        let det = self.det.inverse().expect("nonzero determinant");
        LinearChange { entries: inv, det }
    }

    /// Product `self * other` (apply `self` first, then `other`, when acting on polynomials).
    pub fn compose(&self, other: &Self) -> Self {
        let entries = mat_mul(&self.entries, &other.entries);
        let det = self.det.clone() * other.det.clone();
        LinearChange { entries, det }
    }

    /// Matrix-vector product `M v`.
    pub fn apply_to_point(&self, v: &[F]) -> Vec<F> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }
}

pub fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).fold(F::zero(), |acc, t| acc + a[i][t].clone() * b[t][j].clone()))
                .collect()
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce<F: Field>(rows: &mut [Vec<F>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows)
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].weight())
        else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    x.sub_mul_assign(&factor, y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m).len()
}

pub fn determinant<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        det = det * pivot.clone();
        let inv = pivot.inverse().expect("nonzero");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = a[i][c].clone() * inv.clone();
            let (top, bottom) = a.split_at_mut(i);
            for (x, y) in bottom[0].iter_mut().zip(&top[c]) {
                x.sub_mul_assign(&factor, y);
            }
        }
    }
    det
}

pub fn invert<F: Field>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}
