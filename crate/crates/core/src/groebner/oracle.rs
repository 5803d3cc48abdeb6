//! Linear-algebra certificate for Hilbert function values and ideal membership.
//!
//! `dim_k I_m` is the rank of the matrix whose rows are `u * g` for every
//! generator `g` and every monomial `u` of complementary degree, written in
//! the monomial basis of degree `m`. No Gröbner machinery is involved, so the
//! result can certify the Buchberger engine.

use std::collections::HashMap;

use crate::field::Field;
use crate::monomial::{count_monomials, monomials_of_degree, Monomial};
use crate::poly::Polynomial;

use super::Ideal;

type SparseRow<F> = Vec<(usize, F)>;

struct Echelon<F> {
    columns: HashMap<Monomial, usize>,
    pivots: HashMap<usize, SparseRow<F>>,
}

impl<F: Field> Echelon<F> {
    fn new(nvars: usize, degree: u32) -> Self {
        let columns = monomials_of_degree(nvars, degree)
            .into_iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        Echelon {
            columns,
            pivots: HashMap::new(),
        }
    }

    fn row_of(&self, terms: impl Iterator<Item = (F, Monomial)>) -> SparseRow<F> {
        let mut row: SparseRow<F> = terms.map(|(c, m)| (self.columns[&m], c)).collect();
        row.sort_by_key(|e| e.0);
        row
    }

    /// Reduces `row` by the stored pivots; returns what is left.
    fn reduce(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        let mut done: SparseRow<F> = Vec::new();
        while let Some((col, c)) = row.first().cloned() {
            match self.pivots.get(&col) {
                None => {
                    // keep the irreducible head, continue on the rest
                    done.push((col, c));
                    row.remove(0);
                }
                Some(pivot) => row = axpy(&row, &c, pivot),
            }
        }
        done
    }

    fn insert(&mut self, row: SparseRow<F>) -> bool {
        let mut row = self.reduce_head(row);
        if row.is_empty() {
            return false;
        }
        let inv = row[0].1.inverse().expect("nonzero");
        for e in row.iter_mut() {
            e.1 = e.1.clone() * inv.clone();
        }
        self.pivots.insert(row[0].0, row);
        true
    }

    /// Reduces only until the leading column has no pivot.
    fn reduce_head(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        while let Some((col, c)) = row.first().cloned() {
            match self.pivots.get(&col) {
                None => break,
                Some(pivot) => row = axpy(&row, &c, pivot),
            }
        }
        row
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// `row - c * pivot`, where both are sorted by column.
fn axpy<F: Field>(row: &SparseRow<F>, c: &F, pivot: &SparseRow<F>) -> SparseRow<F> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            out.push((pivot[j].0, -(c.clone() * pivot[j].1.clone())));
            j += 1;
        } else {
            let mut v = row[i].1.clone();
            v.sub_mul_assign(c, &pivot[j].1);
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn echelon_of_degree<F: Field>(ideal: &Ideal<F>, degree: u32) -> Echelon<F> {
    let n = ideal.nvars();
    let mut ech = Echelon::new(n, degree);
    for g in ideal.generators() {
        let Some(e) = g.degree() else { continue };
        if e > degree {
            continue;
        }
        for u in monomials_of_degree(n, degree - e) {
            let row = ech.row_of(g.terms().iter().map(|(c, m)| (c.clone(), m.mul(&u))));
            ech.insert(row);
            if ech.rank() == ech.columns.len() {
                return ech;
            }
        }
    }
    ech
}

/// `dim_k I_m`.
pub fn hilbert_dim_oracle<F: Field>(ideal: &Ideal<F>, m: u32) -> u128 {
    echelon_of_degree(ideal, m).rank() as u128
}

/// `H(R/I, m) = dim_k R_m - dim_k I_m`.
pub fn oracle_hilbert_function<F: Field>(ideal: &Ideal<F>, m: u32) -> u128 {
    count_monomials(ideal.nvars(), m) - hilbert_dim_oracle(ideal, m)
}

/// Membership of `f` in the ideal, decided degree by degree from the row spaces.
pub fn oracle_contains<F: Field>(ideal: &Ideal<F>, f: &Polynomial<F>) -> bool {
    let mut by_degree: HashMap<u32, Vec<(F, Monomial)>> = HashMap::new();
    for (c, m) in f.terms() {
        by_degree.entry(m.degree()).or_default().push((c.clone(), m.clone()));
    }
    by_degree.into_iter().all(|(d, terms)| {
        let ech = echelon_of_degree(ideal, d);
        let row = ech.row_of(terms.into_iter());
        ech.reduce(row).is_empty()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf32003;
    use crate::groebner::tests::ideal;

    #[test]
    fn oracle_examples() {
        let i = ideal::<Gf32003>(4, &["x0"]);
        assert_eq!(hilbert_dim_oracle(&i, 2), 4);
        assert_eq!(oracle_hilbert_function(&i, 2), 6);
        let tc = ideal::<Gf32003>(4, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        assert_eq!(oracle_hilbert_function(&tc, 2), 7);
        assert_eq!(oracle_hilbert_function(&Ideal::<Gf32003>::zero(4), 3), 20);
    }
}
