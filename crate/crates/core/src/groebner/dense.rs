//! Dense reduction of homogeneous polynomials of one fixed degree.
//!
//! A degree-`d` polynomial is held as a coefficient vector indexed by the
//! position of each monomial in the descending term order, so a reduction
//! step is a single pass of fused multiply-subtracts.

use crate::field::Field;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Polynomial;

pub(crate) struct Ranker {
    nvars: usize,
    order: TermOrder,
    // counts[v][k] = number of monomials of degree k in v variables
    counts: Vec<Vec<u64>>,
}

impl Ranker {
    pub(crate) fn new(nvars: usize, order: TermOrder, max_degree: u32) -> Self {
        assert!(order.is_graded());
        let maxk = max_degree as usize + 1;
        let mut counts = vec![vec![0u64; maxk + 1]; nvars + 1];
        counts[0][0] = 1;
        for v in 1..=nvars {
            for k in 0..=maxk {
                // monomials of degree k in v vars = sum over exponent of the first
                counts[v][k] = (0..=k)
                    .map(|j| counts[v - 1][k - j])
                    .fold(0u64, |a, b| a.saturating_add(b));
            }
        }
        Ranker { nvars, order, counts }
    }

    pub(crate) fn count(&self, degree: u32) -> usize {
        self.counts[self.nvars][degree as usize] as usize
    }

    fn glex_rank(&self, exps: impl Iterator<Item = u32>, degree: u32) -> usize {
        let n = self.nvars;
        let mut rank = 0u64;
        let mut left = degree;
        for (i, e) in exps.enumerate().take(n - 1) {
            if left > e {
                rank += self.counts[n - i][(left - e - 1) as usize];
            }
            left -= e;
        }
        rank as usize
    }

    /// Position of the monomial with exponents `a + b` among degree-`degree`
    /// monomials, listed in descending order.
    #[inline]
    pub(crate) fn rank_sum(&self, a: &[u32], b: &[u32], degree: u32) -> usize {
        match self.order {
            TermOrder::GradedLex => self.glex_rank(a.iter().zip(b).map(|(x, y)| x + y), degree),
            TermOrder::GradedRevLex => {
                let r = self.glex_rank(a.iter().rev().zip(b.iter().rev()).map(|(x, y)| x + y), degree);
                self.count(degree) - 1 - r
            }
            TermOrder::EliminateFirst => unreachable!("dense reduction needs a graded order"),
        }
    }

    pub(crate) fn rank(&self, m: &Monomial) -> usize {
        let zero = [0u32; 16];
        if m.nvars() <= 16 {
            self.rank_sum(m.exponents(), &zero[..m.nvars()], m.degree())
        } else {
            let z = vec![0u32; m.nvars()];
            self.rank_sum(m.exponents(), &z, m.degree())
        }
    }
}

/// Monomials of one degree in descending order, plus a map from each to the
/// basis element used to reduce it.
pub(crate) struct DegreeTable {
    pub(crate) degree: u32,
    pub(crate) monos: Vec<Monomial>,
    pub(crate) divisor: Vec<Option<usize>>,
}

impl DegreeTable {
    pub(crate) fn new(ranker: &Ranker, degree: u32) -> Self {
        let mut monos = crate::monomial::monomials_of_degree(ranker.nvars, degree);
        monos.sort_by(|a, b| ranker.order.compare(b, a));
        debug_assert!(monos.iter().enumerate().all(|(i, m)| ranker.rank(m) == i));
        let divisor = vec![None; monos.len()];
        DegreeTable { degree, monos, divisor }
    }
}

/// A dense coefficient vector for one degree.
pub(crate) struct DenseRow<F> {
    pub(crate) coeffs: Vec<F>,
}

impl<F: Field> DenseRow<F> {
    pub(crate) fn zeros(len: usize) -> Self {
        DenseRow {
            coeffs: vec![F::zero(); len],
        }
    }

    /// `self += c * q * g`
    pub(crate) fn add_shifted(&mut self, ranker: &Ranker, degree: u32, c: &F, q: &Monomial, g: &Polynomial<F>) {
        let neg = -c.clone();
        self.sub_shifted(ranker, degree, &neg, q, g);
    }

    /// `self -= c * q * g`
    #[inline]
    pub(crate) fn sub_shifted(&mut self, ranker: &Ranker, degree: u32, c: &F, q: &Monomial, g: &Polynomial<F>) {
        let qe = q.exponents();
        for (gc, gm) in g.terms() {
            let idx = ranker.rank_sum(qe, gm.exponents(), degree);
            self.coeffs[idx].sub_mul_assign(c, gc);
        }
    }

    pub(crate) fn to_poly(&self, table: &DegreeTable, nvars: usize, order: TermOrder, from: usize) -> Polynomial<F> {
        let terms = self.coeffs[from..]
            .iter()
            .zip(&table.monos[from..])
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, m)| (c.clone(), m.clone()))
            .collect();
        Polynomial::from_sorted_terms(nvars, order, terms)
    }
}
