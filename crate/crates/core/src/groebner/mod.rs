//! Ideals, reduced Gröbner bases and the operations built on them.

mod dense;
mod engine;
pub mod oracle;
mod quotient;

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, TermOrder};
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::Polynomial;

pub use engine::{buchberger_polys, Caps};
pub use oracle::{hilbert_dim_oracle, oracle_contains, oracle_hilbert_function};
pub use quotient::{divide_exact, ideal_quotient, intersect, quotient_by_ideal, saturate};

/// A homogeneous ideal given by generators. The empty generator list is the zero ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal<F> {
    nvars: usize,
    gens: Vec<Polynomial<F>>,
}

impl<F: Field> Ideal<F> {
    /// Validates ring and homogeneity; zero generators are dropped.
    pub fn new(nvars: usize, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for (index, g) in gens.into_iter().enumerate() {
            if g.nvars() != nvars {
                return Err(Error::RingMismatch);
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous {
                    index,
                    poly: g.to_string(),
                });
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(Ideal { nvars, gens: kept })
    }

    pub fn zero(nvars: usize) -> Self {
        Ideal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        Ideal {
            nvars,
            gens: vec![Polynomial::constant(nvars, TermOrder::GradedLex, F::one())],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn apply_change(&self, change: &crate::linear::LinearChange<F>) -> Result<Self> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.apply_change(change))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.nvars, gens)
    }

    /// Reduced Gröbner basis with default resource caps.
    pub fn groebner(&self, order: TermOrder) -> Result<GroebnerBasis<F>> {
        buchberger(self, order)
    }

    /// Ideal generated by the same polynomials with the variables renamed by `perm`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        Ideal {
            nvars: self.nvars,
            gens: self.gens.iter().map(|g| g.permute_vars(perm)).collect(),
        }
    }

    pub fn format_with(&self, names: &[String]) -> Vec<String> {
        self.gens.iter().map(|g| g.format_with(names)).collect()
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted by ascending leading monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct GroebnerBasis<F> {
    nvars: usize,
    order: TermOrder,
    basis: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub(crate) fn from_reduced(nvars: usize, order: TermOrder, mut basis: Vec<Polynomial<F>>) -> Self {
        basis.sort_by(|a, b| order.compare(a.lm(), b.lm()));
        GroebnerBasis { nvars, order, basis }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].lm().is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.lm().clone()).collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.leading_monomials())
    }

    /// Smallest degree of a nonzero element of the ideal (`None` for the zero ideal).
    pub fn min_degree(&self) -> Option<u32> {
        self.basis.iter().filter_map(|g| g.degree()).min()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        normal_form(f, &self.basis, self.order)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn to_ideal(&self) -> Ideal<F> {
        Ideal {
            nvars: self.nvars,
            gens: self.basis.clone(),
        }
    }

    /// Every S-polynomial reduces to zero against the basis.
    pub fn verify_s_pairs(&self) -> Result<bool> {
        is_groebner(&self.basis, self.order)
    }
}

impl<F: Field> fmt::Debug for GroebnerBasis<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.basis.iter()).finish()
    }
}

/// Full division: repeatedly reduce the largest reducible monomial with the
/// first basis element (in list order) whose leading monomial divides it.
pub fn normal_form<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>], order: TermOrder) -> Result<Polynomial<F>> {
    if basis.iter().any(|g| g.nvars() != f.nvars()) {
        return Err(Error::RingMismatch);
    }
    let basis: Vec<Polynomial<F>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.reorder(order).monic())
        .collect();
    let mut p = f.reorder(order);
    let mut rem: Vec<(F, Monomial)> = Vec::new();
    while let Some((c, m)) = p.lt().cloned() {
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let q = g.lm().quotient_of(&m).expect("divides");
                p = p.sub_mul_term(&c, &q, g);
            }
            None => {
                rem.push((c, m));
                let terms = p.into_terms().into_iter().skip(1).collect();
                p = Polynomial::from_sorted_terms(f.nvars(), order, terms);
            }
        }
    }
    Ok(Polynomial::from_sorted_terms(f.nvars(), order, rem))
}

pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, order: TermOrder) -> Result<Polynomial<F>> {
    if f.nvars() != g.nvars() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() || g.is_zero() {
        return Err(Error::EmptyPolynomial);
    }
    let f = f.reorder(order).monic();
    let g = g.reorder(order).monic();
    let l = f.lm().lcm(g.lm());
    let a = f.lm().quotient_of(&l).expect("lcm");
    let b = g.lm().quotient_of(&l).expect("lcm");
    let fa = f.mul_term(&F::one(), &a);
    Ok(fa.sub_mul_term(&F::one(), &b, &g))
}

/// Buchberger's S-pair criterion on an arbitrary generating list.
pub fn is_groebner<F: Field>(basis: &[Polynomial<F>], order: TermOrder) -> Result<bool> {
    let basis: Vec<Polynomial<F>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.reorder(order))
        .collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis[i].lm().is_coprime(basis[j].lm()) {
                continue;
            }
            let s = s_polynomial(&basis[i], &basis[j], order)?;
            if !normal_form(&s, &basis, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Reduced Gröbner basis of `ideal` under `order`, with default caps.
pub fn buchberger<F: Field>(ideal: &Ideal<F>, order: TermOrder) -> Result<GroebnerBasis<F>> {
    buchberger_with_caps(ideal, order, Caps::default())
}

pub fn buchberger_with_caps<F: Field>(ideal: &Ideal<F>, order: TermOrder, caps: Caps) -> Result<GroebnerBasis<F>> {
    let basis = buchberger_polys(ideal.nvars, &ideal.gens, order, caps)?;
    Ok(GroebnerBasis::from_reduced(ideal.nvars, order, basis))
}

/// `I ∩ k[x_1..x_n]`, re-expressed in the ring without `x_0`.
pub fn elimination_ideal_x0<F: Field>(ideal: &Ideal<F>) -> Result<Ideal<F>> {
    let gb = buchberger(ideal, TermOrder::GradedLex)?;
    elimination_from_basis(&gb)
}

pub(crate) fn elimination_from_basis<F: Field>(gb: &GroebnerBasis<F>) -> Result<Ideal<F>> {
    assert_eq!(gb.order(), TermOrder::GradedLex);
    let gens = gb
        .basis()
        .iter()
        .filter(|g| g.lm().exponent(0) == 0)
        .map(|g| g.remove_var(0))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(gb.nvars() - 1, gens)
}

/// Equality of ideals, decided by comparing reduced bases.
pub fn ideals_equal<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<bool> {
    if a.nvars() != b.nvars() {
        return Err(Error::RingMismatch);
    }
    Ok(buchberger(a, TermOrder::GradedLex)? == buchberger(b, TermOrder::GradedLex)?)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::field::{Gf32003, Rational};
    use crate::monomial::default_names;

    type F = Gf32003;

    pub(crate) fn ideal<F: Field>(nvars: usize, gens: &[&str]) -> Ideal<F> {
        let names = default_names(nvars);
        Ideal::new(
            nvars,
            gens.iter()
                .map(|g| Polynomial::parse(g, &names, TermOrder::GradedLex).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn p(s: &str) -> Polynomial<F> {
        Polynomial::parse(s, &default_names(4), TermOrder::GradedLex).unwrap()
    }

    const TWISTED: [&str; 3] = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"];

    #[test]
    fn normal_form_examples() {
        let o = TermOrder::GradedLex;
        assert!(normal_form(&p("x0^2"), &[p("x0")], o).unwrap().is_zero());
        assert_eq!(normal_form(&p("x0*x2"), &[p("x0*x2 - x1^2")], o).unwrap(), p("x1^2"));
        let gb = ideal::<F>(4, &TWISTED).groebner(o).unwrap();
        let member = gb.contains(&p("x1^2*x3")).unwrap();
        let oracle = oracle_contains(&ideal::<F>(4, &TWISTED), &p("x1^2*x3"));
        assert_eq!(member, oracle);
        assert!(!member);
        let nf = gb.normal_form(&p("x1^2*x3")).unwrap();
        assert!(nf
            .terms()
            .iter()
            .all(|(_, m)| gb.basis().iter().all(|g| !g.lm().divides(m))));
    }

    #[test]
    fn s_polynomial_examples() {
        let o = TermOrder::GradedLex;
        assert_eq!(
            s_polynomial(&p("x0*x2 - x1^2"), &p("x0*x3 - x1*x2"), o).unwrap(),
            p("x1*x2^2 - x1^2*x3")
        );
        let f = p("x0*x2 - x1^2");
        assert!(s_polynomial(&f, &f, o).unwrap().is_zero());
        let s = s_polynomial(&p("x0^2"), &p("x1^2"), o).unwrap();
        assert!(normal_form(&s, &[p("x0^2"), p("x1^2")], o).unwrap().is_zero());
    }

    #[test]
    fn buchberger_small() {
        let gb = ideal::<F>(4, &["x0"]).groebner(TermOrder::GradedLex).unwrap();
        assert_eq!(gb.basis(), &[p("x0")]);
    }

    #[test]
    fn twisted_cubic_minors_are_reduced_grevlex() {
        let gb = ideal::<Rational>(4, &TWISTED)
            .groebner(TermOrder::GradedRevLex)
            .unwrap();
        assert_eq!(gb.len(), 3);
        assert!(gb.verify_s_pairs().unwrap());
        let expect = ideal::<Rational>(4, &TWISTED);
        for g in expect.generators() {
            let g = g.reorder(TermOrder::GradedRevLex).monic();
            assert!(gb.basis().contains(&g), "{:?} missing", g);
        }
        for m in 1..=6 {
            assert_eq!(oracle_hilbert_function(&expect, m), 3 * m as u128 + 1);
        }
    }

    #[test]
    fn generator_permutation_invariance() {
        let a = ideal::<F>(4, &["x0^3 - x1*x2^2", "x1^3 - x2^2*x3"]);
        let b = ideal::<F>(4, &["x1^3 - x2^2*x3", "x0^3 - x1*x2^2"]);
        assert_eq!(
            a.groebner(TermOrder::GradedLex).unwrap(),
            b.groebner(TermOrder::GradedLex).unwrap()
        );
    }

    #[test]
    fn elimination_examples() {
        let e = elimination_ideal_x0(&ideal::<F>(4, &["x0"])).unwrap();
        assert!(e.is_zero());
        let e = elimination_ideal_x0(&ideal::<F>(3, &["x0*x1", "x1*x2"])).unwrap();
        assert_eq!(e.nvars(), 2);
        let x1x2 = Polynomial::parse("x0*x1", &default_names(2), TermOrder::GradedLex).unwrap();
        assert!(buchberger(&e, TermOrder::GradedLex).unwrap().contains(&x1x2).unwrap());
    }

    #[test]
    fn caps_abort() {
        let change = crate::gin::random_change::<F>(1, 3, 99);
        let i = ideal::<F>(4, &["x0^3 - x1*x2^2", "x1^3 - x2^2*x3"])
            .apply_change(&change)
            .unwrap();
        let caps = Caps {
            max_basis: 10_000,
            max_degree: 4,
        };
        assert!(matches!(
            buchberger_with_caps(&i, TermOrder::GradedLex, caps),
            Err(Error::ResourceCap(_))
        ));
    }

    #[test]
    fn non_homogeneous_rejected() {
        let names = default_names(2);
        let f = Polynomial::<F>::parse("x0^2 + x1", &names, TermOrder::GradedLex).unwrap();
        assert!(matches!(Ideal::new(2, vec![f]), Err(Error::NotHomogeneous { .. })));
    }
}
