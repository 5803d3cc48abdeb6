//! Intersections, ideal quotients and saturation.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Polynomial;

use super::engine::{buchberger_polys, Caps};
use super::{ideals_equal, Ideal};

/// `I ∩ J`, by eliminating `t` from `t*I + (1-t)*J`.
pub fn intersect<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>> {
    if a.nvars() != b.nvars() {
        return Err(Error::RingMismatch);
    }
    let n = a.nvars();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(n));
    }
    let order = TermOrder::EliminateFirst;
    let t = Polynomial::<F>::var(n + 1, order, 0);
    let one_minus_t = &Polynomial::constant(n + 1, order, F::one()) - &t;
    let mut gens = Vec::new();
    for f in a.generators() {
        gens.push(&t * &f.insert_var(0).reorder(order));
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &g.insert_var(0).reorder(order));
    }
    let basis = buchberger_polys(n + 1, &gens, order, Caps::default())?;
    let kept = basis
        .into_iter()
        .filter(|g| g.lm().exponent(0) == 0)
        .map(|g| g.remove_var(0).map(|p| p.reorder(TermOrder::GradedLex)))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(n, kept)
}

/// Exact quotient `h / f`; errors if `f` does not divide `h`.
pub fn divide_exact<F: Field>(h: &Polynomial<F>, f: &Polynomial<F>) -> Result<Polynomial<F>> {
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let order = f.order();
    let mut r = h.reorder(order);
    let (fc, fm) = f.lt().cloned().expect("nonzero");
    let finv = fc.inverse().expect("nonzero");
    let mut q: Vec<(F, Monomial)> = Vec::new();
    while let Some((c, m)) = r.lt().cloned() {
        let Some(u) = fm.quotient_of(&m) else {
            return Err(Error::Invalid("polynomial division is not exact".to_string()));
        };
        let coeff = c * finv.clone();
        r = r.sub_mul_term(&coeff, &u, f);
        q.push((coeff, u));
    }
    Ok(Polynomial::from_terms(h.nvars(), order, q))
}

/// `(I : f)`.
pub fn ideal_quotient<F: Field>(ideal: &Ideal<F>, f: &Polynomial<F>) -> Result<Ideal<F>> {
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous {
            index: 0,
            poly: f.to_string(),
        });
    }
    let principal = Ideal::new(ideal.nvars(), vec![f.clone()])?;
    let inter = intersect(ideal, &principal)?;
    let f = f.reorder(TermOrder::GradedLex);
    let gens = inter
        .generators()
        .iter()
        .map(|h| divide_exact(h, &f))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.nvars(), gens)
}

/// `(I : J) = ∩ (I : g)` over the generators `g` of `J`.
pub fn quotient_by_ideal<F: Field>(ideal: &Ideal<F>, by: &Ideal<F>) -> Result<Ideal<F>> {
    if ideal.nvars() != by.nvars() {
        return Err(Error::RingMismatch);
    }
    let mut acc: Option<Ideal<F>> = None;
    for g in by.generators() {
        let q = ideal_quotient(ideal, g)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => intersect(&prev, &q)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(ideal.nvars())))
}

/// `(I : J^∞)`, iterating quotients until the ideal stops growing.
pub fn saturate<F: Field>(ideal: &Ideal<F>, by: &Ideal<F>) -> Result<Ideal<F>> {
    let mut cur = ideal.clone();
    loop {
        let next = quotient_by_ideal(&cur, by)?;
        if ideals_equal(&next, &cur)? {
            return Ok(cur);
        }
        cur = next;
    }
}
