//! Partial elimination ideals.
//!
//! For a homogeneous `I ⊂ R = k[x0..xn]` and `R̄ = k[x1..xn]`, write each
//! `f ∈ I` as `f = x0^i fbar + g` with `i = d0(f)` the x0-degree of its
//! leading term. `K_i(I)` is spanned by the `fbar` with `d0(f) ≤ i`; the
//! `K_i` form an increasing chain ending in `R̄`. If `G` is a graded-lex
//! Gröbner basis of `I` then `{fbar : f ∈ G, d0(f) ≤ i}` is a Gröbner basis of
//! `K_i`, and in generic coordinates the slice `d0(f) = i` already is.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, oracle_hilbert_function, quotient_by_ideal, GroebnerBasis, Ideal};
use crate::monomial::TermOrder;
use crate::monomial_ideal::{HilbertData, MonomialIdeal};
use crate::poly::Polynomial;

const GLEX: TermOrder = TermOrder::GradedLex;

fn require_glex<F: Field>(gb: &GroebnerBasis<F>) -> Result<()> {
    if gb.order() != GLEX {
        return Err(Error::Invalid("partial elimination needs a graded-lex basis".into()));
    }
    Ok(())
}

/// `(d0(f), fbar)` for every basis element, `fbar` moved into `R̄`.
fn split_basis<F: Field>(gb: &GroebnerBasis<F>) -> Result<Vec<(u32, Polynomial<F>)>> {
    gb.basis()
        .iter()
        .map(|f| {
            let (i, fbar, _) = f.d0_split(GLEX)?;
            Ok((i, fbar.remove_var(0)?))
        })
        .collect()
}

/// Gröbner basis of `⟨gens⟩`, checked to have the same leading ideal as `gens`,
/// i.e. `gens` is itself a Gröbner basis.
fn certified_basis<F: Field>(nvars: usize, gens: Vec<Polynomial<F>>) -> Result<(Ideal<F>, GroebnerBasis<F>)> {
    let leading = MonomialIdeal::new(nvars, gens.iter().map(|g| g.lm().clone()).collect());
    let ideal = Ideal::new(nvars, gens)?;
    let basis = buchberger(&ideal, GLEX)?;
    if basis.initial_ideal() != leading {
        return Err(Error::Invalid(
            "the partial elimination generators are not a Gröbner basis".into(),
        ));
    }
    Ok((ideal, basis))
}

/// `K_i` from a graded-lex basis, generated by `fbar` for `d0(f) ≤ i`.
pub fn general_from_basis<F: Field>(gb: &GroebnerBasis<F>, i: u32) -> Result<Ideal<F>> {
    require_glex(gb)?;
    let gens = split_basis(gb)?
        .into_iter()
        .filter(|(d, _)| *d <= i)
        .map(|(_, p)| p)
        .collect();
    Ok(certified_basis(gb.nvars() - 1, gens)?.0)
}

/// `K_i(I)` in any coordinates.
pub fn partial_elim_general<F: Field>(ideal: &Ideal<F>, i: u32) -> Result<Ideal<F>> {
    general_from_basis(&buchberger(ideal, GLEX)?, i)
}

/// `K_i` from the slice `d0(f) = i` of a graded-lex basis; fails with
/// [`Error::RecipeMismatch`] when this differs from the general recipe, which
/// happens only in non-generic coordinates.
pub fn generic_from_basis<F: Field>(gb: &GroebnerBasis<F>, i: u32) -> Result<Ideal<F>> {
    require_glex(gb)?;
    let split = split_basis(gb)?;
    let n = gb.nvars() - 1;
    let slice: Vec<_> = split.iter().filter(|(d, _)| *d == i).map(|(_, p)| p.clone()).collect();
    let general: Vec<_> = split.into_iter().filter(|(d, _)| *d <= i).map(|(_, p)| p).collect();
    let slice = Ideal::new(n, slice)?;
    if buchberger(&slice, GLEX)? != buchberger(&Ideal::new(n, general)?, GLEX)? {
        return Err(Error::RecipeMismatch { level: i });
    }
    Ok(slice)
}

/// `K_i(I)` via the generic-coordinates recipe; `ideal` must already be in
/// generic coordinates (e.g. the transformed ideal of a gin computation).
pub fn partial_elim_generic<F: Field>(ideal: &Ideal<F>, i: u32) -> Result<Ideal<F>> {
    generic_from_basis(&buchberger(ideal, GLEX)?, i)
}

#[derive(Clone)]
pub struct Level<F> {
    pub index: u32,
    /// `fbar` for `d0(f) ≤ index`; a Gröbner basis of `K_index`.
    pub ideal: Ideal<F>,
    pub basis: GroebnerBasis<F>,
    /// `in(K_i)`; equal to its gin when the frame is generic.
    pub initial: MonomialIdeal,
    pub hilbert: HilbertData,
}

impl<F: Field> Level<F> {
    pub fn is_unit(&self) -> bool {
        self.basis.is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.ideal.is_zero()
    }

    /// `M(K_i)`; `None` for the zero ideal, 0 for `R̄`.
    pub fn m(&self) -> Option<u32> {
        self.initial.max_degree()
    }
}

/// The chain `K_0 ⊆ K_1 ⊆ ...` computed up to the first unit level, or up to
/// `β` (the least degree in `I`) if no level is the unit ideal.
#[derive(Clone)]
pub struct PartialElimLadder<F> {
    pub source: GroebnerBasis<F>,
    pub levels: Vec<Level<F>>,
    /// First `i` with `K_i = R̄`.
    pub stabilization: Option<u32>,
    pub beta: u32,
}

impl<F: Field> std::fmt::Debug for PartialElimLadder<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut d = f.debug_map();
        for l in &self.levels {
            d.entry(&l.index, &l.initial);
        }
        d.finish()
    }
}

impl<F: Field> PartialElimLadder<F> {
    /// Builds the ladder from a reduced graded-lex basis of `I`.
    pub fn from_basis(gb: &GroebnerBasis<F>) -> Result<Self> {
        require_glex(gb)?;
        let n = gb.nvars() - 1;
        let split = split_basis(gb)?;
        let beta = gb.min_degree().unwrap_or(0);
        let mut levels = Vec::new();
        let mut stabilization = None;
        if gb.is_empty() {
            return Ok(PartialElimLadder {
                source: gb.clone(),
                levels,
                stabilization,
                beta,
            });
        }
        for i in 0..=beta {
            let gens = split.iter().filter(|(d, _)| *d <= i).map(|(_, p)| p.clone()).collect();
            let (ideal, basis) = certified_basis(n, gens)?;
            let initial = basis.initial_ideal();
            let hilbert = initial.hilbert_data()?;
            let unit = basis.is_unit();
            levels.push(Level {
                index: i,
                ideal,
                basis,
                initial,
                hilbert,
            });
            if unit {
                stabilization = Some(i);
                break;
            }
        }
        Ok(PartialElimLadder {
            source: gb.clone(),
            levels,
            stabilization,
            beta,
        })
    }

    pub fn from_ideal(ideal: &Ideal<F>) -> Result<Self> {
        Self::from_basis(&buchberger(ideal, GLEX)?)
    }

    /// Level `i`; levels past the computed range repeat the last one.
    pub fn level(&self, i: u32) -> Option<&Level<F>> {
        self.levels.get(i as usize).or(self.levels.last())
    }

    /// Runs the generic recipe at every level and checks it against the general one.
    pub fn certify_generic(&self) -> Result<()> {
        for l in &self.levels {
            let slice = generic_from_basis(&self.source, l.index)?;
            if buchberger(&slice, GLEX)? != l.basis {
                return Err(Error::RecipeMismatch { level: l.index });
            }
        }
        Ok(())
    }

    /// Whether every `in(K_i)` is Borel-fixed.
    pub fn all_borel_fixed(&self) -> bool {
        self.levels.iter().all(|l| l.initial.is_borel_fixed())
    }

    /// Generators of each `K_i` reduce to zero modulo the basis of `K_{i+1}`.
    pub fn chain_holds(&self) -> Result<bool> {
        for w in self.levels.windows(2) {
            for g in w[0].ideal.generators() {
                if !w[1].basis.contains(g)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `Σ_i H(R̄/K_i, m - i)`.
    pub fn decomposition_sum(&self, m: u32) -> u128 {
        (0..=m)
            .map(|i| match self.level(i) {
                Some(l) => l.initial.hilbert_function(m - i),
                None => 0,
            })
            .sum()
    }

    /// Degree of the locus cut out by `K_i`: 0 when it is empty (unit or
    /// irrelevant ideal), otherwise the projective degree of `R̄/K_i`.
    pub fn locus_degree(&self, i: u32) -> u128 {
        match self.level(i) {
            None => 0,
            Some(l) if l.hilbert.dimension == 0 => 0,
            Some(l) => l.hilbert.degree,
        }
    }

    /// `max_i (M(K_i) + i)` over the non-zero levels.
    pub fn m_via_ladder(&self) -> u32 {
        self.levels
            .iter()
            .filter_map(|l| l.m().map(|m| m + l.index))
            .max()
            .unwrap_or(0)
    }

    /// Whether `K_i` equals its saturation by the irrelevant ideal of `R̄`.
    pub fn is_saturated(&self, i: u32) -> Result<bool> {
        let Some(l) = self.level(i) else {
            return Ok(true);
        };
        if l.is_zero() || l.is_unit() {
            return Ok(true);
        }
        let n = l.ideal.nvars();
        let irrelevant = Ideal::new(n, (0..n).map(|v| Polynomial::var(n, GLEX, v)).collect())?;
        let q = quotient_by_ideal(&l.ideal, &irrelevant)?;
        Ok(buchberger(&q, GLEX)? == l.basis)
    }
}

/// `H(R/I, m) = Σ_i H(R̄/K_i, m - i)`. The left side is computed by the
/// linear-algebra oracle on `ideal`, which may be in any coordinates since
/// Hilbert functions do not depend on them.
pub fn decomposition_check<F: Field>(ideal: &Ideal<F>, ladder: &PartialElimLadder<F>, m: u32) -> bool {
    oracle_hilbert_function(ideal, m) == ladder.decomposition_sum(m)
}

/// `max_i (M(K_i) + i)` for an ideal in generic coordinates.
pub fn m_via_ladder<F: Field>(ideal: &Ideal<F>) -> Result<u32> {
    Ok(PartialElimLadder::from_ideal(ideal)?.m_via_ladder())
}
