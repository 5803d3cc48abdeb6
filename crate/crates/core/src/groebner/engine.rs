//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer–Möller pair criteria.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Polynomial;

use super::dense::{DegreeTable, DenseRow, Ranker};

/// Limits that abort runaway computations with [`Error::ResourceCap`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_basis: usize,
    pub max_degree: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_basis: 10_000,
            max_degree: 60,
        }
    }
}

/// Upper bound on the size of a dense degree slice before falling back to sparse reduction.
const DENSE_LIMIT: usize = 4_000_000;

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Elem<F> {
    poly: Polynomial<F>,
    active: bool,
}

impl<F: Field> Elem<F> {
    fn lm(&self) -> &Monomial {
        self.poly.lm()
    }
}

struct State<F> {
    nvars: usize,
    order: TermOrder,
    caps: Caps,
    elems: Vec<Elem<F>>,
    pairs: Vec<Pair>,
}

impl<F: Field> State<F> {
    fn check_caps(&self, degree: u32) -> Result<()> {
        if self.elems.len() > self.caps.max_basis {
            return Err(Error::ResourceCap(format!(
                "basis size exceeds {}",
                self.caps.max_basis
            )));
        }
        if degree > self.caps.max_degree {
            return Err(Error::ResourceCap(format!(
                "degree {} exceeds cap {}",
                degree, self.caps.max_degree
            )));
        }
        Ok(())
    }

    /// Gebauer–Möller update for a new monic element `h`.
    fn insert(&mut self, h: Polynomial<F>) {
        let hi = self.elems.len();
        let hlm = h.lm().clone();
        let candidates: Vec<Pair> = self
            .elems
            .iter()
            .enumerate()
            .filter(|(_, e)| e.active)
            .map(|(i, e)| Pair {
                i,
                j: hi,
                lcm: e.lm().lcm(&hlm),
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in candidates.iter().enumerate() {
            let coprime = self.elems[p.i].lm().is_coprime(&hlm);
            let blocked =
                candidates[k + 1..].iter().any(|q| q.lcm.divides(&p.lcm)) || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !blocked {
                kept.push(p.clone());
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|p| !self.elems[p.i].lm().is_coprime(&hlm))
            .collect();

        // old pairs made redundant by h
        self.pairs.retain(|p| {
            !(hlm.divides(&p.lcm) && self.elems[p.i].lm().lcm(&hlm) != p.lcm && self.elems[p.j].lm().lcm(&hlm) != p.lcm)
        });
        self.pairs.extend(fresh);

        for e in self.elems.iter_mut() {
            if e.active && hlm.divides(e.lm()) {
                e.active = false;
            }
        }
        self.elems.push(Elem { poly: h, active: true });
    }

    fn sort_key(&self, a: &Pair, b: &Pair) -> Ordering {
        a.lcm
            .degree()
            .cmp(&b.lcm.degree())
            .then_with(|| self.order.compare(&a.lcm, &b.lcm))
            .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
    }
}

/// Reduced Gröbner basis of the polynomials `gens` (monic, inter-reduced).
pub fn buchberger_polys<F: Field>(
    nvars: usize,
    gens: &[Polynomial<F>],
    order: TermOrder,
    caps: Caps,
) -> Result<Vec<Polynomial<F>>> {
    if gens.iter().any(|g| g.nvars() != nvars) {
        return Err(Error::RingMismatch);
    }
    let mut gens: Vec<Polynomial<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.reorder(order).monic())
        .collect();
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    if gens.iter().any(|g| g.lm().is_one()) {
        return Ok(vec![Polynomial::constant(nvars, order, F::one())]);
    }
    gens.sort_by(|a, b| order.compare(a.lm(), b.lm()).then_with(|| a.len().cmp(&b.len())));
    let max_gen_degree = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let homogeneous = order.is_graded() && gens.iter().all(|g| g.is_homogeneous());
    let state = State {
        nvars,
        order,
        caps,
        elems: Vec::new(),
        pairs: Vec::new(),
    };
    if homogeneous {
        let ranker = Ranker::new(nvars, order, caps.max_degree.max(max_gen_degree));
        homogeneous_loop(state, gens, &ranker)
    } else {
        sparse_loop(state, gens)
    }
}

fn homogeneous_loop<F: Field>(
    mut st: State<F>,
    gens: Vec<Polynomial<F>>,
    ranker: &Ranker,
) -> Result<Vec<Polynomial<F>>> {
    let mut pending: Vec<Polynomial<F>> = gens;
    let mut tables: BTreeMap<u32, DegreeTable> = BTreeMap::new();
    loop {
        let next_pair = st.pairs.iter().map(|p| p.lcm.degree()).min();
        let next_gen = pending.iter().filter_map(|g| g.degree()).min();
        let degree = match (next_pair, next_gen) {
            (None, None) => break,
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => a.min(b),
        };
        st.check_caps(degree)?;
        if ranker.count(degree) > DENSE_LIMIT {
            return Err(Error::ResourceCap(format!("degree {} slice too large", degree)));
        }

        let mut batch_pairs: Vec<Pair> = Vec::new();
        st.pairs.retain(|p| {
            if p.lcm.degree() == degree {
                batch_pairs.push(p.clone());
                false
            } else {
                true
            }
        });
        batch_pairs.sort_by(|a, b| st.sort_key(a, b));
        let (batch_gens, rest): (Vec<_>, Vec<_>) = pending.into_iter().partition(|g| g.degree() == Some(degree));
        pending = rest;

        let table = tables.entry(degree).or_insert_with(|| {
            let mut t = DegreeTable::new(ranker, degree);
            fill_divisors(&mut t, &st.elems);
            t
        });

        let len = table.monos.len();
        let mut sources: Vec<DenseRow<F>> = Vec::new();
        for g in &batch_gens {
            let mut row = DenseRow::zeros(len);
            row.add_shifted(ranker, degree, &F::one(), &Monomial::one(st.nvars), g);
            sources.push(row);
        }
        for p in &batch_pairs {
            let (f, g) = (&st.elems[p.i].poly, &st.elems[p.j].poly);
            let a = f.lm().quotient_of(&p.lcm).expect("lcm");
            let b = g.lm().quotient_of(&p.lcm).expect("lcm");
            let mut row = DenseRow::zeros(len);
            row.add_shifted(ranker, degree, &F::one(), &a, f);
            row.sub_shifted(ranker, degree, &F::one(), &b, g);
            sources.push(row);
        }
        for mut row in sources {
            let Some(start) = top_reduce(&mut row, table, &st.elems, ranker) else {
                continue;
            };
            let h = row.to_poly(table, st.nvars, st.order, start).monic();
            let idx = st.elems.len();
            table.divisor[start] = Some(idx);
            st.insert(h);
            st.check_caps(degree)?;
        }
    }
    interreduce_dense(&st, &tables, ranker)
}

fn fill_divisors<F: Field>(table: &mut DegreeTable, elems: &[Elem<F>]) {
    for (k, m) in table.monos.iter().enumerate() {
        table.divisor[k] = elems
            .iter()
            .enumerate()
            .filter(|(_, e)| e.lm().divides(m))
            .min_by_key(|(i, e)| (e.poly.len(), *i))
            .map(|(i, _)| i);
    }
}

/// Top-reduces `row`; returns the index of the surviving leading term, if any.
fn top_reduce<F: Field>(
    row: &mut DenseRow<F>,
    table: &DegreeTable,
    elems: &[Elem<F>],
    ranker: &Ranker,
) -> Option<usize> {
    for k in 0..row.coeffs.len() {
        if row.coeffs[k].is_zero() {
            continue;
        }
        match table.divisor[k] {
            None => return Some(k),
            Some(e) => {
                let g = &elems[e].poly;
                let q = g.lm().quotient_of(&table.monos[k]).expect("divisor");
                let c = row.coeffs[k].clone();
                row.sub_shifted(ranker, table.degree, &c, &q, g);
                debug_assert!(row.coeffs[k].is_zero());
            }
        }
    }
    None
}

fn interreduce_dense<F: Field>(
    st: &State<F>,
    tables: &BTreeMap<u32, DegreeTable>,
    ranker: &Ranker,
) -> Result<Vec<Polynomial<F>>> {
    let minimal: Vec<usize> = minimal_indices(st);
    let mut out = Vec::with_capacity(minimal.len());
    for &i in &minimal {
        let g = &st.elems[i].poly;
        let degree = g.lm().degree();
        let table = tables.get(&degree).expect("table exists for every basis degree");
        let mut row = DenseRow::zeros(table.monos.len());
        row.add_shifted(ranker, degree, &F::one(), &Monomial::one(st.nvars), g);
        let lead = ranker.rank(g.lm());
        for k in lead + 1..row.coeffs.len() {
            if row.coeffs[k].is_zero() {
                continue;
            }
            if let Some(e) = table.divisor[k] {
                let h = &st.elems[e].poly;
                let q = h.lm().quotient_of(&table.monos[k]).expect("divisor");
                let c = row.coeffs[k].clone();
                row.sub_shifted(ranker, degree, &c, &q, h);
            }
        }
        out.push(row.to_poly(table, st.nvars, st.order, lead));
    }
    Ok(out)
}

fn minimal_indices<F: Field>(st: &State<F>) -> Vec<usize> {
    let active: Vec<usize> = (0..st.elems.len()).filter(|&i| st.elems[i].active).collect();
    active
        .iter()
        .copied()
        .filter(|&i| {
            !active.iter().any(|&j| {
                j != i && st.elems[j].lm().divides(st.elems[i].lm()) && (st.elems[j].lm() != st.elems[i].lm() || j < i)
            })
        })
        .collect()
}

fn sparse_top_reduce<F: Field>(mut p: Polynomial<F>, elems: &[Elem<F>]) -> Polynomial<F> {
    while let Some((c, m)) = p.lt().cloned() {
        let Some(e) = elems.iter().filter(|e| e.lm().divides(&m)).min_by_key(|e| e.poly.len()) else {
            break;
        };
        let q = e.lm().quotient_of(&m).expect("divides");
        p = p.sub_mul_term(&c, &q, &e.poly);
    }
    p
}

fn sparse_loop<F: Field>(mut st: State<F>, gens: Vec<Polynomial<F>>) -> Result<Vec<Polynomial<F>>> {
    for g in gens {
        let r = sparse_top_reduce(g, &st.elems);
        if !r.is_zero() {
            if r.lm().is_one() {
                return Ok(vec![Polynomial::constant(st.nvars, st.order, F::one())]);
            }
            st.insert(r.monic());
        }
    }
    while !st.pairs.is_empty() {
        let (k, _) = st
            .pairs
            .iter()
            .enumerate()
            .min_by(|a, b| st.sort_key(a.1, b.1))
            .expect("nonempty");
        let p = st.pairs.swap_remove(k);
        st.check_caps(p.lcm.degree())?;
        let f = &st.elems[p.i].poly;
        let g = &st.elems[p.j].poly;
        let a = f.lm().quotient_of(&p.lcm).expect("lcm");
        let b = g.lm().quotient_of(&p.lcm).expect("lcm");
        let s = f.mul_term(&F::one(), &a).sub_mul_term(&F::one(), &b, g);
        let r = sparse_top_reduce(s, &st.elems);
        if !r.is_zero() {
            if r.lm().is_one() {
                return Ok(vec![Polynomial::constant(st.nvars, st.order, F::one())]);
            }
            st.insert(r.monic());
        }
    }
    let minimal = minimal_indices(&st);
    let basis: Vec<Polynomial<F>> = minimal.iter().map(|&i| st.elems[i].poly.clone()).collect();
    let mut out = Vec::with_capacity(basis.len());
    for (k, g) in basis.iter().enumerate() {
        let others: Vec<Polynomial<F>> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, h)| h.clone())
            .collect();
        let lead = Polynomial::term(st.order, g.lc().clone(), g.lm().clone());
        let tail = g.try_sub(&lead)?;
        let tail = super::normal_form(&tail, &others, st.order)?;
        out.push(lead.try_add(&tail)?.monic());
    }
    Ok(out)
}
