//! Exponent-vector monomials and the graded term orders.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u32; 8]>;

/// A monomial `x_0^{e_0} ... x_n^{e_n}`, with the total degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: impl Into<Exponents>) -> Result<Self> {
        let exps = exps.into();
        let mut degree = 0u32;
        for &e in &exps {
            degree = degree.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial { exps, degree })
    }

    pub fn from_slice(exps: &[u32]) -> Self {
        Self::new(Exponents::from_slice(exps)).expect("exponent overflow")
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            degree: 0,
        }
    }

    /// The variable `x_index` in a ring with `nvars` variables.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.nvars() != other.nvars() {
            return Err(Error::RingMismatch);
        }
        let mut exps = self.exps.clone();
        for (a, &b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(b).ok_or(Error::ExponentOverflow)?;
        }
        let degree = self.degree.checked_add(other.degree).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps, degree })
    }

    /// Product; panics on exponent overflow instead of wrapping.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.try_mul(other).expect("monomial product overflow")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Exponents = other.exps.iter().zip(self.exps.iter()).map(|(a, b)| a - b).collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// Colon `self : other`, i.e. `lcm(self, other) / other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.saturating_sub(*b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Drop variable `var`, discarding its exponent.
    pub fn remove_var(&self, var: usize) -> Monomial {
        let mut exps = self.exps.clone();
        let e = exps.remove(var);
        Monomial {
            exps,
            degree: self.degree - e,
        }
    }

    /// Insert a new variable at position `var` with exponent `e`.
    pub fn insert_var(&self, var: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps.insert(var, e);
        Monomial {
            exps,
            degree: self.degree + e,
        }
    }

    pub fn with_exponent(&self, var: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        let old = exps[var];
        exps[var] = e;
        Monomial {
            exps,
            degree: self.degree - old + e,
        }
    }

    /// Canonical text form with the given variable names, e.g. `x0*x2^12`.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }

    /// Canonical form with default names `x0, x1, ...`.
    pub fn canonical(&self) -> String {
        self.format_with(&default_names(self.nvars()))
    }
}

pub fn default_names(nvars: usize) -> Vec<String> {
    (0..nvars).map(|i| format!("x{}", i)).collect()
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical())
    }
}

/// Term orders with precedence `x_0 > x_1 > ... > x_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TermOrder {
    /// Degree first, ties broken by the first differing exponent (larger wins).
    #[default]
    GradedLex,
    /// Degree first, ties broken by the last differing exponent (smaller wins).
    GradedRevLex,
    /// Exponent of `x_0` first, then graded lex on the remaining variables.
    /// Used internally to eliminate an auxiliary variable.
    EliminateFirst,
}

impl TermOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            TermOrder::GradedLex => a.degree.cmp(&b.degree).then_with(|| lex(&a.exps, &b.exps)),
            TermOrder::GradedRevLex => a.degree.cmp(&b.degree).then_with(|| {
                for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            TermOrder::EliminateFirst => a.exps[0].cmp(&b.exps[0]).then_with(|| {
                (a.degree - a.exps[0])
                    .cmp(&(b.degree - b.exps[0]))
                    .then_with(|| lex(&a.exps[1..], &b.exps[1..]))
            }),
        }
    }

    /// Is the order refined by total degree?
    pub fn is_graded(self) -> bool {
        !matches!(self, TermOrder::EliminateFirst)
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::GradedLex => "glex",
            TermOrder::GradedRevLex => "grevlex",
            TermOrder::EliminateFirst => "elim0",
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

/// Checked comparison reporting a ring mismatch for monomials of different length.
pub fn compare_monomials(order: TermOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::RingMismatch);
    }
    Ok(order.compare(a, b))
}

/// All monomials of degree `d` in `nvars` variables, descending in graded lex.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i == n - 1 {
            cur[i] = left;
            out.push(Monomial::from_slice(cur));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// Binomial coefficient over u128, `0` when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn count_monomials(nvars: usize, d: u32) -> u128 {
    if nvars == 0 {
        return u128::from(d == 0);
    }
    binomial(d as u64 + nvars as u64 - 1, nvars as u64 - 1)
}
