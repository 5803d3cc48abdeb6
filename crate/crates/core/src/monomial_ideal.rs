//! Monomial ideals: minimal generators, Borel-fixedness and Hilbert data.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::field::Rational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{count_monomials, Monomial, TermOrder};

/// A monomial ideal stored by its unique minimal generating set, sorted
/// ascending in graded lex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Drops every monomial divisible by another one in the set.
pub fn minimal_generators(nvars: usize, monomials: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
    MonomialIdeal::new(nvars, monomials.into_iter().collect())
}

impl MonomialIdeal {
    pub fn new(nvars: usize, mut monos: Vec<Monomial>) -> Self {
        assert!(
            monos.iter().all(|m| m.nvars() == nvars),
            "monomial from a different ring"
        );
        monos.sort_by(|a, b| TermOrder::GradedLex.compare(a, b));
        monos.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(monos.len());
        // ascending degree: a divisor always precedes its multiples
        for m in monos {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        MonomialIdeal { nvars, gens }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    /// Characteristic-zero Borel test: `m * x_i / x_j` stays in the ideal for
    /// every generator `m`, every `x_j | m` and every `i < j`.
    pub fn is_borel_fixed(&self) -> bool {
        self.gens.iter().all(|m| {
            (0..self.nvars).all(|j| {
                m.exponent(j) == 0
                    || (0..j).all(|i| {
                        let moved = m.with_exponent(j, m.exponent(j) - 1);
                        let moved = moved.with_exponent(i, moved.exponent(i) + 1);
                        self.contains(&moved)
                    })
            })
        })
    }

    /// Regularity of a Borel-fixed ideal: the largest degree of a minimal generator.
    pub fn regularity_borel(&self) -> Result<u32> {
        if !self.is_borel_fixed() {
            return Err(Error::NotBorelFixed);
        }
        Ok(self.max_degree().unwrap_or(0))
    }

    /// `{ m / x0^i : m minimal generator with x0-exponent exactly i }`, in the
    /// ring without `x0`.
    pub fn x0_slice(&self, i: u32) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .filter(|m| m.exponent(0) == i)
            .map(|m| m.remove_var(0))
            .collect();
        MonomialIdeal::new(self.nvars - 1, gens)
    }

    /// Order-preserving rename onto a ring where these variables sit at `offset..`.
    pub fn embed(&self, nvars: usize, offset: usize) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|m| {
                let mut e = vec![0u32; nvars];
                e[offset..offset + self.nvars].copy_from_slice(m.exponents());
                Monomial::from_slice(&e)
            })
            .collect();
        MonomialIdeal::new(nvars, gens)
    }

    /// Canonical generator strings, sorted descending in pure lex.
    pub fn canonical_strings(&self) -> Vec<String> {
        let mut g = self.gens.clone();
        g.sort_by(|a, b| b.exponents().cmp(a.exponents()));
        g.iter().map(|m| m.canonical()).collect()
    }

    /// Numerator `N(t)` of the Hilbert series `N(t) / (1-t)^n` of `R/J`.
    pub fn hilbert_numerator(&self) -> Vec<i128> {
        let mut memo = HashMap::new();
        let mut n = numerator(&self.gens, &mut memo);
        while n.last() == Some(&0) {
            n.pop();
        }
        n
    }

    /// `H(R/J, m)`.
    pub fn hilbert_function(&self, m: u32) -> u128 {
        hilbert_from_numerator(&self.hilbert_numerator(), self.nvars, m)
    }

    /// `H(R/J, m)` by listing monomials of degree `m` outside `J`.
    pub fn hilbert_function_by_counting(&self, m: u32) -> u128 {
        crate::monomial::monomials_of_degree(self.nvars, m)
            .iter()
            .filter(|u| !self.contains(u))
            .count() as u128
    }

    pub fn hilbert_data(&self) -> Result<HilbertData> {
        HilbertData::of(self)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.canonical_strings().join(", "))
    }
}

pub fn is_borel_fixed(j: &MonomialIdeal) -> bool {
    j.is_borel_fixed()
}

pub fn regularity_borel(j: &MonomialIdeal) -> Result<u32> {
    j.regularity_borel()
}

pub fn hilbert_function(j: &MonomialIdeal, m: u32) -> u128 {
    j.hilbert_function(m)
}

pub fn hilbert_polynomial(j: &MonomialIdeal) -> Result<HilbertData> {
    j.hilbert_data()
}

fn poly_sub_shift(a: &[i128], b: &[i128], shift: usize) -> Vec<i128> {
    let len = a.len().max(b.len() + shift);
    let mut out = vec![0i128; len];
    out[..a.len()].copy_from_slice(a);
    for (k, v) in b.iter().enumerate() {
        out[k + shift] -= v;
    }
    out
}

/// Splitting recursion `N(<J', u>) = N(J') - t^deg(u) N(J' : u)`, memoized on the generator set.
fn numerator(gens: &[Monomial], memo: &mut HashMap<Vec<Monomial>, Vec<i128>>) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    if let Some(v) = memo.get(gens) {
        return v.clone();
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    let result = if pairwise_coprime {
        let mut acc = vec![1i128];
        for g in gens {
            acc = poly_sub_shift(&acc, &acc, g.degree() as usize);
        }
        acc
    } else {
        // split off the generator of largest degree
        let (last, rest) = gens.split_last().expect("nonempty");
        let nvars = last.nvars();
        let colon = MonomialIdeal::new(nvars, rest.iter().map(|g| g.colon(last)).collect());
        let a = numerator(rest, memo);
        let b = numerator(&colon.gens, memo);
        poly_sub_shift(&a, &b, last.degree() as usize)
    };
    memo.insert(gens.to_vec(), result.clone());
    result
}

fn hilbert_from_numerator(num: &[i128], nvars: usize, m: u32) -> u128 {
    let mut acc: i128 = 0;
    for (k, &c) in num.iter().enumerate() {
        if c == 0 || k as u32 > m {
            continue;
        }
        acc += c * count_monomials(nvars, m - k as u32) as i128;
    }
    assert!(acc >= 0, "negative Hilbert function value");
    acc as u128
}

/// Hilbert function samples, Hilbert polynomial and derived invariants of `R/J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// `H(R/J, m)` for `m` up to the end of the validation window.
    pub values: BTreeMap<u32, u128>,
    /// Coefficients of `P(z)`, lowest degree first; empty for the zero polynomial.
    pub polynomial: Vec<Rational>,
    /// Smallest `m0` with `H(m) = P(m)` for all `m >= m0`.
    pub regularity: u32,
    /// Krull dimension of `R/J`.
    pub dimension: u32,
    /// Multiplicity of `R/J` (projective degree; length when Artinian).
    pub degree: u128,
}

const INTERPOLATION_ROUNDS: u32 = 12;

impl HilbertData {
    fn of(j: &MonomialIdeal) -> Result<Self> {
        let n = j.nvars;
        let num = j.hilbert_numerator();
        let h = |m: u32| hilbert_from_numerator(&num, n, m);
        // H agrees with a polynomial from degree deg(N) - n + 1 on
        let stable_from = (num.len() as i64 - n as i64).max(0) as u32;
        let mut start = j.max_degree().unwrap_or(0).max(stable_from);
        let window = n as u32 + 1;
        let mut values = BTreeMap::new();
        for round in 0..INTERPOLATION_ROUNDS {
            let xs: Vec<u32> = (start..=start + window).collect();
            let ys: Vec<u128> = xs.iter().map(|&x| h(x)).collect();
            let poly = interpolate(&xs, &ys);
            let checks = [start + window + 1, start + window + 2];
            if checks.iter().all(|&x| eval(&poly, x) == Rational::from(h(x))) {
                for m in 0..=start + window + 2 {
                    values.insert(m, h(m));
                }
                let mut regularity = start;
                while regularity > 0 && eval(&poly, regularity - 1) == Rational::from(h(regularity - 1)) {
                    regularity -= 1;
                }
                let (dimension, degree) = if poly.is_empty() {
                    let length = (0..start).map(&h).sum::<u128>();
                    (0, length)
                } else {
                    let d = poly.len() - 1;
                    let mut lead = poly[d].clone();
                    for k in 1..=d {
                        lead *= Rational::from(k);
                    }
                    let degree = Some(lead)
                        .filter(|l| l.is_int())
                        .and_then(|l| u128::try_from(l.numerator().clone()).ok())
                        .ok_or_else(|| Error::Invalid("non-integral multiplicity".into()))?;
                    (d as u32 + 1, degree)
                };
                return Ok(HilbertData {
                    values,
                    polynomial: poly,
                    regularity,
                    dimension,
                    degree,
                });
            }
            start += window + 1 + round;
        }
        Err(Error::ResourceCap("Hilbert polynomial window did not stabilize".into()))
    }

    /// `P(m)`.
    pub fn eval(&self, m: i64) -> Rational {
        eval_signed(&self.polynomial, m)
    }

    /// Degree of `P`, `-1` for the zero polynomial.
    pub fn polynomial_degree(&self) -> i64 {
        self.polynomial.len() as i64 - 1
    }

    /// `P` as text in the variable `z`.
    pub fn polynomial_string(&self) -> String {
        if self.polynomial.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.polynomial.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let coeff = if mag.is_one() && k > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var = match k {
                0 => String::new(),
                1 => "z".into(),
                _ => format!("z^{}", k),
            };
            let body = match (coeff.is_empty(), var.is_empty()) {
                (true, _) => var,
                (false, true) => coeff,
                (false, false) => format!("{}*{}", coeff, var),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            parts.push((sign, body));
        }
        let mut out = String::new();
        for (i, (sign, body)) in parts.iter().enumerate() {
            if i == 0 {
                if *sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {} ", sign));
            }
            out.push_str(body);
        }
        out
    }
}

fn eval(poly: &[Rational], x: u32) -> Rational {
    eval_signed(poly, x as i64)
}

fn eval_signed(poly: &[Rational], x: i64) -> Rational {
    let x = Rational::from(x);
    poly.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x.clone() + c.clone())
}

/// Lagrange interpolation with exact rationals; trailing zero coefficients are trimmed.
fn interpolate(xs: &[u32], ys: &[u128]) -> Vec<Rational> {
    let n = xs.len();
    let mut coeffs = vec![Rational::zero(); n];
    for i in 0..n {
        // basis polynomial prod_{j != i} (z - x_j) / (x_i - x_j)
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for j in 0..n {
            if i == j {
                continue;
            }
            let xj = Rational::from(xs[j]);
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c.clone();
                next[k] -= c.clone() * xj.clone();
            }
            basis = next;
            denom *= Rational::from(xs[i] as i64 - xs[j] as i64);
        }
        let scale = Rational::from(ys[i]) / denom;
        for (k, c) in basis.into_iter().enumerate() {
            coeffs[k] += c * scale.clone();
        }
    }
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

impl PartialOrd for MonomialIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonomialIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_strings().cmp(&other.canonical_strings())
    }
}
