//! Sparse multivariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linear::LinearChange;
use crate::monomial::{default_names, Monomial, TermOrder};

/// A polynomial in `nvars` variables whose terms are kept strictly descending
/// in `order`, with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F> {
    nvars: usize,
    order: TermOrder,
    terms: Vec<(F, Monomial)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize, order: TermOrder) -> Self {
        Polynomial {
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, order: TermOrder, c: F) -> Self {
        Self::term(order, c, Monomial::one(nvars))
    }

    pub fn term(order: TermOrder, c: F, m: Monomial) -> Self {
        let nvars = m.nvars();
        let terms = if c.is_zero() { Vec::new() } else { vec![(c, m)] };
        Polynomial { nvars, order, terms }
    }

    pub fn var(nvars: usize, order: TermOrder, index: usize) -> Self {
        Self::term(order, F::one(), Monomial::var(nvars, index))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and drops zeros.
    pub fn from_terms(nvars: usize, order: TermOrder, terms: Vec<(F, Monomial)>) -> Self {
        let mut acc: FxHashMap<Monomial, F> = FxHashMap::default();
        for (c, m) in terms {
            assert_eq!(m.nvars(), nvars, "monomial from a different ring");
            let slot = acc.entry(m).or_insert_with(F::zero);
            let cur = std::mem::replace(slot, F::zero());
            *slot = cur + c;
        }
        let mut terms: Vec<(F, Monomial)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        Polynomial { nvars, order, terms }
    }

    /// Trusts the caller that `terms` is already canonical for `order`.
    pub(crate) fn from_sorted_terms(nvars: usize, order: TermOrder, terms: Vec<(F, Monomial)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| order.compare(&w[0].1, &w[1].1) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(c, _)| !c.is_zero()));
        Polynomial { nvars, order, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn terms(&self) -> &[(F, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(F, Monomial)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Re-sorts the terms for another order.
    pub fn reorder(&self, order: TermOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        Polynomial {
            nvars: self.nvars,
            order,
            terms,
        }
    }

    /// Leading term under the polynomial's own order.
    pub fn lt(&self) -> Option<&(F, Monomial)> {
        self.terms.first()
    }

    /// Leading monomial under the polynomial's own order; panics on zero.
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].1
    }

    pub fn lc(&self) -> &F {
        &self.terms[0].0
    }

    /// The order-maximal term of `self` for `order`.
    pub fn leading_term(&self, order: TermOrder) -> Result<(F, Monomial)> {
        if self.is_zero() {
            return Err(Error::EmptyPolynomial);
        }
        if order == self.order {
            return Ok(self.terms[0].clone());
        }
        let best = self
            .terms
            .iter()
            .max_by(|a, b| order.compare(&a.1, &b.1))
            .expect("nonzero");
        Ok(best.clone())
    }

    /// Total degree (`None` for the zero polynomial).
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m)) => self.terms.iter().all(|(_, t)| t.degree() == m.degree()),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.terms.first().is_some_and(|(c, _)| c.is_one())
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((c, _)) if c.is_one() => self.clone(),
            Some((c, _)) => {
                let inv = c.inverse().expect("nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, m)| (a.clone() * c.clone(), m.clone()))
            .collect();
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms,
        }
    }

    /// `c * m * self`
    pub fn mul_term(&self, c: &F, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, t)| (a.clone() * c.clone(), t.mul(m)))
            .collect();
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms,
        }
    }

    /// `self - c * m * g`, a single merge pass.
    pub fn sub_mul_term(&self, c: &F, m: &Monomial, g: &Polynomial<F>) -> Self {
        debug_assert_eq!(self.order, g.order);
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gc, gm)| (gc, gm.mul(m))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (gc, gm) = b.next().unwrap();
                    out.push((-(gc.clone() * c.clone()), gm));
                }
                (Some((_, am)), Some((_, bm))) => match order.compare(am, bm) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let (gc, gm) = b.next().unwrap();
                        out.push((-(gc.clone() * c.clone()), gm));
                    }
                    Ordering::Equal => {
                        let (ac, am) = a.next().unwrap().clone();
                        let (gc, _) = b.next().unwrap();
                        let mut v = ac;
                        v.sub_mul_assign(c, gc);
                        if !v.is_zero() {
                            out.push((v, am));
                        }
                    }
                },
            }
        }
        Polynomial {
            nvars: self.nvars,
            order,
            terms: out,
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            Err(Error::RingMismatch)
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let other = other.reorder(self.order);
        let m = Monomial::one(self.nvars);
        Ok(self.sub_mul_term(&(-F::one()), &m, &other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let other = other.reorder(self.order);
        Ok(self.sub_mul_term(&F::one(), &Monomial::one(self.nvars), &other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut acc = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, m) in &self.terms {
            for (b, n) in &other.terms {
                acc.push((a.clone() * b.clone(), m.try_mul(n)?));
            }
        }
        Ok(Self::from_terms(self.nvars, self.order, acc))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.nvars, self.order, F::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms
            .iter()
            .find(|(_, t)| t == m)
            .map(|(c, _)| c.clone())
            .unwrap_or_else(F::zero)
    }

    /// Splits `f = x0^i * fbar + g` where `i` is the `x0`-exponent of the leading
    /// monomial under `order`, `fbar` is free of `x0` and every monomial of `g`
    /// has `x0`-exponent below `i`. `fbar` keeps the ambient variable count.
    pub fn d0_split(&self, order: TermOrder) -> Result<(u32, Self, Self)> {
        let (_, lead) = self.leading_term(order)?;
        let i = lead.exponent(0);
        let mut top = Vec::new();
        let mut rest = Vec::new();
        for (c, m) in &self.terms {
            let e = m.exponent(0);
            if e == i {
                top.push((c.clone(), m.with_exponent(0, 0)));
            } else {
                debug_assert!(e < i, "homogeneous leading term must carry the top x0 power");
                rest.push((c.clone(), m.clone()));
            }
        }
        if rest.iter().any(|(_, m)| m.exponent(0) > i) {
            return Err(Error::Invalid(
                "x0 appears to a higher power than in the leading term".to_string(),
            ));
        }
        Ok((
            i,
            Self::from_terms(self.nvars, order, top),
            Self::from_terms(self.nvars, order, rest),
        ))
    }

    /// Substitutes `x_j -> sum_k M[j][k] x_k`.
    pub fn apply_change(&self, change: &LinearChange<F>) -> Result<Self> {
        if change.dim() != self.nvars {
            return Err(Error::RingMismatch);
        }
        let n = self.nvars;
        let maxdeg = self.degree().unwrap_or(0);
        // powers[j][e] = (image of x_j)^e
        let mut powers: Vec<Vec<Polynomial<F>>> = Vec::with_capacity(n);
        for j in 0..n {
            let lin_terms = (0..n)
                .map(|k| (change.entry(j, k).clone(), Monomial::var(n, k)))
                .collect();
            let lin = Self::from_terms(n, self.order, lin_terms);
            let mut row = vec![Self::constant(n, self.order, F::one())];
            for e in 1..=maxdeg as usize {
                let next = &row[e - 1] * &lin;
                row.push(next);
            }
            powers.push(row);
        }
        let mut acc: FxHashMap<Monomial, F> = FxHashMap::default();
        for (c, m) in &self.terms {
            let mut prod = Self::constant(n, self.order, c.clone());
            for (j, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    prod = &prod * &powers[j][e as usize];
                }
            }
            for (pc, pm) in prod.terms {
                let slot = acc.entry(pm).or_insert_with(F::zero);
                let cur = std::mem::replace(slot, F::zero());
                *slot = cur + pc;
            }
        }
        Ok(Self::from_terms(
            n,
            self.order,
            acc.into_iter().map(|(m, c)| (c, m)).collect(),
        ))
    }

    pub fn evaluate(&self, point: &[F]) -> Result<F> {
        if point.len() != self.nvars {
            return Err(Error::RingMismatch);
        }
        let mut acc = F::zero();
        for (c, m) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(_, m)| m.exponent(var) > 0)
            .map(|(c, m)| {
                let e = m.exponent(var);
                (c.clone() * F::from_i64(e as i64), m.with_exponent(var, e - 1))
            })
            .filter(|(c, _)| !c.is_zero())
            .collect();
        // lowering one exponent preserves the relative order of the survivors
        Self::from_terms_resort(self.nvars, self.order, terms)
    }

    fn from_terms_resort(nvars: usize, order: TermOrder, mut terms: Vec<(F, Monomial)>) -> Self {
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        Polynomial { nvars, order, terms }
    }

    /// Drops variable `var` (its exponent must be zero in every term).
    pub fn remove_var(&self, var: usize) -> Result<Self> {
        if self.terms.iter().any(|(_, m)| m.exponent(var) != 0) {
            return Err(Error::Invalid(format!("variable {} occurs in polynomial", var)));
        }
        let terms = self.terms.iter().map(|(c, m)| (c.clone(), m.remove_var(var))).collect();
        Ok(Self::from_terms_resort(self.nvars - 1, self.order, terms))
    }

    /// Embeds into a ring with one more variable, inserted at position `var`.
    pub fn insert_var(&self, var: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (c.clone(), m.insert_var(var, 0)))
            .collect();
        Self::from_terms_resort(self.nvars + 1, self.order, terms)
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mut e = vec![0u32; self.nvars];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[perm[i]] = x;
                }
                (c.clone(), Monomial::from_slice(&e))
            })
            .collect();
        Self::from_terms_resort(self.nvars, self.order, terms)
    }

    /// Scalar multiple with coprime integer coefficients over the rationals; unchanged over prime fields.
    pub fn integral(&self) -> Self {
        let coeffs: Vec<F> = self.terms.iter().map(|(c, _)| c.clone()).collect();
        self.scale(&F::integral_scale(&coeffs))
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    out.push_str(&mag);
                    out.push('*');
                }
                out.push_str(&m.format_with(names));
            }
        }
        out
    }

    /// Parses the text grammar
    /// `term := [integer][*] factor (* factor)*`, `factor := var | var^nat`,
    /// `polynomial := term ((+|-) term)*`; whitespace is ignored.
    pub fn parse(text: &str, names: &[String], order: TermOrder) -> Result<Self> {
        parse::parse_polynomial(text, names, order)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&default_names(self.nvars)))
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&(-F::one()))
    }
}

/// Free functions mirroring the method API.
pub fn leading_term<F: Field>(f: &Polynomial<F>, order: TermOrder) -> Result<(F, Monomial)> {
    f.leading_term(order)
}

pub fn d0_split<F: Field>(f: &Polynomial<F>, order: TermOrder) -> Result<(u32, Polynomial<F>, Polynomial<F>)> {
    f.d0_split(order)
}

pub fn apply_change<F: Field>(f: &Polynomial<F>, change: &LinearChange<F>) -> Result<Polynomial<F>> {
    f.apply_change(change)
}

mod parse {
    use super::*;

    struct Cursor<'a> {
        chars: Vec<(usize, char)>,
        pos: usize,
        _src: &'a str,
    }

    impl Cursor<'_> {
        fn skip_ws(&mut self) {
            while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
                self.pos += 1;
            }
        }
        fn peek(&mut self) -> Option<char> {
            self.skip_ws();
            self.chars.get(self.pos).map(|c| c.1)
        }
        fn column(&self) -> usize {
            self.chars
                .get(self.pos)
                .map(|c| c.0 + 1)
                .unwrap_or(self.chars.len() + 1)
        }
        fn err(&self, message: impl Into<String>) -> Error {
            Error::Parse {
                line: 1,
                column: self.column(),
                message: message.into(),
            }
        }
        fn digits(&mut self) -> String {
            self.skip_ws();
            let mut s = String::new();
            while let Some(&(_, c)) = self.chars.get(self.pos) {
                if c.is_ascii_digit() {
                    s.push(c);
                    self.pos += 1;
                } else {
                    break;
                }
            }
            s
        }
        fn ident(&mut self) -> String {
            self.skip_ws();
            let mut s = String::new();
            while let Some(&(_, c)) = self.chars.get(self.pos) {
                if c.is_alphanumeric() || c == '_' || c == '\'' {
                    s.push(c);
                    self.pos += 1;
                } else {
                    break;
                }
            }
            s
        }
    }

    fn is_minus(c: char) -> bool {
        c == '-' || c == '\u{2212}'
    }

    pub(super) fn parse_polynomial<F: Field>(text: &str, names: &[String], order: TermOrder) -> Result<Polynomial<F>> {
        let nvars = names.len();
        let mut cur = Cursor {
            chars: text.chars().enumerate().collect(),
            pos: 0,
            _src: text,
        };
        let mut terms: Vec<(F, Monomial)> = Vec::new();
        let mut sign_neg = false;
        match cur.peek() {
            None => return Err(cur.err("empty polynomial")),
            Some(c) if is_minus(c) => {
                sign_neg = true;
                cur.pos += 1;
            }
            Some('+') => cur.pos += 1,
            _ => {}
        }
        loop {
            let (c, m) = parse_term::<F>(&mut cur, names, nvars)?;
            terms.push((if sign_neg { -c } else { c }, m));
            match cur.peek() {
                None => break,
                Some('+') => {
                    sign_neg = false;
                    cur.pos += 1;
                }
                Some(c) if is_minus(c) => {
                    sign_neg = true;
                    cur.pos += 1;
                }
                Some(c) => return Err(cur.err(format!("unexpected `{}`", c))),
            }
        }
        Ok(Polynomial::from_terms(nvars, order, terms))
    }

    fn parse_term<F: Field>(cur: &mut Cursor<'_>, names: &[String], nvars: usize) -> Result<(F, Monomial)> {
        let mut coeff = F::one();
        let mut exps = vec![0u32; nvars];
        if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            let d = cur.digits();
            coeff = F::from_decimal(&d).ok_or_else(|| cur.err("bad integer"))?;
            match cur.peek() {
                Some('*') => cur.pos += 1,
                Some(c) if c.is_alphabetic() => {}
                _ => return Ok((coeff, Monomial::from_slice(&exps))),
            }
        }
        loop {
            match cur.peek() {
                Some(c) if c.is_alphabetic() || c == '_' => {}
                _ => return Err(cur.err("expected a variable")),
            }
            let col = cur.column();
            let name = cur.ident();
            let idx = names
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            let mut e = 1u32;
            if cur.peek() == Some('^') {
                cur.pos += 1;
                let d = cur.digits();
                if d.is_empty() {
                    return Err(cur.err("expected an exponent"));
                }
                e = d.parse::<u32>().map_err(|_| Error::Parse {
                    line: 1,
                    column: col,
                    message: "exponent does not fit a machine word".to_string(),
                })?;
            }
            exps[idx] = exps[idx].checked_add(e).ok_or(Error::ExponentOverflow)?;
            match cur.peek() {
                Some('*') => cur.pos += 1,
                Some(c) if c.is_alphabetic() => {}
                _ => break,
            }
        }
        let m = Monomial::new(smallvec::SmallVec::from_vec(exps))?;
        Ok((coeff, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf32003, Rational};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    type F = Gf32003;
    const GLEX: TermOrder = TermOrder::GradedLex;

    fn p(s: &str) -> Polynomial<F> {
        Polynomial::parse(s, &default_names(4), GLEX).unwrap()
    }

    #[test]
    fn leading_terms() {
        let (c, m) = p("x0^3 - x1*x2^2").leading_term(GLEX).unwrap();
        assert_eq!((c, m.canonical()), (F::one(), "x0^3".to_string()));
        let (_, m) = p("x1^3 - x2^2*x3").leading_term(GLEX).unwrap();
        assert_eq!(m.canonical(), "x1^3");
        let (_, m) = p("x0*x2^2 + x1^3").leading_term(TermOrder::GradedRevLex).unwrap();
        assert_eq!(m.canonical(), "x1^3");
        assert_eq!(
            Polynomial::<F>::zero(4, GLEX).leading_term(GLEX),
            Err(Error::EmptyPolynomial)
        );
    }

    #[test]
    fn d0_split_examples() {
        let (i, fbar, g) = p("x0^2*x1 + x0*x2^2").d0_split(GLEX).unwrap();
        assert_eq!((i, fbar, g), (2, p("x1"), p("x0*x2^2")));

        let f = p("x1^3 - x2^2*x3");
        let (i, fbar, g) = f.d0_split(GLEX).unwrap();
        assert_eq!((i, fbar, g.is_zero()), (0, f, true));

        let (i, fbar, g) = p("x0*x2^2 + x0*x1*x3 + x1^2*x3").d0_split(GLEX).unwrap();
        assert_eq!((i, fbar, g), (1, p("x2^2 + x1*x3"), p("x1^2*x3")));
    }

    #[test]
    fn change_examples() {
        let id = LinearChange::<F>::identity(4);
        assert_eq!(p("x0").apply_change(&id).unwrap(), p("x0"));

        let mut swap = vec![vec![F::zero(); 4]; 4];
        swap[0][1] = F::one();
        swap[1][0] = F::one();
        swap[2][2] = F::one();
        swap[3][3] = F::one();
        let swap = LinearChange::new(swap).unwrap();
        assert_eq!(p("x0^2").apply_change(&swap).unwrap(), p("x1^2"));

        let mut up = vec![vec![F::zero(); 4]; 4];
        for (i, row) in up.iter_mut().enumerate() {
            row[i] = F::one();
        }
        up[0][1] = F::one();
        let up = LinearChange::new(up).unwrap();
        assert_eq!(p("x0*x1").apply_change(&up).unwrap(), p("x0*x1 + x1^2"));
    }

    #[test]
    fn parse_and_format() {
        let f = p("2*x0^2 - x1 x2 ");
        assert!(f.is_err_free());
        assert_eq!(f.to_string(), "2*x0^2 - x1*x2");
        let g = p("3x0 + x1^2");
        assert_eq!(g.to_string(), "x1^2 + 3*x0");
        let names = default_names(2);
        assert!(matches!(
            Polynomial::<F>::parse("x0 + y", &names, GLEX),
            Err(Error::UnknownVariable(_))
        ));
        assert!(matches!(
            Polynomial::<F>::parse("x0 + + x1", &names, GLEX),
            Err(Error::Parse { .. })
        ));
        let q: Polynomial<Rational> = Polynomial::parse("x0 \u{2212} 5*x1", &names, GLEX).unwrap();
        assert_eq!(q.to_string(), "x0 - 5*x1");
    }

    #[test]
    fn homogeneity() {
        assert!(p("x0^2 + x1*x3").is_homogeneous());
        assert!(!p("x0^2 + x1").is_homogeneous());
    }

    impl<F: Field> Polynomial<F> {
        fn is_err_free(&self) -> bool {
            self.terms
                .windows(2)
                .all(|w| self.order.compare(&w[0].1, &w[1].1) == Ordering::Greater)
                && self.terms.iter().all(|(c, _)| !c.is_zero())
        }
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial<F>> {
        proptest::collection::vec((-5i64..6, proptest::collection::vec(0u32..4, 4)), 0..8).prop_map(|ts| {
            Polynomial::from_terms(
                4,
                GLEX,
                ts.into_iter()
                    .map(|(c, e)| (F::from_i64(c), Monomial::from_slice(&e)))
                    .collect(),
            )
        })
    }

    fn arb_homog(d: u32) -> impl Strategy<Value = Polynomial<F>> {
        let monos = crate::monomial::monomials_of_degree(4, d);
        proptest::collection::vec((-5i64..6, 0..monos.len()), 1..8).prop_map(move |ts| {
            Polynomial::from_terms(
                4,
                GLEX,
                ts.into_iter()
                    .map(|(c, i)| (F::from_i64(c), monos[i].clone()))
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn canonical_after_arithmetic(a in arb_poly(), b in arb_poly()) {
            prop_assert!((&a + &b).is_err_free());
            prop_assert!((&a * &b).is_err_free());
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn format_parse_roundtrip(a in arb_poly()) {
            let back = Polynomial::<F>::parse(&a.to_string(), &default_names(4), GLEX).unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn homogeneous_d0_zero_is_x0_free(f in arb_homog(3)) {
            if !f.is_zero() {
                let (i, fbar, g) = f.d0_split(GLEX).unwrap();
                if i == 0 {
                    prop_assert!(f.terms().iter().all(|(_, m)| m.exponent(0) == 0));
                }
                let x0i = Polynomial::term(GLEX, F::one(), Monomial::var(4, 0)).pow(i);
                prop_assert_eq!(&(&x0i * &fbar) + &g, f);
            }
        }

        #[test]
        fn change_then_inverse(f in arb_poly(), seed in 0u64..1000) {
            let m = crate::gin::random_change::<F>(seed, 3, 99);
            let inv = m.inverse();
            let back = f.apply_change(&m).unwrap().apply_change(&inv).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
