//! Exact coefficient fields.
//!
//! Every algorithm in the crate is generic over [`Field`]. Two families are
//! provided: the prime fields [`Fp`] (one type per modulus, fixed at compile
//! time) and the rationals, [`Rational`].

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Rem, Sub, SubAssign};

use dashu_base::{BitTest, Gcd, UnsignedAbs};
use dashu_int::{IBig, UBig};
use num_traits::{Num, One, Zero};

/// An exact field usable as a polynomial coefficient domain.
pub trait Field:
    Clone + Debug + Display + PartialEq + Eq + Hash + Send + Sync + 'static + Num + Neg<Output = Self>
{
    /// Characteristic of the field (0 for the rationals).
    fn characteristic() -> u64;

    /// Short name used in file headers and reports, e.g. `gf 32003` or `qq`.
    fn descriptor() -> String;

    fn from_i64(v: i64) -> Self;

    /// Image of an arbitrary integer given in decimal notation.
    fn from_decimal(digits: &str) -> Option<Self>;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// `self -= c * b`
    fn sub_mul_assign(&mut self, c: &Self, b: &Self) {
        let prod = c.clone() * b.clone();
        let cur = std::mem::replace(self, Self::zero());
        *self = cur - prod;
    }

    /// Rough size of the element in machine words; used only for pivot choices.
    fn weight(&self) -> usize {
        1
    }

    /// A scalar that turns `coeffs` into coprime integers; one for prime fields.
    fn integral_scale(_coeffs: &[Self]) -> Self {
        Self::one()
    }
}

const fn is_odd_prime(p: u32) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Element of GF(P), stored as its canonical representative in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    const CHECK: () = assert!(is_odd_prime(P), "modulus must be an odd prime");

    pub const MODULUS: u32 = P;

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp((v % P as u64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P as u64;
            }
            base = base * base % P as u64;
            e >>= 1;
        }
        Fp(acc as u32)
    }
}

impl<const P: u32> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Prints the symmetric representative, so `-1` reads as `-1` rather than `P-1`.
impl<const P: u32> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 > P / 2 {
            write!(f, "-{}", P - self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        if self.0 >= rhs.0 {
            Fp(self.0 - rhs.0)
        } else {
            Fp(self.0 + P - rhs.0)
        }
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in GF(p)")
    }
}

impl<const P: u32> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "remainder by zero in GF(p)");
        Fp(0)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u32> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u32> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u32> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u32> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let mut acc = 0u64;
        for ch in body.chars() {
            let d = ch.to_digit(radix).ok_or_else(|| "x".parse::<u32>().unwrap_err())? as u64;
            acc = (acc * radix as u64 + d) % P as u64;
        }
        if body.is_empty() {
            return Err("".parse::<u32>().unwrap_err());
        }
        let v = Fp::new(acc);
        Ok(if neg { -v } else { v })
    }
}

impl<const P: u32> Field for Fp<P> {
    fn characteristic() -> u64 {
        P as u64
    }

    fn descriptor() -> String {
        format!("gf {}", P)
    }

    fn from_i64(v: i64) -> Self {
        let r = v.rem_euclid(P as i64);
        Fp::new(r as u64)
    }

    fn from_decimal(digits: &str) -> Option<Self> {
        Self::from_str_radix(digits, 10).ok()
    }

    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P as u64 - 2))
        }
    }

    #[inline]
    fn sub_mul_assign(&mut self, c: &Self, b: &Self) {
        *self -= *c * *b;
    }
}

/// The rational numbers, always kept in lowest terms with positive denominator.
pub type Rational = dashu_ratio::RBig;

impl Field for Rational {
    fn characteristic() -> u64 {
        0
    }

    fn descriptor() -> String {
        "qq".to_string()
    }

    fn from_i64(v: i64) -> Self {
        Rational::from(v)
    }

    fn from_decimal(digits: &str) -> Option<Self> {
        IBig::from_str_radix(digits, 10).ok().map(Rational::from)
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational::ONE / self)
        }
    }

    fn sub_mul_assign(&mut self, c: &Self, b: &Self) {
        *self -= c * b;
    }

    fn weight(&self) -> usize {
        let bits = self.numerator().bit_len() + self.denominator().bit_len();
        1 + bits / 64
    }

    fn integral_scale(coeffs: &[Self]) -> Self {
        let mut den = UBig::ONE;
        let mut num = UBig::ZERO;
        for c in coeffs {
            let d = c.denominator();
            den = &den / (&den).gcd(d) * d;
            num = (&num).gcd(c.numerator().unsigned_abs());
        }
        if num.is_zero() {
            return Rational::ONE;
        }
        Rational::from_parts(IBig::from(den), num)
    }
}

pub type Gf32003 = Fp<32003>;

/// Field selected at run time, e.g. from an ideal file header.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Prime(u32),
    Rational,
}

/// Primes for which a prime-field type is compiled in.
pub const SUPPORTED_PRIMES: &[u32] = &[
    3,
    5,
    7,
    11,
    13,
    101,
    1009,
    7919,
    10007,
    32003,
    65521,
    1_000_003,
    2_147_483_647,
];

impl FieldChoice {
    pub fn is_supported(self) -> bool {
        match self {
            FieldChoice::Rational => true,
            FieldChoice::Prime(p) => SUPPORTED_PRIMES.contains(&p),
        }
    }
}

impl Default for FieldChoice {
    fn default() -> Self {
        FieldChoice::Prime(32003)
    }
}

impl Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Prime(p) => write!(f, "gf {}", p),
            FieldChoice::Rational => write!(f, "qq"),
        }
    }
}

/// Runs `$body` with the type alias `$F` bound to the field named by `$choice`.
/// Evaluates `$unsupported` for primes without a compiled-in field type.
#[macro_export]
macro_rules! with_field {
    ($choice:expr, $F:ident => $body:expr, unsupported => $unsupported:expr) => {
        match $choice {
            $crate::field::FieldChoice::Rational => {
                type $F = $crate::field::Rational;
                $body
            }
            $crate::field::FieldChoice::Prime(p) => $crate::with_field!(@prime p, $F => $body, $unsupported,
                3, 5, 7, 11, 13, 101, 1009, 7919, 10007, 32003, 65521, 1_000_003, 2_147_483_647),
        }
    };
    (@prime $p:ident, $F:ident => $body:expr, $unsupported:expr, $($q:literal),*) => {
        match $p {
            $($q => {
                type $F = $crate::field::Fp<$q>;
                $body
            })*
            _ => $unsupported,
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type F = Gf32003;

    #[test]
    fn canonical_representatives() {
        assert_eq!(F::from_i64(-1).value(), 32002);
        assert_eq!(F::from_i64(32003).value(), 0);
        assert_eq!(F::from_decimal("-32004").unwrap(), F::from_i64(-1));
        assert_eq!(F::from_i64(-5).to_string(), "-5");
    }

    #[test]
    fn rationals_lowest_terms() {
        let a = Rational::from_parts_signed(IBig::from(6), IBig::from(-4));
        assert_eq!(a.numerator(), &IBig::from(-3));
        assert_eq!(*a.denominator(), dashu_int::UBig::from(2u8));
        assert_eq!(
            a.inverse().unwrap(),
            Rational::from_parts_signed(IBig::from(-2), IBig::from(3))
        );
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(Rational::from_decimal("-12").unwrap(), Rational::from_i64(-12));
        assert!(Rational::zero().inverse().is_none());
    }

    #[test]
    fn dispatch_macro() {
        let c = with_field!(FieldChoice::Prime(101), K => K::characteristic(), unsupported => 0);
        assert_eq!(c, 101);
        let c = with_field!(FieldChoice::Prime(103), K => K::characteristic(), unsupported => 1);
        assert_eq!(c, 1);
    }

    proptest! {
        #[test]
        fn inverse_roundtrip(v in 1u64..32003) {
            let a = F::new(v);
            prop_assert_eq!(a * a.inverse().unwrap(), F::one());
        }

        #[test]
        fn distributive(a in 0u64..32003, b in 0u64..32003, c in 0u64..32003) {
            let (a, b, c) = (F::new(a), F::new(b), F::new(c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            let mut d = a;
            d.sub_mul_assign(&b, &c);
            prop_assert_eq!(d, a - b * c);
        }
    }
}
