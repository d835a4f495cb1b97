//! Exact rational numbers and polynomials in the genus symbol `g`.
//!
//! Nothing in this crate touches floating point. The only path from a
//! [`Rational`] to a decimal string is [`Rational::to_decimal`], which is
//! display-only.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// `n/d` for small literals. Panics on `d == 0`; use [`Rational::new`]
    /// for untrusted input.
    pub fn frac(n: i64, d: i64) -> Self {
        Rational::new(n, d).expect("nonzero literal denominator")
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    pub fn min(self, other: Rational) -> Rational {
        std::cmp::min(self, other)
    }

    pub fn max(self, other: Rational) -> Rational {
        std::cmp::max(self, other)
    }

    /// Decimal expansion cut off after `places` digits, truncating toward
    /// zero: `45045/631` at 4 places is `71.3866`, `-1/3` at 2 is `-0.33`.
    pub fn to_decimal(&self, places: usize) -> String {
        let negative = self.is_negative();
        let num = self.numer().abs();
        let den = self.denom();
        let (whole, mut rem) = num.div_rem(den);
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&whole.to_string());
        if places > 0 {
            out.push('.');
            let ten = BigInt::from(10);
            for _ in 0..places {
                rem *= &ten;
                let (digit, r) = rem.div_rem(den);
                out.push_str(&digit.to_string());
                rem = r;
            }
        }
        out
    }

    /// Lossy, for plotting or sorting in external tools only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedRational(s.to_string());
        let t = s.trim();
        let parse_int = |x: &str| x.trim().parse::<BigInt>().map_err(|_| bad());
        match t.split_once('/') {
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Rational::new(parse_int(n)?, d)
            }
            None => Ok(Rational::integer(parse_int(t)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::integer(n)
            }
        }
    )*};
}
from_int!(i32, i64, u32, u64, usize);

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::integer(n)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: &'b Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
    };
}
binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Largest degree a [`GenusPolynomial`] may reach.
pub const MAX_GENUS_DEGREE: usize = 8;

/// Polynomial in the genus symbol `g` with rational coefficients; index `k`
/// of the coefficient list is the coefficient of `g^k`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct GenusPolynomial {
    coeffs: Vec<Rational>,
}

impl GenusPolynomial {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        let mut p = GenusPolynomial { coeffs };
        p.normalize();
        if let Some(d) = p.degree() {
            if d > MAX_GENUS_DEGREE {
                return Err(Error::DegreeOverflow {
                    degree: d,
                    cap: MAX_GENUS_DEGREE,
                });
            }
        }
        Ok(p)
    }

    /// From integer coefficients, lowest power first.
    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        GenusPolynomial::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        GenusPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = GenusPolynomial { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// The monomial `g`.
    pub fn genus() -> Self {
        GenusPolynomial {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &GenusPolynomial) -> GenusPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).cloned().unwrap_or_default();
                match other.coeffs.get(k) {
                    Some(b) => a + b,
                    None => a,
                }
            })
            .collect();
        let mut p = GenusPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn sub(&self, other: &GenusPolynomial) -> GenusPolynomial {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, c: &Rational) -> GenusPolynomial {
        let mut p = GenusPolynomial {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        };
        p.normalize();
        p
    }

    pub fn mul(&self, other: &GenusPolynomial) -> Result<GenusPolynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(GenusPolynomial::zero());
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        GenusPolynomial::new(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, g: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * g + c)
    }

    pub fn eval_at(&self, g: i64) -> Rational {
        self.eval(&Rational::from(g))
    }
}

impl fmt::Display for GenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == Rational::one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "g")?,
                1 => write!(f, "{mag}g")?,
                _ if unit => write!(f, "g^{k}")?,
                _ => write!(f, "{mag}g^{k}")?,
            }
        }
        Ok(())
    }
}

/// Compares `p` against `f` at every sample genus. When `f` is known to be
/// a polynomial of degree at most `degree_bound` and there are more than
/// `degree_bound` distinct samples, agreement certifies `p == f`
/// identically.
pub fn poly_identity_check<F>(
    p: &GenusPolynomial,
    f: F,
    degree_bound: usize,
    sample_genera: &[i64],
) -> Result<bool>
where
    F: Fn(i64) -> Result<Rational>,
{
    let distinct: BTreeSet<i64> = sample_genera.iter().copied().collect();
    if distinct.len() < degree_bound + 1 {
        return Err(Error::InsufficientSamples {
            needed: degree_bound + 1,
            got: distinct.len(),
        });
    }
    if p.degree().is_some_and(|d| d > degree_bound) {
        return Ok(false);
    }
    for n in distinct {
        if p.eval_at(n) != f(n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Rational::from(*other)))
    }
}
