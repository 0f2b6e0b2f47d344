//! Exact scalars: arbitrary-precision integers, reduced rationals, and the
//! handful of combinatorial helpers (factorial, binomial, harmonic numbers)
//! the rest of the crate is built from.
//!
//! Rendering is `num/den` with the denominator dropped when it is 1 and the
//! sign carried by the numerator, e.g. `-1/3`, `0`, `7`. Every CLI and
//! report string goes through [`Rational`]'s `Display`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Integer = BigInt;

/// A fully reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in lowest terms. Fails on a zero denominator.
    pub fn new(num: impl Into<Integer>, den: impl Into<Integer>) -> Result<Self, Error> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<Integer>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power with `0^0 = 1`. Negative exponents invert first, so
    /// `0^(-k)` for `k > 0` is a division by zero.
    pub fn pow(&self, exp: i64) -> Result<Self, Error> {
        if exp == 0 {
            return Ok(Rational::one());
        }
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let e = exp.unsigned_abs();
        let e = u32::try_from(e).map_err(|_| Error::Precondition(format!("exponent {exp} too large")))?;
        Ok(Rational(num_traits::pow::Pow::pow(&base.0, e)))
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
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

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: Integer = n.trim().parse().map_err(|_| bad())?;
                let d: Integer = d.trim().parse().map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => {
                let n: Integer = s.parse().map_err(|_| bad())?;
                Ok(Rational::from_integer(n))
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);
// Panics on a zero divisor, like integer division; use `checked_div` when
// the divisor is not known to be nonzero.
forward_binop!(Div, div, /);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
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
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.0.numer() == Integer::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(Integer::from(*other)))
    }
}

/// Shorthand for `Rational::new(num, den).unwrap()` in code where the
/// denominator is a nonzero literal.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num, den).expect("nonzero literal denominator")
}

/// `n!`.
pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Integer::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i) * (n - i) / (i + 1) = C(n, i + 1)
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: u64) -> Rational {
    (1..=n as i64).map(|j| ratio(1, j)).sum()
}

/// `(-1)^k` as a rational.
pub fn sign(k: u64) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `base^exp` for a nonnegative integer exponent, `0^0 = 1`.
pub fn ipow(base: i64, exp: u64) -> Integer {
    num_traits::pow::Pow::pow(Integer::from(base), exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer as _;
    use proptest::prelude::*;

    fn assert_canonical(r: &Rational) {
        assert!(r.denom().is_positive(), "{r:?} has non-positive denominator");
        assert!(r.numer().gcd(r.denom()).is_one(), "{r:?} not reduced");
    }

    #[test]
    fn construction_normalizes() {
        assert_eq!(Rational::new(1, 2).unwrap().to_string(), "1/2");
        assert_eq!(Rational::new(2, -4).unwrap().to_string(), "-1/2");
        let z = Rational::new(0, 7).unwrap();
        assert_eq!(z.to_string(), "0");
        assert!(z.denom().is_one());
        assert!(matches!(Rational::new(3, 0), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn rendering() {
        assert_eq!(ratio(-1, 3).to_string(), "-1/3");
        assert_eq!(ratio(7, 1).to_string(), "7");
        assert_eq!(ratio(14, 2).to_string(), "7");
    }

    #[test]
    fn parse() {
        assert_eq!("-1/3".parse::<Rational>().unwrap(), ratio(-1, 3));
        assert_eq!("6/-4".parse::<Rational>().unwrap(), ratio(-3, 2));
        assert_eq!("42".parse::<Rational>().unwrap(), ratio(42, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), Integer::from(1));
        assert_eq!(factorial(5), Integer::from(120));
        assert_eq!(factorial(12), Integer::from(479001600u64));
        for n in 1..40u64 {
            assert_eq!(factorial(n), factorial(n - 1) * n);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), Integer::from(6));
        assert_eq!(binomial(5, 7), Integer::zero());
        assert_eq!(binomial(5, -1), Integer::zero());
        for n in 0..30 {
            assert_eq!(binomial(n, 0), Integer::one());
        }
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic(0), Rational::zero());
        assert_eq!(harmonic(1), Rational::one());
        // 1 + 1/2 + 1/3 + 1/4 = 12/12 + 6/12 + 4/12 + 3/12
        assert_eq!(harmonic(4), ratio(25, 12));
        for n in 1..60u64 {
            assert_eq!(harmonic(n) - harmonic(n - 1), ratio(1, n as i64));
        }
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(Rational::zero().pow(0).unwrap(), Rational::one());
        assert_eq!(ipow(0, 0), Integer::one());
        assert_eq!(ipow(0, 3), Integer::zero());
        assert!(Rational::zero().pow(-1).is_err());
        assert_eq!(ratio(2, 3).pow(-2).unwrap(), ratio(9, 4));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(ratio(1, 2).checked_div(&Rational::zero()).is_err());
        assert!(Rational::zero().recip().is_err());
    }

    proptest! {
        #[test]
        fn arithmetic_stays_canonical(a in -500i64..500, b in 1i64..500, c in -500i64..500, d in 1i64..500) {
            let x = Rational::new(a, b).unwrap();
            let y = Rational::new(c, d).unwrap();
            assert_canonical(&x);
            assert_canonical(&(&x + &y));
            assert_canonical(&(&x - &y));
            assert_canonical(&(&x * &y));
            assert_canonical(&-&x);
            if !y.is_zero() {
                let q = x.checked_div(&y).unwrap();
                assert_canonical(&q);
                prop_assert_eq!(&q * &y, x.clone());
            }
            let back: Rational = x.to_string().parse().unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn pascal_rule(n in 1u64..80, k in 1i64..80) {
            prop_assume!(k as u64 <= n);
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}
