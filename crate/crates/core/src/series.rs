//! Truncated Laurent series in `t` over [`Rational`].
//!
//! A [`LaurentSeries`] is known modulo `t^order`: every exponent below
//! `order` is represented (implicitly zero when not stored) and nothing at or
//! above it is. Binary operations compute the tightest order the inputs
//! justify, and the valuation is re-tightened after every operation, so a
//! vanishing principal part shows up as `valuation() >= 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::numerics::{factorial, Rational};
use crate::poly::Polynomial;

/// Default working order for generating-function computations.
pub const DEFAULT_ORDER: i64 = 32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    /// Exponent of `coeffs[0]`. For the zero series this equals `order`.
    val: i64,
    coeffs: Vec<Rational>,
    order: i64,
}

impl LaurentSeries {
    /// `Σ coeffs[i] t^(val+i) + O(t^order)`. Terms at or above `order` are
    /// dropped; leading and trailing zeros are trimmed.
    pub fn new(val: i64, mut coeffs: Vec<Rational>, order: i64) -> Self {
        let keep = (order - val).clamp(0, coeffs.len() as i64) as usize;
        coeffs.truncate(keep);
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return LaurentSeries::zero(order);
        }
        coeffs.drain(..lead);
        LaurentSeries {
            val: val + lead as i64,
            coeffs,
            order,
        }
    }

    /// `0 + O(t^order)`.
    pub fn zero(order: i64) -> Self {
        LaurentSeries {
            val: order,
            coeffs: Vec::new(),
            order,
        }
    }

    pub fn one(order: i64) -> Self {
        LaurentSeries::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: i64) -> Self {
        LaurentSeries::monomial(c, 0, order)
    }

    /// `c t^e + O(t^order)`.
    pub fn monomial(c: Rational, e: i64, order: i64) -> Self {
        LaurentSeries::new(e, vec![c], order)
    }

    pub fn from_polynomial(p: &Polynomial, order: i64) -> Self {
        LaurentSeries::new(0, p.coeffs().to_vec(), order)
    }

    /// Lowest exponent with a nonzero coefficient; `order` for the zero series.
    pub fn valuation(&self) -> i64 {
        self.val
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Stored coefficients, starting at `t^valuation()`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^e`, or `None` when `e` is beyond the known range.
    pub fn coeff(&self, e: i64) -> Option<Rational> {
        (e < self.order).then(|| self.get(e))
    }

    fn get(&self, e: i64) -> Rational {
        if e < self.val {
            return Rational::zero();
        }
        self.coeffs
            .get((e - self.val) as usize)
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero terms as `(exponent, coefficient)`, lowest first.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.val + i as i64, c))
    }

    /// Lowers the known order to `order` (no-op if already lower).
    pub fn truncate(&self, order: i64) -> Self {
        LaurentSeries::new(self.val, self.coeffs.clone(), order.min(self.order))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            val: self.val + k,
            coeffs: self.coeffs.clone(),
            order: self.order + k,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentSeries::zero(self.order);
        }
        LaurentSeries {
            val: self.val,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            order: self.order,
        }
    }

    /// True when both series agree on every exponent below the smaller order.
    pub fn agrees_with(&self, other: &LaurentSeries) -> bool {
        let top = self.order.min(other.order);
        let low = self.val.min(other.val);
        (low..top).all(|e| self.get(e) == other.get(e))
    }

    /// Multiplicative inverse. The unit part (the series divided by
    /// `t^valuation`) is inverted by the usual triangular recurrence.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let len = (self.order - self.val) as usize;
        let lead_inv = self.coeffs[0].recip()?;
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        out.push(lead_inv.clone());
        for m in 1..len {
            let upper = m.min(self.coeffs.len() - 1);
            let mut acc = Rational::zero();
            for i in 1..=upper {
                acc += &(&self.coeffs[i] * &out[m - i]);
            }
            out.push(-(acc * &lead_inv));
        }
        Ok(LaurentSeries::new(-self.val, out, self.order - 2 * self.val))
    }

    pub fn checked_div(&self, rhs: &LaurentSeries) -> Result<Self, Error> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentSeries::one(self.order - self.val);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Termwise `d/dt`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * Rational::from(self.val + i as i64))
            .collect();
        LaurentSeries::new(self.val - 1, coeffs, self.order - 1)
    }

    /// Antiderivative with zero constant term. Fails if a `t^-1` term is
    /// present, since its integral is not a Laurent series.
    pub fn integrate(&self) -> Result<Self, Error> {
        if !self.get(-1).is_zero() {
            return Err(Error::Precondition(
                "series with a t^-1 term has no Laurent antiderivative".into(),
            ));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let e = self.val + i as i64;
                if e == -1 {
                    Rational::zero()
                } else {
                    c / Rational::from(e + 1)
                }
            })
            .collect();
        Ok(LaurentSeries::new(self.val + 1, coeffs, self.order + 1))
    }

    /// `e^(c t) + O(t^order)`.
    pub fn exp_linear(c: &Rational, order: i64) -> Self {
        let mut coeffs = Vec::with_capacity(order.max(0) as usize);
        let mut term = Rational::one();
        for n in 0..order.max(0) {
            if n > 0 {
                term = term * c / Rational::from(n);
            }
            coeffs.push(term.clone());
        }
        LaurentSeries::new(0, coeffs, order)
    }

    /// `(e^t - 1)^k + O(t^order)`, exact through `t^(order-1)`.
    pub fn em1_pow(k: u32, order: i64) -> Self {
        if k == 0 {
            return LaurentSeries::one(order);
        }
        // e^t - 1 = t * (unit); raising to the k-th power gains k - 1 orders
        let base_order = order - i64::from(k) + 1;
        let em1: Vec<Rational> = (1..base_order.max(1))
            .map(|n| Rational::from(factorial(n as u64)).recip().expect("n! > 0"))
            .collect();
        let base = LaurentSeries::new(1, em1, base_order);
        base.pow(k).truncate(order)
    }

    /// `log(A)` for `A = 1 + O(t)`, as the antiderivative of `A'/A`.
    pub fn log_unit(&self) -> Result<Self, Error> {
        if self.val != 0 || !self.coeffs[0].is_one() {
            return Err(Error::Precondition(
                "log needs a series with constant term 1".into(),
            ));
        }
        let ratio = &self.derivative() * &self.inv()?;
        ratio.integrate()
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        let order = self.order.min(rhs.order);
        let val = self.val.min(rhs.val).min(order);
        let coeffs = (val..order).map(|e| self.get(e) + rhs.get(e)).collect();
        LaurentSeries::new(val, coeffs, order)
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        self + &(-rhs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries {
            val: self.val,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        let order = (self.order + rhs.val).min(rhs.order + self.val);
        let val = self.val + rhs.val;
        if self.is_zero() || rhs.is_zero() || val >= order {
            return LaurentSeries::zero(order);
        }
        let len = (order - val) as usize;
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += &(a * b);
            }
        }
        LaurentSeries::new(val, out, order)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({e},\"{c}\")")?;
        }
        write!(f, "] (mod t^{})", self.order)
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
