//! Bernoulli and p-Bernoulli numbers `B_{n,p}`.
//!
//! Four independent routes compute the same values:
//!
//! * [`Route::Explicit`]: `B_{n,p} = Σ_k (-1)^k {n,k} k! / C(k+p+1, k)`, the
//!   reference implementation.
//! * [`Route::Recurrence`]: the matrix recurrence
//!   `B_{n+1,p} = p B_{n,p} - (p+1)^2/(p+2) B_{n,p+1}` seeded by `B_{0,p} = 1`.
//! * [`Route::Stirling1`]: `B_{n,p} = (p+1)/p! Σ_j (-1)^j [p,j] B_{n+j}`.
//! * [`Route::Egf`]: coefficients of the closed-form generating function
//!   built by [`egf_closed_form`].
//!
//! Bernoulli numbers use the `B_1 = -1/2` convention throughout; it is the
//! one the explicit formula produces at `p = 0`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::Error;
use crate::numerics::{binomial, factorial, harmonic, sign, Rational};
use crate::series::LaurentSeries;
use crate::triangles::{geometric_poly, stirling1_unsigned, stirling2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Explicit,
    Recurrence,
    Stirling1,
    Egf,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::Explicit, Route::Recurrence, Route::Stirling1, Route::Egf];

    pub fn name(self) -> &'static str {
        match self {
            Route::Explicit => "explicit",
            Route::Recurrence => "recurrence",
            Route::Stirling1 => "stirling1",
            Route::Egf => "egf",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown route {s:?}")))
    }
}

/// Classical Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rational {
    pbernoulli_explicit(n, 0).expect("p = 0 is in range")
}

/// `B_{n,p}` from the finite explicit sum; valid for every `p >= -1`.
pub fn pbernoulli_explicit(n: usize, p: i64) -> Result<Rational, Error> {
    if p < -1 {
        return Err(Error::Domain(p));
    }
    Ok((0..=n)
        .map(|k| {
            let s = stirling2(n, k);
            if s.is_zero() {
                return Rational::zero();
            }
            let top = (k as i64 + p + 1) as u64;
            let c = binomial(top, k as i64);
            sign(k as u64) * Rational::new(s * factorial(k as u64), c).expect("C(k+p+1,k) > 0")
        })
        .sum())
}

/// `B_{n,p}` through Bernoulli numbers and unsigned Stirling numbers of the
/// first kind.
pub fn pbernoulli_via_stirling1(n: usize, p: usize) -> Rational {
    let sum: Rational = (0..=p)
        .map(|j| {
            let s = stirling1_unsigned(p, j);
            sign(j as u64) * Rational::from(s) * bernoulli(n + j)
        })
        .sum();
    Rational::new(p as i64 + 1, factorial(p as u64)).expect("p! > 0") * sum
}

/// Rectangle of `B_{n,p}` for `0 <= n <= nmax`, `0 <= p <= pmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PBTable {
    nmax: usize,
    pmax: usize,
    route: Route,
    // cells[n][p]
    cells: Vec<Vec<Rational>>,
}

impl PBTable {
    pub fn build(nmax: usize, pmax: usize, route: Route) -> Self {
        let cells = match route {
            Route::Recurrence => recurrence_cells(nmax, pmax),
            Route::Explicit => grid(nmax, pmax, |n, p| {
                pbernoulli_explicit(n, p as i64).expect("p >= 0")
            }),
            Route::Stirling1 => grid(nmax, pmax, pbernoulli_via_stirling1),
            Route::Egf => {
                let columns: Vec<Vec<Rational>> = (0..=pmax)
                    .map(|p| {
                        let order = (nmax as i64 + 1).max(p as i64 + 2);
                        let s = egf_closed_form(p, order).expect("order >= p + 2");
                        (0..=nmax)
                            .map(|n| {
                                s.coeff(n as i64).expect("n < order")
                                    * Rational::from(factorial(n as u64))
                            })
                            .collect()
                    })
                    .collect();
                grid(nmax, pmax, |n, p| columns[p][n].clone())
            }
        };
        PBTable {
            nmax,
            pmax,
            route,
            cells,
        }
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    pub fn pmax(&self) -> usize {
        self.pmax
    }

    pub fn route(&self) -> Route {
        self.route
    }

    /// `B_{n,p}`; panics outside the rectangle.
    pub fn get(&self, n: usize, p: usize) -> &Rational {
        &self.cells[n][p]
    }

    pub fn try_get(&self, n: usize, p: usize) -> Option<&Rational> {
        self.cells.get(n).and_then(|row| row.get(p))
    }

    /// Cells as `(n, p, value)`, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.cells
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(p, v)| (n, p, v)))
    }

    /// Overwrites one cell. Used to inject faults when testing that the
    /// verification harness localizes a bad value.
    pub fn set(&mut self, n: usize, p: usize, value: Rational) {
        self.cells[n][p] = value;
    }
}

fn grid(nmax: usize, pmax: usize, f: impl Fn(usize, usize) -> Rational) -> Vec<Vec<Rational>> {
    (0..=nmax)
        .map(|n| (0..=pmax).map(|p| f(n, p)).collect())
        .collect()
}

/// Row `n` of the recurrence depends on row `n-1` one column further right,
/// so row `n` is computed out to column `pmax + nmax - n`.
fn recurrence_cells(nmax: usize, pmax: usize) -> Vec<Vec<Rational>> {
    let width = pmax + nmax;
    let mut prev: Vec<Rational> = vec![Rational::one(); width + 1];
    let mut rows = vec![prev[..=pmax].to_vec()];
    for n in 1..=nmax {
        let cols = width - n;
        let row: Vec<Rational> = (0..=cols)
            .map(|p| {
                let pp = p as i64;
                let factor = Rational::new((pp + 1) * (pp + 1), pp + 2).expect("p + 2 > 0");
                Rational::from(pp) * &prev[p] - factor * &prev[p + 1]
            })
            .collect();
        rows.push(row[..=pmax].to_vec());
        prev = row;
    }
    rows
}

/// Builds the recurrence table for the rectangle.
pub fn pbernoulli_table(nmax: usize, pmax: usize) -> PBTable {
    PBTable::build(nmax, pmax, Route::Recurrence)
}

/// Closed-form exponential generating function of `B_{n,p}`:
///
/// ```text
/// (p+1)(t - H_p) e^{pt} / (e^t-1)^{p+1}  +  (p+1) Σ_{k=1..p} C(p,k) H_k / (e^t-1)^{k+1}
/// ```
///
/// Each term has a pole of order up to `p+1` at `t = 0`; the poles cancel
/// in the sum. Intermediate series carry `p+2` extra orders so the
/// returned series is exact modulo `t^order`; `order` must be at least
/// `p + 2`.
pub fn egf_closed_form(p: usize, order: i64) -> Result<LaurentSeries, Error> {
    if order < p as i64 + 2 {
        return Err(Error::Precondition(format!(
            "order {order} must be at least p + 2 = {}",
            p + 2
        )));
    }
    // 1/(e^t-1)^k is known modulo t^(work-1-k), so the deepest pole leaves
    // exactly `order`
    let work = order + p as i64 + 2;
    let pp1 = Rational::from(p as i64 + 1);
    let h_p = harmonic(p as u64);

    let inv_em1 = LaurentSeries::em1_pow(1, work)
        .inv()
        .expect("e^t - 1 is nonzero");
    let mut inv_pows = vec![LaurentSeries::one(work)];
    for k in 1..=p + 1 {
        let next = &inv_pows[k - 1] * &inv_em1;
        inv_pows.push(next);
    }

    let t_minus_h = LaurentSeries::new(0, vec![-&h_p, Rational::one()], work);
    let exp_pt = LaurentSeries::exp_linear(&Rational::from(p as i64), work);
    let mut total = (&(&t_minus_h * &exp_pt) * &inv_pows[p + 1]).scale(&pp1);

    for k in 1..=p {
        let c = Rational::from(binomial(p as u64, k as i64)) * harmonic(k as u64) * &pp1;
        total = &total + &inv_pows[k + 1].scale(&c);
    }
    Ok(total.truncate(order))
}

/// `(-1)^p B_{n,p} / (p+1)!` as the iterated integral of `w_n`: `p`
/// antiderivatives from `0`, then one definite integral over `[-1, 0]`.
/// Requires `n > p`.
pub fn iterated_integral(n: usize, p: usize) -> Result<Rational, Error> {
    if n <= p {
        return Err(Error::Range {
            n: n as u64,
            p: p as u64,
        });
    }
    Ok(iterated_integral_unchecked(n, p))
}

/// [`iterated_integral`] without the `n > p` guard.
pub fn iterated_integral_unchecked(n: usize, p: usize) -> Rational {
    let mut poly = geometric_poly(n);
    for _ in 0..p {
        poly = poly.integrate();
    }
    poly.definite_integral(&-Rational::one(), &Rational::zero())
}
