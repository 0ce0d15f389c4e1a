//! Closed-form expansions of the generating functions of I(321) and its
//! subsets. The coefficient of `x^n` counts objects of length `n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::RationalSeries;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesName {
    /// Involutions built from the simples 1, 12 and 21 only.
    Phi,
    /// All of I(321).
    F,
    /// Type 12 members.
    Alpha,
    /// Type 21 members.
    Beta,
    /// Simple members of length > 2.
    Gamma,
    /// Inflations of simple members of length > 2.
    Delta,
    /// `gamma + delta`.
    Zeta,
    /// Even-length members.
    Epsilon,
    /// Odd-length members.
    Omega,
    FMinusGamma,
}

impl SeriesName {
    pub const ALL: [SeriesName; 10] = [
        SeriesName::Phi,
        SeriesName::F,
        SeriesName::Alpha,
        SeriesName::Beta,
        SeriesName::Gamma,
        SeriesName::Delta,
        SeriesName::Zeta,
        SeriesName::Epsilon,
        SeriesName::Omega,
        SeriesName::FMinusGamma,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SeriesName::Phi => "phi",
            SeriesName::F => "f",
            SeriesName::Alpha => "alpha",
            SeriesName::Beta => "beta",
            SeriesName::Gamma => "gamma",
            SeriesName::Delta => "delta",
            SeriesName::Zeta => "zeta",
            SeriesName::Epsilon => "epsilon",
            SeriesName::Omega => "omega",
            SeriesName::FMinusGamma => "f_minus_gamma",
        }
    }

    /// Index of the first nonzero coefficient.
    pub fn first_nonzero(self) -> usize {
        match self {
            SeriesName::F | SeriesName::Omega | SeriesName::Phi | SeriesName::FMinusGamma => 1,
            SeriesName::Alpha | SeriesName::Beta | SeriesName::Epsilon => 2,
            SeriesName::Gamma | SeriesName::Zeta => 6,
            SeriesName::Delta => 8,
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownSeries(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSeries {
    pub name: SeriesName,
    pub series: RationalSeries,
}

// Room for the valuation shifts inside the closed forms.
const SLACK: usize = 4;

fn poly(c: &[i64], order: usize) -> RationalSeries {
    RationalSeries::from_ints(c, order)
}

/// `(p - sqrt(r)) / d` with the square root normalized to constant term 1.
fn radical(p: &[i64], r: &[i64], d: &[i64], order: usize) -> Result<RationalSeries> {
    let num = poly(p, order) - poly(r, order).sqrt()?;
    num.checked_div(&poly(d, order))
}

pub(crate) fn f(order: usize) -> Result<RationalSeries> {
    radical(&[1, 0, -4], &[1, 0, -4], &[0, -2, 4], order)
}

pub(crate) fn alpha(order: usize) -> Result<RationalSeries> {
    radical(
        &[1, 1, -4, -4],
        &[1, 2, -7, -12, 16, 16, -16],
        &[0, -2, 4],
        order,
    )
}

pub(crate) fn beta(order: usize) -> Result<RationalSeries> {
    poly(&[0, 0, 1], order).checked_div(&poly(&[1, 0, -1], order))
}

pub(crate) fn zeta(order: usize) -> Result<RationalSeries> {
    radical(
        &[1, 0, -4, 0, 3],
        &[1, 0, -8, 0, 22, 0, -28, 0, 17, 0, -4],
        &[2, 0, -4, 0, 2],
        order,
    )
}

/// Simple involutions from zeta: with `Z(y) = Σ ζ_{2k} y^k`, the simple
/// series in `y = x^2` is `Z(y / (1 + y))`.
pub(crate) fn gamma_by_substitution(order: usize) -> Result<RationalSeries> {
    let z = zeta(order + 1)?.compress_even()?;
    let y = z.order();
    let sub = poly(&[0, 1], y).checked_div(&poly(&[1, 1], y))?;
    Ok(z.compose(&sub)?.expand_even().truncate(order))
}

pub(crate) fn gamma_radical(order: usize) -> Result<RationalSeries> {
    radical(&[1, 0, -1, 0, -2], &[1, 0, -2, 0, -3], &[2, 0, 2], order)
}

pub(crate) fn phi(order: usize) -> Result<RationalSeries> {
    poly(&[0, 1, 1, -1], order).checked_div(&poly(&[1, -1, -2, 1], order))
}

pub(crate) fn omega(order: usize) -> Result<RationalSeries> {
    f(order)?.checked_div(&poly(&[1, 2], order))
}

pub(crate) fn epsilon(order: usize) -> Result<RationalSeries> {
    Ok(omega(order)?.shift_up(1).truncate(order).scale(2))
}

/// Expands a named generating function through `x^order`.
pub fn expand_named(name: SeriesName, order: usize) -> Result<NamedSeries> {
    if order == 0 {
        return Err(Error::Precondition("expansion order must be >= 1".into()));
    }
    let m = order + SLACK;
    let series = match name {
        SeriesName::Phi => phi(m)?,
        SeriesName::F => f(m)?,
        SeriesName::Alpha => alpha(m)?,
        SeriesName::Beta => beta(m)?,
        SeriesName::Gamma => gamma_by_substitution(m)?,
        SeriesName::Delta => zeta(m)? - gamma_by_substitution(m)?,
        SeriesName::Zeta => zeta(m)?,
        SeriesName::Epsilon => epsilon(m)?,
        SeriesName::Omega => omega(m)?,
        SeriesName::FMinusGamma => f(m)? - gamma_by_substitution(m)?,
    };
    Ok(NamedSeries {
        name,
        series: series.truncate(order),
    })
}

/// `c_{n+3} = c_{n+2} + 2 c_{n+1} - c_n` seeded with `1, 2, 3`; element `k`
/// is the coefficient of `x^{k+1}`.
pub fn phi_recurrence(len: usize) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = [1, 2, 3].iter().map(|&v| BigInt::from(v)).collect();
    while c.len() < len {
        let k = c.len();
        let next = &c[k - 1] + &c[k - 2] * 2 - &c[k - 3];
        c.push(next);
    }
    c.truncate(len);
    c
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of inflations of length `2n` of simple involutions:
/// `Σ_{i=1}^{n-3} γ_{2(n-i)} Σ_{j=0}^{i-1} C(i-1, j) C(n-i, j+1)`.
///
/// `gamma[k]` is the number of simple involutions of length `k`.
pub fn inflation_count(n: usize, gamma: &[BigInt]) -> Result<BigInt> {
    if n < 4 {
        return Err(Error::Precondition(format!(
            "half-length n = {n} must be >= 4"
        )));
    }
    if gamma.len() <= 2 * (n - 1) {
        return Err(Error::Precondition(format!(
            "need simple counts through length {}, have {}",
            2 * (n - 1),
            gamma.len().saturating_sub(1)
        )));
    }
    let mut total = BigInt::zero();
    for i in 1..=n - 3 {
        let inner: BigInt = (0..i)
            .map(|j| binomial(i - 1, j) * binomial(n - i, j + 1))
            .sum();
        total += &gamma[2 * (n - i)] * inner;
    }
    Ok(total)
}
