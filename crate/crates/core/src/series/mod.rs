//! Truncated power series with exact rational coefficients.
//!
//! A series of order `N` knows its coefficients `c_0..=c_N`; everything
//! beyond is unknown, not zero. Binary operations truncate to the smaller
//! order of the operands, and division by `x^k` lowers the order by `k`.

mod named;
mod relations;

pub use named::{expand_named, inflation_count, phi_recurrence, NamedSeries, SeriesName};
pub use relations::{
    epsilon_printed_discrepancy, relation_residual, EpsilonDiscrepancy, Relation, Residual,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_ORDER: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    /// Series with the given leading coefficients, zero-padded or truncated
    /// to `order`.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        RationalSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        RationalSeries::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        RationalSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        RationalSeries::from_ints(&[1], order)
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: i64, order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::from_integer(c.into());
        RationalSeries::new(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^n`, or `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&BigRational> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        RationalSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = BigRational::from_integer(c.into());
        RationalSeries {
            coeffs: self.coeffs.iter().map(|a| a * &c).collect(),
        }
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RationalSeries { coeffs }
    }

    /// Exact division by `x^k`; the first `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::Series(format!(
                "cannot divide an order-{} series by x^{k}",
                self.order()
            )));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::Series(format!("x^{k} does not divide the series")));
        }
        Ok(RationalSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// `self / rhs`. A common power of `x` is cancelled first; division is
    /// impossible when `rhs` vanishes to a higher order than `self`.
    pub fn checked_div(&self, rhs: &RationalSeries) -> Result<Self> {
        let v = rhs
            .valuation()
            .ok_or_else(|| Error::Series("division by a series known to be zero".into()))?;
        let num = self.shift_down(v).map_err(|_| {
            Error::Series(format!(
                "divisor has valuation {v} not cancelled by the dividend"
            ))
        })?;
        let den = rhs.shift_down(v)?;
        let order = num.order().min(den.order());
        let inv_b0 = den.coeffs[0].recip();
        let mut q: Vec<BigRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = num.coeffs[n].clone();
            for k in 1..=n {
                acc -= &den.coeffs[k] * &q[n - k];
            }
            q.push(acc * &inv_b0);
        }
        Ok(RationalSeries { coeffs: q })
    }

    pub fn recip(&self) -> Result<Self> {
        RationalSeries::one(self.order()).checked_div(self)
    }

    /// Square root with constant term 1, by coefficient extraction:
    /// `s_n = (a_n - sum_{k=1}^{n-1} s_k s_{n-k}) / 2`.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Series(format!(
                "square root needs constant term 1, found {}",
                self.coeffs[0]
            )));
        }
        let half = BigRational::new(1.into(), 2.into());
        let mut s = vec![BigRational::one()];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc -= &s[k] * &s[n - k];
            }
            s.push(acc * &half);
        }
        Ok(RationalSeries { coeffs: s })
    }

    /// `self ∘ inner`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &RationalSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Series(
                "inner series of a composition must vanish at 0".into(),
            ));
        }
        let order = match inner.valuation() {
            None => inner.order(),
            Some(v) => inner.order().min((self.order() + 1) * v - 1),
        };
        let inner = inner.truncate(order);
        let mut acc = RationalSeries::zero(order);
        for k in (0..=self.order().min(order)).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// `Σ c_{2k} y^k`; the odd coefficients must vanish.
    pub fn compress_even(&self) -> Result<Self> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return Err(Error::Series("series has odd terms".into()));
        }
        Ok(RationalSeries {
            coeffs: self.coeffs.iter().step_by(2).cloned().collect(),
        })
    }

    /// `Σ c_k x^{2k}`, truncated at order `2 * self.order()`.
    pub fn expand_even(&self) -> Self {
        let mut coeffs = Vec::with_capacity(2 * self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                coeffs.push(BigRational::zero());
            }
            coeffs.push(c.clone());
        }
        RationalSeries { coeffs }
    }

    pub fn even_part(&self) -> Self {
        RationalSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if i % 2 == 0 {
                        c.clone()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
        }
    }

    pub fn odd_part(&self) -> Self {
        self - &self.even_part()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, or `None` if some coefficient is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// JSON array of decimal strings, indices `0..=order`.
    pub fn to_json(&self) -> Result<String> {
        let ints = self.integer_strings()?;
        Ok(serde_json::to_string(&ints).expect("string array serializes"))
    }

    /// `n,coefficient` rows with a header line.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = String::from("n,coefficient\n");
        for (n, c) in self.integer_strings()?.iter().enumerate() {
            out.push_str(&format!("{n},{c}\n"));
        }
        Ok(out)
    }

    fn integer_strings(&self) -> Result<Vec<String>> {
        self.to_integers()
            .map(|v| v.iter().map(|c| c.to_string()).collect())
            .ok_or_else(|| Error::Series("series has non-integer coefficients".into()))
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match n {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}*")?,
            }
            match n {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

fn zip_with(
    a: &RationalSeries,
    b: &RationalSeries,
    op: impl Fn(&BigRational, &BigRational) -> BigRational,
) -> RationalSeries {
    let order = a.order().min(b.order());
    RationalSeries {
        coeffs: (0..=order)
            .map(|i| op(&a.coeffs[i], &b.coeffs[i]))
            .collect(),
    }
}

impl Add for &RationalSeries {
    type Output = RationalSeries;

    fn add(self, rhs: &RationalSeries) -> RationalSeries {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &RationalSeries {
    type Output = RationalSeries;

    fn sub(self, rhs: &RationalSeries) -> RationalSeries {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Neg for &RationalSeries {
    type Output = RationalSeries;

    fn neg(self) -> RationalSeries {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &RationalSeries {
    type Output = RationalSeries;

    fn mul(self, rhs: &RationalSeries) -> RationalSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        RationalSeries { coeffs }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalSeries {
            type Output = RationalSeries;
            fn $m(self, rhs: RationalSeries) -> RationalSeries { (&self).$m(&rhs) }
        }
        impl $tr<&RationalSeries> for RationalSeries {
            type Output = RationalSeries;
            fn $m(self, rhs: &RationalSeries) -> RationalSeries { (&self).$m(rhs) }
        }
        impl $tr<RationalSeries> for &RationalSeries {
            type Output = RationalSeries;
            fn $m(self, rhs: RationalSeries) -> RationalSeries { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RationalSeries {
    type Output = RationalSeries;

    fn neg(self) -> RationalSeries {
        -&self
    }
}
