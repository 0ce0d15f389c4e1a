//! Residuals of the functional equations satisfied by the named series.
//! Each equation `lhs = rhs` is evaluated as `lhs - rhs` on the closed-form
//! expansions and must vanish through the requested order.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use super::named::{
    alpha, beta, epsilon, f, gamma_by_substitution, gamma_radical, omega, phi, zeta,
};
use super::RationalSeries;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Decomposition of I(321) into singleton, type 12, type 21, simple and
    /// inflated simple.
    ClassSystem,
    /// The same decomposition restricted to the simples 1, 12, 21.
    SeparableSystem,
    /// Odd/even length recursions.
    ParitySystem,
    /// The class and parity systems together with `ε = 2xω`.
    CombinedSystem,
    /// Quadratic equation for `ζ = γ + δ`.
    ZetaPoly,
    /// Quadratic equation for `f`.
    FPoly,
    /// Quadratic equation for `α`.
    AlphaPoly,
    /// Quadratic equation for `γ`.
    GammaPoly,
    /// `ζ(x) = Γ(x²/(1-x²))` and the radical form of `γ`.
    GammaSubstitution,
}

impl Relation {
    pub const ALL: [Relation; 9] = [
        Relation::ClassSystem,
        Relation::SeparableSystem,
        Relation::ParitySystem,
        Relation::CombinedSystem,
        Relation::ZetaPoly,
        Relation::FPoly,
        Relation::AlphaPoly,
        Relation::GammaPoly,
        Relation::GammaSubstitution,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::ClassSystem => "class_system",
            Relation::SeparableSystem => "separable_system",
            Relation::ParitySystem => "parity_system",
            Relation::CombinedSystem => "combined_system",
            Relation::ZetaPoly => "zeta_poly",
            Relation::FPoly => "f_poly",
            Relation::AlphaPoly => "alpha_poly",
            Relation::GammaPoly => "gamma_poly",
            Relation::GammaSubstitution => "gamma_substitution",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Relation::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown relation `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct Residual {
    pub relation: Relation,
    pub equations: Vec<(String, RationalSeries)>,
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        self.equations.iter().all(|(_, r)| r.is_zero())
    }

    /// Labels of the equations whose residual is nonzero.
    pub fn failing(&self) -> Vec<&str> {
        self.equations
            .iter()
            .filter(|(_, r)| !r.is_zero())
            .map(|(l, _)| l.as_str())
            .collect()
    }
}

fn p(c: &[i64], order: usize) -> RationalSeries {
    RationalSeries::from_ints(c, order)
}

struct Family {
    x: RationalSeries,
    f: RationalSeries,
    alpha: RationalSeries,
    beta: RationalSeries,
    gamma: RationalSeries,
    delta: RationalSeries,
    epsilon: RationalSeries,
    omega: RationalSeries,
}

impl Family {
    fn new(order: usize) -> Result<Self> {
        let z = zeta(order)?;
        let gamma = gamma_by_substitution(order)?;
        Ok(Family {
            x: p(&[0, 1], order),
            f: f(order)?,
            alpha: alpha(order)?,
            beta: beta(order)?,
            delta: &z - &gamma,
            gamma,
            epsilon: epsilon(order)?,
            omega: omega(order)?,
        })
    }

    /// `β + γ + δ`: even members that are not of type 12.
    fn irreducible_even(&self) -> RationalSeries {
        &(&self.beta + &self.gamma) + &self.delta
    }

    fn class_system(&self, order: usize) -> Result<Vec<(String, RationalSeries)>> {
        let bgd = self.irreducible_even();
        let geometric = p(&[1, 0, -1], order).recip()? - RationalSeries::one(order);
        Ok(vec![
            (
                "f = x + α + β + γ + δ".into(),
                &self.f - &(&(&self.x + &self.alpha) + &bgd),
            ),
            ("β = 1/(1-x²) - 1".into(), &self.beta - &geometric),
            (
                "α = (x + β + γ + δ)(x + α + β + γ + δ)".into(),
                &self.alpha - &((&self.x + &bgd) * (&(&self.x + &self.alpha) + &bgd)),
            ),
        ])
    }

    fn parity_system(&self) -> Vec<(String, RationalSeries)> {
        let bgd = self.irreducible_even();
        let x = &self.x;
        vec![
            (
                "ω = x + xε + (β + γ + δ)ω".into(),
                &self.omega - &(&(x + &(x * &self.epsilon)) + &(&bgd * &self.omega)),
            ),
            (
                "ε = β + γ + δ + (β + γ + δ)ε + xω".into(),
                &self.epsilon - &(&(&bgd + &(&bgd * &self.epsilon)) + &(x * &self.omega)),
            ),
        ]
    }
}

/// Evaluates the residuals of `relation` through `x^order`.
pub fn relation_residual(relation: Relation, order: usize) -> Result<Residual> {
    let fam = Family::new(order)?;
    let x = &fam.x;
    let equations = match relation {
        Relation::ClassSystem => fam.class_system(order)?,
        Relation::SeparableSystem => {
            let phi = phi(order)?;
            let xb = x + &fam.beta;
            // type 12 part of the restricted family, solved from its own
            // quadratic: α' = (x + β)² / (1 - x - β)
            let alpha_r = (&xb * &xb).checked_div(&(RationalSeries::one(order) - &xb))?;
            let geometric = p(&[1, 0, -1], order).recip()? - RationalSeries::one(order);
            vec![
                ("φ = x + α' + β".into(), &phi - &(&xb + &alpha_r)),
                (
                    "α' = (x + β)(x + α' + β)".into(),
                    &alpha_r - &(&xb * &(&xb + &alpha_r)),
                ),
                ("β = 1/(1-x²) - 1".into(), &fam.beta - &geometric),
            ]
        }
        Relation::ParitySystem => fam.parity_system(),
        Relation::CombinedSystem => {
            let mut eqs = fam.class_system(order)?;
            eqs.push(("f = ω + ε".into(), &fam.f - &(&fam.omega + &fam.epsilon)));
            eqs.extend(fam.parity_system());
            eqs.push(("ε = 2xω".into(), &fam.epsilon - &(x * &fam.omega).scale(2)));
            // ε and ω must also be the even and odd parts of f
            eqs.push((
                "ε = even part of f".into(),
                &fam.epsilon - &fam.f.even_part(),
            ));
            eqs.push(("ω = odd part of f".into(), &fam.omega - &fam.f.odd_part()));
            eqs
        }
        Relation::ZetaPoly => {
            let z = &fam.gamma + &fam.delta;
            let r = &(&p(&[-1, 0, 4, 0, -3], order) * &z)
                + &(&p(&[1, 0, -2, 0, 1], order) * &(&z * &z));
            vec![(
                "(-1+4x²-3x⁴)ζ + (1-2x²+x⁴)ζ² + x⁶".into(),
                &r + &RationalSeries::monomial(6, 1, order),
            )]
        }
        Relation::FPoly => {
            let f = &fam.f;
            let ff = f * f;
            let r = &(&(&(-f) + x) - &(&ff * x)) + &p(&[0, 0, 2], order);
            let r = &(&r + &(f * &p(&[0, 0, 4], order))) + &(&ff * &p(&[0, 0, 2], order));
            vec![("-f + x - f²x + 2x² + 4fx² + 2f²x²".into(), r)]
        }
        Relation::AlphaPoly => {
            let a = &fam.alpha;
            let aa = a * a;
            let lin = a * &p(&[1, 1, -4, -4], order);
            let quad = &aa * &p(&[0, 1, -2], order);
            let cst = p(&[0, 0, -1, -4, -4], order);
            vec![(
                "α + αx + α²x - x² - 4αx² - 2α²x² - 4x³ - 4αx³ - 4x⁴".into(),
                &(&lin + &quad) + &cst,
            )]
        }
        Relation::GammaPoly => {
            let g = &fam.gamma;
            let r = &(&(&p(&[1, 0, 1], order) * &(g * g)) + &(&p(&[-1, 0, 1, 0, 2], order) * g))
                + &RationalSeries::monomial(6, 1, order);
            vec![("(1+x²)γ² + (-1+x²+2x⁴)γ + x⁶".into(), r)]
        }
        Relation::GammaSubstitution => {
            let half = order / 2;
            let g = fam.gamma.compress_even()?;
            let y = p(&[0, 1], half);
            let sub = y.checked_div(&(RationalSeries::one(half) - &y))?;
            let z = g.compose(&sub)?.expand_even().truncate(2 * half);
            let zeta_direct = (&fam.gamma + &fam.delta).truncate(2 * half);
            vec![
                ("ζ(x) = Γ(x²/(1-x²))".into(), &zeta_direct - &z),
                (
                    "γ (substitution) = γ (radical)".into(),
                    &fam.gamma - &gamma_radical(order)?,
                ),
            ]
        }
    };
    Ok(Residual {
        relation,
        equations,
    })
}

/// The closed form `(-1 - 4x² - sqrt(1-4x²)) / (-1 + 4x²)` compared with the
/// even-length series `2x f / (1 + 2x)`.
#[derive(Clone, Debug)]
pub struct EpsilonDiscrepancy {
    pub printed: RationalSeries,
    pub printed_constant_term: BigRational,
    /// `printed - ε`.
    pub residual: RationalSeries,
    /// `2xf/(1+2x)` equals the even part of `f` (the even-length counts).
    pub derived_matches_even_counts: bool,
}

pub fn epsilon_printed_discrepancy(order: usize) -> Result<EpsilonDiscrepancy> {
    let printed = (p(&[-1, 0, -4], order) - p(&[1, 0, -4], order).sqrt()?)
        .checked_div(&p(&[-1, 0, 4], order))?;
    let eps = epsilon(order)?;
    Ok(EpsilonDiscrepancy {
        printed_constant_term: printed.coeffs()[0].clone(),
        residual: &printed - &eps,
        derived_matches_even_counts: (&eps - &f(order)?.even_part()).is_zero(),
        printed,
    })
}
