//! Named consistency checks over enumeration, series and paths, grouped in
//! suites and run in parallel with order-stable reporting.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{
    all_involutions, count_classes, count_separable_intersection, fixture_text,
    gen_involutions_avoiding_321, golden_fixture_check, parse_fixture, simple_involutions,
    FIXTURE_LENGTHS,
};
use crate::error::{Error, Result};
use crate::paths::{
    admissible_sequences, avoids_321_by_motzkin, crossing_sequence, has_symmetric_connection_pair,
    involution_from_dyck, involution_from_sequence, is_simple_via_dyck,
    labelled_motzkin_from_involution, motzkin_from_sequence, motzkin_paths, plot_connections,
    sequence_from_motzkin, simple_extensions, simple_patterns_contained, split_components,
    sum_components, ConnectionKind,
};
use crate::perm::Permutation;
use crate::series::{
    epsilon_printed_discrepancy, expand_named, inflation_count, phi_recurrence, relation_residual,
    Relation, SeriesName,
};
use crate::structure::{
    classify, doubling_forward, doubling_inverse, satisfies_cycle_criterion, Decomposition, Kind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A published claim disagrees with computation and the outcome is
    /// recorded rather than asserted.
    DiscrepancyDocumented,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DiscrepancyDocumented => "discrepancy-documented",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub elapsed_ms: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Structure,
    Series,
    Paths,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "structure" => Ok(Suite::Structure),
            "series" => Ok(Suite::Series),
            "paths" => Ok(Suite::Paths),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub suite: Suite,
    pub max_n: usize,
    pub order: usize,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn has_failure(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<28} {:<23} expected: {}; actual: {}\n",
                c.name, c.status, c.expected, c.actual
            ));
        }
        let fails = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), fails));
        out
    }
}

pub const DEFAULT_MAX_N: usize = 14;
pub const MAX_MAX_N: usize = 16;
pub const DEFAULT_ORDER: usize = 40;
pub const MAX_ORDER: usize = 60;

/// Outcome of a single check before timing is attached.
struct Outcome {
    status: Status,
    expected: String,
    actual: String,
}

impl Outcome {
    fn compare<T: fmt::Debug + PartialEq>(expected: T, actual: T) -> Self {
        Outcome {
            status: if expected == actual {
                Status::Pass
            } else {
                Status::Fail
            },
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        }
    }

    fn flag(ok: bool, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Outcome {
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.into(),
            actual: actual.into(),
        }
    }

    fn from_result(r: Result<Outcome>) -> Self {
        r.unwrap_or_else(|e| Outcome {
            status: Status::Fail,
            expected: "no error".into(),
            actual: e.to_string(),
        })
    }
}

type CheckFn = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

fn check(name: &str, f: impl Fn() -> Result<Outcome> + Send + Sync + 'static) -> (String, CheckFn) {
    (name.to_string(), Box::new(f))
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

fn coeffs(name: SeriesName, order: usize) -> Result<Vec<BigInt>> {
    expand_named(name, order)?
        .series
        .to_integers()
        .ok_or_else(|| Error::Series(format!("{name} has non-integral coefficients")))
}

fn fpf_members(n: usize) -> Result<Vec<Permutation>> {
    Ok(gen_involutions_avoiding_321(n)?
        .filter(|p| !p.has_fixed_point())
        .collect())
}

fn structure_checks(k: usize) -> Vec<(String, CheckFn)> {
    vec![
        check("counting-law", move || {
            let f = coeffs(SeriesName::F, k)?;
            let mut bad = Vec::new();
            for (n, fn_) in f.iter().enumerate().skip(1) {
                let c = BigInt::from(gen_involutions_avoiding_321(n)?.count());
                if c != binomial(n, n / 2) || c != *fn_ {
                    bad.push(n);
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                format!("|I(321)_n| = C(n, n/2) = [x^n] f for n <= {k}"),
                format!("mismatch at {bad:?}"),
            ))
        }),
        check("doubling-law", move || {
            let counts: Vec<usize> = (1..=k)
                .map(|n| gen_involutions_avoiding_321(n).map(Iterator::count))
                .collect::<Result<_>>()?;
            let bad: Vec<usize> = (2..=k)
                .step_by(2)
                .filter(|&n| counts[n - 1] != 2 * counts[n - 2])
                .collect();
            Ok(Outcome::flag(
                bad.is_empty(),
                "|I_2m| = 2|I_2m-1|",
                format!("mismatch at {bad:?}"),
            ))
        }),
        check("doubling-bijection", move || {
            let mut bad = Vec::new();
            for n in (2..=k.min(12)).step_by(2) {
                let all: Vec<Permutation> = gen_involutions_avoiding_321(n)?.collect();
                let moved: Vec<&Permutation> = all.iter().filter(|p| p.image(1) != 1).collect();
                let fixed = all.len() - moved.len();
                let mut images = BTreeSet::new();
                for p in &moved {
                    let q = doubling_forward(p)?;
                    if q.image(1) != 1 || doubling_inverse(&q)? != **p {
                        bad.push(p.to_string());
                    }
                    images.insert(q);
                }
                if images.len() != fixed {
                    bad.push(format!("n={n}: image size {} vs {fixed}", images.len()));
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                "forward map is a bijection onto p(1) = 1",
                format!("{bad:?}"),
            ))
        }),
        check("membership-by-cycles", move || {
            let mut bad = Vec::new();
            for n in 1..=k.min(10) {
                for p in all_involutions(n) {
                    if satisfies_cycle_criterion(&p.cycle_form()?) != p.avoids_321() {
                        bad.push(p.to_string());
                    }
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                "cycle criterion = 321-avoidance",
                format!("{bad:?}"),
            ))
        }),
        check("classification-vs-series", move || {
            let a = coeffs(SeriesName::Alpha, k)?;
            let b = coeffs(SeriesName::Beta, k)?;
            let g = coeffs(SeriesName::Gamma, k)?;
            let d = coeffs(SeriesName::Delta, k)?;
            let e = coeffs(SeriesName::Epsilon, k)?;
            let o = coeffs(SeriesName::Omega, k)?;
            let mut bad = Vec::new();
            for n in 2..=k {
                let t = count_classes(n)?;
                let parity = if n % 2 == 0 { &e[n] } else { &o[n] };
                let ok = BigInt::from(t.type12) == a[n]
                    && BigInt::from(t.type21) == b[n]
                    && BigInt::from(t.simple) == g[n]
                    && BigInt::from(t.inflation_of_simple) == d[n]
                    && BigInt::from(t.total) == *parity
                    && t.is_consistent();
                if !ok {
                    bad.push(n);
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                format!("tallies = alpha, beta, gamma, delta, epsilon/omega for n <= {k}"),
                format!("mismatch at {bad:?}"),
            ))
        }),
        check("simple-counts", move || {
            let expected: Vec<(usize, usize)> = [(6, 1), (8, 1), (10, 3), (12, 6), (14, 15)]
                .into_iter()
                .filter(|&(n, _)| n <= k)
                .collect();
            let actual = expected
                .iter()
                .map(|&(n, _)| simple_involutions(n).map(|v| (n, v.len())))
                .collect::<Result<Vec<_>>>()?;
            Ok(Outcome::compare(expected, actual))
        }),
        check("golden-fixtures", move || {
            let mut bad = Vec::new();
            for n in FIXTURE_LENGTHS.into_iter().filter(|&n| n <= k) {
                if !golden_fixture_check(n)? {
                    bad.push(n);
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                "listings byte-identical",
                format!("differ at {bad:?}"),
            ))
        }),
        check("separable-intersection", move || {
            let top = k.min(10);
            let phi = coeffs(SeriesName::Phi, top)?;
            let fg = coeffs(SeriesName::FMinusGamma, top)?;
            let counts = (1..=top)
                .map(|n| count_separable_intersection(n).map(BigInt::from))
                .collect::<Result<Vec<_>>>()?;
            let matches_phi = counts[..] == phi[1..];
            let matches_fg = counts[..] == fg[1..];
            let status = if matches_phi && !matches_fg {
                Status::DiscrepancyDocumented
            } else {
                Status::Fail
            };
            Ok(Outcome {
                status,
                expected: "claimed: f - gamma".into(),
                actual: format!(
                    "counts {:?} match phi: {matches_phi}, match f - gamma: {matches_fg}",
                    counts.iter().map(ToString::to_string).collect::<Vec<_>>()
                ),
            })
        }),
    ]
}

fn series_checks(order: usize) -> Vec<(String, CheckFn)> {
    let mut v: Vec<(String, CheckFn)> = Relation::ALL
        .into_iter()
        .map(|rel| {
            check(
                &format!("residual-{}", rel.as_str().replace('_', "-")),
                move || {
                    let r = relation_residual(rel, order)?;
                    Ok(Outcome::flag(
                        r.is_zero(),
                        "all residuals zero",
                        format!("nonzero: {:?}", r.failing()),
                    ))
                },
            )
        })
        .collect();
    v.push(check("central-binomial", move || {
        let f = coeffs(SeriesName::F, order)?;
        let bad: Vec<usize> = (1..=order)
            .filter(|&n| f[n] != binomial(n, n / 2))
            .collect();
        Ok(Outcome::flag(
            bad.is_empty(),
            "f_n = C(n, n/2)",
            format!("mismatch at {bad:?}"),
        ))
    }));
    v.push(check("inflation-count-formula", move || {
        let top = order / 2;
        let g = coeffs(SeriesName::Gamma, order)?;
        let d = coeffs(SeriesName::Delta, order)?;
        let mut bad = Vec::new();
        for n in 4..=top {
            if inflation_count(n, &g)? != d[2 * n] {
                bad.push(2 * n);
            }
        }
        Ok(Outcome::flag(
            bad.is_empty(),
            format!("double sum = delta for lengths 8..={}", 2 * top),
            format!("mismatch at {bad:?}"),
        ))
    }));
    v.push(check("phi-recurrence", move || {
        let phi = coeffs(SeriesName::Phi, order)?;
        let rec = phi_recurrence(order);
        let printed: Vec<BigInt> = [
            1, 2, 3, 6, 10, 19, 33, 61, 108, 197, 352, 638, 1145, 2069, 3721, 6714, 12087,
        ]
        .into_iter()
        .map(BigInt::from)
        .collect();
        let head_ok = phi.len() > 17 && phi[1..18] == printed[..];
        Ok(Outcome::flag(
            phi[1..] == rec[..] && head_ok,
            "phi = recurrence; first 17 terms end in 12087",
            format!(
                "recurrence match: {}, printed match: {head_ok}",
                phi[1..] == rec[..]
            ),
        ))
    }));
    v.push(check("epsilon-closed-form", move || {
        let d = epsilon_printed_discrepancy(order)?;
        let status = if !d.residual.is_zero() && d.derived_matches_even_counts {
            Status::DiscrepancyDocumented
        } else {
            Status::Fail
        };
        Ok(Outcome {
            status,
            expected: "printed radical = even-length counts".into(),
            actual: format!(
                "printed constant term {}; 2xf/(1+2x) matches even-length counts: {}",
                d.printed_constant_term, d.derived_matches_even_counts
            ),
        })
    }));
    v
}

fn paths_checks(k: usize) -> Vec<(String, CheckFn)> {
    vec![
        check("dyck-round-trip", move || {
            let mut bad = Vec::new();
            for n in (2..=k).step_by(2) {
                for p in fpf_members(n)? {
                    if involution_from_dyck(&labelled_motzkin_from_involution(&p)?)? != p {
                        bad.push(p.to_string());
                    }
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                "identity",
                format!("{bad:?}"),
            ))
        }),
        check("sequence-round-trip", move || {
            let mut bad = Vec::new();
            for n in (2..=k).step_by(2) {
                for p in simple_involutions(n)?
                    .into_iter()
                    .chain((n == 2).then(|| "21".parse().unwrap()))
                {
                    let s = crossing_sequence(&p)?;
                    let m = motzkin_from_sequence(&s)?;
                    if involution_from_sequence(&s)? != p || sequence_from_motzkin(&m)? != s {
                        bad.push(p.to_string());
                    }
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                "identity",
                format!("{bad:?}"),
            ))
        }),
        check("motzkin-bijection-count", move || {
            let mut expected = Vec::new();
            let mut actual = Vec::new();
            for len in (2..=k).step_by(2) {
                let simple = fpf_members(len)?.iter().filter(|p| p.is_simple()).count();
                expected.push(simple);
                actual.push(motzkin_paths(len / 2 - 1, true).len());
            }
            Ok(Outcome::compare(expected, actual))
        }),
        check("dyck-simplicity", move || {
            let mut bad = Vec::new();
            for n in (2..=k).step_by(2) {
                for p in fpf_members(n)? {
                    if is_simple_via_dyck(&labelled_motzkin_from_involution(&p)?)? != p.is_simple()
                    {
                        bad.push(p.to_string());
                    }
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                "path test = interval test",
                format!("{bad:?}"),
            ))
        }),
        check("motzkin-321-criterion", move || {
            let mut bad = Vec::new();
            for n in 1..=k.min(12) {
                for p in all_involutions(n) {
                    if avoids_321_by_motzkin(&p)? != p.avoids_321() {
                        bad.push(p.to_string());
                    }
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                "path test = 321-avoidance",
                format!("{bad:?}"),
            ))
        }),
        check("connections-geometry", move || {
            let mut bad = Vec::new();
            for n in (2..=k.min(12)).step_by(2) {
                for p in fpf_members(n)? {
                    let above = |j: usize| p.image(j) > j;
                    let mut upper = BTreeSet::new();
                    let mut lower = BTreeSet::new();
                    for j in 1..n {
                        match (above(j), above(j + 1)) {
                            (true, true) => upper.insert((p.image(j), p.image(j + 1))),
                            (false, false) => lower.insert((p.image(j), p.image(j + 1))),
                            _ => false,
                        };
                    }
                    let c = plot_connections(&p)?;
                    let of = |kind| {
                        c.iter()
                            .filter(|x| x.kind == kind)
                            .map(|x| x.values)
                            .collect::<BTreeSet<_>>()
                    };
                    if of(ConnectionKind::Upper) != upper || of(ConnectionKind::Lower) != lower {
                        bad.push(p.to_string());
                    }
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                "index rule = adjacent same-side points",
                format!("{bad:?}"),
            ))
        }),
        check("symmetric-connections", move || {
            let mut bad = Vec::new();
            for n in (2..=k.min(12)).step_by(2) {
                for p in fpf_members(n)? {
                    let sym = has_symmetric_connection_pair(&p)?;
                    if p.is_simple() && sym {
                        bad.push(format!("{p}: simple with a symmetric pair"));
                    }
                    if !sym && !p.is_simple() {
                        let ok = match classify(&p) {
                            Decomposition::Sum { left, .. } => left.is_simple(),
                            _ => false,
                        };
                        if !ok {
                            bad.push(format!(
                                "{p}: no symmetric pair, not simple or sum of a simple"
                            ));
                        }
                    }
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                "no symmetric pair <=> simple or sum with simple head",
                format!("{bad:?}"),
            ))
        }),
        check("admissible-sequences", move || {
            let mut bad = Vec::new();
            let mut seen = BTreeSet::new();
            for n in (2..=k).step_by(2) {
                for p in simple_involutions(n)? {
                    let s = crossing_sequence(&p)?;
                    if !s.is_admissible() || !seen.insert(s) {
                        bad.push(p.to_string());
                    }
                }
            }
            let total: usize = (2..=k / 2).map(|h| admissible_sequences(h).len()).sum();
            Ok(Outcome::flag(
                bad.is_empty() && total == seen.len(),
                "distinct admissible sequences, one per simple involution",
                format!(
                    "bad {bad:?}; {} sequences vs {total} admissible",
                    seen.len()
                ),
            ))
        }),
        check("sum-components", move || {
            let mut bad = Vec::new();
            for n in (2..=k.min(12)).step_by(2) {
                for p in fpf_members(n)? {
                    if classify(&p).kind() != Kind::Type12 || has_symmetric_connection_pair(&p)? {
                        continue;
                    }
                    let parts = split_components(&crossing_sequence(&p)?)
                        .iter()
                        .map(involution_from_sequence)
                        .collect::<Result<Vec<_>>>();
                    if parts.ok() != Some(sum_components(&p)) {
                        bad.push(p.to_string());
                    }
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                "level-0 steps split the simple components",
                format!("{bad:?}"),
            ))
        }),
        check("fixture-sequences", move || {
            let mut bad = Vec::new();
            for n in FIXTURE_LENGTHS.into_iter().filter(|&n| n <= k) {
                for e in parse_fixture(fixture_text(n).unwrap_or_default())? {
                    if crossing_sequence(&e.involution)?.values() != e.sequence.as_slice() {
                        bad.push(e.involution.to_string());
                    }
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                "listed sequences recomputed",
                format!("{bad:?}"),
            ))
        }),
        check("subsequence-patterns", move || {
            subsequence_check(k.min(12), false)
        }),
        check("subsequence-extensions", move || {
            subsequence_check(k.min(12), true)
        }),
    ]
}

/// Compares subsequence containment of crossing sequences with pattern
/// containment of the corresponding simple involutions. The forward
/// direction (subsequence implies pattern) is required; failures of the
/// converse are recorded as a documented discrepancy.
fn subsequence_check(k: usize, extensions: bool) -> Result<Outcome> {
    let mut forward_bad = Vec::new();
    let mut converse_bad = Vec::new();
    for n in (6..=k).step_by(2) {
        for p in simple_involutions(n)? {
            let s = crossing_sequence(&p)?;
            let (predicted, candidates): (BTreeSet<_>, Vec<Permutation>) = if extensions {
                if n + 2 > k {
                    continue;
                }
                let pred = simple_extensions(&s)?.into_iter().collect();
                (pred, simple_involutions(n + 2)?)
            } else {
                let pred = simple_patterns_contained(&s)?.into_iter().collect();
                let shorter = (6..n)
                    .step_by(2)
                    .map(simple_involutions)
                    .collect::<Result<Vec<_>>>()?
                    .concat();
                (pred, shorter)
            };
            for q in candidates {
                let t = crossing_sequence(&q)?;
                let contained = if extensions {
                    q.contains_pattern(&p)
                } else {
                    p.contains_pattern(&q)
                };
                let (big, small) = if extensions { (&q, &p) } else { (&p, &q) };
                match (predicted.contains(&t), contained) {
                    (true, false) => forward_bad.push(format!("{big} / {small}")),
                    (false, true) => converse_bad.push(format!("{big} contains {small}")),
                    _ => {}
                }
            }
        }
    }
    let status = if !forward_bad.is_empty() {
        Status::Fail
    } else if converse_bad.is_empty() {
        Status::Pass
    } else {
        Status::DiscrepancyDocumented
    };
    Ok(Outcome {
        status,
        expected: "pattern containment <=> subsequence of crossing sequences".into(),
        actual: format!("subsequence without pattern: {forward_bad:?}; pattern without subsequence: {converse_bad:?}"),
    })
}

/// Runs `suite` with enumeration bound `max_n` and series order `order`.
pub fn run(suite: Suite, max_n: usize, order: usize) -> Result<RunReport> {
    if max_n == 0 || max_n > MAX_MAX_N {
        return Err(Error::Precondition(format!(
            "max-n must be in 1..={MAX_MAX_N}"
        )));
    }
    if !(8..=MAX_ORDER).contains(&order) {
        return Err(Error::Precondition(format!(
            "order must be in 8..={MAX_ORDER}"
        )));
    }
    let start = Instant::now();
    let mut checks = Vec::new();
    if matches!(suite, Suite::Structure | Suite::All) {
        checks.extend(structure_checks(max_n));
    }
    if matches!(suite, Suite::Series | Suite::All) {
        checks.extend(series_checks(order));
    }
    if matches!(suite, Suite::Paths | Suite::All) {
        checks.extend(paths_checks(max_n));
    }
    let results = checks
        .par_iter()
        .map(|(name, f)| {
            let t = Instant::now();
            let o = Outcome::from_result(f());
            CheckResult {
                name: name.clone(),
                status: o.status,
                expected: o.expected,
                actual: o.actual,
                elapsed_ms: t.elapsed().as_millis(),
            }
        })
        .collect();
    Ok(RunReport {
        command: format!(
            "verify --suite {} --max-n {max_n} --order {order}",
            serde_json::to_value(suite)
                .ok()
                .and_then(|v| v.as_str().map(String::from))
                .unwrap_or_default()
        ),
        suite,
        max_n,
        order,
        checks: results,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
