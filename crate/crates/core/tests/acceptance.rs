//! Acceptance criteria. Each prints one `PASS`/`FAIL` line; the test fails
//! if any criterion fails or exceeds its time limit.

use std::io::Write;
use std::time::{Duration, Instant};

use avoid321::enumerate::{
    all_involutions, count_classes, fixture_text, gen_involutions_avoiding_321,
    golden_fixture_check, parse_fixture, simple_involutions,
};
use avoid321::paths::{
    avoids_321_by_motzkin, crossing_sequence, involution_from_dyck, involution_from_sequence,
    is_simple_via_dyck, labelled_motzkin_from_involution, motzkin_paths,
};
use avoid321::series::{
    expand_named, inflation_count, phi_recurrence, relation_residual, Relation, SeriesName,
};
use avoid321::verify::{self, Status, Suite};
use avoid321::Permutation;
use num_bigint::BigInt;

const COUNTING_LIMIT: Duration = Duration::from_secs(60);
const CLASSIFICATION_LIMIT: Duration = Duration::from_secs(300);
const RESIDUAL_LIMIT: Duration = Duration::from_secs(5);
const ORDER: usize = 40;

fn ints(name: SeriesName, order: usize) -> Vec<BigInt> {
    expand_named(name, order)
        .unwrap()
        .series
        .to_integers()
        .unwrap()
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

fn fpf(n: usize) -> Vec<Permutation> {
    gen_involutions_avoiding_321(n)
        .unwrap()
        .filter(|p| !p.has_fixed_point())
        .collect()
}

fn counting_law() -> Result<String, String> {
    let f = ints(SeriesName::F, 16);
    for (n, fn_) in f.iter().enumerate().skip(1) {
        let c = BigInt::from(gen_involutions_avoiding_321(n).unwrap().count());
        if c != binomial(n, n / 2) || c != *fn_ {
            return Err(format!("n = {n}: count {c}, f_n {fn_}"));
        }
    }
    Ok("|I(321)_n| = C(n, n/2) = [x^n] f, n = 1..16".into())
}

fn doubling_law() -> Result<String, String> {
    for m in 1..=8 {
        let even = gen_involutions_avoiding_321(2 * m).unwrap().count();
        let odd = gen_involutions_avoiding_321(2 * m - 1).unwrap().count();
        if even != 2 * odd {
            return Err(format!("m = {m}: {even} vs 2 * {odd}"));
        }
    }
    Ok("m = 1..8".into())
}

fn classification() -> Result<String, String> {
    let names = [
        SeriesName::Alpha,
        SeriesName::Beta,
        SeriesName::Gamma,
        SeriesName::Delta,
        SeriesName::Epsilon,
        SeriesName::Omega,
    ];
    let s: Vec<Vec<BigInt>> = names.iter().map(|&n| ints(n, 14)).collect();
    let mut gamma = Vec::new();
    let mut delta = Vec::new();
    for n in 1..=14 {
        let t = count_classes(n).unwrap();
        let parity = if n % 2 == 0 { &s[4][n] } else { &s[5][n] };
        let got = [t.type12, t.type21, t.simple, t.inflation_of_simple].map(BigInt::from);
        let want: Vec<&BigInt> = s[..4].iter().map(|c| &c[n]).collect();
        if got.iter().ne(want) || BigInt::from(t.total) != *parity {
            return Err(format!("n = {n}: {t:?}"));
        }
        if n >= 6 && n % 2 == 0 {
            gamma.push(t.simple);
        }
        if n >= 8 && n % 2 == 0 {
            delta.push(t.inflation_of_simple);
        }
    }
    if gamma != [1, 1, 3, 6, 15] || delta != [3, 10, 35, 116] {
        return Err(format!("gamma {gamma:?}, delta {delta:?}"));
    }
    Ok(format!("n <= 14; gamma {gamma:?}; delta {delta:?}"))
}

fn golden_fixtures() -> Result<String, String> {
    let mut sizes = Vec::new();
    for n in [10, 12, 14] {
        if !golden_fixture_check(n).unwrap() {
            return Err(format!("listing for n = {n} differs"));
        }
        let entries = parse_fixture(fixture_text(n).unwrap()).unwrap();
        let enumerated = simple_involutions(n).unwrap();
        if entries.iter().map(|e| &e.involution).ne(enumerated.iter()) {
            return Err(format!("n = {n}: set mismatch"));
        }
        sizes.push(entries.len());
    }
    if sizes != [3, 6, 15] {
        return Err(format!("sizes {sizes:?}"));
    }
    Ok("n = 10, 12, 14 byte-identical (3, 6, 15 entries)".into())
}

fn residuals() -> Result<String, String> {
    let rels = [
        Relation::ClassSystem,
        Relation::SeparableSystem,
        Relation::ParitySystem,
        Relation::CombinedSystem,
        Relation::ZetaPoly,
        Relation::FPoly,
        Relation::AlphaPoly,
    ];
    for r in rels {
        let res = relation_residual(r, ORDER).unwrap();
        if !res.is_zero() {
            return Err(format!("{r}: {:?}", res.failing()));
        }
    }
    Ok(format!(
        "{} relations zero through order {ORDER}",
        rels.len()
    ))
}

fn inflation_formula() -> Result<String, String> {
    let g = ints(SeriesName::Gamma, ORDER);
    let z = ints(SeriesName::Zeta, ORDER);
    for n in 4..=ORDER / 2 {
        let lhs = inflation_count(n, &g).unwrap();
        let rhs = &z[2 * n] - &g[2 * n];
        if lhs != rhs {
            return Err(format!("length {}: {lhs} vs {rhs}", 2 * n));
        }
    }
    Ok(format!("lengths 8..={ORDER}"))
}

fn phi_expansion() -> Result<String, String> {
    let phi = ints(SeriesName::Phi, ORDER);
    if phi[1..] != phi_recurrence(ORDER)[..] {
        return Err("recurrence mismatch".into());
    }
    let printed = [
        1, 2, 3, 6, 10, 19, 33, 61, 108, 197, 352, 638, 1145, 2069, 3721, 6714, 12087,
    ]
    .map(BigInt::from);
    if phi[1..18] != printed[..] {
        return Err(format!("head {:?}", &phi[1..18]));
    }
    Ok(format!(
        "recurrence through order {ORDER}; 17 printed terms"
    ))
}

fn round_trips() -> Result<String, String> {
    let mut dyck = 0;
    let mut seq = 0;
    for n in (2..=14).step_by(2) {
        for p in fpf(n) {
            let d = labelled_motzkin_from_involution(&p).unwrap();
            if involution_from_dyck(&d).ok().as_ref() != Some(&p) {
                return Err(format!("Dyck round trip fails at {p}"));
            }
            dyck += 1;
            if p.is_simple() {
                let s = crossing_sequence(&p).unwrap();
                if involution_from_sequence(&s).ok().as_ref() != Some(&p) {
                    return Err(format!("sequence round trip fails at {p}"));
                }
                seq += 1;
            }
        }
        // simple involutions of length 2k <-> short Motzkin paths of length k - 1
        let simple = fpf(n).iter().filter(|p| p.is_simple()).count();
        if motzkin_paths(n / 2 - 1, true).len() != simple {
            return Err(format!("length {n}: path count differs from {simple}"));
        }
    }
    Ok(format!(
        "{dyck} Dyck and {seq} sequence round trips; path counts agree to length 14"
    ))
}

fn criterion_equivalence() -> Result<String, String> {
    let p321: Permutation = "321".parse().unwrap();
    let mut checked = 0;
    for n in 1..=12 {
        for p in all_involutions(n) {
            if avoids_321_by_motzkin(&p).unwrap() == p.contains_pattern(&p321) {
                return Err(format!("321 criterion fails at {p}"));
            }
            if !p.has_fixed_point() && p.avoids_321() {
                let d = labelled_motzkin_from_involution(&p).unwrap();
                if is_simple_via_dyck(&d).unwrap() != p.is_simple() {
                    return Err(format!("simplicity criterion fails at {p}"));
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} involutions, n <= 12"))
}

fn documented_discrepancies() -> Result<String, String> {
    let report = verify::run(Suite::All, 10, ORDER).map_err(|e| e.to_string())?;
    let sep = report
        .check("separable-intersection")
        .ok_or("missing separable check")?;
    let eps = report
        .check("epsilon-closed-form")
        .ok_or("missing epsilon check")?;
    if sep.status != Status::DiscrepancyDocumented
        || !sep
            .actual
            .contains("match phi: true, match f - gamma: false")
    {
        return Err(format!("separable: {} / {}", sep.status, sep.actual));
    }
    if eps.status != Status::DiscrepancyDocumented
        || !eps.actual.contains("matches even-length counts: true")
    {
        return Err(format!("epsilon: {} / {}", eps.status, eps.actual));
    }
    if report.has_failure() {
        return Err("verify suite reported a failure".into());
    }
    Ok(
        "separable counts follow phi; printed epsilon radical off (both discrepancy-documented)"
            .into(),
    )
}

type Criterion = (
    &'static str,
    fn() -> Result<String, String>,
    Option<Duration>,
);

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("counting law", counting_law, Some(COUNTING_LIMIT)),
        ("doubling law", doubling_law, None),
        (
            "classification vs series",
            classification,
            Some(CLASSIFICATION_LIMIT),
        ),
        ("golden fixtures", golden_fixtures, None),
        ("series residuals", residuals, Some(RESIDUAL_LIMIT)),
        ("inflation count formula", inflation_formula, None),
        ("phi expansion", phi_expansion, None),
        ("bijection round trips", round_trips, None),
        ("criterion equivalence", criterion_equivalence, None),
        ("documented discrepancies", documented_discrepancies, None),
    ];
    let mut failed = Vec::new();
    // written past the test harness capture so the lines always show
    let mut out = std::io::stdout();
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let over = limit.is_some_and(|l| elapsed > l);
        let (tag, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; exceeded {:?}", limit.unwrap())),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        let limit_note = limit.map(|l| format!(", limit {l:?}")).unwrap_or_default();
        let _ = writeln!(
            out,
            "acceptance {:>2} {tag} {name}: {detail} [{elapsed:.2?}{limit_note}]",
            i + 1
        );
        if tag == "FAIL" {
            failed.push(i + 1);
        }
    }
    let _ = out.flush();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
