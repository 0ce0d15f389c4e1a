use std::collections::BTreeSet;

use avoid321::enumerate::{
    all_involutions, count_classes, fixture_text, gen_involutions_avoiding_321,
    golden_fixture_check, parse_fixture, FIXTURE_LENGTHS,
};
use avoid321::series::{expand_named, inflation_count, relation_residual, Relation, SeriesName};
use avoid321::Permutation;
use num_bigint::BigInt;

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

#[test]
fn generator_matches_filter() {
    for n in 1..=10 {
        let generated: Vec<Permutation> = gen_involutions_avoiding_321(n).unwrap().collect();
        let mut filtered: Vec<Permutation> = all_involutions(n)
            .into_iter()
            .filter(|p| p.avoids_321())
            .collect();
        filtered.sort();
        assert_eq!(generated, filtered, "n = {n}");
    }
}

#[test]
fn central_binomial_counts() {
    let f = ints(SeriesName::F, 16);
    for (n, fn_) in f.iter().enumerate().skip(1) {
        let count = BigInt::from(gen_involutions_avoiding_321(n).unwrap().count());
        assert_eq!(count, binomial(n, n / 2), "n = {n}");
        assert_eq!(count, *fn_, "n = {n}");
    }
    for (n, fn_) in ints(SeriesName::F, 40).iter().enumerate().skip(1) {
        assert_eq!(*fn_, binomial(n, n / 2), "n = {n}");
    }
}

#[test]
fn tallies_match_series() {
    let order = 14;
    let a = ints(SeriesName::Alpha, order);
    let b = ints(SeriesName::Beta, order);
    let g = ints(SeriesName::Gamma, order);
    let d = ints(SeriesName::Delta, order);
    let e = ints(SeriesName::Epsilon, order);
    let o = ints(SeriesName::Omega, order);
    for n in 1..=order {
        let t = count_classes(n).unwrap();
        assert!(t.is_consistent());
        assert_eq!(BigInt::from(t.type12), a[n], "alpha at {n}");
        assert_eq!(BigInt::from(t.type21), b[n], "beta at {n}");
        assert_eq!(t.type21, u64::from(n % 2 == 0), "type 21 at {n}");
        assert_eq!(BigInt::from(t.simple), g[n], "gamma at {n}");
        assert_eq!(BigInt::from(t.inflation_of_simple), d[n], "delta at {n}");
        let parity = if n % 2 == 0 { &e[n] } else { &o[n] };
        assert_eq!(BigInt::from(t.total), *parity, "parity series at {n}");
    }
}

#[test]
fn fixtures_are_golden() {
    let sizes: Vec<usize> = FIXTURE_LENGTHS
        .iter()
        .map(|&n| parse_fixture(fixture_text(n).unwrap()).unwrap().len())
        .collect();
    assert_eq!(sizes, [1, 1, 3, 6, 15]);
    for n in FIXTURE_LENGTHS {
        assert!(golden_fixture_check(n).unwrap(), "n = {n}");
    }
}

#[test]
fn fixture_entries_are_distinct_simple_members() {
    for n in FIXTURE_LENGTHS {
        let entries = parse_fixture(fixture_text(n).unwrap()).unwrap();
        let set: BTreeSet<_> = entries.iter().map(|e| e.involution.clone()).collect();
        assert_eq!(set.len(), entries.len());
        for e in entries {
            assert!(
                e.involution.is_involution()
                    && e.involution.avoids_321()
                    && e.involution.is_simple()
            );
        }
    }
}

#[test]
fn relations_vanish_through_order_40() {
    for r in Relation::ALL {
        assert!(relation_residual(r, 40).unwrap().is_zero(), "{r}");
    }
}

#[test]
fn parity_split() {
    let f = expand_named(SeriesName::F, 40).unwrap().series;
    let e = expand_named(SeriesName::Epsilon, 40).unwrap().series;
    let o = expand_named(SeriesName::Omega, 40).unwrap().series;
    let x = avoid321::series::RationalSeries::from_ints(&[0, 1], 40);
    assert!((&e - &(&x * &o).scale(2)).is_zero());
    assert!((&f - &(&e + &o)).is_zero());
    assert!((&e - &f.even_part()).is_zero());
    assert!((&o - &f.odd_part()).is_zero());
}

#[test]
fn inflation_count_formula() {
    let g = ints(SeriesName::Gamma, 40);
    let z = ints(SeriesName::Zeta, 40);
    for n in 4..=20 {
        assert_eq!(
            inflation_count(n, &g).unwrap(),
            &z[2 * n] - &g[2 * n],
            "length {}",
            2 * n
        );
    }
}

#[test]
fn all_named_series_are_integral() {
    for name in SeriesName::ALL {
        let s = expand_named(name, 40).unwrap().series;
        assert!(s.is_integral(), "{name}");
        assert!(
            s.to_integers()
                .unwrap()
                .iter()
                .all(|c| *c >= BigInt::from(0)),
            "{name}"
        );
    }
}
