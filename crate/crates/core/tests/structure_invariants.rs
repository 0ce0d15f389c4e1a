use avoid321::enumerate::{all_involutions, all_permutations, gen_involutions_avoiding_321};
use avoid321::structure::{
    classify, doubling_forward, doubling_inverse, in_i321, satisfies_cycle_criterion,
    simple_family, Decomposition, Kind,
};
use avoid321::Permutation;

fn members(n: usize) -> Vec<Permutation> {
    gen_involutions_avoiding_321(n).unwrap().collect()
}

#[test]
fn sum_of_involutions() {
    for n in 2..=10 {
        for p in all_permutations(n) {
            if let Decomposition::Sum { left, right } = classify(&p) {
                assert_eq!(
                    p.is_involution(),
                    left.is_involution() && right.is_involution(),
                    "{p}"
                );
            }
        }
    }
}

#[test]
fn sum_blocks_stay_in_class() {
    for n in 2..=12 {
        for p in members(n) {
            if let Decomposition::Sum { left, right } = classify(&p) {
                assert!(in_i321(&left) && in_i321(&right), "{p}");
                assert_ne!(classify(&left).kind(), Kind::Type12);
            }
        }
    }
}

#[test]
fn unique_skew_member() {
    for n in 1..=14 {
        let skew: Vec<Permutation> = members(n)
            .into_iter()
            .filter(|p| classify(p).kind() == Kind::Type21)
            .collect();
        if n % 2 == 1 {
            assert!(skew.is_empty(), "n = {n}");
        } else {
            let m = n / 2;
            let expected: Vec<usize> = (m + 1..=n).chain(1..=m).collect();
            assert_eq!(skew, [Permutation::new(expected).unwrap()], "n = {n}");
        }
    }
}

#[test]
fn simples_and_their_inflations_have_even_length() {
    for n in 3..=14 {
        for p in members(n) {
            let kind = classify(&p).kind();
            if matches!(kind, Kind::Simple | Kind::InflationOfSimple) {
                assert_eq!(n % 2, 0, "{p}");
            }
            if kind == Kind::Simple {
                assert!(!p.has_fixed_point(), "{p}");
            }
        }
    }
}

/// Compositions of `total` into `parts` positive parts.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (1..=total - (parts - 1))
        .flat_map(|a| {
            compositions(total - a, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, a);
                    rest
                })
        })
        .collect()
}

fn for_each_block_choice(
    lengths: &[usize],
    cur: &mut Vec<Permutation>,
    f: &mut impl FnMut(&[Permutation]),
) {
    if cur.len() == lengths.len() {
        f(cur);
        return;
    }
    for b in all_permutations(lengths[cur.len()]) {
        cur.push(b);
        for_each_block_choice(lengths, cur, f);
        cur.pop();
    }
}

#[test]
fn inflations_of_the_smallest_simple() {
    let sigma: Permutation = "351624".parse().unwrap();
    let mut checked = 0usize;
    for total in 6..=12 {
        for lengths in compositions(total, 6) {
            for_each_block_choice(&lengths, &mut Vec::new(), &mut |blocks| {
                let q = Permutation::inflate(&sigma, blocks).unwrap();
                let ascending = blocks.iter().all(|b| *b == Permutation::identity(b.len()));
                let paired = (1..=6).all(|i| lengths[i - 1] == lengths[sigma.image(i) - 1]);
                assert_eq!(in_i321(&q), ascending && paired, "{q}");
                checked += 1;
            });
        }
    }
    assert_eq!(checked, 232_929);
}

#[test]
fn cycle_criterion_matches_pattern_test() {
    let p321: Permutation = "321".parse().unwrap();
    for n in 1..=12 {
        for p in all_involutions(n) {
            assert_eq!(
                satisfies_cycle_criterion(&p.cycle_form().unwrap()),
                !p.contains_pattern(&p321),
                "{p}"
            );
        }
    }
}

#[test]
fn half_of_even_members_fix_one() {
    for m in 1..=7 {
        let all = members(2 * m);
        let fixing = all.iter().filter(|p| p.image(1) == 1).count();
        assert_eq!(2 * fixing, all.len(), "m = {m}");
    }
}

#[test]
fn doubling_map_round_trips() {
    for m in 1..=6 {
        let all = members(2 * m);
        let mut images: Vec<Permutation> = Vec::new();
        for p in all.iter().filter(|p| p.image(1) != 1) {
            let q = doubling_forward(p).unwrap();
            assert_eq!(q.image(1), 1);
            assert!(in_i321(&q));
            assert_eq!(doubling_inverse(&q).unwrap(), *p);
            images.push(q);
        }
        images.sort();
        images.dedup();
        let targets: Vec<Permutation> = all.into_iter().filter(|p| p.image(1) == 1).collect();
        assert_eq!(images, targets, "m = {m}");
    }
}

#[test]
fn simple_family_members() {
    for k in 3..=8 {
        let p = simple_family(k).unwrap();
        assert_eq!(p.len(), 4 * k - 6);
        assert!(in_i321(&p) && p.is_simple(), "{p}");
    }
}
