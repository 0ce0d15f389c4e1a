//! Brute-force generation of I(321), classification tallies and the golden
//! listings of simple involutions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::paths::crossing_sequence;
use crate::perm::Permutation;
use crate::structure::{classify, Kind};

/// Lexicographic stream of the involutions of length `n` avoiding 321.
///
/// Built as an involution position by position: a free position either
/// becomes a fixed point (only when no transposition is open across it) or
/// opens a transposition whose larger element exceeds every larger element
/// placed so far.
#[derive(Debug, Clone)]
pub struct Involutions321 {
    n: usize,
    vals: Vec<usize>,
    stack: Vec<Frame>,
    max_larger: usize,
    started: bool,
    done: bool,
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    pos: usize,
    value: usize,
    saved_max: usize,
}

impl Involutions321 {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("length must be >= 1".into()));
        }
        Ok(Involutions321 {
            n,
            vals: vec![0; n + 1],
            stack: Vec::new(),
            max_larger: 0,
            started: false,
            done: false,
        })
    }

    fn place(&mut self, pos: usize, after: usize) -> bool {
        let lower = if self.max_larger < pos {
            pos
        } else {
            self.max_larger + 1
        };
        let value = lower.max(after + 1);
        if value > self.n {
            return false;
        }
        self.stack.push(Frame {
            pos,
            value,
            saved_max: self.max_larger,
        });
        self.vals[pos] = value;
        self.vals[value] = pos;
        self.max_larger = value;
        true
    }

    /// Moves to the next sibling of the deepest frame that has one.
    fn backtrack(&mut self) -> bool {
        while let Some(f) = self.stack.pop() {
            self.vals[f.pos] = 0;
            self.vals[f.value] = 0;
            self.max_larger = f.saved_max;
            if self.place(f.pos, f.value) {
                return true;
            }
        }
        false
    }

    fn search(&mut self, mut backtrack: bool) -> bool {
        loop {
            if backtrack && !self.backtrack() {
                return false;
            }
            let mut pos = self.stack.last().map_or(1, |f| f.pos + 1);
            while pos <= self.n && self.vals[pos] != 0 {
                pos += 1;
            }
            if pos > self.n {
                return true;
            }
            backtrack = !self.place(pos, 0);
        }
    }
}

impl Iterator for Involutions321 {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let found = self.search(self.started);
        self.started = true;
        if found {
            Some(Permutation::from_vec_unchecked(self.vals[1..].to_vec()))
        } else {
            self.done = true;
            None
        }
    }
}

pub fn gen_involutions_avoiding_321(n: usize) -> Result<Involutions321> {
    Involutions321::new(n)
}

/// All permutations of length `n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut current: Option<Vec<usize>> = (n > 0).then(|| (1..=n).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let v = current.as_mut().unwrap();
        match (0..v.len().saturating_sub(1))
            .rev()
            .find(|&i| v[i] < v[i + 1])
        {
            Some(i) => {
                let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
                v.swap(i, j);
                v[i + 1..].reverse();
            }
            None => current = None,
        }
        Some(Permutation::from_vec_unchecked(out))
    })
}

/// All involutions of length `n`, unrestricted.
pub fn all_involutions(n: usize) -> Vec<Permutation> {
    fn rec(vals: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let n = vals.len() - 1;
        let Some(i) = (1..=n).find(|&i| vals[i] == 0) else {
            out.push(Permutation::from_vec_unchecked(vals[1..].to_vec()));
            return;
        };
        for j in i..=n {
            if vals[j] == 0 {
                vals[i] = j;
                vals[j] = i;
                rec(vals, out);
                vals[i] = 0;
                vals[j] = 0;
            }
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(&mut vec![0; n + 1], &mut out);
    }
    out
}

/// Counts of I(321)_n by decomposition class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassTally {
    pub n: usize,
    pub total: u64,
    pub singleton: u64,
    pub type12: u64,
    pub type21: u64,
    /// Simple involutions of length >= 4 (1, 12 and 21 are excluded).
    pub simple: u64,
    pub inflation_of_simple: u64,
}

impl ClassTally {
    pub fn is_consistent(&self) -> bool {
        self.total
            == self.singleton + self.type12 + self.type21 + self.simple + self.inflation_of_simple
            && (self.singleton == 1) == (self.n == 1)
    }
}

pub fn count_classes(n: usize) -> Result<ClassTally> {
    let mut tally = ClassTally {
        n,
        ..ClassTally::default()
    };
    for p in gen_involutions_avoiding_321(n)? {
        tally.total += 1;
        match classify(&p).kind() {
            Kind::Singleton => tally.singleton += 1,
            Kind::Type12 => tally.type12 += 1,
            Kind::Type21 => tally.type21 += 1,
            Kind::Simple => tally.simple += 1,
            Kind::InflationOfSimple => tally.inflation_of_simple += 1,
        }
    }
    Ok(tally)
}

/// `|I(321)_n ∩ Av(2413, 3142)|`.
pub fn count_separable_intersection(n: usize) -> Result<u64> {
    let a: Permutation = "2413".parse()?;
    let b: Permutation = "3142".parse()?;
    Ok(gen_involutions_avoiding_321(n)?
        .filter(|p| !p.contains_pattern(&a) && !p.contains_pattern(&b))
        .count() as u64)
}

/// Simple members of I(321)_n of length >= 4, lexicographic.
pub fn simple_involutions(n: usize) -> Result<Vec<Permutation>> {
    Ok(gen_involutions_avoiding_321(n)?
        .filter(|p| p.len() >= 4 && p.is_simple())
        .collect())
}

/// Lengths for which a golden listing is shipped.
pub const FIXTURE_LENGTHS: [usize; 5] = [6, 8, 10, 12, 14];

pub fn fixture_text(n: usize) -> Option<&'static str> {
    match n {
        6 => Some(include_str!("../fixtures/simple_involutions_6.txt")),
        8 => Some(include_str!("../fixtures/simple_involutions_8.txt")),
        10 => Some(include_str!("../fixtures/simple_involutions_10.txt")),
        12 => Some(include_str!("../fixtures/simple_involutions_12.txt")),
        14 => Some(include_str!("../fixtures/simple_involutions_14.txt")),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureEntry {
    pub involution: Permutation,
    pub sequence: Vec<usize>,
}

/// Parses the fixture format: `<one-line notation> {s1,s2,...}` per line,
/// blank lines and `#` comments ignored.
pub fn parse_fixture(text: &str) -> Result<Vec<FixtureEntry>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let (perm, seq) = line
                .split_once(' ')
                .ok_or_else(|| Error::Parse(format!("fixture line `{line}`")))?;
            Ok(FixtureEntry {
                involution: perm.parse()?,
                sequence: crate::paths::parse_sequence(seq)?,
            })
        })
        .collect()
}

/// Renders the simple involutions of length `n` in fixture format.
pub fn render_simple_listing(n: usize) -> Result<String> {
    let mut out = String::new();
    for p in simple_involutions(n)? {
        let s = crossing_sequence(&p)?;
        out.push_str(&format!("{p} {s}\n"));
    }
    Ok(out)
}

/// Byte-exact comparison of the enumerated listing against the shipped
/// fixture (comment lines excluded).
pub fn golden_fixture_check(n: usize) -> Result<bool> {
    let text =
        fixture_text(n).ok_or_else(|| Error::Precondition(format!("no fixture for length {n}")))?;
    let expected: String = text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    Ok(render_simple_listing(n)? == expected)
}
