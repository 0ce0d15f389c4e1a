//! Permutations in one-line notation and the elementary operations on them.
//!
//! Values are 1-based throughout. Multi-digit entries are written in
//! parentheses when rendered, so `468192(10)357` is the length-10
//! permutation `4,6,8,1,9,2,10,3,5,7`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Validates `values` as a rearrangement of `1..=n`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty sequence".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("duplicate value {v}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    /// Builds a permutation from values already known to be valid.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity of length 0");
        Permutation((1..=n).collect())
    }

    /// The order-isomorphic permutation of an arbitrary sequence of
    /// distinct integers.
    pub fn standardize<T: Ord>(seq: &[T]) -> Self {
        let mut idx: Vec<usize> = (0..seq.len()).collect();
        idx.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
        let mut out = vec![0; seq.len()];
        for (rank, &i) in idx.iter().enumerate() {
            out[i] = rank + 1;
        }
        Permutation::from_vec_unchecked(out)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `p(i)` for 1-based `i`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    pub fn is_involution(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &v)| self.0[v - 1] == i + 1)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, &v)| v == i + 1)
            .map(|(i, _)| i + 1)
    }

    pub fn has_fixed_point(&self) -> bool {
        self.fixed_points().next().is_some()
    }

    /// True iff some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let k = pattern.len();
        if k > self.len() {
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        self.embed(pattern.values(), 0, &mut chosen)
    }

    fn embed(&self, pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        if k == pattern.len() {
            return true;
        }
        let remaining = pattern.len() - k;
        for idx in start..=self.len() - remaining {
            let v = self.0[idx];
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(l, &c)| (pattern[l] < pattern[k]) == (self.0[c] < v));
            if consistent {
                chosen.push(idx);
                if self.embed(pattern, idx + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    /// 321-avoidance in linear time: the entries that are not
    /// left-to-right maxima must form an increasing sequence.
    pub fn avoids_321(&self) -> bool {
        let mut max = 0;
        let mut last_non_max = 0;
        for &v in &self.0 {
            if v > max {
                max = v;
            } else {
                if v < last_non_max {
                    return false;
                }
                last_non_max = v;
            }
        }
        true
    }

    /// True iff `values[a..=b]` (0-based, inclusive) is an interval.
    pub fn is_interval(&self, a: usize, b: usize) -> bool {
        let w = &self.0[a..=b];
        let lo = *w.iter().min().unwrap();
        let hi = *w.iter().max().unwrap();
        hi - lo == b - a
    }

    /// Simple iff no interval of length strictly between 1 and n exists.
    pub fn is_simple(&self) -> bool {
        let n = self.len();
        for a in 0..n {
            let (mut lo, mut hi) = (self.0[a], self.0[a]);
            for b in a + 1..n {
                lo = lo.min(self.0[b]);
                hi = hi.max(self.0[b]);
                let len = b - a + 1;
                if len < n && hi - lo == len - 1 {
                    return false;
                }
            }
        }
        true
    }

    /// `skeleton[blocks]`: entry `i` of the skeleton is replaced by a copy of
    /// `blocks[i]`, shifted so the blocks occupy contiguous value ranges
    /// ordered like the skeleton values.
    pub fn inflate(skeleton: &Permutation, blocks: &[Permutation]) -> Result<Permutation> {
        if blocks.len() != skeleton.len() {
            return Err(Error::Precondition(format!(
                "inflation of a length-{} skeleton needs {} blocks, got {}",
                skeleton.len(),
                skeleton.len(),
                blocks.len()
            )));
        }
        let mut offset = vec![0; skeleton.len() + 1];
        let inv = skeleton.inverse();
        let mut acc = 0;
        for v in 1..=skeleton.len() {
            offset[v] = acc;
            acc += blocks[inv.image(v) - 1].len();
        }
        let mut out = Vec::with_capacity(acc);
        for (i, block) in blocks.iter().enumerate() {
            let base = offset[skeleton.0[i]];
            out.extend(block.values().iter().map(|&v| base + v));
        }
        Ok(Permutation(out))
    }

    /// `12[a, b]`.
    pub fn direct_sum(a: &Permutation, b: &Permutation) -> Permutation {
        let shift = a.len();
        let mut out = a.0.clone();
        out.extend(b.0.iter().map(|&v| v + shift));
        Permutation(out)
    }

    /// `21[a, b]`.
    pub fn skew_sum(a: &Permutation, b: &Permutation) -> Permutation {
        let shift = b.len();
        let mut out: Vec<usize> = a.0.iter().map(|&v| v + shift).collect();
        out.extend_from_slice(&b.0);
        Permutation(out)
    }

    pub fn cycle_form(&self) -> Result<CycleForm> {
        if !self.is_involution() {
            return Err(Error::NotAnInvolution(self.to_string()));
        }
        let mut fixed_points = Vec::new();
        let mut transpositions = Vec::new();
        for (i, &v) in self.0.iter().enumerate() {
            let i = i + 1;
            match v.cmp(&i) {
                std::cmp::Ordering::Equal => fixed_points.push(i),
                std::cmp::Ordering::Greater => transpositions.push((i, v)),
                std::cmp::Ordering::Less => {}
            }
        }
        Ok(CycleForm {
            fixed_points,
            transpositions,
        })
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.0 {
            if v < 10 {
                write!(f, "{v}")?;
            } else {
                write!(f, "({v})")?;
            }
        }
        Ok(())
    }
}

/// Accepts `351624`, `468192(10)357` and comma separated `4,6,8,1,9,2,10,3,5,7`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad entry `{t}` in `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            let mut values = Vec::new();
            let mut chars = s.chars();
            while let Some(c) = chars.next() {
                match c {
                    '(' => {
                        let rest = chars.as_str();
                        let close = rest
                            .find(')')
                            .ok_or_else(|| Error::Parse(format!("unclosed `(` in `{s}`")))?;
                        let digits = &rest[..close];
                        chars = rest[close + 1..].chars();
                        let v = digits.parse::<usize>().map_err(|_| {
                            Error::Parse(format!("bad entry `({digits})` in `{s}`"))
                        })?;
                        values.push(v);
                    }
                    c if c.is_ascii_digit() => values.push(c as usize - '0' as usize),
                    c if c.is_whitespace() => {}
                    c => return Err(Error::Parse(format!("unexpected `{c}` in `{s}`"))),
                }
            }
            values
        };
        Permutation::new(values)
    }
}

/// Fixed points and transpositions `(m, M)`, `m < M`, sorted by `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleForm {
    pub fixed_points: Vec<usize>,
    pub transpositions: Vec<(usize, usize)>,
}

impl CycleForm {
    pub fn len(&self) -> usize {
        self.fixed_points.len() + 2 * self.transpositions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Builds a cycle form from arbitrary cycles, normalizing order.
    pub fn new(mut fixed_points: Vec<usize>, transpositions: Vec<(usize, usize)>) -> Result<Self> {
        let mut transpositions: Vec<(usize, usize)> = transpositions
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        if transpositions.iter().any(|&(a, b)| a == b) {
            return Err(Error::InvalidPermutation("degenerate transposition".into()));
        }
        fixed_points.sort_unstable();
        transpositions.sort_unstable();
        let form = CycleForm {
            fixed_points,
            transpositions,
        };
        form.to_permutation()?;
        Ok(form)
    }

    pub fn smaller(&self) -> impl Iterator<Item = usize> + '_ {
        self.transpositions.iter().map(|t| t.0)
    }

    pub fn larger(&self) -> impl Iterator<Item = usize> + '_ {
        self.transpositions.iter().map(|t| t.1)
    }

    pub fn to_permutation(&self) -> Result<Permutation> {
        let n = self.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty cycle form".into()));
        }
        let mut values = vec![0; n];
        let mut put = |i: usize, v: usize| -> Result<()> {
            if i == 0 || i > n || values[i - 1] != 0 {
                return Err(Error::InvalidPermutation(format!(
                    "cycle form does not cover 1..={n} exactly once"
                )));
            }
            values[i - 1] = v;
            Ok(())
        };
        for &f in &self.fixed_points {
            put(f, f)?;
        }
        for &(a, b) in &self.transpositions {
            put(a, b)?;
            put(b, a)?;
        }
        Permutation::new(values)
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cycles: Vec<(usize, Option<usize>)> = self
            .fixed_points
            .iter()
            .map(|&x| (x, None))
            .chain(self.transpositions.iter().map(|&(a, b)| (a, Some(b))))
            .collect();
        cycles.sort_unstable();
        for (a, b) in cycles {
            match b {
                Some(b) => write!(f, "({a},{b})")?,
                None => write!(f, "({a})")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(
            Permutation::new(vec![3, 5, 1, 6, 2, 4]).unwrap(),
            p("351624")
        );
        assert_eq!(Permutation::new(vec![1]).unwrap().len(), 1);
        assert!(Permutation::new(vec![3, 3, 1]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
    }

    #[test]
    fn notation_round_trip() {
        let q = p("468192(10)357");
        assert_eq!(q.values(), &[4, 6, 8, 1, 9, 2, 10, 3, 5, 7]);
        assert_eq!(q.to_string(), "468192(10)357");
        assert_eq!(p("4,6,8,1,9,2,10,3,5,7"), q);
        assert!("12a".parse::<Permutation>().is_err());
        assert!("1(2".parse::<Permutation>().is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("351624").inverse(), p("351624"));
        assert_eq!(p("12345").inverse(), p("12345"));
        assert_eq!(p("231").inverse(), p("312"));
    }

    #[test]
    fn involution_examples() {
        assert!(p("351624").is_involution());
        assert!(!p("231").is_involution());
        assert!(p("132546").is_involution());
    }

    #[test]
    fn pattern_examples() {
        assert!(!p("351624").contains_pattern(&p("321")));
        assert!(p("351624").contains_pattern(&p("2413")));
        assert!(p("4213").contains_pattern(&p("1")));
        assert!(!p("12").contains_pattern(&p("123")));
        assert!(p("54321").contains_pattern(&p("321")));
    }

    #[test]
    fn cycle_form_examples() {
        let c = p("351624").cycle_form().unwrap();
        assert!(c.fixed_points.is_empty());
        assert_eq!(c.transpositions, vec![(1, 3), (2, 5), (4, 6)]);
        assert_eq!(c.to_string(), "(1,3)(2,5)(4,6)");

        let c = p("1").cycle_form().unwrap();
        assert_eq!(c.fixed_points, vec![1]);
        assert!(c.transpositions.is_empty());

        let c = p("132546").cycle_form().unwrap();
        assert_eq!(c.fixed_points, vec![1, 6]);
        assert_eq!(c.transpositions, vec![(2, 3), (4, 5)]);
        assert_eq!(c.to_string(), "(1)(2,3)(4,5)(6)");

        assert!(p("231").cycle_form().is_err());
    }

    #[test]
    fn cycle_form_rejects_bad_cover() {
        assert!(CycleForm::new(vec![1], vec![(1, 2)]).is_err());
        assert!(CycleForm::new(vec![], vec![(1, 3)]).is_err());
        let c = CycleForm::new(vec![], vec![(5, 2), (3, 1), (6, 4)]).unwrap();
        assert_eq!(c.to_permutation().unwrap(), p("351624"));
    }

    #[test]
    fn simplicity_examples() {
        assert!(p("351624").is_simple());
        for q in ["123", "132", "213", "231", "312", "321"] {
            assert!(!p(q).is_simple(), "{q}");
        }
        assert!(!p("45712836").is_simple());
        assert!(p("1").is_simple() && p("12").is_simple() && p("21").is_simple());
        assert!(p("2413").is_simple() && p("3142").is_simple());
    }

    #[test]
    fn inflation_examples() {
        let blocks: Vec<Permutation> = ["12", "1", "12", "1", "1", "1"]
            .iter()
            .map(|s| p(s))
            .collect();
        assert_eq!(
            Permutation::inflate(&p("351624"), &blocks).unwrap(),
            p("45712836")
        );

        let ones = vec![p("1"); 6];
        assert_eq!(
            Permutation::inflate(&p("351624"), &ones).unwrap(),
            p("351624")
        );

        assert_eq!(
            Permutation::inflate(&p("12"), &[p("1"), p("351624")]).unwrap(),
            p("1462735")
        );
        assert!(Permutation::inflate(&p("12"), &[p("1")]).is_err());
    }

    #[test]
    fn sums() {
        assert_eq!(Permutation::direct_sum(&p("21"), &p("1")), p("213"));
        assert_eq!(Permutation::skew_sum(&p("12"), &p("12")), p("3412"));
    }

    #[test]
    fn standardize() {
        assert_eq!(Permutation::standardize(&[30, 50, 10]), p("231"));
    }
}
