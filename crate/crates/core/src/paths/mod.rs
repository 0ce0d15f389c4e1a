//! Plots, crossing sequences and lattice-path encodings of involutions in
//! I(321).

mod lattice;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use lattice::{motzkin_paths, LatticePath, Step};

/// Per-transposition crossing counts `s_1, ..., s_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrossingSequence(Vec<usize>);

impl CrossingSequence {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() || values.contains(&0) {
            return Err(Error::Parse(
                "crossing sequence must be nonempty and positive".into(),
            ));
        }
        Ok(CrossingSequence(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All entries odd, first and last equal to 1, consecutive entries
    /// differing by at most 2, and no two adjacent 1s.
    pub fn is_admissible(&self) -> bool {
        let s = &self.0;
        s.iter().all(|v| v % 2 == 1)
            && s[0] == 1
            && s[s.len() - 1] == 1
            && s.windows(2)
                .all(|w| w[0].abs_diff(w[1]) <= 2 && !(w[0] == 1 && w[1] == 1))
    }

    fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::Inadmissible(self.to_string()))
        }
    }

    /// True iff `other` occurs in `self` as a (not necessarily contiguous)
    /// subsequence.
    pub fn contains_subsequence(&self, other: &CrossingSequence) -> bool {
        let mut it = self.0.iter();
        other.0.iter().all(|v| it.any(|w| w == v))
    }
}

impl fmt::Display for CrossingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for CrossingSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CrossingSequence::new(parse_sequence(s)?)
    }
}

/// Accepts `{1,3,1}`, `1,3,1` and the compact digit form `{131}`.
pub fn parse_sequence(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .unwrap_or(t)
        .trim();
    let bad = || Error::Parse(format!("crossing sequence `{s}`"));
    if inner.is_empty() {
        return Err(bad());
    }
    if inner.contains(',') {
        inner
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    } else {
        inner
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConnectionKind {
    Upper,
    Lower,
}

/// Two plot points on the same side of the diagonal at adjacent positions.
///
/// `index` is the 1-based transposition index `i`: the connection joins the
/// points of transpositions `i` and `i + 1`. `values` are the values of the
/// two joined points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Connection {
    pub kind: ConnectionKind,
    pub index: usize,
    pub values: (usize, usize),
}

/// Transpositions `(m_i, M_i)` sorted by `m_i` of a fixed-point-free
/// 321-avoiding involution.
fn pairs(p: &Permutation) -> Result<Vec<(usize, usize)>> {
    let c = p.cycle_form()?;
    if !c.fixed_points.is_empty() {
        return Err(Error::Precondition(format!("{p} has fixed points")));
    }
    if !p.avoids_321() {
        return Err(Error::Precondition(format!("{p} contains 321")));
    }
    Ok(c.transpositions)
}

pub fn plot_connections(p: &Permutation) -> Result<Vec<Connection>> {
    let t = pairs(p)?;
    let mut out = Vec::new();
    for (i, w) in t.windows(2).enumerate() {
        let ((m0, big0), (m1, big1)) = (w[0], w[1]);
        if m1 == m0 + 1 {
            out.push(Connection {
                kind: ConnectionKind::Upper,
                index: i + 1,
                values: (big0, big1),
            });
        }
        if big1 == big0 + 1 {
            out.push(Connection {
                kind: ConnectionKind::Lower,
                index: i + 1,
                values: (m0, m1),
            });
        }
    }
    Ok(out)
}

/// True iff an upper and a lower connection share a transposition index.
pub fn has_symmetric_connection_pair(p: &Permutation) -> Result<bool> {
    let c = plot_connections(p)?;
    Ok(c.windows(2).any(|w| w[0].index == w[1].index))
}

/// `s_i` is the number of sign changes of `p(j) - j` for `j` running from
/// `m_i` to `M_i`.
pub fn crossing_sequence(p: &Permutation) -> Result<CrossingSequence> {
    let above: Vec<bool> = p
        .values()
        .iter()
        .enumerate()
        .map(|(j, &v)| v > j + 1)
        .collect();
    let values = pairs(p)?
        .into_iter()
        .map(|(m, big)| (m..big).filter(|&j| above[j - 1] != above[j]).count())
        .collect();
    CrossingSequence::new(values)
}

/// Crossing-sequence differences `+2 / -2 / 0` read as `U / D / H`.
/// Accepts any odd sequence with steps of at most 2, so horizontal steps at
/// height 0 (adjacent 1s) are allowed.
pub fn motzkin_steps_of_sequence(s: &CrossingSequence) -> Result<LatticePath> {
    let v = s.values();
    if v.iter().any(|x| x % 2 == 0) || v[0] != 1 || v[v.len() - 1] != 1 {
        return Err(Error::Inadmissible(s.to_string()));
    }
    let steps = v
        .windows(2)
        .map(|w| match w[1] as isize - w[0] as isize {
            2 => Ok(Step::Up),
            -2 => Ok(Step::Down),
            0 => Ok(Step::Horizontal),
            _ => Err(Error::Inadmissible(s.to_string())),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LatticePath::new(steps))
}

pub fn motzkin_from_sequence(s: &CrossingSequence) -> Result<LatticePath> {
    s.require_admissible()?;
    motzkin_steps_of_sequence(s)
}

pub fn sequence_from_motzkin(m: &LatticePath) -> Result<CrossingSequence> {
    if !m.is_short_motzkin() || !m.is_unitary() {
        return Err(Error::InvalidPath(format!(
            "`{m}` is not an unlabelled Motzkin path without level-0 horizontal steps"
        )));
    }
    let mut s = vec![1usize];
    for step in m.steps() {
        let last = s[s.len() - 1];
        s.push(match step {
            Step::Up => last + 2,
            Step::Down => last - 2,
            Step::Horizontal => last,
        });
    }
    CrossingSequence::new(s)
}

/// The simple involution of length `2|s|` with crossing sequence `s`.
///
/// Transposition `i` has its smaller element in the `u_i`-th run of the
/// above/below word and its larger element in run `d_i`, so that
/// `s_i = d_i - u_i`. Starting from `u_1 = 1, d_1 = 2`, an up step of the
/// Motzkin path advances `d` by 2, a down step advances `u` by 2 and a
/// horizontal step advances both.
pub fn involution_from_sequence(s: &CrossingSequence) -> Result<Permutation> {
    let path = motzkin_from_sequence(s)?;
    let (mut u, mut d) = (1usize, 2usize);
    let mut run_u = vec![u];
    let mut run_d = vec![d];
    for step in path.steps() {
        match step {
            Step::Up => d += 2,
            Step::Down => u += 2,
            Step::Horizontal => {
                u += 2;
                d += 2;
            }
        }
        run_u.push(u);
        run_d.push(d);
    }
    let runs = u.max(d);
    let mut len = vec![0usize; runs + 1];
    for &r in run_u.iter().chain(&run_d) {
        len[r] += 1;
    }
    let mut steps = Vec::with_capacity(2 * s.len());
    for (r, &l) in len.iter().enumerate().skip(1) {
        let step = if r % 2 == 1 { Step::Up } else { Step::Down };
        steps.extend(std::iter::repeat_n(step, l));
    }
    let p = involution_from_dyck(&LatticePath::new(steps))?;
    let back = crossing_sequence(&p)?;
    if back != *s || !p.is_simple() {
        return Err(Error::Postcondition(format!(
            "{s} rebuilt as {p} with sequence {back}"
        )));
    }
    Ok(p)
}

/// Up at smaller transposition elements, down at larger ones, horizontal at
/// fixed points. A down step is labelled with the rank of its partner among
/// the transpositions open at that point, oldest first.
pub fn labelled_motzkin_from_involution(p: &Permutation) -> Result<LatticePath> {
    if !p.is_involution() {
        return Err(Error::NotAnInvolution(p.to_string()));
    }
    let mut steps = Vec::with_capacity(p.len());
    let mut labels = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    for i in 1..=p.len() {
        let v = p.image(i);
        if v == i {
            steps.push(Step::Horizontal);
        } else if v > i {
            steps.push(Step::Up);
            open.push(i);
        } else {
            steps.push(Step::Down);
            let rank = open.iter().position(|&o| o == v).expect("partner is open");
            open.remove(rank);
            labels.push(rank + 1);
        }
    }
    LatticePath::with_labels(steps, labels)
}

/// Inverse of [`labelled_motzkin_from_involution`].
pub fn involution_from_labelled_motzkin(m: &LatticePath) -> Result<Permutation> {
    if !m.is_motzkin() || m.is_empty() {
        return Err(Error::InvalidPath(format!(
            "`{m}` is not a nonempty Motzkin path"
        )));
    }
    let mut values = vec![0; m.len()];
    let mut open: Vec<usize> = Vec::new();
    let mut labels = m.labels().iter();
    for (i, step) in m.steps().iter().enumerate() {
        let i = i + 1;
        match step {
            Step::Horizontal => values[i - 1] = i,
            Step::Up => open.push(i),
            Step::Down => {
                let h = *labels.next().expect("one label per down step");
                if h > open.len() {
                    return Err(Error::InvalidPath(format!(
                        "label {h} at step {i} exceeds {} open steps",
                        open.len()
                    )));
                }
                let a = open.remove(h - 1);
                values[a - 1] = i;
                values[i - 1] = a;
            }
        }
    }
    Permutation::new(values)
}

/// Unit labels and every horizontal step at height 0; holds exactly for the
/// involutions avoiding 321.
pub fn avoids_321_by_motzkin(p: &Permutation) -> Result<bool> {
    let m = labelled_motzkin_from_involution(p)?;
    Ok(m.is_unitary() && m.level_zero_horizontals().len() == p.fixed_points().count())
}

fn require_dyck(d: &LatticePath) -> Result<()> {
    if d.is_empty() || !d.is_dyck() || !d.is_unitary() {
        return Err(Error::InvalidPath(format!(
            "`{d}` is not a nonempty Dyck path"
        )));
    }
    Ok(())
}

/// Pairs the `i`-th up step with the `i`-th down step.
pub fn involution_from_dyck(d: &LatticePath) -> Result<Permutation> {
    require_dyck(d)?;
    let mut values = vec![0; d.len()];
    for (a, b) in d.up_positions().into_iter().zip(d.down_positions()) {
        values[a - 1] = b;
        values[b - 1] = a;
    }
    Permutation::new(values)
}

/// Simplicity read off the Dyck path: it returns to height 0 only at the end,
/// and no two consecutive up steps `U_i, U_{i+1}` have consecutive partners
/// `D_i, D_{i+1}`.
pub fn is_simple_via_dyck(d: &LatticePath) -> Result<bool> {
    require_dyck(d)?;
    let h = d.heights().expect("checked Dyck");
    let irreducible = h[1..h.len() - 1].iter().all(|&x| x > 0);
    let ups = d.up_positions();
    let downs = d.down_positions();
    let doubled = (1..ups.len()).any(|i| ups[i] == ups[i - 1] + 1 && downs[i] == downs[i - 1] + 1);
    Ok(irreducible && !doubled)
}

/// Admissible sequences of length `len`, lexicographic.
pub fn admissible_sequences(len: usize) -> Vec<CrossingSequence> {
    if len == 0 {
        return Vec::new();
    }
    motzkin_paths(len - 1, true)
        .iter()
        .map(|m| sequence_from_motzkin(m).expect("short Motzkin path"))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Admissible sequences of length at least 3 and below `|s|` occurring in
/// `s` as subsequences, lexicographic.
pub fn simple_patterns_contained(s: &CrossingSequence) -> Result<Vec<CrossingSequence>> {
    s.require_admissible()?;
    Ok((3..s.len())
        .flat_map(admissible_sequences)
        .filter(|t| s.contains_subsequence(t))
        .collect())
}

/// Admissible sequences one longer than `s` containing it as a subsequence.
pub fn simple_extensions(s: &CrossingSequence) -> Result<Vec<CrossingSequence>> {
    s.require_admissible()?;
    Ok(admissible_sequences(s.len() + 1)
        .into_iter()
        .filter(|t| t.contains_subsequence(s))
        .collect())
}

/// Splits a sequence at its adjacent pairs of 1s (level-0 horizontal steps).
pub fn split_components(s: &CrossingSequence) -> Vec<CrossingSequence> {
    let v = s.values();
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..v.len() {
        if v[i - 1] == 1 && v[i] == 1 {
            out.push(CrossingSequence(v[start..i].to_vec()));
            start = i;
        }
    }
    out.push(CrossingSequence(v[start..].to_vec()));
    out
}

/// Maximal splitting of `p` as a direct sum; each block standardized.
pub fn sum_components(p: &Permutation) -> Vec<Permutation> {
    let v = p.values();
    let mut out = Vec::new();
    let (mut start, mut max) = (0, 0);
    for (i, &x) in v.iter().enumerate() {
        max = max.max(x);
        if max == i + 1 {
            out.push(Permutation::standardize(&v[start..=i]));
            start = i + 1;
        }
    }
    out
}
