//! Substitution decomposition and the structure results specific to
//! involutions avoiding 321.
//!
//! Sum and skew decompositions are canonical: the left block is the shortest
//! proper prefix that is an interval, so it is never itself of the same type.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{CycleForm, Permutation};

/// Top-level decomposition of a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Singleton,
    /// `12[left, right]`, `left` not of type 12.
    Sum {
        left: Permutation,
        right: Permutation,
    },
    /// `21[left, right]`, `left` not of type 21.
    Skew {
        left: Permutation,
        right: Permutation,
    },
    /// `skeleton[blocks]` with `skeleton` simple of length at least 4.
    Simple {
        skeleton: Permutation,
        blocks: Vec<Permutation>,
    },
}

/// The class a permutation falls into under [`classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Singleton,
    Type12,
    Type21,
    Simple,
    InflationOfSimple,
}

impl Decomposition {
    pub fn kind(&self) -> Kind {
        match self {
            Decomposition::Singleton => Kind::Singleton,
            Decomposition::Sum { .. } => Kind::Type12,
            Decomposition::Skew { .. } => Kind::Type21,
            Decomposition::Simple { blocks, .. } => {
                if blocks.iter().all(|b| b.len() == 1) {
                    Kind::Simple
                } else {
                    Kind::InflationOfSimple
                }
            }
        }
    }
}

/// Canonical top-level decomposition of `p`.
pub fn classify(p: &Permutation) -> Decomposition {
    let n = p.len();
    if n == 1 {
        return Decomposition::Singleton;
    }
    let v = p.values();

    let mut hi = 0;
    for k in 1..n {
        hi = hi.max(v[k - 1]);
        if hi == k {
            return Decomposition::Sum {
                left: Permutation::standardize(&v[..k]),
                right: Permutation::standardize(&v[k..]),
            };
        }
    }

    let mut lo = usize::MAX;
    for k in 1..n {
        lo = lo.min(v[k - 1]);
        if lo == n - k + 1 {
            return Decomposition::Skew {
                left: Permutation::standardize(&v[..k]),
                right: Permutation::standardize(&v[k..]),
            };
        }
    }

    // Neither sum nor skew: the maximal proper intervals partition the
    // positions, and each one is the longest proper interval starting where
    // the previous one ended.
    let mut bounds = Vec::new();
    let mut a = 0;
    while a < n {
        let (mut lo, mut hi) = (v[a], v[a]);
        let mut end = a;
        for (b, &x) in v.iter().enumerate().skip(a + 1) {
            lo = lo.min(x);
            hi = hi.max(x);
            if b - a + 1 < n && hi - lo == b - a {
                end = b;
            }
        }
        bounds.push((a, end));
        a = end + 1;
    }
    let reps: Vec<usize> = bounds.iter().map(|&(a, _)| v[a]).collect();
    let skeleton = Permutation::standardize(&reps);
    debug_assert!(skeleton.len() >= 4 && skeleton.is_simple());
    let blocks = bounds
        .iter()
        .map(|&(a, b)| Permutation::standardize(&v[a..=b]))
        .collect();
    Decomposition::Simple { skeleton, blocks }
}

/// Fully recursive substitution decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionTree {
    Leaf,
    Sum(Box<DecompositionTree>, Box<DecompositionTree>),
    Skew(Box<DecompositionTree>, Box<DecompositionTree>),
    Simple {
        skeleton: Permutation,
        blocks: Vec<DecompositionTree>,
    },
}

pub fn full_tree(p: &Permutation) -> DecompositionTree {
    match classify(p) {
        Decomposition::Singleton => DecompositionTree::Leaf,
        Decomposition::Sum { left, right } => {
            DecompositionTree::Sum(Box::new(full_tree(&left)), Box::new(full_tree(&right)))
        }
        Decomposition::Skew { left, right } => {
            DecompositionTree::Skew(Box::new(full_tree(&left)), Box::new(full_tree(&right)))
        }
        Decomposition::Simple { skeleton, blocks } => DecompositionTree::Simple {
            skeleton,
            blocks: blocks.iter().map(full_tree).collect(),
        },
    }
}

impl DecompositionTree {
    pub fn len(&self) -> usize {
        match self {
            DecompositionTree::Leaf => 1,
            DecompositionTree::Sum(l, r) | DecompositionTree::Skew(l, r) => l.len() + r.len(),
            DecompositionTree::Simple { blocks, .. } => blocks.iter().map(|b| b.len()).sum(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Re-inflates the tree.
    pub fn to_permutation(&self) -> Permutation {
        match self {
            DecompositionTree::Leaf => Permutation::identity(1),
            DecompositionTree::Sum(l, r) => {
                Permutation::direct_sum(&l.to_permutation(), &r.to_permutation())
            }
            DecompositionTree::Skew(l, r) => {
                Permutation::skew_sum(&l.to_permutation(), &r.to_permutation())
            }
            DecompositionTree::Simple { skeleton, blocks } => {
                let blocks: Vec<Permutation> = blocks.iter().map(|b| b.to_permutation()).collect();
                Permutation::inflate(skeleton, &blocks).expect("block count matches skeleton")
            }
        }
    }

    /// Structural invariants: no sum as the left child of a sum, no skew as
    /// the left child of a skew, and simple skeletons of length >= 4.
    pub fn is_canonical(&self) -> bool {
        match self {
            DecompositionTree::Leaf => true,
            DecompositionTree::Sum(l, r) => {
                !matches!(**l, DecompositionTree::Sum(..)) && l.is_canonical() && r.is_canonical()
            }
            DecompositionTree::Skew(l, r) => {
                !matches!(**l, DecompositionTree::Skew(..)) && l.is_canonical() && r.is_canonical()
            }
            DecompositionTree::Simple { skeleton, blocks } => {
                skeleton.len() >= 4
                    && skeleton.is_simple()
                    && blocks.len() == skeleton.len()
                    && blocks.iter().all(|b| b.is_canonical())
            }
        }
    }
}

/// Writes `12[..]`, `21[..]` and `σ[..]`; a simple node with trivial
/// blocks is written as its skeleton.
impl fmt::Display for DecompositionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionTree::Leaf => write!(f, "1"),
            DecompositionTree::Sum(l, r) => write!(f, "12[{l}, {r}]"),
            DecompositionTree::Skew(l, r) => write!(f, "21[{l}, {r}]"),
            DecompositionTree::Simple { skeleton, blocks } => {
                if blocks.iter().all(|b| *b == DecompositionTree::Leaf) {
                    return write!(f, "{skeleton}");
                }
                write!(f, "{skeleton}[")?;
                for (i, b) in blocks.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{b}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Membership test for I(321) on a cycle form: listing every cycle (fixed
/// points as `(i, i)`) by its smaller element, the larger elements must
/// increase as well.
pub fn satisfies_cycle_criterion(c: &CycleForm) -> bool {
    let mut cycles: Vec<(usize, usize)> = c
        .fixed_points
        .iter()
        .map(|&x| (x, x))
        .chain(c.transpositions.iter().copied())
        .collect();
    cycles.sort_unstable();
    cycles.windows(2).all(|w| w[0].1 < w[1].1)
}

pub fn in_i321(p: &Permutation) -> bool {
    p.is_involution() && p.avoids_321()
}

/// A simple involution avoiding 321 of length `4k - 6`, one for each `k >= 3`.
///
/// The one-line notation is `k, k+2, .., 3k-4`, then `j, 3k-4+j` for
/// `j = 1..=k-2`, then the remaining values in increasing order.
pub fn simple_family(k: usize) -> Result<Permutation> {
    if k < 3 {
        return Err(Error::Precondition(format!(
            "family index k = {k} must be >= 3"
        )));
    }
    let n = 4 * k - 6;
    let mut values: Vec<usize> = (0..k - 1).map(|i| k + 2 * i).collect();
    for j in 1..=k - 2 {
        values.push(j);
        values.push(3 * k - 4 + j);
    }
    let mut used = vec![false; n + 1];
    for &v in &values {
        used[v] = true;
    }
    values.extend((1..=n).filter(|&v| !used[v]));
    let p = Permutation::new(values)?;
    if !(p.is_simple() && in_i321(&p)) {
        return Err(Error::Postcondition(format!(
            "{p} is not a simple involution avoiding 321"
        )));
    }
    Ok(p)
}

/// For a fixed-point-free `p` in I(321) with transpositions
/// `(m_1,M_1)..(m_h,M_h)`, returns `(1)(m_2,M_1)(m_3,M_2)..(m_h,M_{h-1})(M_h)`.
pub fn shift_map(p: &Permutation) -> Result<Permutation> {
    if !in_i321(p) {
        return Err(Error::Precondition(format!(
            "{p} is not an involution avoiding 321"
        )));
    }
    if p.has_fixed_point() {
        return Err(Error::Precondition(format!("{p} has fixed points")));
    }
    let c = p.cycle_form()?;
    let h = c.transpositions.len();
    let t = &c.transpositions;
    let pairs = (1..h).map(|i| (t[i].0, t[i - 1].1)).collect();
    let image = CycleForm::new(vec![1, t[h - 1].1], pairs)?.to_permutation()?;
    if !in_i321(&image) {
        return Err(Error::Postcondition(format!(
            "shift of {p} gave {image}, which contains 321"
        )));
    }
    Ok(image)
}

fn check_doubling_domain(p: &Permutation) -> Result<()> {
    if !in_i321(p) {
        return Err(Error::Precondition(format!(
            "{p} is not an involution avoiding 321"
        )));
    }
    if !p.len().is_multiple_of(2) {
        return Err(Error::Precondition(format!("{p} has odd length")));
    }
    Ok(())
}

/// Maps `p` in I(321) of even length with `p(1) != 1` to one with `p(1) = 1`.
///
/// A sum `12[a, b]` is sent to `12[shift(a), b]`; anything else is shifted
/// whole.
pub fn doubling_forward(p: &Permutation) -> Result<Permutation> {
    check_doubling_domain(p)?;
    if p.image(1) == 1 {
        return Err(Error::Precondition(format!("{p} fixes 1")));
    }
    match classify(p) {
        Decomposition::Sum { left, right } => {
            Ok(Permutation::direct_sum(&shift_map(&left)?, &right))
        }
        _ => shift_map(p),
    }
}

/// Inverse of [`doubling_forward`].
///
/// With `F` the first fixed point after 1, the prefix on `1..=F` has
/// transpositions `(a_2,b_2)..(a_k,b_k)`; it is replaced by
/// `(1,b_2)(a_2,b_3)..(a_k,F)`.
pub fn doubling_inverse(p: &Permutation) -> Result<Permutation> {
    check_doubling_domain(p)?;
    if p.image(1) != 1 {
        return Err(Error::Precondition(format!("{p} does not fix 1")));
    }
    let n = p.len();
    let f = p
        .fixed_points()
        .find(|&x| x > 1)
        .ok_or_else(|| Error::Precondition(format!("{p} has a single fixed point")))?;
    let prefix = &p.values()[..f];
    if prefix.iter().any(|&v| v > f) {
        return Err(Error::Precondition(format!(
            "prefix 1..={f} of {p} is not an interval"
        )));
    }
    let head = Permutation::new(prefix.to_vec())?;
    let c = head.cycle_form()?;
    let minima = std::iter::once(1).chain(c.smaller());
    let maxima = c.larger().chain(std::iter::once(f));
    let head = CycleForm::new(vec![], minima.zip(maxima).collect())?.to_permutation()?;
    Ok(if f < n {
        Permutation::direct_sum(&head, &Permutation::standardize(&p.values()[f..]))
    } else {
        head
    })
}
