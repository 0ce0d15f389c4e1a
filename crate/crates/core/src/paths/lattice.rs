use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    Up,
    Down,
    Horizontal,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Horizontal => 'H',
        }
    }
}

/// A lattice path over `U`, `D`, `H` with a positive label on every down
/// step. The all-ones labelling is the default and is not printed.
///
/// Serialized as e.g. `UUDHD` or `UUHD:2D`, where `:h` follows a down step
/// whose label `h` differs from 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePath {
    steps: Vec<Step>,
    labels: Vec<usize>,
}

impl LatticePath {
    /// Unit-labelled path. Height constraints are not checked here.
    pub fn new(steps: Vec<Step>) -> Self {
        let downs = steps.iter().filter(|&&s| s == Step::Down).count();
        LatticePath {
            steps,
            labels: vec![1; downs],
        }
    }

    pub fn with_labels(steps: Vec<Step>, labels: Vec<usize>) -> Result<Self> {
        let downs = steps.iter().filter(|&&s| s == Step::Down).count();
        if labels.len() != downs {
            return Err(Error::InvalidPath(format!(
                "{} labels for {downs} down steps",
                labels.len()
            )));
        }
        if labels.contains(&0) {
            return Err(Error::InvalidPath("labels must be positive".into()));
        }
        Ok(LatticePath { steps, labels })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// One label per down step, in path order.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights before each step followed by the final height; `None` if the
    /// path dips below zero.
    pub fn heights(&self) -> Option<Vec<usize>> {
        let mut h = 0usize;
        let mut out = Vec::with_capacity(self.len() + 1);
        out.push(0);
        for s in &self.steps {
            h = match s {
                Step::Up => h + 1,
                Step::Down => h.checked_sub(1)?,
                Step::Horizontal => h,
            };
            out.push(h);
        }
        Some(out)
    }

    pub fn is_motzkin(&self) -> bool {
        self.heights().is_some_and(|h| h.last() == Some(&0))
    }

    pub fn is_dyck(&self) -> bool {
        self.is_motzkin() && !self.steps.contains(&Step::Horizontal)
    }

    pub fn is_unitary(&self) -> bool {
        self.labels.iter().all(|&l| l == 1)
    }

    /// Horizontal steps taken at height 0.
    pub fn level_zero_horizontals(&self) -> Vec<usize> {
        let Some(h) = self.heights() else {
            return Vec::new();
        };
        self.steps
            .iter()
            .enumerate()
            .filter(|&(i, &s)| s == Step::Horizontal && h[i] == 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Motzkin with no horizontal step at height 0.
    pub fn is_short_motzkin(&self) -> bool {
        self.is_motzkin() && self.level_zero_horizontals().is_empty()
    }

    /// 1-based positions of the up steps.
    pub fn up_positions(&self) -> Vec<usize> {
        self.positions(Step::Up)
    }

    /// 1-based positions of the down steps.
    pub fn down_positions(&self) -> Vec<usize> {
        self.positions(Step::Down)
    }

    fn positions(&self, step: Step) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s == step)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut labels = self.labels.iter();
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
            if *s == Step::Down {
                match labels.next() {
                    Some(&l) if l != 1 => write!(f, ":{l}")?,
                    _ => {}
                }
            }
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::new();
        let mut labels = Vec::new();
        let mut chars = s.trim().chars().peekable();
        while let Some(c) = chars.next() {
            match c.to_ascii_uppercase() {
                'U' => steps.push(Step::Up),
                'H' => steps.push(Step::Horizontal),
                'D' => {
                    steps.push(Step::Down);
                    let mut label = 1;
                    if chars.peek() == Some(&':') {
                        chars.next();
                        let mut digits = String::new();
                        while let Some(d) = chars.next_if(char::is_ascii_digit) {
                            digits.push(d);
                        }
                        label = digits
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad label in path `{s}`")))?;
                    }
                    labels.push(label);
                }
                other => {
                    return Err(Error::Parse(format!("unexpected `{other}` in path `{s}`")));
                }
            }
        }
        LatticePath::with_labels(steps, labels)
    }
}

/// All Motzkin paths of length `n` in lexicographic order of `U < D < H`.
/// With `short` set, horizontal steps at height 0 are excluded.
pub fn motzkin_paths(n: usize, short: bool) -> Vec<LatticePath> {
    fn rec(n: usize, short: bool, h: usize, cur: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        let left = n - cur.len();
        if left == 0 {
            if h == 0 {
                out.push(LatticePath::new(cur.clone()));
            }
            return;
        }
        if h > left {
            return;
        }
        for s in [Step::Up, Step::Down, Step::Horizontal] {
            let next = match s {
                Step::Up => h + 1,
                Step::Down if h == 0 => continue,
                Step::Down => h - 1,
                Step::Horizontal if short && h == 0 => continue,
                Step::Horizontal => h,
            };
            cur.push(s);
            rec(n, short, next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, short, 0, &mut Vec::with_capacity(n), &mut out);
    out
}
