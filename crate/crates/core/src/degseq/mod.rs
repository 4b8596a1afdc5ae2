//! Degree sequences: Erdős–Gallai testing, Havel–Hakimi realization,
//! enumeration of every graphic sequence of a given length, and the
//! degree-sequence upper bound on irregularity.

mod bound;
mod enumerate;
mod realize;

pub use bound::{irr_upper_bound, BoundEvaluation, BoundEvaluator};
pub use enumerate::{
    enumerate_graphic, enumerate_graphic_parallel, enumerate_graphic_with, max_bound_sequences,
    max_bound_sequences_with, EnumerationOptions, MaxBound,
};
pub use realize::{havel_hakimi, realize};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

/// A nonincreasing list of degrees, each at most `len - 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DegreeSequence(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("sequence is not nonincreasing at position {0}")]
    NotSorted(usize),
    #[error("degree {degree} exceeds n - 1 = {max} for a sequence of length {len}", max = .len.saturating_sub(1))]
    DegreeTooLarge { degree: usize, len: usize },
    #[error("cannot parse `{0}` as a degree")]
    Parse(String),
    #[error("not graphic ({0})")]
    NotGraphic(Violation),
    #[error("Havel–Hakimi failed on a sequence accepted by Erdős–Gallai: {0}")]
    Inconsistent(DegreeSequence),
}

/// Reason a sequence fails the Erdős–Gallai test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    OddSum,
    /// The inequality fails first at this `r` (1-based).
    Inequality {
        r: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OddSum => f.write_str("odd degree sum"),
            Violation::Inequality { r } => write!(f, "Erdős–Gallai fails at r={r}"),
        }
    }
}

impl DegreeSequence {
    pub fn new(values: Vec<usize>) -> Result<Self, SequenceError> {
        if let Some(i) = values.windows(2).position(|w| w[0] < w[1]) {
            return Err(SequenceError::NotSorted(i + 1));
        }
        if let Some(&first) = values.first() {
            if first >= values.len() {
                return Err(SequenceError::DegreeTooLarge {
                    degree: first,
                    len: values.len(),
                });
            }
        }
        Ok(DegreeSequence(values))
    }

    /// Sorts `values` into nonincreasing order first.
    pub fn from_unsorted(mut values: Vec<usize>) -> Result<Self, SequenceError> {
        values.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(values)
    }

    /// `[(n-1)^p, p^q]`, the degree sequence of the clique-star `KS_{p,q}`.
    pub fn clique_star(p: usize, q: usize) -> Self {
        let n = p + q;
        let mut v = vec![n.saturating_sub(1); p];
        v.extend(std::iter::repeat_n(p, q));
        DegreeSequence(v)
    }

    pub(crate) fn from_sorted_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        DegreeSequence(values)
    }

    pub(crate) fn buffer_mut(&mut self) -> &mut Vec<usize> {
        &mut self.0
    }

    #[inline]
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Bracketed form with comma-space separators, e.g. `[2, 1, 1]`.
    pub fn bracketed(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }

    pub fn is_graphic(&self) -> bool {
        erdos_gallai_violation(self.values()).is_none()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DegreeSequence({self})")
    }
}

/// Parses comma-separated integers, without reordering.
impl FromStr for DegreeSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DegreeSequence::new(parse_degrees(s)?)
    }
}

pub fn parse_degrees(s: &str) -> Result<Vec<usize>, SequenceError> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| SequenceError::Parse(t.trim().to_string())))
        .collect()
}

pub fn is_graphic(s: &DegreeSequence) -> bool {
    s.is_graphic()
}

/// Checks parity and then `Σ_{i≤r} d_i ≤ r(r-1) + Σ_{i>r} min(r, d_i)` for
/// every `1 ≤ r ≤ n`, returning the first failure. `d` must be
/// nonincreasing.
///
/// Runs in O(n): for each `r` the entries `≥ r` form a prefix of length
/// `c_r`, so the right-hand tail splits into `r·max(0, c_r - r)` plus a
/// suffix sum.
pub fn erdos_gallai_violation(d: &[usize]) -> Option<Violation> {
    debug_assert!(d.windows(2).all(|w| w[0] >= w[1]));
    let n = d.len();
    let total: usize = d.iter().sum();
    if total % 2 == 1 {
        return Some(Violation::OddSum);
    }
    // suffix[j] = Σ_{i ≥ j} d[i] (0-based)
    let mut suffix = vec![0usize; n + 1];
    for j in (0..n).rev() {
        suffix[j] = suffix[j + 1] + d[j];
    }
    let mut lhs = 0usize;
    let mut c = n;
    for r in 1..=n {
        lhs += d[r - 1];
        while c > 0 && d[c - 1] < r {
            c -= 1;
        }
        let capped = c.saturating_sub(r) * r;
        let rest = suffix[c.max(r)];
        if lhs > r * (r - 1) + capped + rest {
            return Some(Violation::Inequality { r });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    /// Direct transcription of the inequality family, O(n²).
    fn naive_eg(d: &[usize]) -> Option<Violation> {
        if d.iter().sum::<usize>() % 2 == 1 {
            return Some(Violation::OddSum);
        }
        let n = d.len();
        for r in 1..=n {
            let lhs: usize = d[..r].iter().sum();
            let rhs = r * (r - 1) + d[r..].iter().map(|&x| x.min(r)).sum::<usize>();
            if lhs > rhs {
                return Some(Violation::Inequality { r });
            }
        }
        None
    }

    #[test]
    fn examples() {
        assert!(seq(&[3, 3, 3, 3]).is_graphic());
        assert_eq!(
            erdos_gallai_violation(&[3, 3, 1, 1]),
            Some(Violation::Inequality { r: 2 })
        );
        assert!(seq(&[4, 4, 2, 2, 2]).is_graphic());
        assert_eq!(erdos_gallai_violation(&[2, 1, 0]), Some(Violation::OddSum));
        assert!(seq(&[]).is_graphic());
        assert!(seq(&[0]).is_graphic());
    }

    #[test]
    fn fast_and_naive_agree_on_all_small_sequences() {
        fn rec(n: usize, cur: &mut Vec<usize>, hi: usize) {
            if cur.len() == n {
                assert_eq!(erdos_gallai_violation(cur), naive_eg(cur), "{cur:?}");
                return;
            }
            for x in (0..=hi).rev() {
                cur.push(x);
                rec(n, cur, x);
                cur.pop();
            }
        }
        for n in 1..=9 {
            rec(n, &mut Vec::new(), n - 1);
        }
    }

    #[test]
    fn construction_rejects_malformed() {
        assert_eq!(DegreeSequence::new(vec![1, 2, 1]), Err(SequenceError::NotSorted(1)));
        assert!(matches!(
            DegreeSequence::new(vec![3, 1, 1]),
            Err(SequenceError::DegreeTooLarge { .. })
        ));
        assert_eq!(DegreeSequence::from_unsorted(vec![1, 2, 1]).unwrap(), seq(&[2, 1, 1]));
    }

    #[test]
    fn text_forms() {
        let s: DegreeSequence = "5,5,2,2,2,2".parse().unwrap();
        assert_eq!(s.to_string(), "5,5,2,2,2,2");
        assert_eq!(s.bracketed(), "[5, 5, 2, 2, 2, 2]");
        assert_eq!("[2, 1, 1]".parse::<DegreeSequence>().unwrap(), seq(&[2, 1, 1]));
        assert!(matches!("2,x".parse::<DegreeSequence>(), Err(SequenceError::Parse(_))));
    }

    #[test]
    fn clique_star_sequence() {
        assert_eq!(DegreeSequence::clique_star(2, 4), seq(&[5, 5, 2, 2, 2, 2]));
        assert_eq!(DegreeSequence::clique_star(3, 0), seq(&[2, 2, 2]));
    }
}
