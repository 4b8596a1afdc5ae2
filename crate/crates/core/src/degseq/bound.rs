//! Upper bound on irregularity from the degree sequence alone.
//!
//! An edge with end degrees `a < b` is counted once for every threshold
//! `i` with `a ≤ i < b`, so `irr = Σ_i |{uv : d(u) ≤ i < d(v)}|`. At each
//! threshold that count is at most both
//! `Σ_{d(v)≤i} min(d(v), #{d > i})` and `Σ_{d(v)>i} min(d(v), #{d ≤ i})`.

use serde::Serialize;

use super::DegreeSequence;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEvaluation {
    /// One entry per threshold `i = 0..n-1`.
    pub terms: Vec<u64>,
    pub total: u64,
}

/// Reusable prefix tables for evaluating the bound many times.
#[derive(Debug, Default, Clone)]
pub struct BoundEvaluator {
    counts: Vec<u64>,
    // at_most[x] = #{v : d(v) ≤ x}, weight[x] = Σ_{d(v) ≤ x} d(v)
    at_most: Vec<u64>,
    weight: Vec<u64>,
}

impl BoundEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    fn load(&mut self, degrees: &[usize]) {
        let n = degrees.len();
        self.counts.clear();
        self.counts.resize(n + 1, 0);
        for &d in degrees {
            self.counts[d.min(n)] += 1;
        }
        self.at_most.clear();
        self.weight.clear();
        let (mut c, mut w) = (0, 0);
        for (x, &k) in self.counts.iter().enumerate() {
            c += k;
            w += k * x as u64;
            self.at_most.push(c);
            self.weight.push(w);
        }
    }

    #[inline]
    fn term(&self, i: usize, n: usize) -> u64 {
        let nn = n as u64;
        let low = self.at_most[i];
        let high = nn - low;
        // Σ_{d ≤ i} min(d, high)
        let cap = i.min(high as usize);
        let left = self.weight[cap] + high * (low - self.at_most[cap]);
        // Σ_{d > i} min(d, low)
        let right = if (low as usize) <= i {
            low * high
        } else {
            let l = low as usize;
            self.weight[l] - self.weight[i] + low * (nn - self.at_most[l])
        };
        left.min(right)
    }

    /// Full per-threshold evaluation. `degrees` may be in any order.
    pub fn evaluate(&mut self, degrees: &[usize]) -> BoundEvaluation {
        let n = degrees.len();
        self.load(degrees);
        let terms: Vec<u64> = (0..n).map(|i| self.term(i, n)).collect();
        let total = terms.iter().sum();
        BoundEvaluation { terms, total }
    }

    /// Same as `evaluate(degrees).total` without allocating the terms.
    pub fn total(&mut self, degrees: &[usize]) -> u64 {
        let n = degrees.len();
        self.load(degrees);
        (0..n).map(|i| self.term(i, n)).sum()
    }
}

pub fn irr_upper_bound(s: &DegreeSequence) -> BoundEvaluation {
    BoundEvaluator::new().evaluate(s.values())
}
