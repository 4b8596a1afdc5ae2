//! Generation of every graphic sequence of length `n`.
//!
//! Sequences are built left to right in decreasing lexicographic order. A
//! prefix `d_1 ≥ … ≥ d_k` is kept only if, for every `r ≤ k`,
//!
//! ```text
//! Σ_{i≤r} d_i ≤ r(r-1) + Σ_{r<i≤k} min(r, d_i) + (n-k)·min(r, d_k)
//! ```
//!
//! i.e. the Erdős–Gallai inequality can still hold when every remaining
//! entry takes the largest value it may take (`d_k`). At `k = n` this is
//! the full test, so leaves only need the parity check.
//!
//! Parallel runs split the tree by the value of the first entry; each
//! subtree is searched independently and results are merged in subtree
//! order, so output never depends on the worker count.

use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::{BoundEvaluator, DegreeSequence};
use crate::parallel::Workers;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Only sequences whose entries are all at least this value.
    pub min_degree: usize,
    /// Restricts the first (largest) entry. `None` means `min_degree..=n-1`.
    pub first: Option<RangeInclusive<usize>>,
}

impl EnumerationOptions {
    pub fn with_min_degree(min_degree: usize) -> Self {
        EnumerationOptions {
            min_degree,
            first: None,
        }
    }

    fn first_values(&self, n: usize) -> Vec<usize> {
        let top = n.saturating_sub(1);
        let (lo, hi) = match &self.first {
            Some(r) => (*r.start(), (*r.end()).min(top)),
            None => (0, top),
        };
        let lo = lo.max(self.min_degree);
        if lo > hi {
            return Vec::new();
        }
        (lo..=hi).rev().collect()
    }
}

struct Search<'a, F> {
    n: usize,
    min_degree: usize,
    seq: DegreeSequence,
    // prefix[r] = d_1 + … + d_r
    prefix: Vec<usize>,
    // tail[r] = Σ_{r<i≤k} min(r, d_i) for the current prefix length k
    tail: Vec<usize>,
    sink: &'a mut F,
    count: u64,
}

impl<F: FnMut(&DegreeSequence)> Search<'_, F> {
    fn feasible(&self, x: usize) -> Result<(), bool> {
        // prefix of length k+1 after pushing x; `Err(true)` means every
        // smaller x also fails
        let k = self.seq.len();
        let remaining = self.n - k - 1;
        for r in 1..=k {
            let rhs = r * (r - 1) + self.tail[r] + r.min(x) + remaining * r.min(x);
            if self.prefix[r] > rhs {
                return Err(true);
            }
        }
        let r = k + 1;
        let lhs = self.prefix[k] + x;
        if lhs > r * (r - 1) + remaining * r.min(x) {
            return Err(false);
        }
        Ok(())
    }

    fn descend(&mut self, hi: usize) {
        let k = self.seq.len();
        if k == self.n {
            if self.prefix[k].is_multiple_of(2) {
                self.count += 1;
                (self.sink)(&self.seq);
            }
            return;
        }
        if hi < self.min_degree {
            return;
        }
        for x in (self.min_degree..=hi).rev() {
            match self.feasible(x) {
                Ok(()) => {}
                Err(true) => break,
                Err(false) => continue,
            }
            for r in 1..=k {
                self.tail[r] += r.min(x);
            }
            self.seq.buffer_mut().push(x);
            self.prefix.push(self.prefix[k] + x);
            self.tail.push(0);

            self.descend(x);

            self.tail.pop();
            self.prefix.pop();
            self.seq.buffer_mut().pop();
            for r in 1..=k {
                self.tail[r] -= r.min(x);
            }
        }
    }
}

fn search_subtree<F: FnMut(&DegreeSequence)>(n: usize, min_degree: usize, first: usize, sink: &mut F) -> u64 {
    let mut s = Search {
        n,
        min_degree,
        seq: DegreeSequence::from_sorted_unchecked(Vec::with_capacity(n)),
        prefix: vec![0],
        tail: vec![0],
        sink,
        count: 0,
    };
    if s.feasible(first).is_err() {
        return 0;
    }
    s.seq.buffer_mut().push(first);
    s.prefix.push(first);
    s.tail.push(0);
    s.descend(first);
    s.count
}

/// Streams every graphic sequence of length `n` in decreasing lexicographic
/// order and returns how many were produced.
pub fn enumerate_graphic<F: FnMut(&DegreeSequence)>(n: usize, sink: F) -> u64 {
    enumerate_graphic_with(n, &EnumerationOptions::default(), sink)
}

pub fn enumerate_graphic_with<F: FnMut(&DegreeSequence)>(n: usize, opts: &EnumerationOptions, mut sink: F) -> u64 {
    if n == 0 {
        return 0;
    }
    opts.first_values(n)
        .into_iter()
        .map(|first| search_subtree(n, opts.min_degree, first, &mut sink))
        .sum()
}

/// Like [`enumerate_graphic_with`], with subtrees searched on `workers`
/// threads. Sequences reach `sink` in the same order as the serial version.
pub fn enumerate_graphic_parallel<F: FnMut(&DegreeSequence)>(
    n: usize,
    opts: &EnumerationOptions,
    workers: usize,
    mut sink: F,
) -> u64 {
    if workers <= 1 || n == 0 {
        return enumerate_graphic_with(n, opts, sink);
    }
    let firsts = opts.first_values(n);
    let min_degree = opts.min_degree;
    let pool = Workers::new(workers);
    let mut count = 0;
    for batch in firsts.chunks(workers) {
        let buffers: Vec<Vec<DegreeSequence>> = pool.install(|| {
            batch
                .par_iter()
                .map(|&first| {
                    let mut out = Vec::new();
                    search_subtree(n, min_degree, first, &mut |s: &DegreeSequence| out.push(s.clone()));
                    out
                })
                .collect()
        });
        for s in buffers.iter().flatten() {
            count += 1;
            sink(s);
        }
    }
    count
}

/// Largest bound value over all graphic sequences and every sequence that
/// attains it, in decreasing lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxBound {
    pub n: usize,
    pub max_total: u64,
    pub argmax: Vec<DegreeSequence>,
    pub sequences: u64,
}

impl MaxBound {
    fn empty(n: usize) -> Self {
        MaxBound {
            n,
            max_total: 0,
            argmax: Vec::new(),
            sequences: 0,
        }
    }

    fn offer(&mut self, total: u64, s: &DegreeSequence) {
        self.sequences += 1;
        if total > self.max_total || self.argmax.is_empty() {
            self.max_total = total;
            self.argmax.clear();
            self.argmax.push(s.clone());
        } else if total == self.max_total {
            self.argmax.push(s.clone());
        }
    }

    /// Merges a result covering lexicographically smaller sequences.
    fn merge(mut self, later: MaxBound) -> MaxBound {
        self.sequences += later.sequences;
        if later.argmax.is_empty() {
            return self;
        }
        if self.argmax.is_empty() || later.max_total > self.max_total {
            self.max_total = later.max_total;
            self.argmax = later.argmax;
        } else if later.max_total == self.max_total {
            self.argmax.extend(later.argmax);
        }
        self
    }
}

pub fn max_bound_sequences(n: usize) -> MaxBound {
    max_bound_sequences_with(n, &EnumerationOptions::default(), 1)
}

pub fn max_bound_sequences_with(n: usize, opts: &EnumerationOptions, workers: usize) -> MaxBound {
    let run = |first: usize| {
        let mut best = MaxBound::empty(n);
        let mut ev = BoundEvaluator::new();
        search_subtree(n, opts.min_degree, first, &mut |s: &DegreeSequence| {
            let total = ev.total(s.values());
            best.offer(total, s);
        });
        best
    };
    let firsts = opts.first_values(n);
    let parts: Vec<MaxBound> = if workers <= 1 {
        firsts.iter().map(|&f| run(f)).collect()
    } else {
        Workers::new(workers).install(|| firsts.par_iter().map(|&f| run(f)).collect())
    };
    parts.into_iter().fold(MaxBound::empty(n), MaxBound::merge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degseq::havel_hakimi;

    fn collect(n: usize, opts: &EnumerationOptions) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        enumerate_graphic_with(n, opts, |s| out.push(s.values().to_vec()));
        out
    }

    /// All nonincreasing sequences over `[lo, n-1]`, kept when Havel–Hakimi
    /// realizes them; independent of the pruned search and of Erdős–Gallai.
    fn oracle(n: usize, lo: usize) -> Vec<Vec<usize>> {
        fn rec(n: usize, lo: usize, cur: &mut Vec<usize>, hi: usize, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                if havel_hakimi(cur).is_some() {
                    out.push(cur.clone());
                }
                return;
            }
            if hi < lo {
                return;
            }
            for x in (lo..=hi).rev() {
                cur.push(x);
                rec(n, lo, cur, x, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, lo, &mut Vec::new(), n - 1, &mut out);
        out
    }

    #[test]
    fn three_vertices() {
        assert_eq!(
            collect(3, &EnumerationOptions::default()),
            vec![vec![2, 2, 2], vec![2, 1, 1], vec![1, 1, 0], vec![0, 0, 0]]
        );
    }

    #[test]
    fn one_vertex() {
        assert_eq!(collect(1, &EnumerationOptions::default()), vec![vec![0]]);
        assert_eq!(enumerate_graphic(0, |_| {}), 0);
    }

    #[test]
    fn matches_havel_hakimi_oracle() {
        for n in 1..=9 {
            for lo in [0, 1, 2] {
                let opts = EnumerationOptions::with_min_degree(lo);
                assert_eq!(collect(n, &opts), oracle(n, lo), "n = {n}, min degree {lo}");
            }
        }
    }

    #[test]
    fn first_entry_restriction() {
        let opts = EnumerationOptions {
            min_degree: 1,
            first: Some(3..=3),
        };
        let got = collect(5, &opts);
        assert!(!got.is_empty());
        assert!(got.iter().all(|s| s[0] == 3 && s[4] >= 1));
        let all: Vec<_> = oracle(5, 1).into_iter().filter(|s| s[0] == 3).collect();
        assert_eq!(got, all);
    }

    #[test]
    fn parallel_stream_matches_serial() {
        let opts = EnumerationOptions::default();
        let serial = collect(8, &opts);
        for workers in [2, 3, 8] {
            let mut par = Vec::new();
            let count = enumerate_graphic_parallel(8, &opts, workers, |s| par.push(s.values().to_vec()));
            assert_eq!(count as usize, par.len());
            assert_eq!(par, serial, "workers = {workers}");
        }
    }

    #[test]
    fn max_bound_small() {
        let r = max_bound_sequences(3);
        assert_eq!(r.max_total, 2);
        assert_eq!(r.argmax, vec![DegreeSequence::new(vec![2, 1, 1]).unwrap()]);
        assert_eq!(r.sequences, 4);
        let r6 = max_bound_sequences(6);
        assert_eq!(r6.max_total, 24);
        assert_eq!(r6.argmax, vec![DegreeSequence::clique_star(2, 4)]);
    }

    #[test]
    fn max_bound_is_worker_independent() {
        let serial = max_bound_sequences_with(9, &EnumerationOptions::default(), 1);
        for workers in [2, 5] {
            assert_eq!(
                max_bound_sequences_with(9, &EnumerationOptions::default(), workers),
                serial
            );
        }
    }
}
