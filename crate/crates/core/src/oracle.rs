//! Exhaustive scans over every labeled graph on `n ≤ 8` vertices.
//!
//! Graphs are edge subsets numbered `0..2^(n(n-1)/2)`. Bit `e` of a mask is
//! the pair `(u, v)`, `u < v`, in column-major order (`e = v(v-1)/2 + u`).
//! A scan walks a contiguous index range in Gray-code order, so each step
//! toggles one edge and the degree array and irregularity are updated in
//! O(n). Ranges are split statically across workers and merged in range
//! order; every result is independent of the worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::degseq::{BoundEvaluator, DegreeSequence};
use crate::graph::Graph;
use crate::parallel::Workers;

/// Largest order any scan accepts.
pub const MAX_SCAN_ORDER: usize = 8;

const MAX_EDGES: usize = MAX_SCAN_ORDER * (MAX_SCAN_ORDER - 1) / 2;

const EDGE_ENDPOINTS: [(u8, u8); MAX_EDGES] = {
    let mut table = [(0u8, 0u8); MAX_EDGES];
    let mut v = 1;
    let mut e = 0;
    while v < MAX_SCAN_ORDER {
        let mut u = 0;
        while u < v {
            table[e] = (u as u8, v as u8);
            e += 1;
            u += 1;
        }
        v += 1;
    }
    table
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScanError {
    #[error("refusing to scan n = {n}: 2^{log2_graphs} labeled graphs (limit is n = {MAX_SCAN_ORDER})")]
    TooLarge { n: usize, log2_graphs: usize },
    #[error("scans need at least one vertex")]
    NoVertices,
    #[error("k = {k} is infeasible for n = {n} (0 <= k <= {max_k})")]
    Cyclomatic { n: usize, k: usize, max_k: usize },
}

/// Admissibility test applied to every scanned graph. Degree bounds are
/// exact (`δ(G) = min_degree`, `Δ(G) = max_degree`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub connected: bool,
    pub edges: Option<usize>,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
}

impl Constraint {
    pub fn all() -> Self {
        Constraint::default()
    }

    pub fn connected() -> Self {
        Constraint {
            connected: true,
            ..Constraint::default()
        }
    }

    /// Connected graphs with exactly `m` edges.
    pub fn edge_count(m: usize) -> Self {
        Constraint {
            edges: Some(m),
            ..Constraint::connected()
        }
    }

    /// Connected graphs with `Δ(G) = big_delta`.
    pub fn max_degree(big_delta: usize) -> Self {
        Constraint {
            max_degree: Some(big_delta),
            ..Constraint::connected()
        }
    }

    /// Connected graphs with `δ(G) = delta` and `Δ(G) = big_delta`.
    pub fn degree_window(delta: usize, big_delta: usize) -> Self {
        Constraint {
            min_degree: Some(delta),
            max_degree: Some(big_delta),
            ..Constraint::connected()
        }
    }

    fn admits(&self, s: &State) -> bool {
        if let Some(m) = self.edges {
            if s.mask.count_ones() as usize != m {
                return false;
            }
        }
        if self.min_degree.is_some() || self.max_degree.is_some() {
            let d = &s.deg[..s.n];
            let lo = *d.iter().min().unwrap_or(&0) as usize;
            let hi = *d.iter().max().unwrap_or(&0) as usize;
            if self.min_degree.is_some_and(|x| x != lo) || self.max_degree.is_some_and(|x| x != hi) {
                return false;
            }
        }
        !self.connected || s.is_connected()
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.connected {
            parts.push("connected".to_string());
        }
        if let Some(m) = self.edges {
            parts.push(format!("m={m}"));
        }
        if let Some(d) = self.min_degree {
            parts.push(format!("min_degree={d}"));
        }
        if let Some(d) = self.max_degree {
            parts.push(format!("max_degree={d}"));
        }
        if parts.is_empty() {
            f.write_str("all")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub constraint: Constraint,
    pub objective: Objective,
    /// `None` when no graph satisfies the constraint.
    pub best_irr: Option<u64>,
    /// One graph per distinct degree sequence attaining `best_irr`, ordered
    /// by decreasing degree sequence. Each is the first such graph in scan
    /// order.
    pub witnesses: Vec<Graph>,
    pub graphs_scanned: u64,
}

impl SearchResult {
    pub fn witness_sequences(&self) -> Vec<DegreeSequence> {
        self.witnesses
            .iter()
            .map(|g| DegreeSequence::new(g.degree_sequence()).expect("degrees of a graph"))
            .collect()
    }
}

/// Outcome of checking the degree-sequence bound against every graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundScan {
    pub n: usize,
    pub graphs_scanned: u64,
    pub violations: u64,
    /// Graphs whose irregularity equals the bound.
    pub tight: u64,
    pub first_violation: Option<Graph>,
}

fn edge_slots(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_order(n: usize) -> Result<(), ScanError> {
    if n == 0 {
        return Err(ScanError::NoVertices);
    }
    if n > MAX_SCAN_ORDER {
        return Err(ScanError::TooLarge {
            n,
            log2_graphs: edge_slots(n),
        });
    }
    Ok(())
}

/// Degrees, adjacency rows and irregularity of the current graph.
#[derive(Clone)]
struct State {
    n: usize,
    mask: u32,
    adj: [u16; MAX_SCAN_ORDER],
    deg: [u8; MAX_SCAN_ORDER],
    irr: u32,
}

impl State {
    fn new(n: usize, mask: u32) -> Self {
        let mut s = State {
            n,
            mask: 0,
            adj: [0; MAX_SCAN_ORDER],
            deg: [0; MAX_SCAN_ORDER],
            irr: 0,
        };
        let mut m = mask;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            m &= m - 1;
            let (u, v) = EDGE_ENDPOINTS[e];
            s.adj[u as usize] |= 1 << v;
            s.adj[v as usize] |= 1 << u;
            s.deg[u as usize] += 1;
            s.deg[v as usize] += 1;
        }
        s.mask = mask;
        s.irr = s.recompute_irr();
        s
    }

    fn recompute_irr(&self) -> u32 {
        let mut total = 0;
        let mut m = self.mask;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            m &= m - 1;
            let (u, v) = EDGE_ENDPOINTS[e];
            total += self.deg[u as usize].abs_diff(self.deg[v as usize]) as u32;
        }
        total
    }

    /// Change in irregularity from moving vertex `a` (degree `from`) to
    /// degree `to`, over its current neighbours other than `skip`.
    #[inline]
    fn shift(&self, a: usize, skip: usize, from: u8, to: u8) -> i32 {
        let mut row = self.adj[a] & !(1 << skip);
        let mut delta = 0i32;
        while row != 0 {
            let w = row.trailing_zeros() as usize;
            row &= row - 1;
            let dw = self.deg[w];
            delta += to.abs_diff(dw) as i32 - from.abs_diff(dw) as i32;
        }
        delta
    }

    #[inline]
    fn toggle(&mut self, e: usize) {
        let (a, b) = EDGE_ENDPOINTS[e];
        let (a, b) = (a as usize, b as usize);
        let (da, db) = (self.deg[a], self.deg[b]);
        let mut delta;
        if self.mask >> e & 1 == 0 {
            delta = self.shift(a, b, da, da + 1) + self.shift(b, a, db, db + 1);
            delta += da.abs_diff(db) as i32;
            self.adj[a] |= 1 << b;
            self.adj[b] |= 1 << a;
            self.deg[a] += 1;
            self.deg[b] += 1;
        } else {
            delta = self.shift(a, b, da, da - 1) + self.shift(b, a, db, db - 1);
            delta -= da.abs_diff(db) as i32;
            self.adj[a] &= !(1 << b);
            self.adj[b] &= !(1 << a);
            self.deg[a] -= 1;
            self.deg[b] -= 1;
        }
        self.mask ^= 1 << e;
        self.irr = (self.irr as i32 + delta) as u32;
    }

    fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let full: u16 = ((1u32 << self.n) - 1) as u16;
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen == full
    }

    fn sorted_degrees(&self) -> [u8; MAX_SCAN_ORDER] {
        let mut d = self.deg;
        d[..self.n].sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[cfg(test)]
    fn to_graph(&self) -> Graph {
        mask_to_graph(self.n, self.mask)
    }
}

fn mask_to_graph(n: usize, mask: u32) -> Graph {
    let mut g = Graph::empty(n);
    let mut m = mask;
    while m != 0 {
        let e = m.trailing_zeros() as usize;
        m &= m - 1;
        let (u, v) = EDGE_ENDPOINTS[e];
        g.add_edge(u as usize, v as usize);
    }
    g
}

#[inline]
fn gray(i: u64) -> u32 {
    (i ^ (i >> 1)) as u32
}

trait Visitor: Send + Sized {
    fn visit(&mut self, s: &State);
    /// Absorbs the result of the range immediately after this one.
    fn merge(self, later: Self) -> Self;
}

fn walk<V: Visitor>(n: usize, start: u64, end: u64, visitor: &mut V) {
    if start >= end {
        return;
    }
    let mut s = State::new(n, gray(start));
    visitor.visit(&s);
    for i in start + 1..end {
        s.toggle(i.trailing_zeros() as usize);
        visitor.visit(&s);
    }
}

/// Splits the index space into contiguous ranges, scans them on `workers`
/// threads and folds the partial results in range order.
fn scan<V: Visitor>(n: usize, workers: usize, make: impl Fn() -> V + Sync) -> (V, u64) {
    let total = 1u64 << edge_slots(n);
    let parts = if workers <= 1 {
        1
    } else {
        (workers as u64 * 4).min(total)
    };
    let bounds: Vec<(u64, u64)> = (0..parts)
        .map(|p| (total * p / parts, total * (p + 1) / parts))
        .collect();
    let run = |&(a, b): &(u64, u64)| {
        let mut v = make();
        walk(n, a, b, &mut v);
        v
    };
    let results: Vec<V> = if parts == 1 {
        bounds.iter().map(run).collect()
    } else {
        Workers::new(workers).install(|| bounds.par_iter().map(run).collect())
    };
    let merged = results.into_iter().reduce(V::merge).expect("at least one range");
    (merged, total)
}

struct Extremum {
    constraint: Constraint,
    objective: Objective,
    best: Option<u32>,
    witnesses: BTreeMap<[u8; MAX_SCAN_ORDER], u32>,
}

impl Extremum {
    fn better(&self, irr: u32, than: u32) -> bool {
        match self.objective {
            Objective::Max => irr > than,
            Objective::Min => irr < than,
        }
    }
}

impl Visitor for Extremum {
    #[inline]
    fn visit(&mut self, s: &State) {
        if let Some(b) = self.best {
            if self.better(b, s.irr) {
                return;
            }
        }
        if !self.constraint.admits(s) {
            return;
        }
        match self.best {
            Some(b) if b == s.irr => {
                self.witnesses.entry(s.sorted_degrees()).or_insert(s.mask);
            }
            _ => {
                self.best = Some(s.irr);
                self.witnesses.clear();
                self.witnesses.insert(s.sorted_degrees(), s.mask);
            }
        }
    }

    fn merge(mut self, later: Self) -> Self {
        match (self.best, later.best) {
            (_, None) => self,
            (None, Some(_)) => later,
            (Some(a), Some(b)) if a == b => {
                for (k, mask) in later.witnesses {
                    self.witnesses.entry(k).or_insert(mask);
                }
                self
            }
            (Some(a), Some(b)) => {
                if self.better(b, a) {
                    later
                } else {
                    self
                }
            }
        }
    }
}

struct BoundCheck {
    evaluator: BoundEvaluator,
    graphs: u64,
    violations: u64,
    tight: u64,
    first_violation: Option<u32>,
}

impl Visitor for BoundCheck {
    fn visit(&mut self, s: &State) {
        let mut d = [0usize; MAX_SCAN_ORDER];
        for (slot, &x) in d.iter_mut().zip(&s.deg[..s.n]) {
            *slot = x as usize;
        }
        let bound = self.evaluator.total(&d[..s.n]);
        let irr = s.irr as u64;
        self.graphs += 1;
        if irr > bound {
            self.violations += 1;
            self.first_violation.get_or_insert(s.mask);
        } else if irr == bound {
            self.tight += 1;
        }
    }

    fn merge(mut self, later: Self) -> Self {
        self.graphs += later.graphs;
        self.violations += later.violations;
        self.tight += later.tight;
        if self.first_violation.is_none() {
            self.first_violation = later.first_violation;
        }
        self
    }
}

struct Sequences(BTreeSet<[u8; MAX_SCAN_ORDER]>);

impl Visitor for Sequences {
    fn visit(&mut self, s: &State) {
        self.0.insert(s.sorted_degrees());
    }

    fn merge(mut self, later: Self) -> Self {
        self.0.extend(later.0);
        self
    }
}

/// Entry point for all scans; `workers` threads share each scan.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    workers: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(1)
    }
}

impl Oracle {
    pub fn new(workers: usize) -> Self {
        Oracle {
            workers: workers.max(1),
        }
    }

    fn extremum(&self, n: usize, constraint: Constraint, objective: Objective) -> Result<SearchResult, ScanError> {
        check_order(n)?;
        let (found, scanned) = scan(n, self.workers, || Extremum {
            constraint,
            objective,
            best: None,
            witnesses: BTreeMap::new(),
        });
        // BTreeMap iterates in increasing order; report decreasing
        let witnesses = found
            .witnesses
            .values()
            .rev()
            .map(|&mask| mask_to_graph(n, mask))
            .collect();
        Ok(SearchResult {
            n,
            constraint,
            objective,
            best_irr: found.best.map(u64::from),
            witnesses,
            graphs_scanned: scanned,
        })
    }

    pub fn max_irr(&self, n: usize, constraint: Constraint) -> Result<SearchResult, ScanError> {
        self.extremum(n, constraint, Objective::Max)
    }

    pub fn min_irr(&self, n: usize, constraint: Constraint) -> Result<SearchResult, ScanError> {
        self.extremum(n, constraint, Objective::Min)
    }

    /// Maximum over connected graphs with `n + k - 1` edges.
    pub fn max_irr_kcyclic(&self, n: usize, k: usize) -> Result<SearchResult, ScanError> {
        check_order(n)?;
        let max_k = (edge_slots(n) + 1).saturating_sub(n);
        if k > max_k {
            return Err(ScanError::Cyclomatic { n, k, max_k });
        }
        self.max_irr(n, Constraint::edge_count(n + k - 1))
    }

    /// Minimum over connected graphs with `Δ(G) = big_delta` and, when
    /// `delta < big_delta`, `δ(G) = delta`. With `delta == big_delta` only
    /// the maximum degree is fixed.
    pub fn min_irr_window(&self, n: usize, delta: usize, big_delta: usize) -> Result<SearchResult, ScanError> {
        let c = if delta == big_delta {
            Constraint::max_degree(big_delta)
        } else {
            Constraint::degree_window(delta, big_delta)
        };
        self.min_irr(n, c)
    }

    /// Compares every graph's irregularity with the degree-sequence bound.
    pub fn bound_soundness(&self, n: usize) -> Result<BoundScan, ScanError> {
        check_order(n)?;
        let (r, _) = scan(n, self.workers, || BoundCheck {
            evaluator: BoundEvaluator::new(),
            graphs: 0,
            violations: 0,
            tight: 0,
            first_violation: None,
        });
        Ok(BoundScan {
            n,
            graphs_scanned: r.graphs,
            violations: r.violations,
            tight: r.tight,
            first_violation: r.first_violation.map(|m| mask_to_graph(n, m)),
        })
    }

    /// Every distinct sorted degree sequence of a labeled graph on `n`
    /// vertices, in decreasing lexicographic order.
    pub fn degree_sequences(&self, n: usize) -> Result<Vec<DegreeSequence>, ScanError> {
        check_order(n)?;
        let (r, _) = scan(n, self.workers, || Sequences(BTreeSet::new()));
        Ok(r.0
            .iter()
            .rev()
            .map(|d| DegreeSequence::new(d[..n].iter().map(|&x| x as usize).collect()).expect("graph degrees"))
            .collect())
    }
}

pub fn brute_max_irr(n: usize, constraint: Constraint) -> Result<SearchResult, ScanError> {
    Oracle::default().max_irr(n, constraint)
}

pub fn brute_max_irr_kcyclic(n: usize, k: usize) -> Result<SearchResult, ScanError> {
    Oracle::default().max_irr_kcyclic(n, k)
}

pub fn brute_min_irr(n: usize, delta: usize, big_delta: usize) -> Result<SearchResult, ScanError> {
    Oracle::default().min_irr_window(n, delta, big_delta)
}
