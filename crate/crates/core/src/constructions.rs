//! Extremal graph families and their closed-form irregularities.
//!
//! Vertex layouts are fixed so that builds are reproducible:
//!
//! - `clique_star(p, q)`: `0..p` form the clique, `p..p+q` the independent set.
//! - `fanned_split`: `0..n_u` universal, `n_u` is the fan centre, the next
//!   `n_1` vertices are its fan, the rest hang only on the universal set.
//! - `chained_clique_stars`: copy `i` occupies `i·(p+q)..(i+1)·(p+q)` with
//!   the clique-star layout above inside it.

use crate::degseq::{erdos_gallai_violation, havel_hakimi, DegreeSequence, EnumerationOptions, Violation};
use crate::graph::{irregularity, Graph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("clique-star needs at least one vertex")]
    EmptyCliqueStar,
    #[error("order {n} is below the minimum of {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("k = {k} needs {edges} edges but a simple graph on {n} vertices has at most {max_edges}")]
    EdgeBudget {
        n: usize,
        k: usize,
        edges: usize,
        max_edges: usize,
    },
    #[error("n_u closed form gives {radical} but the integer search gives {search} (n = {n}, k = {k})")]
    UniversalCountMismatch {
        n: usize,
        k: usize,
        search: usize,
        radical: usize,
    },
    #[error("chain needs copies >= 1, clique size >= 1 and independent size >= 2 (got t = {copies}, p = {clique}, q = {independent})")]
    ChainParams {
        copies: usize,
        clique: usize,
        independent: usize,
    },
    #[error("{what} = {value} is not divisible by {divisor}")]
    NotDivisible {
        what: &'static str,
        value: usize,
        divisor: usize,
    },
    #[error("degree window requires 0 <= delta <= Delta <= n - 1 (got n = {n}, delta = {delta}, Delta = {big_delta})")]
    DegreeWindow { n: usize, delta: usize, big_delta: usize },
    #[error("no graph on {n} vertices has minimum degree {delta} and maximum degree {big_delta}; witness {sequence} is not graphic ({violation})")]
    NotRealizable {
        n: usize,
        delta: usize,
        big_delta: usize,
        sequence: DegreeSequence,
        violation: Violation,
    },
}

/// Join of a `p`-clique with an independent set of size `q`.
pub fn clique_star(p: usize, q: usize) -> Result<Graph, ConstructionError> {
    if p + q == 0 {
        return Err(ConstructionError::EmptyCliqueStar);
    }
    let mut g = Graph::empty(p + q);
    for u in 0..p {
        for v in u + 1..p + q {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// `q(n-q)(n-1-q)`: the irregularity of the clique-star with `q` universal
/// vertices on `n` vertices in total.
pub fn irr_clique_star(universal: usize, n: usize) -> u64 {
    assert!(universal <= n, "more universal vertices than vertices");
    if universal == n {
        return 0;
    }
    let q = universal as u64;
    let n = n as u64;
    q * (n - q) * (n - 1 - q)
}

/// `⌊n/3⌋·⌈2n/3⌉·(⌈2n/3⌉ - 1)`, the largest irregularity of any graph on
/// `n` vertices.
pub fn max_irr_bound(n: usize) -> u64 {
    let lo = (n / 3) as u64;
    let hi = (2 * n).div_ceil(3) as u64;
    lo * hi * hi.saturating_sub(1)
}

/// `(p, q)` of every clique-star of order `n` with maximum irregularity.
/// Two entries exactly when `n ≡ 2 (mod 3)`.
pub fn ks_max_params(n: usize) -> Vec<(usize, usize)> {
    let mut out = vec![(n / 3, (2 * n).div_ceil(3))];
    if n % 3 == 2 {
        out.push((n.div_ceil(3), 2 * n / 3));
    }
    out
}

pub fn ks_max(n: usize) -> Result<Vec<Graph>, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::OrderTooSmall { n, min: 3 });
    }
    ks_max_params(n).into_iter().map(|(p, q)| clique_star(p, q)).collect()
}

/// Recognizes `[(n-1)^p, p^q]` and returns `(p, q)`.
pub fn clique_star_shape(s: &DegreeSequence) -> Option<(usize, usize)> {
    let d = s.values();
    let n = d.len();
    if n == 0 {
        return None;
    }
    let p = d.iter().take_while(|&&x| x + 1 == n).count();
    let q = n - p;
    d[p..].iter().all(|&x| x == p).then_some((p, q))
}

/// Parameters of the fanned split graph with `n` vertices and cyclomatic
/// number `k` (so `m = n + k - 1` edges).
///
/// `n_u` is the largest `x ≤ n` with `x(x-1)/2 + x(n-x) ≤ m`, and
/// `n_1 = m - n_u(n_u-1)/2 - n_u(n-n_u)` is whatever budget is left for the
/// fan. When `m = n(n-1)/2` the search returns `n_u = n` (the graph is
/// `K_n`) and `n_1 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FsParams {
    n: usize,
    k: usize,
    m: usize,
    universal: usize,
    fan: usize,
}

impl FsParams {
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn m(&self) -> usize {
        self.m
    }
    /// `n_u`.
    pub fn universal(&self) -> usize {
        self.universal
    }
    /// `n_1`.
    pub fn fan(&self) -> usize {
        self.fan
    }
}

fn universal_edges(x: usize, n: usize) -> usize {
    x * x.saturating_sub(1) / 2 + x * (n - x)
}

/// Largest `k` for which a connected graph on `n` vertices with cyclomatic
/// number `k` exists.
pub fn max_cyclomatic(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2 + 1).saturating_sub(n)
}

/// The floor-of-radical form of `n_u`, evaluated in floating point.
fn universal_by_radical(n: usize, k: usize) -> usize {
    let a = 2.0 * n as f64 - 1.0;
    let disc = (2.0 * n as f64 - 3.0).powi(2) - 8.0 * k as f64;
    ((a - disc.max(0.0).sqrt()) / 2.0).floor() as usize
}

pub fn fs_params(n: usize, k: usize) -> Result<FsParams, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::OrderTooSmall { n, min: 3 });
    }
    let m = n + k - 1;
    let max_edges = n * (n - 1) / 2;
    if m > max_edges {
        return Err(ConstructionError::EdgeBudget {
            n,
            k,
            edges: m,
            max_edges,
        });
    }
    let universal = (0..=n)
        .rev()
        .find(|&x| universal_edges(x, n) <= m)
        .expect("x = 0 always fits");
    let fan = m - universal_edges(universal, n);

    // at a saturated budget both n-1 and n fit; the radical lands on n-1
    let radical = universal_by_radical(n, k);
    let agrees = radical == universal || (universal == n && radical == n - 1);
    if !agrees {
        return Err(ConstructionError::UniversalCountMismatch {
            n,
            k,
            search: universal,
            radical,
        });
    }
    debug_assert!(universal == n || fan < n - universal);
    Ok(FsParams {
        n,
        k,
        m,
        universal,
        fan,
    })
}

pub fn fanned_split(params: &FsParams) -> Graph {
    let &FsParams { n, universal, fan, .. } = params;
    if universal >= n {
        return Graph::complete(n);
    }
    let mut g = Graph::empty(n);
    for u in 0..universal {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    let centre = universal;
    for w in centre + 1..=centre + fan {
        g.add_edge(centre, w);
    }
    g
}

/// `n_u(n-n_u)(n-n_u-1) + n_1(n_1 - 2n_u - 1)`.
pub fn irr_fanned_split(params: &FsParams) -> u64 {
    let n = params.n as i64;
    let u = params.universal as i64;
    let f = params.fan as i64;
    let value = u * (n - u) * (n - u - 1) + f * (f - 2 * u - 1);
    u64::try_from(value).expect("fanned split irregularity is nonnegative")
}

/// `t` copies of `KS_{p,q}` joined into one graph by degree-preserving edge
/// swaps between consecutive copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainParams {
    pub copies: usize,
    pub clique: usize,
    pub independent: usize,
}

impl ChainParams {
    pub fn order(&self) -> usize {
        self.copies * (self.clique + self.independent)
    }

    pub fn max_degree(&self) -> usize {
        self.clique + self.independent - 1
    }

    pub fn min_degree(&self) -> usize {
        self.clique
    }

    /// `t·p·q·(q-1)`.
    pub fn irregularity(&self) -> u64 {
        let (t, p, q) = (self.copies as u64, self.clique as u64, self.independent as u64);
        t * p * q * (q - 1)
    }

    fn validate(&self) -> Result<(), ConstructionError> {
        if self.copies == 0 || self.clique == 0 || self.independent < 2 {
            return Err(ConstructionError::ChainParams {
                copies: self.copies,
                clique: self.clique,
                independent: self.independent,
            });
        }
        Ok(())
    }
}

/// Builds the chain. Between copies `i` and `i+1`, the edges
/// (last clique vertex, last independent vertex) of copy `i` and
/// (first clique vertex, first independent vertex) of copy `i+1` are
/// replaced by the two crossing edges, which keeps every degree.
///
/// With `p ≥ 2` the result is connected. With `p = 1` every copy is a star
/// and the chain has `t·q < t(q+1) - 1` edges for `t ≥ 2`, so it cannot be.
pub fn chained_clique_stars(params: &ChainParams) -> Result<Graph, ConstructionError> {
    params.validate()?;
    let ChainParams {
        copies,
        clique: p,
        independent: q,
    } = *params;
    let size = p + q;
    let mut g = Graph::empty(copies * size);
    for c in 0..copies {
        let base = c * size;
        for u in 0..p {
            for v in u + 1..size {
                g.add_edge(base + u, base + v);
            }
        }
    }
    for c in 0..copies.saturating_sub(1) {
        let here = c * size;
        let next = here + size;
        let (last_clique, last_indep) = (here + p - 1, here + size - 1);
        let (first_clique, first_indep) = (next, next + p);
        g.remove_edge(last_clique, last_indep);
        g.remove_edge(first_clique, first_indep);
        g.add_edge(last_clique, first_indep);
        g.add_edge(first_clique, last_indep);
    }
    Ok(g)
}

fn require_divisible(what: &'static str, value: usize, divisor: usize) -> Result<usize, ConstructionError> {
    if divisor == 0 || !value.is_multiple_of(divisor) {
        return Err(ConstructionError::NotDivisible { what, value, divisor });
    }
    Ok(value / divisor)
}

/// Chain of `n/(Δ+1)` copies of `KS_{Δ/3, 2Δ/3+1}`: maximum degree `Δ` on
/// `n` vertices. Both divisions must be exact.
pub fn max_degree_chain(n: usize, big_delta: usize) -> Result<ChainParams, ConstructionError> {
    let third = require_divisible("Delta", big_delta, 3)?;
    let copies = require_divisible("n", n, big_delta + 1)?;
    let params = ChainParams {
        copies,
        clique: third,
        independent: 2 * third + 1,
    };
    params.validate()?;
    Ok(params)
}

/// Chain of `n/(Δ+1)` copies of `KS_{δ, Δ-δ+1}`: minimum degree `δ` and
/// maximum degree `Δ` on `n` vertices.
pub fn degree_window_chain(n: usize, delta: usize, big_delta: usize) -> Result<ChainParams, ConstructionError> {
    if delta == 0 || delta >= big_delta {
        return Err(ConstructionError::DegreeWindow { n, delta, big_delta });
    }
    let copies = require_divisible("n", n, big_delta + 1)?;
    let params = ChainParams {
        copies,
        clique: delta,
        independent: big_delta - delta + 1,
    };
    params.validate()?;
    Ok(params)
}

/// `(n/(Δ+1))·(Δ/3)·(2Δ/3+1)·(2Δ/3)`, assuming both divisions are exact.
pub fn max_degree_chain_value(n: usize, big_delta: usize) -> u64 {
    let copies = (n / (big_delta + 1)) as u64;
    let third = (big_delta / 3) as u64;
    copies * third * (2 * third + 1) * (2 * third)
}

/// Whether `irr > (δ/(Δ+1))·(Δ-δ)²·n`, compared exactly in integers.
pub fn exceeds_window_lower_bound(irr: u64, n: usize, delta: usize, big_delta: usize) -> bool {
    let gap = (big_delta - delta) as u128;
    (irr as u128) * (big_delta as u128 + 1) > delta as u128 * gap * gap * n as u128
}

/// Which low-irregularity degree sequence a [`NearRegular`] graph realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// Every vertex has degree `Δ` (or `δ`).
    Regular,
    /// `n-1` vertices of degree `Δ`, one of degree `Δ-1`.
    OneBelow,
    /// `n-1` vertices of degree `δ`, one of degree `δ+1`.
    OneAbove,
    /// Two vertices of degree `δ`, the rest `Δ`.
    TwoAtMin,
    /// Two vertices of degree `Δ`, the rest `δ`.
    TwoAtMax,
    /// Two of degree `Δ`, one of degree `δ+1`, the rest `δ`.
    TwoAtMaxOneAbove,
    /// None of the above is graphic; the realized sequence is the one with
    /// the smallest Havel–Hakimi irregularity among all graphic sequences
    /// with exactly these extreme degrees.
    WindowSearch,
}

#[derive(Debug, Clone)]
pub struct NearRegular {
    pub graph: Graph,
    pub sequence: DegreeSequence,
    pub witness: Witness,
    /// Value the irregularity is guaranteed not to exceed.
    pub bound: u64,
}

/// Upper bound on the least irregularity for the window `(δ, Δ)`:
/// with `δ = Δ`, `0` when `nΔ` is even and `Δ - 1` otherwise; with
/// `δ < Δ`, `2Δ(Δ-δ)`.
pub fn window_bound(n: usize, delta: usize, big_delta: usize) -> u64 {
    if delta == big_delta {
        if (n * big_delta).is_multiple_of(2) {
            0
        } else {
            big_delta.saturating_sub(1) as u64
        }
    } else {
        2 * big_delta as u64 * (big_delta - delta) as u64
    }
}

/// Upper bound on the least irregularity when only the minimum degree `δ`
/// is prescribed: `0` when `nδ` is even and `δ + 1` otherwise.
pub fn min_degree_bound(n: usize, delta: usize) -> u64 {
    if (n * delta).is_multiple_of(2) {
        0
    } else {
        delta as u64 + 1
    }
}

fn sequence_of(parts: &[(usize, usize)]) -> DegreeSequence {
    let mut v = Vec::new();
    for &(degree, count) in parts {
        v.extend(std::iter::repeat_n(degree, count));
    }
    DegreeSequence::from_unsorted(v).expect("witness degrees stay below n")
}

fn build(
    n: usize,
    delta: usize,
    big_delta: usize,
    candidates: Vec<(Witness, DegreeSequence)>,
) -> Result<NearRegular, ConstructionError> {
    let bound = window_bound(n, delta, big_delta);
    let mut first_failure = None;
    for (witness, sequence) in candidates {
        match havel_hakimi(sequence.values()) {
            Some(graph) => {
                return Ok(NearRegular {
                    graph,
                    sequence,
                    witness,
                    bound,
                })
            }
            None => {
                if first_failure.is_none() {
                    let violation = erdos_gallai_violation(sequence.values()).unwrap_or(Violation::OddSum);
                    first_failure = Some((sequence, violation));
                }
            }
        }
    }
    // fall back to the whole window
    let opts = EnumerationOptions {
        min_degree: delta,
        first: Some(big_delta..=big_delta),
    };
    let mut best: Option<(u64, DegreeSequence, Graph)> = None;
    crate::degseq::enumerate_graphic_with(n, &opts, |s| {
        if delta != big_delta && s.values()[n - 1] != delta {
            return;
        }
        let g = havel_hakimi(s.values()).expect("enumerated sequences are graphic");
        let irr = irregularity(&g);
        if best.as_ref().is_none_or(|(b, _, _)| irr < *b) {
            best = Some((irr, s.clone(), g));
        }
    });
    match best {
        Some((_, sequence, graph)) => Ok(NearRegular {
            graph,
            sequence,
            witness: Witness::WindowSearch,
            bound,
        }),
        None => {
            let (sequence, violation) = first_failure.expect("at least one candidate was tried");
            Err(ConstructionError::NotRealizable {
                n,
                delta,
                big_delta,
                sequence,
                violation,
            })
        }
    }
}

/// A graph with maximum degree `Δ` and, when `δ < Δ`, minimum degree `δ`,
/// whose irregularity is at most [`window_bound`].
///
/// With `δ = Δ` only the maximum degree is prescribed: the result is
/// `Δ`-regular when `nΔ` is even and `[Δ^(n-1), Δ-1]` otherwise. With
/// `δ < Δ` the candidates, in order, are `[Δ^(n-2), δ, δ]` (`nΔ` even),
/// `[Δ, Δ, δ^(n-2)]` (`nδ` even) and `[Δ, Δ, δ+1, δ^(n-3)]`
/// (`n`, `δ`, `Δ` all odd). If none is graphic, every graphic sequence
/// with these extremes is tried and the least irregular realization kept.
///
/// Realizations come from Havel–Hakimi and need not be connected.
pub fn near_regular(n: usize, delta: usize, big_delta: usize) -> Result<NearRegular, ConstructionError> {
    if delta > big_delta || big_delta >= n {
        return Err(ConstructionError::DegreeWindow { n, delta, big_delta });
    }
    let mut candidates = Vec::new();
    if delta == big_delta {
        if (n * big_delta).is_multiple_of(2) {
            candidates.push((Witness::Regular, sequence_of(&[(big_delta, n)])));
        } else {
            candidates.push((
                Witness::OneBelow,
                sequence_of(&[(big_delta, n - 1), (big_delta - 1, 1)]),
            ));
        }
    } else {
        if (n * big_delta).is_multiple_of(2) {
            candidates.push((Witness::TwoAtMin, sequence_of(&[(big_delta, n - 2), (delta, 2)])));
        }
        if (n * delta).is_multiple_of(2) {
            candidates.push((Witness::TwoAtMax, sequence_of(&[(big_delta, 2), (delta, n - 2)])));
        }
        if n % 2 == 1 && delta % 2 == 1 && big_delta % 2 == 1 {
            candidates.push((
                Witness::TwoAtMaxOneAbove,
                sequence_of(&[(big_delta, 2), (delta + 1, 1), (delta, n - 3)]),
            ));
        }
    }
    build(n, delta, big_delta, candidates)
}

/// A graph with minimum degree `δ` and irregularity at most
/// [`min_degree_bound`]: `δ`-regular when `nδ` is even, otherwise
/// `[δ+1, δ^(n-1)]`.
pub fn near_regular_min_degree(n: usize, delta: usize) -> Result<NearRegular, ConstructionError> {
    if delta >= n || ((n * delta) % 2 == 1 && delta + 1 >= n) {
        return Err(ConstructionError::DegreeWindow {
            n,
            delta,
            big_delta: delta,
        });
    }
    let (witness, sequence) = if (n * delta).is_multiple_of(2) {
        (Witness::Regular, sequence_of(&[(delta, n)]))
    } else {
        (Witness::OneAbove, sequence_of(&[(delta + 1, 1), (delta, n - 1)]))
    };
    let bound = min_degree_bound(n, delta);
    match havel_hakimi(sequence.values()) {
        Some(graph) => Ok(NearRegular {
            graph,
            sequence,
            witness,
            bound,
        }),
        None => {
            let violation = erdos_gallai_violation(sequence.values()).unwrap_or(Violation::OddSum);
            Err(ConstructionError::NotRealizable {
                n,
                delta,
                big_delta: delta + 1,
                sequence,
                violation,
            })
        }
    }
}
