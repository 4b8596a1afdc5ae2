//! Simple undirected graphs on labeled vertices `0..n`, stored as bit rows.
//!
//! Every row is a run of `u64` words; `degree(v)` is the popcount of row `v`
//! and edges are found by scanning set bits. Figures and tables elsewhere
//! number vertices from 1; this module only ever uses 0-based labels.

mod edgelist;
mod graph6;
mod index;

pub use edgelist::{read_edge_list, write_edge_list, ParseError, ParseErrorKind};
pub use graph6::{read_graph6, write_graph6, Graph6Error, GRAPH6_MAX_ORDER};
pub use index::{irregularity, report, zagreb1, zagreb2, IrregularityReport};

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        let stride = n.div_ceil(WORD);
        Graph {
            n,
            stride,
            bits: vec![0; stride * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, EdgeError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.bits[u * self.stride + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Adds the edge `uv`. Panics on loops or out-of-range vertices; adding an
    /// existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loop at vertex {u}");
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.set(u, v, true);
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), EdgeError> {
        if u >= self.n || v >= self.n {
            return Err(EdgeError::OutOfRange { u, v, n: self.n });
        }
        if u == v {
            return Err(EdgeError::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(EdgeError::Duplicate(u.min(v), u.max(v)));
        }
        self.set(u, v, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.set(u, v, false);
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        for (a, b) in [(u, v), (v, u)] {
            let word = &mut self.bits[a * self.stride + b / WORD];
            if on {
                *word |= 1 << (b % WORD);
            } else {
                *word &= !(1 << (b % WORD));
            }
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted into nonincreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        Neighbors::new(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.n
    }

    pub fn universal_count(&self) -> usize {
        (0..self.n).filter(|&v| self.is_universal(v)).count()
    }

    /// Breadth-first reachability from vertex 0. The empty graph on zero
    /// vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Set bits of one adjacency row.
pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    current: u64,
}

impl<'a> Neighbors<'a> {
    fn new(row: &'a [u64]) -> Self {
        Neighbors {
            row,
            word: 0,
            current: row.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD + bit);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word];
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EdgeError {
    #[error("vertex out of range in edge {u} {v} (n = {n})")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0} {1}")]
    Duplicate(usize, usize),
}
