//! Irregularity of graphs (the sum of `|d(u) - d(v)|` over edges, also called
//! the third Zagreb index), with the extremal constructions that attain its
//! maxima, graphic-sequence tooling, and brute-force verification over small
//! labeled graphs.
//!
//! - [`graph`]: bit-row graphs, degree indices and the edge-list / graph6
//!   formats.
//! - [`constructions`]: clique-stars, fanned split graphs, chained
//!   clique-stars and near-regular witnesses, each with its closed form.
//! - [`degseq`]: Erdős–Gallai, Havel–Hakimi, the degree-sequence bound and
//!   enumeration of graphic sequences.
//! - [`oracle`]: exhaustive scans over all labeled graphs on up to eight
//!   vertices.

pub mod constructions;
pub mod degseq;
pub mod graph;
pub mod oracle;
mod parallel;

pub use degseq::DegreeSequence;
pub use graph::{irregularity, Graph, IrregularityReport};
