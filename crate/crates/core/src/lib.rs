//! Ranking of authors and papers on a bipartite citation graph.
//!
//! A random surfer walks author -> paper -> cited paper -> author, with a
//! per-edge probability weight (p-weight) steering its moves and a per-edge
//! counter weight (c-weight) deciding how much each arrival counts. The
//! crate provides:
//!
//! - [`graph`]: the immutable author/paper graph and the p-weight,
//! - [`walk`]: the Monte Carlo surfer producing a [`ScoreTable`],
//! - [`oracle`]: the exact stationary scores of the same walk on small graphs,
//! - [`baselines`]: publication/citation counts, H-index, paper and author
//!   PageRank,
//! - [`analysis`]: rankings, top-x% comparison curves, rank scatters,
//!   dataset statistics and Graphviz export,
//! - [`scenario`]: generators for small graphs that separate the measures,
//! - [`merge`]: author-merge suggestions for initial-only name variants.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod baselines;
pub mod error;
pub mod graph;
pub mod merge;
pub mod oracle;
pub mod samples;
pub mod scenario;
pub mod scores;
pub mod walk;

pub use error::{Error, Result};
pub use graph::{build_graph, p_weight, Author, BuildReport, CitationGraph, NodeId, NodeKind, Paper};
pub use scores::{normalize, ScoreTable};
pub use walk::{pira_rank, CounterWeights, EdgeClass, WalkMode, WalkParams};
