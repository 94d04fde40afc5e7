//! Rankings and the tools that compare, summarize and draw them.

mod compare;
mod dot;
mod ranking;
mod stats;

pub use compare::{rank_scatter, topx_difference, DiffCurve, ScatterPoint};
pub use dot::export_dot;
pub use ranking::{rank, rank_by, NodeFilter, RankEntry, Ranking};
pub use stats::{dataset_stats, Histogram, StatsReport};
