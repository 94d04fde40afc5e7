//! Multi-threaded walker execution.

use std::thread;

use pira_core::walk::{ArrivalCounts, Surfer};
use pira_core::{CitationGraph, ScoreTable, WalkParams};

use crate::error::Result;

/// Runs every walker on its own thread. Tallies are merged in walker order,
/// so the result equals the sequential [`pira_core::walk::pira_counts`].
pub fn pira_counts(graph: &CitationGraph, params: &WalkParams) -> Result<ArrivalCounts> {
    let surfer = Surfer::new(graph, params)?;
    if params.walkers == 1 {
        return Ok(surfer.run_walker(0));
    }
    let parts: Vec<ArrivalCounts> = thread::scope(|s| {
        let handles: Vec<_> = (0..params.walkers)
            .map(|i| {
                let surfer = &surfer;
                s.spawn(move || surfer.run_walker(i))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("walker thread panicked"))
            .collect()
    });
    let mut total = ArrivalCounts::new(graph.node_count());
    for part in &parts {
        total.merge(part);
    }
    Ok(total)
}

pub fn pira_rank(graph: &CitationGraph, params: &WalkParams) -> Result<ScoreTable> {
    Ok(pira_counts(graph, params)?.into_scores(&params.weights)?)
}
