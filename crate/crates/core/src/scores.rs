use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{CitationGraph, NodeId};

/// Per-node scores, indexed by the graph's global (author-then-paper) order.
#[derive(Clone, Debug, PartialEq)]
pub struct ScoreTable {
    raw: Vec<f64>,
    normalized: Vec<f64>,
    total_arrivals: u64,
}

impl ScoreTable {
    /// Wraps raw counters and normalizes them to mean 1.
    pub fn from_raw(raw: Vec<f64>, total_arrivals: u64) -> Result<Self> {
        let normalized = normalize(&raw, raw.len())?;
        Ok(ScoreTable {
            raw,
            normalized,
            total_arrivals,
        })
    }

    pub fn raw(&self) -> &[f64] {
        &self.raw
    }

    pub fn normalized(&self) -> &[f64] {
        &self.normalized
    }

    /// Number of arrivals the raw counters were accumulated over (zero for
    /// exact, non-sampled tables).
    pub fn total_arrivals(&self) -> u64 {
        self.total_arrivals
    }

    pub fn len(&self) -> usize {
        self.raw.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw.is_empty()
    }

    pub fn score(&self, graph: &CitationGraph, id: NodeId) -> f64 {
        self.normalized[graph.global_index(id)]
    }
}

/// Scales counters so that their mean over `node_count` nodes is 1.
pub fn normalize(raw: &[f64], node_count: usize) -> Result<Vec<f64>> {
    if raw.iter().any(|v| !(*v >= 0.0) || v.is_infinite()) {
        return Err(Error::InvalidParams("counters must be finite and non-negative".into()));
    }
    let total: f64 = raw.iter().sum();
    if total <= 0.0 {
        return Err(Error::Empty("all counters are zero"));
    }
    let scale = node_count as f64 / total;
    Ok(raw.iter().map(|v| v * scale).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&[2.0, 2.0], 2).unwrap(), vec![1.0, 1.0]);
        assert_eq!(normalize(&[3.0, 1.0], 2).unwrap(), vec![1.5, 0.5]);
        assert_eq!(normalize(&[0.0, 4.0, 4.0], 3).unwrap(), vec![0.0, 1.5, 1.5]);
    }

    #[test]
    fn normalize_rejects_zero() {
        assert!(matches!(normalize(&[0.0, 0.0], 2), Err(Error::Empty(_))));
        assert!(normalize(&[-1.0, 2.0], 2).is_err());
    }

    #[test]
    fn table_sums_to_node_count() {
        let t = ScoreTable::from_raw(vec![1.0, 7.0, 0.5, 3.25], 12).unwrap();
        let sum: f64 = t.normalized().iter().sum();
        assert!((sum - 4.0).abs() < 1e-12);
        assert_eq!(t.total_arrivals(), 12);
    }
}
