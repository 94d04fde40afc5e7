use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{CitationGraph, NodeId, NodeKind};
use crate::scores::ScoreTable;

#[derive(Clone, Debug, PartialEq)]
pub struct RankEntry<T> {
    /// 1-based position.
    pub rank: usize,
    pub node: T,
    pub score: f64,
}

/// Nodes ordered by descending score, ties broken by ascending node id.
/// Ranks are positional: `1..=len` with no gaps.
#[derive(Clone, Debug, PartialEq)]
pub struct Ranking<T = NodeId> {
    entries: Vec<RankEntry<T>>,
}

impl<T: Ord + Clone> Ranking<T> {
    pub fn from_scores<I: IntoIterator<Item = (T, f64)>>(scores: I) -> Result<Self> {
        let mut pairs: Vec<(T, f64)> = scores.into_iter().collect();
        if pairs.is_empty() {
            return Err(Error::Empty("nothing to rank"));
        }
        pairs.sort_by(|a, b| match b.1.total_cmp(&a.1) {
            Ordering::Equal => a.0.cmp(&b.0),
            other => other,
        });
        let entries = pairs
            .into_iter()
            .enumerate()
            .map(|(i, (node, score))| RankEntry {
                rank: i + 1,
                node,
                score,
            })
            .collect();
        Ok(Ranking { entries })
    }

    /// Takes nodes in the given order as ranks `1..=len`, e.g. when reading
    /// a ranking back from a file. Scores must not increase along the list.
    pub fn from_ordered<I: IntoIterator<Item = (T, f64)>>(ordered: I) -> Result<Self> {
        let entries: Vec<RankEntry<T>> = ordered
            .into_iter()
            .enumerate()
            .map(|(i, (node, score))| RankEntry {
                rank: i + 1,
                node,
                score,
            })
            .collect();
        if entries.is_empty() {
            return Err(Error::Empty("nothing to rank"));
        }
        if entries.windows(2).any(|w| w[1].score > w[0].score) {
            return Err(Error::Mismatch("ranking scores increase along the list".into()));
        }
        Ok(Ranking { entries })
    }

    pub fn entries(&self) -> &[RankEntry<T>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nodes(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|e| &e.node)
    }

    /// Rank of `node`, if present.
    pub fn rank_of(&self, node: &T) -> Option<usize> {
        self.entries.iter().find(|e| &e.node == node).map(|e| e.rank)
    }

    pub fn map_nodes<U: Ord + Clone>(&self, f: impl Fn(&T) -> U) -> Ranking<U> {
        Ranking {
            entries: self
                .entries
                .iter()
                .map(|e| RankEntry {
                    rank: e.rank,
                    node: f(&e.node),
                    score: e.score,
                })
                .collect(),
        }
    }

    /// Node list sorted by id, for comparing node sets.
    pub(crate) fn node_set(&self) -> Vec<T> {
        let mut v: Vec<T> = self.nodes().cloned().collect();
        v.sort();
        v
    }
}

/// Which nodes take part in a ranking.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NodeFilter {
    pub kind: Option<NodeKind>,
    pub dblp_only: bool,
}

impl Default for NodeFilter {
    fn default() -> Self {
        NodeFilter {
            kind: None,
            dblp_only: true,
        }
    }
}

impl NodeFilter {
    pub fn all() -> Self {
        NodeFilter {
            kind: None,
            dblp_only: false,
        }
    }

    pub fn of_kind(kind: NodeKind, dblp_only: bool) -> Self {
        NodeFilter {
            kind: Some(kind),
            dblp_only,
        }
    }

    pub fn accepts(&self, graph: &CitationGraph, id: NodeId) -> bool {
        self.kind.is_none_or(|k| k == id.kind) && (!self.dblp_only || graph.in_dblp(id))
    }
}

/// Ranks the nodes accepted by `filter` by the score `score_of` gives them.
pub fn rank_by(
    graph: &CitationGraph,
    filter: &NodeFilter,
    score_of: impl Fn(NodeId) -> f64,
) -> Result<Ranking> {
    let scores: Vec<(NodeId, f64)> = graph
        .nodes()
        .filter(|&id| filter.accepts(graph, id))
        .map(|id| (id, score_of(id)))
        .collect();
    if scores.is_empty() {
        return Err(Error::Empty("no node passes the ranking filter"));
    }
    Ranking::from_scores(scores)
}

/// Ranks normalized scores of a score table.
pub fn rank(graph: &CitationGraph, scores: &ScoreTable, filter: &NodeFilter) -> Result<Ranking> {
    rank_by(graph, filter, |id| scores.score(graph, id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, Author, Paper};
    use alloc::vec;

    #[test]
    fn orders_by_score() {
        let r = Ranking::from_scores([("a", 2.0), ("b", 1.0)]).unwrap();
        let got: Vec<_> = r.entries().iter().map(|e| (e.rank, e.node)).collect();
        assert_eq!(got, vec![(1, "a"), (2, "b")]);
    }

    #[test]
    fn ties_break_by_id() {
        let r = Ranking::from_scores([("b", 1.0), ("a", 1.0)]).unwrap();
        assert_eq!(r.entries()[0].node, "a");
        assert_eq!(r.rank_of(&"b"), Some(2));
    }

    #[test]
    fn ordered_input_keeps_order() {
        let r = Ranking::from_ordered([("b", 1.0), ("a", 1.0), ("c", 0.5)]).unwrap();
        assert_eq!(r.rank_of(&"b"), Some(1));
        assert!(Ranking::from_ordered([("a", 1.0), ("b", 2.0)]).is_err());
    }

    #[test]
    fn empty_is_error() {
        assert!(Ranking::<u32>::from_scores([]).is_err());
    }

    #[test]
    fn default_filter_keeps_dblp_nodes() {
        let authors = vec![Author::new("x", "X", true), Author::new("y", "Y", false)];
        let papers = vec![Paper::new("p", "P", false)];
        let (g, _) = build_graph(authors, papers, &[(0, 0), (1, 0)], &[]).unwrap();
        let t = ScoreTable::from_raw(vec![1.0, 5.0, 9.0], 0).unwrap();
        let r = rank(&g, &t, &NodeFilter::default()).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.entries()[0].node, NodeId::author(0));
        let all = rank(&g, &t, &NodeFilter::all()).unwrap();
        assert_eq!(all.entries()[0].node, NodeId::paper(0));
        let none = rank(&g, &t, &NodeFilter::of_kind(NodeKind::Paper, true));
        assert!(none.is_err());
    }
}
