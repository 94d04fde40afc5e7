//! Author-merge suggestions for names that differ only by initials.
//!
//! Nothing here changes the graph: when in doubt, duplicate authors are
//! kept. A pair is suggested when the names are initial-compatible and the
//! graph gives a reason to believe they are the same person.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{CitationGraph, NodeId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MergeRule {
    /// A paper of one author cites a paper of the other.
    SelfCitationInitialMatch,
    /// The two authors share a co-author.
    CommonCoauthorInitialMatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MergeSuggestion {
    pub rule: MergeRule,
    pub author_a: NodeId,
    pub author_b: NodeId,
}

fn tokens(name: &str) -> Vec<String> {
    name.split_whitespace()
        .map(|t| t.trim_end_matches('.').to_lowercase())
        .filter(|t| !t.is_empty())
        .collect()
}

/// Same last token, and the given-name tokens of one name are prefixes of
/// the corresponding tokens of the other ("J." matches "John").
pub fn initial_compatible(a: &str, b: &str) -> bool {
    let (ta, tb) = (tokens(a), tokens(b));
    let (Some((last_a, given_a)), Some((last_b, given_b))) = (ta.split_last(), tb.split_last()) else {
        return false;
    };
    if last_a != last_b || given_a.is_empty() || given_b.is_empty() {
        return false;
    }
    let pairs = || given_a.iter().zip(given_b);
    pairs().all(|(x, y)| y.starts_with(x.as_str())) || pairs().all(|(x, y)| x.starts_with(y.as_str()))
}

/// Every initial-compatible pair backed by a citation between their papers
/// or by a shared co-author, sorted by `(rule, author_a, author_b)` with
/// `author_a < author_b`.
pub fn suggest_merges(graph: &CitationGraph) -> Vec<MergeSuggestion> {
    let mut by_last: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, a) in graph.authors().iter().enumerate() {
        if let Some(last) = tokens(&a.name).pop() {
            by_last.entry(last).or_default().push(i);
        }
    }

    let coauthors = |a: usize| -> BTreeSet<usize> {
        graph
            .papers_of(a)
            .iter()
            .flat_map(|&p| graph.authors_of(p).iter().copied())
            .filter(|&b| b != a)
            .collect()
    };
    let cited_authors = |a: usize| -> BTreeSet<usize> {
        graph
            .papers_of(a)
            .iter()
            .flat_map(|&p| graph.refs(p).iter())
            .flat_map(|&q| graph.authors_of(q).iter().copied())
            .collect()
    };

    let mut out = Vec::new();
    for group in by_last.values().filter(|g| g.len() > 1) {
        let cites: Vec<_> = group.iter().map(|&a| cited_authors(a)).collect();
        let coauth: Vec<_> = group.iter().map(|&a| coauthors(a)).collect();
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                let (a, b) = (group[i], group[j]);
                let names = graph.authors();
                if !initial_compatible(&names[a].name, &names[b].name) {
                    continue;
                }
                let (lo, hi) = (NodeId::author(a.min(b)), NodeId::author(a.max(b)));
                if cites[i].contains(&b) || cites[j].contains(&a) {
                    out.push(MergeSuggestion {
                        rule: MergeRule::SelfCitationInitialMatch,
                        author_a: lo,
                        author_b: hi,
                    });
                }
                let shared = coauth[i]
                    .iter()
                    .any(|c| *c != b && coauth[j].contains(c));
                if shared {
                    out.push(MergeSuggestion {
                        rule: MergeRule::CommonCoauthorInitialMatch,
                        author_a: lo,
                        author_b: hi,
                    });
                }
            }
        }
    }
    out.sort();
    out
}
