//! Comparison measures: publication and citation counts, H-index, and the
//! two PageRank projections (paper graph, author graph).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::CitationGraph;

pub const DEFAULT_DAMPING: f64 = 0.15;
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 1_000_000;

/// Number of papers of each author.
pub fn pub_count(graph: &CitationGraph) -> Vec<usize> {
    (0..graph.author_count())
        .map(|a| graph.papers_of(a).len())
        .collect()
}

/// Incoming citations of each author's papers, counted in full for every
/// co-author.
pub fn cit_count(graph: &CitationGraph) -> Vec<usize> {
    (0..graph.author_count())
        .map(|a| graph.papers_of(a).iter().map(|&p| graph.cited_by(p).len()).sum())
        .collect()
}

/// Largest `h` such that `h` of the counts are at least `h`.
pub fn h_index_of(citations: &[usize]) -> usize {
    let mut sorted = citations.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted
        .iter()
        .enumerate()
        .take_while(|&(i, &c)| c > i)
        .count()
}

pub fn h_index(graph: &CitationGraph) -> Vec<usize> {
    (0..graph.author_count())
        .map(|a| {
            let counts: Vec<usize> = graph
                .papers_of(a)
                .iter()
                .map(|&p| graph.cited_by(p).len())
                .collect();
            h_index_of(&counts)
        })
        .collect()
}

/// Weighted PageRank by power iteration.
///
/// `damping` is the teleport probability. Transitions are proportional to
/// out-weight; nodes with no out-weight spread their mass uniformly.
/// Iterates until the L1 change is below `tol`; the result sums to 1.
pub fn pagerank(
    node_count: usize,
    edges: &[(usize, usize, f64)],
    damping: f64,
    tol: f64,
) -> Result<Vec<f64>> {
    if !(damping > 0.0 && damping < 1.0) {
        return Err(Error::InvalidParams("pagerank damping must be in (0, 1)".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParams("tolerance must be positive".into()));
    }
    if node_count == 0 {
        return Ok(Vec::new());
    }
    let mut out_weight = vec![0.0; node_count];
    for &(u, v, w) in edges {
        if u >= node_count || v >= node_count {
            return Err(Error::DanglingEdge {
                kind: "weighted",
                from: u,
                to: v,
                reason: "endpoint out of range",
            });
        }
        if !(w >= 0.0) || w.is_infinite() {
            return Err(Error::InvalidParams("edge weights must be finite and >= 0".into()));
        }
        out_weight[u] += w;
    }

    let n = node_count as f64;
    let mut rank = vec![1.0 / n; node_count];
    let mut next = vec![0.0; node_count];
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        let dangling: f64 = rank
            .iter()
            .zip(&out_weight)
            .filter(|(_, &w)| w == 0.0)
            .map(|(r, _)| r)
            .sum();
        let base = damping / n + (1.0 - damping) * dangling / n;
        next.iter_mut().for_each(|x| *x = base);
        for &(u, v, w) in edges {
            if w > 0.0 {
                next[v] += (1.0 - damping) * rank[u] * w / out_weight[u];
            }
        }
        let total: f64 = next.iter().sum();
        next.iter_mut().for_each(|x| *x /= total);
        residual = rank.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        core::mem::swap(&mut rank, &mut next);
        if residual < tol {
            return Ok(rank);
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_ITERATIONS,
        residual,
    })
}

/// PageRank over the paper citation graph.
pub fn paper_pagerank(graph: &CitationGraph, damping: f64) -> Result<Vec<f64>> {
    let edges: Vec<_> = graph.cite_edges().map(|(p, q)| (p, q, 1.0)).collect();
    pagerank(graph.paper_count(), &edges, damping, DEFAULT_TOLERANCE)
}

/// Author scores from paper PageRank, each paper's score split evenly among
/// its authors. Papers without authors lose their share.
pub fn authors_from_papers(graph: &CitationGraph, paper_scores: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; graph.author_count()];
    for (p, &s) in paper_scores.iter().enumerate() {
        let authors = graph.authors_of(p);
        for &a in authors {
            out[a] += s / authors.len() as f64;
        }
    }
    out
}

pub fn pr_p(graph: &CitationGraph) -> Result<Vec<f64>> {
    pr_p_with(graph, DEFAULT_DAMPING)
}

pub fn pr_p_with(graph: &CitationGraph, damping: f64) -> Result<Vec<f64>> {
    Ok(authors_from_papers(graph, &paper_pagerank(graph, damping)?))
}

/// Weighted author-to-author graph.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct AuthorGraph {
    pub node_count: usize,
    /// `(from, to, weight)`, sorted by endpoints, weights positive.
    pub edges: Vec<(usize, usize, f64)>,
}

impl AuthorGraph {
    pub fn weight(&self, from: usize, to: usize) -> f64 {
        self.edges
            .iter()
            .find(|e| e.0 == from && e.1 == to)
            .map_or(0.0, |e| e.2)
    }

    pub fn out_weight(&self, from: usize) -> f64 {
        self.edges.iter().filter(|e| e.0 == from).map(|e| e.2).sum()
    }
}

/// One-citation-hop transition probabilities between authors: pick a paper
/// by p-weight, follow one of its references uniformly, land on one of the
/// cited paper's authors uniformly.
pub fn build_author_graph(graph: &CitationGraph) -> AuthorGraph {
    let mut edges = Vec::new();
    for a in 0..graph.author_count() {
        let papers = graph.papers_of(a);
        let total: f64 = papers
            .iter()
            .map(|&p| 1.0 / graph.authors_of(p).len() as f64)
            .sum();
        let mut row: BTreeMap<usize, f64> = BTreeMap::new();
        for &p in papers {
            let pick = (1.0 / graph.authors_of(p).len() as f64) / total;
            let refs = graph.refs(p);
            for &q in refs {
                let cited_authors = graph.authors_of(q);
                for &b in cited_authors {
                    *row.entry(b).or_default() +=
                        pick / refs.len() as f64 / cited_authors.len() as f64;
                }
            }
        }
        edges.extend(row.into_iter().map(|(b, w)| (a, b, w)));
    }
    AuthorGraph {
        node_count: graph.author_count(),
        edges,
    }
}

pub fn pr_a(graph: &CitationGraph) -> Result<Vec<f64>> {
    pr_a_with(graph, DEFAULT_DAMPING)
}

pub fn pr_a_with(graph: &CitationGraph, damping: f64) -> Result<Vec<f64>> {
    let ag = build_author_graph(graph);
    pagerank(ag.node_count, &ag.edges, damping, DEFAULT_TOLERANCE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, Author, Paper};
    use alloc::format;

    fn graph(na: usize, np: usize, wrote: &[(usize, usize)], cites: &[(usize, usize)]) -> CitationGraph {
        let authors = (0..na).map(|i| Author::new(format!("a{i}"), "A", true)).collect();
        let papers = (0..np).map(|i| Paper::new(format!("p{i}"), "P", true)).collect();
        build_graph(authors, papers, wrote, cites).unwrap().0
    }

    #[test]
    fn h_index_examples() {
        assert_eq!(h_index_of(&[]), 0);
        assert_eq!(h_index_of(&[10]), 1);
        assert_eq!(h_index_of(&[5, 4, 2, 1]), 2);
        assert_eq!(h_index_of(&[0, 0]), 0);
        assert_eq!(h_index_of(&[3, 3, 3]), 3);
    }

    #[test]
    fn h_index_matches_brute_force() {
        let brute = |c: &[usize]| {
            (0..=c.len())
                .filter(|&h| c.iter().filter(|&&x| x >= h).count() >= h)
                .max()
                .unwrap()
        };
        let cases: [&[usize]; 5] = [&[5, 4, 2, 1], &[1, 1, 1, 1], &[9, 0, 7, 3, 3], &[2], &[6, 6, 6, 6, 6, 6]];
        for c in cases {
            assert_eq!(h_index_of(c), brute(c), "{c:?}");
        }
    }

    #[test]
    fn counts_on_small_graph() {
        // a0, a1 co-wrote p0; a1 wrote p1; p2 and p3 cite p0, p3 cites p1.
        let g = graph(3, 4, &[(0, 0), (1, 0), (1, 1), (2, 2), (2, 3)], &[(2, 0), (3, 0), (3, 1)]);
        assert_eq!(pub_count(&g), vec![1, 2, 2]);
        assert_eq!(cit_count(&g), vec![2, 3, 0]);
        assert_eq!(h_index(&g), vec![1, 1, 0]);
    }

    #[test]
    fn eight_coauthors_each_get_full_citations() {
        let wrote: Vec<_> = (0..8).map(|a| (a, 0)).collect();
        let cites: Vec<_> = (1..=570).map(|p| (p, 0)).collect();
        let g = graph(8, 571, &wrote, &cites);
        assert_eq!(cit_count(&g), vec![570; 8]);
    }

    #[test]
    fn pagerank_symmetric_cases() {
        let ring = pagerank(3, &[(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)], 0.15, 1e-13).unwrap();
        for v in ring {
            assert!((v - 1.0 / 3.0).abs() < 1e-9);
        }
        let pair = pagerank(2, &[(0, 1, 1.0), (1, 0, 1.0)], 0.15, 1e-13).unwrap();
        for v in pair {
            assert!((v - 0.5).abs() < 1e-9);
        }
        assert!(pagerank(2, &[], 0.0, 1e-12).is_err());
        assert!(pagerank(2, &[(0, 5, 1.0)], 0.15, 1e-12).is_err());
    }

    #[test]
    fn pr_p_splits_evenly() {
        let g = graph(4, 1, &[(0, 0), (1, 0), (2, 0), (3, 0)], &[]);
        let s = pr_p(&g).unwrap();
        for v in s {
            assert!((v - 0.25).abs() < 1e-12);
        }
        let solo = graph(1, 1, &[(0, 0)], &[]);
        assert!((pr_p(&solo).unwrap()[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn author_graph_paths() {
        // a0 solo p0 cites p1 solo by a1.
        let g = graph(2, 2, &[(0, 0), (1, 1)], &[(0, 1)]);
        let ag = build_author_graph(&g);
        assert_eq!(ag.edges, vec![(0, 1, 1.0)]);

        // p1 now has authors a1 and a2.
        let g = graph(3, 2, &[(0, 0), (1, 1), (2, 1)], &[(0, 1)]);
        let ag = build_author_graph(&g);
        assert_eq!(ag.weight(0, 1), 0.5);
        assert_eq!(ag.weight(0, 2), 0.5);

        let g = graph(2, 2, &[(0, 0), (1, 1)], &[]);
        assert!(build_author_graph(&g).edges.is_empty());
    }

    #[test]
    fn author_graph_symmetric_pair_ranks_equal() {
        let g = graph(2, 2, &[(0, 0), (1, 1)], &[(0, 1), (1, 0)]);
        let s = pr_a(&g).unwrap();
        assert!((s[0] - s[1]).abs() < 1e-12);
    }
}
