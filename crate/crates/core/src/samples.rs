//! Small hand-built graphs for tests and examples.

use alloc::format;
use alloc::vec::Vec;

use crate::graph::{build_graph, Author, CitationGraph, Paper};

fn make(
    authors: usize,
    papers: usize,
    wrote: &[(usize, usize)],
    cites: &[(usize, usize)],
) -> CitationGraph {
    let authors = (0..authors)
        .map(|i| Author::new(format!("a{i}"), format!("Author {i}"), true))
        .collect();
    let papers = (0..papers)
        .map(|i| Paper::new(format!("p{i}"), format!("Paper {i}"), true))
        .collect();
    build_graph(authors, papers, wrote, cites)
        .expect("sample graphs are well formed")
        .0
}

/// One author wrote two papers that cite each other.
pub fn mutual_pair() -> CitationGraph {
    make(1, 2, &[(0, 0), (0, 1)], &[(0, 1), (1, 0)])
}

/// A mutually citing pair by `a0`, each cited once by a paper of `a1`.
pub fn mutual_halo() -> CitationGraph {
    make(
        2,
        4,
        &[(0, 0), (0, 1), (1, 2), (1, 3)],
        &[(0, 1), (1, 0), (2, 0), (3, 1)],
    )
}

/// Papers p1..p4 cite hub p0; every paper has its own author.
pub fn star() -> CitationGraph {
    let wrote: Vec<_> = (0..5).map(|i| (i, i)).collect();
    make(5, 5, &wrote, &[(1, 0), (2, 0), (3, 0), (4, 0)])
}

/// Three papers citing around a ring, one author each.
pub fn ring() -> CitationGraph {
    make(3, 3, &[(0, 0), (1, 1), (2, 2)], &[(0, 1), (1, 2), (2, 0)])
}

/// Mixed co-authorship, an author without papers and a paper without
/// authors.
pub fn coauthors() -> CitationGraph {
    make(
        5,
        6,
        &[(0, 0), (1, 0), (2, 0), (1, 1), (2, 2), (3, 2), (0, 3), (3, 4)],
        &[(1, 0), (2, 0), (2, 1), (3, 2), (4, 0), (4, 3), (5, 4), (0, 5)],
    )
}

/// `a0` wrote a 5-paper chain; three isolated author-paper pairs.
pub fn chain() -> CitationGraph {
    make(
        4,
        8,
        &[(0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 6), (3, 7)],
        &[(1, 0), (2, 1), (3, 2), (4, 3)],
    )
}

/// Every sample with its name.
pub fn all() -> Vec<(&'static str, CitationGraph)> {
    alloc::vec![
        ("mutual-pair", mutual_pair()),
        ("mutual-halo", mutual_halo()),
        ("star", star()),
        ("ring", ring()),
        ("coauthors", coauthors()),
        ("chain", chain()),
    ]
}
