use alloc::vec::Vec;

use crate::graph::CitationGraph;

/// Count of items per integer bucket: `counts[d]` items have value `d`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Histogram {
    pub counts: Vec<usize>,
}

impl Histogram {
    fn from_values(values: impl Iterator<Item = usize>) -> Self {
        let mut counts = Vec::new();
        for v in values {
            if v >= counts.len() {
                counts.resize(v + 1, 0);
            }
            counts[v] += 1;
        }
        Histogram { counts }
    }

    /// Number of items counted.
    pub fn mass(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Sum of the values.
    pub fn total(&self) -> usize {
        self.counts.iter().enumerate().map(|(v, c)| v * c).sum()
    }

    pub fn mean(&self) -> f64 {
        let n = self.mass();
        if n == 0 {
            0.0
        } else {
            self.total() as f64 / n as f64
        }
    }

    pub fn get(&self, bucket: usize) -> usize {
        self.counts.get(bucket).copied().unwrap_or(0)
    }
}

/// Degree statistics, split by DBLP membership.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct StatsReport {
    pub authors_dblp: usize,
    pub authors_other: usize,
    pub papers_dblp: usize,
    pub papers_other: usize,
    pub publications_dblp: Histogram,
    pub publications_other: Histogram,
    pub coauthors_dblp: Histogram,
    pub coauthors_other: Histogram,
    pub out_citations_dblp: Histogram,
    pub out_citations_other: Histogram,
    /// Incoming citations of DBLP papers.
    pub in_citations_dblp: Histogram,
    pub citation_edges: usize,
    pub dblp_to_dblp_citations: usize,
}

impl StatsReport {
    pub fn mean_publications_dblp(&self) -> f64 {
        self.publications_dblp.mean()
    }

    pub fn mean_publications_other(&self) -> f64 {
        self.publications_other.mean()
    }

    pub fn mean_coauthors_dblp(&self) -> f64 {
        self.coauthors_dblp.mean()
    }

    pub fn mean_coauthors_other(&self) -> f64 {
        self.coauthors_other.mean()
    }
}

pub fn dataset_stats(graph: &CitationGraph) -> StatsReport {
    let author_split = |dblp: bool| {
        Histogram::from_values(
            (0..graph.author_count())
                .filter(move |&a| graph.authors()[a].in_dblp == dblp)
                .map(|a| graph.papers_of(a).len()),
        )
    };
    let paper_split = |dblp: bool, degree: &dyn Fn(usize) -> usize| {
        Histogram::from_values(
            (0..graph.paper_count())
                .filter(|&p| graph.papers()[p].in_dblp == dblp)
                .map(degree)
                .collect::<Vec<_>>()
                .into_iter(),
        )
    };
    let coauthors = |p: usize| graph.authors_of(p).len();
    let out_refs = |p: usize| graph.refs(p).len();
    let in_refs = |p: usize| graph.cited_by(p).len();

    let publications_dblp = author_split(true);
    let publications_other = author_split(false);
    let coauthors_dblp = paper_split(true, &coauthors);
    let coauthors_other = paper_split(false, &coauthors);
    let out_citations_dblp = paper_split(true, &out_refs);
    let out_citations_other = paper_split(false, &out_refs);
    let in_citations_dblp = paper_split(true, &in_refs);

    let papers = graph.papers();
    let dblp_to_dblp_citations = graph
        .cite_edges()
        .filter(|&(p, q)| papers[p].in_dblp && papers[q].in_dblp)
        .count();

    StatsReport {
        authors_dblp: publications_dblp.mass(),
        authors_other: publications_other.mass(),
        papers_dblp: coauthors_dblp.mass(),
        papers_other: coauthors_other.mass(),
        publications_dblp,
        publications_other,
        coauthors_dblp,
        coauthors_other,
        out_citations_dblp,
        out_citations_other,
        in_citations_dblp,
        citation_edges: graph.cite_edges().count(),
        dblp_to_dblp_citations,
    }
}
