//! Text formats for score tables, rankings and comparison output.
//!
//! Score table: `node_id <TAB> raw <TAB> normalized`, sorted by node id,
//! normalized to 6 decimals. Ranking: `rank <TAB> node_id <TAB> score`.
//! CSV outputs carry a header row and use LF line endings.

use std::collections::HashSet;
use std::fmt::Write;

use pira_core::analysis::{DiffCurve, Histogram, Ranking, ScatterPoint, StatsReport};
use pira_core::scenario::{Expectation, Scenario};
use pira_core::{CitationGraph, NodeId, ScoreTable};

use crate::error::{PiraError, Result};

pub fn score_table(graph: &CitationGraph, table: &ScoreTable) -> String {
    let mut rows: Vec<(&str, f64, f64)> = graph
        .nodes()
        .map(|n| {
            let g = graph.global_index(n);
            (graph.key(n), table.raw()[g], table.normalized()[g])
        })
        .collect();
    rows.sort_by(|a, b| a.0.cmp(b.0));
    let mut out = String::new();
    for (key, raw, norm) in rows {
        writeln!(out, "{key}\t{raw}\t{norm:.6}").unwrap();
    }
    out
}

/// Reads the normalized column of a score table file.
pub fn read_score_table(file: &str, text: &str) -> Result<Vec<(String, f64)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 3 {
            return Err(PiraError::parse(file, i + 1, "expected node_id, raw, normalized"));
        }
        let score = f[2]
            .parse::<f64>()
            .map_err(|e| PiraError::parse(file, i + 1, e.to_string()))?;
        out.push((f[0].to_string(), score));
    }
    Ok(out)
}

pub fn ranking(graph: &CitationGraph, ranking: &Ranking<NodeId>) -> String {
    let mut out = String::new();
    for e in ranking.entries() {
        writeln!(out, "{}\t{}\t{:.6}", e.rank, graph.key(e.node), e.score).unwrap();
    }
    out
}

/// Parses a ranking file; ranks must run `1..=N` and ids be unique.
pub fn read_ranking(file: &str, text: &str) -> Result<Ranking<String>> {
    let mut seen = HashSet::new();
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 3 {
            return Err(PiraError::parse(file, line_no, "expected rank, node_id, score"));
        }
        let rank: usize = f[0]
            .parse()
            .map_err(|_| PiraError::parse(file, line_no, format!("bad rank {:?}", f[0])))?;
        if rank != line_no {
            return Err(PiraError::parse(file, line_no, format!("rank {rank} out of sequence")));
        }
        let score: f64 = f[2]
            .parse()
            .map_err(|_| PiraError::parse(file, line_no, format!("bad score {:?}", f[2])))?;
        if !seen.insert(f[1]) {
            return Err(PiraError::parse(file, line_no, format!("duplicate node {:?}", f[1])));
        }
        rows.push((f[1].to_string(), score));
    }
    Ranking::from_ordered(rows).map_err(|e| PiraError::parse(file, 0, e.to_string()))
}

pub fn diff_curve(curve: &DiffCurve) -> String {
    let mut out = String::from("x_percent,diff_percent\n");
    for &(x, d) in &curve.points {
        writeln!(out, "{x},{d:.6}").unwrap();
    }
    out
}

pub fn scatter(points: &[ScatterPoint<String>]) -> String {
    let mut out = String::from("node_id,base_rank,rank_difference\n");
    for p in points {
        writeln!(out, "{},{},{}", csv_field(&p.node), p.base_rank, p.difference).unwrap();
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `name,value` summary of a statistics report.
pub fn stats_summary(s: &StatsReport) -> String {
    let rows: [(&str, String); 12] = [
        ("authors_dblp", s.authors_dblp.to_string()),
        ("authors_other", s.authors_other.to_string()),
        ("papers_dblp", s.papers_dblp.to_string()),
        ("papers_other", s.papers_other.to_string()),
        ("mean_publications_dblp", format!("{:.6}", s.mean_publications_dblp())),
        ("mean_publications_other", format!("{:.6}", s.mean_publications_other())),
        ("mean_coauthors_dblp", format!("{:.6}", s.mean_coauthors_dblp())),
        ("mean_coauthors_other", format!("{:.6}", s.mean_coauthors_other())),
        ("citation_edges", s.citation_edges.to_string()),
        ("dblp_to_dblp_citations", s.dblp_to_dblp_citations.to_string()),
        ("mean_out_citations_dblp", format!("{:.6}", s.out_citations_dblp.mean())),
        ("mean_out_citations_other", format!("{:.6}", s.out_citations_other.mean())),
    ];
    let mut out = String::from("metric,value\n");
    for (k, v) in rows {
        writeln!(out, "{k},{v}").unwrap();
    }
    out
}

/// Histograms side by side: `bucket,<column>...`, one row per bucket from 0
/// to the largest non-empty one.
pub fn histograms(columns: &[(&str, &Histogram)]) -> String {
    let mut out = String::from("bucket");
    for (name, _) in columns {
        write!(out, ",{name}").unwrap();
    }
    out.push('\n');
    let buckets = columns.iter().map(|(_, h)| h.counts.len()).max().unwrap_or(0);
    for b in 0..buckets {
        write!(out, "{b}").unwrap();
        for (_, h) in columns {
            write!(out, ",{}", h.get(b)).unwrap();
        }
        out.push('\n');
    }
    out
}

/// The histogram files written by `stats`, as `(file name, contents)`.
pub fn stats_files(s: &StatsReport) -> Vec<(&'static str, String)> {
    vec![
        ("summary.csv", stats_summary(s)),
        (
            "publications.csv",
            histograms(&[("authors_dblp", &s.publications_dblp), ("authors_other", &s.publications_other)]),
        ),
        (
            "coauthors.csv",
            histograms(&[("papers_dblp", &s.coauthors_dblp), ("papers_other", &s.coauthors_other)]),
        ),
        (
            "out_citations.csv",
            histograms(&[("papers_dblp", &s.out_citations_dblp), ("papers_other", &s.out_citations_other)]),
        ),
        ("in_citations.csv", histograms(&[("papers_dblp", &s.in_citations_dblp)])),
    ]
}

pub const ASSERTIONS: &str = "assertions.tsv";

/// Expected orderings of a generated scenario, one per line:
///
/// ```text
/// compare <TAB> measure <TAB> node_a <TAB> (>|<|=) <TAB> node_b
/// rank_at_most <TAB> measure <TAB> node <TAB> rank
/// rank_worse <TAB> node <TAB> worse_measure <TAB> better_measure
/// pair <TAB> higher <TAB> lower
/// ```
pub fn assertions(scenario: &Scenario) -> String {
    let g = &scenario.graph;
    let mut out = String::new();
    for e in &scenario.expectations {
        match *e {
            Expectation::Compare { measure, a, relation, b } => {
                writeln!(out, "compare\t{measure}\t{}\t{}\t{}", g.key(a), relation.symbol(), g.key(b))
            }
            Expectation::RankAtMost { measure, node, rank } => {
                writeln!(out, "rank_at_most\t{measure}\t{}\t{rank}", g.key(node))
            }
            Expectation::RankWorse { node, worse, better } => {
                writeln!(out, "rank_worse\t{}\t{worse}\t{better}", g.key(node))
            }
        }
        .unwrap();
    }
    if let Some((hi, lo)) = scenario.pair {
        writeln!(out, "pair\t{}\t{}", g.key(hi), g.key(lo)).unwrap();
    }
    out
}
