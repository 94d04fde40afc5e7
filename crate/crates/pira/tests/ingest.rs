use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use pira::io::{load_graph, save_graph};
use pira::PiraError;
use pira_core::analysis::dataset_stats;
use pira_core::scenario::{generate, ScenarioKind, ScenarioSpec};

fn write_dataset(dir: &Path, authors: &str, papers: &str, wrote: &str, cites: &str) {
    for (name, body) in [("authors.tsv", authors), ("papers.tsv", papers), ("wrote.tsv", wrote), ("cites.tsv", cites)] {
        fs::write(dir.join(name), body).unwrap();
    }
}

#[test]
fn small_fixture_counts() {
    let dir = tempfile::tempdir().unwrap();
    write_dataset(
        dir.path(),
        "a1\tAda\t1\na2\tBob\t0\n",
        "p1\tFirst\t1\np2\tSecond\t1\n",
        "a1\tp1\na2\tp2\n",
        "p2\tp1\n",
    );
    let (g, report) = load_graph(dir.path()).unwrap();
    assert_eq!((g.author_count(), g.paper_count()), (2, 2));
    assert_eq!((report.build.wrote_edges, report.build.cite_edges), (2, 1));
    let text = report.to_string();
    assert!(text.contains("wrote_edges=2\n") && text.contains("cite_edges=1\n"));
}

#[test]
fn duplicates_and_self_citations_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    write_dataset(
        dir.path(),
        "a1\tAda\t1\n",
        "p1\tFirst\t1\np2\tSecond\t1\n",
        "a1\tp1\na1\tp1\na1\tp2\n",
        "p2\tp1\np2\tp1\np1\tp1\n",
    );
    let (g, report) = load_graph(dir.path()).unwrap();
    assert_eq!(g.cite_edges().count(), 1);
    let b = &report.build;
    assert_eq!((b.dropped_duplicate_wrote, b.dropped_duplicate_cites, b.dropped_self_citations), (1, 1, 1));
}

#[test]
fn errors_name_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    write_dataset(dir.path(), "a1\tAda\t1\n", "p1\tFirst\t1\n", "a1\tp1\n", "p1\tp1\np1\tnope\n");
    let err = load_graph(dir.path()).unwrap_err();
    assert!(err.to_string().starts_with("cites.tsv:2 unknown paper"), "{err}");
    assert_eq!(err.exit_code(), 2);

    write_dataset(dir.path(), "a1\tAda\tyes\n", "p1\tFirst\t1\n", "", "");
    assert!(load_graph(dir.path()).unwrap_err().to_string().starts_with("authors.tsv:1 "));

    write_dataset(dir.path(), "a1\tAda\t1\n", "p1\tFirst\t1\np2\n", "", "");
    assert!(load_graph(dir.path()).unwrap_err().to_string().starts_with("papers.tsv:2 "));

    write_dataset(dir.path(), "a1\tAda\t1\n", "p1\tFirst\t1\n", "p1\tp1\n", "");
    assert!(load_graph(dir.path()).unwrap_err().to_string().starts_with("wrote.tsv:1 unknown author"));

    write_dataset(dir.path(), "x\tAda\t1\n", "x\tFirst\t1\n", "", "");
    assert!(load_graph(dir.path()).unwrap_err().to_string().contains("duplicate id"));

    fs::remove_file(dir.path().join("cites.tsv")).unwrap();
    let err = load_graph(dir.path()).unwrap_err();
    assert!(matches!(err, PiraError::MissingFile(_)));
    assert!(err.to_string().contains("cites.tsv"));
}

#[test]
fn empty_dataset_loads() {
    let dir = tempfile::tempdir().unwrap();
    write_dataset(dir.path(), "", "", "", "");
    let (g, _) = load_graph(dir.path()).unwrap();
    assert!(g.is_empty());
    assert_eq!(dataset_stats(&g), Default::default());
}

#[test]
fn save_then_load_is_identity() {
    for kind in ScenarioKind::ALL {
        let g = generate(&ScenarioSpec::default_for(kind), 4).unwrap().graph;
        let dir = tempfile::tempdir().unwrap();
        save_graph(&g, dir.path()).unwrap();
        let (back, _) = load_graph(dir.path()).unwrap();
        assert_eq!(back, g, "{kind}");
        let again = tempfile::tempdir().unwrap();
        save_graph(&back, again.path()).unwrap();
        for f in ["authors.tsv", "papers.tsv", "wrote.tsv", "cites.tsv"] {
            assert_eq!(
                fs::read(dir.path().join(f)).unwrap(),
                fs::read(again.path().join(f)).unwrap()
            );
        }
    }
}

/// A dataset with the aggregate shape of the crawled corpus at 1/1000
/// scale: 246 authors (80 DBLP), 281 papers (68 DBLP), 631 citations, and
/// 556 publications over the DBLP authors (mean 6.95).
struct Shape {
    wrote: Vec<(usize, usize)>,
    cites: Vec<(usize, usize)>,
}

const AUTHORS: usize = 246;
const DBLP_AUTHORS: usize = 80;
const PAPERS: usize = 281;
const DBLP_PAPERS: usize = 68;
const CITATIONS: usize = 631;

fn shape() -> Shape {
    let mut wrote = Vec::new();
    for a in 0..DBLP_AUTHORS {
        let degree = if a < 4 { 6 } else { 7 };
        wrote.extend((0..degree).map(|j| (a, (a * 7 + j) % DBLP_PAPERS)));
    }
    for a in DBLP_AUTHORS..AUTHORS {
        wrote.push((a, DBLP_PAPERS + (a - DBLP_AUTHORS) % (PAPERS - DBLP_PAPERS)));
    }
    let mut seen = BTreeSet::new();
    let mut cites = Vec::new();
    let mut i = 0usize;
    while cites.len() < CITATIONS {
        let (p, q) = (i % PAPERS, (i * 37 + 11 + i / PAPERS) % PAPERS);
        if p != q && seen.insert((p, q)) {
            cites.push((p, q));
        }
        i += 1;
    }
    Shape { wrote, cites }
}

fn histogram(values: impl Iterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_default() += 1;
    }
    h
}

fn as_map(counts: &[usize]) -> BTreeMap<usize, usize> {
    counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(b, &c)| (b, c)).collect()
}

#[test]
fn scaled_corpus_statistics_match_construction() {
    let s = shape();
    let dir = tempfile::tempdir().unwrap();
    let authors: String = (0..AUTHORS).map(|a| format!("a{a}\tAuthor {a}\t{}\n", u8::from(a < DBLP_AUTHORS))).collect();
    let papers: String = (0..PAPERS).map(|p| format!("p{p}\tPaper {p}\t{}\n", u8::from(p < DBLP_PAPERS))).collect();
    let wrote: String = s.wrote.iter().map(|(a, p)| format!("a{a}\tp{p}\n")).collect();
    let cites: String = s.cites.iter().map(|(p, q)| format!("p{p}\tp{q}\n")).collect();
    write_dataset(dir.path(), &authors, &papers, &wrote, &cites);

    let (g, report) = load_graph(dir.path()).unwrap();
    assert_eq!(report.build.wrote_edges, s.wrote.len());
    let st = dataset_stats(&g);
    assert_eq!((st.authors_dblp, st.authors_other), (80, 166));
    assert_eq!((st.papers_dblp, st.papers_other), (68, 213));
    assert_eq!(st.citation_edges, 631);
    assert!((st.mean_publications_dblp() - 6.95).abs() < 1e-12);
    let other = (st.authors_other + st.papers_other) as f64 / g.node_count() as f64;
    assert!((0.69..0.73).contains(&other), "{other}");

    let pubs = |range: std::ops::Range<usize>| {
        histogram(range.map(|a| s.wrote.iter().filter(|w| w.0 == a).count()))
    };
    assert_eq!(as_map(&st.publications_dblp.counts), pubs(0..DBLP_AUTHORS));
    assert_eq!(as_map(&st.publications_other.counts), pubs(DBLP_AUTHORS..AUTHORS));
    let per_paper = |range: std::ops::Range<usize>, f: &dyn Fn(usize) -> usize| histogram(range.map(f));
    let coauthors = |p: usize| s.wrote.iter().filter(|w| w.1 == p).count();
    let out_refs = |p: usize| s.cites.iter().filter(|c| c.0 == p).count();
    let in_refs = |p: usize| s.cites.iter().filter(|c| c.1 == p).count();
    assert_eq!(as_map(&st.coauthors_dblp.counts), per_paper(0..DBLP_PAPERS, &coauthors));
    assert_eq!(as_map(&st.coauthors_other.counts), per_paper(DBLP_PAPERS..PAPERS, &coauthors));
    assert_eq!(as_map(&st.out_citations_dblp.counts), per_paper(0..DBLP_PAPERS, &out_refs));
    assert_eq!(as_map(&st.out_citations_other.counts), per_paper(DBLP_PAPERS..PAPERS, &out_refs));
    assert_eq!(as_map(&st.in_citations_dblp.counts), per_paper(0..DBLP_PAPERS, &in_refs));
    let d2d = s.cites.iter().filter(|(p, q)| *p < DBLP_PAPERS && *q < DBLP_PAPERS).count();
    assert_eq!(st.dblp_to_dblp_citations, d2d);
}
