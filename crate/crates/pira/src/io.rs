//! The four-file TSV dataset format.
//!
//! ```text
//! authors.tsv  author_id <TAB> name <TAB> in_dblp (0|1)
//! papers.tsv   paper_id <TAB> title <TAB> in_dblp (0|1)
//! wrote.tsv    author_id <TAB> paper_id
//! cites.tsv    citing_paper_id <TAB> cited_paper_id
//! ```
//!
//! No header, UTF-8, one record per line. Ids are shared between authors
//! and papers and must be unique.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io::ErrorKind;
use std::path::Path;

use pira_core::{build_graph, Author, BuildReport, CitationGraph, NodeKind, Paper};

use crate::error::{PiraError, Result};

pub const AUTHORS: &str = "authors.tsv";
pub const PAPERS: &str = "papers.tsv";
pub const WROTE: &str = "wrote.tsv";
pub const CITES: &str = "cites.tsv";
pub const IDMAP: &str = "idmap.tsv";

/// What a load read and what graph construction dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub author_lines: usize,
    pub paper_lines: usize,
    pub wrote_lines: usize,
    pub cite_lines: usize,
    pub build: BuildReport,
}

impl fmt::Display for LoadReport {
    /// One `key=value` pair per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = &self.build;
        let pairs = [
            ("authors", self.author_lines),
            ("papers", self.paper_lines),
            ("wrote_lines", self.wrote_lines),
            ("cite_lines", self.cite_lines),
            ("wrote_edges", b.wrote_edges),
            ("cite_edges", b.cite_edges),
            ("dropped_duplicate_wrote", b.dropped_duplicate_wrote),
            ("dropped_duplicate_cites", b.dropped_duplicate_cites),
            ("dropped_self_citations", b.dropped_self_citations),
            ("authors_without_papers", b.authors_without_papers),
            ("papers_without_authors", b.papers_without_authors),
        ];
        for (k, v) in pairs {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

fn read(dir: &Path, name: &str) -> Result<String> {
    let path = dir.join(name);
    fs::read_to_string(&path).map_err(|e| match e.kind() {
        ErrorKind::NotFound => PiraError::MissingFile(path),
        _ => PiraError::io(path, e),
    })
}

/// Splits a file into `(line_number, fields)` records, checking the arity.
fn records<'a>(
    file: &'static str,
    text: &'a str,
    arity: usize,
) -> impl Iterator<Item = Result<(usize, Vec<&'a str>)>> + 'a {
    text.lines().enumerate().map(move |(i, line)| {
        let line_no = i + 1;
        let fields: Vec<&str> = line.strip_suffix('\r').unwrap_or(line).split('\t').collect();
        if fields.len() != arity {
            return Err(PiraError::parse(
                file,
                line_no,
                format!("expected {arity} tab-separated fields, found {}", fields.len()),
            ));
        }
        if fields[0].is_empty() {
            return Err(PiraError::parse(file, line_no, "empty id"));
        }
        Ok((line_no, fields))
    })
}

fn flag(file: &str, line: usize, field: &str) -> Result<bool> {
    match field {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(PiraError::parse(file, line, format!("in_dblp must be 0 or 1, got {field:?}"))),
    }
}

/// Loads a dataset directory.
pub fn load_graph(dir: &Path) -> Result<(CitationGraph, LoadReport)> {
    let texts = [AUTHORS, PAPERS, WROTE, CITES].map(|name| read(dir, name));
    let [authors_txt, papers_txt, wrote_txt, cites_txt] = texts;
    let (authors_txt, papers_txt) = (authors_txt?, papers_txt?);
    let (wrote_txt, cites_txt) = (wrote_txt?, cites_txt?);

    let mut ids: HashMap<&str, (NodeKind, usize)> = HashMap::new();
    let mut authors = Vec::new();
    for rec in records(AUTHORS, &authors_txt, 3) {
        let (line, f) = rec?;
        if ids.insert(f[0], (NodeKind::Author, authors.len())).is_some() {
            return Err(PiraError::parse(AUTHORS, line, format!("duplicate id {:?}", f[0])));
        }
        if f[1].is_empty() {
            return Err(PiraError::parse(AUTHORS, line, "empty name"));
        }
        authors.push(Author::new(f[0], f[1], flag(AUTHORS, line, f[2])?));
    }
    let mut papers = Vec::new();
    for rec in records(PAPERS, &papers_txt, 3) {
        let (line, f) = rec?;
        if ids.insert(f[0], (NodeKind::Paper, papers.len())).is_some() {
            return Err(PiraError::parse(PAPERS, line, format!("duplicate id {:?}", f[0])));
        }
        if f[1].is_empty() {
            return Err(PiraError::parse(PAPERS, line, "empty title"));
        }
        papers.push(Paper::new(f[0], f[1], flag(PAPERS, line, f[2])?));
    }

    let lookup = |file: &str, line: usize, id: &str, kind: NodeKind| match ids.get(id) {
        Some(&(k, i)) if k == kind => Ok(i),
        _ => Err(PiraError::parse(
            file,
            line,
            format!("unknown {} {id:?}", kind.as_str()),
        )),
    };
    let mut wrote = Vec::new();
    for rec in records(WROTE, &wrote_txt, 2) {
        let (line, f) = rec?;
        wrote.push((
            lookup(WROTE, line, f[0], NodeKind::Author)?,
            lookup(WROTE, line, f[1], NodeKind::Paper)?,
        ));
    }
    let mut cites = Vec::new();
    for rec in records(CITES, &cites_txt, 2) {
        let (line, f) = rec?;
        cites.push((
            lookup(CITES, line, f[0], NodeKind::Paper)?,
            lookup(CITES, line, f[1], NodeKind::Paper)?,
        ));
    }

    let report_lines = (authors.len(), papers.len(), wrote.len(), cites.len());
    let (graph, build) = build_graph(authors, papers, &wrote, &cites)?;
    let report = LoadReport {
        author_lines: report_lines.0,
        paper_lines: report_lines.1,
        wrote_lines: report_lines.2,
        cite_lines: report_lines.3,
        build,
    };
    Ok((graph, report))
}

fn check_field(what: &str, value: &str) -> Result<()> {
    if value.contains(['\t', '\n', '\r']) {
        return Err(PiraError::Usage(format!(
            "{what} {value:?} contains a tab or line break"
        )));
    }
    Ok(())
}

/// The four files as strings: nodes in index order, edges sorted.
pub fn dataset_files(graph: &CitationGraph) -> Result<[(&'static str, String); 4]> {
    use std::fmt::Write;

    let bit = |b: bool| if b { 1 } else { 0 };
    let mut authors = String::new();
    for a in graph.authors() {
        check_field("author id", &a.key)?;
        check_field("author name", &a.name)?;
        writeln!(authors, "{}\t{}\t{}", a.key, a.name, bit(a.in_dblp)).unwrap();
    }
    let mut papers = String::new();
    for p in graph.papers() {
        check_field("paper id", &p.key)?;
        check_field("paper title", &p.title)?;
        writeln!(papers, "{}\t{}\t{}", p.key, p.title, bit(p.in_dblp)).unwrap();
    }
    let (a, p) = (graph.authors(), graph.papers());
    let mut wrote = String::new();
    for (x, y) in graph.wrote_edges() {
        writeln!(wrote, "{}\t{}", a[x].key, p[y].key).unwrap();
    }
    let mut cites = String::new();
    for (x, y) in graph.cite_edges() {
        writeln!(cites, "{}\t{}", p[x].key, p[y].key).unwrap();
    }
    Ok([(AUTHORS, authors), (PAPERS, papers), (WROTE, wrote), (CITES, cites)])
}

/// Writes the dataset to `dir`, creating it if needed.
pub fn save_graph(graph: &CitationGraph, dir: &Path) -> Result<()> {
    let files = dataset_files(graph)?;
    fs::create_dir_all(dir).map_err(|e| PiraError::io(dir, e))?;
    for (name, body) in files {
        write_file(&dir.join(name), &body)?;
    }
    Ok(())
}

/// `kind <TAB> index <TAB> id` for every node, in node order.
pub fn id_map(graph: &CitationGraph) -> String {
    graph
        .nodes()
        .map(|n| format!("{}\t{}\t{}\n", n.kind.as_str(), n.index, graph.key(n)))
        .collect()
}

pub fn write_file(path: &Path, body: &str) -> Result<()> {
    fs::write(path, body).map_err(|e| PiraError::io(path, e))
}

pub fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| match e.kind() {
        ErrorKind::NotFound => PiraError::MissingFile(path.to_path_buf()),
        _ => PiraError::io(path, e),
    })
}
