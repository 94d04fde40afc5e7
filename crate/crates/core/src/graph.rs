//! The bipartite author/paper graph.
//!
//! Nodes are addressed by a [`NodeId`]: a kind plus a dense per-kind index.
//! Three edge families exist: `wrote` (author to paper), its inverse
//! `isWrittenBy` (derived, never stored separately) and `cite` (paper to
//! paper). Adjacency lists are sorted and duplicate-free, and the graph is
//! immutable once built.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeKind {
    Author,
    Paper,
}

impl NodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Author => "author",
            NodeKind::Paper => "paper",
        }
    }
}

/// A node handle. Ordering is authors first, then papers, each by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId {
    pub kind: NodeKind,
    pub index: usize,
}

impl NodeId {
    pub const fn author(index: usize) -> Self {
        NodeId {
            kind: NodeKind::Author,
            index,
        }
    }

    pub const fn paper(index: usize) -> Self {
        NodeId {
            kind: NodeKind::Paper,
            index,
        }
    }

    pub fn is_author(self) -> bool {
        self.kind == NodeKind::Author
    }

    pub fn is_paper(self) -> bool {
        self.kind == NodeKind::Paper
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.kind.as_str(), self.index)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Author {
    /// External identifier, unique across authors and papers.
    pub key: String,
    pub name: String,
    pub in_dblp: bool,
}

impl Author {
    pub fn new(key: impl Into<String>, name: impl Into<String>, in_dblp: bool) -> Self {
        Author {
            key: key.into(),
            name: name.into(),
            in_dblp,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Paper {
    /// External identifier, unique across authors and papers.
    pub key: String,
    pub title: String,
    pub in_dblp: bool,
}

impl Paper {
    pub fn new(key: impl Into<String>, title: impl Into<String>, in_dblp: bool) -> Self {
        Paper {
            key: key.into(),
            title: title.into(),
            in_dblp,
        }
    }
}

/// What [`build_graph`] dropped or flagged while assembling a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuildReport {
    pub wrote_edges: usize,
    pub cite_edges: usize,
    pub dropped_duplicate_wrote: usize,
    pub dropped_duplicate_cites: usize,
    pub dropped_self_citations: usize,
    pub authors_without_papers: usize,
    pub papers_without_authors: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CitationGraph {
    authors: Vec<Author>,
    papers: Vec<Paper>,
    papers_of: Vec<Vec<usize>>,
    authors_of: Vec<Vec<usize>>,
    refs: Vec<Vec<usize>>,
    cited_by: Vec<Vec<usize>>,
    keys: BTreeMap<String, NodeId>,
}

/// Assembles a graph from node lists and index-based edge lists.
///
/// Duplicate edges and self-citations are dropped and counted in the
/// returned report. An edge endpoint outside the node lists is an error.
pub fn build_graph(
    authors: Vec<Author>,
    papers: Vec<Paper>,
    wrote: &[(usize, usize)],
    cites: &[(usize, usize)],
) -> Result<(CitationGraph, BuildReport)> {
    let mut keys = BTreeMap::new();
    for (i, a) in authors.iter().enumerate() {
        if a.name.trim().is_empty() {
            return Err(Error::InvalidNode(format!("author {} has an empty name", a.key)));
        }
        insert_key(&mut keys, &a.key, NodeId::author(i))?;
    }
    for (i, p) in papers.iter().enumerate() {
        if p.title.trim().is_empty() {
            return Err(Error::InvalidNode(format!("paper {} has an empty title", p.key)));
        }
        insert_key(&mut keys, &p.key, NodeId::paper(i))?;
    }

    let (na, np) = (authors.len(), papers.len());
    let mut report = BuildReport::default();
    let mut papers_of = vec![Vec::new(); na];
    let mut authors_of = vec![Vec::new(); np];
    for &(a, p) in wrote {
        if a >= na {
            return Err(dangling("wrote", a, p, "unknown author"));
        }
        if p >= np {
            return Err(dangling("wrote", a, p, "unknown paper"));
        }
        papers_of[a].push(p);
        authors_of[p].push(a);
    }

    let mut refs = vec![Vec::new(); np];
    let mut cited_by = vec![Vec::new(); np];
    for &(from, to) in cites {
        if from >= np {
            return Err(dangling("cite", from, to, "unknown citing paper"));
        }
        if to >= np {
            return Err(dangling("cite", from, to, "unknown cited paper"));
        }
        if from == to {
            report.dropped_self_citations += 1;
            continue;
        }
        refs[from].push(to);
        cited_by[to].push(from);
    }

    report.dropped_duplicate_wrote = sort_dedup(&mut papers_of);
    sort_dedup(&mut authors_of);
    report.dropped_duplicate_cites = sort_dedup(&mut refs);
    sort_dedup(&mut cited_by);
    report.wrote_edges = papers_of.iter().map(Vec::len).sum();
    report.cite_edges = refs.iter().map(Vec::len).sum();
    report.authors_without_papers = papers_of.iter().filter(|v| v.is_empty()).count();
    report.papers_without_authors = authors_of.iter().filter(|v| v.is_empty()).count();

    let graph = CitationGraph {
        authors,
        papers,
        papers_of,
        authors_of,
        refs,
        cited_by,
        keys,
    };
    Ok((graph, report))
}

fn insert_key(keys: &mut BTreeMap<String, NodeId>, key: &str, id: NodeId) -> Result<()> {
    if key.is_empty() {
        return Err(Error::InvalidNode(format!("{id} has an empty key")));
    }
    if keys.insert(String::from(key), id).is_some() {
        return Err(Error::InvalidNode(format!("duplicate node key {key:?}")));
    }
    Ok(())
}

fn dangling(kind: &'static str, from: usize, to: usize, reason: &'static str) -> Error {
    Error::DanglingEdge {
        kind,
        from,
        to,
        reason,
    }
}

/// Sorts and dedups every list, returning how many entries were removed.
fn sort_dedup(lists: &mut [Vec<usize>]) -> usize {
    let mut removed = 0;
    for list in lists {
        list.sort_unstable();
        let before = list.len();
        list.dedup();
        removed += before - list.len();
    }
    removed
}

impl CitationGraph {
    pub fn author_count(&self) -> usize {
        self.authors.len()
    }

    pub fn paper_count(&self) -> usize {
        self.papers.len()
    }

    pub fn node_count(&self) -> usize {
        self.authors.len() + self.papers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.node_count() == 0
    }

    pub fn authors(&self) -> &[Author] {
        &self.authors
    }

    pub fn papers(&self) -> &[Paper] {
        &self.papers
    }

    pub fn papers_of(&self, author: usize) -> &[usize] {
        &self.papers_of[author]
    }

    pub fn authors_of(&self, paper: usize) -> &[usize] {
        &self.authors_of[paper]
    }

    /// Outgoing references of a paper.
    pub fn refs(&self, paper: usize) -> &[usize] {
        &self.refs[paper]
    }

    /// Incoming citations of a paper.
    pub fn cited_by(&self, paper: usize) -> &[usize] {
        &self.cited_by[paper]
    }

    pub fn contains(&self, id: NodeId) -> bool {
        match id.kind {
            NodeKind::Author => id.index < self.authors.len(),
            NodeKind::Paper => id.index < self.papers.len(),
        }
    }

    /// Position of a node in the combined author-then-paper ordering.
    pub fn global_index(&self, id: NodeId) -> usize {
        match id.kind {
            NodeKind::Author => id.index,
            NodeKind::Paper => self.authors.len() + id.index,
        }
    }

    pub fn node_at(&self, global: usize) -> NodeId {
        if global < self.authors.len() {
            NodeId::author(global)
        } else {
            NodeId::paper(global - self.authors.len())
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.node_count()).map(move |g| self.node_at(g))
    }

    pub fn key(&self, id: NodeId) -> &str {
        match id.kind {
            NodeKind::Author => &self.authors[id.index].key,
            NodeKind::Paper => &self.papers[id.index].key,
        }
    }

    /// Author name or paper title.
    pub fn label(&self, id: NodeId) -> &str {
        match id.kind {
            NodeKind::Author => &self.authors[id.index].name,
            NodeKind::Paper => &self.papers[id.index].title,
        }
    }

    pub fn in_dblp(&self, id: NodeId) -> bool {
        match id.kind {
            NodeKind::Author => self.authors[id.index].in_dblp,
            NodeKind::Paper => self.papers[id.index].in_dblp,
        }
    }

    pub fn find(&self, key: &str) -> Option<NodeId> {
        self.keys.get(key).copied()
    }

    /// All `(author, paper)` wrote edges, sorted.
    pub fn wrote_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.papers_of
            .iter()
            .enumerate()
            .flat_map(|(a, ps)| ps.iter().map(move |&p| (a, p)))
    }

    /// All `(citing, cited)` edges, sorted.
    pub fn cite_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.refs
            .iter()
            .enumerate()
            .flat_map(|(p, rs)| rs.iter().map(move |&r| (p, r)))
    }

    pub fn has_wrote(&self, author: usize, paper: usize) -> bool {
        author < self.authors.len() && self.papers_of[author].binary_search(&paper).is_ok()
    }

    fn neighbors(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        let (a, b, c): (&[usize], &[usize], &[usize]) = match id.kind {
            NodeKind::Author => (&self.papers_of[id.index], &[], &[]),
            NodeKind::Paper => (
                &self.authors_of[id.index],
                &self.refs[id.index],
                &self.cited_by[id.index],
            ),
        };
        let first = a.iter().map(move |&i| match id.kind {
            NodeKind::Author => NodeId::paper(i),
            NodeKind::Paper => NodeId::author(i),
        });
        first.chain(b.iter().chain(c).map(|&i| NodeId::paper(i)))
    }

    /// Nodes within `radius` hops of `center`, sorted. Every edge family is
    /// walked in both directions.
    pub fn neighborhood_nodes(&self, center: NodeId, radius: usize) -> Result<Vec<NodeId>> {
        if !self.contains(center) {
            return Err(Error::UnknownNode(center));
        }
        let mut dist = vec![usize::MAX; self.node_count()];
        let mut queue = VecDeque::new();
        dist[self.global_index(center)] = 0;
        queue.push_back(center);
        while let Some(node) = queue.pop_front() {
            let d = dist[self.global_index(node)];
            if d == radius {
                continue;
            }
            for next in self.neighbors(node) {
                let g = self.global_index(next);
                if dist[g] == usize::MAX {
                    dist[g] = d + 1;
                    queue.push_back(next);
                }
            }
        }
        Ok(dist
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != usize::MAX)
            .map(|(g, _)| self.node_at(g))
            .collect())
    }

    /// Induced subgraph on `radius`-hop neighbourhood of `center`. Keys,
    /// names and flags are preserved; indices are re-densified in the
    /// original order.
    pub fn neighborhood(&self, center: NodeId, radius: usize) -> Result<CitationGraph> {
        let nodes = self.neighborhood_nodes(center, radius)?;
        Ok(self.induced_subgraph(&nodes))
    }

    /// Subgraph induced by `nodes` (which must exist in this graph).
    pub fn induced_subgraph(&self, nodes: &[NodeId]) -> CitationGraph {
        let mut author_map = vec![usize::MAX; self.author_count()];
        let mut paper_map = vec![usize::MAX; self.paper_count()];
        let mut authors = Vec::new();
        let mut papers = Vec::new();
        let mut sorted = nodes.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for id in sorted {
            match id.kind {
                NodeKind::Author => {
                    author_map[id.index] = authors.len();
                    authors.push(self.authors[id.index].clone());
                }
                NodeKind::Paper => {
                    paper_map[id.index] = papers.len();
                    papers.push(self.papers[id.index].clone());
                }
            }
        }
        let wrote: Vec<_> = self
            .wrote_edges()
            .filter(|&(a, p)| author_map[a] != usize::MAX && paper_map[p] != usize::MAX)
            .map(|(a, p)| (author_map[a], paper_map[p]))
            .collect();
        let cites: Vec<_> = self
            .cite_edges()
            .filter(|&(p, q)| paper_map[p] != usize::MAX && paper_map[q] != usize::MAX)
            .map(|(p, q)| (paper_map[p], paper_map[q]))
            .collect();
        build_graph(authors, papers, &wrote, &cites)
            .expect("subgraph of a valid graph is valid")
            .0
    }
}

/// Probability weight of the wrote edge `author -> paper`: one over the
/// number of authors of the paper.
pub fn p_weight(graph: &CitationGraph, author: NodeId, paper: NodeId) -> Result<f64> {
    if !author.is_author() || !paper.is_paper() || !graph.has_wrote(author.index, paper.index) {
        return Err(Error::MissingEdge { author, paper });
    }
    Ok(1.0 / graph.authors_of(paper.index).len() as f64)
}
