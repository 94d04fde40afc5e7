//! Small deterministic graphs that pull the ranking measures apart.
//!
//! Each scenario comes with the orderings it is built to exhibit, stated as
//! [`Expectation`]s that an [`Evaluator`] can check.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::analysis::{rank_by, NodeFilter};
use crate::baselines;
use crate::error::{Error, Result};
use crate::graph::{build_graph, Author, CitationGraph, NodeId, NodeKind, Paper};
use crate::oracle;
use crate::scores::ScoreTable;
use crate::walk::{pira_rank, WalkParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ScenarioKind {
    PaperQuality,
    CoauthorCount,
    CitingQuality,
    SelfCitation,
    CitationLoop,
    SingleRefChain,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 6] = [
        ScenarioKind::PaperQuality,
        ScenarioKind::CoauthorCount,
        ScenarioKind::CitingQuality,
        ScenarioKind::SelfCitation,
        ScenarioKind::CitationLoop,
        ScenarioKind::SingleRefChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::PaperQuality => "paper-quality",
            ScenarioKind::CoauthorCount => "coauthor-count",
            ScenarioKind::CitingQuality => "citing-quality",
            ScenarioKind::SelfCitation => "self-citation",
            ScenarioKind::CitationLoop => "citation-loop",
            ScenarioKind::SingleRefChain => "single-ref-chain",
        }
    }
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScenarioKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScenarioKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown scenario kind {s:?}")))
    }
}

/// A scenario kind with its size parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScenarioSpec {
    /// A1 has one paper cited by `citers` external papers; A2 has two
    /// uncited papers.
    PaperQuality { citers: usize },
    /// A1 wrote a solo paper, A4 a paper with `coauthors` authors; both are
    /// cited `citations` times.
    CoauthorCount { citations: usize, coauthors: usize },
    /// A1 and A2 each have one paper cited once. A1's citer is itself cited
    /// `high` times, A2's `low` times. Both citers share one author.
    CitingQuality { high: usize, low: usize },
    /// A1 has `papers` papers, each citing the previous one and `outside_refs`
    /// external papers. A2 has one paper with `external_citations` external
    /// citers, each cited `citer_citations` times.
    SelfCitation {
        papers: usize,
        outside_refs: usize,
        external_citations: usize,
        citer_citations: usize,
    },
    /// Papers X and Y cite only each other and are cited by `citers_each`
    /// external papers apiece; their authors have `other_pubs` further
    /// papers each. `rivals` papers are each cited by `rival_citers`
    /// external papers.
    CitationLoop {
        citers_each: usize,
        other_pubs: usize,
        rivals: usize,
        rival_citers: usize,
    },
    /// One author wrote a chain of `length` papers, each citing only its
    /// predecessor. Control authors L1..L`ladder` have 1..`ladder` solo
    /// papers without citations.
    SingleRefChain { length: usize, ladder: usize },
}

impl ScenarioSpec {
    pub fn default_for(kind: ScenarioKind) -> Self {
        match kind {
            ScenarioKind::PaperQuality => ScenarioSpec::PaperQuality { citers: 10 },
            ScenarioKind::CoauthorCount => ScenarioSpec::CoauthorCount {
                citations: 5,
                coauthors: 10,
            },
            ScenarioKind::CitingQuality => ScenarioSpec::CitingQuality { high: 16, low: 1 },
            ScenarioKind::SelfCitation => ScenarioSpec::SelfCitation {
                papers: 10,
                outside_refs: 1,
                external_citations: 3,
                citer_citations: 8,
            },
            ScenarioKind::CitationLoop => ScenarioSpec::CitationLoop {
                citers_each: 7,
                other_pubs: 30,
                rivals: 3,
                rival_citers: 25,
            },
            ScenarioKind::SingleRefChain => ScenarioSpec::SingleRefChain {
                length: 5,
                ladder: 12,
            },
        }
    }

    pub fn kind(&self) -> ScenarioKind {
        match self {
            ScenarioSpec::PaperQuality { .. } => ScenarioKind::PaperQuality,
            ScenarioSpec::CoauthorCount { .. } => ScenarioKind::CoauthorCount,
            ScenarioSpec::CitingQuality { .. } => ScenarioKind::CitingQuality,
            ScenarioSpec::SelfCitation { .. } => ScenarioKind::SelfCitation,
            ScenarioSpec::CitationLoop { .. } => ScenarioKind::CitationLoop,
            ScenarioSpec::SingleRefChain { .. } => ScenarioKind::SingleRefChain,
        }
    }

    /// `(name, value)` for every size parameter.
    pub fn params(&self) -> Vec<(&'static str, usize)> {
        match *self {
            ScenarioSpec::PaperQuality { citers } => alloc::vec![("citers", citers)],
            ScenarioSpec::CoauthorCount {
                citations,
                coauthors,
            } => alloc::vec![("citations", citations), ("coauthors", coauthors)],
            ScenarioSpec::CitingQuality { high, low } => alloc::vec![("high", high), ("low", low)],
            ScenarioSpec::SelfCitation {
                papers,
                outside_refs,
                external_citations,
                citer_citations,
            } => alloc::vec![
                ("papers", papers),
                ("outside_refs", outside_refs),
                ("external_citations", external_citations),
                ("citer_citations", citer_citations),
            ],
            ScenarioSpec::CitationLoop {
                citers_each,
                other_pubs,
                rivals,
                rival_citers,
            } => alloc::vec![
                ("citers_each", citers_each),
                ("other_pubs", other_pubs),
                ("rivals", rivals),
                ("rival_citers", rival_citers),
            ],
            ScenarioSpec::SingleRefChain { length, ladder } => {
                alloc::vec![("length", length), ("ladder", ladder)]
            }
        }
    }

    /// Overrides one size parameter by name.
    pub fn set_param(&mut self, name: &str, value: usize) -> Result<()> {
        let slot = match (self, name) {
            (ScenarioSpec::PaperQuality { citers }, "citers") => citers,
            (ScenarioSpec::CoauthorCount { citations, .. }, "citations") => citations,
            (ScenarioSpec::CoauthorCount { coauthors, .. }, "coauthors") => coauthors,
            (ScenarioSpec::CitingQuality { high, .. }, "high") => high,
            (ScenarioSpec::CitingQuality { low, .. }, "low") => low,
            (ScenarioSpec::SelfCitation { papers, .. }, "papers") => papers,
            (ScenarioSpec::SelfCitation { outside_refs, .. }, "outside_refs") => outside_refs,
            (ScenarioSpec::SelfCitation { external_citations, .. }, "external_citations") => {
                external_citations
            }
            (ScenarioSpec::SelfCitation { citer_citations, .. }, "citer_citations") => {
                citer_citations
            }
            (ScenarioSpec::CitationLoop { citers_each, .. }, "citers_each") => citers_each,
            (ScenarioSpec::CitationLoop { other_pubs, .. }, "other_pubs") => other_pubs,
            (ScenarioSpec::CitationLoop { rivals, .. }, "rivals") => rivals,
            (ScenarioSpec::CitationLoop { rival_citers, .. }, "rival_citers") => rival_citers,
            (ScenarioSpec::SingleRefChain { length, .. }, "length") => length,
            (ScenarioSpec::SingleRefChain { ladder, .. }, "ladder") => ladder,
            (spec, _) => {
                return Err(Error::InvalidParams(format!(
                    "scenario {} has no parameter {name:?}",
                    spec.kind()
                )))
            }
        };
        *slot = value;
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidParams(format!("{}: {what}", self.kind())));
        match *self {
            ScenarioSpec::PaperQuality { citers } if citers == 0 => bad("citers must be >= 1"),
            ScenarioSpec::CoauthorCount {
                citations,
                coauthors,
            } if citations == 0 || coauthors < 2 => bad("need citations >= 1 and coauthors >= 2"),
            ScenarioSpec::CitingQuality { high, low } if high <= low => bad("need high > low"),
            ScenarioSpec::SelfCitation {
                papers,
                external_citations,
                ..
            } if papers < 2 || external_citations == 0 => {
                bad("need papers >= 2 and external_citations >= 1")
            }
            ScenarioSpec::CitationLoop { citers_each, .. } if citers_each == 0 => {
                bad("citers_each must be >= 1")
            }
            ScenarioSpec::SingleRefChain { length, .. } if length < 2 => bad("length must be >= 2"),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Measure {
    Pub,
    Cit,
    HIndex,
    PrA,
    PrP,
    /// Random-walk score with the evaluator's parameters.
    Pira,
    /// Random-walk score with the minimum citation count overridden.
    PiraDiluted(usize),
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Pub => f.write_str("pub"),
            Measure::Cit => f.write_str("cit"),
            Measure::HIndex => f.write_str("hindex"),
            Measure::PrA => f.write_str("pra"),
            Measure::PrP => f.write_str("prp"),
            Measure::Pira => f.write_str("pira"),
            Measure::PiraDiluted(k) => write!(f, "pira@k={k}"),
        }
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "pub" => Measure::Pub,
            "cit" => Measure::Cit,
            "hindex" => Measure::HIndex,
            "pra" => Measure::PrA,
            "prp" => Measure::PrP,
            "pira" => Measure::Pira,
            _ => {
                let k = s
                    .strip_prefix("pira@k=")
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| Error::InvalidParams(format!("unknown measure {s:?}")))?;
                Measure::PiraDiluted(k)
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Greater,
    Less,
    Equal,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Greater => ">",
            Relation::Less => "<",
            Relation::Equal => "=",
        }
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            ">" => Ok(Relation::Greater),
            "<" => Ok(Relation::Less),
            "=" => Ok(Relation::Equal),
            _ => Err(Error::InvalidParams(format!("unknown relation {s:?}"))),
        }
    }
}

/// Relative tolerance under which two scores count as equal.
pub const EQUAL_TOLERANCE: f64 = 1e-9;

/// Compares two scores with [`EQUAL_TOLERANCE`].
pub fn relation_of(a: f64, b: f64) -> Relation {
    let scale = a.abs().max(b.abs());
    if (a - b).abs() <= EQUAL_TOLERANCE * scale {
        Relation::Equal
    } else if a > b {
        Relation::Greater
    } else {
        Relation::Less
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// `measure(a) relation measure(b)`.
    Compare {
        measure: Measure,
        a: NodeId,
        relation: Relation,
        b: NodeId,
    },
    /// Rank of `node` among all nodes of its kind is at most `rank`.
    RankAtMost {
        measure: Measure,
        node: NodeId,
        rank: usize,
    },
    /// Rank of `node` among all nodes of its kind is strictly worse under
    /// `worse` than under `better`.
    RankWorse {
        node: NodeId,
        worse: Measure,
        better: Measure,
    },
}

/// A generated graph and what it is expected to show.
#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub spec: ScenarioSpec,
    pub graph: CitationGraph,
    pub expectations: Vec<Expectation>,
    /// For the two-author scenarios: `(should rank higher, should rank lower)`.
    pub pair: Option<(NodeId, NodeId)>,
}

/// Incrementally assembled graph with string-keyed nodes.
#[derive(Default)]
struct Builder {
    authors: Vec<Author>,
    papers: Vec<Paper>,
    wrote: Vec<(usize, usize)>,
    cites: Vec<(usize, usize)>,
}

impl Builder {
    fn author(&mut self, key: String, in_dblp: bool) -> usize {
        let name = format!("Author {key}");
        self.authors.push(Author::new(key, name, in_dblp));
        self.authors.len() - 1
    }

    fn paper(&mut self, key: String, in_dblp: bool) -> usize {
        let title = format!("Paper {key}");
        self.papers.push(Paper::new(key, title, in_dblp));
        self.papers.len() - 1
    }

    /// A solo paper by `author`.
    fn solo(&mut self, author: usize, key: String, in_dblp: bool) -> usize {
        let p = self.paper(key, in_dblp);
        self.wrote.push((author, p));
        p
    }

    /// An external paper (with its own external author) citing `targets`.
    fn external_citer(&mut self, key: &str, targets: &[usize]) -> usize {
        let a = self.author(format!("{key}-au"), false);
        let p = self.solo(a, String::from(key), false);
        for &t in targets {
            self.cites.push((p, t));
        }
        p
    }

    fn pad(&mut self, count: usize) {
        for i in 0..count {
            let a = self.author(format!("pad-a{i}"), true);
            self.solo(a, format!("pad-p{i}"), true);
        }
    }

    fn finish(self) -> Result<CitationGraph> {
        Ok(build_graph(self.authors, self.papers, &self.wrote, &self.cites)?.0)
    }
}

fn compare(measure: Measure, a: NodeId, relation: Relation, b: NodeId) -> Expectation {
    Expectation::Compare {
        measure,
        a,
        relation,
        b,
    }
}

/// Builds the scenario graph plus `padding` isolated author-paper pairs.
pub fn generate(spec: &ScenarioSpec, padding: usize) -> Result<Scenario> {
    use Measure::*;
    use Relation::*;

    spec.validate()?;
    let mut g = Builder::default();
    let mut expectations = Vec::new();
    let mut pair = None;
    let author = NodeId::author;
    let paper = NodeId::paper;

    match *spec {
        ScenarioSpec::PaperQuality { citers } => {
            let a1 = g.author("A1".into(), true);
            let a2 = g.author("A2".into(), true);
            let p1 = g.solo(a1, "A1-p1".into(), true);
            g.solo(a2, "A2-p1".into(), true);
            g.solo(a2, "A2-p2".into(), true);
            for i in 0..citers {
                g.external_citer(&format!("C{}", i + 1), &[p1]);
            }
            let (x, y) = (author(a1), author(a2));
            expectations.extend([
                compare(Pub, x, Less, y),
                compare(Cit, x, Greater, y),
                compare(PrA, x, Greater, y),
                compare(Pira, x, Greater, y),
            ]);
            pair = Some((x, y));
        }
        ScenarioSpec::CoauthorCount {
            citations,
            coauthors,
        } => {
            let a1 = g.author("A1".into(), true);
            let a4 = g.author("A4".into(), true);
            let p1 = g.solo(a1, "A1-p1".into(), true);
            let p4 = g.solo(a4, "A4-p1".into(), true);
            for i in 1..coauthors {
                let co = g.author(format!("A4-co{i}"), true);
                g.wrote.push((co, p4));
            }
            for i in 0..citations {
                g.external_citer(&format!("C{}", i + 1), &[p1]);
                g.external_citer(&format!("D{}", i + 1), &[p4]);
            }
            let (x, y) = (author(a1), author(a4));
            expectations.extend([
                compare(Pub, x, Equal, y),
                compare(Cit, x, Equal, y),
                compare(PrA, x, Greater, y),
                compare(Pira, x, Greater, y),
            ]);
            pair = Some((x, y));
        }
        ScenarioSpec::CitingQuality { high, low } => {
            let a1 = g.author("A1".into(), true);
            let a2 = g.author("A2".into(), true);
            let p1 = g.solo(a1, "A1-p1".into(), true);
            let p2 = g.solo(a2, "A2-p1".into(), true);
            let c = g.author("C".into(), false);
            let c1 = g.solo(c, "C-p1".into(), false);
            let c2 = g.solo(c, "C-p2".into(), false);
            g.cites.push((c1, p1));
            g.cites.push((c2, p2));
            for i in 0..high {
                g.external_citer(&format!("D{}", i + 1), &[c1]);
            }
            for i in 0..low {
                g.external_citer(&format!("E{}", i + 1), &[c2]);
            }
            let (x, y) = (author(a1), author(a2));
            expectations.extend([
                compare(Pub, x, Equal, y),
                compare(Cit, x, Equal, y),
                compare(PrA, x, Equal, y),
                compare(Pira, x, Greater, y),
            ]);
            pair = Some((x, y));
        }
        ScenarioSpec::SelfCitation {
            papers,
            outside_refs,
            external_citations,
            citer_citations,
        } => {
            let a1 = g.author("A1".into(), true);
            let a2 = g.author("A2".into(), true);
            let r = g.author("R".into(), false);
            let outside: Vec<usize> = (0..outside_refs)
                .map(|i| g.solo(r, format!("R-p{}", i + 1), false))
                .collect();
            let mut prev = None;
            for i in 0..papers {
                let p = g.solo(a1, format!("A1-p{}", i + 1), true);
                if let Some(q) = prev {
                    g.cites.push((p, q));
                }
                for &o in &outside {
                    g.cites.push((p, o));
                }
                prev = Some(p);
            }
            let t = g.solo(a2, "A2-p1".into(), true);
            for i in 0..external_citations {
                let x = g.external_citer(&format!("X{}", i + 1), &[t]);
                for j in 0..citer_citations {
                    g.external_citer(&format!("X{}-c{}", i + 1, j + 1), &[x]);
                }
            }
            let (x, y) = (author(a1), author(a2));
            expectations.extend([
                compare(Pub, x, Greater, y),
                compare(Cit, x, Greater, y),
                compare(PrA, x, Less, y),
                compare(Pira, x, Less, y),
            ]);
            // A2 gets the legitimate citations.
            pair = Some((y, x));
        }
        ScenarioSpec::CitationLoop {
            citers_each,
            other_pubs,
            rivals,
            rival_citers,
        } => {
            let ax = g.author("AX".into(), true);
            let ay = g.author("AY".into(), true);
            let px = g.solo(ax, "X".into(), true);
            let py = g.solo(ay, "Y".into(), true);
            g.cites.push((px, py));
            g.cites.push((py, px));
            for i in 0..citers_each {
                g.external_citer(&format!("CX{}", i + 1), &[px]);
                g.external_citer(&format!("CY{}", i + 1), &[py]);
            }
            for i in 0..other_pubs {
                g.solo(ax, format!("AX-p{}", i + 1), true);
                g.solo(ay, format!("AY-p{}", i + 1), true);
            }
            for k in 0..rivals {
                let ra = g.author(format!("Z{}-au", k + 1), true);
                let z = g.solo(ra, format!("Z{}", k + 1), true);
                for i in 0..rival_citers {
                    g.external_citer(&format!("Z{}-c{}", k + 1, i + 1), &[z]);
                }
            }
            for node in [paper(px), paper(py)] {
                expectations.push(Expectation::RankAtMost {
                    measure: PrP,
                    node,
                    rank: 2,
                });
                expectations.push(Expectation::RankWorse {
                    node,
                    worse: Pira,
                    better: PrP,
                });
            }
        }
        ScenarioSpec::SingleRefChain { length, ladder } => {
            let b = g.author("B".into(), true);
            let mut prev = None;
            for i in 0..length {
                let p = g.solo(b, format!("B-p{}", i + 1), true);
                if let Some(q) = prev {
                    g.cites.push((p, q));
                }
                prev = Some(p);
            }
            for m in 1..=ladder {
                let l = g.author(format!("L{m}"), true);
                for i in 0..m {
                    g.solo(l, format!("L{m}-p{}", i + 1), true);
                }
            }
            expectations.push(Expectation::RankWorse {
                node: author(b),
                worse: PiraDiluted(10),
                better: Pira,
            });
        }
    }

    g.pad(padding);
    Ok(Scenario {
        spec: spec.clone(),
        graph: g.finish()?,
        expectations,
        pair,
    })
}

/// How random-walk measures are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PiraEngine {
    /// Exact stationary scores.
    Oracle,
    /// Monte Carlo with the evaluator's step budget and seed.
    MonteCarlo,
}

/// Computes measures on one graph, caching per measure.
pub struct Evaluator<'g> {
    graph: &'g CitationGraph,
    params: WalkParams,
    engine: PiraEngine,
    cache: Vec<(Measure, Vec<f64>)>,
}

impl<'g> Evaluator<'g> {
    pub fn new(graph: &'g CitationGraph, params: WalkParams, engine: PiraEngine) -> Self {
        Evaluator {
            graph,
            params,
            engine,
            cache: Vec::new(),
        }
    }

    fn walk_scores(&self, params: &WalkParams) -> Result<ScoreTable> {
        match self.engine {
            PiraEngine::Oracle => oracle::expected_scores(self.graph, params),
            PiraEngine::MonteCarlo => pira_rank(self.graph, params),
        }
    }

    /// Scores of every node in global order; author-only measures give 0
    /// for papers.
    fn compute(&self, measure: Measure) -> Result<Vec<f64>> {
        let g = self.graph;
        let with_papers = |authors: Vec<f64>, papers: Vec<f64>| {
            let mut v = authors;
            v.extend(papers);
            v
        };
        let counts = |c: Vec<usize>| {
            with_papers(
                c.into_iter().map(|x| x as f64).collect(),
                alloc::vec![0.0; g.paper_count()],
            )
        };
        Ok(match measure {
            Measure::Pub => counts(baselines::pub_count(g)),
            Measure::Cit => with_papers(
                baselines::cit_count(g).into_iter().map(|x| x as f64).collect(),
                (0..g.paper_count()).map(|p| g.cited_by(p).len() as f64).collect(),
            ),
            Measure::HIndex => counts(baselines::h_index(g)),
            Measure::PrA => with_papers(baselines::pr_a(g)?, alloc::vec![0.0; g.paper_count()]),
            Measure::PrP => {
                let papers = baselines::paper_pagerank(g, baselines::DEFAULT_DAMPING)?;
                with_papers(baselines::authors_from_papers(g, &papers), papers)
            }
            Measure::Pira => self.walk_scores(&self.params)?.normalized().to_vec(),
            Measure::PiraDiluted(k) => {
                let params = WalkParams {
                    min_citation_count: k,
                    ..self.params.clone()
                };
                self.walk_scores(&params)?.normalized().to_vec()
            }
        })
    }

    pub fn scores(&mut self, measure: Measure) -> Result<&[f64]> {
        let pos = match self.cache.iter().position(|(m, _)| *m == measure) {
            Some(i) => i,
            None => {
                let v = self.compute(measure)?;
                self.cache.push((measure, v));
                self.cache.len() - 1
            }
        };
        Ok(&self.cache[pos].1)
    }

    pub fn score(&mut self, measure: Measure, node: NodeId) -> Result<f64> {
        let g = self.graph.global_index(node);
        Ok(self.scores(measure)?[g])
    }

    /// Rank of `node` among all nodes of its kind.
    pub fn rank(&mut self, measure: Measure, node: NodeId) -> Result<usize> {
        let graph = self.graph;
        let scores = self.scores(measure)?;
        let filter = NodeFilter::of_kind(node.kind, false);
        let ranking = rank_by(graph, &filter, |id| scores[graph.global_index(id)])?;
        ranking
            .rank_of(&node)
            .ok_or(Error::UnknownNode(node))
    }

    pub fn check(&mut self, expectation: &Expectation) -> Result<bool> {
        Ok(match *expectation {
            Expectation::Compare {
                measure,
                a,
                relation,
                b,
            } => {
                let (x, y) = (self.score(measure, a)?, self.score(measure, b)?);
                relation_of(x, y) == relation
            }
            Expectation::RankAtMost {
                measure,
                node,
                rank,
            } => self.rank(measure, node)? <= rank,
            Expectation::RankWorse {
                node,
                worse,
                better,
            } => self.rank(worse, node)? > self.rank(better, node)?,
        })
    }
}

impl Scenario {
    /// Looks a generated node up by key.
    pub fn node(&self, key: &str) -> Option<NodeId> {
        self.graph.find(key)
    }

    pub fn authors_only(&self) -> bool {
        self.expectations.iter().all(|e| match e {
            Expectation::Compare { a, b, .. } => a.kind == NodeKind::Author && b.kind == NodeKind::Author,
            Expectation::RankAtMost { node, .. } | Expectation::RankWorse { node, .. } => {
                node.kind == NodeKind::Author
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_round_trip_through_names() {
        for k in ScenarioKind::ALL {
            assert_eq!(k.name().parse::<ScenarioKind>().unwrap(), k);
        }
        assert!("nope".parse::<ScenarioKind>().is_err());
    }

    #[test]
    fn measures_parse() {
        for m in [Measure::Pub, Measure::PrA, Measure::PiraDiluted(10)] {
            assert_eq!(alloc::string::ToString::to_string(&m).parse::<Measure>().unwrap(), m);
        }
    }

    #[test]
    fn generation_is_deterministic() {
        for k in ScenarioKind::ALL {
            let spec = ScenarioSpec::default_for(k);
            assert_eq!(generate(&spec, 5).unwrap(), generate(&spec, 5).unwrap());
        }
    }

    #[test]
    fn invalid_sizes_rejected() {
        let spec = ScenarioSpec::CitingQuality { high: 1, low: 1 };
        assert!(generate(&spec, 0).is_err());
        let mut spec = ScenarioSpec::default_for(ScenarioKind::SingleRefChain);
        assert!(spec.set_param("citers", 3).is_err());
        spec.set_param("length", 1).unwrap();
        assert!(generate(&spec, 0).is_err());
    }

    #[test]
    fn fixture_counts() {
        let s = generate(&ScenarioSpec::default_for(ScenarioKind::CitingQuality), 0).unwrap();
        let g = &s.graph;
        let c1 = g.find("C-p1").unwrap().index;
        let c2 = g.find("C-p2").unwrap().index;
        assert_eq!(g.cited_by(c1).len(), 16);
        assert_eq!(g.cited_by(c2).len(), 1);

        let s = generate(&ScenarioSpec::default_for(ScenarioKind::SelfCitation), 0).unwrap();
        let cit = baselines::cit_count(&s.graph);
        let (a1, a2) = (s.node("A1").unwrap().index, s.node("A2").unwrap().index);
        assert_eq!((cit[a1], cit[a2]), (9, 3));

        let s = generate(&ScenarioSpec::default_for(ScenarioKind::CitationLoop), 0).unwrap();
        let g = &s.graph;
        let (x, y) = (g.find("X").unwrap().index, g.find("Y").unwrap().index);
        // Citers other than the loop partner.
        let external = g.cited_by(x).len() + g.cited_by(y).len() - 2;
        assert_eq!(external, 14);
        assert_eq!(g.refs(x), &[y]);
    }

    #[test]
    fn every_expectation_holds_under_the_oracle() {
        for k in ScenarioKind::ALL {
            let s = generate(&ScenarioSpec::default_for(k), 20).unwrap();
            let mut ev = Evaluator::new(&s.graph, WalkParams::default(), PiraEngine::Oracle);
            for e in &s.expectations {
                assert!(ev.check(e).unwrap(), "{k}: {e:?}");
            }
        }
    }
}
