//! Exact arrival distribution of the surfer on small graphs.
//!
//! The walk (in [`WalkMode::Interpreted`]) is a Markov chain over nodes: the
//! state is the node just arrived at. Each row holds the explicit
//! wrote/cite/isWrittenBy transitions plus two rank-one parts, the mass
//! sent to the restart distribution and the mass sent to a uniform paper
//! after a fake citation. Expected per-arrival scores are the stationary
//! inflow into each node weighted by the c-weight of the incoming class.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::CitationGraph;
use crate::scores::ScoreTable;
use crate::walk::{CounterWeights, EdgeClass, WalkMode, WalkParams};

pub const DEFAULT_NODE_LIMIT: usize = 10_000;
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 1_000_000;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Row {
    /// Probability of jumping to the restart distribution.
    pub restart: f64,
    /// Probability of jumping to a uniformly random paper (fake citation).
    pub fake: f64,
    /// Explicit transitions: target global index, edge class, probability.
    pub edges: Vec<(usize, EdgeClass, f64)>,
}

impl Row {
    pub fn sum(&self) -> f64 {
        self.restart + self.fake + self.edges.iter().map(|e| e.2).sum::<f64>()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransitionSystem {
    rows: Vec<Row>,
    init: Vec<f64>,
    author_count: usize,
}

fn restart_distribution(graph: &CitationGraph, params: &WalkParams) -> Vec<f64> {
    let (na, np) = (graph.author_count(), graph.paper_count());
    let q = params.author_restart_probability(graph);
    let mut init = vec![0.0; na + np];
    for v in &mut init[..na] {
        *v = q / na as f64;
    }
    for v in &mut init[na..] {
        *v = (1.0 - q) / np as f64;
    }
    init
}

/// Builds the chain with the default node limit.
pub fn build_transition_system(graph: &CitationGraph, params: &WalkParams) -> Result<TransitionSystem> {
    build_transition_system_with_limit(graph, params, DEFAULT_NODE_LIMIT)
}

pub fn build_transition_system_with_limit(
    graph: &CitationGraph,
    params: &WalkParams,
    limit: usize,
) -> Result<TransitionSystem> {
    params.validate()?;
    if params.mode == WalkMode::Literal {
        return Err(Error::Unsupported(
            "literal mode double-counts papers and is not a chain over nodes",
        ));
    }
    if graph.is_empty() {
        return Err(Error::Empty("graph has no nodes"));
    }
    if graph.node_count() > limit {
        return Err(Error::TooLarge {
            nodes: graph.node_count(),
            limit,
        });
    }

    let df = params.damping;
    let na = graph.author_count();
    let mut rows = Vec::with_capacity(graph.node_count());

    for a in 0..na {
        let mut row = Row {
            restart: df,
            ..Row::default()
        };
        let papers = graph.papers_of(a);
        if papers.is_empty() {
            row.restart += 1.0 - df;
        } else {
            let weights: Vec<f64> = papers
                .iter()
                .map(|&p| 1.0 / graph.authors_of(p).len() as f64)
                .collect();
            let total: f64 = weights.iter().sum();
            for (&p, w) in papers.iter().zip(weights) {
                row.edges.push((na + p, EdgeClass::Wrote, (1.0 - df) * w / total));
            }
        }
        rows.push(row);
    }

    let cite_mass = (1.0 - df) * params.theta;
    let author_mass = (1.0 - df) * (1.0 - params.theta);
    for p in 0..graph.paper_count() {
        let mut row = Row {
            restart: df,
            ..Row::default()
        };
        let refs = graph.refs(p);
        if refs.is_empty() {
            row.restart += cite_mass;
        } else {
            let slots = refs.len().max(params.min_citation_count);
            for &r in refs {
                row.edges.push((na + r, EdgeClass::Cite, cite_mass / slots as f64));
            }
            row.fake = cite_mass * (slots - refs.len()) as f64 / slots as f64;
        }
        let authors = graph.authors_of(p);
        if authors.is_empty() {
            row.restart += author_mass;
        } else {
            for &a in authors {
                row.edges
                    .push((a, EdgeClass::IsWrittenBy, author_mass / authors.len() as f64));
            }
        }
        rows.push(row);
    }

    Ok(TransitionSystem {
        rows,
        init: restart_distribution(graph, params),
        author_count: na,
    })
}

impl TransitionSystem {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    /// Restart (init) distribution over global node indices.
    pub fn restart_distribution(&self) -> &[f64] {
        &self.init
    }

    fn paper_count(&self) -> usize {
        self.rows.len() - self.author_count
    }

    /// Probability mass entering each node through each edge class, when the
    /// chain currently sits in distribution `pi`.
    pub fn inflow(&self, pi: &[f64]) -> Vec<[f64; 4]> {
        let n = self.rows.len();
        let mut out = vec![[0.0; 4]; n];
        let mut to_init = 0.0;
        let mut to_papers = 0.0;
        for (row, &mass) in self.rows.iter().zip(pi) {
            to_init += mass * row.restart;
            to_papers += mass * row.fake;
            for &(v, class, p) in &row.edges {
                out[v][class as usize] += mass * p;
            }
        }
        let np = self.paper_count();
        for (v, slot) in out.iter_mut().enumerate() {
            let mut r = to_init * self.init[v];
            if v >= self.author_count {
                r += to_papers / np as f64;
            }
            slot[EdgeClass::Restart as usize] += r;
        }
        out
    }

    /// One application of the transition matrix: `pi * M`.
    pub fn step(&self, pi: &[f64]) -> Vec<f64> {
        self.inflow(pi).iter().map(|c| c.iter().sum()).collect()
    }

    /// Dense row-stochastic matrix, `m[u][v]` = P(u -> v). Small graphs only.
    pub fn dense(&self) -> Vec<Vec<f64>> {
        let n = self.rows.len();
        let np = self.paper_count();
        self.rows
            .iter()
            .map(|row| {
                let mut line: Vec<f64> = self.init.iter().map(|i| row.restart * i).collect();
                for v in &mut line[self.author_count..] {
                    *v += row.fake / np as f64;
                }
                for &(v, _, p) in &row.edges {
                    line[v] += p;
                }
                debug_assert_eq!(line.len(), n);
                line
            })
            .collect()
    }
}

fn l1(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

/// Power iteration from the uniform vector until the L1 change drops
/// below `tol`.
pub fn stationary_distribution(ts: &TransitionSystem, tol: f64) -> Result<Vec<f64>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParams("tolerance must be positive".into()));
    }
    let n = ts.len();
    if n == 0 {
        return Err(Error::Empty("transition system has no states"));
    }
    let mut pi = vec![1.0 / n as f64; n];
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        let mut next = ts.step(&pi);
        let total: f64 = next.iter().sum();
        for v in &mut next {
            *v /= total;
        }
        residual = l1(&next, &pi);
        pi = next;
        if residual < tol {
            return Ok(pi);
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_ITERATIONS,
        residual,
    })
}

/// Expected c-weighted score per arrival, given a stationary vector.
pub fn weighted_inflow(ts: &TransitionSystem, pi: &[f64], weights: &CounterWeights) -> Vec<f64> {
    ts.inflow(pi)
        .iter()
        .map(|c| {
            EdgeClass::ALL
                .iter()
                .map(|&class| c[class as usize] * weights.get(class))
                .sum()
        })
        .collect()
}

/// Limit of the normalized Monte Carlo scores as the step budget grows.
pub fn expected_scores(graph: &CitationGraph, params: &WalkParams) -> Result<ScoreTable> {
    let ts = build_transition_system(graph, params)?;
    let pi = stationary_distribution(&ts, DEFAULT_TOLERANCE)?;
    ScoreTable::from_raw(weighted_inflow(&ts, &pi, &params.weights), 0)
}
