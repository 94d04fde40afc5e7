//! Monte Carlo random surfer over the bipartite graph.
//!
//! The surfer moves author -> paper (wrote), paper -> paper (cite) and
//! paper -> author (isWrittenBy), with damping restarts. Every arrival adds
//! the c-weight of the edge class it came through to the destination's
//! counter and consumes one unit of the step budget.
//!
//! Arrivals are tallied per edge class as integers and only turned into
//! weighted scores at the end, so merging walkers is exact and independent
//! of merge order.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{CitationGraph, NodeId};
use crate::scores::ScoreTable;

/// How a node was reached; selects the c-weight added on arrival.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeClass {
    Restart = 0,
    Wrote = 1,
    Cite = 2,
    IsWrittenBy = 3,
}

impl EdgeClass {
    pub const ALL: [EdgeClass; 4] = [
        EdgeClass::Restart,
        EdgeClass::Wrote,
        EdgeClass::Cite,
        EdgeClass::IsWrittenBy,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CounterWeights {
    pub restart: f64,
    pub cite: f64,
    pub wrote: f64,
    pub is_written_by: f64,
}

impl Default for CounterWeights {
    /// A paper gets nothing from its own author and a restart is not an
    /// endorsement.
    fn default() -> Self {
        CounterWeights {
            restart: 0.0,
            cite: 1.0,
            wrote: 0.0,
            is_written_by: 1.0,
        }
    }
}

impl CounterWeights {
    pub const ONES: CounterWeights = CounterWeights {
        restart: 1.0,
        cite: 1.0,
        wrote: 1.0,
        is_written_by: 1.0,
    };

    pub fn get(&self, class: EdgeClass) -> f64 {
        match class {
            EdgeClass::Restart => self.restart,
            EdgeClass::Wrote => self.wrote,
            EdgeClass::Cite => self.cite,
            EdgeClass::IsWrittenBy => self.is_written_by,
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        CounterWeights {
            restart: self.restart * factor,
            cite: self.cite * factor,
            wrote: self.wrote * factor,
            is_written_by: self.is_written_by * factor,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WalkMode {
    /// Theta chooses between a citation and an isWrittenBy jump on arrival
    /// at a paper.
    #[default]
    Interpreted,
    /// The original step-by-step procedure: the cited paper is drawn before
    /// the theta test, the isWrittenBy branch re-counts the current paper
    /// with the cite weight, and a paper without references always restarts.
    Literal,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WalkParams {
    /// Probability of reinitialization on each arrival.
    pub damping: f64,
    /// Probability of following a citation from a paper.
    pub theta: f64,
    pub weights: CounterWeights,
    /// Virtual floor on the number of references of a paper.
    pub min_citation_count: usize,
    pub mode: WalkMode,
    /// Probability that a restart picks an author. `None` restarts uniformly
    /// over all nodes.
    pub restart_author_prob: Option<f64>,
    /// Number of arrivals to simulate, summed over walkers.
    pub steps: u64,
    pub seed: u64,
    pub walkers: usize,
}

impl Default for WalkParams {
    fn default() -> Self {
        WalkParams {
            damping: 0.15,
            theta: 0.7,
            weights: CounterWeights::default(),
            min_citation_count: 0,
            mode: WalkMode::Interpreted,
            restart_author_prob: None,
            steps: 1_000_000,
            seed: 42,
            walkers: 1,
        }
    }
}

fn check_probability(name: &str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("{name} must be in [0, 1], got {value}")))
    }
}

impl WalkParams {
    pub fn validate(&self) -> Result<()> {
        check_probability("damping", self.damping)?;
        check_probability("theta", self.theta)?;
        if let Some(q) = self.restart_author_prob {
            check_probability("restart author probability", q)?;
        }
        let w = &self.weights;
        let all = [w.restart, w.cite, w.wrote, w.is_written_by];
        if all.iter().any(|v| !(*v >= 0.0) || v.is_infinite()) {
            return Err(Error::InvalidParams("c-weights must be finite and >= 0".into()));
        }
        if all.iter().all(|v| *v == 0.0) {
            return Err(Error::InvalidParams("at least one c-weight must be positive".into()));
        }
        if self.steps == 0 {
            return Err(Error::InvalidParams("step budget must be at least 1".into()));
        }
        if self.walkers == 0 {
            return Err(Error::InvalidParams("walkers must be at least 1".into()));
        }
        Ok(())
    }

    /// Probability that a restart enters at an author on this graph.
    pub fn author_restart_probability(&self, graph: &CitationGraph) -> f64 {
        let (na, np) = (graph.author_count(), graph.paper_count());
        if na == 0 {
            return 0.0;
        }
        if np == 0 {
            return 1.0;
        }
        self.restart_author_prob
            .unwrap_or(na as f64 / (na + np) as f64)
    }

    /// Share of the step budget walked by walker `index`.
    pub fn walker_budget(&self, index: usize) -> u64 {
        let n = self.walkers as u64;
        let i = index as u64;
        self.steps / n + u64::from(i < self.steps % n)
    }
}

/// Outcome of a citation jump attempt.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CitationChoice {
    Real(NodeId),
    /// A virtual reference slot beyond the real ones was drawn.
    Fake,
    NoRefs,
}

/// Picks one of the author's papers with probability proportional to its
/// p-weight. `None` when the author has no papers.
pub fn choose_paper_of_author<R: Rng + ?Sized>(
    rng: &mut R,
    graph: &CitationGraph,
    author: NodeId,
) -> Option<NodeId> {
    let papers = graph.papers_of(author.index);
    let cdf = p_weight_cdf(graph, papers);
    pick_cumulative(&cdf, rng.gen::<f64>()).map(|i| NodeId::paper(papers[i]))
}

/// Draws among `max(|refs|, k)` equally likely slots; slots past the real
/// references are fake.
pub fn choose_citation<R: Rng + ?Sized>(
    rng: &mut R,
    graph: &CitationGraph,
    paper: NodeId,
    k: usize,
) -> CitationChoice {
    let refs = graph.refs(paper.index);
    if refs.is_empty() {
        return CitationChoice::NoRefs;
    }
    let slot = rng.gen_range(0..refs.len().max(k));
    match refs.get(slot) {
        Some(&p) => CitationChoice::Real(NodeId::paper(p)),
        None => CitationChoice::Fake,
    }
}

fn p_weight_cdf(graph: &CitationGraph, papers: &[usize]) -> Vec<f64> {
    let mut acc = 0.0;
    papers
        .iter()
        .map(|&p| {
            acc += 1.0 / graph.authors_of(p).len() as f64;
            acc
        })
        .collect()
}

/// Index of the first cumulative weight exceeding `u * total`.
fn pick_cumulative(cdf: &[f64], u: f64) -> Option<usize> {
    let total = *cdf.last()?;
    let target = u * total;
    let i = cdf.partition_point(|&c| c <= target);
    Some(i.min(cdf.len() - 1))
}

/// Per-node arrival tallies, one column per [`EdgeClass`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrivalCounts {
    counts: Vec<[u64; 4]>,
}

impl ArrivalCounts {
    pub fn new(node_count: usize) -> Self {
        ArrivalCounts {
            counts: vec![[0; 4]; node_count],
        }
    }

    pub fn record(&mut self, global: usize, class: EdgeClass) {
        self.counts[global][class as usize] += 1;
    }

    pub fn get(&self, global: usize, class: EdgeClass) -> u64 {
        self.counts[global][class as usize]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    pub fn merge(&mut self, other: &ArrivalCounts) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
    }

    /// Weighted counters: for each node, the sum over classes of arrivals
    /// times the class c-weight.
    pub fn weighted(&self, weights: &CounterWeights) -> Vec<f64> {
        self.counts
            .iter()
            .map(|row| {
                EdgeClass::ALL
                    .iter()
                    .map(|&c| row[c as usize] as f64 * weights.get(c))
                    .sum()
            })
            .collect()
    }

    pub fn into_scores(self, weights: &CounterWeights) -> Result<ScoreTable> {
        let total = self.total();
        ScoreTable::from_raw(self.weighted(weights), total)
    }
}

/// Precomputed sampling tables shared by every walker on a graph.
pub struct Surfer<'g> {
    graph: &'g CitationGraph,
    params: &'g WalkParams,
    paper_cdf: Vec<Vec<f64>>,
    author_restart: f64,
}

#[derive(Clone, Copy)]
enum Next {
    Author(usize, EdgeClass),
    Paper(usize, EdgeClass),
    /// Second increment of the current paper (Literal mode isWrittenBy).
    Recount(usize),
}

impl<'g> Surfer<'g> {
    pub fn new(graph: &'g CitationGraph, params: &'g WalkParams) -> Result<Self> {
        params.validate()?;
        if graph.is_empty() {
            return Err(Error::Empty("graph has no nodes"));
        }
        let paper_cdf = (0..graph.author_count())
            .map(|a| p_weight_cdf(graph, graph.papers_of(a)))
            .collect();
        Ok(Surfer {
            graph,
            params,
            paper_cdf,
            author_restart: params.author_restart_probability(graph),
        })
    }

    /// RNG for walker `index`: one ChaCha stream per walker under the
    /// shared seed.
    pub fn walker_rng(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.params.seed);
        rng.set_stream(index as u64);
        rng
    }

    /// Runs walker `index` over its share of the step budget.
    pub fn run_walker(&self, index: usize) -> ArrivalCounts {
        let mut rng = self.walker_rng(index);
        self.walk(&mut rng, self.params.walker_budget(index))
    }

    /// Runs every walker in turn and merges their tallies.
    pub fn run(&self) -> ArrivalCounts {
        let mut total = ArrivalCounts::new(self.graph.node_count());
        for i in 0..self.params.walkers {
            total.merge(&self.run_walker(i));
        }
        total
    }

    pub fn walk<R: Rng + ?Sized>(&self, rng: &mut R, arrivals: u64) -> ArrivalCounts {
        let graph = self.graph;
        let na = graph.author_count();
        let mut counts = ArrivalCounts::new(graph.node_count());
        let mut next = self.init_all(rng);
        for _ in 0..arrivals {
            next = match next {
                Next::Author(a, class) => {
                    counts.record(a, class);
                    if self.damped(rng) {
                        self.init_all(rng)
                    } else {
                        self.wrote(rng, a)
                    }
                }
                Next::Paper(p, class) => {
                    counts.record(na + p, class);
                    if self.damped(rng) {
                        self.init_all(rng)
                    } else {
                        match self.params.mode {
                            WalkMode::Interpreted => self.leave_paper(rng, p),
                            WalkMode::Literal => self.leave_paper_literal(rng, p),
                        }
                    }
                }
                Next::Recount(p) => {
                    counts.record(na + p, EdgeClass::Cite);
                    if self.damped(rng) {
                        self.init_all(rng)
                    } else {
                        self.written_by(rng, p)
                    }
                }
            };
        }
        counts
    }

    fn damped<R: Rng + ?Sized>(&self, rng: &mut R) -> bool {
        rng.gen::<f64>() < self.params.damping
    }

    fn init_all<R: Rng + ?Sized>(&self, rng: &mut R) -> Next {
        if rng.gen::<f64>() < self.author_restart {
            Next::Author(rng.gen_range(0..self.graph.author_count()), EdgeClass::Restart)
        } else {
            self.random_paper(rng)
        }
    }

    fn random_paper<R: Rng + ?Sized>(&self, rng: &mut R) -> Next {
        Next::Paper(rng.gen_range(0..self.graph.paper_count()), EdgeClass::Restart)
    }

    fn wrote<R: Rng + ?Sized>(&self, rng: &mut R, author: usize) -> Next {
        match pick_cumulative(&self.paper_cdf[author], rng.gen::<f64>()) {
            Some(i) => Next::Paper(self.graph.papers_of(author)[i], EdgeClass::Wrote),
            None => self.init_all(rng),
        }
    }

    fn written_by<R: Rng + ?Sized>(&self, rng: &mut R, paper: usize) -> Next {
        let authors = self.graph.authors_of(paper);
        if authors.is_empty() {
            self.init_all(rng)
        } else {
            Next::Author(authors[rng.gen_range(0..authors.len())], EdgeClass::IsWrittenBy)
        }
    }

    fn cite<R: Rng + ?Sized>(&self, rng: &mut R, paper: usize) -> CitationChoice {
        choose_citation(
            rng,
            self.graph,
            NodeId::paper(paper),
            self.params.min_citation_count,
        )
    }

    fn leave_paper<R: Rng + ?Sized>(&self, rng: &mut R, paper: usize) -> Next {
        if rng.gen::<f64>() < self.params.theta {
            match self.cite(rng, paper) {
                CitationChoice::Real(q) => Next::Paper(q.index, EdgeClass::Cite),
                CitationChoice::Fake => self.random_paper(rng),
                CitationChoice::NoRefs => self.init_all(rng),
            }
        } else {
            self.written_by(rng, paper)
        }
    }

    /// The cited paper is chosen before the theta test is resolved. The
    /// theta uniform is still drawn first so that both modes consume the
    /// stream identically when the 1 - theta branch cannot fire.
    fn leave_paper_literal<R: Rng + ?Sized>(&self, rng: &mut R, paper: usize) -> Next {
        let follow = rng.gen::<f64>() < self.params.theta;
        match self.cite(rng, paper) {
            CitationChoice::Real(q) => {
                if follow {
                    Next::Paper(q.index, EdgeClass::Cite)
                } else {
                    Next::Recount(paper)
                }
            }
            CitationChoice::Fake => self.random_paper(rng),
            CitationChoice::NoRefs => self.init_all(rng),
        }
    }
}

/// Raw arrival tallies of a full run (all walkers, merged in index order).
pub fn pira_counts(graph: &CitationGraph, params: &WalkParams) -> Result<ArrivalCounts> {
    Ok(Surfer::new(graph, params)?.run())
}

/// Scores every node with the random surfer.
pub fn pira_rank(graph: &CitationGraph, params: &WalkParams) -> Result<ScoreTable> {
    pira_counts(graph, params)?.into_scores(&params.weights)
}
