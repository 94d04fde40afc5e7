//! Command-line interface.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use pira_core::analysis::{dataset_stats, export_dot, rank_by, rank_scatter, topx_difference, NodeFilter};
use pira_core::baselines;
use pira_core::merge::{suggest_merges, MergeRule};
use pira_core::oracle;
use pira_core::scenario::{generate, ScenarioKind, ScenarioSpec};
use pira_core::{CitationGraph, CounterWeights, NodeKind, ScoreTable, WalkMode, WalkParams};

use crate::error::{PiraError, Result};
use crate::{formats, io, parallel};

#[derive(Debug, Parser)]
#[command(name = "pira", version, about = "Rank authors and papers of a citation graph")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load a dataset directory and print the load report.
    Ingest(IngestArgs),
    /// Rank authors (or papers) with one method.
    Rank(RankArgs),
    /// Compare two ranking files.
    Compare(CompareArgs),
    /// Export the neighbourhood of a node as Graphviz DOT.
    Inspect(InspectArgs),
    /// Generate a scenario dataset with its expected orderings.
    Synth(SynthArgs),
    /// Degree statistics of a dataset.
    Stats(StatsArgs),
}

#[derive(Debug, Args)]
pub struct IngestArgs {
    pub dir: PathBuf,
    /// Re-export the dataset, sorted, into this directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the id -> node index map to this file.
    #[arg(long)]
    pub idmap: Option<PathBuf>,
    /// Write author-merge suggestions to this file.
    #[arg(long)]
    pub merges: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Pira,
    Prp,
    Pra,
    Cit,
    Pub,
    Hindex,
    /// Exact expected random-walk scores (small graphs only).
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Interpreted,
    Literal,
}

#[derive(Debug, Args)]
pub struct WalkArgs {
    /// Number of arrivals to simulate.
    #[arg(long, default_value_t = 1_000_000)]
    pub steps: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Probability of following a citation from a paper.
    #[arg(long, default_value_t = 0.7)]
    pub theta: f64,
    /// Restart probability on each arrival.
    #[arg(long, default_value_t = 0.15)]
    pub df: f64,
    /// Virtual minimum number of references per paper.
    #[arg(long, default_value_t = 0)]
    pub min_cite_count: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Interpreted)]
    pub mode: ModeArg,
    /// Counter weights, e.g. `cite=1,wrote=0,iswb=1,restart=0`. Omitted keys
    /// keep their defaults.
    #[arg(long)]
    pub weights: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub walkers: usize,
    /// Probability that a restart picks an author (default: uniform over
    /// all nodes).
    #[arg(long)]
    pub restart_author_prob: Option<f64>,
}

impl WalkArgs {
    pub fn to_params(&self) -> Result<WalkParams> {
        let params = WalkParams {
            damping: self.df,
            theta: self.theta,
            weights: match &self.weights {
                Some(spec) => parse_weights(spec)?,
                None => CounterWeights::default(),
            },
            min_citation_count: self.min_cite_count,
            mode: match self.mode {
                ModeArg::Interpreted => WalkMode::Interpreted,
                ModeArg::Literal => WalkMode::Literal,
            },
            restart_author_prob: self.restart_author_prob,
            steps: self.steps,
            seed: self.seed,
            walkers: self.walkers,
        };
        params.validate()?;
        Ok(params)
    }
}

pub fn parse_weights(spec: &str) -> Result<CounterWeights> {
    let mut w = CounterWeights::default();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| PiraError::Usage(format!("weight {item:?} is not key=value")))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| PiraError::Usage(format!("weight {item:?} has a bad number")))?;
        match key.trim() {
            "cite" => w.cite = value,
            "wrote" => w.wrote = value,
            "iswb" | "is_written_by" => w.is_written_by = value,
            "restart" => w.restart = value,
            other => return Err(PiraError::Usage(format!("unknown weight {other:?}"))),
        }
    }
    Ok(w)
}

#[derive(Debug, Args)]
pub struct RankArgs {
    pub dir: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Pira)]
    pub method: Method,
    #[command(flatten)]
    pub walk: WalkArgs,
    /// Rank non-DBLP nodes too.
    #[arg(long)]
    pub all_nodes: bool,
    /// Rank papers instead of authors.
    #[arg(long)]
    pub papers: bool,
    /// Also write the score table (pira and oracle only).
    #[arg(long)]
    pub scores: Option<PathBuf>,
    /// Ranking file; standard output if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Base ranking file.
    pub a: PathBuf,
    pub b: PathBuf,
    /// Comma-separated top-x% cutoffs, e.g. `1,5,10,50,100`.
    #[arg(long, conflicts_with = "scatter", required_unless_present = "scatter")]
    pub curve: Option<String>,
    /// Rank differences for the first N nodes of the base ranking.
    #[arg(long)]
    pub scatter: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InspectArgs {
    pub dir: PathBuf,
    /// Id of the centre node.
    #[arg(long)]
    pub node: String,
    #[arg(long, default_value_t = 1)]
    pub radius: usize,
    /// DOT output file; standard output if omitted.
    #[arg(long)]
    pub dot: Option<PathBuf>,
    /// Score table whose normalized scores label the nodes.
    #[arg(long)]
    pub scores: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    /// One of paper-quality, coauthor-count, citing-quality, self-citation,
    /// citation-loop, single-ref-chain.
    pub kind: String,
    #[arg(long)]
    pub out: PathBuf,
    /// Isolated author-paper pairs to add.
    #[arg(long, default_value_t = 0)]
    pub padding: usize,
    /// Size parameter override `name=value`; repeatable.
    #[arg(long = "param")]
    pub params: Vec<String>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    pub dir: PathBuf,
    /// Write summary and histogram CSVs here instead of printing the summary.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Ingest(a) => ingest(a, stdout),
        Command::Rank(a) => rank(a, stdout),
        Command::Compare(a) => compare(a, stdout),
        Command::Inspect(a) => inspect(a, stdout),
        Command::Synth(a) => synth(a, stdout),
        Command::Stats(a) => stats(a, stdout),
    }
}

fn emit(out: Option<&Path>, body: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => io::write_file(path, body),
        None => stdout
            .write_all(body.as_bytes())
            .map_err(|e| PiraError::io("<stdout>", e)),
    }
}

fn ingest(args: IngestArgs, stdout: &mut dyn Write) -> Result<()> {
    let (graph, report) = io::load_graph(&args.dir)?;
    if let Some(dir) = &args.out {
        io::save_graph(&graph, dir)?;
    }
    if let Some(path) = &args.idmap {
        io::write_file(path, &io::id_map(&graph))?;
    }
    if let Some(path) = &args.merges {
        let mut body = String::new();
        for s in suggest_merges(&graph) {
            let rule = match s.rule {
                MergeRule::SelfCitationInitialMatch => "self-citation-initial-match",
                MergeRule::CommonCoauthorInitialMatch => "common-coauthor-initial-match",
            };
            body.push_str(&format!(
                "{rule}\t{}\t{}\n",
                graph.key(s.author_a),
                graph.key(s.author_b)
            ));
        }
        io::write_file(path, &body)?;
    }
    emit(None, &report.to_string(), stdout)
}

/// Scores of every node in global order, and the score table for the
/// random-walk methods.
fn method_scores(
    graph: &CitationGraph,
    method: Method,
    params: &WalkParams,
) -> Result<(Vec<f64>, Option<ScoreTable>)> {
    let counts = |v: Vec<usize>| -> Vec<f64> {
        let mut out: Vec<f64> = v.into_iter().map(|x| x as f64).collect();
        out.extend((0..graph.paper_count()).map(|p| graph.cited_by(p).len() as f64));
        out
    };
    // PageRank vectors sum to 1; scale them so the mean over their graph is 1.
    let np = graph.paper_count() as f64;
    Ok(match method {
        Method::Pira | Method::Oracle => {
            let table = match method {
                Method::Pira => parallel::pira_rank(graph, params)?,
                _ => oracle::expected_scores(graph, params)?,
            };
            (table.normalized().to_vec(), Some(table))
        }
        Method::Pub => (counts(baselines::pub_count(graph)), None),
        Method::Cit => (counts(baselines::cit_count(graph)), None),
        Method::Hindex => (counts(baselines::h_index(graph)), None),
        Method::Prp => {
            let papers = baselines::paper_pagerank(graph, baselines::DEFAULT_DAMPING)?;
            let mut v = baselines::authors_from_papers(graph, &papers);
            v.extend(papers);
            (v.into_iter().map(|x| x * np).collect(), None)
        }
        Method::Pra => {
            let mut v = baselines::pr_a(graph)?;
            let na = v.len() as f64;
            v.iter_mut().for_each(|x| *x *= na);
            v.resize(graph.node_count(), 0.0);
            (v, None)
        }
    })
}

fn rank(args: RankArgs, stdout: &mut dyn Write) -> Result<()> {
    let params = args.walk.to_params()?;
    if args.papers && matches!(args.method, Method::Pub | Method::Hindex | Method::Pra) {
        return Err(PiraError::Usage(format!(
            "method {:?} ranks authors only",
            args.method
        )));
    }
    if args.scores.is_some() && !matches!(args.method, Method::Pira | Method::Oracle) {
        return Err(PiraError::Usage("--scores needs method pira or oracle".into()));
    }
    let (graph, _) = io::load_graph(&args.dir)?;
    let (scores, table) = method_scores(&graph, args.method, &params)?;
    if let (Some(path), Some(table)) = (&args.scores, &table) {
        io::write_file(path, &formats::score_table(&graph, table))?;
    }
    let kind = if args.papers { NodeKind::Paper } else { NodeKind::Author };
    let filter = NodeFilter::of_kind(kind, !args.all_nodes);
    let ranking = rank_by(&graph, &filter, |id| scores[graph.global_index(id)])?;
    emit(args.out.as_deref(), &formats::ranking(&graph, &ranking), stdout)
}

fn parse_cutoffs(list: &str) -> Result<Vec<f64>> {
    list.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| PiraError::Usage(format!("bad cutoff {s:?}")))
        })
        .collect()
}

fn compare(args: CompareArgs, stdout: &mut dyn Write) -> Result<()> {
    let cutoffs = args.curve.as_deref().map(parse_cutoffs).transpose()?;
    let read = |p: &Path| -> Result<_> {
        formats::read_ranking(&p.display().to_string(), &io::read_file(p)?)
    };
    let (a, b) = (read(&args.a)?, read(&args.b)?);
    let body = match (cutoffs, args.scatter) {
        (Some(cutoffs), _) => formats::diff_curve(&topx_difference(&a, &b, &cutoffs)?),
        (None, Some(n)) => formats::scatter(&rank_scatter(&a, &b, n)?),
        (None, None) => unreachable!("clap requires --curve or --scatter"),
    };
    emit(args.out.as_deref(), &body, stdout)
}

fn inspect(args: InspectArgs, stdout: &mut dyn Write) -> Result<()> {
    let (graph, _) = io::load_graph(&args.dir)?;
    let center = graph
        .find(&args.node)
        .ok_or_else(|| PiraError::Usage(format!("unknown node {:?}", args.node)))?;
    let sub = graph.neighborhood(center, args.radius)?;
    let labels = match &args.scores {
        None => None,
        Some(path) => {
            let text = io::read_file(path)?;
            let table: std::collections::HashMap<String, f64> =
                formats::read_score_table(&path.display().to_string(), &text)?
                    .into_iter()
                    .collect();
            let values = sub
                .nodes()
                .map(|n| {
                    table.get(sub.key(n)).copied().ok_or_else(|| {
                        PiraError::Usage(format!("no score for node {:?}", sub.key(n)))
                    })
                })
                .collect::<Result<Vec<f64>>>()?;
            Some(values)
        }
    };
    emit(args.dot.as_deref(), &export_dot(&sub, labels.as_deref()), stdout)
}

fn synth(args: SynthArgs, stdout: &mut dyn Write) -> Result<()> {
    let kind: ScenarioKind = args.kind.parse()?;
    let mut spec = ScenarioSpec::default_for(kind);
    for p in &args.params {
        let (name, value) = p
            .split_once('=')
            .ok_or_else(|| PiraError::Usage(format!("parameter {p:?} is not name=value")))?;
        let value = value
            .parse()
            .map_err(|_| PiraError::Usage(format!("parameter {p:?} needs a non-negative integer")))?;
        spec.set_param(name, value)?;
    }
    let scenario = generate(&spec, args.padding)?;
    io::save_graph(&scenario.graph, &args.out)?;
    io::write_file(
        &args.out.join(formats::ASSERTIONS),
        &formats::assertions(&scenario),
    )?;
    let g = &scenario.graph;
    emit(
        None,
        &format!(
            "scenario={kind}\nauthors={}\npapers={}\nassertions={}\n",
            g.author_count(),
            g.paper_count(),
            scenario.expectations.len()
        ),
        stdout,
    )
}

fn stats(args: StatsArgs, stdout: &mut dyn Write) -> Result<()> {
    let (graph, _) = io::load_graph(&args.dir)?;
    let report = dataset_stats(&graph);
    match &args.out {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| PiraError::io(dir, e))?;
            for (name, body) in formats::stats_files(&report) {
                io::write_file(&dir.join(name), &body)?;
            }
            Ok(())
        }
        None => emit(None, &formats::stats_summary(&report), stdout),
    }
}
