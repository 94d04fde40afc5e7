//! Independent reference computations for the integration tests.

#![allow(dead_code)]

use pira_core::{CitationGraph, WalkParams};

/// Dense transition matrix of the interpreted walk, split per counter
/// class: `c[u][v][class]` with classes restart, wrote, cite, isWrittenBy.
pub fn dense_chain(g: &CitationGraph, params: &WalkParams) -> Vec<Vec<[f64; 4]>> {
    let (na, np) = (g.author_count(), g.paper_count());
    let n = na + np;
    let df = params.damping;
    let theta = params.theta;
    let q = match (na, np) {
        (0, _) => 0.0,
        (_, 0) => 1.0,
        _ => params.restart_author_prob.unwrap_or(na as f64 / n as f64),
    };
    let mut init = vec![0.0; n];
    for x in init.iter_mut().take(na) {
        *x = q / na as f64;
    }
    for x in init.iter_mut().skip(na) {
        *x = (1.0 - q) / np as f64;
    }

    let mut c = vec![vec![[0.0; 4]; n]; n];
    let restart = |row: &mut Vec<[f64; 4]>, mass: f64| {
        for (v, cell) in row.iter_mut().enumerate() {
            cell[0] += mass * init[v];
        }
    };
    for a in 0..na {
        let row = &mut c[a];
        restart(row, df);
        let papers = g.papers_of(a);
        if papers.is_empty() {
            restart(row, 1.0 - df);
            continue;
        }
        let total: f64 = papers.iter().map(|&p| 1.0 / g.authors_of(p).len() as f64).sum();
        for &p in papers {
            row[na + p][1] += (1.0 - df) * (1.0 / g.authors_of(p).len() as f64) / total;
        }
    }
    for p in 0..np {
        let row = &mut c[na + p];
        restart(row, df);
        let refs = g.refs(p);
        let cite_mass = (1.0 - df) * theta;
        if refs.is_empty() {
            restart(row, cite_mass);
        } else {
            let slots = refs.len().max(params.min_citation_count) as f64;
            for &r in refs {
                row[na + r][2] += cite_mass / slots;
            }
            let fake = cite_mass * (1.0 - refs.len() as f64 / slots);
            for r in 0..np {
                row[na + r][0] += fake / np as f64;
            }
        }
        let iswb_mass = (1.0 - df) * (1.0 - theta);
        let authors = g.authors_of(p);
        if authors.is_empty() {
            restart(row, iswb_mass);
        } else {
            for &a in authors {
                row[a][3] += iswb_mass / authors.len() as f64;
            }
        }
    }
    c
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
pub fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        a.swap(col, pivot);
        b.swap(col, pivot);
        let d = a[col][col];
        assert!(d.abs() > 1e-14, "singular system");
        for row in col + 1..n {
            let f = a[row][col] / d;
            if f != 0.0 {
                for k in col..n {
                    a[row][k] -= f * a[col][k];
                }
                b[row] -= f * b[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    x
}

/// Stationary distribution of a row-stochastic matrix by direct solve of
/// `πᵀ(P − I) = 0`, `Σπ = 1`.
pub fn stationary(p: &[Vec<f64>]) -> Vec<f64> {
    let n = p.len();
    let mut a = vec![vec![0.0; n]; n];
    for (u, row) in p.iter().enumerate() {
        for (v, &x) in row.iter().enumerate() {
            a[v][u] = x;
        }
    }
    for (v, row) in a.iter_mut().enumerate() {
        row[v] -= 1.0;
    }
    a[n - 1] = vec![1.0; n];
    let mut b = vec![0.0; n];
    b[n - 1] = 1.0;
    solve(a, b)
}

/// Expected normalized scores of the interpreted walk, from a direct solve.
pub fn reference_scores(g: &CitationGraph, params: &WalkParams) -> Vec<f64> {
    let c = dense_chain(g, params);
    let p: Vec<Vec<f64>> = c
        .iter()
        .map(|row| row.iter().map(|cell| cell.iter().sum()).collect())
        .collect();
    let pi = stationary(&p);
    let w = [
        params.weights.restart,
        params.weights.wrote,
        params.weights.cite,
        params.weights.is_written_by,
    ];
    let n = c.len();
    let mut raw = vec![0.0; n];
    for (u, row) in c.iter().enumerate() {
        for (v, cell) in row.iter().enumerate() {
            raw[v] += pi[u] * (0..4).map(|k| cell[k] * w[k]).sum::<f64>();
        }
    }
    let total: f64 = raw.iter().sum();
    raw.iter().map(|x| x * n as f64 / total).collect()
}

/// Small graphs: the library samples plus the compact scenario graphs.
pub fn fixtures() -> Vec<(String, CitationGraph)> {
    use pira_core::scenario::{generate, ScenarioKind, ScenarioSpec};
    let mut out: Vec<(String, CitationGraph)> = pira_core::samples::all()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    for k in [ScenarioKind::PaperQuality, ScenarioKind::CoauthorCount] {
        out.push((k.name().to_string(), generate(&ScenarioSpec::default_for(k), 0).unwrap().graph));
    }
    out
}
