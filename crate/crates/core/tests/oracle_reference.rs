mod common;

use pira_core::baselines::pagerank;
use pira_core::oracle::{build_transition_system, expected_scores, stationary_distribution};
use pira_core::{samples, CounterWeights, WalkParams};

fn param_grid() -> Vec<WalkParams> {
    let base = WalkParams::default();
    vec![
        base.clone(),
        WalkParams { theta: 1.0, weights: CounterWeights::ONES, ..base.clone() },
        WalkParams { damping: 0.3, theta: 0.4, min_citation_count: 3, ..base.clone() },
        WalkParams {
            weights: CounterWeights { restart: 0.5, cite: 2.0, wrote: 0.25, is_written_by: 1.0 },
            restart_author_prob: Some(0.5),
            ..base.clone()
        },
        WalkParams { damping: 1.0, weights: CounterWeights::ONES, ..base },
    ]
}

#[test]
fn expected_scores_match_direct_solve() {
    for (name, g) in common::fixtures() {
        for params in param_grid() {
            let got = expected_scores(&g, &params).unwrap();
            let want = common::reference_scores(&g, &params);
            for (v, (x, y)) in got.normalized().iter().zip(&want).enumerate() {
                assert!((x - y).abs() < 1e-9, "{name} node {v}: {x} vs {y} ({params:?})");
            }
        }
    }
}

#[test]
fn transition_rows_match_dense_reference() {
    for (name, g) in common::fixtures() {
        for params in param_grid() {
            let ts = build_transition_system(&g, &params).unwrap();
            let dense = ts.dense();
            let reference = common::dense_chain(&g, &params);
            for (u, (row, want)) in dense.iter().zip(&reference).enumerate() {
                let sum: f64 = row.iter().sum();
                assert!((sum - 1.0).abs() < 1e-12, "{name} row {u} sums to {sum}");
                for (v, (&x, cell)) in row.iter().zip(want).enumerate() {
                    let y: f64 = cell.iter().sum();
                    assert!(x >= 0.0 && (x - y).abs() < 1e-12, "{name} {u}->{v}");
                }
            }
        }
    }
}

#[test]
fn stationary_is_fixed_point() {
    for (name, g) in common::fixtures() {
        let ts = build_transition_system(&g, &WalkParams::default()).unwrap();
        let pi = stationary_distribution(&ts, 1e-12).unwrap();
        let next = ts.step(&pi);
        let residual: f64 = pi.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        assert!(residual < 1e-11, "{name}: {residual}");
        assert!((pi.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn star_hub_dominates_in_oracle() {
    let g = samples::star();
    let params = WalkParams { theta: 1.0, ..WalkParams::default() };
    let ts = build_transition_system(&g, &params).unwrap();
    let pi = stationary_distribution(&ts, 1e-12).unwrap();
    let hub = g.global_index(pira_core::NodeId::paper(0));
    for leaf in 1..5 {
        assert!(pi[hub] > pi[g.global_index(pira_core::NodeId::paper(leaf))]);
    }
}

/// PageRank with teleport `d` as the linear system `(I − (1−d)Mᵀ)π = d/n`,
/// dangling rows replaced by uniform ones.
fn pagerank_direct(n: usize, edges: &[(usize, usize, f64)], d: f64) -> Vec<f64> {
    let mut m = vec![vec![0.0; n]; n];
    for &(u, v, w) in edges {
        m[u][v] += w;
    }
    for row in &mut m {
        let s: f64 = row.iter().sum();
        if s == 0.0 {
            row.iter_mut().for_each(|x| *x = 1.0 / n as f64);
        } else {
            row.iter_mut().for_each(|x| *x /= s);
        }
    }
    let mut a = vec![vec![0.0; n]; n];
    for v in 0..n {
        for u in 0..n {
            a[v][u] = -(1.0 - d) * m[u][v];
        }
        a[v][v] += 1.0;
    }
    let x = common::solve(a, vec![d / n as f64; n]);
    let s: f64 = x.iter().sum();
    x.into_iter().map(|v| v / s).collect()
}

#[test]
fn pagerank_star_matches_direct_solve() {
    let edges = [(1, 0, 1.0), (2, 0, 1.0), (3, 0, 1.0)];
    let got = pagerank(4, &edges, 0.15, 1e-14).unwrap();
    let want = pagerank_direct(4, &edges, 0.15);
    for (x, y) in got.iter().zip(&want) {
        assert!((x - y).abs() < 1e-9, "{x} vs {y}");
    }
    assert!(got[1..].iter().all(|&leaf| got[0] > leaf));
}

#[test]
fn pagerank_weighted_graph_matches_direct_solve() {
    let edges = [(0, 1, 2.0), (0, 2, 1.0), (1, 2, 1.0), (2, 0, 0.5), (3, 0, 1.0), (3, 3, 1.0)];
    let got = pagerank(5, &edges, 0.2, 1e-14).unwrap();
    let want = pagerank_direct(5, &edges, 0.2);
    for (x, y) in got.iter().zip(&want) {
        assert!((x - y).abs() < 1e-9, "{x} vs {y}");
    }
}
