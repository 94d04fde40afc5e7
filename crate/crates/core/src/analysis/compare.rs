use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::error::{Error, Result};

use super::Ranking;

/// Share (in percent) of the top-x% of one ranking missing from the
/// top-x% of another, for a list of cutoffs.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DiffCurve {
    /// `(x_percent, diff_percent)`.
    pub points: Vec<(f64, f64)>,
}

fn same_nodes<T: Ord + Clone + Debug>(r1: &Ranking<T>, r2: &Ranking<T>) -> Result<()> {
    if r1.node_set() != r2.node_set() {
        return Err(Error::Mismatch(alloc::format!(
            "rankings cover different nodes ({} vs {} entries)",
            r1.len(),
            r2.len()
        )));
    }
    Ok(())
}

/// Size of the top `x` percent of `n` entries, rounded up.
fn top_size(x: f64, n: usize) -> usize {
    let k = libm::ceil(x * n as f64 / 100.0 - 1e-9);
    (k.max(0.0) as usize).min(n)
}

pub fn topx_difference<T: Ord + Clone + Debug>(
    r1: &Ranking<T>,
    r2: &Ranking<T>,
    cutoffs: &[f64],
) -> Result<DiffCurve> {
    same_nodes(r1, r2)?;
    let n = r1.len();
    let mut points = Vec::with_capacity(cutoffs.len());
    for &x in cutoffs {
        if !(x > 0.0 && x <= 100.0) {
            return Err(Error::InvalidParams(alloc::format!(
                "cutoff {x} is outside (0, 100]"
            )));
        }
        let k = top_size(x, n);
        let diff = if k == 0 {
            0.0
        } else {
            let top2: BTreeSet<&T> = r2.nodes().take(k).collect();
            let missing = r1.nodes().take(k).filter(|v| !top2.contains(v)).count();
            100.0 * missing as f64 / k as f64
        };
        points.push((x, diff));
    }
    Ok(DiffCurve { points })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScatterPoint<T> {
    pub node: T,
    pub base_rank: usize,
    /// `base_rank - other_rank`; negative when the other ranking is worse.
    pub difference: i64,
}

/// Rank differences for the first `top_n` nodes of `base` (clamped to the
/// ranking length), in base order.
pub fn rank_scatter<T: Ord + Clone + Debug>(
    base: &Ranking<T>,
    other: &Ranking<T>,
    top_n: usize,
) -> Result<Vec<ScatterPoint<T>>> {
    same_nodes(base, other)?;
    let other_rank: alloc::collections::BTreeMap<&T, usize> =
        other.entries().iter().map(|e| (&e.node, e.rank)).collect();
    Ok(base
        .entries()
        .iter()
        .take(top_n)
        .map(|e| ScatterPoint {
            node: e.node.clone(),
            base_rank: e.rank,
            difference: e.rank as i64 - other_rank[&e.node] as i64,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ranking(order: &[u32]) -> Ranking<u32> {
        let n = order.len() as f64;
        Ranking::from_scores(order.iter().enumerate().map(|(i, &v)| (v, n - i as f64))).unwrap()
    }

    #[test]
    fn identical_rankings_give_zero_curve() {
        let r = ranking(&[3, 1, 4, 5, 9, 2, 6, 8, 7, 0]);
        let c = topx_difference(&r, &r, &[10.0, 25.0, 50.0, 100.0]).unwrap();
        assert!(c.points.iter().all(|p| p.1 == 0.0));
    }

    #[test]
    fn disjoint_tops() {
        let r1 = ranking(&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let r2 = ranking(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0]);
        let c = topx_difference(&r1, &r2, &[10.0, 50.0, 60.0, 100.0]).unwrap();
        assert_eq!(c.points, vec![(10.0, 100.0), (50.0, 100.0), (60.0, 100.0 * 4.0 / 6.0), (100.0, 0.0)]);
    }

    #[test]
    fn partial_cutoff_rounds_up() {
        assert_eq!(top_size(15.0, 10), 2);
        assert_eq!(top_size(10.0, 10), 1);
        assert_eq!(top_size(0.1, 10), 1);
        assert_eq!(top_size(100.0, 7), 7);
    }

    #[test]
    fn mismatched_sets_rejected() {
        let r1 = ranking(&[0, 1, 2]);
        let r2 = ranking(&[0, 1, 3]);
        assert!(matches!(topx_difference(&r1, &r2, &[50.0]), Err(Error::Mismatch(_))));
        assert!(rank_scatter(&r1, &r2, 2).is_err());
        assert!(topx_difference(&r1, &r1, &[0.0]).is_err());
        assert!(topx_difference(&r1, &r1, &[101.0]).is_err());
    }

    #[test]
    fn scatter_differences() {
        let r = ranking(&[5, 6, 7]);
        let same = rank_scatter(&r, &r, 3).unwrap();
        assert!(same.iter().all(|p| p.difference == 0));
        assert_eq!(same.len(), 3);

        let other = ranking(&[7, 5, 6]);
        let s = rank_scatter(&r, &other, 10).unwrap();
        let diffs: Vec<_> = s.iter().map(|p| (p.node, p.base_rank, p.difference)).collect();
        assert_eq!(diffs, vec![(5, 1, -1), (6, 2, -1), (7, 3, 2)]);
    }
}
