//! Player-level centrality scores: closeness, weighted closeness,
//! betweenness and pagerank.

use crate::error::{Error, Result};
use crate::ext::Ext;
use crate::geodesics::{DistanceMatrix, PathCountResult};
use crate::net_model::PassingNetwork;
use crate::scalar::Scalar;

/// Per-player score bundle in roster order.
#[derive(Debug, Clone)]
pub struct PlayerScores<T> {
    pub closeness: Vec<T>,
    pub closeness_weighted: Vec<T>,
    pub betweenness: Vec<T>,
    pub pagerank: Vec<T>,
}

#[derive(Debug, Clone, Copy)]
pub struct PagerankParams<T> {
    /// Probability of passing the ball away rather than keeping it.
    pub p: T,
    /// Free popularity granted to every player.
    pub q: T,
    pub tol: T,
    pub max_iter: usize,
}

impl<T: Scalar> Default for PagerankParams<T> {
    fn default() -> Self {
        PagerankParams {
            p: T::from_f64(0.85).unwrap(),
            q: T::one(),
            tol: T::from_f64(1e-9).unwrap(),
            max_iter: 10_000,
        }
    }
}

/// Closeness C_i = 2(N-1) / (sum of outgoing + incoming geodesic distances).
/// Any infinite distance involving i makes the sum infinite, so C_i = 0.
pub fn closeness<T: Scalar>(d: &DistanceMatrix<T>) -> Result<Vec<T>> {
    let n = d.n();
    if n < 2 {
        return Err(Error::Domain("closeness needs at least 2 players".into()));
    }
    let numer = T::from_usize(2 * (n - 1)).unwrap();
    Ok((0..n)
        .map(|i| match distance_sums(d, i) {
            (Ext::Finite(out), Ext::Finite(inc)) => numer / (out + inc),
            _ => T::zero(),
        })
        .collect())
}

/// Weighted closeness C'_i = (N-1) / (w * out-sum + (1-w) * in-sum).
/// At w = 1/2 this reduces to `closeness` exactly.
pub fn closeness_weighted<T: Scalar>(d: &DistanceMatrix<T>, w: T) -> Result<Vec<T>> {
    let n = d.n();
    if n < 2 {
        return Err(Error::Domain("closeness needs at least 2 players".into()));
    }
    if w < T::zero() || w > T::one() {
        return Err(Error::Domain(format!("closeness weight {w} outside [0,1]")));
    }
    let numer = T::from_usize(n - 1).unwrap();
    let cw = T::one() - w;
    Ok((0..n)
        .map(|i| {
            let (out, inc) = distance_sums(d, i);
            let weighted_out = match out {
                Ext::Finite(v) => Some(w * v),
                Ext::Infinite if w > T::zero() => None,
                Ext::Infinite => Some(T::zero()),
            };
            let weighted_in = match inc {
                Ext::Finite(v) => Some(cw * v),
                Ext::Infinite if cw > T::zero() => None,
                Ext::Infinite => Some(T::zero()),
            };
            match (weighted_out, weighted_in) {
                (Some(a), Some(b)) => numer / (a + b),
                _ => T::zero(),
            }
        })
        .collect())
}

fn distance_sums<T: Scalar>(d: &DistanceMatrix<T>, i: usize) -> (Ext<T>, Ext<T>) {
    let n = d.n();
    let mut out = Ext::zero();
    let mut inc = Ext::zero();
    for j in 0..n {
        if j != i {
            out = out + d.d[i][j];
            inc = inc + d.d[j][i];
        }
    }
    (out, inc)
}

/// Betweenness C_B(i) = 1/((N-1)(N-2)) * sum over ordered pairs (j,k) of
/// n_through[i][j][k] / g[j][k], skipping unreachable pairs (g = 0).
/// At N = 11 the normalizer is 1/90.
pub fn betweenness<T: Scalar>(pc: &PathCountResult<T>) -> Result<Vec<T>> {
    let n = pc.d.n();
    if n < 3 {
        return Err(Error::Domain(
            "betweenness needs at least 3 players".into(),
        ));
    }
    let norm = T::one() / T::from_usize((n - 1) * (n - 2)).unwrap();
    Ok((0..n)
        .map(|i| {
            let mut sum = T::zero();
            for j in 0..n {
                for k in 0..n {
                    if j == k || j == i || k == i || pc.g[j][k] == 0 {
                        continue;
                    }
                    sum = sum
                        + T::from_u64(pc.n_through[i][j][k]).unwrap()
                            / T::from_u64(pc.g[j][k]).unwrap();
                }
            }
            norm * sum
        })
        .collect())
}

/// Pagerank fixed point of x_i = p * sum_j (A_ji / Lout_j) x_j + q, iterated
/// from x = (q, ..., q). Dangling players (Lout = 0) contribute nothing.
pub fn pagerank<T: Scalar>(net: &PassingNetwork<T>, params: &PagerankParams<T>) -> Result<Vec<T>> {
    let n = net.n_players();
    if params.p < T::zero() || params.p >= T::one() {
        return Err(Error::Domain(format!(
            "pagerank p = {} must lie in [0,1)",
            params.p
        )));
    }
    if params.q <= T::zero() || params.tol <= T::zero() || params.max_iter == 0 {
        return Err(Error::Domain("pagerank q, tol, max_iter must be positive".into()));
    }

    let out_strength: Vec<T> = (0..n).map(|j| net.a[j].iter().copied().sum()).collect();
    let mut x = vec![params.q; n];
    let mut residual = T::zero();
    for _ in 0..params.max_iter {
        let next: Vec<T> = (0..n)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..n {
                    if j != i && out_strength[j] > T::zero() {
                        acc = acc + net.a[j][i] / out_strength[j] * x[j];
                    }
                }
                params.q + params.p * acc
            })
            .collect();
        residual = next
            .iter()
            .zip(&x)
            .map(|(&a, &b)| (a - b).abs())
            .fold(T::zero(), T::max);
        if residual <= params.tol {
            // x itself is the vector whose one-step residual we just
            // measured, so the returned vector honors the tol contract
            return Ok(x);
        }
        x = next;
    }
    Err(Error::IterationLimit {
        iterations: params.max_iter,
        residual: residual.to_f64().unwrap_or(f64::NAN),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesics::{all_pairs_geodesics, DEFAULT_TIE_TOL};
    use crate::net_model::arrow_lengths;
    use crate::test_support::{chain3_net, complete_uniform, cycle3_net};
    use proptest::prelude::*;

    fn paths_of(net: &PassingNetwork<f64>) -> PathCountResult<f64> {
        all_pairs_geodesics(&arrow_lengths(net), DEFAULT_TIE_TOL)
    }

    #[test]
    fn closeness_complete_digraph_equals_weight() {
        for &w in &[1u64, 3, 7] {
            let net = complete_uniform(11, w);
            let scores = closeness(&paths_of(&net).d).unwrap();
            for &c in &scores {
                assert!((c - w as f64).abs() < 1e-12, "w={w} got {c}");
            }
        }
    }

    #[test]
    fn closeness_directed_cycle() {
        let scores = closeness(&paths_of(&cycle3_net()).d).unwrap();
        for &c in &scores {
            assert!((c - 4.0 / 3.0).abs() < 1e-12, "{c}");
        }
    }

    #[test]
    fn closeness_zero_on_unreachable() {
        // every chain3 player has an infinite in- or out-distance
        let scores = closeness(&paths_of(&chain3_net()).d).unwrap();
        assert_eq!(scores, vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn closeness_rejects_tiny_network() {
        let net = complete_uniform(1, 1);
        assert!(closeness(&paths_of(&net).d).is_err());
    }

    #[test]
    fn weighted_closeness_full_out_weight() {
        let scores = closeness_weighted(&paths_of(&cycle3_net()).d, 1.0).unwrap();
        for &c in &scores {
            assert!((c - 4.0 / 3.0).abs() < 1e-12, "{c}");
        }
    }

    #[test]
    fn weighted_closeness_zero_weight_ignores_out_infinity() {
        // chain3 node 0 has no in-arcs: with w = 1 the out side is finite
        let d = paths_of(&chain3_net()).d;
        let w1 = closeness_weighted(&d, 1.0).unwrap();
        assert!(w1[0] > 0.0);
        // with w = 0 the in side is infinite, so 0
        let w0 = closeness_weighted(&d, 0.0).unwrap();
        assert_eq!(w0[0], 0.0);
    }

    #[test]
    fn weighted_closeness_rejects_out_of_range_weight() {
        let d = paths_of(&cycle3_net()).d;
        assert!(closeness_weighted(&d, 1.5).is_err());
        assert!(closeness_weighted(&d, -0.1).is_err());
    }

    #[test]
    fn betweenness_chain3_middle() {
        let scores = betweenness(&paths_of(&chain3_net())).unwrap();
        assert_eq!(scores[1], 0.5);
        assert_eq!(scores[0], 0.0);
        assert_eq!(scores[2], 0.0);
    }

    #[test]
    fn betweenness_complete_digraph_is_zero() {
        let scores = betweenness(&paths_of(&complete_uniform(6, 2))).unwrap();
        assert_eq!(scores, vec![0.0; 6]);
    }

    #[test]
    fn betweenness_rejects_small_networks() {
        assert!(betweenness(&paths_of(&complete_uniform(2, 1))).is_err());
    }

    #[test]
    fn pagerank_complete_uniform_closed_form() {
        let net = complete_uniform(11, 1);
        let x = pagerank(&net, &PagerankParams::default()).unwrap();
        for &v in &x {
            assert!((v - 20.0 / 3.0).abs() < 1e-8, "{v}");
        }
    }

    #[test]
    fn pagerank_chain3_fixed_point() {
        let x = pagerank(&chain3_net(), &PagerankParams::default()).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-8);
        assert!((x[1] - 1.68).abs() < 1e-8);
        assert!((x[2] - 2.598).abs() < 1e-8);
    }

    #[test]
    fn pagerank_degenerate_p_zero() {
        let params = PagerankParams {
            p: 0.0,
            ..PagerankParams::default()
        };
        let x = pagerank(&chain3_net(), &params).unwrap();
        assert_eq!(x, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn pagerank_rejects_bad_params() {
        let bad = PagerankParams {
            p: 1.0,
            ..PagerankParams::default()
        };
        assert!(pagerank(&chain3_net(), &bad).is_err());
    }

    #[test]
    fn pagerank_iteration_limit_reports_residual() {
        let params = PagerankParams {
            max_iter: 1,
            tol: 1e-15,
            ..PagerankParams::default()
        };
        let err = pagerank(&complete_uniform(5, 2), &params).unwrap_err();
        assert!(matches!(err, Error::IterationLimit { iterations: 1, .. }));
    }

    proptest! {
        #[test]
        fn weighted_closeness_at_half_matches_closeness(seed in 0u64..300) {
            let net = crate::bruteforce::random_network(seed, 6, 0.5, 5);
            let d = paths_of(&net).d;
            let plain = closeness(&d).unwrap();
            let half = closeness_weighted(&d, 0.5).unwrap();
            for (a, b) in plain.iter().zip(&half) {
                prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
            }
        }

        #[test]
        fn betweenness_bounded(seed in 0u64..300) {
            let net = crate::bruteforce::random_network(seed, 7, 0.5, 5);
            let scores = betweenness(&paths_of(&net)).unwrap();
            for &b in &scores {
                prop_assert!((0.0..=1.0).contains(&b), "{b}");
            }
        }

        #[test]
        fn pagerank_scale_invariant(seed in 0u64..100, scale in 2u32..9) {
            let net = crate::bruteforce::random_network(seed, 6, 0.6, 5);
            let mut scaled = net.clone();
            for row in scaled.a.iter_mut() {
                for v in row.iter_mut() {
                    *v = *v * scale as f64;
                }
            }
            let params = PagerankParams::default();
            let a = pagerank(&net, &params).unwrap();
            let b = pagerank(&scaled, &params).unwrap();
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - y).abs() <= 1e-7, "{x} vs {y}");
            }
        }

        #[test]
        fn pagerank_floor_is_q(seed in 0u64..100) {
            let net = crate::bruteforce::random_network(seed, 6, 0.4, 5);
            let x = pagerank(&net, &PagerankParams::default()).unwrap();
            for &v in &x {
                prop_assert!(v >= 1.0 - 1e-12);
            }
        }
    }
}
