//! All-pairs weighted directed shortest paths with geodesic counting.
//!
//! Shared substrate for closeness and betweenness: distances d_jk, geodesic
//! multiplicities g_jk, and per-interior-node through-counts.

use crate::ext::Ext;
use crate::net_model::LengthMatrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct DistanceMatrix<T> {
    pub d: Vec<Vec<Ext<T>>>,
}

impl<T: Scalar> DistanceMatrix<T> {
    pub fn n(&self) -> usize {
        self.d.len()
    }
}

/// Distances plus path multiplicities.
///
/// `g[j][k]` counts distinct geodesics j → k (0 if unreachable, 1 on the
/// diagonal by convention). `n_through[i][j][k]` counts geodesics j → k whose
/// interior passes through i; it is 0 whenever i is an endpoint.
#[derive(Debug, Clone)]
pub struct PathCountResult<T> {
    pub d: DistanceMatrix<T>,
    pub g: Vec<Vec<u64>>,
    pub n_through: Vec<Vec<Vec<u64>>>,
}

/// Two path lengths tie when |a - b| <= tol * max(a, b, 1).
pub fn tied<T: Scalar>(a: T, b: T, tol: T) -> bool {
    (a - b).abs() <= tol * a.max(b).max(T::one())
}

pub const DEFAULT_TIE_TOL: f64 = 1e-9;

/// Dijkstra from every source over finite arcs, then geodesic counting on the
/// tight-edge order, then through-counts via the splice identity
/// `n_through[i][j][k] = g[j][i] * g[i][k]` on tight splits.
pub fn all_pairs_geodesics<T: Scalar>(lengths: &LengthMatrix<T>, tie_tol: T) -> PathCountResult<T> {
    let n = lengths.n();
    assert!(tie_tol >= T::zero(), "tie tolerance must be non-negative");
    for (i, row) in lengths.l.iter().enumerate() {
        for (j, &l) in row.iter().enumerate() {
            if i != j {
                if let Ext::Finite(v) = l {
                    // strictly positive arcs guarantee geodesics are simple
                    assert!(v > T::zero(), "arc length ({i},{j}) must be > 0");
                }
            }
        }
    }

    let mut d = vec![vec![Ext::Infinite; n]; n];
    let mut g = vec![vec![0u64; n]; n];

    for s in 0..n {
        let dist = dijkstra(lengths, s);
        let counts = count_geodesics(lengths, &dist, s, tie_tol);
        d[s] = dist;
        g[s] = counts;
    }

    let mut n_through = vec![vec![vec![0u64; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || i == k || j == k {
                    continue;
                }
                if let (Ext::Finite(dji), Ext::Finite(dik), Ext::Finite(djk)) =
                    (d[j][i], d[i][k], d[j][k])
                {
                    if tied(dji + dik, djk, tie_tol) {
                        n_through[i][j][k] = g[j][i] * g[i][k];
                    }
                }
            }
        }
    }

    PathCountResult {
        d: DistanceMatrix { d },
        g,
        n_through,
    }
}

fn dijkstra<T: Scalar>(lengths: &LengthMatrix<T>, source: usize) -> Vec<Ext<T>> {
    let n = lengths.n();
    let mut dist = vec![Ext::Infinite; n];
    let mut done = vec![false; n];
    dist[source] = Ext::zero();
    // O(n^2) selection; n is at most a couple dozen here
    loop {
        let mut u = None;
        for v in 0..n {
            if done[v] || !dist[v].is_finite() {
                continue;
            }
            match u {
                None => u = Some(v),
                Some(best) => {
                    if dist[v].total_cmp(dist[best]) == std::cmp::Ordering::Less {
                        u = Some(v);
                    }
                }
            }
        }
        let Some(u) = u else { break };
        done[u] = true;
        let du = dist[u].finite().unwrap();
        for v in 0..n {
            if v == u || done[v] {
                continue;
            }
            if let Ext::Finite(l) = lengths.l[u][v] {
                let cand = Ext::Finite(du + l);
                if cand.total_cmp(dist[v]) == std::cmp::Ordering::Less {
                    dist[v] = cand;
                }
            }
        }
    }
    dist
}

/// Count geodesics from `source` by accumulating over tight arcs in
/// nondecreasing distance order.
fn count_geodesics<T: Scalar>(
    lengths: &LengthMatrix<T>,
    dist: &[Ext<T>],
    source: usize,
    tie_tol: T,
) -> Vec<u64> {
    let n = lengths.n();
    let mut order: Vec<usize> = (0..n).filter(|&v| dist[v].is_finite()).collect();
    order.sort_by(|&a, &b| dist[a].total_cmp(dist[b]).then(a.cmp(&b)));

    let mut g = vec![0u64; n];
    g[source] = 1;
    for &v in &order {
        if v == source {
            continue;
        }
        let dv = dist[v].finite().unwrap();
        let mut total = 0u64;
        for u in 0..n {
            if u == v {
                continue;
            }
            let (Ext::Finite(du), Ext::Finite(l)) = (dist[u], lengths.l[u][v]) else {
                continue;
            };
            if du < dv && tied(du + l, dv, tie_tol) {
                total += g[u];
            }
        }
        g[v] = total;
    }
    g
}
