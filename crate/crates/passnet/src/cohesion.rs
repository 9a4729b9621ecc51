//! Team cohesion invariants: weighted clustering, maximal clique, edge and
//! node connectivity.

use crate::error::{Error, Result};
use crate::net_model::{BinaryAdjacency, PassingNetwork};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClusteringVariant {
    /// Index pattern A_ij * A_kj * A_ki, as printed in the source formula.
    #[default]
    Paper,
    /// Standard transitivity pattern A_ij * A_jk * A_ki.
    Onnela,
}

/// Clique adjacency projection: is an unordered pair linked?
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CliqueProjection {
    /// Linked when at least one direction has an arrow.
    #[default]
    Or,
    /// Linked only when both directions have arrows.
    And,
}

#[derive(Debug, Clone)]
pub struct ClusteringScores<T> {
    pub per_player: Vec<T>,
    pub team_average: T,
}

#[derive(Debug, Clone)]
pub struct CohesionSummary<T> {
    pub edge_connectivity: usize,
    pub edge_connectivity_undirected: usize,
    pub node_connectivity: usize,
    pub max_clique: Vec<usize>,
    pub clustering: ClusteringScores<T>,
}

/// Weighted clustering c_i^w: cube root of each weight triple, normalized by
/// the largest weight and by u_i(u_i - 1) ordered out-neighbor pairs.
/// Players with out-degree below 2 score 0.
pub fn weighted_clustering<T: Scalar>(
    net: &PassingNetwork<T>,
    variant: ClusteringVariant,
) -> Result<ClusteringScores<T>> {
    let n = net.n_players();
    let max_a = net.max_weight();
    if max_a <= T::zero() {
        return Err(Error::Degenerate("all pass counts are zero (max(A) = 0)".into()));
    }
    let eps = crate::net_model::binary_adjacency(net);
    let per_player: Vec<T> = (0..n)
        .map(|i| {
            let u = eps.out_degree(i);
            if u < 2 {
                return T::zero();
            }
            let mut sum = T::zero();
            for j in 0..n {
                for k in 0..n {
                    if j == k || j == i || k == i {
                        continue;
                    }
                    let triple = match variant {
                        ClusteringVariant::Paper => net.a[i][j] * net.a[k][j] * net.a[k][i],
                        ClusteringVariant::Onnela => net.a[i][j] * net.a[j][k] * net.a[k][i],
                    };
                    sum = sum + triple.cbrt() / max_a;
                }
            }
            sum / T::from_usize(u * (u - 1)).unwrap()
        })
        .collect();
    let team_average = per_player.iter().copied().sum::<T>() / T::from_usize(n).unwrap();
    Ok(ClusteringScores {
        per_player,
        team_average,
    })
}

fn symmetrize(eps: &BinaryAdjacency, projection: CliqueProjection) -> Vec<Vec<bool>> {
    let n = eps.n();
    let mut sym = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sym[i][j] = match projection {
                    CliqueProjection::Or => eps.eps[i][j] || eps.eps[j][i],
                    CliqueProjection::And => eps.eps[i][j] && eps.eps[j][i],
                };
            }
        }
    }
    sym
}

/// Maximum clique on the projected undirected graph. Among maximum cliques,
/// the lexicographically smallest id set is returned.
pub fn max_clique(eps: &BinaryAdjacency, projection: CliqueProjection) -> Vec<usize> {
    let n = eps.n();
    if n == 0 {
        return vec![];
    }
    let adj = symmetrize(eps, projection);
    let mut best: Vec<usize> = vec![];
    let mut current: Vec<usize> = vec![];
    let candidates: Vec<usize> = (0..n).collect();
    let excluded: Vec<usize> = vec![];
    bron_kerbosch(&adj, &mut current, candidates, excluded, &mut best);
    best.sort_unstable();
    best
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    current: &mut Vec<usize>,
    candidates: Vec<usize>,
    excluded: Vec<usize>,
    best: &mut Vec<usize>,
) {
    if candidates.is_empty() && excluded.is_empty() {
        let mut found = current.clone();
        found.sort_unstable();
        if found.len() > best.len() || (found.len() == best.len() && found < *best) {
            *best = found;
        }
        return;
    }
    // pivot on the candidate-or-excluded node covering the most candidates
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .copied()
        .max_by_key(|&u| (candidates.iter().filter(|&&v| adj[u][v]).count(), usize::MAX - u))
        .unwrap();
    let branch: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&v| !adj[pivot][v])
        .collect();
    let mut candidates = candidates;
    let mut excluded = excluded;
    for v in branch {
        current.push(v);
        let next_candidates: Vec<usize> =
            candidates.iter().copied().filter(|&u| adj[v][u]).collect();
        let next_excluded: Vec<usize> = excluded.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, current, next_candidates, next_excluded, best);
        current.pop();
        candidates.retain(|&u| u != v);
        excluded.push(v);
    }
}

/// Minimum directed edge cut over all ordered source/sink pairs, every arrow
/// carrying unit capacity. 0 iff the digraph is not strongly connected.
pub fn edge_connectivity_directed(eps: &BinaryAdjacency) -> Result<usize> {
    let n = eps.n();
    if n < 2 {
        return Err(Error::Domain("edge connectivity needs at least 2 players".into()));
    }
    let cap: Vec<Vec<usize>> = eps
        .eps
        .iter()
        .map(|row| row.iter().map(|&e| usize::from(e)).collect())
        .collect();
    let mut best = usize::MAX;
    for s in 0..n {
        for t in 0..n {
            if s != t {
                best = best.min(max_flow(&cap, s, t));
            }
        }
    }
    Ok(best)
}

/// Minimum edge cut of the OR-symmetrized undirected graph.
pub fn edge_connectivity_undirected(eps: &BinaryAdjacency) -> Result<usize> {
    let n = eps.n();
    if n < 2 {
        return Err(Error::Domain("edge connectivity needs at least 2 players".into()));
    }
    let sym = symmetrize(eps, CliqueProjection::Or);
    let cap: Vec<Vec<usize>> = sym
        .iter()
        .map(|row| row.iter().map(|&e| usize::from(e)).collect())
        .collect();
    let mut best = usize::MAX;
    for t in 1..n {
        best = best.min(max_flow(&cap, 0, t));
    }
    Ok(best)
}

/// Minimum number of node removals disconnecting the symmetrized graph;
/// N - 1 for the complete graph by convention.
pub fn node_connectivity(eps: &BinaryAdjacency) -> Result<usize> {
    let n = eps.n();
    if n < 2 {
        return Err(Error::Domain("node connectivity needs at least 2 players".into()));
    }
    let sym = symmetrize(eps, CliqueProjection::Or);
    let complete = (0..n).all(|i| (0..n).all(|j| i == j || sym[i][j]));
    if complete {
        return Ok(n - 1);
    }
    // split nodes into in/out halves with unit capacity; node u occupies
    // slots 2u (in) and 2u+1 (out)
    let mut best = usize::MAX;
    for s in 0..n {
        for t in 0..n {
            if s == t || sym[s][t] {
                continue;
            }
            let mut cap = vec![vec![0usize; 2 * n]; 2 * n];
            for u in 0..n {
                cap[2 * u][2 * u + 1] = if u == s || u == t { n } else { 1 };
            }
            for u in 0..n {
                for v in 0..n {
                    if sym[u][v] {
                        cap[2 * u + 1][2 * v] = n;
                    }
                }
            }
            best = best.min(max_flow(&cap, 2 * s + 1, 2 * t));
        }
    }
    Ok(best)
}

/// Edmonds-Karp on a dense capacity matrix; deterministic BFS order.
fn max_flow(cap: &[Vec<usize>], s: usize, t: usize) -> usize {
    let n = cap.len();
    let mut residual: Vec<Vec<i64>> = cap
        .iter()
        .map(|row| row.iter().map(|&c| c as i64).collect())
        .collect();
    let mut flow = 0usize;
    loop {
        let mut parent = vec![usize::MAX; n];
        parent[s] = s;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if parent[v] == usize::MAX && residual[u][v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[t] == usize::MAX {
            return flow;
        }
        let mut bottleneck = i64::MAX;
        let mut v = t;
        while v != s {
            let u = parent[v];
            bottleneck = bottleneck.min(residual[u][v]);
            v = u;
        }
        let mut v = t;
        while v != s {
            let u = parent[v];
            residual[u][v] -= bottleneck;
            residual[v][u] += bottleneck;
            v = u;
        }
        flow += bottleneck as usize;
    }
}

/// Bundle every cohesion invariant for one network.
pub fn cohesion_summary<T: Scalar>(
    net: &PassingNetwork<T>,
    variant: ClusteringVariant,
    projection: CliqueProjection,
) -> Result<CohesionSummary<T>> {
    let eps = crate::net_model::binary_adjacency(net);
    Ok(CohesionSummary {
        edge_connectivity: edge_connectivity_directed(&eps)?,
        edge_connectivity_undirected: edge_connectivity_undirected(&eps)?,
        node_connectivity: node_connectivity(&eps)?,
        max_clique: max_clique(&eps, projection),
        clustering: weighted_clustering(net, variant)?,
    })
}
