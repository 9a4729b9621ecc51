//! Independent brute-force oracles: exhaustive simple-path enumeration,
//! deletion-search connectivity and subset-enumeration cliques.
//!
//! Everything here is deliberately written from scratch against the
//! definitions, sharing no machinery with the fast implementations it checks.
//! Only practical for small rosters (N <= 8 for paths, N <= 11 for cliques).

use crate::ext::Ext;
use crate::geodesics::{tied, DistanceMatrix, PathCountResult};
use crate::net_model::{BinaryAdjacency, LengthMatrix, PassingNetwork, Player, Position, Role};
use crate::scalar::Scalar;

/// Enumerate every simple path between every ordered pair and count
/// geodesics under the same tie rule as the fast path.
pub fn geodesics_exhaustive<T: Scalar>(
    lengths: &LengthMatrix<T>,
    tie_tol: T,
) -> PathCountResult<T> {
    let n = lengths.n();
    let mut d = vec![vec![Ext::Infinite; n]; n];
    let mut g = vec![vec![0u64; n]; n];
    let mut n_through = vec![vec![vec![0u64; n]; n]; n];

    for source in 0..n {
        // (target, length, interior nodes) for every simple path from source
        let mut paths: Vec<Vec<(T, Vec<usize>)>> = vec![vec![]; n];
        let mut visited = vec![false; n];
        visited[source] = true;
        let mut trail: Vec<usize> = vec![];
        dfs(lengths, source, T::zero(), &mut visited, &mut trail, &mut paths);

        for target in 0..n {
            if target == source {
                d[source][target] = Ext::zero();
                g[source][target] = 1;
                continue;
            }
            let all = &paths[target];
            let Some(min) = all
                .iter()
                .map(|(len, _)| *len)
                .fold(None::<T>, |m, v| Some(m.map_or(v, |m| m.min(v))))
            else {
                continue;
            };
            d[source][target] = Ext::Finite(min);
            for (len, interior) in all {
                if tied(*len, min, tie_tol) {
                    g[source][target] += 1;
                    for &i in interior {
                        n_through[i][source][target] += 1;
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

fn dfs<T: Scalar>(
    lengths: &LengthMatrix<T>,
    at: usize,
    len: T,
    visited: &mut [bool],
    trail: &mut Vec<usize>,
    paths: &mut [Vec<(T, Vec<usize>)>],
) {
    let n = lengths.n();
    for next in 0..n {
        if visited[next] {
            continue;
        }
        if let Ext::Finite(l) = lengths.l[at][next] {
            paths[next].push((len + l, trail.clone()));
            visited[next] = true;
            trail.push(next);
            dfs(lengths, next, len + l, visited, trail, paths);
            trail.pop();
            visited[next] = false;
        }
    }
}

/// Betweenness evaluated directly from the exhaustive counts.
pub fn betweenness_exhaustive<T: Scalar>(lengths: &LengthMatrix<T>, tie_tol: T) -> Vec<T> {
    let n = lengths.n();
    let pc = geodesics_exhaustive(lengths, tie_tol);
    let norm = T::one() / T::from_usize((n - 1) * (n - 2)).unwrap();
    (0..n)
        .map(|i| {
            let mut sum = T::zero();
            for j in 0..n {
                for k in 0..n {
                    if j != k && j != i && k != i && pc.g[j][k] > 0 {
                        sum = sum
                            + T::from_u64(pc.n_through[i][j][k]).unwrap()
                                / T::from_u64(pc.g[j][k]).unwrap();
                    }
                }
            }
            norm * sum
        })
        .collect()
}

fn strongly_connected(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    (0..n).all(|s| {
        let mut seen = vec![false; n];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if adj[u][v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.iter().all(|&x| x)
    })
}

fn connected_skipping(adj: &[Vec<bool>], removed: &[bool]) -> bool {
    let n = adj.len();
    let alive: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    if alive.len() <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![alive[0]];
    seen[alive[0]] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if (adj[u][v] || adj[v][u]) && !removed[v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    alive.into_iter().all(|v| seen[v])
}

/// Smallest set of arcs (directed) or edges (undirected) of size <= `max_size`
/// whose removal breaks strong connectivity / connectivity. `Some(0)` means
/// already disconnected; `None` means no such set up to the limit.
pub fn min_disconnecting_edges(
    eps: &BinaryAdjacency,
    directed: bool,
    max_size: usize,
) -> Option<usize> {
    let n = eps.n();
    let mut adj = vec![vec![false; n]; n];
    let mut edges: Vec<(usize, usize)> = vec![];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if directed {
                adj[i][j] = eps.eps[i][j];
                if eps.eps[i][j] {
                    edges.push((i, j));
                }
            } else {
                adj[i][j] = eps.eps[i][j] || eps.eps[j][i];
                if i < j && adj[i][j] {
                    edges.push((i, j));
                }
            }
        }
    }
    let disconnected = |adj: &Vec<Vec<bool>>| {
        if directed {
            !strongly_connected(adj)
        } else {
            !connected_skipping(adj, &vec![false; n])
        }
    };
    for size in 0..=max_size.min(edges.len()) {
        if search_edge_subsets(&mut adj, &edges, 0, size, &disconnected, !directed) {
            return Some(size);
        }
    }
    None
}

fn search_edge_subsets(
    adj: &mut Vec<Vec<bool>>,
    edges: &[(usize, usize)],
    start: usize,
    size: usize,
    disconnected: &impl Fn(&Vec<Vec<bool>>) -> bool,
    symmetric: bool,
) -> bool {
    if size == 0 {
        return disconnected(adj);
    }
    for e in start..edges.len() {
        let (a, b) = edges[e];
        adj[a][b] = false;
        if symmetric {
            adj[b][a] = false;
        }
        let hit = search_edge_subsets(adj, edges, e + 1, size - 1, disconnected, symmetric);
        adj[a][b] = true;
        if symmetric {
            adj[b][a] = true;
        }
        if hit {
            return true;
        }
    }
    false
}

/// Smallest node set of size <= `max_size` whose deletion disconnects the
/// symmetrized graph; `None` when no such set exists up to the limit.
pub fn min_disconnecting_nodes(eps: &BinaryAdjacency, max_size: usize) -> Option<usize> {
    let n = eps.n();
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                adj[i][j] = eps.eps[i][j] || eps.eps[j][i];
            }
        }
    }
    for size in 0..=max_size.min(n.saturating_sub(2)) {
        let mut removed = vec![false; n];
        if search_node_subsets(&adj, &mut removed, 0, size) {
            return Some(size);
        }
    }
    None
}

fn search_node_subsets(adj: &[Vec<bool>], removed: &mut Vec<bool>, start: usize, size: usize) -> bool {
    if size == 0 {
        let alive = removed.iter().filter(|&&r| !r).count();
        return alive >= 2 && !connected_skipping(adj, removed);
    }
    for v in start..adj.len() {
        removed[v] = true;
        let hit = search_node_subsets(adj, removed, v + 1, size - 1);
        removed[v] = false;
        if hit {
            return true;
        }
    }
    false
}

/// Maximum clique size by subset enumeration on the OR-symmetrized graph.
pub fn max_clique_size_exhaustive(eps: &BinaryAdjacency) -> usize {
    let n = eps.n();
    assert!(n <= 20, "subset enumeration limited to small rosters");
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                adj[i][j] = eps.eps[i][j] || eps.eps[j][i];
            }
        }
    }
    let mut best = 0usize;
    for mask in 1u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if members.len() <= best {
            continue;
        }
        let ok = members
            .iter()
            .enumerate()
            .all(|(ai, &a)| members[ai + 1..].iter().all(|&b| adj[a][b]));
        if ok {
            best = members.len();
        }
    }
    best
}

/// Deterministic splitmix64 stream; enough randomness for test graphs and
/// keeps the oracle free of external RNG dependencies.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform integer in 1..=max.
    pub fn next_weight(&mut self, max: u64) -> u64 {
        1 + self.next_u64() % max
    }
}

/// Random digraph as a single-game passing network: each ordered pair gets an
/// arc with probability `edge_prob` and an integer weight in 1..=max_weight.
pub fn random_network(seed: u64, n: usize, edge_prob: f64, max_weight: u64) -> PassingNetwork<f64> {
    let mut rng = SplitMix64::new(seed.wrapping_mul(0x5851f42d4c957f2d).wrapping_add(1));
    let mut a = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.next_f64() < edge_prob {
                a[i][j] = rng.next_weight(max_weight) as f64;
            }
        }
    }
    let players = (0..n)
        .map(|i| Player {
            id: i,
            name: format!("P{i}"),
            role: Role::Unknown,
            position: Position {
                x: (i as f64 + 0.5) / n as f64,
                y: 0.5,
            },
        })
        .collect();
    PassingNetwork {
        team_name: format!("random-{seed}"),
        players,
        a,
    }
}
