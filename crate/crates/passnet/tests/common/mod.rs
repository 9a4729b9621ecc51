// Not every test target uses every helper.
#![allow(dead_code)]

use std::path::PathBuf;

use passnet::net_model::{build_network, PassingNetwork, Player, Position, Role, TeamRecord};

pub fn placeholder_players(n: usize) -> Vec<Player> {
    (0..n)
        .map(|i| Player {
            id: i,
            name: format!("P{i}"),
            role: Role::Unknown,
            position: Position {
                x: (i as f64 + 0.5) / n as f64,
                y: 0.5,
            },
        })
        .collect()
}

pub fn net_from_counts(rows: Vec<Vec<u64>>) -> PassingNetwork<f64> {
    let n = rows.len();
    build_network(&TeamRecord::new("test", placeholder_players(n), rows, 1).unwrap())
}

/// 0 -> 1 (weight 4), 1 -> 2 (weight 2), 0 -> 2 (weight 1).
pub fn chain3() -> PassingNetwork<f64> {
    net_from_counts(vec![vec![0, 4, 1], vec![0, 0, 2], vec![0, 0, 0]])
}

pub fn complete_uniform(n: usize, w: u64) -> PassingNetwork<f64> {
    net_from_counts(
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { 0 } else { w }).collect())
            .collect(),
    )
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/goldens")
        .join(name)
}

/// The 200 random digraphs shared by several acceptance criteria:
/// N cycles through 3..=8, edge probability 0.5, weights 1..=5.
pub fn acceptance_graphs() -> Vec<PassingNetwork<f64>> {
    (0..200)
        .map(|seed| passnet::bruteforce::random_network(seed, 3 + (seed as usize % 6), 0.5, 5))
        .collect()
}
