//! Shared fixtures for unit tests.

use crate::net_model::{build_network, PassingNetwork, Player, Position, Role, TeamRecord};

pub(crate) fn placeholder_players(n: usize) -> Vec<Player> {
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

pub(crate) fn record_from_counts(rows: &[&[u64]]) -> TeamRecord {
    let counts: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
    TeamRecord::new("test", placeholder_players(rows.len()), counts, 1).unwrap()
}

pub(crate) fn net_from_counts(rows: &[&[u64]]) -> PassingNetwork<f64> {
    build_network(&record_from_counts(rows))
}

/// 0 -> 1 (weight 4), 1 -> 2 (weight 2), 0 -> 2 (weight 1).
pub(crate) fn chain3_record() -> TeamRecord {
    record_from_counts(&[&[0, 4, 1], &[0, 0, 2], &[0, 0, 0]])
}

pub(crate) fn chain3_net() -> PassingNetwork<f64> {
    build_network(&chain3_record())
}

/// Directed 3-cycle, all arcs weight 2.
pub(crate) fn cycle3_net() -> PassingNetwork<f64> {
    net_from_counts(&[&[0, 2, 0], &[0, 0, 2], &[2, 0, 0]])
}

pub(crate) fn complete_uniform_record(n: usize, w: u64) -> TeamRecord {
    let counts: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 0 } else { w }).collect())
        .collect();
    TeamRecord::new(format!("K{n}"), placeholder_players(n), counts, 1).unwrap()
}

pub(crate) fn complete_uniform(n: usize, w: u64) -> PassingNetwork<f64> {
    build_network(&complete_uniform_record(n, w))
}
