//! Domain types and fixture ingestion: team records, per-game averaged
//! passing networks, binary adjacency and arrow lengths.

use std::io::Read;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::ext::Ext;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Goalkeeper,
    Defender,
    Midfielder,
    Forward,
    Unknown,
}

/// Normalized formation coordinates in the unit square.
/// `x` runs defensive goal → attacking goal, `y` right touchline → left.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Position {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Player {
    pub id: usize,
    pub name: String,
    pub role: Role,
    pub position: Position,
}

/// Raw aggregate input: roster, formation, total pass counts over all games.
#[derive(Debug, Clone)]
pub struct TeamRecord {
    pub team_name: String,
    pub players: Vec<Player>,
    /// Entry (i, j) = total successful passes i → j across all games,
    /// indexed by roster order.
    pub aggregate_passes: Vec<Vec<u64>>,
    pub games_played: u32,
}

/// The weighted directed passing network: entry `a[i][j]` is the average
/// number of successful passes per game from player i to player j.
#[derive(Debug, Clone)]
pub struct PassingNetwork<T> {
    pub team_name: String,
    pub players: Vec<Player>,
    pub a: Vec<Vec<T>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryAdjacency {
    pub eps: Vec<Vec<bool>>,
}

/// Arrow lengths: `l[i][j] = 1 / a[i][j]`, infinite where there is no arrow.
#[derive(Debug, Clone)]
pub struct LengthMatrix<T> {
    pub l: Vec<Vec<Ext<T>>>,
}

#[derive(Debug, Deserialize)]
struct FixturePlayer {
    id: u64,
    name: String,
    role: Role,
    x: f64,
    y: f64,
}

#[derive(Debug, Deserialize)]
struct Fixture {
    team: String,
    games: i64,
    players: Vec<FixturePlayer>,
    passes: Vec<Vec<i64>>,
}

impl TeamRecord {
    /// Validating constructor; all fixture ingestion funnels through here.
    pub fn new(
        team_name: impl Into<String>,
        players: Vec<Player>,
        aggregate_passes: Vec<Vec<u64>>,
        games_played: u32,
    ) -> Result<Self> {
        let record = TeamRecord {
            team_name: team_name.into(),
            players,
            aggregate_passes,
            games_played,
        };
        record.validate()?;
        Ok(record)
    }

    fn validate(&self) -> Result<()> {
        let n = self.players.len();
        if n == 0 {
            return Err(Error::validation("players", "roster is empty"));
        }
        if self.games_played < 1 {
            return Err(Error::validation("games", "games_played must be >= 1"));
        }
        let mut seen = vec![false; n];
        for (idx, p) in self.players.iter().enumerate() {
            if p.id >= n || seen[p.id] {
                return Err(Error::validation(
                    format!("players[{idx}].id"),
                    format!("ids must be distinct and form 0..{n}"),
                ));
            }
            seen[p.id] = true;
            let ok = |c: f64| (0.0..=1.0).contains(&c);
            if !ok(p.position.x) || !ok(p.position.y) {
                return Err(Error::validation(
                    format!("players[{idx}].position"),
                    "coordinates must lie in [0,1]x[0,1]",
                ));
            }
        }
        if self.aggregate_passes.len() != n {
            return Err(Error::validation(
                "passes",
                format!(
                    "non-square: {} rows for {} players",
                    self.aggregate_passes.len(),
                    n
                ),
            ));
        }
        for (i, row) in self.aggregate_passes.iter().enumerate() {
            if row.len() != n {
                return Err(Error::validation(
                    format!("passes[{i}]"),
                    format!("non-square: row has {} columns, expected {}", row.len(), n),
                ));
            }
            if row[i] != 0 {
                return Err(Error::validation(
                    format!("passes[{i}][{i}]"),
                    "self-pass: diagonal entries must be 0",
                ));
            }
        }
        Ok(())
    }

    pub fn n_players(&self) -> usize {
        self.players.len()
    }
}

/// Parse and validate a JSON fixture.
pub fn load_team_record(mut source: impl Read) -> Result<TeamRecord> {
    let mut buf = String::new();
    source.read_to_string(&mut buf)?;
    let fixture: Fixture = serde_json::from_str(&buf).map_err(|e| Error::Parse {
        field: "fixture".into(),
        message: e.to_string(),
    })?;
    if fixture.games < 1 {
        return Err(Error::validation("games", "games must be >= 1"));
    }
    let players = fixture
        .players
        .into_iter()
        .map(|p| Player {
            id: p.id as usize,
            name: p.name,
            role: p.role,
            position: Position { x: p.x, y: p.y },
        })
        .collect();
    let mut passes = Vec::with_capacity(fixture.passes.len());
    for (i, row) in fixture.passes.into_iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (j, v) in row.into_iter().enumerate() {
            if v < 0 {
                return Err(Error::validation(
                    format!("passes[{i}][{j}]"),
                    "pass counts must be non-negative",
                ));
            }
            out.push(v as u64);
        }
        passes.push(out);
    }
    TeamRecord::new(fixture.team, players, passes, fixture.games as u32)
}

/// Average the aggregate counts over the number of games played.
pub fn build_network<T: Scalar>(record: &TeamRecord) -> PassingNetwork<T> {
    let games = T::from_u32(record.games_played).unwrap();
    let a = record
        .aggregate_passes
        .iter()
        .map(|row| {
            row.iter()
                .map(|&c| T::from_u64(c).unwrap() / games)
                .collect()
        })
        .collect();
    PassingNetwork {
        team_name: record.team_name.clone(),
        players: record.players.clone(),
        a,
    }
}

impl<T: Scalar> PassingNetwork<T> {
    pub fn n_players(&self) -> usize {
        self.players.len()
    }

    /// Total average passes per game (the P column of the team summary).
    pub fn total_passes(&self) -> T {
        self.a.iter().flatten().copied().sum()
    }

    /// Largest single entry of the weight matrix.
    pub fn max_weight(&self) -> T {
        self.a
            .iter()
            .flatten()
            .copied()
            .fold(T::zero(), |m, v| m.max(v))
    }
}

pub fn binary_adjacency<T: Scalar>(net: &PassingNetwork<T>) -> BinaryAdjacency {
    let eps = net
        .a
        .iter()
        .map(|row| row.iter().map(|&v| v > T::zero()).collect())
        .collect();
    BinaryAdjacency { eps }
}

impl BinaryAdjacency {
    pub fn n(&self) -> usize {
        self.eps.len()
    }

    /// Out-degree of node i (the clustering formula's u_i).
    pub fn out_degree(&self, i: usize) -> usize {
        self.eps[i].iter().filter(|&&e| e).count()
    }
}

pub fn arrow_lengths<T: Scalar>(net: &PassingNetwork<T>) -> LengthMatrix<T> {
    let l = net
        .a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &w)| {
                    if i == j {
                        Ext::zero()
                    } else if w > T::zero() {
                        Ext::Finite(T::one() / w)
                    } else {
                        Ext::Infinite
                    }
                })
                .collect()
        })
        .collect();
    LengthMatrix { l }
}

impl<T: Scalar> LengthMatrix<T> {
    pub fn n(&self) -> usize {
        self.l.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn placeholder_players(n: usize) -> Vec<Player> {
        (0..n)
            .map(|i| Player {
                id: i,
                name: format!("P{i}"),
                role: Role::Unknown,
                position: Position { x: 0.5, y: 0.5 },
            })
            .collect()
    }

    fn chain3_record() -> TeamRecord {
        TeamRecord::new(
            "Chain3",
            placeholder_players(3),
            vec![vec![0, 4, 1], vec![0, 0, 2], vec![0, 0, 0]],
            1,
        )
        .unwrap()
    }

    #[test]
    fn loads_valid_fixture() {
        let json = r#"{
            "team": "Tiny", "games": 1,
            "players": [
                {"id": 0, "name": "A", "role": "goalkeeper", "x": 0.1, "y": 0.5},
                {"id": 1, "name": "B", "role": "midfielder", "x": 0.5, "y": 0.5},
                {"id": 2, "name": "C", "role": "forward", "x": 0.9, "y": 0.5}
            ],
            "passes": [[0,4,1],[0,0,2],[0,0,0]]
        }"#;
        let record = load_team_record(json.as_bytes()).unwrap();
        assert_eq!(record.n_players(), 3);
        assert_eq!(record.aggregate_passes[0][1], 4);
    }

    #[test]
    fn rejects_self_pass() {
        let err = TeamRecord::new(
            "bad",
            placeholder_players(2),
            vec![vec![0, 1], vec![2, 5]],
            1,
        )
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("passes[1][1]"), "{msg}");
        assert!(msg.contains("self-pass"), "{msg}");
    }

    #[test]
    fn rejects_non_square_matrix() {
        let err = TeamRecord::new(
            "bad",
            placeholder_players(2),
            vec![vec![0, 1, 2], vec![3, 0, 4]],
            1,
        )
        .unwrap_err();
        assert!(err.to_string().contains("non-square"), "{err}");
    }

    #[test]
    fn rejects_zero_games() {
        let err = TeamRecord::new(
            "bad",
            placeholder_players(2),
            vec![vec![0, 1], vec![1, 0]],
            0,
        )
        .unwrap_err();
        assert!(err.to_string().contains("games"), "{err}");
    }

    #[test]
    fn rejects_malformed_json() {
        let err = load_team_record("{not json".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn averaging_divides_by_games() {
        let record = TeamRecord::new(
            "avg",
            placeholder_players(2),
            vec![vec![0, 12], vec![3, 0]],
            3,
        )
        .unwrap();
        let net: PassingNetwork<f64> = build_network(&record);
        assert_eq!(net.a[0][1], 4.0);
        assert_eq!(net.a[1][0], 1.0);
    }

    #[test]
    fn one_game_is_identity() {
        let net: PassingNetwork<f64> = build_network(&chain3_record());
        assert_eq!(net.a, vec![vec![0.0, 4.0, 1.0], vec![0.0, 0.0, 2.0], vec![0.0; 3]]);
        assert_eq!(net.total_passes(), 7.0);
    }

    #[test]
    fn binary_adjacency_thresholds_at_zero() {
        let net: PassingNetwork<f64> = build_network(&chain3_record());
        let eps = binary_adjacency(&net);
        assert_eq!(
            eps.eps,
            vec![
                vec![false, true, true],
                vec![false, false, true],
                vec![false, false, false]
            ]
        );
        // fractional weights still count
        let record = TeamRecord::new(
            "frac",
            placeholder_players(2),
            vec![vec![0, 1], vec![0, 0]],
            4,
        )
        .unwrap();
        let net: PassingNetwork<f64> = build_network(&record);
        assert_eq!(net.a[0][1], 0.25);
        assert!(binary_adjacency(&net).eps[0][1]);
    }

    #[test]
    fn lengths_are_reciprocals_with_infinite_gaps() {
        let net: PassingNetwork<f64> = build_network(&chain3_record());
        let lengths = arrow_lengths(&net);
        assert_eq!(lengths.l[0][1], Ext::Finite(0.25));
        assert_eq!(lengths.l[1][0], Ext::Infinite);
        assert_eq!(lengths.l[0][0], Ext::zero());
        assert_eq!(lengths.l[2][2], Ext::zero());
    }

    #[test]
    fn finite_lengths_exactly_where_adjacent() {
        let net: PassingNetwork<f64> = build_network(&chain3_record());
        let eps = binary_adjacency(&net);
        let lengths = arrow_lengths(&net);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(lengths.l[i][j].is_finite(), eps.eps[i][j]);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn averaging_round_trips(games in 1u32..20, counts in proptest::collection::vec(0u64..500, 6)) {
            let agg = vec![
                vec![0, counts[0], counts[1]],
                vec![counts[2], 0, counts[3]],
                vec![counts[4], counts[5], 0],
            ];
            let record = TeamRecord::new("rt", placeholder_players(3), agg.clone(), games).unwrap();
            let net: PassingNetwork<f64> = build_network(&record);
            for i in 0..3 {
                for j in 0..3 {
                    // scaling back recovers the integer count (to rounding)
                    let back = net.a[i][j] * games as f64;
                    prop_assert_eq!(back.round() as u64, agg[i][j]);
                    prop_assert!((back - agg[i][j] as f64).abs() <= 1e-9 * (agg[i][j] as f64).max(1.0));
                }
            }
        }

        #[test]
        fn total_passes_permutation_invariant(counts in proptest::collection::vec(0u64..100, 12), games in 1u32..5) {
            // 4 players, permute roster order
            let mut agg = vec![vec![0u64; 4]; 4];
            let mut it = counts.iter();
            for i in 0..4 {
                for j in 0..4 {
                    if i != j {
                        agg[i][j] = *it.next().unwrap();
                    }
                }
            }
            let perm = [2usize, 0, 3, 1];
            let mut permuted = vec![vec![0u64; 4]; 4];
            for i in 0..4 {
                for j in 0..4 {
                    permuted[i][j] = agg[perm[i]][perm[j]];
                }
            }
            let a = TeamRecord::new("a", placeholder_players(4), agg, games).unwrap();
            let b = TeamRecord::new("b", placeholder_players(4), permuted, games).unwrap();
            let na: PassingNetwork<f64> = build_network(&a);
            let nb: PassingNetwork<f64> = build_network(&b);
            let (pa, pb) = (na.total_passes(), nb.total_passes());
            prop_assert!((pa - pb).abs() <= 1e-12 * pa.max(1.0), "{pa} vs {pb}");
        }
    }
}
