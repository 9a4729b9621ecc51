//! Weighted, directed passing networks for football teams.
//!
//! Builds per-game averaged passing networks from aggregate team data and
//! computes the team- and player-level invariants used to characterize play:
//! closeness, betweenness and pagerank centrality, weighted clustering,
//! maximum cliques and edge/node connectivity, plus CSV summaries and SVG
//! pitch diagrams.
//!
//! All numeric machinery is generic over the scalar type ([`Scalar`]:
//! `f32` or `f64`); the aliases below fix the common `f64` instantiations.

pub mod analysis;
pub mod bruteforce;
pub mod centrality;
pub mod cohesion;
pub mod config;
pub mod error;
pub mod ext;
pub mod geodesics;
pub mod net_model;
pub mod report;
pub mod scalar;

#[cfg(test)]
pub(crate) mod test_support;

pub use config::AnalysisConfig;
pub use error::{Error, Result};
pub use scalar::Scalar;

pub type PassingNetwork32 = net_model::PassingNetwork<f32>;
pub type PassingNetwork64 = net_model::PassingNetwork<f64>;
pub type LengthMatrix64 = net_model::LengthMatrix<f64>;
pub type DistanceMatrix64 = geodesics::DistanceMatrix<f64>;
pub type PathCountResult64 = geodesics::PathCountResult<f64>;
pub type PlayerScores64 = centrality::PlayerScores<f64>;
pub type PagerankParams64 = centrality::PagerankParams<f64>;
pub type CohesionSummary64 = cohesion::CohesionSummary<f64>;
pub type TeamAnalysis64 = analysis::TeamAnalysis<f64>;
