//! One-call driver: record → network → geodesics → scores → cohesion.

use crate::centrality::{betweenness, closeness, closeness_weighted, pagerank, PagerankParams, PlayerScores};
use crate::cohesion::{cohesion_summary, CohesionSummary};
use crate::config::AnalysisConfig;
use crate::error::Result;
use crate::geodesics::{all_pairs_geodesics, PathCountResult};
use crate::net_model::{arrow_lengths, build_network, PassingNetwork, TeamRecord};
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct TeamAnalysis<T> {
    pub network: PassingNetwork<T>,
    pub paths: PathCountResult<T>,
    pub scores: PlayerScores<T>,
    pub cohesion: CohesionSummary<T>,
}

pub fn analyze_record<T: Scalar>(
    record: &TeamRecord,
    cfg: &AnalysisConfig,
) -> Result<TeamAnalysis<T>> {
    let network = build_network::<T>(record);
    analyze_network(network, cfg)
}

pub fn analyze_network<T: Scalar>(
    network: PassingNetwork<T>,
    cfg: &AnalysisConfig,
) -> Result<TeamAnalysis<T>> {
    let from = |v: f64| T::from_f64(v).unwrap();
    let paths = all_pairs_geodesics(&arrow_lengths(&network), from(cfg.tie_tol));
    let params = PagerankParams {
        p: from(cfg.pagerank_p),
        q: from(cfg.pagerank_q),
        tol: from(cfg.pagerank_tol),
        max_iter: cfg.pagerank_max_iter,
    };
    let scores = PlayerScores {
        closeness: closeness(&paths.d)?,
        closeness_weighted: closeness_weighted(&paths.d, from(cfg.closeness_weight))?,
        betweenness: betweenness(&paths)?,
        pagerank: pagerank(&network, &params)?,
    };
    let cohesion = cohesion_summary(&network, cfg.clustering_variant, cfg.clique_projection)?;
    Ok(TeamAnalysis {
        network,
        paths,
        scores,
        cohesion,
    })
}
