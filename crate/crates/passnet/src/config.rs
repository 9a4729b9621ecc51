//! Analysis configuration shared by the CLI and the report layer.

use crate::cohesion::{CliqueProjection, ClusteringVariant};

#[derive(Debug, Clone)]
pub struct AnalysisConfig {
    pub pagerank_p: f64,
    pub pagerank_q: f64,
    pub pagerank_tol: f64,
    pub pagerank_max_iter: usize,
    pub closeness_weight: f64,
    pub tie_tol: f64,
    pub clustering_variant: ClusteringVariant,
    pub clique_projection: CliqueProjection,
    pub canvas_width: u32,
    pub canvas_height: u32,
    pub render: RenderStyle,
}

/// Visual encoding of the pitch diagram: stroke-width range and color stops
/// for the pass arrows.
#[derive(Debug, Clone)]
pub struct RenderStyle {
    pub stroke_min: f64,
    pub stroke_max: f64,
    /// Low-weight color stop (muted gray-blue).
    pub color_low: [u8; 3],
    /// High-weight color stop (saturated red).
    pub color_high: [u8; 3],
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            stroke_min: 1.0,
            stroke_max: 8.0,
            color_low: [0x6e, 0x82, 0xa6],
            color_high: [0xd6, 0x2b, 0x2b],
        }
    }
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            pagerank_p: 0.85,
            pagerank_q: 1.0,
            pagerank_tol: 1e-9,
            pagerank_max_iter: 10_000,
            closeness_weight: 0.5,
            tie_tol: 1e-9,
            clustering_variant: ClusteringVariant::Paper,
            clique_projection: CliqueProjection::Or,
            canvas_width: 1200,
            canvas_height: 800,
            render: RenderStyle::default(),
        }
    }
}

impl AnalysisConfig {
    /// One-line provenance echo embedded in every emitted report.
    pub fn echo(&self) -> String {
        let variant = match self.clustering_variant {
            ClusteringVariant::Paper => "paper",
            ClusteringVariant::Onnela => "onnela",
        };
        let projection = match self.clique_projection {
            CliqueProjection::Or => "or",
            CliqueProjection::And => "and",
        };
        format!(
            "p={} q={} tol={:e} max_iter={} w={} tie_tol={:e} clustering={} clique={} canvas={}x{}",
            self.pagerank_p,
            self.pagerank_q,
            self.pagerank_tol,
            self.pagerank_max_iter,
            self.closeness_weight,
            self.tie_tol,
            variant,
            projection,
            self.canvas_width,
            self.canvas_height,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echo_carries_effective_settings() {
        let echo = AnalysisConfig::default().echo();
        assert!(echo.contains("p=0.85"));
        assert!(echo.contains("q=1"));
        assert!(echo.contains("w=0.5"));
        assert!(echo.contains("clustering=paper"));
        assert!(echo.contains("clique=or"));
        assert!(echo.contains("canvas=1200x800"));
    }
}
