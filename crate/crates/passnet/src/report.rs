//! Presentation layer: team summary rows, player score tables and the
//! pitch-diagram SVG.

use crate::centrality::PlayerScores;
use crate::cohesion::{ClusteringScores, CohesionSummary};
use crate::config::RenderStyle;
use crate::error::{Error, Result};
use crate::net_model::{PassingNetwork, Player};
use crate::scalar::Scalar;

/// One summary row: total passes, connectivities, average clustering and
/// betweenness (as percentages), largest clique size.
#[derive(Debug, Clone, PartialEq)]
pub struct TeamSummary {
    pub team: String,
    pub total_passes: f64,
    pub edge_connectivity: usize,
    pub edge_connectivity_undirected: usize,
    pub avg_clustering_pct: f64,
    pub avg_betweenness_pct: f64,
    pub clique_size: usize,
}

/// One player-table row; column order is closeness, betweenness, pagerank,
/// clustering, with betweenness and clustering as percentages.
#[derive(Debug, Clone, PartialEq)]
pub struct PlayerScoreRow {
    pub name: String,
    pub closeness: f64,
    pub betweenness_pct: f64,
    pub pagerank: f64,
    pub clustering_pct: f64,
}

pub fn team_summary<T: Scalar>(
    net: &PassingNetwork<T>,
    scores: &PlayerScores<T>,
    cohesion: &CohesionSummary<T>,
) -> TeamSummary {
    let n = net.n_players() as f64;
    let to = |v: T| v.to_f64().unwrap();
    let mean_b: f64 = scores.betweenness.iter().map(|&b| to(b)).sum::<f64>() / n;
    TeamSummary {
        team: net.team_name.clone(),
        total_passes: to(net.total_passes()),
        edge_connectivity: cohesion.edge_connectivity,
        edge_connectivity_undirected: cohesion.edge_connectivity_undirected,
        avg_clustering_pct: 100.0 * to(cohesion.clustering.team_average),
        avg_betweenness_pct: 100.0 * mean_b,
        clique_size: cohesion.max_clique.len(),
    }
}

pub fn player_table<T: Scalar>(
    net: &PassingNetwork<T>,
    scores: &PlayerScores<T>,
    clustering: &ClusteringScores<T>,
) -> Vec<PlayerScoreRow> {
    let to = |v: T| v.to_f64().unwrap();
    net.players
        .iter()
        .enumerate()
        .map(|(i, p)| PlayerScoreRow {
            name: p.name.clone(),
            closeness: to(scores.closeness[i]),
            betweenness_pct: 100.0 * to(scores.betweenness[i]),
            pagerank: to(scores.pagerank[i]),
            clustering_pct: 100.0 * to(clustering.per_player[i]),
        })
        .collect()
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Fixed one-decimal rendering with a trailing ".0" trimmed, so whole team
/// totals print as integers.
fn fmt_trim(v: f64) -> String {
    let s = format!("{:.1}", v);
    s.strip_suffix(".0").map(str::to_string).unwrap_or(s)
}

pub fn summary_csv(rows: &[TeamSummary]) -> String {
    let mut out = String::from("Team,P,k,k_u,clustering,betweenness,clique\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.1},{:.1},{}\n",
            csv_field(&r.team),
            fmt_trim(r.total_passes),
            r.edge_connectivity,
            r.edge_connectivity_undirected,
            r.avg_clustering_pct,
            r.avg_betweenness_pct,
            r.clique_size,
        ));
    }
    out
}

/// Serialize the player table; the two highest values per column carry a `*`
/// marker, ties sharing it, compared at the printed precision.
pub fn player_table_csv(rows: &[PlayerScoreRow]) -> String {
    let columns: [&dyn Fn(&PlayerScoreRow) -> f64; 4] = [
        &|r| r.closeness,
        &|r| r.betweenness_pct,
        &|r| r.pagerank,
        &|r| r.clustering_pct,
    ];
    // rounded to output precision before ranking, so displayed ties share markers
    let rounded = |v: f64| (v * 100.0).round() as i64;
    let thresholds: Vec<i64> = columns
        .iter()
        .map(|col| {
            let mut vals: Vec<i64> = rows.iter().map(|r| rounded(col(r))).collect();
            vals.sort_unstable_by(|a, b| b.cmp(a));
            vals[1.min(vals.len() - 1)]
        })
        .collect();
    let cell = |v: f64, threshold: i64| {
        if rounded(v) >= threshold {
            format!("{:.2}*", v)
        } else {
            format!("{:.2}", v)
        }
    };
    let mut out = String::from("Player,closeness,betweenness,pagerank,clustering\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            csv_field(&r.name),
            cell(r.closeness, thresholds[0]),
            cell(r.betweenness_pct, thresholds[1]),
            cell(r.pagerank, thresholds[2]),
            cell(r.clustering_pct, thresholds[3]),
        ));
    }
    out
}

const NODE_RADIUS: f64 = 16.0;
const MARGIN: f64 = 60.0;
const CURVATURE: f64 = 0.12;

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn lerp_color(low: [u8; 3], high: [u8; 3], t: f64) -> String {
    let mix = |a: u8, b: u8| (a as f64 + t * (b as f64 - a as f64)).round() as u8;
    format!(
        "#{:02x}{:02x}{:02x}",
        mix(low[0], high[0]),
        mix(low[1], high[1]),
        mix(low[2], high[2])
    )
}

/// Standalone SVG pitch diagram: a pitch rectangle with midline, one labeled
/// circle per player at the affine-mapped formation position, and one curved
/// arrow per nonzero weight. Mutual pairs bow to opposite sides.
pub fn render_pitch_diagram<T: Scalar>(
    net: &PassingNetwork<T>,
    width: u32,
    height: u32,
    style: &RenderStyle,
    provenance: Option<&str>,
) -> Result<String> {
    let bad: Vec<String> = net
        .players
        .iter()
        .filter(|p| !(p.position.x.is_finite() && p.position.y.is_finite()))
        .map(|p| p.name.clone())
        .collect();
    if !bad.is_empty() {
        return Err(Error::Render { names: bad });
    }

    let (w, h) = (width as f64, height as f64);
    let place = |p: &Player| {
        (
            MARGIN + p.position.x * (w - 2.0 * MARGIN),
            MARGIN + (1.0 - p.position.y) * (h - 2.0 * MARGIN),
        )
    };
    let max_a = net.max_weight().to_f64().unwrap();

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    if let Some(echo) = provenance {
        svg.push_str(&format!("<!-- {} -->\n", xml_escape(echo)));
    }
    svg.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#2e6b34\"/>\n"
    ));
    svg.push_str(&format!(
        "<rect x=\"{m}\" y=\"{m}\" width=\"{:.1}\" height=\"{:.1}\" fill=\"#3a7d42\" stroke=\"#e8e8e8\" stroke-width=\"3\"/>\n",
        w - 2.0 * MARGIN,
        h - 2.0 * MARGIN,
        m = MARGIN
    ));
    svg.push_str(&format!(
        "<line x1=\"{:.1}\" y1=\"{m}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#e8e8e8\" stroke-width=\"3\"/>\n",
        w / 2.0,
        w / 2.0,
        h - MARGIN,
        m = MARGIN
    ));

    // arrows beneath the nodes, in row-major weight-matrix order
    for i in 0..net.n_players() {
        for j in 0..net.n_players() {
            let a = net.a[i][j].to_f64().unwrap();
            if i == j || a <= 0.0 {
                continue;
            }
            let ratio = if max_a > 0.0 { a / max_a } else { 0.0 };
            let stroke = style.stroke_min + ratio * (style.stroke_max - style.stroke_min);
            let color = lerp_color(style.color_low, style.color_high, ratio);
            let (x1, y1) = place(&net.players[i]);
            let (x2, y2) = place(&net.players[j]);
            let (dx, dy) = (x2 - x1, y2 - y1);
            let dist = (dx * dx + dy * dy).sqrt().max(1.0);
            // perpendicular-left of travel, so opposite directions bow apart
            let (px, py) = (-dy / dist, dx / dist);
            let bow = CURVATURE * dist;
            let (cx, cy) = ((x1 + x2) / 2.0 + px * bow, (y1 + y2) / 2.0 + py * bow);
            let trim = |from: (f64, f64), toward: (f64, f64), by: f64| {
                let (vx, vy) = (toward.0 - from.0, toward.1 - from.1);
                let len = (vx * vx + vy * vy).sqrt().max(1.0);
                (from.0 + vx / len * by, from.1 + vy / len * by)
            };
            let head_len = 6.0 + stroke;
            let start = trim((x1, y1), (cx, cy), NODE_RADIUS);
            let tip = trim((x2, y2), (cx, cy), NODE_RADIUS);
            let base = trim(tip, (cx, cy), head_len);
            svg.push_str(&format!(
                "<path d=\"M {:.1} {:.1} Q {:.1} {:.1} {:.1} {:.1}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{stroke:.2}\"/>\n",
                start.0, start.1, cx, cy, base.0, base.1
            ));
            let (hx, hy) = (tip.0 - base.0, tip.1 - base.1);
            let hw = head_len / 2.0;
            let hlen = (hx * hx + hy * hy).sqrt().max(1.0);
            let (nx, ny) = (-hy / hlen, hx / hlen);
            svg.push_str(&format!(
                "<polygon points=\"{:.1},{:.1} {:.1},{:.1} {:.1},{:.1}\" fill=\"{color}\"/>\n",
                tip.0,
                tip.1,
                base.0 + nx * hw,
                base.1 + ny * hw,
                base.0 - nx * hw,
                base.1 - ny * hw
            ));
        }
    }

    for p in &net.players {
        let (x, y) = place(p);
        svg.push_str(&format!(
            "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"{NODE_RADIUS}\" fill=\"#f4f4f4\" stroke=\"#1c1c1c\" stroke-width=\"2\"/>\n"
        ));
        svg.push_str(&format!(
            "<text x=\"{x:.1}\" y=\"{:.1}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#ffffff\">{}</text>\n",
            y + NODE_RADIUS + 16.0,
            xml_escape(&p.name)
        ));
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
