use std::fs::File;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use passnet::analysis::{analyze_record, TeamAnalysis};
use passnet::bruteforce;
use passnet::cohesion::{CliqueProjection, ClusteringVariant};
use passnet::config::AnalysisConfig;
use passnet::geodesics::all_pairs_geodesics;
use passnet::net_model::{arrow_lengths, binary_adjacency, build_network, load_team_record, TeamRecord};
use passnet::report;

const EXIT_BAD_INPUT: u8 = 1;
const EXIT_ORACLE_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "passnet", about = "Passing-network analysis for football teams", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: ConfigFlags,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis: summary CSV, player-table CSV and pitch SVG
    Analyze {
        fixture: PathBuf,
        /// Output directory
        #[arg(short, long, default_value = ".")]
        output: PathBuf,
    },
    /// One summary row per fixture for multi-team comparison
    Summary { fixtures: Vec<PathBuf> },
    /// Pitch diagram only
    Render {
        fixture: PathBuf,
        /// Output SVG path (defaults to the fixture stem + .svg)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the fast algorithms against brute-force oracles (N <= 8)
    Oracle { fixture: PathBuf },
}

#[derive(Args)]
struct ConfigFlags {
    /// Pagerank pass-away probability
    #[arg(long, global = true, default_value_t = 0.85)]
    pagerank_p: f64,
    /// Pagerank free popularity
    #[arg(long, global = true, default_value_t = 1.0)]
    pagerank_q: f64,
    /// Pagerank convergence tolerance
    #[arg(long, global = true, default_value_t = 1e-9)]
    pagerank_tol: f64,
    #[arg(long, global = true, default_value_t = 10_000)]
    pagerank_max_iter: usize,
    /// Weight on outgoing distances in weighted closeness
    #[arg(long, global = true, default_value_t = 0.5)]
    closeness_weight: f64,
    /// Relative tolerance for geodesic-length ties
    #[arg(long, global = true, default_value_t = 1e-9)]
    tie_tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = VariantFlag::Paper)]
    clustering_variant: VariantFlag,
    #[arg(long, global = true, value_enum, default_value_t = ProjectionFlag::Or)]
    clique_projection: ProjectionFlag,
    /// Render canvas as WIDTHxHEIGHT
    #[arg(long, global = true, default_value = "1200x800")]
    canvas: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantFlag {
    Paper,
    Onnela,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProjectionFlag {
    Or,
    And,
}

impl ConfigFlags {
    fn into_config(self) -> Result<AnalysisConfig, String> {
        let (w, h) = self
            .canvas
            .split_once('x')
            .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
            .ok_or_else(|| format!("invalid --canvas `{}`, expected WIDTHxHEIGHT", self.canvas))?;
        Ok(AnalysisConfig {
            pagerank_p: self.pagerank_p,
            pagerank_q: self.pagerank_q,
            pagerank_tol: self.pagerank_tol,
            pagerank_max_iter: self.pagerank_max_iter,
            closeness_weight: self.closeness_weight,
            tie_tol: self.tie_tol,
            clustering_variant: match self.clustering_variant {
                VariantFlag::Paper => ClusteringVariant::Paper,
                VariantFlag::Onnela => ClusteringVariant::Onnela,
            },
            clique_projection: match self.clique_projection {
                ProjectionFlag::Or => CliqueProjection::Or,
                ProjectionFlag::And => CliqueProjection::And,
            },
            canvas_width: w,
            canvas_height: h,
            render: Default::default(),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match cli.config.into_config() {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command, &cfg) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_BAD_INPUT)
        }
    }
}

fn load_fixture(path: &Path) -> Result<TeamRecord, String> {
    let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    load_team_record(file).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(command: Command, cfg: &AnalysisConfig) -> Result<ExitCode, String> {
    match command {
        Command::Analyze { fixture, output } => {
            let record = load_fixture(&fixture)?;
            let analysis: TeamAnalysis<f64> =
                analyze_record(&record, cfg).map_err(|e| e.to_string())?;
            std::fs::create_dir_all(&output).map_err(|e| format!("{}: {e}", output.display()))?;

            let summary = report::team_summary(&analysis.network, &analysis.scores, &analysis.cohesion);
            let summary_doc = with_echo(cfg, &report::summary_csv(&[summary]));
            write(&output.join("summary.csv"), &summary_doc)?;

            let rows = report::player_table(
                &analysis.network,
                &analysis.scores,
                &analysis.cohesion.clustering,
            );
            let players_doc = with_echo(cfg, &report::player_table_csv(&rows));
            write(&output.join("players.csv"), &players_doc)?;

            let svg = render(&analysis.network, cfg)?;
            write(&output.join(svg_name(&fixture)), &svg)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Summary { fixtures } => {
            if fixtures.is_empty() {
                eprintln!("error: at least one fixture is required");
                return Ok(ExitCode::from(2));
            }
            let mut rows = Vec::new();
            for path in &fixtures {
                let record = load_fixture(path)?;
                let analysis: TeamAnalysis<f64> =
                    analyze_record(&record, cfg).map_err(|e| format!("{}: {e}", path.display()))?;
                rows.push(report::team_summary(
                    &analysis.network,
                    &analysis.scores,
                    &analysis.cohesion,
                ));
            }
            print!("{}", with_echo(cfg, &report::summary_csv(&rows)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { fixture, output } => {
            let record = load_fixture(&fixture)?;
            let net = build_network::<f64>(&record);
            let svg = render(&net, cfg)?;
            let path = output.unwrap_or_else(|| PathBuf::from(svg_name(&fixture)));
            write(&path, &svg)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { fixture } => {
            let record = load_fixture(&fixture)?;
            if record.n_players() > 8 {
                return Err(format!(
                    "{}: oracle mode handles at most 8 players, fixture has {}",
                    fixture.display(),
                    record.n_players()
                ));
            }
            Ok(run_oracle(&record, cfg))
        }
    }
}

fn with_echo(cfg: &AnalysisConfig, body: &str) -> String {
    format!("# {}\n{}", cfg.echo(), body)
}

fn svg_name(fixture: &Path) -> String {
    let stem = fixture
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "network".into());
    format!("{stem}.svg")
}

fn render(net: &passnet::PassingNetwork64, cfg: &AnalysisConfig) -> Result<String, String> {
    report::render_pitch_diagram(
        net,
        cfg.canvas_width,
        cfg.canvas_height,
        &cfg.render,
        Some(&cfg.echo()),
    )
    .map_err(|e| e.to_string())
}

fn write(path: &Path, contents: &str) -> Result<(), String> {
    std::fs::write(path, contents).map_err(|e| format!("{}: {e}", path.display()))
}

/// Compare the fast implementations against the exhaustive oracles and print
/// one agreement line per check.
fn run_oracle(record: &TeamRecord, cfg: &AnalysisConfig) -> ExitCode {
    let net = build_network::<f64>(record);
    let lengths = arrow_lengths(&net);
    let eps = binary_adjacency(&net);
    let n = net.n_players();
    let mut all_ok = true;
    fn check(all_ok: &mut bool, name: &str, ok: bool) {
        println!("{name}: {}", if ok { "OK" } else { "MISMATCH" });
        *all_ok &= ok;
    }

    let fast = all_pairs_geodesics(&lengths, cfg.tie_tol);
    let slow = bruteforce::geodesics_exhaustive(&lengths, cfg.tie_tol);
    let dist_ok = (0..n).all(|j| (0..n).all(|k| fast.d.d[j][k] == slow.d.d[j][k]));
    check(&mut all_ok, "geodesic distances", dist_ok);
    check(&mut all_ok, "geodesic counts", fast.g == slow.g);
    check(&mut all_ok, "through-node counts", fast.n_through == slow.n_through);

    if n >= 3 {
        let fast_b = passnet::centrality::betweenness(&fast).unwrap();
        let slow_b = bruteforce::betweenness_exhaustive(&lengths, cfg.tie_tol);
        let ok = fast_b
            .iter()
            .zip(&slow_b)
            .all(|(a, b)| (a - b).abs() <= 1e-12);
        check(&mut all_ok, "betweenness", ok);
    }

    if n >= 2 {
        let k = passnet::cohesion::edge_connectivity_directed(&eps).unwrap();
        let ok = match bruteforce::min_disconnecting_edges(&eps, true, 3) {
            Some(found) => k == found,
            None => k > 3,
        };
        check(&mut all_ok, "edge connectivity (directed)", ok);

        let ku = passnet::cohesion::edge_connectivity_undirected(&eps).unwrap();
        let ok = match bruteforce::min_disconnecting_edges(&eps, false, 3) {
            Some(found) => ku == found,
            None => ku > 3,
        };
        check(&mut all_ok, "edge connectivity (undirected)", ok);
    }

    let clique = passnet::cohesion::max_clique(&eps, cfg.clique_projection);
    if cfg.clique_projection == CliqueProjection::Or {
        check(
            &mut all_ok,
            "max clique size",
            clique.len() == bruteforce::max_clique_size_exhaustive(&eps),
        );
    }

    if all_ok {
        println!("all oracles agree");
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_ORACLE_MISMATCH)
    }
}
