//! Command-line pipeline: derive adjacency, materialize statement sets, and
//! compare real vs synthetic trajectory batches.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use entsim::entailment::{entail_trajectory, TBoxConfig};
use entsim::error::Result;
use entsim::geometry::{read_trajectories_csv_path, HausdorffVariant, MetricMode};
use entsim::regions::{compute_adjacency, AdjacencyGraph, RegionLayer, DEFAULT_EPSILON_DEG};
use entsim::report::{Report, ReportFormat};
use entsim::risk::RiskModel;
use entsim::similarity::{compare_batch, pair_by_id, CompareContext};

#[derive(Parser)]
#[command(
    name = "entsim",
    version,
    about = "Entailment-based trajectory similarity over attributed region layers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derive the region adjacency graph from geometry and export it as CSV.
    Adjacency(AdjacencyArgs),
    /// Materialize the statement sets entailed by each trajectory.
    Entail(EntailArgs),
    /// Run the full comparison pipeline over paired real/synthetic batches.
    Compare(CompareArgs),
}

#[derive(Args)]
struct AdjacencyArgs {
    /// Region layer GeoJSON (FeatureCollection of Polygon/MultiPolygon).
    #[arg(long, value_name = "GEOJSON")]
    regions: PathBuf,
    /// Whether single-point (corner) contact counts as touching.
    #[arg(long, value_name = "BOOL", default_value_t = true, action = clap::ArgAction::Set)]
    corner_touch: bool,
    /// Boundary tolerance in degrees.
    #[arg(long, value_name = "DEG", default_value_t = DEFAULT_EPSILON_DEG)]
    eps: f64,
    /// Output CSV path (header: region_a,region_b).
    #[arg(long, value_name = "CSV")]
    out: PathBuf,
}

#[derive(Args)]
struct EntailArgs {
    /// Region layer GeoJSON.
    #[arg(long, value_name = "GEOJSON")]
    regions: PathBuf,
    /// Load adjacency from an edge-list CSV instead of deriving it.
    #[arg(long, value_name = "CSV", conflicts_with = "from_geometry")]
    adjacency: Option<PathBuf>,
    /// Derive adjacency from the layer geometry (the default).
    #[arg(long)]
    from_geometry: bool,
    /// TBox configuration (JSON: rules, corner_touch, hierarchy).
    #[arg(long, value_name = "JSON")]
    tbox: PathBuf,
    /// Trajectories CSV (header: tid,seq,lat,lon[,timestamp]).
    #[arg(long, value_name = "CSV")]
    trajectories: PathBuf,
    /// Output path for the canonical triples.
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct CompareArgs {
    /// Region layer GeoJSON.
    #[arg(long, value_name = "GEOJSON")]
    regions: PathBuf,
    /// TBox configuration (JSON).
    #[arg(long, value_name = "JSON")]
    tbox: PathBuf,
    /// Real (ground-truth) trajectories CSV.
    #[arg(long, value_name = "CSV")]
    real: PathBuf,
    /// Synthetic trajectories CSV; tids must match the real batch.
    #[arg(long, value_name = "CSV")]
    synthetic: PathBuf,
    /// Distance interpretation.
    #[arg(long, default_value_t = MetricMode::Geodesic)]
    metric: MetricMode,
    /// Hausdorff statistic to report.
    #[arg(long, default_value_t = HausdorffVariant::Directed)]
    hausdorff: HausdorffVariant,
    /// Load adjacency from CSV instead of deriving it from geometry.
    #[arg(long, value_name = "CSV")]
    adjacency: Option<PathBuf>,
    /// Region attribute averaged by the risk model.
    #[arg(long, value_name = "KEY", default_value = "crime_rate")]
    risk_attribute: String,
    /// Average the risk attribute per located fix instead of per distinct
    /// region.
    #[arg(long)]
    risk_per_fix: bool,
    /// Report path; a .jsonl extension selects JSONL, anything else CSV.
    /// CSV reports get a <out>.summary.json sidecar.
    #[arg(long, value_name = "REPORT")]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Adjacency(args) => run_adjacency(args),
        Command::Entail(args) => run_entail(args),
        Command::Compare(args) => run_compare(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn load_adjacency(
    layer: &RegionLayer,
    path: Option<&Path>,
    corner_touch: bool,
    eps: f64,
) -> Result<AdjacencyGraph> {
    match path {
        Some(path) => {
            let mut graph = AdjacencyGraph::from_csv_path(path)?;
            graph.register_region_ids(layer.region_ids());
            Ok(graph)
        }
        None => {
            let build = compute_adjacency(layer, corner_touch, eps);
            for (a, b) in &build.overlap_warnings {
                eprintln!("warning: interiors of {a} and {b} overlap; no touches edge emitted");
            }
            Ok(build.graph)
        }
    }
}

fn run_adjacency(args: AdjacencyArgs) -> Result<()> {
    let layer = RegionLayer::from_geojson_path(&args.regions)?;
    let build = compute_adjacency(&layer, args.corner_touch, args.eps);
    for (a, b) in &build.overlap_warnings {
        eprintln!("warning: interiors of {a} and {b} overlap; no touches edge emitted");
    }
    let file = fs::File::create(&args.out)?;
    build.graph.to_csv_writer(std::io::BufWriter::new(file))?;
    eprintln!(
        "wrote {} edges over {} regions to {}",
        build.graph.edge_count(),
        layer.len(),
        args.out.display()
    );
    Ok(())
}

fn run_entail(args: EntailArgs) -> Result<()> {
    let layer = RegionLayer::from_geojson_path(&args.regions)?;
    let tbox = TBoxConfig::from_json_path(&args.tbox)?.merged_with_layer(&layer)?;
    let adjacency = load_adjacency(
        &layer,
        args.adjacency.as_deref(),
        tbox.corner_touch(),
        DEFAULT_EPSILON_DEG,
    )?;
    let mut trajectories = read_trajectories_csv_path(&args.trajectories)?;
    trajectories.sort_by(|a, b| a.id().cmp(b.id()));

    let mut out = std::io::BufWriter::new(fs::File::create(&args.out)?);
    for t in &trajectories {
        let set = entail_trajectory(t, &layer, &adjacency, &tbox)?;
        let (_, out_of_layer) = layer.crossed_regions(t);
        if out_of_layer > 0 {
            eprintln!(
                "warning: trajectory {} has {out_of_layer} fixes outside the layer",
                t.id()
            );
        }
        writeln!(out, "# trajectory: {}", t.id())?;
        for line in set.canonical_lines() {
            writeln!(out, "{line}")?;
        }
    }
    out.flush()?;
    Ok(())
}

fn run_compare(args: CompareArgs) -> Result<()> {
    let layer = RegionLayer::from_geojson_path(&args.regions)?;
    let tbox = TBoxConfig::from_json_path(&args.tbox)?.merged_with_layer(&layer)?;
    let adjacency = load_adjacency(
        &layer,
        args.adjacency.as_deref(),
        tbox.corner_touch(),
        DEFAULT_EPSILON_DEG,
    )?;

    let real = read_trajectories_csv_path(&args.real)?;
    let synthetic = read_trajectories_csv_path(&args.synthetic)?;
    let pairs = pair_by_id(real, synthetic)?;

    let ctx = CompareContext {
        layer: &layer,
        adjacency: &adjacency,
        tbox: &tbox,
        mode: args.metric,
        variant: args.hausdorff,
        risk_model: RiskModel {
            attribute_key: args.risk_attribute.clone(),
            per_fix: args.risk_per_fix,
        },
    };
    let records = compare_batch(&pairs, &ctx);
    for record in &records {
        for note in &record.notes {
            eprintln!("warning: pair {}: {note}", record.pair_id);
        }
    }
    let report = Report::from_records(records);

    match ReportFormat::from_path(&args.out) {
        ReportFormat::Jsonl => {
            fs::write(&args.out, report.emit_jsonl_string())?;
        }
        ReportFormat::Csv => {
            fs::write(&args.out, report.emit_csv_string())?;
            let sidecar = summary_sidecar_path(&args.out);
            fs::write(&sidecar, report.summary_json())?;
        }
    }
    let summary = report.summary();
    eprintln!(
        "compared {} pairs ({} with out-of-layer fixes, {} with undefined risk)",
        summary.total_pairs, summary.pairs_with_out_of_layer, summary.undefined_risk_pairs
    );
    Ok(())
}

fn summary_sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".summary.json");
    out.with_file_name(name)
}
