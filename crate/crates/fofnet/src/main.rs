//! Command-line front end: analyze edge lists, generate synthetic
//! graphs, run median/mean bound diagnostics, and solve attention
//! equilibria.
//!
//! Exit codes: 0 success, 2 usage (bad flags or out-of-range config), 3
//! unreadable or unparseable input, 4 violated precondition (statistic
//! undefined for the given values). Errors print to stderr; reports go
//! to stdout or, with `--json <path>`, to a file.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fofnet::attention::{equilibrium, evaluate, shift_supply, LinearCurve};
use fofnet::graph::{degrees, parse_edge_list};
use fofnet::report::{
    analysis_report, bounds_report, render_table, AnalysisReport, BoundsInputs,
    EquilibriumReport, GeneratedFiles, GenerateReport, GraphStats, RoleCounts, ShiftOutcome,
    SourceInfo, SCHEMA_VERSION,
};
use fofnet::stats::summarize;
use fofnet::synth::{config_digest, degree_cap, generate, GeneratorConfig, Role};

const EXIT_PARSE: u8 = 3;
const EXIT_PRECONDITION: u8 = 4;

#[derive(Parser)]
#[command(
    name = "fofnet",
    version,
    about = "Friends-of-friends graph analytics, degree bounds, and attention equilibria"
)]
struct Cli {
    /// Write the JSON report to this path instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Seed for synthetic generation
    #[arg(long, global = true, value_name = "U64")]
    seed: Option<u64>,
    /// Also print the per-node table (analyze)
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute friends-of-friends metrics for an edge-list file
    Analyze {
        /// Edge-list file: `<id> <id>` per line, `#` comments, optional
        /// `# n=<count>` header
        path: PathBuf,
    },
    /// Generate a seeded synthetic social graph
    Generate {
        /// Output path for the edge list; labels go to `<path>.labels`
        out: PathBuf,
        /// Flat TOML config file; flags below override its values
        #[arg(long, value_name = "PATH")]
        config: Option<PathBuf>,
        /// Number of individual members
        #[arg(long, value_name = "COUNT")]
        n: Option<usize>,
        /// Edge probability between active individuals
        #[arg(long, value_name = "PROB")]
        p: Option<f64>,
        /// Number of institutional members
        #[arg(long, value_name = "COUNT")]
        institutions: Option<usize>,
        /// Probability an institution links to each individual
        #[arg(long, value_name = "PROB")]
        attach: Option<f64>,
        /// Fraction of individuals marked dormant, in [0, 1)
        #[arg(long, value_name = "FRAC")]
        dormant_fraction: Option<f64>,
        /// Edge-probability multiplier per dormant endpoint, in (0, 1]
        #[arg(long, value_name = "FACTOR")]
        dormant_activity: Option<f64>,
        /// Override the label sidecar path
        #[arg(long, value_name = "PATH")]
        labels: Option<PathBuf>,
        /// Remove random incident edges until no degree exceeds this
        #[arg(long, value_name = "MAX")]
        cap: Option<usize>,
    },
    /// Median/mean/deviation bounds for a degree sequence
    Bounds {
        /// Degree file, one number per line
        #[arg(long, value_name = "PATH", conflicts_with_all = ["graph", "mu", "median", "sigma"])]
        degrees: Option<PathBuf>,
        /// Edge-list file; its degree sequence is analyzed
        #[arg(long, value_name = "PATH", conflicts_with_all = ["mu", "median", "sigma"])]
        graph: Option<PathBuf>,
        /// Mean, when no data file is given
        #[arg(long, requires = "median")]
        mu: Option<f64>,
        /// Median, when no data file is given
        #[arg(long, requires = "mu")]
        median: Option<f64>,
        /// Standard deviation, optional alongside --mu/--median
        #[arg(long)]
        sigma: Option<f64>,
        /// Fail instead of skipping when the tail bound's preconditions
        /// do not hold
        #[arg(long)]
        chebyshev: bool,
    },
    /// Intersection of a linear demand and supply curve
    Equilibrium {
        #[arg(long, value_name = "COST", allow_hyphen_values = true)]
        demand_intercept: f64,
        #[arg(long, value_name = "SLOPE", allow_hyphen_values = true)]
        demand_slope: f64,
        #[arg(long, value_name = "COST", allow_hyphen_values = true)]
        supply_intercept: f64,
        #[arg(long, value_name = "SLOPE", allow_hyphen_values = true)]
        supply_slope: f64,
        /// Scale the supply slope by this factor in (0, 1] and report
        /// the shifted equilibrium too
        #[arg(long, value_name = "FACTOR")]
        shift: Option<f64>,
        /// Write sampled `n,demand,supply` rows for plotting
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
}

struct CliError {
    code: u8,
    message: String,
}

fn usage(message: String) -> CliError {
    // Same exit class clap uses for its own flag errors.
    CliError { code: 2, message }
}

fn parse_failure(message: String) -> CliError {
    CliError { code: EXIT_PARSE, message }
}

fn precondition(message: String) -> CliError {
    CliError { code: EXIT_PRECONDITION, message }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { ref path } => cmd_analyze(path, cli.table, cli.json.as_deref()),
        Command::Generate {
            ref out,
            ref config,
            n,
            p,
            institutions,
            attach,
            dormant_fraction,
            dormant_activity,
            ref labels,
            cap,
        } => cmd_generate(GenerateArgs {
            out,
            config: config.as_deref(),
            n,
            p,
            institutions,
            attach,
            dormant_fraction,
            dormant_activity,
            labels: labels.as_deref(),
            cap,
            seed: cli.seed,
            json: cli.json.as_deref(),
        }),
        Command::Bounds { ref degrees, ref graph, mu, median, sigma, chebyshev } => cmd_bounds(
            degrees.as_deref(),
            graph.as_deref(),
            mu,
            median,
            sigma,
            chebyshev,
            cli.json.as_deref(),
        ),
        Command::Equilibrium {
            demand_intercept,
            demand_slope,
            supply_intercept,
            supply_slope,
            shift,
            ref csv,
        } => cmd_equilibrium(
            LinearCurve { intercept: demand_intercept, slope: demand_slope },
            LinearCurve { intercept: supply_intercept, slope: supply_slope },
            shift,
            csv.as_deref(),
            cli.json.as_deref(),
        ),
    }
}

fn emit_json(json_path: Option<&Path>, payload: &str) -> Result<(), CliError> {
    match json_path {
        Some(path) => fs::write(path, payload)
            .map_err(|e| parse_failure(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn cmd_analyze(path: &Path, table: bool, json: Option<&Path>) -> Result<(), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| parse_failure(format!("cannot read {}: {e}", path.display())))?;
    let g = parse_edge_list(&text)
        .map_err(|e| parse_failure(format!("{}: {e}", path.display())))?;
    if g.n() == 0 {
        return Err(parse_failure(format!(
            "{}: no nodes found; an edge list needs at least one data line or a `# n=<count>` header",
            path.display()
        )));
    }
    let report: AnalysisReport =
        analysis_report(&g, SourceInfo::from_path(&path.display().to_string()), table);
    if table {
        print!("{}", render_table(&g));
    }
    emit_json(json, &report.to_json())
}

struct GenerateArgs<'a> {
    out: &'a Path,
    config: Option<&'a Path>,
    n: Option<usize>,
    p: Option<f64>,
    institutions: Option<usize>,
    attach: Option<f64>,
    dormant_fraction: Option<f64>,
    dormant_activity: Option<f64>,
    labels: Option<&'a Path>,
    cap: Option<usize>,
    seed: Option<u64>,
    json: Option<&'a Path>,
}

fn flag_for_config_field(field: &str) -> &'static str {
    match field {
        "edge_prob" => "--p",
        "institution_attach_prob" => "--attach",
        "dormant_fraction" => "--dormant-fraction",
        "dormant_activity" => "--dormant-activity",
        _ => "--config",
    }
}

fn cmd_generate(args: GenerateArgs<'_>) -> Result<(), CliError> {
    let mut config = match args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| parse_failure(format!("cannot read {}: {e}", path.display())))?;
            toml::from_str::<GeneratorConfig>(&text)
                .map_err(|e| parse_failure(format!("{}: {e}", path.display())))?
        }
        None => {
            let (Some(n), Some(p)) = (args.n, args.p) else {
                return Err(usage(
                    "generate needs --n and --p, or a --config file providing them".to_string(),
                ));
            };
            GeneratorConfig {
                n_individuals: n,
                edge_prob: p,
                n_institutions: 0,
                institution_attach_prob: 0.0,
                dormant_fraction: 0.0,
                dormant_activity: 0.2,
                seed: 0,
            }
        }
    };
    if let Some(n) = args.n {
        config.n_individuals = n;
    }
    if let Some(p) = args.p {
        config.edge_prob = p;
    }
    if let Some(k) = args.institutions {
        config.n_institutions = k;
    }
    if let Some(a) = args.attach {
        config.institution_attach_prob = a;
    }
    if let Some(q) = args.dormant_fraction {
        config.dormant_fraction = q;
    }
    if let Some(eps) = args.dormant_activity {
        config.dormant_activity = eps;
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    config.validate().map_err(|e| match e {
        fofnet::synth::SynthError::OutOfRange { field, expected, value } => usage(format!(
            "invalid {}: {field} must be in {expected}, got {value}",
            flag_for_config_field(field)
        )),
    })?;
    if args.cap == Some(0) {
        return Err(usage("invalid --cap: the degree cap must be at least 1".to_string()));
    }

    let mut lg = generate(&config).map_err(|e| usage(e.to_string()))?;
    if let Some(cap) = args.cap {
        lg = degree_cap(&lg, cap, config.seed);
    }

    let labels_path: PathBuf = match args.labels {
        Some(p) => p.to_path_buf(),
        None => PathBuf::from(format!("{}.labels", args.out.display())),
    };
    fs::write(args.out, lg.graph.to_edge_list())
        .map_err(|e| parse_failure(format!("cannot write {}: {e}", args.out.display())))?;
    fs::write(&labels_path, lg.labels_text())
        .map_err(|e| parse_failure(format!("cannot write {}: {e}", labels_path.display())))?;

    let digest = config_digest(&config);
    println!("config digest: {digest}");
    println!("seed: {}", config.seed);
    println!(
        "wrote {} ({} nodes, {} edges) and {}",
        args.out.display(),
        lg.graph.n(),
        lg.graph.edge_count(),
        labels_path.display()
    );

    if args.json.is_some() {
        let mut roles = RoleCounts { individual_active: 0, individual_dormant: 0, institution: 0 };
        for role in &lg.labels {
            match role {
                Role::IndividualActive => roles.individual_active += 1,
                Role::IndividualDormant => roles.individual_dormant += 1,
                Role::Institution => roles.institution += 1,
            }
        }
        let report = GenerateReport {
            schema_version: SCHEMA_VERSION,
            report_type: "generate",
            config: config.clone(),
            config_digest: digest,
            files: GeneratedFiles {
                edge_list: args.out.display().to_string(),
                labels: labels_path.display().to_string(),
            },
            graph: GraphStats { nodes: lg.graph.n(), edges: lg.graph.edge_count() },
            roles,
            degree_cap: args.cap,
            notes: Vec::new(),
        };
        emit_json(args.json, &report.to_json())?;
    }
    Ok(())
}

fn read_degree_file(path: &Path) -> Result<Vec<f64>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| parse_failure(format!("cannot read {}: {e}", path.display())))?;
    let mut values = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: f64 = line.parse().map_err(|_| {
            parse_failure(format!("{}: line {}: invalid number `{line}`", path.display(), idx + 1))
        })?;
        values.push(v);
    }
    if values.is_empty() {
        return Err(parse_failure(format!("{}: no values found", path.display())));
    }
    Ok(values)
}

fn cmd_bounds(
    degrees_path: Option<&Path>,
    graph_path: Option<&Path>,
    mu: Option<f64>,
    median: Option<f64>,
    sigma: Option<f64>,
    chebyshev: bool,
    json: Option<&Path>,
) -> Result<(), CliError> {
    let values: Option<Vec<f64>> = match (degrees_path, graph_path) {
        (Some(p), _) => Some(read_degree_file(p)?),
        (None, Some(p)) => {
            let text = fs::read_to_string(p)
                .map_err(|e| parse_failure(format!("cannot read {}: {e}", p.display())))?;
            let g = parse_edge_list(&text)
                .map_err(|e| parse_failure(format!("{}: {e}", p.display())))?;
            Some(degrees(&g).as_slice().iter().map(|&d| d as f64).collect())
        }
        (None, None) => None,
    };

    let source = degrees_path.or(graph_path).map(|p| p.display().to_string());
    let (inputs, distribution) = match &values {
        Some(vs) => {
            let s = summarize(vs).map_err(|e| precondition(e.to_string()))?;
            (
                BoundsInputs {
                    mean: s.mean,
                    median: s.median,
                    sigma: Some(s.std_dev),
                    count: Some(s.count),
                    source,
                },
                Some(s),
            )
        }
        None => {
            let (Some(mean), Some(median)) = (mu, median) else {
                return Err(usage(
                    "bounds needs --mu and --median, or a data file via --degrees/--graph"
                        .to_string(),
                ));
            };
            if chebyshev && sigma.is_none() {
                return Err(usage(
                    "--chebyshev needs a sigma: pass --sigma or a data file".to_string(),
                ));
            }
            (BoundsInputs { mean, median, sigma, count: None, source }, None)
        }
    };

    let report = bounds_report(inputs, distribution, values.as_deref(), chebyshev)
        .map_err(|e| precondition(e.to_string()))?;
    emit_json(json, &report.to_json())
}

fn cmd_equilibrium(
    demand: LinearCurve,
    supply: LinearCurve,
    shift: Option<f64>,
    csv: Option<&Path>,
    json: Option<&Path>,
) -> Result<(), CliError> {
    let base = equilibrium(&demand, &supply).map_err(|e| precondition(e.to_string()))?;
    let mut notes = Vec::new();
    let shifted = match shift {
        Some(factor) => {
            let weaker = shift_supply(&supply, factor)
                .map_err(|e| usage(format!("invalid --shift: {e}")))?;
            let after = equilibrium(&demand, &weaker).map_err(|e| precondition(e.to_string()))?;
            let delta = after.friend_count - base.friend_count;
            if factor < 1.0 {
                notes.push(format!(
                    "scaling per-friend supply by {factor} raises the equilibrium friend count by {delta}"
                ));
            }
            Some(ShiftOutcome { factor, supply: weaker, equilibrium: after, friend_count_delta: delta })
        }
        None => None,
    };

    if let Some(path) = csv {
        let top = shifted
            .as_ref()
            .map_or(base.friend_count, |s| s.equilibrium.friend_count.max(base.friend_count));
        let mut out = String::from("n,demand,supply\n");
        const STEPS: usize = 40;
        for t in 0..=STEPS {
            let n = 2.0 * top * t as f64 / STEPS as f64;
            out.push_str(&format!("{n},{},{}\n", evaluate(&demand, n), evaluate(&supply, n)));
        }
        fs::write(path, out)
            .map_err(|e| parse_failure(format!("cannot write {}: {e}", path.display())))?;
    }

    let report = EquilibriumReport {
        schema_version: SCHEMA_VERSION,
        report_type: "equilibrium",
        demand,
        supply,
        equilibrium: base,
        shifted,
        notes,
    };
    emit_json(json, &report.to_json())
}
