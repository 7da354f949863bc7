//! Machine-readable reports and human-readable tables for the CLI.
//!
//! Every JSON report carries `schema_version` and a `report_type`
//! discriminator, serializes its keys in a fixed order, and validates
//! against `schemas/fofnet-report.schema.json` at the repository root.
//! Exact rationals appear as `{ "value": <f64>, "exact": "num/den" }` so
//! consumers get both a convenient float and the lossless fraction.
//! Human tables render means to two decimals with round-half-even, which
//! happens on the exact fraction rather than the float.

use serde::Serialize;

use crate::attention::{Equilibrium, LinearCurve};
use crate::graph::{degrees, Graph};
use crate::paradox::{
    paradox_summary, paradox_table, MetricsError, ParadoxSummary, Rational, Verdict,
    VerdictCounts,
};
use crate::stats::{
    chebyshev_tail_bound, implied_sigma_lower_bound, mallows_check_values, summarize,
    DistributionSummary, MallowsCheck, StatsError, TailBoundReport,
};
use crate::synth::GeneratorConfig;

pub const SCHEMA_VERSION: u32 = 1;

/// An exact fraction rendered for JSON: a float for convenience plus the
/// lossless `num/den` string.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RationalJson {
    pub value: f64,
    pub exact: String,
}

impl RationalJson {
    pub fn from_rational(r: &Rational) -> RationalJson {
        RationalJson {
            value: *r.numer() as f64 / *r.denom() as f64,
            exact: format!("{}/{}", r.numer(), r.denom()),
        }
    }
}

/// Two-decimal rendering of an exact fraction with round-half-even,
/// computed on integers so floats never distort the tie direction.
pub fn format_rational_2dp(r: &Rational) -> String {
    let scaled = r.numer() * 100;
    let d = *r.denom(); // always positive
    let q = scaled.div_euclid(d);
    let rem = scaled.rem_euclid(d);
    let cents = match (2 * rem).cmp(&d) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if q % 2 == 0 {
                q
            } else {
                q + 1
            }
        }
    };
    let sign = if cents < 0 { "-" } else { "" };
    let a = cents.unsigned_abs();
    format!("{sign}{}.{:02}", a / 100, a % 100)
}

/// Integers render bare, everything else as-is: turns 90.0 into "90" for
/// note strings.
pub fn format_compact(x: f64) -> String {
    if x.is_finite() && x == x.trunc() && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports serialize");
    out.push('\n');
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SourceInfo {
    /// Input path for analyzed files, output path for generated ones.
    pub path: Option<String>,
    /// Fingerprint of the generator config, when one produced the graph.
    pub config_digest: Option<String>,
    pub seed: Option<u64>,
}

impl SourceInfo {
    pub fn from_path(path: &str) -> SourceInfo {
        SourceInfo { path: Some(path.to_string()), config_digest: None, seed: None }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct GraphStats {
    pub nodes: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ParadoxSummaryJson {
    pub mu_f: RationalJson,
    pub mu_ff_global: RationalJson,
    pub degree_variance: RationalJson,
    pub gap: RationalJson,
    pub counts: VerdictCounts,
    pub local_mean_avg: f64,
}

impl ParadoxSummaryJson {
    fn from_summary(s: &ParadoxSummary) -> ParadoxSummaryJson {
        ParadoxSummaryJson {
            mu_f: RationalJson::from_rational(&s.mu_f),
            mu_ff_global: RationalJson::from_rational(&s.mu_ff_global),
            degree_variance: RationalJson::from_rational(&s.degree_variance),
            gap: RationalJson::from_rational(&s.gap),
            counts: s.counts,
            local_mean_avg: s.local_mean_avg,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ParadoxRowJson {
    pub node: u32,
    pub f: u64,
    pub ff: u64,
    pub local_ff_mean: Option<RationalJson>,
    pub verdict: &'static str,
}

/// Full analysis of one graph. `paradox` and `tail_bound` are null when
/// undefined (no edges, or no right skew), with a note saying why.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub report_type: &'static str,
    pub source: SourceInfo,
    pub graph: GraphStats,
    pub paradox: Option<ParadoxSummaryJson>,
    pub table: Option<Vec<ParadoxRowJson>>,
    pub distribution: Option<DistributionSummary>,
    pub tail_bound: Option<TailBoundReport>,
    pub notes: Vec<String>,
}

/// Builds the analysis report for a parsed graph. `include_table` adds
/// the per-node rows to the JSON.
pub fn analysis_report(g: &Graph, source: SourceInfo, include_table: bool) -> AnalysisReport {
    let mut notes = Vec::new();
    let mut paradox = None;
    let mut distribution = None;
    let mut tail_bound = None;

    match paradox_summary(g) {
        Ok(s) => {
            notes.push(
                "identity mu_ff_global = mu_f + degree_variance / mu_f: exact".to_string(),
            );
            paradox = Some(ParadoxSummaryJson::from_summary(&s));
        }
        Err(MetricsError::EmptyGraph) => {
            notes.push("graph has no nodes: all statistics are undefined".to_string());
        }
        Err(_) => {
            notes.push(
                "graph has no edges: friends-of-friends statistics are undefined".to_string(),
            );
        }
    }

    if g.n() > 0 {
        let values: Vec<f64> = degrees(g).as_slice().iter().map(|&d| d as f64).collect();
        let summary = summarize(&values).expect("nonempty degree sequence");
        if summary.mean > summary.median && summary.std_dev > 0.0 {
            let tb = chebyshev_tail_bound(&summary, Some(&values))
                .expect("right-skew preconditions were just checked");
            if tb.bound >= 1.0 {
                notes.push(
                    "tail bound is vacuous (1.0): sigma is large relative to the mean-median gap"
                        .to_string(),
                );
            }
            tail_bound = Some(tb);
        } else if paradox.is_some() {
            notes.push(
                "tail-bound analysis skipped: degree distribution is not right-skewed"
                    .to_string(),
            );
        }
        distribution = Some(summary);
    }

    let table = include_table.then(|| {
        paradox_table(g)
            .iter()
            .map(|row| ParadoxRowJson {
                node: row.node,
                f: row.f,
                ff: row.ff,
                local_ff_mean: row.local_ff_mean.as_ref().map(RationalJson::from_rational),
                verdict: row.verdict.as_str(),
            })
            .collect()
    });

    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        report_type: "analysis",
        source,
        graph: GraphStats { nodes: g.n(), edges: g.edge_count() },
        paradox,
        table,
        distribution,
        tail_bound,
        notes,
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        to_json_string(self)
    }
}

/// Human-readable per-node table in the classic layout: 1-based node
/// ids, two-decimal means, `yes`/`no` verdicts with `-` for exact ties
/// and `n/a` for isolated nodes.
pub fn render_table(g: &Graph) -> String {
    let mut out = String::new();
    match paradox_summary(g) {
        Ok(s) => {
            out.push_str(&format!(
                "mu_FF(global) = {}   mu_F = {}   nodes = {}   edges = {}\n",
                format_rational_2dp(&s.mu_ff_global),
                format_rational_2dp(&s.mu_f),
                g.n(),
                g.edge_count(),
            ));
        }
        Err(_) => {
            out.push_str(&format!(
                "mu_FF(global) undefined   nodes = {}   edges = {}\n",
                g.n(),
                g.edge_count(),
            ));
        }
    }
    let rows = paradox_table(g);
    let mut greater = 0usize;
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|row| {
            let mean = match &row.local_ff_mean {
                Some(m) => format_rational_2dp(m),
                None => "-".to_string(),
            };
            let verdict = match row.verdict {
                Verdict::Greater => {
                    greater += 1;
                    "yes"
                }
                Verdict::Equal => "-",
                Verdict::Less => "no",
                Verdict::Undefined => "n/a",
            };
            [
                (row.node + 1).to_string(),
                row.f.to_string(),
                row.ff.to_string(),
                mean,
                verdict.to_string(),
            ]
        })
        .collect();
    let headers = ["Node", "F(i)", "FF(i)", "mu_FF(i)", "mu_FF(i) > F(i)"];
    let mut widths: [usize; 4] = std::array::from_fn(|c| headers[c].len());
    for row in &cells {
        for (c, w) in widths.iter_mut().enumerate() {
            *w = (*w).max(row[c].len());
        }
    }
    let emit = |row: [&str; 5]| {
        format!(
            "{:<w0$}  {:<w1$}  {:<w2$}  {:<w3$}  {}\n",
            row[0],
            row[1],
            row[2],
            row[3],
            row[4],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2],
            w3 = widths[3],
        )
    };
    out.push_str(&emit(headers));
    for row in &cells {
        out.push_str(&emit([&row[0], &row[1], &row[2], &row[3], &row[4]]));
    }
    out.push_str(&format!("{greater}/{} nodes have mu_FF(i) > F(i)\n", rows.len()));
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsInputs {
    pub mean: f64,
    pub median: f64,
    pub sigma: Option<f64>,
    /// Number of observations when a data file was supplied.
    pub count: Option<usize>,
    pub source: Option<String>,
}

/// Median/mean/deviation bound analysis, from raw data or bare values.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub schema_version: u32,
    pub report_type: &'static str,
    pub inputs: BoundsInputs,
    /// Least deviation compatible with the mean and median.
    pub sigma_lower_bound: f64,
    pub distribution: Option<DistributionSummary>,
    pub mallows: Option<MallowsCheck>,
    pub tail_bound: Option<TailBoundReport>,
    pub notes: Vec<String>,
}

impl BoundsReport {
    pub fn to_json(&self) -> String {
        to_json_string(self)
    }
}

/// Builds the bounds report. `values` carries raw observations when a
/// file was given; otherwise `mean`/`median`/`sigma` came in as flags.
/// With `require_tail_bound` a failed precondition (no right skew, zero
/// sigma) is an error instead of a skip note.
pub fn bounds_report(
    inputs: BoundsInputs,
    distribution: Option<DistributionSummary>,
    values: Option<&[f64]>,
    require_tail_bound: bool,
) -> Result<BoundsReport, StatsError> {
    let mut notes = Vec::new();
    let sigma_lower_bound = implied_sigma_lower_bound(inputs.mean, inputs.median);
    notes.push(format!("sigma >= {}", format_compact(sigma_lower_bound)));

    let mallows = inputs.sigma.map(|s| {
        let check = mallows_check_values(inputs.mean, inputs.median, s);
        if !check.holds {
            notes.push(format!(
                "reported sigma {} is below the |mean - median| floor {}; no distribution can do that",
                format_compact(s),
                format_compact(check.sigma_lower_bound),
            ));
        }
        check
    });

    let mut tail_bound = None;
    match inputs.sigma {
        Some(sigma) => {
            let attempt = crate::stats::tail_bound_for(inputs.mean, inputs.median, sigma, values);
            match attempt {
                Ok(tb) => {
                    if tb.bound >= 1.0 {
                        notes.push(
                            "tail bound is vacuous (1.0): sigma is large relative to the mean-median gap"
                                .to_string(),
                        );
                    }
                    notes.push(
                        "tail bound assumes only finite variance; a unimodality assumption would tighten it but is not applied"
                            .to_string(),
                    );
                    tail_bound = Some(tb);
                }
                Err(err) if require_tail_bound => return Err(err),
                Err(StatsError::NotRightSkewed { .. }) => {
                    notes.push(
                        "tail-bound analysis skipped: mean does not exceed median (no right skew)"
                            .to_string(),
                    );
                }
                Err(StatsError::NonPositiveSigma) => {
                    notes.push("tail-bound analysis skipped: sigma is zero".to_string());
                }
                Err(err) => return Err(err),
            }
        }
        None if require_tail_bound => return Err(StatsError::NonPositiveSigma),
        None => {
            notes.push(
                "tail-bound analysis skipped: sigma unknown (supply --sigma or a data file)"
                    .to_string(),
            );
        }
    }

    Ok(BoundsReport {
        schema_version: SCHEMA_VERSION,
        report_type: "bounds",
        inputs,
        sigma_lower_bound,
        distribution,
        mallows,
        tail_bound,
        notes,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiftOutcome {
    pub factor: f64,
    pub supply: LinearCurve,
    pub equilibrium: Equilibrium,
    /// Shifted minus baseline friend count; positive for any factor
    /// below 1.
    pub friend_count_delta: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquilibriumReport {
    pub schema_version: u32,
    pub report_type: &'static str,
    pub demand: LinearCurve,
    pub supply: LinearCurve,
    pub equilibrium: Equilibrium,
    pub shifted: Option<ShiftOutcome>,
    pub notes: Vec<String>,
}

impl EquilibriumReport {
    pub fn to_json(&self) -> String {
        to_json_string(self)
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct RoleCounts {
    pub individual_active: usize,
    pub individual_dormant: usize,
    pub institution: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratedFiles {
    pub edge_list: String,
    pub labels: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GenerateReport {
    pub schema_version: u32,
    pub report_type: &'static str,
    pub config: GeneratorConfig,
    pub config_digest: String,
    pub files: GeneratedFiles,
    pub graph: GraphStats,
    pub roles: RoleCounts,
    pub degree_cap: Option<usize>,
    pub notes: Vec<String>,
}

impl GenerateReport {
    pub fn to_json(&self) -> String {
        to_json_string(self)
    }
}
