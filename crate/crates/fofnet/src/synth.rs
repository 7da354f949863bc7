//! Seeded generators for synthetic social graphs with two skew
//! mechanisms layered on a Bernoulli baseline: institutional hubs that
//! attach to many individuals, and dormant members whose propensity to
//! form edges is scaled down but who keep the edges they have.
//!
//! # Random stream contract
//!
//! Byte-identical reproducibility across runs and machines is part of
//! the output format, so the draw order is fixed and documented:
//!
//! * The generator is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//!   `seed_from_u64(config.seed)`, split by purpose via `set_stream`:
//!   stream 0 for individual pairs, stream 1 for institution attachment,
//!   stream 2 for degree capping.
//! * Individual pairs `(i, j)` with `i < j` are visited in row-major
//!   order. Every pair consumes exactly one `u64` from stream 0 whether
//!   or not an edge results. The draw becomes a unit float by keeping
//!   the top 53 bits, `(x >> 11) / 2^53`, and the edge is present when
//!   that float is strictly below the pair's probability.
//! * Institution `k` (node id `n_individuals + k`) considers individuals
//!   `0..n_individuals` in order, one stream-1 draw each, `k`-major.
//! * Dormant members are the last `floor(dormant_fraction *
//!   n_individuals)` individual ids; picking them consumes no draws.
//! * [`degree_cap`] walks nodes in ascending id order and removes
//!   uniformly chosen incident edges from stream 2 until the node fits.
//!
//! Changing any of this breaks golden files and must be treated as a
//! format break.

use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{degrees, Graph};
use crate::paradox::{paradox_summary, MetricsError, ParadoxSummary};
use crate::stats::{summarize, DistributionSummary};

/// Parameters of one synthetic graph. Serializable both ways so a config
/// can live in a flat TOML file and be fingerprinted for reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    /// Number of individual members (node ids `0..n_individuals`).
    pub n_individuals: usize,
    /// Probability of an edge between two active individuals.
    pub edge_prob: f64,
    /// Number of institutional members, ids after all individuals.
    #[serde(default)]
    pub n_institutions: usize,
    /// Probability that an institution links to each individual.
    #[serde(default)]
    pub institution_attach_prob: f64,
    /// Fraction of individuals marked dormant, in `[0, 1)`.
    #[serde(default)]
    pub dormant_fraction: f64,
    /// Edge-probability multiplier applied per dormant endpoint, in
    /// `(0, 1]`.
    #[serde(default = "default_dormant_activity")]
    pub dormant_activity: f64,
    #[serde(default)]
    pub seed: u64,
}

fn default_dormant_activity() -> f64 {
    0.2
}

#[derive(Debug, Error, PartialEq)]
pub enum SynthError {
    #[error("{field} must be in {expected}, got {value}")]
    OutOfRange { field: &'static str, expected: &'static str, value: f64 },
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<(), SynthError> {
        let checks: [(&'static str, f64, &'static str, bool); 4] = [
            ("edge_prob", self.edge_prob, "[0, 1]", unit_range(self.edge_prob)),
            (
                "institution_attach_prob",
                self.institution_attach_prob,
                "[0, 1]",
                unit_range(self.institution_attach_prob),
            ),
            (
                "dormant_fraction",
                self.dormant_fraction,
                "[0, 1)",
                self.dormant_fraction.is_finite()
                    && self.dormant_fraction >= 0.0
                    && self.dormant_fraction < 1.0,
            ),
            (
                "dormant_activity",
                self.dormant_activity,
                "(0, 1]",
                self.dormant_activity.is_finite()
                    && self.dormant_activity > 0.0
                    && self.dormant_activity <= 1.0,
            ),
        ];
        for (field, value, expected, ok) in checks {
            if !ok {
                return Err(SynthError::OutOfRange { field, expected, value });
            }
        }
        Ok(())
    }

    /// Total node count, individuals plus institutions.
    pub fn n_nodes(&self) -> usize {
        self.n_individuals + self.n_institutions
    }
}

/// Hex SHA-256 of the JSON form of a config: a stable fingerprint that
/// lets a report name exactly what produced a graph.
pub fn config_digest(config: &GeneratorConfig) -> String {
    let json = serde_json::to_string(config).expect("config serializes");
    let mut hasher = Sha256::new();
    hasher.update(json.as_bytes());
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

fn unit_range(v: f64) -> bool {
    v.is_finite() && (0.0..=1.0).contains(&v)
}

/// Node role in a generated graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    IndividualActive,
    IndividualDormant,
    Institution,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::IndividualActive => "individual_active",
            Role::IndividualDormant => "individual_dormant",
            Role::Institution => "institution",
        }
    }
}

impl std::fmt::Display for Role {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A generated graph plus the role of every node. Institutions always
/// occupy the id range after all individuals.
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<Role>,
}

impl LabeledGraph {
    /// Sidecar label file: one `<id> <role>` line per node, ascending.
    pub fn labels_text(&self) -> String {
        let mut out = String::new();
        for (i, role) in self.labels.iter().enumerate() {
            out.push_str(&i.to_string());
            out.push(' ');
            out.push_str(role.as_str());
            out.push('\n');
        }
        out
    }
}

fn unit(rng: &mut ChaCha8Rng) -> f64 {
    ((rng.next_u64() >> 11) as f64) / 9007199254740992.0
}

/// Generates the graph for a config. Deterministic in `(config, seed)`;
/// see the module docs for the exact draw order.
///
/// Edge probabilities: individual pair `(i, j)` uses `edge_prob`
/// multiplied by each dormant endpoint's activity factor; an
/// institution-individual pair uses `institution_attach_prob` flat;
/// institutions never link to each other.
pub fn generate(config: &GeneratorConfig) -> Result<LabeledGraph, SynthError> {
    config.validate()?;
    let n_ind = config.n_individuals;
    let n_dormant = (config.dormant_fraction * n_ind as f64).floor() as usize;
    let first_dormant = n_ind - n_dormant;
    let activity =
        |i: usize| if i >= first_dormant { config.dormant_activity } else { 1.0 };

    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(0);
    for i in 0..n_ind {
        for j in (i + 1)..n_ind {
            let p = config.edge_prob * activity(i) * activity(j);
            if unit(&mut rng) < p {
                edges.push((i as u32, j as u32));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(1);
    for k in 0..config.n_institutions {
        let inst = (n_ind + k) as u32;
        for i in 0..n_ind {
            if unit(&mut rng) < config.institution_attach_prob {
                edges.push((i as u32, inst));
            }
        }
    }

    let mut labels = Vec::with_capacity(config.n_nodes());
    for i in 0..n_ind {
        labels.push(if i >= first_dormant {
            Role::IndividualDormant
        } else {
            Role::IndividualActive
        });
    }
    labels.extend(std::iter::repeat(Role::Institution).take(config.n_institutions));

    let graph = Graph::from_edges(config.n_nodes(), edges)
        .expect("generated endpoints are in range and loop-free");
    Ok(LabeledGraph { graph, labels })
}

/// Enforces a maximum degree by removing uniformly chosen incident edges
/// (stream 2 of the given seed) from each over-limit node, in ascending
/// node order, until it fits. Removal is symmetric, so the result is
/// still a valid simple graph. `cap` must be at least 1.
pub fn degree_cap(lg: &LabeledGraph, cap: usize, seed: u64) -> LabeledGraph {
    assert!(cap >= 1, "degree cap must be at least 1");
    let n = lg.graph.n();
    let mut adj: Vec<Vec<u32>> =
        (0..n).map(|i| lg.graph.neighbors(i as u32).to_vec()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(2);
    for i in 0..n {
        while adj[i].len() > cap {
            let pick = rng.random_range(0..adj[i].len());
            let j = adj[i][pick] as usize;
            adj[i].remove(pick);
            let back = adj[j].binary_search(&(i as u32)).expect("edges are symmetric");
            adj[j].remove(back);
        }
    }
    // Removals keep lists sorted and symmetric, so this stays valid.
    LabeledGraph { graph: Graph::from_adjacency_unchecked(adj), labels: lg.labels.clone() }
}

/// Skew diagnostics for a labeled graph: degree summaries for the whole
/// graph and for individuals alone, plus the exact friends-of-friends
/// aggregates. Differencing the two mean-median gaps attributes skew to
/// institutions versus the individual layer.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewReport {
    pub full: DistributionSummary,
    /// `mean - median` of the full degree sequence.
    pub full_gap: f64,
    /// Summary over individual nodes only; `None` when there are none.
    pub individuals: Option<DistributionSummary>,
    pub individual_gap: Option<f64>,
    pub paradox: ParadoxSummary,
}

pub fn skew_report(lg: &LabeledGraph) -> Result<SkewReport, MetricsError> {
    let paradox = paradox_summary(&lg.graph)?;
    let degs = degrees(&lg.graph);
    let all: Vec<f64> = degs.as_slice().iter().map(|&d| d as f64).collect();
    let full = summarize(&all).expect("graph with edges has nodes");
    let individual_values: Vec<f64> = all
        .iter()
        .zip(&lg.labels)
        .filter(|(_, role)| **role != Role::Institution)
        .map(|(&d, _)| d)
        .collect();
    let individuals = summarize(&individual_values).ok();
    Ok(SkewReport {
        full_gap: full.mean - full.median,
        individual_gap: individuals.map(|s| s.mean - s.median),
        full,
        individuals,
        paradox,
    })
}
