//! Friends-of-friends metrics in exact rational arithmetic.
//!
//! For node `i` with degree `f(i)`, the friends-of-friends count `ff(i)`
//! is the sum of the degrees of its neighbors, which equals the number of
//! two-step walks starting at `i` (walks returning to `i` included, so
//! every edge of `i` contributes itself once). Two aggregates follow:
//!
//! * the local mean `ff(i) / f(i)`, what a member sees among their own
//!   friends, and
//! * the global mean `sum(f^2) / sum(f)`, the degree-weighted average
//!   degree across the whole graph.
//!
//! The global mean always satisfies `mu_ff = mu_f + var / mu_f`, where
//! `mu_f` is the plain mean degree and `var` the population variance of
//! the degree sequence. Everything here is computed over 128-bit
//! rationals so that identity is a hard equality, not a tolerance check;
//! that leaves ample headroom for graphs with millions of edges.

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::graph::{degrees, Graph};

/// Exact fraction used by all metrics in this module.
pub type Rational = Ratio<i128>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricsError {
    #[error("node {node} out of range for graph with {n} nodes")]
    NodeOutOfRange { node: u32, n: usize },
    #[error("graph has no edges, statistic undefined")]
    NoEdges,
    #[error("graph has no nodes, statistic undefined")]
    EmptyGraph,
}

/// How a node's local friends-of-friends mean compares to its own degree.
/// `Undefined` marks isolated nodes, whose local mean does not exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Greater,
    Equal,
    Less,
    Undefined,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Greater => "greater",
            Verdict::Equal => "equal",
            Verdict::Less => "less",
            Verdict::Undefined => "undefined",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-node line of the friends-of-friends table.
#[derive(Clone, Debug, PartialEq)]
pub struct ParadoxRow {
    pub node: u32,
    /// Friend count, the node's degree.
    pub f: u64,
    /// Sum of the neighbors' degrees.
    pub ff: u64,
    /// `ff / f`, `None` for isolated nodes.
    pub local_ff_mean: Option<Rational>,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct VerdictCounts {
    pub greater: usize,
    pub equal: usize,
    pub less: usize,
    pub undefined: usize,
}

/// Whole-graph friends-of-friends statistics, all exact.
#[derive(Clone, Debug, PartialEq)]
pub struct ParadoxSummary {
    /// Mean degree over all nodes.
    pub mu_f: Rational,
    /// Degree-weighted mean degree, `sum(f^2) / sum(f)`.
    pub mu_ff_global: Rational,
    /// Population variance of the degree sequence.
    pub degree_variance: Rational,
    /// `mu_ff_global - mu_f`, always equal to `degree_variance / mu_f`
    /// and never negative.
    pub gap: Rational,
    pub counts: VerdictCounts,
    /// Arithmetic mean of the defined local means, as a float. The exact
    /// aggregates above weight nodes by degree; this one weights every
    /// non-isolated node equally, and the two can disagree on direction.
    pub local_mean_avg: f64,
}

fn check_node(g: &Graph, i: u32) -> Result<(), MetricsError> {
    if (i as usize) < g.n() {
        Ok(())
    } else {
        Err(MetricsError::NodeOutOfRange { node: i, n: g.n() })
    }
}

/// Sum of the degrees of `i`'s neighbors (two-step walk count from `i`).
pub fn friends_of_friends(g: &Graph, i: u32) -> Result<u64, MetricsError> {
    check_node(g, i)?;
    Ok(g.neighbors(i).iter().map(|&j| g.degree(j) as u64).sum())
}

/// Mean degree among `i`'s neighbors, `None` when `i` is isolated.
pub fn local_ff_mean(g: &Graph, i: u32) -> Result<Option<Rational>, MetricsError> {
    let ff = friends_of_friends(g, i)?;
    let f = g.degree(i) as u64;
    if f == 0 {
        return Ok(None);
    }
    Ok(Some(Rational::new(ff as i128, f as i128)))
}

/// Degree-weighted mean degree of the whole graph.
pub fn global_ff_mean(g: &Graph) -> Result<Rational, MetricsError> {
    let (sum, sumsq) = degree_moments(g);
    if sum == 0 {
        return Err(MetricsError::NoEdges);
    }
    Ok(Rational::new(sumsq, sum))
}

/// Plain mean degree over all nodes, isolated ones included.
pub fn mean_friends(g: &Graph) -> Result<Rational, MetricsError> {
    if g.n() == 0 {
        return Err(MetricsError::EmptyGraph);
    }
    let (sum, _) = degree_moments(g);
    Ok(Rational::new(sum, g.n() as i128))
}

/// Population variance of the degree sequence. A graph is regular exactly
/// when this is zero, which is also the only case where the global
/// friends-of-friends mean equals the plain mean.
pub fn structural_information(g: &Graph) -> Result<Rational, MetricsError> {
    let (sum, sumsq) = degree_moments(g);
    if sum == 0 {
        return Err(MetricsError::NoEdges);
    }
    let n = g.n() as i128;
    let mean = Rational::new(sum, n);
    Ok(Rational::new(sumsq, n) - mean * mean)
}

/// One row per node, in node-id order. Verdicts compare the exact local
/// mean against the node's own degree; isolated nodes get `Undefined`.
pub fn paradox_table(g: &Graph) -> Vec<ParadoxRow> {
    let degs = degrees(g);
    let degs = degs.as_slice();
    let mut rows = Vec::with_capacity(g.n());
    for (i, &f) in degs.iter().enumerate() {
        let ff: u64 = g.neighbors(i as u32).iter().map(|&j| degs[j as usize]).sum();
        let (local, verdict) = if f == 0 {
            (None, Verdict::Undefined)
        } else {
            let mean = Rational::new(ff as i128, f as i128);
            let own = Rational::from_integer(f as i128);
            let verdict = match mean.cmp(&own) {
                std::cmp::Ordering::Greater => Verdict::Greater,
                std::cmp::Ordering::Equal => Verdict::Equal,
                std::cmp::Ordering::Less => Verdict::Less,
            };
            (Some(mean), verdict)
        };
        rows.push(ParadoxRow { node: i as u32, f, ff, local_ff_mean: local, verdict });
    }
    rows
}

/// All whole-graph statistics in one pass. Requires at least one edge.
pub fn paradox_summary(g: &Graph) -> Result<ParadoxSummary, MetricsError> {
    if g.n() == 0 {
        return Err(MetricsError::EmptyGraph);
    }
    let (sum, sumsq) = degree_moments(g);
    if sum == 0 {
        return Err(MetricsError::NoEdges);
    }
    let n = g.n() as i128;
    let mu_f = Rational::new(sum, n);
    let mu_ff_global = Rational::new(sumsq, sum);
    let degree_variance = Rational::new(sumsq, n) - mu_f * mu_f;
    let gap = mu_ff_global - mu_f;

    let mut counts = VerdictCounts::default();
    let mut defined = 0usize;
    let mut local_sum = 0.0f64;
    for row in paradox_table(g) {
        match row.verdict {
            Verdict::Greater => counts.greater += 1,
            Verdict::Equal => counts.equal += 1,
            Verdict::Less => counts.less += 1,
            Verdict::Undefined => counts.undefined += 1,
        }
        if row.f > 0 {
            defined += 1;
            local_sum += row.ff as f64 / row.f as f64;
        }
    }
    // sum > 0 guarantees at least two non-isolated nodes.
    let local_mean_avg = local_sum / defined as f64;

    Ok(ParadoxSummary { mu_f, mu_ff_global, degree_variance, gap, counts, local_mean_avg })
}

fn degree_moments(g: &Graph) -> (i128, i128) {
    let mut sum = 0i128;
    let mut sumsq = 0i128;
    for d in degrees(g).as_slice() {
        let d = *d as i128;
        sum += d;
        sumsq += d * d;
    }
    (sum, sumsq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{network1, network2, network3};
    use crate::graph::parse_edge_list;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn network1_per_node_metrics() {
        let g = network1();
        let ff: Vec<u64> = (0..5).map(|i| friends_of_friends(&g, i).unwrap()).collect();
        assert_eq!(ff, vec![4, 4, 2, 3, 3]);
        let means: Vec<_> = (0..5).map(|i| local_ff_mean(&g, i).unwrap().unwrap()).collect();
        assert_eq!(means, vec![r(4, 3), r(2, 1), r(2, 1), r(3, 1), r(3, 1)]);
        let verdicts: Vec<_> = paradox_table(&g).into_iter().map(|row| row.verdict).collect();
        assert_eq!(
            verdicts,
            vec![Verdict::Less, Verdict::Equal, Verdict::Greater, Verdict::Greater, Verdict::Greater]
        );
    }

    #[test]
    fn network1_summary() {
        let g = network1();
        assert_eq!(global_ff_mean(&g).unwrap(), r(2, 1));
        let s = paradox_summary(&g).unwrap();
        assert_eq!(s.mu_f, r(8, 5));
        assert_eq!(s.degree_variance, r(16, 25));
        assert_eq!(s.gap, r(2, 5));
        assert_eq!(
            s.counts,
            VerdictCounts { greater: 3, equal: 1, less: 1, undefined: 0 }
        );
        // (4/3 + 2 + 2 + 3 + 3) / 5
        assert!((s.local_mean_avg - 34.0 / 15.0).abs() < 1e-12);
    }

    #[test]
    fn network2_summary() {
        let g = network2();
        let ff: Vec<u64> = (0..5).map(|i| friends_of_friends(&g, i).unwrap()).collect();
        assert_eq!(ff, vec![2, 2, 1, 1, 2]);
        let s = paradox_summary(&g).unwrap();
        assert_eq!(s.mu_f, r(6, 5));
        assert_eq!(s.degree_variance, r(4, 25));
        assert_eq!(s.mu_ff_global, r(4, 3));
        assert_eq!(s.gap, r(2, 15));
        assert_eq!(
            s.counts,
            VerdictCounts { greater: 2, equal: 2, less: 1, undefined: 0 }
        );
        let verdicts: Vec<_> = paradox_table(&g).into_iter().map(|row| row.verdict).collect();
        assert_eq!(
            verdicts,
            vec![Verdict::Less, Verdict::Greater, Verdict::Equal, Verdict::Equal, Verdict::Greater]
        );
    }

    #[test]
    fn network3_summary() {
        let g = network3();
        let ff: Vec<u64> = (0..5).map(|i| friends_of_friends(&g, i).unwrap()).collect();
        assert_eq!(ff, vec![10, 10, 10, 10, 4]);
        assert_eq!(local_ff_mean(&g, 1).unwrap().unwrap(), r(10, 3));
        assert_eq!(local_ff_mean(&g, 4).unwrap().unwrap(), r(4, 1));
        let s = paradox_summary(&g).unwrap();
        assert_eq!(s.mu_f, r(14, 5));
        assert_eq!(s.degree_variance, r(24, 25));
        assert_eq!(s.mu_ff_global, r(22, 7));
        assert_eq!(
            s.counts,
            VerdictCounts { greater: 4, equal: 0, less: 1, undefined: 0 }
        );
    }

    #[test]
    fn identity_holds_exactly_on_fixtures() {
        for g in [network1(), network2(), network3()] {
            let s = paradox_summary(&g).unwrap();
            assert_eq!(s.mu_ff_global, s.mu_f + s.degree_variance / s.mu_f);
            assert_eq!(s.gap, s.degree_variance / s.mu_f);
        }
    }

    #[test]
    fn ff_total_equals_sum_of_squared_degrees() {
        for g in [network1(), network2(), network3()] {
            let total: u64 = (0..5).map(|i| friends_of_friends(&g, i).unwrap()).sum();
            let sumsq: u64 = crate::graph::degrees(&g).as_slice().iter().map(|d| d * d).sum();
            assert_eq!(total, sumsq);
        }
    }

    #[test]
    fn complete_graph_has_zero_gap() {
        let mut edges = Vec::new();
        for i in 0..4u32 {
            for j in (i + 1)..4 {
                edges.push((i, j));
            }
        }
        let g = crate::graph::Graph::from_edges(4, edges).unwrap();
        let s = paradox_summary(&g).unwrap();
        assert_eq!(s.mu_f, r(3, 1));
        assert_eq!(s.degree_variance, r(0, 1));
        assert_eq!(s.mu_ff_global, r(3, 1));
        assert_eq!(s.gap, r(0, 1));
        assert_eq!(s.counts.equal, 4);
    }

    #[test]
    fn one_regular_pairing_is_all_equal() {
        let g = parse_edge_list("0 1\n2 3\n").unwrap();
        assert_eq!(mean_friends(&g).unwrap(), r(1, 1));
        let rows = paradox_table(&g);
        assert!(rows.iter().all(|row| row.verdict == Verdict::Equal));
        assert_eq!(local_ff_mean(&g, 0).unwrap().unwrap(), r(1, 1));
    }

    #[test]
    fn complete_graph_mean_is_n_minus_one() {
        for n in 2..7u32 {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    edges.push((i, j));
                }
            }
            let g = crate::graph::Graph::from_edges(n as usize, edges).unwrap();
            assert_eq!(mean_friends(&g).unwrap(), r(n as i128 - 1, 1));
        }
    }

    #[test]
    fn isolated_nodes_are_undefined_but_counted() {
        let g = parse_edge_list("# n=3\n0 1\n").unwrap();
        assert_eq!(friends_of_friends(&g, 2).unwrap(), 0);
        assert_eq!(local_ff_mean(&g, 2).unwrap(), None);
        let rows = paradox_table(&g);
        assert_eq!(rows[2].verdict, Verdict::Undefined);
        let s = paradox_summary(&g).unwrap();
        // Isolated node drags the mean below the 1-regular value.
        assert_eq!(s.mu_f, r(2, 3));
        assert_eq!(s.counts.undefined, 1);
        assert_eq!(s.counts.equal, 2);
    }

    #[test]
    fn error_paths() {
        let g = parse_edge_list("0 1\n").unwrap();
        assert_eq!(
            friends_of_friends(&g, 2).unwrap_err(),
            MetricsError::NodeOutOfRange { node: 2, n: 2 }
        );
        let edgeless = parse_edge_list("# n=4\n").unwrap();
        assert_eq!(global_ff_mean(&edgeless).unwrap_err(), MetricsError::NoEdges);
        assert_eq!(paradox_summary(&edgeless).unwrap_err(), MetricsError::NoEdges);
        assert_eq!(structural_information(&edgeless).unwrap_err(), MetricsError::NoEdges);
        assert_eq!(mean_friends(&edgeless).unwrap(), r(0, 1));
        let empty = parse_edge_list("").unwrap();
        assert_eq!(mean_friends(&empty).unwrap_err(), MetricsError::EmptyGraph);
        assert_eq!(paradox_summary(&empty).unwrap_err(), MetricsError::EmptyGraph);
    }

    #[test]
    fn structural_information_matches_variance() {
        assert_eq!(structural_information(&network1()).unwrap(), r(16, 25));
        assert_eq!(structural_information(&network3()).unwrap(), r(24, 25));
        let ring = parse_edge_list("0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(structural_information(&ring).unwrap(), r(0, 1));
    }

    #[test]
    fn single_edge_local_means() {
        let g = parse_edge_list("0 1\n").unwrap();
        assert_eq!(local_ff_mean(&g, 0).unwrap().unwrap(), r(1, 1));
        assert_eq!(local_ff_mean(&g, 1).unwrap().unwrap(), r(1, 1));
    }
}
