//! Summary statistics for degree sequences and the median/mean/deviation
//! bounds that connect them.
//!
//! The pivot is a pair of classical facts. First, `|mean - median| <=
//! sigma` for any finite-variance distribution, so knowing only a mean of
//! 190 against a median of 100 already forces `sigma >= 90`. Second, for
//! a right-skewed distribution the one-sided Chebyshev argument bounds
//! the mass at or beyond `2*mean - median` by `sigma^2 / (mean -
//! median)^2 - 0.5`, clamped here to `[0, 1]`. When the gap equals sigma
//! the bound is exactly one half.
//!
//! [`fit_point_model`] builds small equal-weight support sets that stand
//! in for a full distribution while matching a target median exactly and
//! a target mean (and optionally sigma) within tolerance. Everything in
//! this module works in `f64`; exactness lives in [`crate::paradox`].

use serde::Serialize;
use thiserror::Error;

/// Relative tolerance on the fitted mean in [`fit_point_model`].
pub const FIT_MEAN_TOLERANCE: f64 = 0.01;
/// Relative tolerance on the mean in [`validate_point_model`].
pub const MEAN_TOLERANCE: f64 = 0.02;
/// Relative tolerance on sigma in both fitting and validation.
pub const SIGMA_TOLERANCE: f64 = 0.10;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("empty input, statistic undefined")]
    Empty,
    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },
    #[error("tail bound requires mean > median, got mean {mean} <= median {median}")]
    NotRightSkewed { mean: f64, median: f64 },
    #[error("tail bound requires sigma > 0")]
    NonPositiveSigma,
    #[error("point-model size must be an odd integer >= 3, got {k}")]
    BadK { k: usize },
    #[error("target median must be positive and finite, got {median}")]
    BadMedian { median: f64 },
    #[error("target mean {mean} must be finite and at least the median {median}")]
    MeanBelowMedian { mean: f64, median: f64 },
    #[error(
        "sigma {target} is infeasible: |mean - median| = {min} is a lower bound for sigma"
    )]
    SigmaBelowMallows { target: f64, min: f64 },
    #[error("fit reached mean {achieved}, outside 1% of target {target}")]
    MeanUnreachable { achieved: f64, target: f64 },
    #[error("sigma {target} unreachable with {k} nonnegative points at this median and mean, best achieved {achieved}")]
    SigmaUnreachable { achieved: f64, target: f64, k: usize },
    #[error("point values must be finite and non-negative, found {value}")]
    BadPoint { value: f64 },
}

/// Which side of the median the mean falls on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SkewDirection {
    Right,
    Left,
    Symmetric,
}

/// Median, mean and population standard deviation of one sequence,
/// with the `|mean - median| <= sigma` slack precomputed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DistributionSummary {
    pub count: usize,
    pub mean: f64,
    /// Sorted-midpoint convention: the average of the two central values
    /// for even counts.
    pub median: f64,
    /// Population convention (divide by n).
    pub std_dev: f64,
    /// `std_dev - |mean - median|`, nonnegative up to rounding.
    pub mallows_slack: f64,
    pub skew_direction: SkewDirection,
}

/// Summarizes a sequence of finite reals (typically a degree sequence).
pub fn summarize(values: &[f64]) -> Result<DistributionSummary, StatsError> {
    if values.is_empty() {
        return Err(StatsError::Empty);
    }
    if let Some(index) = values.iter().position(|v| !v.is_finite()) {
        return Err(StatsError::NonFinite { index });
    }
    let count = values.len();
    let mean = values.iter().sum::<f64>() / count as f64;
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("values are finite"));
    let median = median_of_sorted(&sorted);
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / count as f64;
    let std_dev = var.sqrt();
    let skew_direction = if mean > median {
        SkewDirection::Right
    } else if mean < median {
        SkewDirection::Left
    } else {
        SkewDirection::Symmetric
    };
    Ok(DistributionSummary {
        count,
        mean,
        median,
        std_dev,
        mallows_slack: std_dev - (mean - median).abs(),
        skew_direction,
    })
}

fn median_of_sorted(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

/// The tightest deviation floor available from a mean and median alone.
pub fn implied_sigma_lower_bound(mean: f64, median: f64) -> f64 {
    (mean - median).abs()
}

/// Outcome of [`mallows_check`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MallowsCheck {
    /// Whether `|mean - median| <= std_dev`, allowing rounding noise of
    /// one part in 1e9 of the magnitudes involved. A false value on real
    /// data indicates a computation bug, not an unusual distribution.
    pub holds: bool,
    /// `std_dev - |mean - median|`, reported unrounded.
    pub slack: f64,
    /// `|mean - median|`: the least deviation any distribution with this
    /// mean and median can have.
    pub sigma_lower_bound: f64,
}

/// Checks `|mean - median| <= std_dev` on a summary and reports the slack
/// together with the deviation floor implied by the mean/median pair.
pub fn mallows_check(s: &DistributionSummary) -> MallowsCheck {
    mallows_check_values(s.mean, s.median, s.std_dev)
}

/// [`mallows_check`] on explicit values, for callers that have a mean,
/// median and deviation without the underlying data.
pub fn mallows_check_values(mean: f64, median: f64, std_dev: f64) -> MallowsCheck {
    let gap = (mean - median).abs();
    let tol = 1e-9 * std_dev.max(mean.abs()).max(1.0);
    MallowsCheck { holds: gap <= std_dev + tol, slack: std_dev - gap, sigma_lower_bound: gap }
}

/// One-sided tail diagnosis for a right-skewed distribution.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TailBoundReport {
    /// `(mean - median) / sigma`.
    pub alpha: f64,
    /// `2*mean - median`, the point the bound speaks about.
    pub threshold: f64,
    /// Upper bound on the fraction of mass at or above the threshold:
    /// `sigma^2 / (mean - median)^2 - 0.5`, clamped to `[0, 1]`. Values
    /// at 1 are vacuous, which happens as soon as sigma is much larger
    /// than the mean-median gap.
    pub bound: f64,
    /// Observed fraction of values at or above the threshold, when data
    /// was supplied.
    pub empirical: Option<f64>,
    /// Whether the observed fraction respects the bound. The derivation
    /// assumes a continuous distribution, so discrete data may land
    /// outside; this field makes that visible.
    pub within_bound: Option<bool>,
}

/// Tail bound from explicit `mean`, `median` and `sigma`, optionally
/// checked against raw data. Requires `mean > median` and `sigma > 0`.
pub fn tail_bound_for(
    mean: f64,
    median: f64,
    sigma: f64,
    values: Option<&[f64]>,
) -> Result<TailBoundReport, StatsError> {
    if !(mean > median) {
        return Err(StatsError::NotRightSkewed { mean, median });
    }
    if !(sigma > 0.0) {
        return Err(StatsError::NonPositiveSigma);
    }
    let gap = mean - median;
    let threshold = 2.0 * mean - median;
    let bound = (sigma * sigma / (gap * gap) - 0.5).clamp(0.0, 1.0);
    let empirical = match values {
        Some([]) => return Err(StatsError::Empty),
        Some(vs) => {
            Some(vs.iter().filter(|&&v| v >= threshold).count() as f64 / vs.len() as f64)
        }
        None => None,
    };
    Ok(TailBoundReport {
        alpha: gap / sigma,
        threshold,
        bound,
        empirical,
        within_bound: empirical.map(|e| e <= bound),
    })
}

/// Tail bound for a summarized sequence; see [`tail_bound_for`].
pub fn chebyshev_tail_bound(
    s: &DistributionSummary,
    values: Option<&[f64]>,
) -> Result<TailBoundReport, StatsError> {
    tail_bound_for(s.mean, s.median, s.std_dev, values)
}

/// A small equal-weight support set standing in for a full distribution.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointDistribution {
    points: Vec<f64>,
}

impl PointDistribution {
    /// Sorts and wraps the given support values. Values must be finite
    /// and non-negative, and at least one is required.
    pub fn new(mut points: Vec<f64>) -> Result<PointDistribution, StatsError> {
        if points.is_empty() {
            return Err(StatsError::Empty);
        }
        if let Some(&value) = points.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(StatsError::BadPoint { value });
        }
        points.sort_unstable_by(|a, b| a.partial_cmp(b).expect("points are finite"));
        Ok(PointDistribution { points })
    }

    /// Support values, ascending.
    pub fn points(&self) -> &[f64] {
        &self.points
    }
}

/// Achieved statistics of a point model against its targets.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PointModelReport {
    pub median: f64,
    pub mean: f64,
    pub std_dev: f64,
    /// Median must match exactly; it is pinned, not approximated.
    pub median_ok: bool,
    /// Mean within [`MEAN_TOLERANCE`] of the target.
    pub mean_ok: bool,
    /// Sigma within [`SIGMA_TOLERANCE`] of the target, when one was given.
    pub sigma_ok: Option<bool>,
    pub pass: bool,
}

/// Compares a point model's achieved median, mean and sigma against the
/// targets. Tolerances: median exact, mean 2% relative, sigma 10%
/// relative when a target is supplied.
pub fn validate_point_model(
    p: &PointDistribution,
    target_median: f64,
    target_mean: f64,
    target_sigma: Option<f64>,
) -> PointModelReport {
    let points = p.points();
    let median = median_of_sorted(points);
    let mean = points.iter().sum::<f64>() / points.len() as f64;
    let var =
        points.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / points.len() as f64;
    let std_dev = var.sqrt();
    let median_ok = median == target_median;
    let mean_ok = rel_err(mean, target_mean) <= MEAN_TOLERANCE;
    let sigma_ok = target_sigma.map(|s| rel_err(std_dev, s) <= SIGMA_TOLERANCE);
    PointModelReport {
        median,
        mean,
        std_dev,
        median_ok,
        mean_ok,
        sigma_ok,
        pass: median_ok && mean_ok && sigma_ok.unwrap_or(true),
    }
}

fn rel_err(achieved: f64, target: f64) -> f64 {
    if target == 0.0 {
        return achieved.abs();
    }
    (achieved - target).abs() / target.abs()
}

/// Fits a k-point equal-weight model to a target median, mean and
/// optionally sigma.
///
/// The middle value is pinned to the median, so that constraint is exact
/// by construction. The remaining coordinates start from a geometric
/// progression spanning `[1, 10 * target_mean]` and are refined by
/// deterministic coordinate descent: each coordinate in turn is scanned
/// over its feasible interval (bounded by its sorted neighbors) on a
/// fixed grid that is repeatedly narrowed, ties resolved toward smaller
/// values. The same inputs always produce the same model.
///
/// Fails up front when `target_sigma` is below `target_mean -
/// target_median` (no distribution beats that floor), and after the
/// search when the mean cannot be brought within 1% or sigma within 10%,
/// reporting the best achieved value. The output always passes
/// [`validate_point_model`] against the same targets.
pub fn fit_point_model(
    target_median: f64,
    target_mean: f64,
    target_sigma: Option<f64>,
    k: usize,
) -> Result<PointDistribution, StatsError> {
    if k < 3 || k % 2 == 0 {
        return Err(StatsError::BadK { k });
    }
    if !target_median.is_finite() || !(target_median > 0.0) {
        return Err(StatsError::BadMedian { median: target_median });
    }
    if !target_mean.is_finite() || target_mean < target_median {
        return Err(StatsError::MeanBelowMedian { mean: target_mean, median: target_median });
    }
    if let Some(s) = target_sigma {
        if !s.is_finite() || s < 0.0 {
            return Err(StatsError::BadPoint { value: s });
        }
        let min = target_mean - target_median;
        if s < min {
            return Err(StatsError::SigmaBelowMallows { target: s, min });
        }
    }

    // Zero gap with no spread requested: the constant model is exact.
    if target_mean == target_median && target_sigma.unwrap_or(0.0) == 0.0 {
        return Ok(PointDistribution { points: vec![target_median; k] });
    }

    let mid = k / 2;
    let top = 10.0 * target_mean;
    let mut points: Vec<f64> = (0..k)
        .map(|i| top.powf(i as f64 / (k - 1) as f64))
        .collect();
    points[mid] = target_median;
    for i in 0..mid {
        points[i] = points[i].min(target_median);
    }
    for i in mid + 1..k {
        points[i] = points[i].max(target_median);
    }

    // Generous ceiling for the largest point: enough mass to reach any
    // feasible mean and sigma for this k.
    let cap = (k as f64) * (target_mean + 4.0 * target_sigma.unwrap_or(0.0)).max(top);

    // Mean tolerance is tenfold tighter than sigma's, so its squared
    // error carries a hundredfold weight: an infeasible sigma target is
    // then absorbed as sigma error instead of dragging the mean off.
    let loss = |pts: &[f64]| -> f64 {
        let mean = pts.iter().sum::<f64>() / k as f64;
        let em = (mean - target_mean) / target_mean;
        let mut l = 100.0 * em * em;
        if let Some(s) = target_sigma {
            let var =
                pts.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / k as f64;
            let es = (var.sqrt() - s) / s.max(1e-9);
            l += es * es;
        }
        l
    };

    const GRID: usize = 48;
    const ZOOMS: usize = 4;
    const SWEEPS: usize = 120;
    let mut best_loss = loss(&points);
    for _ in 0..SWEEPS {
        for i in (0..k).filter(|&i| i != mid) {
            let outer_lo = if i == 0 { 0.0 } else { points[i - 1] };
            let outer_hi = if i == k - 1 { cap } else { points[i + 1] };
            let mut lo = outer_lo;
            let mut hi = outer_hi;
            for _ in 0..ZOOMS {
                let mut best_x = points[i];
                let mut best = loss(&points);
                for t in 0..=GRID {
                    let x = lo + (hi - lo) * t as f64 / GRID as f64;
                    points[i] = x;
                    let l = loss(&points);
                    if l < best || (l == best && x < best_x) {
                        best = l;
                        best_x = x;
                    }
                }
                points[i] = best_x;
                let step = (hi - lo) / GRID as f64;
                lo = (best_x - step).max(outer_lo);
                hi = (best_x + step).min(outer_hi);
            }
        }
        let now = loss(&points);
        let converged = now < 1e-22 || best_loss - now < 1e-18;
        best_loss = now;
        if converged {
            break;
        }
    }

    let model = PointDistribution { points };
    let achieved_mean = model.points.iter().sum::<f64>() / k as f64;
    // Sigma first: when both are off, sigma is the constraint the search
    // gave up on, so it is the one worth naming.
    if let Some(s) = target_sigma {
        let var = model
            .points
            .iter()
            .map(|v| (v - achieved_mean) * (v - achieved_mean))
            .sum::<f64>()
            / k as f64;
        let achieved = var.sqrt();
        if rel_err(achieved, s) > SIGMA_TOLERANCE {
            return Err(StatsError::SigmaUnreachable { achieved, target: s, k });
        }
    }
    if rel_err(achieved_mean, target_mean) > FIT_MEAN_TOLERANCE {
        return Err(StatsError::MeanUnreachable { achieved: achieved_mean, target: target_mean });
    }
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SEVEN: [f64; 7] = [1.0, 5.0, 20.0, 100.0, 200.0, 200.0, 900.0];
    const NINE: [f64; 9] = [1.0, 2.0, 5.0, 20.0, 100.0, 300.0, 300.0, 300.0, 800.0];

    #[test]
    fn summarize_seven_point_instance() {
        let s = summarize(&SEVEN).unwrap();
        assert_eq!(s.count, 7);
        assert_eq!(s.median, 100.0);
        let mean = 1426.0 / 7.0;
        assert!((s.mean - mean).abs() <= 1e-9 * mean);
        let sigma = (900426.0 / 7.0 - mean * mean).sqrt();
        assert!((s.std_dev - sigma).abs() <= 1e-9 * sigma);
        assert!((s.std_dev - 295.1826).abs() < 1e-3);
        assert_eq!(s.skew_direction, SkewDirection::Right);
    }

    #[test]
    fn summarize_nine_point_instance() {
        let s = summarize(&NINE).unwrap();
        assert_eq!(s.median, 100.0);
        let mean = 1828.0 / 9.0;
        assert!((s.mean - mean).abs() <= 1e-9 * mean);
        let sigma = (920430.0 / 9.0 - mean * mean).sqrt();
        assert!((s.std_dev - sigma).abs() <= 1e-9 * sigma);
        assert!((s.std_dev - 247.0139).abs() < 1e-3);
    }

    #[test]
    fn summarize_handles_small_and_even_inputs() {
        let s = summarize(&[4.0, 1.0, 3.0, 2.0]).unwrap();
        assert_eq!(s.median, 2.5);
        assert_eq!(s.mean, 2.5);
        assert_eq!(s.skew_direction, SkewDirection::Symmetric);
        let s = summarize(&[7.0]).unwrap();
        assert_eq!(s.median, 7.0);
        assert_eq!(s.std_dev, 0.0);
    }

    #[test]
    fn summarize_rejects_bad_input() {
        assert_eq!(summarize(&[]).unwrap_err(), StatsError::Empty);
        assert_eq!(
            summarize(&[1.0, f64::NAN]).unwrap_err(),
            StatsError::NonFinite { index: 1 }
        );
        assert_eq!(
            summarize(&[f64::INFINITY]).unwrap_err(),
            StatsError::NonFinite { index: 0 }
        );
    }

    #[test]
    fn constant_sequence_is_degenerate() {
        let s = summarize(&[0.1; 9]).unwrap();
        let check = mallows_check(&s);
        assert!(check.holds);
        assert!(check.slack.abs() < 1e-12);
        assert!(check.sigma_lower_bound < 1e-12);
    }

    #[test]
    fn implied_lower_bound_is_the_gap() {
        assert_eq!(implied_sigma_lower_bound(190.0, 100.0), 90.0);
        assert_eq!(implied_sigma_lower_bound(100.0, 190.0), 90.0);
        assert_eq!(implied_sigma_lower_bound(5.0, 5.0), 0.0);
    }

    #[test]
    fn mallows_holds_on_the_instances() {
        for values in [&SEVEN[..], &NINE[..]] {
            let s = summarize(values).unwrap();
            let check = mallows_check(&s);
            assert!(check.holds);
            assert!(check.slack > 0.0);
        }
    }

    #[test]
    fn tail_bound_at_alpha_one_is_exactly_half() {
        let r = tail_bound_for(190.0, 100.0, 90.0, None).unwrap();
        assert_eq!(r.alpha, 1.0);
        assert_eq!(r.threshold, 280.0);
        assert_eq!(r.bound, 0.5);
        assert_eq!(r.empirical, None);
    }

    #[test]
    fn tail_bound_clamps_to_vacuous() {
        let r = tail_bound_for(190.0, 100.0, 300.0, None).unwrap();
        assert_eq!(r.bound, 1.0);
        let r = tail_bound_for(190.0, 100.0, 1e-3, None).unwrap();
        assert_eq!(r.bound, 0.0);
    }

    #[test]
    fn tail_bound_empirical_fraction() {
        let s = summarize(&SEVEN).unwrap();
        let r = chebyshev_tail_bound(&s, Some(&SEVEN)).unwrap();
        // threshold = 2 * 203.714... - 100, only 900 exceeds it
        assert!((r.threshold - (2.0 * 1426.0 / 7.0 - 100.0)).abs() < 1e-9);
        assert_eq!(r.empirical, Some(1.0 / 7.0));
        assert_eq!(r.within_bound, Some(true));
    }

    #[test]
    fn tail_bound_preconditions() {
        assert_eq!(
            tail_bound_for(100.0, 100.0, 5.0, None).unwrap_err(),
            StatsError::NotRightSkewed { mean: 100.0, median: 100.0 }
        );
        assert_eq!(
            tail_bound_for(90.0, 100.0, 5.0, None).unwrap_err(),
            StatsError::NotRightSkewed { mean: 90.0, median: 100.0 }
        );
        assert_eq!(
            tail_bound_for(190.0, 100.0, 0.0, None).unwrap_err(),
            StatsError::NonPositiveSigma
        );
        assert_eq!(
            tail_bound_for(190.0, 100.0, 90.0, Some(&[])).unwrap_err(),
            StatsError::Empty
        );
    }

    #[test]
    fn point_model_constructor_sorts_and_checks() {
        let p = PointDistribution::new(vec![5.0, 1.0, 3.0]).unwrap();
        assert_eq!(p.points(), &[1.0, 3.0, 5.0]);
        assert_eq!(PointDistribution::new(vec![]).unwrap_err(), StatsError::Empty);
        assert_eq!(
            PointDistribution::new(vec![1.0, -2.0]).unwrap_err(),
            StatsError::BadPoint { value: -2.0 }
        );
    }

    #[test]
    fn known_instances_pass_validation() {
        for (values, sigma) in [(&SEVEN[..], 295.1826), (&NINE[..], 247.0139)] {
            let p = PointDistribution::new(values.to_vec()).unwrap();
            let report = validate_point_model(&p, 100.0, 200.0, None);
            assert!(report.pass, "median/mean validation failed: {report:?}");
            assert!(report.median_ok && report.mean_ok);
            assert!((report.std_dev - sigma).abs() < 1e-3);
        }
    }

    #[test]
    fn validation_reports_sigma_misses_honestly() {
        // A sigma target well off the computed value must fail the check
        // while the report still carries the achieved sigma.
        let p = PointDistribution::new(SEVEN.to_vec()).unwrap();
        let report = validate_point_model(&p, 100.0, 200.0, Some(375.0));
        assert_eq!(report.sigma_ok, Some(false));
        assert!(!report.pass);
        assert!((report.std_dev - 295.1826).abs() < 1e-3);
        let p = PointDistribution::new(NINE.to_vec()).unwrap();
        let report = validate_point_model(&p, 100.0, 200.0, Some(290.0));
        assert_eq!(report.sigma_ok, Some(false));
        assert!((report.std_dev - 247.0139).abs() < 1e-3);
    }

    #[test]
    fn fit_seven_and_nine_point_models() {
        for k in [7usize, 9] {
            let p = fit_point_model(100.0, 200.0, None, k).unwrap();
            assert_eq!(p.points().len(), k);
            let report = validate_point_model(&p, 100.0, 200.0, None);
            assert!(report.pass, "fit failed validation for k={k}: {report:?}");
            assert_eq!(report.median, 100.0);
            assert!((report.mean - 200.0).abs() <= 2.0);
        }
    }

    #[test]
    fn fit_matches_requested_sigma() {
        let p = fit_point_model(100.0, 200.0, Some(250.0), 7).unwrap();
        let report = validate_point_model(&p, 100.0, 200.0, Some(250.0));
        assert!(report.pass, "{report:?}");
        assert!((report.std_dev - 250.0).abs() <= 25.0);
    }

    #[test]
    fn fit_degenerate_model_is_constant() {
        let p = fit_point_model(42.0, 42.0, None, 3).unwrap();
        assert_eq!(p.points(), &[42.0, 42.0, 42.0]);
    }

    #[test]
    fn fit_is_deterministic() {
        let a = fit_point_model(100.0, 200.0, Some(250.0), 9).unwrap();
        let b = fit_point_model(100.0, 200.0, Some(250.0), 9).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn fit_rejects_bad_arguments() {
        assert_eq!(fit_point_model(100.0, 200.0, None, 4).unwrap_err(), StatsError::BadK { k: 4 });
        assert_eq!(fit_point_model(100.0, 200.0, None, 1).unwrap_err(), StatsError::BadK { k: 1 });
        assert_eq!(
            fit_point_model(0.0, 200.0, None, 3).unwrap_err(),
            StatsError::BadMedian { median: 0.0 }
        );
        assert_eq!(
            fit_point_model(100.0, 90.0, None, 3).unwrap_err(),
            StatsError::MeanBelowMedian { mean: 90.0, median: 100.0 }
        );
    }

    #[test]
    fn fit_names_the_violated_floor_for_tiny_sigma() {
        let err = fit_point_model(100.0, 200.0, Some(50.0), 7).unwrap_err();
        assert_eq!(err, StatsError::SigmaBelowMallows { target: 50.0, min: 100.0 });
    }

    #[test]
    fn fit_reports_unreachable_sigma() {
        // With the median pinned at 100 and mean 200, nonnegative points
        // cannot spread far enough for sigma 5000.
        match fit_point_model(100.0, 200.0, Some(5000.0), 5) {
            Err(StatsError::SigmaUnreachable { achieved, target, k }) => {
                assert_eq!(k, 5);
                assert_eq!(target, 5000.0);
                assert!(achieved < 1000.0);
            }
            other => panic!("expected SigmaUnreachable, got {other:?}"),
        }
    }

    #[test]
    fn bound_monotonicity_spot_checks() {
        // Wider gap at fixed sigma: bound cannot grow.
        let wide = tail_bound_for(200.0, 100.0, 120.0, None).unwrap();
        let narrow = tail_bound_for(150.0, 100.0, 120.0, None).unwrap();
        assert!(wide.bound <= narrow.bound);
        // Larger sigma at fixed gap: bound cannot shrink.
        let small = tail_bound_for(190.0, 100.0, 80.0, None).unwrap();
        let large = tail_bound_for(190.0, 100.0, 110.0, None).unwrap();
        assert!(small.bound <= large.bound);
    }
}
