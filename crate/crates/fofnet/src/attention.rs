//! A linear market model of attention budgets.
//!
//! Treat the number of friends as a quantity and "cost" as the abstract
//! price axis. Attention behaves like demand: each additional friend gets
//! less of it, so the curve slopes down. Information received behaves
//! like supply: more friends deliver more, so that curve slopes up. Where
//! the two lines cross is the equilibrium friend count.
//!
//! The comparative-static of interest: when each friend supplies less
//! (the supply slope is scaled down), the crossing moves right, so the
//! equilibrium number of friends rises. [`shift_supply`] implements that
//! scaling; [`translate_supply`] is an alternative reading that slides
//! the whole curve along the friend axis instead and is kept out of the
//! main analysis path.

use serde::Serialize;
use thiserror::Error;

/// A line `cost = intercept + slope * n` over friend count `n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LinearCurve {
    /// Cost at zero friends.
    pub intercept: f64,
    /// Cost change per additional friend.
    pub slope: f64,
}

/// Crossing point of a demand and a supply curve.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Equilibrium {
    /// Friend count at the crossing, strictly positive for valid input.
    pub friend_count: f64,
    /// Cost at the crossing.
    pub cost: f64,
}

#[derive(Debug, Error, PartialEq)]
pub enum AttentionError {
    #[error("demand must not slope upward, got slope {slope}")]
    DemandSlopesUp { slope: f64 },
    #[error("supply must slope strictly upward, got slope {slope}")]
    SupplyNotRising { slope: f64 },
    #[error(
        "curves do not cross at positive friend count: demand starts at {demand_intercept}, supply at {supply_intercept}"
    )]
    NoPositiveEquilibrium { demand_intercept: f64, supply_intercept: f64 },
    #[error("supply factor must be in (0, 1], got {factor}")]
    BadFactor { factor: f64 },
    #[error("curve parameter is not finite")]
    NonFinite,
}

/// Cost of the curve at friend count `n`.
pub fn evaluate(curve: &LinearCurve, n: f64) -> f64 {
    curve.intercept + curve.slope * n
}

/// Flat demand at the given cost level: the curve of a member whose
/// attention does not thin out as friends accumulate, which is how
/// institutional members behave in this model.
pub fn institutional_demand(level: f64) -> LinearCurve {
    LinearCurve { intercept: level, slope: 0.0 }
}

/// Intersection of a downward (or flat) demand curve with a strictly
/// rising supply curve. The demand intercept must exceed the supply
/// intercept, otherwise no positive-friend-count crossing exists.
pub fn equilibrium(
    demand: &LinearCurve,
    supply: &LinearCurve,
) -> Result<Equilibrium, AttentionError> {
    for v in [demand.intercept, demand.slope, supply.intercept, supply.slope] {
        if !v.is_finite() {
            return Err(AttentionError::NonFinite);
        }
    }
    if demand.slope > 0.0 {
        return Err(AttentionError::DemandSlopesUp { slope: demand.slope });
    }
    if supply.slope <= 0.0 {
        return Err(AttentionError::SupplyNotRising { slope: supply.slope });
    }
    if demand.intercept <= supply.intercept {
        return Err(AttentionError::NoPositiveEquilibrium {
            demand_intercept: demand.intercept,
            supply_intercept: supply.intercept,
        });
    }
    let friend_count = (demand.intercept - supply.intercept) / (supply.slope - demand.slope);
    Ok(Equilibrium { friend_count, cost: evaluate(demand, friend_count) })
}

/// Scales the supply slope by a factor in `(0, 1]`: each friend delivers
/// that fraction of the information they used to, intercept unchanged. A
/// factor below 1 strictly raises the equilibrium friend count.
pub fn shift_supply(supply: &LinearCurve, factor: f64) -> Result<LinearCurve, AttentionError> {
    if !factor.is_finite() || factor <= 0.0 || factor > 1.0 {
        return Err(AttentionError::BadFactor { factor });
    }
    Ok(LinearCurve { intercept: supply.intercept, slope: supply.slope * factor })
}

/// Slides the supply curve by `friend_offset` along the friend axis,
/// keeping the slope: `cost(n)` becomes `cost(n - friend_offset)`. An
/// alternative way to weaken supply; not used by the equilibrium
/// analysis in the CLI or the acceptance checks.
pub fn translate_supply(supply: &LinearCurve, friend_offset: f64) -> LinearCurve {
    LinearCurve {
        intercept: supply.intercept - supply.slope * friend_offset,
        slope: supply.slope,
    }
}
