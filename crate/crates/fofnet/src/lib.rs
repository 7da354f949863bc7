//! Graph analytics around the friends-of-friends effect: in most networks
//! the average degree of a node's neighbors exceeds the node's own degree,
//! and the size of the gap is exactly the degree variance divided by the
//! mean degree.
//!
//! The crate is organized in three layers.
//!
//! * [`graph`] and [`paradox`] hold the exact machinery: an immutable
//!   undirected simple graph with edge-list parsing, plus per-node and
//!   global friends-of-friends means computed in rational arithmetic so
//!   that `mu_ff_global = mu_f + variance / mu_f` can be tested as a hard
//!   equality rather than a tolerance check.
//! * [`stats`] and [`attention`] cover the approximate side: median, mean
//!   and deviation summaries of degree sequences, the `|mean - median| <=
//!   sigma` bound and the tail bound it implies for right-skewed data,
//!   small fixed-support models that stand in for a full distribution, and
//!   a linear supply/demand model of how much attention a member can give
//!   each additional friend.
//! * [`synth`] and [`report`] generate seeded synthetic social graphs
//!   (institutional hubs, dormant members, optional degree caps) and emit
//!   machine-readable reports. The `fofnet` binary wires these into a CLI
//!   with `analyze`, `generate`, `bounds` and `equilibrium` subcommands.
//!
//! [`fixtures`] ships three small worked examples used throughout the test
//! suite; their metrics are known in closed form.

pub mod attention;
pub mod fixtures;
pub mod graph;
pub mod paradox;
pub mod report;
pub mod stats;
pub mod synth;
