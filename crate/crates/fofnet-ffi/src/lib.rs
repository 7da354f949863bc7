//! C ABI over the fofnet core: opaque graph handles, flat status codes,
//! and plain-old-data mirrors of the summary structs. Every function is
//! panic-proof at the boundary and returns [`FofStatus`]; outputs go
//! through out-pointers that are written only on `Ok`.
//!
//! Strings returned by this library are heap-allocated and must be
//! released with [`fof_string_free`]; graphs with [`fof_graph_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use fofnet::attention::{equilibrium, shift_supply, LinearCurve};
use fofnet::graph::{parse_edge_list, Graph};
use fofnet::paradox::{friends_of_friends, local_ff_mean, paradox_summary};
use fofnet::stats::{summarize, tail_bound_for, SkewDirection};
use fofnet::synth::{generate, GeneratorConfig, Role};

/// Result of every FFI call. Values are stable; additions only append.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FofStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Edge-list text failed to parse.
    ParseError = 3,
    /// A node id was outside the graph.
    OutOfRange = 4,
    /// The requested statistic does not exist for this input, such as a
    /// local mean of an isolated node.
    Undefined = 5,
    /// The graph has no edges, so degree-weighted means do not exist.
    NoEdges = 6,
    /// A numeric argument violated the documented range.
    InvalidArgument = 7,
    /// An exact rational did not fit the 64-bit fields of the output.
    Overflow = 8,
    /// Unexpected internal failure.
    Internal = 9,
}

/// Opaque undirected graph handle.
pub struct FofGraph(Graph);

/// Exact rational as a reduced 64-bit fraction.
#[repr(C)]
#[derive(Clone, Copy)]
pub struct FofRational {
    pub numer: i64,
    pub denom: i64,
}

/// Graph-level paradox metrics; rationals are exact and reduced.
#[repr(C)]
pub struct FofParadoxSummary {
    pub mean_degree: FofRational,
    pub global_ff_mean: FofRational,
    pub degree_variance: FofRational,
    pub gap: FofRational,
    pub nodes_greater: u64,
    pub nodes_equal: u64,
    pub nodes_less: u64,
    pub nodes_undefined: u64,
}

/// Five-number style summary of a real-valued sequence.
#[repr(C)]
pub struct FofDistributionSummary {
    pub count: u64,
    pub mean: f64,
    pub median: f64,
    pub std_dev: f64,
    /// `std_dev - |mean - median|`; non-negative for every sequence.
    pub mallows_slack: f64,
    /// 0 right-skewed, 1 left-skewed, 2 symmetric.
    pub skew_direction: i32,
}

/// One-sided tail bound at the reflected threshold `2*mean - median`.
#[repr(C)]
pub struct FofTailBound {
    pub alpha: f64,
    pub threshold: f64,
    pub bound: f64,
    /// Observed tail fraction; NaN when no sample was supplied.
    pub empirical: f64,
}

/// Generator parameters, mirroring the core config field for field.
#[repr(C)]
pub struct FofGeneratorConfig {
    pub n_individuals: u64,
    pub edge_prob: f64,
    pub n_institutions: u64,
    pub institution_attach_prob: f64,
    pub dormant_fraction: f64,
    pub dormant_activity: f64,
    pub seed: u64,
}

fn guarded(body: impl FnOnce() -> FofStatus) -> FofStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(FofStatus::Internal)
}

fn to_rational(r: &fofnet::paradox::Rational) -> Option<FofRational> {
    Some(FofRational {
        numer: i64::try_from(*r.numer()).ok()?,
        denom: i64::try_from(*r.denom()).ok()?,
    })
}

/// Parses edge-list text into a new graph handle.
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` to writable
/// memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn fof_graph_parse(
    text: *const c_char,
    out: *mut *mut FofGraph,
) -> FofStatus {
    guarded(|| {
        if text.is_null() || out.is_null() {
            return FofStatus::NullArgument;
        }
        let raw = unsafe { CStr::from_ptr(text) };
        let Ok(s) = raw.to_str() else {
            return FofStatus::InvalidUtf8;
        };
        match parse_edge_list(s) {
            Ok(g) => {
                unsafe { *out = Box::into_raw(Box::new(FofGraph(g))) };
                FofStatus::Ok
            }
            Err(_) => FofStatus::ParseError,
        }
    })
}

/// Releases a graph handle. Null is a no-op.
///
/// # Safety
/// `g` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fof_graph_free(g: *mut FofGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fof_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

unsafe fn with_graph<T>(
    g: *const FofGraph,
    out: *mut T,
    body: impl FnOnce(&Graph) -> Result<T, FofStatus>,
) -> FofStatus {
    guarded(AssertUnwindSafe(|| {
        if g.is_null() || out.is_null() {
            return FofStatus::NullArgument;
        }
        match body(unsafe { &(*g).0 }) {
            Ok(value) => {
                unsafe { out.write(value) };
                FofStatus::Ok
            }
            Err(status) => status,
        }
    }))
}

/// Writes the node count.
///
/// # Safety
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fof_graph_node_count(g: *const FofGraph, out: *mut u64) -> FofStatus {
    unsafe { with_graph(g, out, |graph| Ok(graph.n() as u64)) }
}

/// Writes the edge count.
///
/// # Safety
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fof_graph_edge_count(g: *const FofGraph, out: *mut u64) -> FofStatus {
    unsafe { with_graph(g, out, |graph| Ok(graph.edge_count() as u64)) }
}

/// Writes the degree of `node`.
///
/// # Safety
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fof_graph_degree(
    g: *const FofGraph,
    node: u32,
    out: *mut u64,
) -> FofStatus {
    unsafe {
        with_graph(g, out, |graph| {
            if (node as usize) < graph.n() {
                Ok(graph.degree(node) as u64)
            } else {
                Err(FofStatus::OutOfRange)
            }
        })
    }
}

/// Writes the canonical edge-list text; release with [`fof_string_free`].
///
/// # Safety
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fof_graph_to_edge_list(
    g: *const FofGraph,
    out: *mut *mut c_char,
) -> FofStatus {
    unsafe {
        with_graph(g, out, |graph| {
            let text = graph.to_edge_list();
            match CString::new(text) {
                Ok(c) => Ok(c.into_raw()),
                Err(_) => Err(FofStatus::Internal),
            }
        })
    }
}

/// Writes the friends-of-friends count of `node`: the summed degrees of
/// its neighbors.
///
/// # Safety
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fof_friends_of_friends(
    g: *const FofGraph,
    node: u32,
    out: *mut u64,
) -> FofStatus {
    unsafe {
        with_graph(g, out, |graph| {
            friends_of_friends(graph, node).map_err(|_| FofStatus::OutOfRange)
        })
    }
}

/// Writes the exact local mean friends-of-friends of `node`. Isolated
/// nodes yield [`FofStatus::Undefined`].
///
/// # Safety
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fof_local_ff_mean(
    g: *const FofGraph,
    node: u32,
    out: *mut FofRational,
) -> FofStatus {
    unsafe {
        with_graph(g, out, |graph| match local_ff_mean(graph, node) {
            Ok(Some(mean)) => to_rational(&mean).ok_or(FofStatus::Overflow),
            Ok(None) => Err(FofStatus::Undefined),
            Err(_) => Err(FofStatus::OutOfRange),
        })
    }
}

/// Writes the graph-level paradox summary. Graphs without edges yield
/// [`FofStatus::NoEdges`].
///
/// # Safety
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fof_paradox_summary(
    g: *const FofGraph,
    out: *mut FofParadoxSummary,
) -> FofStatus {
    unsafe {
        with_graph(g, out, |graph| {
            let s = match paradox_summary(graph) {
                Ok(s) => s,
                Err(_) => return Err(FofStatus::NoEdges),
            };
            let convert = |r| to_rational(r).ok_or(FofStatus::Overflow);
            Ok(FofParadoxSummary {
                mean_degree: convert(&s.mu_f)?,
                global_ff_mean: convert(&s.mu_ff_global)?,
                degree_variance: convert(&s.degree_variance)?,
                gap: convert(&s.gap)?,
                nodes_greater: s.counts.greater as u64,
                nodes_equal: s.counts.equal as u64,
                nodes_less: s.counts.less as u64,
                nodes_undefined: s.counts.undefined as u64,
            })
        })
    }
}

/// Summarizes `len` finite values.
///
/// # Safety
/// `values` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fof_summarize(
    values: *const f64,
    len: usize,
    out: *mut FofDistributionSummary,
) -> FofStatus {
    guarded(AssertUnwindSafe(|| {
        if values.is_null() || out.is_null() {
            return FofStatus::NullArgument;
        }
        let slice = unsafe { std::slice::from_raw_parts(values, len) };
        match summarize(slice) {
            Ok(s) => {
                unsafe {
                    out.write(FofDistributionSummary {
                        count: s.count as u64,
                        mean: s.mean,
                        median: s.median,
                        std_dev: s.std_dev,
                        mallows_slack: s.mallows_slack,
                        skew_direction: match s.skew_direction {
                            SkewDirection::Right => 0,
                            SkewDirection::Left => 1,
                            SkewDirection::Symmetric => 2,
                        },
                    })
                };
                FofStatus::Ok
            }
            Err(_) => FofStatus::InvalidArgument,
        }
    }))
}

/// Writes the one-sided tail bound for a right-skewed distribution with
/// the given moments. `values` may be null (`len` 0) to skip the
/// empirical comparison; otherwise the observed tail fraction of the
/// sample is reported.
///
/// # Safety
/// `values` must point to `len` readable doubles or be null; `out` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn fof_tail_bound(
    mean: f64,
    median: f64,
    sigma: f64,
    values: *const f64,
    len: usize,
    out: *mut FofTailBound,
) -> FofStatus {
    guarded(AssertUnwindSafe(|| {
        if out.is_null() || (values.is_null() && len > 0) {
            return FofStatus::NullArgument;
        }
        let sample = if values.is_null() {
            None
        } else {
            Some(unsafe { std::slice::from_raw_parts(values, len) })
        };
        match tail_bound_for(mean, median, sigma, sample) {
            Ok(tb) => {
                unsafe {
                    out.write(FofTailBound {
                        alpha: tb.alpha,
                        threshold: tb.threshold,
                        bound: tb.bound,
                        empirical: tb.empirical.unwrap_or(f64::NAN),
                    })
                };
                FofStatus::Ok
            }
            Err(_) => FofStatus::InvalidArgument,
        }
    }))
}

/// Solves the crossing of a falling demand line and a rising supply
/// line; writes the equilibrium friend count and cost. `factor` scales
/// the supply slope first: pass 1.0 for the unshifted curves, or a value
/// in (0, 1) to weaken supply.
///
/// # Safety
/// `out_friend_count` and `out_cost` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fof_equilibrium(
    demand_intercept: f64,
    demand_slope: f64,
    supply_intercept: f64,
    supply_slope: f64,
    factor: f64,
    out_friend_count: *mut f64,
    out_cost: *mut f64,
) -> FofStatus {
    guarded(AssertUnwindSafe(|| {
        if out_friend_count.is_null() || out_cost.is_null() {
            return FofStatus::NullArgument;
        }
        let demand = LinearCurve { intercept: demand_intercept, slope: demand_slope };
        let supply = LinearCurve { intercept: supply_intercept, slope: supply_slope };
        let supply = match shift_supply(&supply, factor) {
            Ok(s) => s,
            Err(_) => return FofStatus::InvalidArgument,
        };
        match equilibrium(&demand, &supply) {
            Ok(eq) => {
                unsafe {
                    out_friend_count.write(eq.friend_count);
                    out_cost.write(eq.cost);
                }
                FofStatus::Ok
            }
            Err(_) => FofStatus::InvalidArgument,
        }
    }))
}

/// Generates a seeded synthetic graph. When `out_roles` is non-null it
/// must hold `n_individuals + n_institutions` bytes and receives one
/// role per node: 0 active individual, 1 dormant individual, 2
/// institution.
///
/// # Safety
/// `config` must be readable, `out` writable, and `out_roles` either
/// null or writable for `roles_len` bytes.
#[no_mangle]
pub unsafe extern "C" fn fof_generate(
    config: *const FofGeneratorConfig,
    out: *mut *mut FofGraph,
    out_roles: *mut u8,
    roles_len: usize,
) -> FofStatus {
    guarded(AssertUnwindSafe(|| {
        if config.is_null() || out.is_null() {
            return FofStatus::NullArgument;
        }
        let c = unsafe { &*config };
        let core = GeneratorConfig {
            n_individuals: c.n_individuals as usize,
            edge_prob: c.edge_prob,
            n_institutions: c.n_institutions as usize,
            institution_attach_prob: c.institution_attach_prob,
            dormant_fraction: c.dormant_fraction,
            dormant_activity: c.dormant_activity,
            seed: c.seed,
        };
        let lg = match generate(&core) {
            Ok(lg) => lg,
            Err(_) => return FofStatus::InvalidArgument,
        };
        if !out_roles.is_null() {
            if roles_len < lg.labels.len() {
                return FofStatus::InvalidArgument;
            }
            for (i, role) in lg.labels.iter().enumerate() {
                let byte = match role {
                    Role::IndividualActive => 0u8,
                    Role::IndividualDormant => 1,
                    Role::Institution => 2,
                };
                unsafe { out_roles.add(i).write(byte) };
            }
        }
        unsafe { *out = Box::into_raw(Box::new(FofGraph(lg.graph))) };
        FofStatus::Ok
    }))
}
