//! Three small worked examples with closed-form metrics, used across the
//! test suite and handy for demos.
//!
//! Each is a five-node graph picked so the friends-of-friends statistics
//! come out as simple fractions. The edge sets are pinned by an exhaustive
//! search over all five-node graphs in the integration tests: each fixture
//! is the unique labeled graph realizing its degree and friends-of-friends
//! columns.

use crate::graph::Graph;

/// Star with a tail: node 0 links to 1, 3 and 4, and node 1 to 2.
///
/// Degrees (3, 2, 1, 1, 1). The degree-weighted mean degree is exactly 2
/// against a plain mean of 8/5, so neighbors average more friends than
/// nodes do, with node 0 the lone exception.
pub fn network1() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 3), (0, 4), (1, 2)]).expect("fixture edges are valid")
}

/// A path 1-0-4 plus the separate edge 2-3.
///
/// Degrees (2, 1, 1, 1, 1), the closest a five-node graph with three
/// edges gets to regular. The degree-weighted mean degree is 4/3 and the
/// plain mean 6/5, a gap of 2/15.
pub fn network2() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 4), (2, 3)]).expect("fixture edges are valid")
}

/// A near-clique: nodes 0..=3 fully connected, node 4 pendant on 0.
///
/// Degrees (4, 3, 3, 3, 1). The degree-weighted mean degree is 22/7
/// against a plain mean of 14/5; four of the five nodes see neighbors
/// with more friends than their own count.
pub fn network3() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3)])
        .expect("fixture edges are valid")
}
