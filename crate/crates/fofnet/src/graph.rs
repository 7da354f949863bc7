//! Undirected simple graphs over dense integer node ids, with edge-list
//! file ingestion and structural validation.
//!
//! The text format is one edge per line, `<id> <id>` separated by
//! whitespace. Lines starting with `#` are comments, except that a header
//! of the form `# n=<count>` pins the node count so trailing isolated
//! nodes survive a round trip. Without a header the node count is
//! `max(id) + 1`. Duplicate edges and both orientations of the same pair
//! collapse to a single edge.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// An immutable undirected simple graph on nodes `0..n`.
///
/// Stored as sorted adjacency lists. Checked constructors reject
/// self-loops and out-of-range endpoints, so a `Graph` obtained from
/// [`Graph::from_edges`] or [`parse_edge_list`] is always valid. Instances
/// are never mutated; operations that change a graph build a new one.
/// Shared references are safe to read from any number of threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

/// Invalid construction input for [`Graph::from_edges`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at node {node}")]
    SelfLoop { node: u32 },
    #[error("node {node} out of range for {n} nodes")]
    OutOfRange { node: u32, n: usize },
}

impl Graph {
    /// Graph with `n` nodes and no edges.
    pub fn new(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge iterator, deduplicating pairs and both
    /// orientations. Self-loops and endpoints `>= n` are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut set: BTreeSet<(u32, u32)> = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop { node: a });
            }
            for id in [a, b] {
                if id as usize >= n {
                    return Err(GraphError::OutOfRange { node: id, n });
                }
            }
            set.insert((a.min(b), a.max(b)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &set {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        // BTreeSet order inserts each node's neighbors ascending already
        // for the lower endpoint, but not for the higher one.
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    /// Wraps raw adjacency lists without checking the simple-graph
    /// invariants. Lists are sorted on entry; nothing else is touched, so
    /// the result may violate symmetry, contain self-loops, duplicate
    /// neighbors, or ids `>= n`. [`validate`] reports every such
    /// violation. All other operations assume a valid graph.
    pub fn from_adjacency_unchecked(mut adj: Vec<Vec<u32>>) -> Graph {
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj }
    }

    /// Node count.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Degree of node `i`. Panics if `i >= n`; metric layers bounds-check
    /// first and return typed errors instead.
    pub fn degree(&self, i: u32) -> usize {
        self.adj[i as usize].len()
    }

    /// Sorted neighbor ids of node `i`. Panics if `i >= n`.
    pub fn neighbors(&self, i: u32) -> &[u32] {
        &self.adj[i as usize]
    }

    /// All edges in canonical order: smaller endpoint first, sorted
    /// lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, list)| {
            let i = i as u32;
            list.iter().copied().filter(move |&j| i < j).map(move |j| (i, j))
        })
    }

    /// Canonical edge-list text: a `# n=<count>` header followed by one
    /// `a b` line per edge with `a < b`, sorted. Re-parsing the output
    /// reproduces the graph exactly, isolated nodes included.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# n={}\n", self.n());
        for (a, b) in self.edges() {
            out.push_str(&a.to_string());
            out.push(' ');
            out.push_str(&b.to_string());
            out.push('\n');
        }
        out
    }
}

/// Degree sequence of a graph: entry `i` is the neighbor count of node
/// `i`. The sum of entries is always twice the edge count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeVector {
    degrees: Vec<u64>,
}

impl DegreeVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Sum of all degrees, i.e. twice the edge count.
    pub fn sum(&self) -> u64 {
        self.degrees.iter().sum()
    }
}

/// Degree sequence of `g`, indexed by node id.
pub fn degrees(g: &Graph) -> DegreeVector {
    DegreeVector { degrees: g.adj.iter().map(|l| l.len() as u64).collect() }
}

/// One structural defect found by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    SelfLoop { node: u32 },
    DuplicateNeighbor { node: u32, neighbor: u32 },
    /// `neighbor` appears in `node`'s list but not the other way around.
    Asymmetric { node: u32, neighbor: u32 },
    NeighborOutOfRange { node: u32, neighbor: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::SelfLoop { node } => write!(f, "self-loop at node {node}"),
            Violation::DuplicateNeighbor { node, neighbor } => {
                write!(f, "duplicate edge {node} -> {neighbor}")
            }
            Violation::Asymmetric { node, neighbor } => {
                write!(f, "edge {node} -> {neighbor} has no reverse entry")
            }
            Violation::NeighborOutOfRange { node, neighbor } => {
                write!(f, "node {node} lists neighbor {neighbor} beyond the node count")
            }
        }
    }
}

/// Result of [`validate`]: empty iff the graph satisfies every
/// simple-graph invariant.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every simple-graph invariant and reports all violations with
/// the offending node ids. Graphs from checked constructors always come
/// back clean; this exists for [`Graph::from_adjacency_unchecked`] input.
pub fn validate(g: &Graph) -> ValidationReport {
    let n = g.n();
    let mut violations = Vec::new();
    for (i, list) in g.adj.iter().enumerate() {
        let i = i as u32;
        let mut prev: Option<u32> = None;
        for &j in list {
            if j == i {
                violations.push(Violation::SelfLoop { node: i });
            }
            if prev == Some(j) {
                violations.push(Violation::DuplicateNeighbor { node: i, neighbor: j });
            }
            prev = Some(j);
            if j as usize >= n {
                violations.push(Violation::NeighborOutOfRange { node: i, neighbor: j });
            } else if j != i && g.adj[j as usize].binary_search(&i).is_err() {
                violations.push(Violation::Asymmetric { node: i, neighbor: j });
            }
        }
    }
    ValidationReport { violations }
}

/// Edge-list text that could not be parsed. Line numbers are 1-based.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected `<id> <id>`, found {count} token(s)")]
    TokenCount { line: usize, count: usize },
    #[error("line {line}: invalid node id `{token}`")]
    InvalidId { line: usize, token: String },
    #[error("line {line}: self-loop at node {node}")]
    SelfLoop { line: usize, node: u32 },
    #[error("line {line}: invalid `# n=<count>` header")]
    BadHeader { line: usize },
    #[error("line {line}: duplicate `# n=<count>` header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: node id {id} outside declared node count {declared}")]
    IdBeyondDeclared { line: usize, id: u32, declared: usize },
}

/// Parses edge-list text (see the module docs for the format).
///
/// The node count is the declared `# n=<count>` when present, otherwise
/// `max(id) + 1`, and 0 for input with no data lines. Duplicate lines and
/// reversed orientations merge silently; self-loops and malformed lines
/// are errors carrying the line number.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<(usize, usize)> = None; // (n, header line)
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut lines: Vec<usize> = Vec::new(); // source line of each edge
    let mut max_id: Option<u32> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(value) = rest.strip_prefix("n=") {
                let n: usize =
                    value.trim().parse().map_err(|_| ParseError::BadHeader { line: lineno })?;
                if declared.is_some() {
                    return Err(ParseError::DuplicateHeader { line: lineno });
                }
                declared = Some((n, lineno));
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::TokenCount { line: lineno, count: tokens.len() });
        }
        let mut ids = [0u32; 2];
        for (slot, token) in ids.iter_mut().zip(&tokens) {
            *slot = token
                .parse()
                .map_err(|_| ParseError::InvalidId { line: lineno, token: token.to_string() })?;
        }
        let [a, b] = ids;
        if a == b {
            return Err(ParseError::SelfLoop { line: lineno, node: a });
        }
        max_id = Some(max_id.map_or(a.max(b), |m| m.max(a).max(b)));
        edges.push((a, b));
        lines.push(lineno);
    }

    let n = match declared {
        Some((n, _)) => {
            for (&(a, b), &line) in edges.iter().zip(&lines) {
                let id = a.max(b);
                if id as usize >= n {
                    return Err(ParseError::IdBeyondDeclared { line, id, declared: n });
                }
            }
            n
        }
        None => max_id.map_or(0, |m| m as usize + 1),
    };
    // Range and loop checks above make from_edges infallible here.
    Ok(Graph::from_edges(n, edges).expect("edges already checked"))
}
