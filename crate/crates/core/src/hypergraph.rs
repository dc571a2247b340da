//! k-uniform hypergraphs with Berge distances.
//!
//! Vertices are labeled `1..=n` everywhere in the public API. Shortest Berge
//! paths are computed as breadth-first search over the 2-section, walked
//! implicitly through the vertex → incident-edge table.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("line {line}: malformed header, expected `<n> <k>`")]
    MalformedHeader { line: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("invalid order/uniformity n={n}, k={k} (need 1 <= k <= n)")]
    InvalidParameters { n: usize, k: usize },
    #[error("line {line}: malformed vertex label `{token}`")]
    MalformedLabel { line: usize, token: String },
    #[error("vertex {vertex} out of range [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge:?} has {found} vertices, expected {expected}")]
    WrongArity {
        edge: Vec<usize>,
        expected: usize,
        found: usize,
    },
    #[error("edge {edge:?} repeats vertex {vertex}")]
    DuplicateVertex { edge: Vec<usize>, vertex: usize },
    #[error("edge {edge:?} is not listed in strictly increasing order")]
    UnsortedEdge { edge: Vec<usize> },
    #[error("duplicate edge {edge:?}")]
    DuplicateEdge { edge: Vec<usize> },
    #[error("edge {edge:?} is not present")]
    MissingEdge { edge: Vec<usize> },
    #[error("hypergraph is disconnected")]
    DisconnectedHypergraph,
    #[error("hypergraph is not edge-minimal")]
    NotEdgeMinimal,
    #[error("no good edge found; edge-minimal connected input violates the good-edge lemma")]
    NoGoodEdge,
    #[error("instance too large for the exhaustive Berge path search (n={n}, edges={edges})")]
    OracleTooLarge { n: usize, edges: usize },
}

pub type Result<T> = std::result::Result<T, HypergraphError>;

/// A hyperedge: strictly increasing vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vec<usize>);

impl Edge {
    /// Builds an edge from labels in any order. Repeated labels are rejected.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateVertex {
                vertex: w[0],
                edge: vertices,
            });
        }
        Ok(Edge(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl Deref for Edge {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Edge> for Vec<usize> {
    fn from(e: Edge) -> Self {
        e.0
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Length of a shortest Berge path, or the explicit absence of one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => write!(f, "unreachable"),
        }
    }
}

/// BFS layers around a source vertex.
///
/// `layer_sizes[i - 1]` counts the vertices at distance exactly `i`; the
/// source itself is excluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    pub source: usize,
    pub layer_sizes: Vec<usize>,
    pub unreachable_count: usize,
}

impl DistanceProfile {
    pub fn eccentricity(&self) -> usize {
        self.layer_sizes.len()
    }

    /// Σ i·n_i over the reachable vertices.
    pub fn distance_sum(&self) -> u64 {
        self.layer_sizes
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u64 + 1) * c as u64)
            .sum()
    }

    pub fn reachable_count(&self) -> usize {
        self.layer_sizes.iter().sum()
    }
}

/// The 2-section (shadow graph): `u ~ v` iff some edge holds both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSection {
    n: usize,
    adjacency: Vec<BTreeSet<usize>>,
}

impl TwoSection {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v - 1].iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adjacency[u - 1].contains(&v)
    }

    /// All pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, nb)| {
                let u = i + 1;
                nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v))
            })
            .collect()
    }
}

/// A k-uniform hypergraph on `[1, n]`.
///
/// Edges are kept sorted lexicographically; the incidence table is built once
/// at construction.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: Vec<Edge>,
    // 0-based vertex -> indices into `edges`
    incidence: Vec<Vec<usize>>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

/// Search bounds for [`Hypergraph::berge_path_oracle`].
pub const ORACLE_MAX_ORDER: usize = 13;
pub const ORACLE_MAX_EDGES: usize = 24;

impl Hypergraph {
    /// Validates and builds a hypergraph. Duplicate edges are an error.
    pub fn new<I, E>(n: usize, k: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Vec<usize>>,
    {
        if n == 0 || k == 0 || k > n {
            return Err(HypergraphError::InvalidParameters { n, k });
        }
        let mut set = BTreeSet::new();
        for raw in edges {
            let edge = Edge::new(raw.into())?;
            check_edge(n, k, &edge)?;
            if set.contains(&edge) {
                return Err(HypergraphError::DuplicateEdge { edge: edge.into() });
            }
            set.insert(edge);
        }
        Ok(Self::from_sorted(n, k, set.into_iter().collect()))
    }

    pub fn empty(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, Vec::<Vec<usize>>::new())
    }

    fn from_sorted(n: usize, k: usize, edges: Vec<Edge>) -> Self {
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for &v in e.iter() {
                incidence[v - 1].push(i);
            }
        }
        Hypergraph {
            n,
            k,
            edges,
            incidence,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn contains_edge(&self, edge: &Edge) -> bool {
        self.edges.binary_search(edge).is_ok()
    }

    /// Edges incident to `v`.
    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.incidence[v - 1].iter().map(move |&i| &self.edges[i])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v - 1].len()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(HypergraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&self, edge: Vec<usize>) -> Result<Self> {
        let edge = Edge::new(edge)?;
        check_edge(self.n, self.k, &edge)?;
        match self.edges.binary_search(&edge) {
            Ok(_) => Err(HypergraphError::DuplicateEdge { edge: edge.into() }),
            Err(pos) => {
                let mut edges = self.edges.clone();
                edges.insert(pos, edge);
                Ok(Self::from_sorted(self.n, self.k, edges))
            }
        }
    }

    pub fn remove_edge(&self, edge: &[usize]) -> Result<Self> {
        let edge = Edge::new(edge.to_vec())?;
        match self.edges.binary_search(&edge) {
            Ok(pos) => {
                let mut edges = self.edges.clone();
                edges.remove(pos);
                Ok(Self::from_sorted(self.n, self.k, edges))
            }
            Err(_) => Err(HypergraphError::MissingEdge { edge: edge.into() }),
        }
    }

    /// Sub-hypergraph induced on `vertices` (edges fully inside the set),
    /// relabeled to `1..=vertices.len()` in increasing label order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        let mut relabel = vec![0usize; self.n + 1];
        for (i, &v) in keep.iter().enumerate() {
            relabel[v] = i + 1;
        }
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| relabel[v] != 0))
            .map(|e| e.iter().map(|&v| relabel[v]).collect())
            .collect();
        Hypergraph::new(keep.len(), self.k, edges)
    }

    pub fn two_section(&self) -> TwoSection {
        let mut adjacency = vec![BTreeSet::new(); self.n];
        for e in &self.edges {
            for &u in e.iter() {
                for &v in e.iter() {
                    if u != v {
                        adjacency[u - 1].insert(v);
                    }
                }
            }
        }
        TwoSection {
            n: self.n,
            adjacency,
        }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut parts = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut part = vec![start + 1];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &ei in &self.incidence[x] {
                    for &w in self.edges[ei].iter() {
                        if !seen[w - 1] {
                            seen[w - 1] = true;
                            part.push(w);
                            stack.push(w - 1);
                        }
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// BFS distances from `source` to every vertex (index `v - 1`).
    pub fn distances_from(&self, source: usize) -> Result<Vec<Distance>> {
        self.check_vertex(source)?;
        Ok(self
            .bfs(source - 1)
            .into_iter()
            .map(|d| d.map_or(Distance::Unreachable, Distance::Finite))
            .collect())
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut edge_used = vec![false; self.edges.len()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap_or_default();
            for &ei in &self.incidence[x] {
                // the first expansion of an edge happens from its closest vertex
                if std::mem::replace(&mut edge_used[ei], true) {
                    continue;
                }
                for &w in self.edges[ei].iter() {
                    if dist[w - 1].is_none() {
                        dist[w - 1] = Some(dx + 1);
                        queue.push_back(w - 1);
                    }
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Distance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Distance::Finite(0));
        }
        Ok(self.bfs(u - 1)[v - 1].map_or(Distance::Unreachable, Distance::Finite))
    }

    /// Shortest Berge path by exhaustive search over alternating
    /// vertex/edge sequences with distinct vertices and distinct edges.
    ///
    /// Independent of the BFS route; iterative deepening on the path length.
    pub fn berge_path_oracle(&self, u: usize, v: usize) -> Result<Distance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.n > ORACLE_MAX_ORDER || self.edges.len() > ORACLE_MAX_EDGES {
            return Err(HypergraphError::OracleTooLarge {
                n: self.n,
                edges: self.edges.len(),
            });
        }
        if u == v {
            return Ok(Distance::Finite(0));
        }
        let max_len = self.edges.len().min(self.n - 1);
        let mut used_vertex = vec![false; self.n + 1];
        let mut used_edge = vec![false; self.edges.len()];
        used_vertex[u] = true;
        for limit in 1..=max_len {
            let mut search = BergeSearch {
                h: self,
                target: v,
                used_vertex: &mut used_vertex,
                used_edge: &mut used_edge,
            };
            if search.extend(u, limit) {
                return Ok(Distance::Finite(limit));
            }
        }
        Ok(Distance::Unreachable)
    }

    /// Sum of distances over unordered pairs. Refuses disconnected input.
    pub fn wiener(&self) -> Result<u64> {
        let mut total = 0u64;
        for s in 0..self.n {
            for d in self.bfs(s) {
                total += d.ok_or(HypergraphError::DisconnectedHypergraph)? as u64;
            }
        }
        Ok(total / 2)
    }

    pub fn distance_profile(&self, v: usize) -> Result<DistanceProfile> {
        self.check_vertex(v)?;
        let dist = self.bfs(v - 1);
        let mut layer_sizes = Vec::new();
        let mut unreachable_count = 0;
        for d in dist {
            match d {
                None => unreachable_count += 1,
                Some(0) => {}
                Some(d) => {
                    if layer_sizes.len() < d {
                        layer_sizes.resize(d, 0);
                    }
                    layer_sizes[d - 1] += 1;
                }
            }
        }
        Ok(DistanceProfile {
            source: v,
            layer_sizes,
            unreachable_count,
        })
    }

    fn ensure_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(HypergraphError::DisconnectedHypergraph)
        }
    }

    /// True iff deleting any single edge disconnects the hypergraph.
    pub fn is_edge_minimal(&self) -> Result<bool> {
        self.ensure_connected()?;
        Ok((0..self.edges.len()).all(|i| !self.without_edge_index(i).is_connected()))
    }

    fn without_edge_index(&self, index: usize) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Self::from_sorted(self.n, self.k, edges)
    }

    /// Whether removing `edge` leaves at most one component with more than
    /// one vertex.
    pub fn is_good_edge(&self, edge: &Edge) -> Result<bool> {
        let rest = self.remove_edge(edge)?;
        Ok(rest.components().iter().filter(|c| c.len() > 1).count() <= 1)
    }

    /// Every good edge, in lexicographic order.
    pub fn good_edges(&self) -> Vec<&Edge> {
        (0..self.edges.len())
            .filter(|&i| {
                self.without_edge_index(i)
                    .components()
                    .iter()
                    .filter(|c| c.len() > 1)
                    .count()
                    <= 1
            })
            .map(|i| &self.edges[i])
            .collect()
    }

    /// The lexicographically smallest good edge of an edge-minimal
    /// connected hypergraph.
    pub fn find_good_edge(&self) -> Result<&Edge> {
        if !self.is_edge_minimal()? {
            return Err(HypergraphError::NotEdgeMinimal);
        }
        self.good_edges()
            .into_iter()
            .next()
            .ok_or(HypergraphError::NoGoodEdge)
    }

    /// Applies a vertex relabeling `perm[v - 1] = image of v`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        Hypergraph::new(
            self.n,
            self.k,
            self.edges
                .iter()
                .map(|e| e.iter().map(|&v| perm[v - 1]).collect::<Vec<_>>()),
        )
    }

    /// Serializes in the hypergraph file format (trailing newline included).
    pub fn to_file_string(&self) -> String {
        self.to_string()
    }
}

struct BergeSearch<'a> {
    h: &'a Hypergraph,
    target: usize,
    used_vertex: &'a mut [bool],
    used_edge: &'a mut [bool],
}

impl BergeSearch<'_> {
    // Is there a Berge path from `at` to the target using exactly `remaining`
    // more fresh edges?
    fn extend(&mut self, at: usize, remaining: usize) -> bool {
        for (ei, edge) in self.h.edges.iter().enumerate() {
            if self.used_edge[ei] || !edge.contains(at) {
                continue;
            }
            self.used_edge[ei] = true;
            let mut found = false;
            for &w in edge.iter() {
                if self.used_vertex[w] {
                    continue;
                }
                if remaining == 1 {
                    if w == self.target {
                        found = true;
                    }
                } else if w != self.target {
                    self.used_vertex[w] = true;
                    found = self.extend(w, remaining - 1);
                    self.used_vertex[w] = false;
                }
                if found {
                    break;
                }
            }
            self.used_edge[ei] = false;
            if found {
                return true;
            }
        }
        false
    }
}

fn check_edge(n: usize, k: usize, edge: &Edge) -> Result<()> {
    if edge.len() != k {
        return Err(HypergraphError::WrongArity {
            edge: edge.to_vec(),
            expected: k,
            found: edge.len(),
        });
    }
    if let Some(&v) = edge.iter().find(|&&v| v == 0 || v > n) {
        return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
    }
    Ok(())
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.k)?;
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Parses the hypergraph file format: a `<n> <k>` header, then one edge per
/// line with labels in strictly increasing order. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(HypergraphError::MissingHeader)?;
    let nums: Vec<&str> = header.split(' ').collect();
    let (n, k) = match nums.as_slice() {
        [a, b] => match (a.parse::<usize>(), b.parse::<usize>()) {
            (Ok(n), Ok(k)) => (n, k),
            _ => return Err(HypergraphError::MalformedHeader { line: hline }),
        },
        _ => return Err(HypergraphError::MalformedHeader { line: hline }),
    };
    if n == 0 || k == 0 || k > n {
        return Err(HypergraphError::InvalidParameters { n, k });
    }

    let mut edges = Vec::new();
    for (line, body) in lines {
        let labels = body
            .split(' ')
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| HypergraphError::MalformedLabel {
                        line,
                        token: t.to_string(),
                    })
            })
            .collect::<Result<Vec<usize>>>()?;
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateVertex {
                vertex: w[0],
                edge: labels,
            });
        }
        if labels.windows(2).any(|w| w[0] > w[1]) {
            return Err(HypergraphError::UnsortedEdge { edge: labels });
        }
        edges.push(labels);
    }
    Hypergraph::new(n, k, edges)
}

impl FromStr for Hypergraph {
    type Err = HypergraphError;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}
