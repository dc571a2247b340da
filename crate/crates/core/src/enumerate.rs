//! Exhaustive search over labeled connected k-uniform hypergraphs.
//!
//! Edge sets are bitmasks over the lexicographically ranked k-subsets of
//! `[n]`, scanned in increasing numeric order. Connectivity is decided with a
//! small union-find before any distance work. The scan is split into
//! contiguous mask ranges; partial results are merged in range order, so the
//! report does not depend on the number of workers.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::families::{self, FamilyError};
use crate::formulas::{self, BoundParams, FormulaError};
use crate::hypergraph::{Edge, Hypergraph, HypergraphError};

/// Largest order for which canonical forms (n! relabelings) are computed.
pub const MAX_ORDER: usize = 10;
/// Most ranked k-subsets a search may range over (one bit each).
pub const MAX_RANKED_EDGES: usize = 64;
/// Most edge sets a single search may scan.
pub const MAX_CANDIDATES: u128 = 1 << 24;

const CHUNKS: u128 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("canonical forms need n <= {MAX_ORDER}, got n={n}")]
    OrderTooLarge { n: usize },
    #[error("search needs 2 <= k <= n <= {MAX_ORDER}, got n={n}, k={k}")]
    InvalidParameters { n: usize, k: usize },
    #[error("search space of {size} edge sets exceeds the limit of {MAX_CANDIDATES}; bound the edge count")]
    SearchSpaceTooLarge { size: u128 },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error("worker pool: {0}")]
    Pool(String),
}

pub type Result<T> = std::result::Result<T, EnumerateError>;

/// Which edge sets a search visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchSpace {
    /// Every subset of the k-subsets of `[n]`.
    Full,
    /// Subsets with at most this many edges.
    EdgeBounded(usize),
}

impl SearchSpace {
    fn limit(self) -> Option<u32> {
        match self {
            SearchSpace::Full => None,
            SearchSpace::EdgeBounded(m) => Some(m.min(u32::MAX as usize) as u32),
        }
    }
}

impl fmt::Display for SearchSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchSpace::Full => write!(f, "full"),
            SearchSpace::EdgeBounded(m) => write!(f, "edge-bounded (max_edges = {m})"),
        }
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of edge sets the search would scan.
pub fn search_space_size(n: usize, k: usize, space: SearchSpace) -> u128 {
    let ranked = binomial(n as u128, k as u128);
    match space {
        SearchSpace::Full => {
            if ranked >= 127 {
                u128::MAX
            } else {
                1u128 << ranked
            }
        }
        SearchSpace::EdgeBounded(m) => (0..=(m as u128).min(ranked))
            .map(|i| binomial(ranked, i))
            .sum(),
    }
}

// ---------------------------------------------------------------------------
// Mask-level machinery
// ---------------------------------------------------------------------------

/// Ranked k-subsets of `[n]` as vertex bitmasks (bit `v - 1` for label `v`).
#[derive(Debug, Clone)]
struct EdgeIndex {
    n: usize,
    k: usize,
    edges: Vec<u16>,
}

impl EdgeIndex {
    fn new(n: usize, k: usize, space: SearchSpace) -> Result<Self> {
        if k < 2 || n < k || n > MAX_ORDER {
            return Err(EnumerateError::InvalidParameters { n, k });
        }
        let ranked = binomial(n as u128, k as u128);
        let size = search_space_size(n, k, space);
        if ranked > MAX_RANKED_EDGES as u128 || size > MAX_CANDIDATES {
            return Err(EnumerateError::SearchSpaceTooLarge { size });
        }
        let edges = (0..n)
            .combinations(k)
            .map(|c| c.iter().fold(0u16, |m, &v| m | (1 << v)))
            .collect();
        Ok(EdgeIndex { n, k, edges })
    }

    fn ranked(&self) -> u32 {
        self.edges.len() as u32
    }

    fn chosen(&self, mask: u64, buf: &mut [u16; MAX_RANKED_EDGES]) -> usize {
        let mut len = 0;
        let mut rest = mask;
        while rest != 0 {
            buf[len] = self.edges[rest.trailing_zeros() as usize];
            len += 1;
            rest &= rest - 1;
        }
        len
    }

    fn to_hypergraph(&self, chosen: &[u16]) -> Hypergraph {
        Hypergraph::new(self.n, self.k, chosen.iter().map(|&e| mask_labels(e)))
            .expect("ranked subsets are valid edges")
    }
}

fn mask_labels(mut e: u16) -> Vec<usize> {
    let mut out = Vec::with_capacity(e.count_ones() as usize);
    while e != 0 {
        out.push(e.trailing_zeros() as usize + 1);
        e &= e - 1;
    }
    out
}

/// Union-find connectivity over the chosen edges, optionally ignoring one.
fn is_connected(n: usize, chosen: &[u16], skip: Option<usize>) -> bool {
    let mut parent = [0u8; 16];
    for (i, p) in parent.iter_mut().enumerate().take(n) {
        *p = i as u8;
    }
    fn find(parent: &mut [u8; 16], mut x: u8) -> u8 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    let mut components = n;
    for (i, &e) in chosen.iter().enumerate() {
        if skip == Some(i) {
            continue;
        }
        let root = find(&mut parent, e.trailing_zeros() as u8);
        let mut rest = e & (e - 1);
        while rest != 0 {
            let other = find(&mut parent, rest.trailing_zeros() as u8);
            if other != root {
                parent[other as usize] = root;
                components -= 1;
            }
            rest &= rest - 1;
        }
    }
    components == 1
}

/// Wiener index by frontier expansion over 2-section neighbourhood masks.
/// Expects a connected edge set.
fn wiener_masks(n: usize, chosen: &[u16]) -> u64 {
    let mut nbr = [0u16; 16];
    for &e in chosen {
        let mut rest = e;
        while rest != 0 {
            nbr[rest.trailing_zeros() as usize] |= e;
            rest &= rest - 1;
        }
    }
    let mut total = 0u64;
    for s in 0..n {
        let mut reached = 1u16 << s;
        let mut frontier = reached;
        let mut d = 0u64;
        while frontier != 0 {
            d += 1;
            let mut next = 0u16;
            let mut rest = frontier;
            while rest != 0 {
                next |= nbr[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            next &= !reached;
            total += d * next.count_ones() as u64;
            reached |= next;
            frontier = next;
        }
    }
    total / 2
}

/// Edge masks in `[lo, hi)` in increasing order, restricted to at most
/// `limit` set bits.
struct MaskRange {
    next: u128,
    hi: u128,
    limit: Option<u32>,
}

impl MaskRange {
    fn new(lo: u128, hi: u128, limit: Option<u32>) -> Self {
        MaskRange {
            next: lo,
            hi,
            limit,
        }
    }
}

impl Iterator for MaskRange {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if let Some(limit) = self.limit {
            // every mask in [x, x + lowbit(x)) is a superset of x
            while self.next < self.hi && self.next.count_ones() > limit {
                self.next += self.next & self.next.wrapping_neg();
            }
        }
        if self.next >= self.hi {
            return None;
        }
        let out = self.next as u64;
        self.next += 1;
        Some(out)
    }
}

fn chunk_bounds(ranked: u32) -> Vec<(u128, u128)> {
    let total = 1u128 << ranked;
    let chunks = CHUNKS.min(total);
    (0..chunks)
        .map(|i| (total * i / chunks, total * (i + 1) / chunks))
        .collect()
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Iterator over every labeled connected hypergraph in a search space.
pub struct ConnectedHypergraphs {
    index: EdgeIndex,
    masks: MaskRange,
}

impl Iterator for ConnectedHypergraphs {
    type Item = Hypergraph;

    fn next(&mut self) -> Option<Hypergraph> {
        let mut buf = [0u16; MAX_RANKED_EDGES];
        for mask in self.masks.by_ref() {
            let len = self.index.chosen(mask, &mut buf);
            if is_connected(self.index.n, &buf[..len], None) {
                return Some(self.index.to_hypergraph(&buf[..len]));
            }
        }
        None
    }
}

/// Every labeled connected k-uniform hypergraph on `[n]` within `space`,
/// each once, ordered by edge-set bitmask.
pub fn enumerate_connected(n: usize, k: usize, space: SearchSpace) -> Result<ConnectedHypergraphs> {
    let index = EdgeIndex::new(n, k, space)?;
    let masks = MaskRange::new(0, 1u128 << index.ranked(), space.limit());
    Ok(ConnectedHypergraphs { index, masks })
}

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

/// Lexicographically least edge list over all relabelings of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
}

impl CanonicalForm {
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.n, self.k, self.edges.clone())
            .expect("canonical form holds a valid edge set")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hypergraph())
    }
}

pub fn canonical_form(h: &Hypergraph) -> Result<CanonicalForm> {
    let n = h.order();
    if n > MAX_ORDER {
        return Err(EnumerateError::OrderTooLarge { n });
    }
    let masks: Vec<u16> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u16, |m, &v| m | (1 << (v - 1))))
        .collect();
    Ok(canonical_from_masks(n, h.uniformity(), &masks))
}

// Sorted labels packed base-16, most significant first; for equal-length
// tuples numeric order is lexicographic order.
fn pack(mut e: u16, perm: &[u8]) -> u64 {
    let mut image = 0u16;
    while e != 0 {
        image |= 1 << perm[e.trailing_zeros() as usize];
        e &= e - 1;
    }
    let mut key = 0u64;
    while image != 0 {
        key = (key << 4) | (image.trailing_zeros() as u64 + 1);
        image &= image - 1;
    }
    key
}

fn unpack(mut key: u64, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = (key & 0xf) as usize;
        key >>= 4;
    }
    out
}

fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

fn canonical_from_masks(n: usize, k: usize, masks: &[u16]) -> CanonicalForm {
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut best: Option<Vec<u64>> = None;
    let mut keys = Vec::with_capacity(masks.len());
    loop {
        keys.clear();
        keys.extend(masks.iter().map(|&e| pack(e, &perm)));
        keys.sort_unstable();
        if best.as_ref().is_none_or(|b| keys.as_slice() < b.as_slice()) {
            best = Some(keys.clone());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    CanonicalForm {
        n,
        k,
        edges: best
            .unwrap_or_default()
            .into_iter()
            .map(|key| unpack(key, k))
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// Structural checks on edge-minimal instances
// ---------------------------------------------------------------------------

/// What remains after deleting a good edge that leaves one non-trivial
/// component: the component, the isolated vertices, and the isolated vertex
/// farthest (in total) from the component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantSplit {
    pub good_edge: Edge,
    pub component: Vec<usize>,
    pub isolated: Vec<usize>,
    pub pendant: usize,
    /// Σ over the component of distances to `pendant`, measured in the full
    /// hypergraph.
    pub distance_sum: u64,
    pub eccentricity: usize,
    /// Vertices of the component at distance `i + 1` from `pendant`.
    pub layer_sizes: Vec<usize>,
}

impl PendantSplit {
    pub fn isolated_count(&self) -> usize {
        self.isolated.len()
    }
}

/// Splits `h` at `edge`. Returns `None` unless the removal leaves exactly one
/// component with more than one vertex.
pub fn pendant_split(h: &Hypergraph, edge: &Edge) -> Result<Option<PendantSplit>> {
    let rest = h.remove_edge(edge)?;
    let parts = rest.components();
    let (big, singles): (Vec<_>, Vec<_>) = parts.into_iter().partition(|p| p.len() > 1);
    if big.len() != 1 {
        return Ok(None);
    }
    let component = big.into_iter().next().expect("one component");
    let isolated: Vec<usize> = singles.into_iter().flatten().collect();
    if isolated.is_empty() {
        return Ok(None);
    }

    let mut best: Option<(u64, usize, Vec<usize>)> = None;
    for &v in &isolated {
        let dist = h.distances_from(v)?;
        let mut sum = 0u64;
        let mut layers: Vec<usize> = Vec::new();
        for &u in &component {
            let d = dist[u - 1]
                .finite()
                .ok_or(HypergraphError::DisconnectedHypergraph)?;
            sum += d as u64;
            if layers.len() < d {
                layers.resize(d, 0);
            }
            layers[d - 1] += 1;
        }
        // ties keep the smallest label
        if best.as_ref().is_none_or(|(s, _, _)| sum > *s) {
            best = Some((sum, v, layers));
        }
    }
    let (distance_sum, pendant, layer_sizes) = best.expect("isolated vertex exists");
    Ok(Some(PendantSplit {
        good_edge: edge.clone(),
        component,
        isolated,
        pendant,
        distance_sum,
        eccentricity: layer_sizes.len(),
        layer_sizes,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimCheck {
    /// `1 <= l < k` isolated vertices.
    IsolatedCount,
    /// `n_1 >= k - l` and `n_i + n_{i+1} >= k`.
    LayerBound,
    DistanceSum,
    Eccentricity,
    /// `W(H) <= W(H'[V']) + C(l,2) + l·Σ d(u,v)`.
    InductionStep,
}

impl fmt::Display for ClaimCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ClaimCheck::IsolatedCount => "isolated-count",
            ClaimCheck::LayerBound => "layer-bound",
            ClaimCheck::DistanceSum => "distance-sum",
            ClaimCheck::Eccentricity => "eccentricity",
            ClaimCheck::InductionStep => "induction-step",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimViolation {
    pub hypergraph: Hypergraph,
    pub good_edge: Edge,
    pub check: ClaimCheck,
    pub detail: String,
}

impl fmt::Display for ClaimViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at edges [{}] removing {}: {}",
            self.check,
            edge_list(&self.hypergraph),
            self.good_edge,
            self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaViolation {
    pub hypergraph: Hypergraph,
    pub error: HypergraphError,
}

impl fmt::Display for LemmaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edges [{}]: {}", edge_list(&self.hypergraph), self.error)
    }
}

fn edge_list(h: &Hypergraph) -> String {
    h.edges().iter().map(|e| e.to_string()).join(" ")
}

/// Runs every pendant-vertex check against each good edge of an edge-minimal
/// connected hypergraph.
pub fn check_claim(h: &Hypergraph) -> Result<Vec<ClaimViolation>> {
    let n = h.order();
    let k = h.uniformity() as u64;
    let total = h.wiener()?;
    let mut out = Vec::new();
    for edge in h.good_edges() {
        let Some(split) = pendant_split(h, edge)? else {
            continue;
        };
        let mut flag = |check, detail: String| {
            out.push(ClaimViolation {
                hypergraph: h.clone(),
                good_edge: edge.clone(),
                check,
                detail,
            })
        };
        let l = split.isolated_count() as u64;
        if l == 0 || l >= k {
            flag(ClaimCheck::IsolatedCount, format!("l = {l}, k = {k}"));
            continue;
        }

        let layers = &split.layer_sizes;
        let first_ok = layers.first().is_some_and(|&n1| n1 as u64 + l >= k);
        let pairs_ok = layers.windows(2).all(|w| (w[0] + w[1]) as u64 >= k);
        if !first_ok || !pairs_ok {
            flag(
                ClaimCheck::LayerBound,
                format!("layers {layers:?}, l = {l}"),
            );
        }

        let params = BoundParams::from_split(n as u64, k, l)?;
        let bound = formulas::distance_sum_bound(params, k)?;
        if split.distance_sum > bound {
            flag(
                ClaimCheck::DistanceSum,
                format!("sum {} > bound {bound} ({params:?})", split.distance_sum),
            );
        }
        let ecc_bound = formulas::eccentricity_bound(params, k);
        if split.eccentricity as u64 > ecc_bound {
            flag(
                ClaimCheck::Eccentricity,
                format!("eccentricity {} > {ecc_bound}", split.eccentricity),
            );
        }

        let inner = h.remove_edge(edge)?.induced(&split.component)?.wiener()?;
        let rhs = inner + l * (l - 1) / 2 + l * split.distance_sum;
        if total > rhs {
            flag(
                ClaimCheck::InductionStep,
                format!(
                    "W = {total} > {inner} + C({l},2) + {l}*{}",
                    split.distance_sum
                ),
            );
        }
    }
    Ok(out)
}

/// The good edge of an edge-minimal connected hypergraph must exist.
pub fn check_lemma(h: &Hypergraph) -> Option<LemmaViolation> {
    match h.find_good_edge() {
        Ok(_) => None,
        Err(error) => Some(LemmaViolation {
            hypergraph: h.clone(),
            error,
        }),
    }
}

// ---------------------------------------------------------------------------
// Sweeps and reports
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
struct Checks {
    wiener: bool,
    claim: bool,
    lemma: bool,
}

#[derive(Debug, Default)]
struct Partial {
    scanned: u64,
    connected: u64,
    edge_minimal: u64,
    max_wiener: Option<u64>,
    maximizers: Vec<u64>,
    claim: Vec<ClaimViolation>,
    lemma: Vec<LemmaViolation>,
    error: Option<EnumerateError>,
}

impl Partial {
    fn offer(&mut self, mask: u64, w: u64) {
        match self.max_wiener.map(|m| w.cmp(&m)) {
            None | Some(Ordering::Greater) => {
                self.max_wiener = Some(w);
                self.maximizers.clear();
                self.maximizers.push(mask);
            }
            Some(Ordering::Equal) => self.maximizers.push(mask),
            Some(Ordering::Less) => {}
        }
    }

    // `other` covers masks strictly after `self`
    fn merge(mut self, mut other: Partial) -> Partial {
        self.scanned += other.scanned;
        self.connected += other.connected;
        self.edge_minimal += other.edge_minimal;
        match (self.max_wiener, other.max_wiener) {
            (_, None) => {}
            (None, Some(_)) => {
                self.max_wiener = other.max_wiener;
                self.maximizers = other.maximizers;
            }
            (Some(a), Some(b)) => match a.cmp(&b) {
                Ordering::Less => {
                    self.max_wiener = Some(b);
                    self.maximizers = other.maximizers;
                }
                Ordering::Equal => self.maximizers.append(&mut other.maximizers),
                Ordering::Greater => {}
            },
        }
        self.claim.append(&mut other.claim);
        self.lemma.append(&mut other.lemma);
        self.error = self.error.or(other.error);
        self
    }
}

fn sweep_range(index: &EdgeIndex, masks: MaskRange, checks: Checks) -> Partial {
    let mut part = Partial::default();
    let mut buf = [0u16; MAX_RANKED_EDGES];
    for mask in masks {
        part.scanned += 1;
        let len = index.chosen(mask, &mut buf);
        let chosen = &buf[..len];
        if !is_connected(index.n, chosen, None) {
            continue;
        }
        part.connected += 1;
        if checks.wiener {
            part.offer(mask, wiener_masks(index.n, chosen));
        }
        if !(checks.claim || checks.lemma) {
            continue;
        }
        if (0..len).any(|i| is_connected(index.n, chosen, Some(i))) {
            continue;
        }
        part.edge_minimal += 1;
        let h = index.to_hypergraph(chosen);
        if checks.lemma {
            part.lemma.extend(check_lemma(&h));
        }
        if checks.claim {
            match check_claim(&h) {
                Ok(v) => part.claim.extend(v),
                Err(e) => {
                    part.error.get_or_insert(e);
                }
            }
        }
    }
    part
}

/// Runs the checks of this module over one search space.
#[derive(Debug, Clone, Copy)]
pub struct Verifier {
    n: usize,
    k: usize,
    space: SearchSpace,
    jobs: usize,
}

impl Verifier {
    pub fn new(n: usize, k: usize) -> Self {
        Verifier {
            n,
            k,
            space: SearchSpace::Full,
            jobs: 1,
        }
    }

    pub fn space(mut self, space: SearchSpace) -> Self {
        self.space = space;
        self
    }

    /// Worker count; does not change any result.
    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    fn sweep(&self, checks: Checks) -> Result<(EdgeIndex, Partial)> {
        let index = EdgeIndex::new(self.n, self.k, self.space)?;
        let limit = self.space.limit();
        let bounds = chunk_bounds(index.ranked());
        let run =
            |&(lo, hi): &(u128, u128)| sweep_range(&index, MaskRange::new(lo, hi, limit), checks);
        let parts: Vec<Partial> = if self.jobs == 1 {
            bounds.iter().map(run).collect()
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build()
                .map_err(|e| EnumerateError::Pool(e.to_string()))?
                .install(|| bounds.par_iter().map(run).collect())
        };
        let merged = parts.into_iter().fold(Partial::default(), Partial::merge);
        if let Some(e) = merged.error {
            return Err(e);
        }
        Ok((index, merged))
    }

    pub fn verify_claim(&self) -> Result<Vec<ClaimViolation>> {
        let checks = Checks {
            wiener: false,
            claim: true,
            lemma: false,
        };
        Ok(self.sweep(checks)?.1.claim)
    }

    pub fn verify_lemma(&self) -> Result<Vec<LemmaViolation>> {
        let checks = Checks {
            wiener: false,
            claim: false,
            lemma: true,
        };
        Ok(self.sweep(checks)?.1.lemma)
    }

    /// Full sweep: maximum Wiener index, maximizer classes, and the claim and
    /// lemma checks on every edge-minimal instance.
    pub fn verify_theorem(&self) -> Result<VerificationReport> {
        let checks = Checks {
            wiener: true,
            claim: true,
            lemma: true,
        };
        let (index, part) = self.sweep(checks)?;
        let (n, k) = (self.n, self.k);

        let extremal = families::extremal_paths(n, k)?;
        let extremal_edges = extremal[0].edge_count();
        let expected_max_wiener = formulas::wmax(n as u64, k as u64)?;
        let mut expected_classes = extremal
            .iter()
            .map(canonical_form)
            .collect::<Result<Vec<_>>>()?;
        expected_classes.sort();
        expected_classes.dedup();

        let chosen_of = |mask: u64| {
            let mut buf = [0u16; MAX_RANKED_EDGES];
            let len = index.chosen(mask, &mut buf);
            buf[..len].to_vec()
        };
        let mut maximizer_classes: Vec<CanonicalForm> = part
            .maximizers
            .par_iter()
            .map(|&m| canonical_from_masks(n, k, &chosen_of(m)))
            .collect();
        maximizer_classes.sort();
        maximizer_classes.dedup();

        // a maximizer with surplus edges must shed one and stay connected
        let mut reduction_violations = Vec::new();
        for &mask in &part.maximizers {
            let chosen = chosen_of(mask);
            if chosen.len() <= extremal_edges {
                continue;
            }
            let w = wiener_masks(n, &chosen);
            let reducible = (0..chosen.len()).any(|i| {
                if !is_connected(n, &chosen, Some(i)) {
                    return false;
                }
                let mut sub = chosen.clone();
                sub.remove(i);
                wiener_masks(n, &sub) >= w
            });
            if !reducible {
                reduction_violations.push(index.to_hypergraph(&chosen));
            }
        }

        let extremal_attain = extremal.iter().all(|p| p.wiener().ok() == part.max_wiener);
        let theorem_match = part.max_wiener == Some(expected_max_wiener)
            && maximizer_classes == expected_classes
            && extremal_attain;

        Ok(VerificationReport {
            n,
            k,
            search_space: self.space,
            candidates_scanned: part.scanned,
            instances_checked: part.connected,
            edge_minimal_checked: part.edge_minimal,
            max_wiener: part.max_wiener,
            expected_max_wiener,
            labeled_maximizers: part.maximizers.len() as u64,
            maximizer_classes,
            expected_classes,
            theorem_match,
            claim_violations: part.claim,
            lemma_violations: part.lemma,
            reduction_violations,
        })
    }
}

pub fn verify_theorem(n: usize, k: usize, space: SearchSpace) -> Result<VerificationReport> {
    Verifier::new(n, k).space(space).verify_theorem()
}

pub fn verify_claim(n: usize, k: usize, space: SearchSpace) -> Result<Vec<ClaimViolation>> {
    Verifier::new(n, k).space(space).verify_claim()
}

pub fn verify_lemma(n: usize, k: usize, space: SearchSpace) -> Result<Vec<LemmaViolation>> {
    Verifier::new(n, k).space(space).verify_lemma()
}

/// Outcome of an exhaustive sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub k: usize,
    pub search_space: SearchSpace,
    pub candidates_scanned: u64,
    /// Connected hypergraphs evaluated.
    pub instances_checked: u64,
    pub edge_minimal_checked: u64,
    pub max_wiener: Option<u64>,
    pub expected_max_wiener: u64,
    pub labeled_maximizers: u64,
    pub maximizer_classes: Vec<CanonicalForm>,
    pub expected_classes: Vec<CanonicalForm>,
    pub theorem_match: bool,
    pub claim_violations: Vec<ClaimViolation>,
    pub lemma_violations: Vec<LemmaViolation>,
    pub reduction_violations: Vec<Hypergraph>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.theorem_match
            && self.claim_violations.is_empty()
            && self.lemma_violations.is_empty()
            && self.reduction_violations.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# maximizers are compared up to isomorphism (canonical form equality)"
        )?;
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "k: {}", self.k)?;
        writeln!(f, "search_space: {}", self.search_space)?;
        match self.search_space {
            SearchSpace::Full => writeln!(f, "uniqueness_scope: all connected hypergraphs on [{}]", self.n)?,
            SearchSpace::EdgeBounded(m) => writeln!(
                f,
                "uniqueness_scope: only hypergraphs with at most {m} edges; denser hypergraphs not certified"
            )?,
        }
        writeln!(f, "candidates_scanned: {}", self.candidates_scanned)?;
        writeln!(f, "instances_checked: {}", self.instances_checked)?;
        writeln!(f, "edge_minimal_checked: {}", self.edge_minimal_checked)?;
        match self.max_wiener {
            Some(w) => writeln!(f, "max_wiener: {w}")?,
            None => writeln!(f, "max_wiener: none")?,
        }
        writeln!(f, "expected_max_wiener: {}", self.expected_max_wiener)?;
        writeln!(f, "labeled_maximizers: {}", self.labeled_maximizers)?;
        writeln!(f, "maximizer_classes: {}", self.maximizer_classes.len())?;
        for (i, class) in self.maximizer_classes.iter().enumerate() {
            writeln!(f, "class {}:", i + 1)?;
            write!(f, "{class}")?;
        }
        writeln!(f, "expected_classes: {}", self.expected_classes.len())?;
        for (i, class) in self.expected_classes.iter().enumerate() {
            writeln!(f, "expected {}:", i + 1)?;
            write!(f, "{class}")?;
        }
        writeln!(f, "theorem_match: {}", self.theorem_match)?;
        writeln!(f, "claim_violations: {}", self.claim_violations.len())?;
        for v in &self.claim_violations {
            writeln!(f, "  {v}")?;
        }
        writeln!(f, "lemma_violations: {}", self.lemma_violations.len())?;
        for v in &self.lemma_violations {
            writeln!(f, "  {v}")?;
        }
        writeln!(
            f,
            "reduction_violations: {}",
            self.reduction_violations.len()
        )?;
        for h in &self.reduction_violations {
            writeln!(f, "  edges [{}]", edge_list(h))?;
        }
        writeln!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}
