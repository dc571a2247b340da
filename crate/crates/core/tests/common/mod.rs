#![allow(dead_code)]

use hyperwiener::Hypergraph;
use rand::seq::index::sample;
use rand::Rng;

/// Random connected k-uniform hypergraph with `n <= max_n`, `k` in
/// `[2, max_k]` and at most `max_edges` edges, by rejection.
pub fn random_connected<R: Rng>(
    rng: &mut R,
    max_n: usize,
    max_k: usize,
    max_edges: usize,
) -> Hypergraph {
    loop {
        let k = rng.gen_range(2..=max_k);
        let reach = (1 + max_edges * (k - 1)).min(max_n);
        if reach < k {
            continue;
        }
        let n = rng.gen_range(k..=reach);
        let m = rng.gen_range(1..=max_edges);
        let mut edges: Vec<Vec<usize>> = (0..m)
            .map(|_| {
                let mut e: Vec<usize> = sample(rng, n, k).into_iter().map(|v| v + 1).collect();
                e.sort_unstable();
                e
            })
            .collect();
        edges.sort();
        edges.dedup();
        let h = Hypergraph::new(n, k, edges).expect("valid random edges");
        if h.is_connected() {
            return h;
        }
    }
}

/// A random k-subset of `[n]` that is not already an edge of `h`, if any.
pub fn random_absent_edge<R: Rng>(rng: &mut R, h: &Hypergraph) -> Option<Vec<usize>> {
    let (n, k) = (h.order(), h.uniformity());
    for _ in 0..200 {
        let mut e: Vec<usize> = sample(rng, n, k).into_iter().map(|v| v + 1).collect();
        e.sort_unstable();
        if !h.edges().iter().any(|x| x.vertices() == e.as_slice()) {
            return Some(e);
        }
    }
    None
}
