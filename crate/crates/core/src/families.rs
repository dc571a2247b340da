//! Generators for the named hypergraph families.
//!
//! Every generator returns a validated [`Hypergraph`] whose edges are sorted
//! lexicographically, so serialized output is byte-stable.

use itertools::Itertools;
use thiserror::Error;

use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("need n >= k >= 2, got n={n}, k={k}")]
    InvalidOrder { n: usize, k: usize },
    #[error("k={k} divides n={n}; use the offset tight path")]
    DivisibleOrder { n: usize, k: usize },
    #[error("k={k} does not divide n={n}; use the tight path")]
    NonDivisibleOrder { n: usize, k: usize },
    #[error("offset x={x} must satisfy 0 < x < k={k}")]
    BadOffset { k: usize, x: usize },
    #[error("n={n} is not of the form m(k-1)+1 with m >= 1 for k={k}")]
    BadLinearOrder { n: usize, k: usize },
    #[error("dense star needs k >= 3, got k={k}")]
    UniformityTooSmall { k: usize },
    #[error("dense star needs n > k, got n={n}, k={k}")]
    OrderTooSmall { n: usize, k: usize },
}

pub type Result<T> = std::result::Result<T, FamilyError>;

/// `n = k·s + r` with `0 <= r < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathParams {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub r: usize,
}

impl PathParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k < 2 || n < k {
            return Err(FamilyError::InvalidOrder { n, k });
        }
        Ok(PathParams {
            n,
            k,
            s: n / k,
            r: n % k,
        })
    }
}

fn interval(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).collect()
}

fn build(n: usize, k: usize, edges: Vec<Vec<usize>>) -> Hypergraph {
    Hypergraph::new(n, k, edges).expect("generated family must be a valid hypergraph")
}

/// The tight path on `[n]` for `k ∤ n`: the `s` consecutive blocks plus the
/// same blocks shifted by `r`.
pub fn tight_path(n: usize, k: usize) -> Result<Hypergraph> {
    let PathParams { s, r, .. } = PathParams::new(n, k)?;
    if r == 0 {
        return Err(FamilyError::DivisibleOrder { n, k });
    }
    let blocks = (1..=s).map(|i| interval((i - 1) * k + 1, i * k));
    let shifted = (1..=s).map(|i| interval(r + (i - 1) * k + 1, i * k + r));
    Ok(build(n, k, blocks.chain(shifted).collect()))
}

/// The tight path for `k | n` with the `s - 1` connecting edges shifted by `x`.
pub fn offset_tight_path(n: usize, k: usize, x: usize) -> Result<Hypergraph> {
    let PathParams { s, r, .. } = PathParams::new(n, k)?;
    if r != 0 {
        return Err(FamilyError::NonDivisibleOrder { n, k });
    }
    if x == 0 || x >= k {
        return Err(FamilyError::BadOffset { k, x });
    }
    let blocks = (1..=s).map(|i| interval((i - 1) * k + 1, i * k));
    let shifted = (1..s).map(|i| interval((i - 1) * k + 1 + x, i * k + x));
    Ok(build(n, k, blocks.chain(shifted).collect()))
}

/// The path the extremal value is attained on: [`tight_path`] when `k ∤ n`,
/// otherwise [`offset_tight_path`] with offset 1.
pub fn extremal_path(n: usize, k: usize) -> Result<Hypergraph> {
    if PathParams::new(n, k)?.r == 0 {
        offset_tight_path(n, k, 1)
    } else {
        tight_path(n, k)
    }
}

/// All extremal paths: the single tight path, or every offset `0 < x < k`.
pub fn extremal_paths(n: usize, k: usize) -> Result<Vec<Hypergraph>> {
    if PathParams::new(n, k)?.r == 0 {
        (1..k).map(|x| offset_tight_path(n, k, x)).collect()
    } else {
        Ok(vec![tight_path(n, k)?])
    }
}

fn linear_edge_count(n: usize, k: usize) -> Result<usize> {
    if k < 2 || n < k || !(n - 1).is_multiple_of(k - 1) {
        return Err(FamilyError::BadLinearOrder { n, k });
    }
    Ok((n - 1) / (k - 1))
}

/// Linear path: consecutive blocks overlapping in exactly one vertex.
pub fn loose_path(n: usize, k: usize) -> Result<Hypergraph> {
    let m = linear_edge_count(n, k)?;
    let edges = (1..=m)
        .map(|i| interval((i - 1) * (k - 1) + 1, i * (k - 1) + 1))
        .collect();
    Ok(build(n, k, edges))
}

/// Linear star: `m` edges meeting only in the center vertex 1.
pub fn loose_star(n: usize, k: usize) -> Result<Hypergraph> {
    let m = linear_edge_count(n, k)?;
    let edges = (1..=m)
        .map(|i| {
            let mut e = vec![1];
            e.extend((i - 1) * (k - 1) + 2..=i * (k - 1) + 1);
            e
        })
        .collect();
    Ok(build(n, k, edges))
}

pub fn complete(n: usize, k: usize) -> Result<Hypergraph> {
    if k == 0 || n < k {
        return Err(FamilyError::InvalidOrder { n, k });
    }
    Ok(build(n, k, (1..=n).combinations(k).collect()))
}

/// Vertex 1 joined to every `(k-1)`-subset of `{2..n}`.
pub fn dense_star(n: usize, k: usize) -> Result<Hypergraph> {
    if k < 3 {
        return Err(FamilyError::UniformityTooSmall { k });
    }
    if n <= k {
        return Err(FamilyError::OrderTooSmall { n, k });
    }
    let edges = (2..=n)
        .combinations(k - 1)
        .map(|rest| std::iter::once(1).chain(rest).collect())
        .collect();
    Ok(build(n, k, edges))
}

/// The Fano plane.
pub fn fano() -> Hypergraph {
    build(
        7,
        3,
        vec![
            vec![1, 2, 3],
            vec![1, 4, 5],
            vec![1, 6, 7],
            vec![2, 4, 6],
            vec![2, 5, 7],
            vec![3, 4, 7],
            vec![3, 5, 6],
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(h: &Hypergraph) -> Vec<Vec<usize>> {
        h.edges().iter().map(|e| e.to_vec()).collect()
    }

    #[test]
    fn tight_path_examples() {
        let p = tight_path(13, 4).unwrap();
        assert_eq!(
            edges(&p),
            vec![
                vec![1, 2, 3, 4],
                vec![2, 3, 4, 5],
                vec![5, 6, 7, 8],
                vec![6, 7, 8, 9],
                vec![9, 10, 11, 12],
                vec![10, 11, 12, 13],
            ]
        );
        assert_eq!(
            edges(&tight_path(5, 3).unwrap()),
            vec![vec![1, 2, 3], vec![3, 4, 5]]
        );
        assert_eq!(
            edges(&tight_path(3, 2).unwrap()),
            vec![vec![1, 2], vec![2, 3]]
        );
        assert_eq!(
            tight_path(12, 4),
            Err(FamilyError::DivisibleOrder { n: 12, k: 4 })
        );
        assert_eq!(
            tight_path(3, 4),
            Err(FamilyError::InvalidOrder { n: 3, k: 4 })
        );
    }

    #[test]
    fn offset_tight_path_examples() {
        let p = offset_tight_path(12, 4, 2).unwrap();
        assert_eq!(
            edges(&p),
            vec![
                vec![1, 2, 3, 4],
                vec![3, 4, 5, 6],
                vec![5, 6, 7, 8],
                vec![7, 8, 9, 10],
                vec![9, 10, 11, 12],
            ]
        );
        assert_eq!(
            edges(&offset_tight_path(6, 3, 1).unwrap()),
            vec![vec![1, 2, 3], vec![2, 3, 4], vec![4, 5, 6]]
        );
        assert_eq!(
            edges(&offset_tight_path(4, 2, 1).unwrap()),
            vec![vec![1, 2], vec![2, 3], vec![3, 4]]
        );
        assert_eq!(
            offset_tight_path(12, 4, 4),
            Err(FamilyError::BadOffset { k: 4, x: 4 })
        );
        assert_eq!(
            offset_tight_path(12, 4, 0),
            Err(FamilyError::BadOffset { k: 4, x: 0 })
        );
        assert_eq!(
            offset_tight_path(13, 4, 1),
            Err(FamilyError::NonDivisibleOrder { n: 13, k: 4 })
        );
    }

    #[test]
    fn linear_families() {
        assert_eq!(
            edges(&loose_path(13, 4).unwrap()),
            vec![
                vec![1, 2, 3, 4],
                vec![4, 5, 6, 7],
                vec![7, 8, 9, 10],
                vec![10, 11, 12, 13],
            ]
        );
        assert_eq!(
            edges(&loose_star(13, 4).unwrap()),
            vec![
                vec![1, 2, 3, 4],
                vec![1, 5, 6, 7],
                vec![1, 8, 9, 10],
                vec![1, 11, 12, 13],
            ]
        );
        assert_eq!(
            loose_path(12, 4),
            Err(FamilyError::BadLinearOrder { n: 12, k: 4 })
        );
        assert_eq!(
            loose_star(1, 2),
            Err(FamilyError::BadLinearOrder { n: 1, k: 2 })
        );
        // m = 2, k = 2: both are P_3, up to relabeling the middle vertex
        assert_eq!(
            edges(&loose_path(3, 2).unwrap()),
            vec![vec![1, 2], vec![2, 3]]
        );
        assert_eq!(
            edges(&loose_star(3, 2).unwrap()),
            vec![vec![1, 2], vec![1, 3]]
        );
    }

    #[test]
    fn complete_and_dense_star() {
        assert_eq!(complete(3, 3).unwrap().edge_count(), 1);
        assert_eq!(complete(5, 3).unwrap().edge_count(), 10);
        let ds = dense_star(5, 3).unwrap();
        assert_eq!(ds.edge_count(), 6);
        assert!(ds.edges().iter().all(|e| e[0] == 1));
        assert_eq!(
            dense_star(5, 2),
            Err(FamilyError::UniformityTooSmall { k: 2 })
        );
        assert_eq!(
            dense_star(4, 4),
            Err(FamilyError::OrderTooSmall { n: 4, k: 4 })
        );
    }

    #[test]
    fn fano_incidences() {
        let f = fano();
        assert_eq!(f.edge_count(), 7);
        assert!(f.vertices().all(|v| f.degree(v) == 3));
        assert_eq!(f.wiener().unwrap(), 21);
        assert!(!f.is_edge_minimal().unwrap());
    }

    #[test]
    fn extremal_selection() {
        assert_eq!(extremal_path(13, 4).unwrap(), tight_path(13, 4).unwrap());
        assert_eq!(
            extremal_path(12, 4).unwrap(),
            offset_tight_path(12, 4, 1).unwrap()
        );
        assert_eq!(extremal_paths(12, 4).unwrap().len(), 3);
        assert_eq!(extremal_paths(5, 5).unwrap().len(), 4);
    }
}
