//! Closed forms for the maximum Wiener index and the bounds used to derive it.
//!
//! Everything is exact integer arithmetic. `f` is evaluated over a common
//! denominator of 6 and the division is checked.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("f({s},{k},{r}) is not an integer")]
    NonIntegerResult { s: u64, k: u64, r: u64 },
    #[error("parameters out of range: {0}")]
    InvalidParameters(String),
    #[error("identity {case} does not apply to (s={s}, k={k}, r={r}, l={l})")]
    DomainError {
        case: char,
        s: u64,
        k: u64,
        r: u64,
        l: u64,
    },
}

pub type Result<T> = std::result::Result<T, FormulaError>;

fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// Wiener index of the extremal path on `n = k·s + r` vertices.
pub fn f(s: u64, k: u64, r: u64) -> Result<u64> {
    if k < 2 || r >= k {
        return Err(FormulaError::InvalidParameters(format!(
            "f needs k >= 2 and 0 <= r < k, got s={s}, k={k}, r={r}"
        )));
    }
    let (s, k, r) = (s as i128, k as i128, r as i128);
    let num = 2 * k * k * s * s * s
        + 6 * r * k * s * s
        + 6 * r * r * s
        + (k * k - 3 * k) * s
        + 3 * r * (r - 1);
    if num % 6 != 0 {
        return Err(FormulaError::NonIntegerResult {
            s: s as u64,
            k: k as u64,
            r: r as u64,
        });
    }
    Ok((num / 6) as u64)
}

fn check_g(l: u64, k: u64, r: u64) -> Result<()> {
    if k < 2 || r >= k || l == 0 || l >= k {
        return Err(FormulaError::InvalidParameters(format!(
            "need k >= 2, 0 <= r < k, 1 <= l < k; got l={l}, k={k}, r={r}"
        )));
    }
    Ok(())
}

/// `k·s² + l·s + r(2s + 1)`
pub fn g1(l: u64, k: u64, s: u64, r: u64) -> Result<u64> {
    check_g(l, k, r)?;
    Ok(k * s * s + l * s + r * (2 * s + 1))
}

/// `k·s² + l·s + 2rs`
pub fn g2(l: u64, k: u64, s: u64, r: u64) -> Result<u64> {
    check_g(l, k, r)?;
    Ok(k * s * s + l * s + 2 * r * s)
}

/// Split after deleting a good edge: `l` isolated vertices and a remaining
/// component of order `n - l = k·s' + r'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundParams {
    pub l: u64,
    pub s_prime: u64,
    pub r_prime: u64,
}

impl BoundParams {
    pub fn new(l: u64, s_prime: u64, r_prime: u64, k: u64) -> Result<Self> {
        if l == 0 || l >= k || r_prime >= k {
            return Err(FormulaError::InvalidParameters(format!(
                "need 1 <= l < k and 0 <= r' < k; got l={l}, r'={r_prime}, k={k}"
            )));
        }
        Ok(BoundParams {
            l,
            s_prime,
            r_prime,
        })
    }

    /// Decomposes `n - l` by `k`.
    pub fn from_split(n: u64, k: u64, l: u64) -> Result<Self> {
        if l >= n {
            return Err(FormulaError::InvalidParameters(format!(
                "l={l} must be below n={n}"
            )));
        }
        let rest = n - l;
        Self::new(l, rest / k.max(1), rest % k.max(1), k)
    }

    fn uses_g1(&self, k: u64) -> bool {
        k - self.l <= self.r_prime
    }
}

/// Upper bound on the summed distance from a pendant vertex to the rest.
pub fn distance_sum_bound(p: BoundParams, k: u64) -> Result<u64> {
    if p.uses_g1(k) {
        g1(p.l, k, p.s_prime, p.r_prime)
    } else {
        g2(p.l, k, p.s_prime, p.r_prime)
    }
}

/// Upper bound on the eccentricity of a pendant vertex within the rest.
pub fn eccentricity_bound(p: BoundParams, k: u64) -> u64 {
    if p.uses_g1(k) {
        2 * p.s_prime + 1
    } else {
        2 * p.s_prime
    }
}

/// `f(s+1, k, r+l-k) - (f(s,k,r) + l·g1 + C(l,2))`, defined when `r + l >= k`.
pub fn residual_a(s: u64, k: u64, r: u64, l: u64) -> Result<i64> {
    check_g(l, k, r)?;
    if r + l < k {
        return Err(FormulaError::DomainError {
            case: 'A',
            s,
            k,
            r,
            l,
        });
    }
    let lhs = f(s + 1, k, r + l - k)? as i128;
    let rhs = (f(s, k, r)? + l * g1(l, k, s, r)? + binom2(l)) as i128;
    Ok((lhs - rhs) as i64)
}

/// `f(s, k, r+l) - (f(s,k,r) + l·g2 + C(l,2))`, defined when `r + l < k`.
pub fn residual_b(s: u64, k: u64, r: u64, l: u64) -> Result<i64> {
    check_g(l, k, r)?;
    if r + l >= k {
        return Err(FormulaError::DomainError {
            case: 'B',
            s,
            k,
            r,
            l,
        });
    }
    let lhs = f(s, k, r + l)? as i128;
    let rhs = (f(s, k, r)? + l * g2(l, k, s, r)? + binom2(l)) as i128;
    Ok((lhs - rhs) as i64)
}

/// Both residuals; exactly one of them is in its domain.
pub fn identity_residuals(s: u64, k: u64, r: u64, l: u64) -> (Result<i64>, Result<i64>) {
    (residual_a(s, k, r, l), residual_b(s, k, r, l))
}

/// Maximum Wiener index of a connected k-uniform hypergraph on `n` vertices.
pub fn wmax(n: u64, k: u64) -> Result<u64> {
    if k < 2 || n < k {
        return Err(FormulaError::InvalidParameters(format!(
            "wmax needs n >= k >= 2, got n={n}, k={k}"
        )));
    }
    f(n / k, k, n % k)
}

/// One grid point where a closing identity failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFailure {
    pub s: u64,
    pub k: u64,
    pub r: u64,
    pub l: u64,
    pub case: char,
    pub residual: i64,
    pub expected: i64,
}

/// Checks both identities over `s ∈ [0, s_max]`, `k ∈ [2, k_max]` and every
/// valid `(r, l)`. Returns the number of tuples checked, or the first failure.
pub fn check_identity_grid(s_max: u64, k_max: u64) -> std::result::Result<u64, IdentityFailure> {
    let mut count = 0;
    for s in 0..=s_max {
        for k in 2..=k_max {
            for r in 0..k {
                for l in 1..k {
                    let (case, got, expected) = if r + l >= k {
                        let e = (k as i64 - l as i64 - r as i64).pow(2);
                        ('A', residual_a(s, k, r, l), e)
                    } else {
                        ('B', residual_b(s, k, r, l), (l * r) as i64)
                    };
                    let residual = got.unwrap_or(i64::MIN);
                    if residual != expected {
                        return Err(IdentityFailure {
                            s,
                            k,
                            r,
                            l,
                            case,
                            residual,
                            expected,
                        });
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_values() {
        assert_eq!(f(1, 2, 1).unwrap(), 4);
        assert_eq!(f(3, 4, 1).unwrap(), 185);
        assert_eq!(f(2, 3, 0).unwrap(), 24);
        for k in 2..10 {
            assert_eq!(f(1, k, 0).unwrap(), k * (k - 1) / 2);
        }
        assert!(matches!(
            f(1, 3, 3),
            Err(FormulaError::InvalidParameters(_))
        ));
        assert!(f(1, 1, 0).is_err());
    }

    #[test]
    fn g_values() {
        for (l, k, r) in [(1, 4, 3), (2, 5, 0), (3, 4, 2)] {
            assert_eq!(g1(l, k, 0, r).unwrap(), r);
        }
        assert_eq!(g1(2, 5, 3, 0).unwrap(), g2(2, 5, 3, 0).unwrap());
        assert_eq!(g2(2, 5, 3, 0).unwrap(), 5 * 9 + 2 * 3);
        assert_eq!(g1(1, 4, 3, 1).unwrap(), 46);
        assert!(g1(0, 4, 3, 1).is_err());
        assert!(g2(4, 4, 3, 1).is_err());
    }

    #[test]
    fn bound_examples() {
        let p = BoundParams::new(2, 1, 1, 3).unwrap();
        assert_eq!(distance_sum_bound(p, 3).unwrap(), 8);
        assert_eq!(eccentricity_bound(p, 3), 3);

        let p = BoundParams::new(1, 3, 0, 4).unwrap();
        assert_eq!(distance_sum_bound(p, 4).unwrap(), 39);
        assert_eq!(eccentricity_bound(p, 4), 6);

        let p = BoundParams::new(2, 0, 0, 4).unwrap();
        assert_eq!(distance_sum_bound(p, 4).unwrap(), 0);
        assert_eq!(eccentricity_bound(p, 4), 0);
        let p = BoundParams::new(2, 0, 3, 4).unwrap();
        assert_eq!(distance_sum_bound(p, 4).unwrap(), 3);

        assert_eq!(
            BoundParams::from_split(13, 4, 1).unwrap(),
            BoundParams::new(1, 3, 0, 4).unwrap()
        );
        assert!(BoundParams::new(0, 1, 1, 3).is_err());
        assert!(BoundParams::new(1, 1, 3, 3).is_err());
    }

    #[test]
    fn residual_examples() {
        let (a, b) = identity_residuals(2, 4, 3, 1);
        assert_eq!(a.unwrap(), 0);
        assert!(matches!(
            b,
            Err(FormulaError::DomainError { case: 'B', .. })
        ));
        let (a, b) = identity_residuals(2, 4, 0, 1);
        assert!(matches!(
            a,
            Err(FormulaError::DomainError { case: 'A', .. })
        ));
        assert_eq!(b.unwrap(), 0);
        assert_eq!(residual_b(1, 5, 1, 2).unwrap(), 2);
    }

    #[test]
    fn wmax_values() {
        assert_eq!(wmax(13, 4).unwrap(), 185);
        assert_eq!(wmax(6, 3).unwrap(), 24);
        assert_eq!(wmax(7, 7).unwrap(), 21);
        assert!(wmax(3, 4).is_err());
    }

    #[test]
    fn default_grid_size() {
        // Σ_{k=2..8} k(k-1) per s, 11 values of s
        assert_eq!(check_identity_grid(10, 8), Ok(11 * 168));
    }
}
