//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p hyperwiener --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use hyperwiener::enumerate::{canonical_form, enumerate_connected, SearchSpace, Verifier};
use hyperwiener::families::{
    complete, dense_star, extremal_paths, fano, offset_tight_path, tight_path,
};
use hyperwiener::formulas::{check_identity_grid, wmax};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    check(
        elapsed < limit,
        format!("took {elapsed:.2?}, limit {limit:?}"),
    )
}

fn binom2(n: usize) -> u64 {
    (n * (n - 1) / 2) as u64
}

/// 1. Exhaustive theorem verification at (5,3), (6,3), (4,2).
fn theorem_verification() -> Outcome {
    let start = Instant::now();
    let r = Verifier::new(5, 3)
        .verify_theorem()
        .map_err(|e| e.to_string())?;
    check(
        r.max_wiener == Some(14),
        format!("(5,3) max {:?}", r.max_wiener),
    )?;
    let expected = vec![canonical_form(&tight_path(5, 3).unwrap()).unwrap()];
    check(r.maximizer_classes == expected, "(5,3) maximizer classes")?;
    check(r.theorem_match, "(5,3) theorem_match")?;

    let t63 = Instant::now();
    let r = Verifier::new(6, 3)
        .verify_theorem()
        .map_err(|e| e.to_string())?;
    within(t63.elapsed(), Duration::from_secs(60))?;
    check(
        r.max_wiener == Some(24),
        format!("(6,3) max {:?}", r.max_wiener),
    )?;
    let mut offsets: Vec<_> = (1..3)
        .map(|x| canonical_form(&offset_tight_path(6, 3, x).unwrap()).unwrap())
        .collect();
    offsets.sort();
    offsets.dedup();
    check(r.maximizer_classes == offsets, "(6,3) maximizer classes")?;
    check(r.theorem_match, "(6,3) theorem_match")?;

    let r = Verifier::new(4, 2)
        .verify_theorem()
        .map_err(|e| e.to_string())?;
    check(
        r.max_wiener == Some(10),
        format!("(4,2) max {:?}", r.max_wiener),
    )?;
    check(r.theorem_match, "(4,2) theorem_match")?;
    Ok(format!(
        "max 14 / 24 / 10, classes match, {:.2?}",
        start.elapsed()
    ))
}

/// 2. wiener(extremal path) = wmax for k in [2,6], n in [k,40].
fn formula_vs_bfs() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for k in 2..=6usize {
        for n in k..=40usize {
            let expected = wmax(n as u64, k as u64).map_err(|e| e.to_string())?;
            for p in extremal_paths(n, k).map_err(|e| e.to_string())? {
                let w = p.wiener().map_err(|e| e.to_string())?;
                check(
                    w == expected,
                    format!("n={n} k={k}: bfs {w} vs formula {expected}"),
                )?;
                count += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("{count} paths, {:.2?}", start.elapsed()))
}

/// 3. Closing identities on s in [0,10], k in [2,8].
fn identity_suite() -> Outcome {
    let start = Instant::now();
    let count = check_identity_grid(10, 8).map_err(|f| format!("{f:?}"))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    check(count == 1848, format!("grid size {count}"))?;
    Ok(format!("{count} tuples, {:.2?}", start.elapsed()))
}

/// 4. Claim and lemma sweeps report nothing.
fn claim_and_lemma() -> Outcome {
    let cases = [
        (4, 2),
        (5, 2),
        (6, 2),
        (4, 3),
        (5, 3),
        (6, 3),
        (5, 4),
        (6, 4),
    ];
    let mut minimal = 0;
    for (n, k) in cases {
        let r = Verifier::new(n, k)
            .verify_theorem()
            .map_err(|e| e.to_string())?;
        if let Some(v) = r.claim_violations.first() {
            return Err(format!("({n},{k}) claim: {v}"));
        }
        check(
            r.lemma_violations.is_empty(),
            format!("({n},{k}) lemma violations"),
        )?;
        let claim = Verifier::new(n, k)
            .verify_claim()
            .map_err(|e| e.to_string())?;
        let lemma = Verifier::new(n, k)
            .verify_lemma()
            .map_err(|e| e.to_string())?;
        check(
            claim.is_empty() && lemma.is_empty(),
            format!("({n},{k}) standalone sweeps"),
        )?;
        minimal += r.edge_minimal_checked;
    }
    Ok(format!(
        "{} cases, {minimal} edge-minimal instances, 0 violations",
        cases.len()
    ))
}

/// 5. BFS distance equals the exhaustive Berge path search.
fn oracle_equivalence() -> Outcome {
    let mut instances = 0u64;
    let mut pairs = 0u64;
    for n in 2..=6 {
        for k in 2..=n {
            for h in enumerate_connected(n, k, SearchSpace::Full).map_err(|e| e.to_string())? {
                instances += 1;
                for u in 1..=n {
                    let bfs = h.distances_from(u).unwrap();
                    for v in u + 1..=n {
                        let oracle = h.berge_path_oracle(u, v).map_err(|e| e.to_string())?;
                        check(bfs[v - 1] == oracle, format!("{h:?} ({u},{v})"))?;
                        pairs += 1;
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..1000 {
        let h = common::random_connected(&mut rng, 10, 4, 6);
        for u in h.vertices() {
            for v in u + 1..=h.order() {
                let bfs = h.distance(u, v).unwrap();
                let oracle = h.berge_path_oracle(u, v).map_err(|e| e.to_string())?;
                check(bfs == oracle, format!("random {h:?} ({u},{v})"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "{instances} enumerated + 1000 random instances, {pairs} pairs, 0 discrepancies"
    ))
}

/// 6. Minimizers attain C(n,2).
fn minimizer_equalities() -> Outcome {
    let mut count = 0;
    for n in 2..=8 {
        for k in 2..=n {
            let w = complete(n, k)
                .unwrap()
                .wiener()
                .map_err(|e| e.to_string())?;
            check(w == binom2(n), format!("complete({n},{k}) = {w}"))?;
            count += 1;
        }
        for k in 3..n {
            let w = dense_star(n, k)
                .unwrap()
                .wiener()
                .map_err(|e| e.to_string())?;
            check(w == binom2(n), format!("dense_star({n},{k}) = {w}"))?;
            count += 1;
        }
    }
    let w = fano().wiener().map_err(|e| e.to_string())?;
    check(w == 21, format!("fano = {w}"))?;
    Ok(format!("{} hypergraphs at C(n,2)", count + 1))
}

/// 7. Adding an edge never raises the Wiener index.
fn monotonicity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut trials = 0;
    while trials < 10_000 {
        let h = common::random_connected(&mut rng, 10, 4, 6);
        let Some(e) = common::random_absent_edge(&mut rng, &h) else {
            continue;
        };
        let before = h.wiener().unwrap();
        let after = h.add_edge(e.clone()).unwrap().wiener().unwrap();
        check(
            after <= before,
            format!("{h:?} + {e:?}: {before} -> {after}"),
        )?;
        trials += 1;
    }
    Ok(format!("{trials} trials, 0 violations"))
}

/// 8. Offset independence and reversal isomorphism.
fn offset_invariance() -> Outcome {
    let mut families = 0;
    for k in 2..=6 {
        for n in (k..=24).step_by(k) {
            let ws: Vec<u64> = (1..k)
                .map(|x| offset_tight_path(n, k, x).unwrap().wiener().unwrap())
                .collect();
            check(
                ws.windows(2).all(|p| p[0] == p[1]),
                format!("n={n} k={k}: {ws:?}"),
            )?;
            families += 1;
            if n <= 10 {
                for x in 1..k {
                    let a = canonical_form(&offset_tight_path(n, k, x).unwrap()).unwrap();
                    let b = canonical_form(&offset_tight_path(n, k, k - x).unwrap()).unwrap();
                    check(a == b, format!("n={n} k={k} x={x}"))?;
                }
            }
        }
    }
    Ok(format!(
        "{families} (n,k) pairs constant in x, reversal classes equal"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 theorem verification (exhaustive)", theorem_verification),
        ("2 formula vs BFS", formula_vs_bfs),
        ("3 identity suite", identity_suite),
        ("4 claim and lemma sweeps", claim_and_lemma),
        ("5 oracle equivalence", oracle_equivalence),
        ("6 minimizer equalities", minimizer_equalities),
        ("7 monotonicity", monotonicity),
        ("8 offset independence and reversal", offset_invariance),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(note) => println!("[PASS] criterion {name}: {note}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
