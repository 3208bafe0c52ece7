//! Acceptance run: one line per criterion, non-zero exit on any failure.
//!
//! ```bash
//! cargo test -p trispectra --test acceptance
//! ```

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use trispectra::cli::family_rows;
use trispectra::families::first::{u_cellwise, u_rcd};
use trispectra::families::reconcile::reconcile_all;
use trispectra::families::second::{x_cellwise, x_rcd};
use trispectra::families::{first_range, second_range};
use trispectra::numeric::{graph_eigenvalues, Verdict};
use trispectra::spectrum::Spectrum;
use trispectra::*;

/// Interval slack when comparing exact bounds with Jacobi eigenvalues.
const WEYL_SLACK: f64 = 1e-9;
/// Integer snapping window for the conjecture monitor.
const SNAP_EPS: f64 = 1e-6;
const SPECTRUM_BUDGET: Duration = Duration::from_secs(60);
const DECOMPOSITION_BUDGET: Duration = Duration::from_secs(30);

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `A v` straight from cell coordinates, independent of the graph builder.
fn apply_by_coordinates(v: &TriVector) -> Vec<i64> {
    let n = v.n;
    let mut out = Vec::with_capacity(v.len());
    for i in 1..=n {
        for j in 1..=i {
            let mut s = 0;
            for a in 1..=n {
                for b in 1..=a {
                    if (a, b) != (i, j) && (a == i || b == j || a - b == i - j) {
                        s += v.get(a, b);
                    }
                }
            }
            out.push(s);
        }
    }
    out
}

fn is_eigen_oracle(v: &TriVector, l: i64) -> bool {
    apply_by_coordinates(v).iter().zip(&v.entries).all(|(av, x)| *av == l * x)
}

fn closed_form_spectra() -> Outcome {
    let start = Instant::now();
    for n in 4..=12 {
        let s = spectrum_triangular(n);
        let g = build_triangular(n);
        ensure(s.total() == tri_number(n), || format!("n = {n}: total {} != {}", s.total(), tri_number(n)))?;
        for e in s.entries() {
            let q = e.value.as_int().ok_or_else(|| format!("n = {n}: non-integer value {}", e.value))?;
            let m = exact_multiplicity(&g, q);
            ensure(m == e.mult, || format!("n = {n}, λ = {q}: closed form {} vs nullity {m}", e.mult))?;
        }
    }
    let t = start.elapsed();
    ensure(t < SPECTRUM_BUDGET, || format!("took {t:?}"))?;
    Ok(format!("n in 4..=12 exact, {t:.2?}"))
}

fn ints(pairs: &[(i64, usize)]) -> Vec<(ExactEigen, usize)> {
    pairs.iter().map(|&(v, m)| (ExactEigen::Int(v), m)).collect()
}

fn worked_values() -> Outcome {
    let root3 = ExactEigen::sqrt(3);
    let cases: [(&str, Spectrum, Spectrum); 5] = [
        ("triangular(3)", spectrum_triangular(3), Spectrum::from_pairs(ints(&[(4, 1), (0, 3), (-2, 2)]))),
        (
            "triangular(4)",
            spectrum_triangular(4),
            Spectrum::from_pairs(ints(&[(6, 1), (1, 3), (0, 2), (-2, 3), (-3, 1)])),
        ),
        (
            "triangle parts, n = 4",
            spectrum_g12(4),
            Spectrum::from_pairs(ints(&[(6, 1), (4, 1), (1, 3), (0, 5), (-2, 5), (-3, 1)])),
        ),
        (
            "anti-diagonal part, n = 4",
            spectrum_g13(4),
            Spectrum::from_pairs(ints(&[(3, 1), (2, 2), (1, 2), (0, 2), (-1, 9)])),
        ),
        ("bipartite part, n = 4", spectrum_g23x(4), {
            let mut p = ints(&[(2, 1), (0, 10), (-2, 1)]);
            p.push((root3, 2));
            p.push((root3.neg(), 2));
            Spectrum::from_pairs(p)
        }),
    ];
    for (name, got, want) in &cases {
        ensure(got == want, || format!("{name}: got {got}, expected {want}"))?;
    }
    Ok(format!("{} multisets equal", cases.len()))
}

fn families() -> Outcome {
    let mut checked = 0usize;
    for n in 4..=15 {
        for family in Family::ALL {
            for row in family_rows(family, n) {
                if row.defined {
                    ensure(row.passed(), || format!("{family} n = {n} λ = {}: {row:?}", row.parameter))?;
                    checked += 1;
                }
            }
        }
        // The exceptional boundary values are exactly where the third vector is missing.
        for (family, undefined) in [
            (Family::U, (n % 2 == 1).then(|| (n as i64 - 7) / 2)),
            (Family::X, (n % 2 == 0).then(|| (n as i64 - 4) / 2)),
        ] {
            for row in family_rows(family, n) {
                let l: i64 = row.parameter.parse().unwrap();
                let want = if Some(l) == undefined { 2 } else { 3 };
                ensure(row.rank == Some(want), || format!("{family} n = {n} λ = {l}: rank {:?}, want {want}", row.rank))?;
            }
        }
        let ts = basis_least(n).map_err(|e| e.to_string())?;
        let data: Vec<TriVector> = ts.iter().map(|t| t.data.clone()).collect();
        ensure(check_independent(&data) == Ok(tri_number(n - 3)), || format!("n = {n}: stencil rank"))?;
        for (l, v) in trispectra::families::full_basis(n).map_err(|e| e.to_string())? {
            ensure(is_eigen_oracle(&v, l), || format!("n = {n} λ = {l}: coordinate oracle rejects a basis vector"))?;
        }
    }
    let summary = reconcile_all(4..=11);
    let literal_x_fails = summary.searches.iter().any(|s| s.piece.starts_with('x') && !s.literal_passes);
    ensure(summary.conclusive(), || "boundary search found no unique passing reading".into())?;
    let shipped: Vec<&str> = summary.searches.iter().map(|s| s.shipped.as_str()).collect();
    Ok(format!(
        "{checked} family rows exact for n in 4..=15; literal x reading fails: {literal_x_fails}; unique variants: {}",
        shipped.join(" | ")
    ))
}

fn least_and_largest() -> Outcome {
    for n in 4..=12 {
        let g = build_triangular(n);
        let m = exact_multiplicity(&g, -3);
        ensure(m == tri_number(n - 3), || format!("n = {n}: mult(-3) = {m}"))?;
        let top = exact_multiplicity(&g, 2 * n as i64 - 2);
        ensure(top == 1, || format!("n = {n}: mult(2n-2) = {top}"))?;
    }
    for n in 4..=10 {
        let m = exact_multiplicity(&build_queens(n), -4);
        ensure(m == (n - 3) * (n - 3), || format!("queens n = {n}: mult(-4) = {m}"))?;
    }
    Ok("all multiplicities exact".into())
}

fn decomposition() -> Outcome {
    let start = Instant::now();
    for n in 4..=16 {
        let d = decompose(n).map_err(|e| e.to_string())?;
        let r = verify_decomposition(&d);
        let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        ensure(r.passed, || format!("n = {n}: failed {failed:?}"))?;
    }
    let t = start.elapsed();
    ensure(t < DECOMPOSITION_BUDGET, || format!("took {t:?}"))?;
    Ok(format!("n in 4..=16, {t:.2?}"))
}

fn weyl() -> Outcome {
    let b = best_bounds(4, 9).map_err(|e| e.to_string())?;
    ensure(b.lower >= SurdSum::int(-3) && b.upper <= SurdSum::int(4), || {
        format!("λ_9 of queens(4) bounded by [{}, {}]", b.lower, b.upper)
    })?;
    let mut worst = f64::INFINITY;
    for n in 4..=10 {
        let values = graph_eigenvalues(&build_queens(n)).map_err(|e| e.to_string())?.values;
        for e in bound_table(n).map_err(|e| e.to_string())? {
            let lk = values[e.k - 1];
            let (lo, hi) = (e.lower.to_f64(), e.upper.to_f64());
            ensure(lo <= lk + WEYL_SLACK && lk <= hi + WEYL_SLACK, || {
                format!("n = {n}, k = {}: {lk} outside [{lo}, {hi}]", e.k)
            })?;
            worst = worst.min(lk - lo).min(hi - lk);
        }
    }
    Ok(format!("λ_9(queens 4) in [{}, {}]; n in 4..=10 contained, min margin {worst:.3e}", b.lower, b.upper))
}

fn conjecture() -> Outcome {
    let mut observed: BTreeMap<usize, usize> = BTreeMap::new();
    for n in 4..=12 {
        let r = check_conjecture(n, SNAP_EPS).map_err(|e| e.to_string())?;
        ensure(r.verdict != Verdict::Violated, || format!("n = {n}: missing {:?} unexpected {:?}", r.missing, r.unexpected))?;
        ensure(r.oracle_disagreements.is_empty(), || format!("n = {n}: snapped counts disagree at {:?}", r.oracle_disagreements))?;
        observed.insert(n, r.observed.len());
    }
    Ok(format!("no violation for n in 4..=12; distinct integers observed {observed:?}"))
}

fn cross_construction() -> Outcome {
    let mut pairs = 0;
    for n in 4..=15 {
        for l in first_range(n) {
            ensure(u_cellwise(n, l) == u_rcd(n, l), || format!("u n = {n} λ = {l}"))?;
            pairs += 1;
        }
        for l in second_range(n) {
            ensure(x_cellwise(n, l) == x_rcd(n, l), || format!("x n = {n} λ = {l}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (n, λ) pairs agree entrywise"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("spectrum closed form vs exact nullity", closed_form_spectra),
        ("worked spectra", worked_values),
        ("eigenvector families and ranks", families),
        ("least and largest multiplicities", least_and_largest),
        ("queens decomposition", decomposition),
        ("Weyl bounds", weyl),
        ("integer eigenvalue monitor", conjecture),
        ("cellwise vs line-sum constructions", cross_construction),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
