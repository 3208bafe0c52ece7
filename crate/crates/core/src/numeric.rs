//! Cyclic Jacobi eigen-solver for dense symmetric matrices, integer
//! snapping of numeric spectra, and the integer-eigenvalue monitor for
//! queens graphs.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bareiss::exact_multiplicity;
use crate::error::{domain, Error, Result};
use crate::graph::{build_queens, LabeledGraph};

/// Sweep cap; convergence is quadratic, so this is never reached in practice.
pub const MAX_SWEEPS: usize = 100;
pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_SNAP_EPS: f64 = 1e-6;

#[derive(Debug, Clone, Serialize)]
pub struct NumericSpectrum {
    /// Non-increasing.
    pub values: Vec<f64>,
    /// `max |A v - λ v|` over eigenpairs, when vectors were accumulated.
    pub residual: Option<f64>,
    /// Off-diagonal Frobenius norm before each sweep and after the last.
    pub off_norms: Vec<f64>,
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                s += a[p * n + q] * a[p * n + q];
            }
        }
    }
    s.sqrt()
}

fn max_off(a: &[f64], n: usize) -> f64 {
    let mut m: f64 = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            m = m.max(a[p * n + q].abs());
        }
    }
    m
}

/// Eigenvalues of the symmetric row-major `dim x dim` matrix `m`.
///
/// Sweeps visit pairs `(p, q)`, `p < q`, in row order until every
/// off-diagonal entry is below `tol`.
pub fn symmetric_eigen(m: &[f64], dim: usize, tol: f64, keep_vectors: bool) -> Result<NumericSpectrum> {
    if m.len() != dim * dim {
        return Err(Error::Dimension { expected: dim * dim, found: m.len() });
    }
    if tol.is_nan() || tol <= 0.0 {
        return domain("tolerance must be positive");
    }
    for p in 0..dim {
        for q in p + 1..dim {
            if (m[p * dim + q] - m[q * dim + p]).abs() > 1e-12 {
                return domain(format!("matrix is not symmetric at ({}, {})", p + 1, q + 1));
            }
        }
    }
    let n = dim;
    let mut a = m.to_vec();
    let mut v = if keep_vectors {
        let mut id = vec![0.0; n * n];
        for p in 0..n {
            id[p * n + p] = 1.0;
        }
        Some(id)
    } else {
        None
    };
    let mut off_norms = vec![off_norm(&a, n)];
    let mut sweeps = 0;
    while max_off(&a, n) >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off: max_off(&a, n) });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        sweeps += 1;
        off_norms.push(off_norm(&a, n));
    }
    let diag: Vec<f64> = (0..n).map(|p| a[p * n + p]).collect();
    let residual = v.map(|v| {
        let mut worst: f64 = 0.0;
        for (col, &lambda) in diag.iter().enumerate() {
            for row in 0..n {
                let av: f64 = (0..n).map(|k| m[row * n + k] * v[k * n + col]).sum();
                worst = worst.max((av - lambda * v[row * n + col]).abs());
            }
        }
        worst
    });
    let mut values = diag;
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(NumericSpectrum { values, residual, off_norms })
}

pub fn symmetric_eigenvalues(m: &[f64], dim: usize, tol: f64) -> Result<NumericSpectrum> {
    symmetric_eigen(m, dim, tol, false)
}

pub fn graph_eigenvalues(g: &LabeledGraph) -> Result<NumericSpectrum> {
    symmetric_eigenvalues(&g.adjacency_f64(), g.order(), DEFAULT_TOL)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Snapped {
    /// `(integer, count)`, integers decreasing.
    pub integers: Vec<(i64, usize)>,
    pub residue: Vec<f64>,
}

/// Groups values lying within `eps` of an integer.
pub fn integer_snap(values: &[f64], eps: f64) -> Result<Snapped> {
    if !(eps > 0.0 && eps < 0.5) {
        return domain("snap tolerance must lie in (0, 0.5)");
    }
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    let mut residue = Vec::new();
    for &x in values {
        let r = x.round();
        if (x - r).abs() <= eps {
            *counts.entry(r as i64).or_insert(0) += 1;
        } else {
            residue.push(x);
        }
    }
    Ok(Snapped { integers: counts.into_iter().rev().collect(), residue })
}

/// Predicted integer eigenvalues of the queens graph of side `n >= 4`.
pub fn predicted_integers(n: usize) -> BTreeMap<i64, usize> {
    let ni = n as i64;
    let mut out = BTreeMap::new();
    *out.entry(-4).or_insert(0) += (n - 3) * (n - 3);
    let top = if n.is_multiple_of(2) { (n - 2) / 2 } else { n.div_ceil(2) };
    *out.entry(ni - 4).or_insert(0) += top;
    if n % 2 == 1 {
        for q in (ni - 5) / 2..=ni - 5 {
            *out.entry(q).or_insert(0) += 1;
        }
        for q in -3..=(ni - 11) / 2 {
            *out.entry(q).or_insert(0) += 1;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated,
    OutOfScope,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub verdict: Verdict,
    pub predicted: BTreeMap<i64, usize>,
    /// Snapped numeric counts.
    pub numeric: BTreeMap<i64, usize>,
    /// Exact multiplicities of every numeric or predicted integer.
    pub observed: BTreeMap<i64, usize>,
    pub matches: Vec<i64>,
    /// Predicted values whose exact multiplicity differs from the prediction.
    pub missing: Vec<i64>,
    /// Observed values absent from the prediction.
    pub unexpected: Vec<i64>,
    /// Values where the numeric count disagrees with the exact count.
    pub oracle_disagreements: Vec<i64>,
}

/// Compares the integer part of the queens spectrum with the prediction.
///
/// Numeric snapping only proposes candidates; exact nullities decide.
pub fn check_conjecture(n: usize, eps: f64) -> Result<ConjectureReport> {
    let q = build_queens(n);
    let snapped = integer_snap(&graph_eigenvalues(&q)?.values, eps)?;
    let numeric: BTreeMap<i64, usize> = snapped.integers.into_iter().collect();
    let predicted = if n >= 4 { predicted_integers(n) } else { BTreeMap::new() };
    let observed: BTreeMap<i64, usize> = numeric
        .keys()
        .chain(predicted.keys())
        .map(|&l| (l, exact_multiplicity(&q, l)))
        .filter(|&(_, m)| m > 0)
        .collect();
    let oracle_disagreements =
        observed.keys().chain(numeric.keys()).filter(|l| observed.get(l) != numeric.get(l)).copied().collect::<Vec<_>>();
    let mut oracle_disagreements = oracle_disagreements;
    oracle_disagreements.sort_unstable();
    oracle_disagreements.dedup();
    let matches: Vec<i64> = predicted.iter().filter(|(l, m)| observed.get(l) == Some(m)).map(|(l, _)| *l).collect();
    let missing: Vec<i64> = predicted.iter().filter(|(l, m)| observed.get(l) != Some(m)).map(|(l, _)| *l).collect();
    let unexpected: Vec<i64> = observed.keys().filter(|l| !predicted.contains_key(l)).copied().collect();
    let verdict = if n < 4 {
        Verdict::OutOfScope
    } else if missing.is_empty() && unexpected.is_empty() {
        Verdict::Holds
    } else {
        Verdict::Violated
    };
    Ok(ConjectureReport { n, verdict, predicted, numeric, observed, matches, missing, unexpected, oracle_disagreements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_clique, build_complete_bipartite, build_triangular};

    #[test]
    fn known_spectra() {
        let k4 = graph_eigenvalues(&build_clique(4)).unwrap();
        for (x, e) in k4.values.iter().zip([3.0, -1.0, -1.0, -1.0]) {
            assert!((x - e).abs() < 1e-10);
        }
        let t4 = graph_eigenvalues(&build_triangular(4)).unwrap();
        for (x, e) in t4.values.iter().zip([6.0, 1.0, 1.0, 1.0, 0.0, 0.0, -2.0, -2.0, -2.0, -3.0]) {
            assert!((x - e).abs() < 1e-9);
        }
        let k22 = graph_eigenvalues(&build_complete_bipartite(2, 2)).unwrap();
        for (x, e) in k22.values.iter().zip([2.0, 0.0, 0.0, -2.0]) {
            assert!((x - e).abs() < 1e-10);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(symmetric_eigenvalues(&[0.0, 1.0, 0.0, 0.0], 2, 1e-12).is_err());
        assert!(symmetric_eigenvalues(&[0.0; 4], 2, 0.0).is_err());
        assert!(symmetric_eigenvalues(&[0.0; 3], 2, 1e-12).is_err());
    }

    #[test]
    fn residual_and_history() {
        let q = build_queens(5);
        let s = symmetric_eigen(&q.adjacency_f64(), 25, 1e-12, true).unwrap();
        assert!(s.residual.unwrap() < 1e-9);
        assert!(s.off_norms.windows(2).all(|w| w[1] <= w[0] + 1e-12));
        assert!(s.values.iter().sum::<f64>().abs() < 25.0 * 1e-10);
    }

    #[test]
    fn snapping() {
        let s = integer_snap(&[2.000_000_000_1, -0.999_999_999_8], 1e-6).unwrap();
        assert_eq!(s.integers, vec![(2, 1), (-1, 1)]);
        assert!(s.residue.is_empty());
        assert!(integer_snap(&[1.0], 0.5).is_err());
        let q4 = integer_snap(&graph_eigenvalues(&build_queens(4)).unwrap().values, 1e-6).unwrap();
        assert!(q4.integers.contains(&(-4, 1)));
    }

    #[test]
    fn predictions() {
        assert_eq!(predicted_integers(4), BTreeMap::from([(-4, 1), (0, 1)]));
        assert_eq!(predicted_integers(5), BTreeMap::from([(-4, 4), (-3, 1), (0, 1), (1, 3)]));
        assert_eq!(predicted_integers(7), BTreeMap::from([(-4, 16), (-3, 1), (-2, 1), (1, 1), (2, 1), (3, 4)]));
    }

    #[test]
    fn small_boards() {
        let r = check_conjecture(5, 1e-6).unwrap();
        assert_eq!(r.verdict, Verdict::Holds, "{r:?}");
        assert_eq!(r.observed.get(&1), Some(&3));
        let r3 = check_conjecture(3, 1e-6).unwrap();
        assert_eq!(r3.verdict, Verdict::OutOfScope);
        assert_eq!(r3.observed.get(&-1), Some(&2));
    }
}
