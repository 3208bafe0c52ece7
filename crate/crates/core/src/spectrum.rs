//! Exact spectra as multisets of integers and quadratic surds.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::board::tri_number;
use crate::error::{domain, Result};
use crate::quadratic::{round12, ExactEigen};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub value: ExactEigen,
    pub mult: usize,
}

/// Eigenvalue multiset, distinct values sorted non-increasingly.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    pub fn empty() -> Self {
        Spectrum::default()
    }

    /// Merges repeated values and drops zero multiplicities.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (ExactEigen, usize)>) -> Self {
        let mut acc: BTreeMap<ExactEigen, usize> = BTreeMap::new();
        for (v, m) in pairs {
            if m > 0 {
                *acc.entry(v).or_insert(0) += m;
            }
        }
        let entries = acc.into_iter().rev().map(|(value, mult)| SpectrumEntry { value, mult }).collect();
        Spectrum { entries }
    }

    pub fn from_ints(pairs: impl IntoIterator<Item = (i64, usize)>) -> Self {
        Spectrum::from_pairs(pairs.into_iter().map(|(q, m)| (ExactEigen::Int(q), m)))
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.mult).sum()
    }

    pub fn multiplicity(&self, value: ExactEigen) -> usize {
        self.entries.iter().find(|e| e.value == value).map_or(0, |e| e.mult)
    }

    pub fn union(&self, other: &Spectrum) -> Spectrum {
        Spectrum::from_pairs(self.pairs().chain(other.pairs()))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (ExactEigen, usize)> + '_ {
        self.entries.iter().map(|e| (e.value, e.mult))
    }

    /// All eigenvalues with repetition, non-increasing.
    pub fn expand(&self) -> Vec<ExactEigen> {
        self.entries.iter().flat_map(|e| std::iter::repeat_n(e.value, e.mult)).collect()
    }

    /// `k`-th largest eigenvalue, 1-based.
    pub fn kth(&self, k: usize) -> Result<ExactEigen> {
        let mut seen = 0;
        for e in &self.entries {
            seen += e.mult;
            if k >= 1 && k <= seen {
                return Ok(e.value);
            }
        }
        domain(format!("index {k} outside 1..={}", self.total()))
    }

    /// Sum of `λ^p · mult` over integer eigenvalues, `None` if any surd appears.
    pub fn integer_moment(&self, p: u32) -> Option<i64> {
        self.entries.iter().map(|e| e.value.as_int().map(|q| q.pow(p) * e.mult as i64)).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spectrum serializes")
    }

    /// CSV with exact text, a 12-digit decimal flagged `approx` for surds, and multiplicity.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("value,decimal,mult,kind\n");
        for e in &self.entries {
            let kind = if e.value.as_int().is_some() { "exact" } else { "approx" };
            let _ = writeln!(out, "{},{:.12},{},{kind}", e.value, round12(e.value.to_f64()), e.mult);
        }
        out
    }
}

impl std::fmt::Display for Spectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| if e.mult == 1 { e.value.to_string() } else { format!("{}^[{}]", e.value, e.mult) })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn spectrum_union(a: &Spectrum, b: &Spectrum) -> Spectrum {
    a.union(b)
}

/// `K_k`: `{k-1, (-1)^[k-1]}`.
pub fn spectrum_clique(k: usize) -> Spectrum {
    Spectrum::from_ints([(k as i64 - 1, 1), (-1, k.saturating_sub(1))])
}

/// `K_{a,b}`: `{√(ab), 0^[a+b-2], -√(ab)}`, or all zeros when a side is empty.
pub fn spectrum_bipartite(a: usize, b: usize) -> Spectrum {
    if a == 0 || b == 0 {
        return Spectrum::from_ints([(0, a + b)]);
    }
    let r = ExactEigen::sqrt((a * b) as u64);
    Spectrum::from_pairs([(r, 1), (ExactEigen::Int(0), a + b - 2), (r.neg(), 1)])
}

/// Closed-form spectrum of the triangular-board graph of side `n`.
pub fn spectrum_triangular(n: usize) -> Spectrum {
    match n {
        0 => return Spectrum::empty(),
        1 | 2 => return spectrum_clique(tri_number(n)),
        3 => return Spectrum::from_ints([(4, 1), (0, 3), (-2, 2)]),
        _ => {}
    }
    let ni = n as i64;
    let mut pairs = vec![(2 * ni - 2, 1), (-3, tri_number(n - 3))];
    // upper run: ceil((n-4)/2) ..= n-3, the value (n-4)/2 is doubled rather than tripled
    for l in (ni - 3).div_euclid(2)..=ni - 3 {
        let m = if ni % 2 == 0 && 2 * l == ni - 4 { 2 } else { 3 };
        pairs.push((l, m));
    }
    // lower run: -2 ..= floor((n-7)/2), the value (n-7)/2 is doubled
    for l in -2..=(ni - 7).div_euclid(2) {
        let m = if ni % 2 == 1 && 2 * l == ni - 7 { 2 } else { 3 };
        pairs.push((l, m));
    }
    Spectrum::from_ints(pairs)
}

/// Blue and red triangular parts of the queens decomposition.
pub fn spectrum_g12(n: usize) -> Spectrum {
    spectrum_triangular(n).union(&spectrum_triangular(n.saturating_sub(1)))
}

/// Anti-diagonal cliques `K_1, ..., K_n, ..., K_1`.
pub fn spectrum_g13(n: usize) -> Spectrum {
    let mut s = spectrum_clique(n);
    for k in 1..n {
        s = s.union(&spectrum_clique(k)).union(&spectrum_clique(k));
    }
    s
}

/// Either bipartite part: `K_{i,n-i}` for `i = 1..=n`.
pub fn spectrum_g23x(n: usize) -> Spectrum {
    (1..=n).fold(Spectrum::empty(), |s, i| s.union(&spectrum_bipartite(i, n - i)))
}

pub fn kth_eigenvalue(s: &Spectrum, k: usize) -> Result<ExactEigen> {
    s.kth(k)
}
