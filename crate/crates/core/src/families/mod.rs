//! Closed-form eigenvectors of the triangular-board graph.
//!
//! Five families cover the whole spectrum of side `n >= 4`:
//!
//! | family | eigenvalue | parameter |
//! |--------|------------|-----------|
//! | `T` | `-3` | stencil placement `(x, y)` |
//! | `U`, `V` | `λ ∈ [-2, ⌊(n-7)/2⌋]` | `λ` |
//! | `X`, `Y` | `λ ∈ [⌈(n-4)/2⌉, n-3]` | `λ` |
//!
//! Together with the all-ones vector and the rotations `u⁻`, `x⁺` they
//! form an eigenbasis. `V` is undefined at `λ = (n-7)/2` and `Y` at
//! `λ = (n-4)/2`; there the corresponding eigenvalue has multiplicity 2.

pub mod first;
pub mod reconcile;
pub mod second;
pub mod sums;

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::bareiss;
use crate::board::{tri_number, TriCoord, TriVector};
use crate::error::{domain, Error, Result};
use crate::graph::LabeledGraph;

pub use first::{vector_u, vector_v};
pub use second::{vector_x, vector_y};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    T,
    U,
    V,
    X,
    Y,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::T, Family::U, Family::V, Family::X, Family::Y];

    pub fn name(self) -> &'static str {
        match self {
            Family::T => "t",
            Family::U => "u",
            Family::V => "v",
            Family::X => "x",
            Family::Y => "y",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name().eq_ignore_ascii_case(s))
    }

    /// Eigenvalues the family is indexed by on side `n`; empty for `T`.
    pub fn lambda_range(self, n: usize) -> RangeInclusive<i64> {
        match self {
            Family::T => RangeInclusive::new(1, 0),
            Family::U | Family::V => first_range(n),
            Family::X | Family::Y => second_range(n),
        }
    }

    /// Builds the family vector for eigenvalue `lambda`; `T` is rejected.
    pub fn build(self, n: usize, lambda: i64) -> Result<FamilyVector> {
        match self {
            Family::T => domain("the t family is indexed by a placement, not an eigenvalue"),
            Family::U => vector_u(n, lambda),
            Family::V => vector_v(n, lambda),
            Family::X => vector_x(n, lambda),
            Family::Y => vector_y(n, lambda),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyParam {
    Placement { x: usize, y: usize },
    Eigenvalue(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyVector {
    pub family: Family,
    pub n: usize,
    pub parameter: FamilyParam,
    pub data: TriVector,
}

impl FamilyVector {
    pub fn eigenvalue(&self) -> i64 {
        match self.parameter {
            FamilyParam::Placement { .. } => -3,
            FamilyParam::Eigenvalue(l) => l,
        }
    }
}

/// `[-2, ⌊(n-7)/2⌋]`.
pub fn first_range(n: usize) -> RangeInclusive<i64> {
    -2..=(n as i64 - 7).div_euclid(2)
}

/// `[⌈(n-4)/2⌉, n-3]`.
pub fn second_range(n: usize) -> RangeInclusive<i64> {
    (n as i64 - 3).div_euclid(2)..=n as i64 - 3
}

pub(crate) fn check_side(n: usize) -> Result<()> {
    if n < 4 {
        return domain(format!("eigenvector families need n >= 4, got {n}"));
    }
    Ok(())
}

pub(crate) fn check_lambda(n: usize, lambda: i64, range: RangeInclusive<i64>, family: Family) -> Result<()> {
    check_side(n)?;
    if !range.contains(&lambda) {
        return domain(format!(
            "{family} needs λ in [{}, {}] for n = {n}, got {lambda}",
            range.start(),
            range.end()
        ));
    }
    Ok(())
}

/// Ten-cell stencil on the side-4 board, eigenvalue `-3`.
pub const STENCIL: [i64; 10] = [0, 1, -1, -1, 0, 1, 0, 1, -1, 0];

/// The stencil with its apex on cell `(x, y)`.
pub fn vector_t(n: usize, x: usize, y: usize) -> Result<FamilyVector> {
    check_side(n)?;
    if x < 1 || x > n - 3 || y < 1 || y > x {
        return domain(format!("placement ({x},{y}) needs 1 <= y <= x <= {}", n - 3));
    }
    let data = TriVector::from_fn(n, |i, j| {
        let (a, b) = (i as i64 - x as i64, j as i64 - y as i64);
        if (0..4).contains(&a) && (0..=a).contains(&b) {
            STENCIL[tri_number(a as usize) + b as usize]
        } else {
            0
        }
    });
    Ok(FamilyVector { family: Family::T, n, parameter: FamilyParam::Placement { x, y }, data })
}

/// All `T(n-3)` stencil placements, a basis of the `-3` eigenspace.
pub fn basis_least(n: usize) -> Result<Vec<FamilyVector>> {
    check_side(n)?;
    (1..=n - 3).flat_map(|x| (1..=x).map(move |y| (x, y))).map(|(x, y)| vector_t(n, x, y)).collect()
}

/// Cell where `A v` and `λ v` disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub label: usize,
    pub i: usize,
    pub j: usize,
    /// `(A v)` at the cell.
    pub lhs: i64,
    /// `λ v` at the cell.
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenCheck {
    pub holds: bool,
    pub residuals: Vec<Residual>,
}

/// Exact test of `A v = λ v` on a triangular-board graph.
pub fn verify_eigenvector(g: &LabeledGraph, v: &TriVector, lambda: i64) -> Result<EigenCheck> {
    if g.order() != v.len() {
        return Err(Error::Dimension { expected: g.order(), found: v.len() });
    }
    let av = g.apply(&v.entries);
    let residuals: Vec<Residual> = av
        .iter()
        .zip(&v.entries)
        .enumerate()
        .filter(|(_, (&a, &x))| a != lambda * x)
        .map(|(k, (&a, &x))| {
            let c = TriCoord::from_label(k + 1, v.n).expect("label in range");
            Residual { label: k + 1, i: c.i, j: c.j, lhs: a, rhs: lambda * x }
        })
        .collect();
    Ok(EigenCheck { holds: residuals.is_empty(), residuals })
}

/// Cheap pass/fail form of [`verify_eigenvector`].
pub fn is_eigenvector(g: &LabeledGraph, v: &TriVector, lambda: i64) -> bool {
    g.order() == v.len()
        && (0..g.order()).all(|u| g.neighbors(u).map(|w| v.entries[w]).sum::<i64>() == lambda * v.entries[u])
}

/// Rank over the rationals of a list of equal-length vectors.
pub fn check_independent(vs: &[TriVector]) -> Result<usize> {
    let Some(first) = vs.first() else {
        return Ok(0);
    };
    if let Some(bad) = vs.iter().find(|v| v.len() != first.len()) {
        return Err(Error::Dimension { expected: first.len(), found: bad.len() });
    }
    let rows: Vec<Vec<i64>> = vs.iter().map(|v| v.entries.clone()).collect();
    Ok(bareiss::rank(&rows))
}

/// The eigenbasis assembled from all families, with each vector's eigenvalue.
pub fn full_basis(n: usize) -> Result<Vec<(i64, TriVector)>> {
    check_side(n)?;
    let mut out = vec![(2 * n as i64 - 2, TriVector::constant(n, 1))];
    out.extend(basis_least(n)?.into_iter().map(|t| (-3, t.data)));
    for l in first_range(n) {
        let u = vector_u(n, l)?.data;
        out.push((l, u.rotate_neg()));
        out.push((l, u));
        if let Ok(v) = vector_v(n, l) {
            out.push((l, v.data));
        }
    }
    for l in second_range(n) {
        let x = vector_x(n, l)?.data;
        out.push((l, x.rotate_pos()));
        out.push((l, x));
        if let Ok(y) = vector_y(n, l) {
            out.push((l, y.data));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_triangular;

    #[test]
    fn stencil_placements() {
        assert_eq!(vector_t(4, 1, 1).unwrap().data.entries, STENCIL.to_vec());
        let t = vector_t(6, 2, 1).unwrap().data;
        let expected = [(2, 1, 0), (3, 1, 1), (3, 2, -1), (4, 1, -1), (4, 2, 0), (4, 3, 1), (5, 1, 0), (5, 2, 1), (5, 3, -1), (5, 4, 0)];
        for (i, j, e) in expected {
            assert_eq!(t.get(i, j), e);
        }
        assert_eq!(t.entries.iter().filter(|&&e| e != 0).count(), 6);
        assert!(vector_t(6, 4, 1).is_err());
        assert!(vector_t(6, 2, 3).is_err());
        assert!(vector_t(3, 1, 1).is_err());
    }

    #[test]
    fn stencil_lines_vanish() {
        let s = vector_t(7, 3, 2).unwrap().data.sum_vectors();
        assert!(s.by_row.iter().chain(&s.by_col).chain(&s.by_diag).all(|&x| x == 0));
    }

    #[test]
    fn least_basis() {
        assert_eq!(basis_least(4).unwrap().len(), 1);
        for (n, count) in [(6, 6), (7, 10)] {
            let b = basis_least(n).unwrap();
            let g = build_triangular(n);
            assert_eq!(b.len(), count);
            assert!(b.iter().all(|t| is_eigenvector(&g, &t.data, -3)));
            let data: Vec<TriVector> = b.into_iter().map(|t| t.data).collect();
            assert_eq!(check_independent(&data).unwrap(), count);
        }
        assert!(basis_least(3).is_err());
    }

    #[test]
    fn eigen_checks() {
        let g = build_triangular(4);
        let ones = TriVector::constant(4, 1);
        assert!(verify_eigenvector(&g, &ones, 6).unwrap().holds);
        assert!(verify_eigenvector(&g, &vector_t(4, 1, 1).unwrap().data, -3).unwrap().holds);
        let bad = verify_eigenvector(&g, &ones, 5).unwrap();
        assert!(!bad.holds);
        assert_eq!(bad.residuals.len(), 10);
        assert_eq!((bad.residuals[0].lhs, bad.residuals[0].rhs), (6, 5));
        assert!(verify_eigenvector(&g, &TriVector::zeros(3), 0).is_err());
    }

    #[test]
    fn independence_edges() {
        assert_eq!(check_independent(&[]).unwrap(), 0);
        assert!(check_independent(&[TriVector::zeros(3), TriVector::zeros(4)]).is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(first_range(4), -2..=-2);
        assert_eq!(first_range(10), -2..=1);
        assert_eq!(second_range(9), 3..=6);
        assert_eq!(second_range(10), 3..=7);
    }

    #[test]
    fn eigenbasis_is_complete() {
        for n in 4..=9 {
            let g = build_triangular(n);
            let basis = full_basis(n).unwrap();
            assert_eq!(basis.len(), tri_number(n), "n = {n}");
            assert!(basis.iter().all(|(l, v)| is_eigenvector(&g, v, *l)), "n = {n}");
            let data: Vec<TriVector> = basis.into_iter().map(|(_, v)| v).collect();
            assert_eq!(check_independent(&data).unwrap(), tri_number(n), "n = {n}");
        }
    }
}
