//! Eigenvectors `u` and `v` for `λ ∈ [-2, ⌊(n-7)/2⌋]`.
//!
//! Both `u` and `v` are built two ways where a line-sum form exists;
//! the two constructions must agree entrywise.

use crate::board::{line, line_run, tri_number_signed, LineKind, TriVector};
use crate::error::{domain, Result};

use super::{check_lambda, first_range, Family, FamilyParam, FamilyVector};

fn c_u(n: i64, l: i64) -> i64 {
    n - 6 - 2 * l
}

/// First part of `u`, cell by cell.
pub fn u_one(n: usize, l: i64) -> TriVector {
    let c = c_u(n as i64, l);
    TriVector::from_fn(n, |i, j| {
        let (i, d) = (i as i64, (i - j) as i64);
        if i == l + 3 {
            c
        } else if i >= l + 3 && d <= l + 2 {
            -1
        } else {
            0
        }
    })
}

/// Second part of `u`, cell by cell.
pub fn u_two(n: usize, l: i64) -> TriVector {
    let ni = n as i64;
    let c = c_u(ni, l);
    TriVector::from_fn(n, |i, j| {
        let (i, d) = (i as i64, (i - j) as i64);
        if d == ni - l - 3 {
            -c
        } else if i >= ni - l - 2 && d <= ni - l - 4 {
            1
        } else {
            0
        }
    })
}

pub fn u_cellwise(n: usize, l: i64) -> TriVector {
    &u_one(n, l) + &u_two(n, l)
}

/// `u` assembled from row and diagonal indicators.
pub fn u_rcd(n: usize, l: i64) -> TriVector {
    use LineKind::{Diag, Row};
    let ni = n as i64;
    let c = c_u(ni, l);
    let one = &(&line_run(Row, n, 1, l + 3) - &line_run(Diag, n, 0, l + 2)) + &line(Row, n, l + 3).scaled(c);
    let two = &(&line_run(Row, n, ni - l - 2, ni) - &line_run(Diag, n, ni - l - 3, ni - 1))
        - &line(Diag, n, ni - l - 3).scaled(c);
    &one + &two
}

pub fn vector_u(n: usize, lambda: i64) -> Result<FamilyVector> {
    check_lambda(n, lambda, first_range(n), Family::U)?;
    Ok(FamilyVector { family: Family::U, n, parameter: FamilyParam::Eigenvalue(lambda), data: u_cellwise(n, lambda) })
}

/// Entry used on the anchor row of `v¹` and `v²`.
fn m_v(n: i64, l: i64) -> i64 {
    n - 7 - 2 * l
}

pub fn v_one(n: usize, l: i64) -> TriVector {
    let ni = n as i64;
    let m = m_v(ni, l);
    TriVector::from_fn(n, |i, j| {
        let (i, j, d) = (i as i64, j as i64, (i - j) as i64);
        if i == l + 3 {
            -tri_number_signed(m)
        } else if i >= l + 4 && j <= l + 3 && d <= ni - l - 4 {
            m
        } else {
            0
        }
    })
}

pub fn v_two(n: usize, l: i64) -> TriVector {
    let ni = n as i64;
    let m = m_v(ni, l);
    TriVector::from_fn(n, |i, j| {
        let (i, j, d) = (i as i64, j as i64, (i - j) as i64);
        if i == l + 3 {
            -tri_number_signed(m)
        } else if i >= l + 4 && j <= ni - l - 3 && d <= l + 2 {
            m
        } else {
            0
        }
    })
}

/// Nested hexagonal layers, `-2` per enclosing layer.
///
/// Invariant under both rotations. Also evaluated outside the `v` range
/// by the `y` cross-check.
pub fn v_three(n: usize, l: i64) -> TriVector {
    let ni = n as i64;
    let layers = (l + 3).min(ni - 2 * l - 7);
    TriVector::from_fn(n, |i, j| {
        let (i, j, d) = (i as i64, j as i64, (i - j) as i64);
        (1..=layers)
            .filter(|&k| {
                (l + 4 + k..=ni - k).contains(&i)
                    && (k + 1..=ni - l - 3 - k).contains(&j)
                    && (k..=ni - l - 4 - k).contains(&d)
            })
            .map(|_| -2)
            .sum()
    })
}

pub fn v_cellwise(n: usize, l: i64) -> TriVector {
    &(&v_one(n, l) + &v_two(n, l)) + &v_three(n, l)
}

pub fn vector_v(n: usize, lambda: i64) -> Result<FamilyVector> {
    check_lambda(n, lambda, first_range(n), Family::V)?;
    if n % 2 == 1 && 2 * lambda == n as i64 - 7 {
        return domain(format!("v is undefined at n = {n}, λ = (n-7)/2 = {lambda}: every part vanishes"));
    }
    Ok(FamilyVector { family: Family::V, n, parameter: FamilyParam::Eigenvalue(lambda), data: v_cellwise(n, lambda) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::is_eigenvector;
    use crate::graph::build_triangular;

    #[test]
    fn u_two_constructions_agree() {
        for n in 4..=15 {
            for l in first_range(n) {
                assert_eq!(u_cellwise(n, l), u_rcd(n, l), "n = {n}, λ = {l}");
            }
        }
    }

    #[test]
    fn u_and_v_small() {
        let g = build_triangular(10);
        assert!(is_eigenvector(&g, &vector_v(10, 1).unwrap().data, 1));
        assert!(is_eigenvector(&g, &vector_u(10, 1).unwrap().data, 1));
        assert!(is_eigenvector(&build_triangular(9), &vector_u(9, 1).unwrap().data, 1));
        assert!(vector_v(9, 1).is_err());
        assert!(vector_v(7, 0).is_err());
        assert!(vector_u(7, 1).is_err());
        assert!(vector_u(7, -3).is_err());
    }

    #[test]
    fn v_undefined_is_zero() {
        for n in (5..=15).step_by(2) {
            let l = (n as i64 - 7) / 2;
            if l >= -2 {
                assert!(v_cellwise(n, l).is_zero(), "n = {n}");
            }
        }
    }

    #[test]
    fn hexagon_symmetry() {
        for n in 6..=14 {
            for l in first_range(n) {
                let h = v_three(n, l);
                assert_eq!(h.rotate_pos(), h);
                assert_eq!(h.rotate_neg(), h);
            }
        }
    }
}
