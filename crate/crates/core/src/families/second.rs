//! Eigenvectors `x` and `y` for `λ ∈ [⌈(n-4)/2⌉, n-3]`.
//!
//! Region boundaries that needed reconciliation are expressed through
//! small parameter records ([`XOneReading`], [`XRcdReading`],
//! [`LayerBounds`]) so the harness in [`super::reconcile`] can perturb
//! them. The shipped constructors use the `RECONCILED` constants.

use serde::{Deserialize, Serialize};

use crate::board::{line, line_run, tri_number_signed, LineKind, TriVector};
use crate::error::{domain, Result};

use super::first::v_three;
use super::{check_lambda, second_range, Family, FamilyParam, FamilyVector};

/// `n·n_coef + λ·lambda_coef + c + k·k_coef`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Affine {
    pub n_coef: i64,
    pub lambda_coef: i64,
    pub c: i64,
    pub k_coef: i64,
}

impl Affine {
    pub const fn new(n_coef: i64, lambda_coef: i64, c: i64, k_coef: i64) -> Self {
        Affine { n_coef, lambda_coef, c, k_coef }
    }

    pub fn eval(&self, n: i64, l: i64, k: i64) -> i64 {
        self.n_coef * n + self.lambda_coef * l + self.c + self.k_coef * k
    }
}

impl std::fmt::Display for Affine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut s = String::new();
        for (coef, sym) in [(self.n_coef, "n"), (self.lambda_coef, "λ"), (self.k_coef, "k")] {
            match coef {
                0 => {}
                1 => s.push_str(&format!("+{sym}")),
                -1 => s.push_str(&format!("-{sym}")),
                c => s.push_str(&format!("{c:+}{sym}")),
            }
        }
        if self.c != 0 || s.is_empty() {
            s.push_str(&format!("{:+}", self.c));
        }
        f.write_str(s.trim_start_matches('+'))
    }
}

/// Entry on the heavy diagonal of `x¹` and (negated) the heavy column of `x²`.
fn w_x(n: i64, l: i64) -> i64 {
    2 * l - n + 6
}

/// Boundaries of the cellwise `x¹`.
///
/// Heavy diagonal offset is `diag_sign·(1-(n-λ-2)) + diag_shift`; unit
/// cells lie strictly below it with `j <= col_bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct XOneReading {
    pub diag_sign: i64,
    pub diag_shift: i64,
    pub col_bound: Affine,
}

impl XOneReading {
    /// Heavy diagonal `i-j = 1-(n-λ-2)`, columns up to `n-λ+1`.
    pub const LITERAL: XOneReading =
        XOneReading { diag_sign: 1, diag_shift: 0, col_bound: Affine::new(1, -1, 1, 0) };
    /// Heavy diagonal `i-j = n-λ-3`, columns up to `λ+3`.
    pub const RECONCILED: XOneReading =
        XOneReading { diag_sign: -1, diag_shift: 0, col_bound: Affine::new(0, 1, 3, 0) };
}

pub fn x_one_with(n: usize, l: i64, r: &XOneReading) -> TriVector {
    let ni = n as i64;
    let target = r.diag_sign * (1 - (ni - l - 2)) + r.diag_shift;
    let col = r.col_bound.eval(ni, l, 0);
    TriVector::from_fn(n, |i, j| {
        let d = (i - j) as i64;
        if d == target {
            w_x(ni, l)
        } else if d < target && j as i64 <= col {
            1
        } else {
            0
        }
    })
}

pub fn x_two(n: usize, l: i64) -> TriVector {
    let ni = n as i64;
    TriVector::from_fn(n, |i, j| {
        let (j, d) = (j as i64, (i - j) as i64);
        if j == ni - l - 2 {
            -w_x(ni, l)
        } else if j < ni - l - 2 && d <= l + 2 {
            -1
        } else {
            0
        }
    })
}

/// Shifts applied to the line-sum form of `x¹`:
/// `ΣD[0..=n-λ-4+diag_hi] - ΣC[λ+3+col_lo..=n] + w·D[n-λ-3+diag_single]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct XRcdReading {
    pub diag_hi: i64,
    pub col_lo: i64,
    pub diag_single: i64,
}

impl XRcdReading {
    pub const LITERAL: XRcdReading = XRcdReading { diag_hi: 0, col_lo: 0, diag_single: 0 };
    /// Column run starts at `λ+4`.
    pub const RECONCILED: XRcdReading = XRcdReading { diag_hi: 0, col_lo: 1, diag_single: 0 };
}

pub fn x_one_rcd_with(n: usize, l: i64, r: &XRcdReading) -> TriVector {
    use LineKind::{Col, Diag};
    let ni = n as i64;
    let runs = &line_run(Diag, n, 0, ni - l - 4 + r.diag_hi) - &line_run(Col, n, l + 3 + r.col_lo, ni);
    &runs + &line(Diag, n, ni - l - 3 + r.diag_single).scaled(w_x(ni, l))
}

pub fn x_two_rcd(n: usize, l: i64) -> TriVector {
    use LineKind::{Col, Diag};
    let ni = n as i64;
    let runs = &line_run(Diag, n, l + 3, ni - 1) - &line_run(Col, n, 1, ni - l - 3);
    &runs - &line(Col, n, ni - l - 2).scaled(w_x(ni, l))
}

pub fn x_cellwise(n: usize, l: i64) -> TriVector {
    &x_one_with(n, l, &XOneReading::RECONCILED) + &x_two(n, l)
}

pub fn x_rcd(n: usize, l: i64) -> TriVector {
    &x_one_rcd_with(n, l, &XRcdReading::RECONCILED) + &x_two_rcd(n, l)
}

pub fn vector_x(n: usize, lambda: i64) -> Result<FamilyVector> {
    check_lambda(n, lambda, second_range(n), Family::X)?;
    Ok(FamilyVector { family: Family::X, n, parameter: FamilyParam::Eigenvalue(lambda), data: x_cellwise(n, lambda) })
}

pub fn y_one(n: usize, l: i64) -> TriVector {
    let ni = n as i64;
    TriVector::from_fn(n, |i, j| {
        let (i, j, d) = (i as i64, j as i64, (i - j) as i64);
        if j <= ni - l - 3 || j >= l + 3 {
            0
        } else if (-ni + 2 * l + 5..=l + 2).contains(&j)
            || ((ni - l - 2..=-ni + 2 * l + 4).contains(&j) && (i >= l + 3 || d <= ni - l - 3))
        {
            ni - 2 * l - 6
        } else if i <= l + 2 && j >= ni - l - 2 && d >= ni - l - 2 {
            2 * (ni - 2 * l - 5)
        } else {
            0
        }
    })
}

/// Sum of four pieces; overlapping cells accumulate.
pub fn y_two(n: usize, l: i64) -> TriVector {
    let ni = n as i64;
    let w = -ni + 2 * l + 4;
    TriVector::from_fn(n, |i, j| {
        let (i, j, d) = (i as i64, j as i64, (i - j) as i64);
        let mut e = 0;
        if j == ni - l - 2 {
            e += 2 * tri_number_signed(ni - 2 * l - 6);
        }
        if i >= ni - l - 2 && j <= ni - l - 3 && d <= ni - l - 3 {
            e += w;
        }
        if i >= l + 3 && j <= ni - l - 3 && d <= l + 2 {
            e += w;
        }
        if i >= l + 3 && (ni - l - 2..=l + 2).contains(&j) && d <= ni - l - 3 {
            e += w;
        }
        e
    })
}

/// Bounds of layer `k` of `y³`: rows, positions and diagonal offsets, each `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LayerBounds {
    pub bounds: [Affine; 6],
}

impl LayerBounds {
    pub const NAMES: [&'static str; 6] = ["row_lo", "row_hi", "col_lo", "col_hi", "diag_lo", "diag_hi"];

    /// Diagonal offsets up to `n-k-1`.
    pub const LITERAL: LayerBounds = LayerBounds {
        bounds: [
            Affine::new(1, -1, -2, 1),
            Affine::new(1, 0, 0, -1),
            Affine::new(0, 0, 0, 1),
            Affine::new(0, 1, 2, -1),
            Affine::new(0, 0, 0, 1),
            Affine::new(1, 0, -1, -1),
        ],
    };
    /// Diagonal offsets up to `λ+2-k`.
    pub const RECONCILED: LayerBounds = LayerBounds {
        bounds: [
            Affine::new(1, -1, -2, 1),
            Affine::new(1, 0, 0, -1),
            Affine::new(0, 0, 0, 1),
            Affine::new(0, 1, 2, -1),
            Affine::new(0, 0, 0, 1),
            Affine::new(0, 1, 2, -1),
        ],
    };
}

pub fn y_three_with(n: usize, l: i64, lb: &LayerBounds) -> TriVector {
    let ni = n as i64;
    let layers = (ni - l - 2).min(2 * l - ni + 4);
    TriVector::from_fn(n, |i, j| {
        let coords = [i as i64, j as i64, (i - j) as i64];
        (1..=layers)
            .filter(|&k| {
                (0..3).all(|a| {
                    let lo = lb.bounds[2 * a].eval(ni, l, k);
                    let hi = lb.bounds[2 * a + 1].eval(ni, l, k);
                    (lo..=hi).contains(&coords[a])
                })
            })
            .map(|_| -2)
            .sum()
    })
}

pub fn y_three(n: usize, l: i64) -> TriVector {
    y_three_with(n, l, &LayerBounds::RECONCILED)
}

/// `y³` read off the hexagon of side `n+1` at `n-λ-5` with its first column dropped.
pub fn y_three_from_v(n: usize, l: i64) -> TriVector {
    let h = v_three(n + 1, n as i64 - l - 5);
    TriVector::from_fn(n, |i, j| h.get(i + 1, j + 1))
}

pub fn y_cellwise(n: usize, l: i64) -> TriVector {
    &(&y_one(n, l) + &y_two(n, l)) + &y_three(n, l)
}

pub fn vector_y(n: usize, lambda: i64) -> Result<FamilyVector> {
    check_lambda(n, lambda, second_range(n), Family::Y)?;
    if n.is_multiple_of(2) && 2 * lambda == n as i64 - 4 {
        return domain(format!("y is undefined at n = {n}, λ = (n-4)/2 = {lambda}: every part vanishes"));
    }
    Ok(FamilyVector { family: Family::Y, n, parameter: FamilyParam::Eigenvalue(lambda), data: y_cellwise(n, lambda) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::is_eigenvector;
    use crate::graph::build_triangular;

    #[test]
    fn x_two_constructions_agree() {
        for n in 4..=15 {
            for l in second_range(n) {
                assert_eq!(x_cellwise(n, l), x_rcd(n, l), "n = {n}, λ = {l}");
                assert_eq!(x_two(n, l), x_two_rcd(n, l));
            }
        }
    }

    #[test]
    fn y_layers_match_hexagon() {
        for n in 4..=15 {
            for l in second_range(n) {
                assert_eq!(y_three(n, l), y_three_from_v(n, l), "n = {n}, λ = {l}");
            }
        }
    }

    #[test]
    fn y_undefined_is_zero() {
        for n in (4..=14).step_by(2) {
            assert!(y_cellwise(n, (n as i64 - 4) / 2).is_zero(), "n = {n}");
        }
    }

    #[test]
    fn top_of_range() {
        let g = build_triangular(9);
        assert!(is_eigenvector(&g, &vector_x(9, 6).unwrap().data, 6));
        let x = vector_x(9, 4).unwrap().data;
        assert!(is_eigenvector(&g, &x.rotate_pos(), 4));
        assert!(is_eigenvector(&g, &x.rotate_neg(), 4));
        assert!(vector_y(8, 2).is_err());
        assert!(vector_x(9, 7).is_err());
    }

    #[test]
    fn affine_display() {
        assert_eq!(Affine::new(0, 1, 2, -1).to_string(), "λ-k+2");
        assert_eq!(Affine::new(1, -1, -2, 1).to_string(), "n-λ+k-2");
        assert_eq!(Affine::new(0, 0, 0, 0).to_string(), "0");
    }
}
