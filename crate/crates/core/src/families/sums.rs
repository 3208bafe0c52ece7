//! Closed forms for the row, column and diagonal sums of `u`, `v`, `x`, `y`.
//!
//! Diagonal entries are indexed by offset `k = i - j`.

use crate::board::{tri_number_signed, SumVectors};

fn build(n: usize, row: impl Fn(i64) -> i64, col: impl Fn(i64) -> i64, diag: impl Fn(i64) -> i64) -> SumVectors {
    let ni = n as i64;
    SumVectors {
        by_row: (1..=ni).map(row).collect(),
        by_col: (1..=ni).map(col).collect(),
        by_diag: (0..ni).map(diag).collect(),
    }
}

pub fn sums_u(n: usize, l: i64) -> SumVectors {
    let ni = n as i64;
    let c = ni - 6 - 2 * l;
    build(
        n,
        |i| {
            if i <= l + 2 || i >= ni - l - 2 {
                0
            } else if i == l + 3 {
                (l + 3) * c
            } else {
                -(l + 3)
            }
        },
        |_| 0,
        |k| {
            if k <= l + 2 || k >= ni - l - 2 {
                0
            } else if k == ni - l - 3 {
                -(l + 3) * c
            } else {
                l + 3
            }
        },
    )
}

pub fn sums_v(n: usize, l: i64) -> SumVectors {
    let ni = n as i64;
    let m = ni - 7 - 2 * l;
    build(
        n,
        |i| {
            if i <= l + 2 || i >= ni - l - 2 {
                0
            } else if i == l + 3 {
                -2 * tri_number_signed(m) * (l + 3)
            } else {
                2 * (l + 3) * (ni - 3 - l - i)
            }
        },
        |j| if j <= l + 3 || j >= ni - l - 2 { 0 } else { (l + 3) * (2 * j - ni - 1) },
        |k| if k <= l + 2 || k >= ni - l - 3 { 0 } else { (l + 3) * (2 * k + 1 - ni) },
    )
}

/// Rows vanish; columns and diagonals carry one heavy line plus a unit band.
pub fn sums_x(n: usize, l: i64) -> SumVectors {
    let ni = n as i64;
    let h = (2 * l - ni + 5) * (l + 3);
    build(
        n,
        |_| 0,
        |j| {
            if j == ni - l - 2 {
                -h
            } else if (ni - l - 1..=l + 3).contains(&j) {
                l + 3
            } else {
                0
            }
        },
        |k| {
            if k == ni - l - 3 {
                h
            } else if (ni - l - 2..=l + 2).contains(&k) {
                -(l + 3)
            } else {
                0
            }
        },
    )
}

pub fn sums_y(n: usize, l: i64) -> SumVectors {
    let ni = n as i64;
    let band = ni - l - 2..=l + 2;
    build(
        n,
        |i| if band.contains(&i) { (l + 3) * (ni - 2 * i) } else { 0 },
        |j| {
            if j == ni - l - 2 {
                (l + 3) * (ni - 2 * l - 5) * (ni - 2 * l - 4)
            } else if (ni - l - 1..=l + 2).contains(&j) {
                -2 * (l + 3) * (l + 3 - j)
            } else {
                0
            }
        },
        |k| if band.contains(&k) { (l + 3) * (2 * k - ni) } else { 0 },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{first_range, second_range, vector_u, vector_v, vector_x, vector_y};

    #[test]
    fn quoted_entries() {
        assert!(sums_u(10, -2).by_col.iter().all(|&s| s == 0));
        assert_eq!(sums_u(10, 0).row(3), 12);
        assert_eq!(vector_u(10, 0).unwrap().data.sum_vectors().row(3), 12);
    }

    #[test]
    fn closed_forms_match() {
        for n in 4..=12 {
            for l in first_range(n) {
                assert_eq!(vector_u(n, l).unwrap().data.sum_vectors(), sums_u(n, l), "u n={n} λ={l}");
                if let Ok(v) = vector_v(n, l) {
                    assert_eq!(v.data.sum_vectors(), sums_v(n, l), "v n={n} λ={l}");
                }
            }
            for l in second_range(n) {
                assert_eq!(vector_x(n, l).unwrap().data.sum_vectors(), sums_x(n, l), "x n={n} λ={l}");
                if let Ok(y) = vector_y(n, l) {
                    assert_eq!(y.data.sum_vectors(), sums_y(n, l), "y n={n} λ={l}");
                }
            }
        }
    }
}
