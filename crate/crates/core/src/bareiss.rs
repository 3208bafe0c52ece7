//! Fraction-free Gaussian elimination over arbitrary-precision integers.
//!
//! Every intermediate entry is a minor of the input, so all divisions
//! are exact and the rank is the rank over the rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::LabeledGraph;

/// Rank over the rationals of a row-major integer matrix.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    rank_in_place(&mut m)
}

/// Rank of `m`, destroying it.
pub fn rank_in_place(m: &mut [Vec<BigInt>]) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for k in c + 1..ncols {
                let mut x = std::mem::take(&mut row[k]);
                x *= &pivot;
                if !factor.is_zero() && !pivot_row[k].is_zero() {
                    x -= &factor * &pivot_row[k];
                }
                if !x.is_zero() {
                    x /= &prev;
                }
                row[k] = x;
            }
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Nullity of `A - lambda I`, i.e. the multiplicity of `lambda` as an eigenvalue.
pub fn exact_multiplicity(g: &LabeledGraph, lambda: i64) -> usize {
    let n = g.order();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    let a = i64::from(g.has_edge(u, v));
                    BigInt::from(if u == v { a - lambda } else { a })
                })
                .collect()
        })
        .collect();
    n - rank_in_place(&mut m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_clique, build_triangular};

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![0, 1, 2], vec![1, 0, 3], vec![1, 1, 5]]), 2);
        assert_eq!(rank(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]), 3);
        assert_eq!(rank(&[vec![1, 2, 3]]), 1);
    }

    #[test]
    fn clique_multiplicities() {
        let k4 = build_clique(4);
        assert_eq!(exact_multiplicity(&k4, 3), 1);
        assert_eq!(exact_multiplicity(&k4, -1), 3);
        assert_eq!(exact_multiplicity(&k4, 0), 0);
    }

    #[test]
    fn triangular_extremes() {
        assert_eq!(exact_multiplicity(&build_triangular(7), -3), 10);
        assert_eq!(exact_multiplicity(&build_triangular(6), 10), 1);
    }
}
