//! Weyl-inequality bounds on the eigenvalues of the queens graph.
//!
//! With `N = n²` and eigenvalues indexed non-increasingly,
//!
//! ```text
//! λ_{i+j-1}(A+B) <= λ_i(A) + λ_j(B)      when i + j <= N + 1
//! λ_{r+s-N}(A+B) >= λ_r(A) + λ_s(B)      when r + s >= N + 1
//! ```
//!
//! The queens adjacency splits as `triangles + (anti + (rows + cols))`,
//! so a chain of three inequalities bounds `λ_k(Q)` by four component
//! eigenvalues. Because the four-term sum is separable, the optimum over
//! all chains is found level by level: best bound for every index of
//! `rows + cols`, then of `anti + rows + cols`, then of `Q`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::quadratic::{ExactEigen, SurdSum};
use crate::spectrum::{spectrum_g12, spectrum_g13, spectrum_g23x, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Upper,
    Lower,
}

/// A Weyl term: the bound value and the index it bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeylTerm {
    pub value: SurdSum,
    pub k: usize,
}

fn totals(sa: &Spectrum, sb: &Spectrum) -> Result<usize> {
    if sa.total() != sb.total() {
        return domain(format!("spectra have sizes {} and {}", sa.total(), sb.total()));
    }
    Ok(sa.total())
}

/// `λ_i(A) + λ_j(B)`, an upper bound on `λ_{i+j-1}(A+B)`.
pub fn weyl_upper(sa: &Spectrum, sb: &Spectrum, i: usize, j: usize) -> Result<WeylTerm> {
    let total = totals(sa, sb)?;
    if i < 1 || j < 1 || i + j > total + 1 {
        return domain(format!("upper bound needs 1 <= i, j and i + j <= {}, got ({i}, {j})", total + 1));
    }
    Ok(WeylTerm { value: &sa.kth(i)?.to_sum() + sb.kth(j)?, k: i + j - 1 })
}

/// `λ_r(A) + λ_s(B)`, a lower bound on `λ_{r+s-N}(A+B)`.
pub fn weyl_lower(sa: &Spectrum, sb: &Spectrum, r: usize, s: usize) -> Result<WeylTerm> {
    let total = totals(sa, sb)?;
    if r > total || s > total || r + s < total + 1 {
        return domain(format!("lower bound needs r, s <= {total} and r + s >= {}, got ({r}, {s})", total + 1));
    }
    Ok(WeylTerm { value: &sa.kth(r)?.to_sum() + sb.kth(s)?, k: r + s - total })
}

/// Eigenvalues of the four components, each expanded to length `n²`.
#[derive(Debug, Clone)]
pub struct Components {
    pub n: usize,
    pub triangles: Vec<ExactEigen>,
    pub anti: Vec<ExactEigen>,
    pub rows: Vec<ExactEigen>,
    pub cols: Vec<ExactEigen>,
}

impl Components {
    pub fn new(n: usize) -> Self {
        let bip = spectrum_g23x(n).expand();
        Components {
            n,
            triangles: spectrum_g12(n).expand(),
            anti: spectrum_g13(n).expand(),
            rows: bip.clone(),
            cols: bip,
        }
    }

    pub fn size(&self) -> usize {
        self.n * self.n
    }

    fn value(&self, idx: [usize; 4]) -> SurdSum {
        let mut s = self.triangles[idx[0] - 1].to_sum();
        s = &s + self.anti[idx[1] - 1];
        s = &s + self.rows[idx[2] - 1];
        &s + self.cols[idx[3] - 1]
    }
}

/// Indices of one chain. For upper chains `(a, b)` are `(i, j)`, for lower `(r, s)`.
///
/// Level 1 pairs triangles with the rest, level 2 anti-diagonals with
/// the bipartite parts, level 3 rows with columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Chain {
    pub a1: usize,
    pub b1: usize,
    pub a2: usize,
    pub b2: usize,
    pub a3: usize,
    pub b3: usize,
}

impl Chain {
    fn labels(direction: Direction) -> [&'static str; 6] {
        match direction {
            Direction::Upper => ["i1", "j1", "i2", "j2", "i3", "j3"],
            Direction::Lower => ["r1", "s1", "r2", "s2", "r3", "s3"],
        }
    }

    pub fn render(&self, direction: Direction) -> String {
        let l = Chain::labels(direction);
        let v = [self.a1, self.b1, self.a2, self.b2, self.a3, self.b3];
        let parts: Vec<String> = l.iter().zip(v).map(|(l, v)| format!("{l}={v}")).collect();
        parts.join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainedBound {
    pub direction: Direction,
    pub k: usize,
    pub value: SurdSum,
    pub chain: Chain,
}

/// Composes three Weyl steps from the free indices `[a1, a2, a3, b3]`.
pub fn chained_bound(n: usize, free: [usize; 4], direction: Direction) -> Result<ChainedBound> {
    chained_bound_with(&Components::new(n), free, direction)
}

pub fn chained_bound_with(c: &Components, free: [usize; 4], direction: Direction) -> Result<ChainedBound> {
    let total = c.size();
    let [a1, a2, a3, b3] = free;
    if free.iter().any(|&x| x < 1 || x > total) {
        return domain(format!("chain indices must lie in 1..={total}"));
    }
    let step = |a: usize, b: usize, level: usize| -> Result<usize> {
        match direction {
            Direction::Upper if a + b <= total + 1 => Ok(a + b - 1),
            Direction::Lower if a + b > total => Ok(a + b - total),
            _ => domain(format!("step {level}: indices ({a}, {b}) violate the side condition")),
        }
    };
    let b2 = step(a3, b3, 3)?;
    let b1 = step(a2, b2, 2)?;
    let k = step(a1, b1, 1)?;
    let value = c.value([a1, a2, a3, b3]);
    Ok(ChainedBound { direction, k, value, chain: Chain { a1, b1, a2, b2, a3, b3 } })
}

/// Best value and argument per index at one level.
struct Level {
    value: Vec<SurdSum>,
    arg: Vec<usize>,
}

fn combine(left: &[SurdSum], right: &[SurdSum], direction: Direction) -> Level {
    let total = left.len();
    let mut value = Vec::with_capacity(total);
    let mut arg = Vec::with_capacity(total);
    for m in 1..=total {
        // candidate left indices; the right index is determined
        let (lo, hi) = match direction {
            Direction::Upper => (1, m),
            Direction::Lower => (m, total),
        };
        let mut best: Option<(SurdSum, usize)> = None;
        for a in lo..=hi {
            let b = match direction {
                Direction::Upper => m + 1 - a,
                Direction::Lower => m + total - a,
            };
            let cand = &left[a - 1] + &right[b - 1];
            let better = match &best {
                None => true,
                Some((v, _)) => match direction {
                    Direction::Upper => cand < *v,
                    Direction::Lower => cand > *v,
                },
            };
            if better {
                best = Some((cand, a));
            }
        }
        let (v, a) = best.expect("nonempty candidate range");
        value.push(v);
        arg.push(a);
    }
    Level { value, arg }
}

/// Optimal chains for every index of one board size.
pub struct BoundSearch {
    pub components: Components,
    upper: [Level; 3],
    lower: [Level; 3],
}

impl BoundSearch {
    pub fn new(n: usize) -> Self {
        let components = Components::new(n);
        let sums = |v: &[ExactEigen]| -> Vec<SurdSum> { v.iter().map(|e| e.to_sum()).collect() };
        let (t, a, r, c) =
            (sums(&components.triangles), sums(&components.anti), sums(&components.rows), sums(&components.cols));
        let run = |d: Direction| {
            let l3 = combine(&r, &c, d);
            let l2 = combine(&a, &l3.value, d);
            let l1 = combine(&t, &l2.value, d);
            [l1, l2, l3]
        };
        let upper = run(Direction::Upper);
        let lower = run(Direction::Lower);
        BoundSearch { components, upper, lower }
    }

    fn witness(&self, k: usize, direction: Direction) -> Chain {
        let total = self.components.size();
        let levels = match direction {
            Direction::Upper => &self.upper,
            Direction::Lower => &self.lower,
        };
        let partner = |m: usize, a: usize| match direction {
            Direction::Upper => m + 1 - a,
            Direction::Lower => m + total - a,
        };
        let a1 = levels[0].arg[k - 1];
        let b1 = partner(k, a1);
        let a2 = levels[1].arg[b1 - 1];
        let b2 = partner(b1, a2);
        let a3 = levels[2].arg[b2 - 1];
        let b3 = partner(b2, a3);
        Chain { a1, b1, a2, b2, a3, b3 }
    }

    pub fn entry(&self, k: usize) -> Result<BoundEntry> {
        let total = self.components.size();
        if k < 1 || k > total {
            return domain(format!("index {k} outside 1..={total}"));
        }
        Ok(BoundEntry {
            k,
            lower: self.lower[0].value[k - 1].clone(),
            upper: self.upper[0].value[k - 1].clone(),
            lower_chain: self.witness(k, Direction::Lower),
            upper_chain: self.witness(k, Direction::Upper),
        })
    }

    pub fn table(&self) -> Vec<BoundEntry> {
        (1..=self.components.size()).map(|k| self.entry(k).expect("index in range")).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub k: usize,
    pub lower: SurdSum,
    pub upper: SurdSum,
    pub lower_chain: Chain,
    pub upper_chain: Chain,
}

impl BoundEntry {
    /// The free indices `[a1, a2, a3, b3]` of a stored chain.
    pub fn free(chain: &Chain) -> [usize; 4] {
        [chain.a1, chain.a2, chain.a3, chain.b3]
    }
}

pub fn best_bounds(n: usize, k: usize) -> Result<BoundEntry> {
    if n < 4 {
        return domain(format!("bounds are defined for n >= 4, got {n}"));
    }
    BoundSearch::new(n).entry(k)
}

pub fn bound_table(n: usize) -> Result<Vec<BoundEntry>> {
    if n < 4 {
        return domain(format!("bounds are defined for n >= 4, got {n}"));
    }
    Ok(BoundSearch::new(n).table())
}

pub fn table_csv(entries: &[BoundEntry]) -> String {
    let mut out = String::from("k,lower,upper,lower_decimal,upper_decimal,lower_chain,upper_chain\n");
    for e in entries {
        let _ = writeln!(
            out,
            "{},{},{},{:.12},{:.12},{},{}",
            e.k,
            e.lower,
            e.upper,
            e.lower.to_f64(),
            e.upper.to_f64(),
            e.lower_chain.render(Direction::Lower),
            e.upper_chain.render(Direction::Upper)
        );
    }
    out
}
