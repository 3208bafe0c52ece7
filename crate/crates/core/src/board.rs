//! Triangular board coordinates and integer vectors living on the board.
//!
//! Cell `(i, j)` is the `j`-th cell of row `i`, with `1 <= j <= i <= n`.
//! Cells are labelled row by row, so `(i, j)` has label `T(i-1) + j`.
//! Lines of the board come in three directions: rows (`i` fixed),
//! columns (`j` fixed) and diagonals (`i - j` fixed).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// `T(n) = n(n+1)/2`.
pub fn tri_number(n: usize) -> usize {
    n * (n + 1) / 2
}

/// `m(m+1)/2` evaluated on all integers, negative arguments included.
pub fn tri_number_signed(m: i64) -> i64 {
    m * (m + 1) / 2
}

/// A cell of the side-`n` board.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TriCoord {
    pub i: usize,
    pub j: usize,
    pub n: usize,
}

impl TriCoord {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        if j < 1 || j > i || i > n {
            return domain(format!("cell ({i},{j}) is not on the side-{n} board"));
        }
        Ok(TriCoord { i, j, n })
    }

    /// Label in `1..=T(n)`.
    pub fn label(&self) -> usize {
        tri_number(self.i - 1) + self.j
    }

    pub fn from_label(label: usize, n: usize) -> Result<Self> {
        if label < 1 || label > tri_number(n) {
            return domain(format!("label {label} is outside 1..={}", tri_number(n)));
        }
        let mut i = 1;
        while tri_number(i) < label {
            i += 1;
        }
        Ok(TriCoord { i, j: label - tri_number(i - 1), n })
    }

    /// Diagonal offset `i - j`.
    pub fn offset(&self) -> usize {
        self.i - self.j
    }
}

/// All cells of the side-`n` board in label order.
pub fn cells(n: usize) -> impl Iterator<Item = TriCoord> {
    (1..=n).flat_map(move |i| (1..=i).map(move |j| TriCoord { i, j, n }))
}

/// Direction of a board line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineKind {
    Row,
    Col,
    Diag,
}

impl LineKind {
    pub const ALL: [LineKind; 3] = [LineKind::Row, LineKind::Col, LineKind::Diag];

    /// Legal index range: rows and columns `1..=n`, diagonals `0..n`.
    pub fn index_range(self, n: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            LineKind::Row | LineKind::Col => 1..=n,
            LineKind::Diag => 0..=n.saturating_sub(1),
        }
    }

    pub fn contains(self, c: TriCoord, index: usize) -> bool {
        match self {
            LineKind::Row => c.i == index,
            LineKind::Col => c.j == index,
            LineKind::Diag => c.offset() == index,
        }
    }

    /// Number of cells on the line.
    pub fn length(self, n: usize, index: usize) -> usize {
        match self {
            LineKind::Row => index,
            LineKind::Col => n + 1 - index,
            LineKind::Diag => n - index,
        }
    }
}

/// Integer vector indexed by board cells, stored in label order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriVector {
    pub n: usize,
    pub entries: Vec<i64>,
}

impl TriVector {
    pub fn zeros(n: usize) -> Self {
        TriVector { n, entries: vec![0; tri_number(n)] }
    }

    pub fn constant(n: usize, value: i64) -> Self {
        TriVector { n, entries: vec![value; tri_number(n)] }
    }

    pub fn from_entries(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != tri_number(n) {
            return Err(Error::Dimension { expected: tri_number(n), found: entries.len() });
        }
        Ok(TriVector { n, entries })
    }

    /// Builds a vector cell by cell from `f(i, j)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        TriVector { n, entries: cells(n).map(|c| f(c.i, c.j)).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[tri_number(i - 1) + j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.entries[tri_number(i - 1) + j - 1] = value;
    }

    pub fn at(&self, c: TriCoord) -> i64 {
        self.get(c.i, c.j)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn total(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn scaled(&self, k: i64) -> Self {
        TriVector { n: self.n, entries: self.entries.iter().map(|e| e * k).collect() }
    }

    /// `v⁺(i,j) = v(n-i+j, n-i+1)`.
    pub fn rotate_pos(&self) -> Self {
        let n = self.n;
        TriVector::from_fn(n, |i, j| self.get(n - i + j, n - i + 1))
    }

    /// `v⁻(i,j) = v(n-j+1, i-j+1)`, the inverse of [`rotate_pos`](Self::rotate_pos).
    pub fn rotate_neg(&self) -> Self {
        let n = self.n;
        TriVector::from_fn(n, |i, j| self.get(n - j + 1, i - j + 1))
    }

    pub fn sum_vectors(&self) -> SumVectors {
        let n = self.n;
        let mut s = SumVectors { by_row: vec![0; n], by_col: vec![0; n], by_diag: vec![0; n] };
        for c in cells(n) {
            let e = self.at(c);
            s.by_row[c.i - 1] += e;
            s.by_col[c.j - 1] += e;
            s.by_diag[c.offset()] += e;
        }
        s
    }

    /// Multi-line triangle layout, one board row per line.
    pub fn render_ascii(&self) -> String {
        let width = self.entries.iter().map(|e| e.to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        for i in 1..=self.n {
            out.push_str(&" ".repeat((self.n - i) * (width + 1) / 2));
            let row: Vec<String> =
                (1..=i).map(|j| format!("{:>width$}", self.get(i, j))).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    fn check_same_board(&self, other: &TriVector) {
        assert_eq!(self.n, other.n, "board sides differ");
    }
}

impl fmt::Display for TriVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

impl Add for &TriVector {
    type Output = TriVector;
    fn add(self, rhs: &TriVector) -> TriVector {
        self.check_same_board(rhs);
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        TriVector { n: self.n, entries }
    }
}

impl Sub for &TriVector {
    type Output = TriVector;
    fn sub(self, rhs: &TriVector) -> TriVector {
        self.check_same_board(rhs);
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        TriVector { n: self.n, entries }
    }
}

impl AddAssign<&TriVector> for TriVector {
    fn add_assign(&mut self, rhs: &TriVector) {
        self.check_same_board(rhs);
        for (a, b) in self.entries.iter_mut().zip(&rhs.entries) {
            *a += b;
        }
    }
}

impl Mul<i64> for &TriVector {
    type Output = TriVector;
    fn mul(self, k: i64) -> TriVector {
        self.scaled(k)
    }
}

impl Neg for &TriVector {
    type Output = TriVector;
    fn neg(self) -> TriVector {
        self.scaled(-1)
    }
}

/// Indicator vector of one board line.
pub fn rcd_vector(kind: LineKind, n: usize, index: usize) -> Result<TriVector> {
    if !kind.index_range(n).contains(&index) || n == 0 {
        return domain(format!("{kind:?} index {index} is out of range for side {n}"));
    }
    Ok(TriVector::from_fn(n, |i, j| {
        i64::from(kind.contains(TriCoord { i, j, n }, index))
    }))
}

/// Sum of the indicator vectors of lines `lo..=hi`; indices off the board contribute nothing.
pub fn line_run(kind: LineKind, n: usize, lo: i64, hi: i64) -> TriVector {
    let legal = kind.index_range(n);
    TriVector::from_fn(n, |i, j| {
        let idx = match kind {
            LineKind::Row => i,
            LineKind::Col => j,
            LineKind::Diag => i - j,
        } as i64;
        i64::from(lo <= idx && idx <= hi && legal.contains(&(idx as usize)))
    })
}

/// Indicator of a single line, zero when the index is off the board.
pub fn line(kind: LineKind, n: usize, index: i64) -> TriVector {
    line_run(kind, n, index, index)
}

/// Line sums of a board vector.
///
/// `by_diag[k]` holds the diagonal with offset `i - j = k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumVectors {
    pub by_row: Vec<i64>,
    pub by_col: Vec<i64>,
    pub by_diag: Vec<i64>,
}

impl SumVectors {
    pub fn row(&self, i: usize) -> i64 {
        self.by_row[i - 1]
    }

    pub fn col(&self, j: usize) -> i64 {
        self.by_col[j - 1]
    }

    pub fn diag(&self, offset: usize) -> i64 {
        self.by_diag[offset]
    }

    pub fn line(&self, kind: LineKind, index: usize) -> i64 {
        match kind {
            LineKind::Row => self.row(index),
            LineKind::Col => self.col(index),
            LineKind::Diag => self.diag(index),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iota(n: usize) -> TriVector {
        TriVector { n, entries: (1..=tri_number(n) as i64).collect() }
    }

    #[test]
    fn triangular_numbers() {
        assert_eq!(tri_number(4), 10);
        assert_eq!(tri_number(0), 0);
        assert_eq!(tri_number(7), 28);
        assert_eq!(tri_number_signed(-3), 3);
        assert_eq!(tri_number_signed(-1), 0);
    }

    #[test]
    fn labels() {
        assert_eq!(TriCoord::new(4, 3, 2).unwrap().label(), 5);
        assert_eq!(TriCoord::new(4, 1, 1).unwrap().label(), 1);
        assert_eq!(TriCoord::new(4, 4, 4).unwrap().label(), 10);
        assert!(TriCoord::new(4, 2, 3).is_err());
        assert!(TriCoord::from_label(11, 4).is_err());
        assert!(TriCoord::from_label(0, 4).is_err());
        for c in cells(7) {
            assert_eq!(TriCoord::from_label(c.label(), 7).unwrap(), c);
        }
    }

    #[test]
    fn rotation_figure() {
        let v = iota(4);
        assert_eq!(v.rotate_pos().entries, vec![10, 6, 9, 3, 5, 8, 1, 2, 4, 7]);
        assert_eq!(v.rotate_neg().entries, vec![7, 8, 4, 9, 5, 2, 10, 6, 3, 1]);
        let c = TriVector::constant(5, 3);
        assert_eq!(c.rotate_pos(), c);
    }

    #[test]
    fn rcd_vectors() {
        let r = rcd_vector(LineKind::Row, 6, 4).unwrap();
        assert_eq!(r.total(), 4);
        assert_eq!(r.sum_vectors().by_row, vec![0, 0, 0, 4, 0, 0]);
        let d = rcd_vector(LineKind::Diag, 6, 0).unwrap();
        assert!(cells(6).all(|c| d.at(c) == i64::from(c.i == c.j)));
        assert_eq!(rcd_vector(LineKind::Col, 1, 1).unwrap().entries, vec![1]);
        assert!(rcd_vector(LineKind::Diag, 6, 6).is_err());
        assert!(rcd_vector(LineKind::Row, 6, 0).is_err());
    }

    #[test]
    fn sums_of_iota() {
        let s = iota(4).sum_vectors();
        assert_eq!(s.by_row, vec![1, 5, 15, 34]);
        assert_eq!(s.by_col, vec![14, 16, 15, 10]);
        assert_eq!(s.by_diag, vec![20, 16, 12, 7]);
    }

    #[test]
    fn ascii_layout() {
        let text = iota(3).render_ascii();
        assert_eq!(text.lines().count(), 3);
        assert!(text.lines().last().unwrap().trim() == "4 5 6");
    }

    #[test]
    fn json_shape() {
        let v = iota(2);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"n":2,"entries":[1,2,3]}"#);
    }

    #[test]
    fn empty_board() {
        let v = TriVector::zeros(0);
        assert!(v.is_empty());
        assert_eq!(v.rotate_pos(), v);
    }
}
