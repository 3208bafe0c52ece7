//! Dense symmetric 0/1 graphs: triangular-board graphs, queens graphs,
//! cliques, complete bipartite graphs, and the line partition of a
//! triangular-board graph into cliques.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::board::{cells, tri_number, LineKind, TriCoord};
use crate::error::{domain, Result};

/// Two-coloring of the square board used by the queens decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
}

impl Color {
    /// Blue on and below the main diagonal.
    pub fn of_cell(row: usize, col: usize) -> Color {
        if col <= row {
            Color::Blue
        } else {
            Color::Red
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Blue => "blue",
            Color::Red => "red",
        }
    }
}

/// Optional metadata attached to a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VertexTag {
    /// Board coordinate `(row, position)`; triangular `(i, j)` or square `(r, c)`.
    pub coord: Option<(usize, usize)>,
    pub color: Option<Color>,
}

/// What a graph was built as; gates operations that need a known shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum GraphKind {
    Triangular { n: usize },
    Queens { n: usize },
    Clique { k: usize },
    Bipartite { a: usize, b: usize },
    Other,
}

/// Symmetric 0/1 adjacency with zero diagonal, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub kind: GraphKind,
    order: usize,
    adj: Vec<u8>,
    pub tags: Vec<VertexTag>,
}

impl LabeledGraph {
    pub fn empty(order: usize, kind: GraphKind) -> Self {
        LabeledGraph { kind, order, adj: vec![0; order * order], tags: vec![VertexTag::default(); order] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.order + v] != 0
    }

    /// Adds `{u, v}`; loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u * self.order + v] = 1;
            self.adj[v * self.order + u] = 1;
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.order + v] = 0;
        self.adj[v * self.order + u] = 0;
    }

    pub fn row(&self, u: usize) -> &[u8] {
        &self.adj[u * self.order..(u + 1) * self.order]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().filter(|(_, &a)| a != 0).map(|(v, _)| v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().filter(|&&a| a != 0).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|u| self.degree(u)).collect()
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in u + 1..self.order {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&a| a != 0).count() / 2
    }

    /// Adjacency as a dense row-major integer matrix.
    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        (0..self.order).map(|u| self.row(u).iter().map(|&a| i64::from(a)).collect()).collect()
    }

    pub fn adjacency_f64(&self) -> Vec<f64> {
        self.adj.iter().map(|&a| f64::from(a)).collect()
    }

    /// `A x` over the integers.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        (0..self.order).map(|u| self.neighbors(u).map(|v| x[v]).sum()).collect()
    }

    pub fn is_symmetric_loopless(&self) -> bool {
        (0..self.order).all(|u| {
            !self.has_edge(u, u) && (0..self.order).all(|v| self.has_edge(u, v) == self.has_edge(v, u))
        })
    }

    fn vertex_label(&self, u: usize) -> String {
        match self.tags[u].coord {
            Some((a, b)) => format!("({a},{b})"),
            None => (u + 1).to_string(),
        }
    }

    /// Graphviz rendering; board coordinates label vertices, colors fill them.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n  node [style=filled, fillcolor=white];\n");
        for u in 0..self.order {
            let fill = self.tags[u].color.map(Color::name).unwrap_or("white");
            let _ = writeln!(out, "  v{} [label=\"{}\", fillcolor={fill}];", u + 1, self.vertex_label(u));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  v{} -- v{};", u + 1, v + 1);
        }
        out.push_str("}\n");
        out
    }

    /// Matrix Market coordinate pattern, symmetric, lower triangle.
    pub fn to_matrix_market(&self) -> String {
        let mut out = String::from("%%MatrixMarket matrix coordinate pattern symmetric\n");
        let _ = writeln!(out, "{} {} {}", self.order, self.order, self.edge_count());
        for u in 0..self.order {
            for v in 0..u {
                if self.has_edge(u, v) {
                    let _ = writeln!(out, "{} {}", u + 1, v + 1);
                }
            }
        }
        out
    }
}

/// Triangular-board graph: cells adjacent when they share a row, column or diagonal.
pub fn build_triangular(n: usize) -> LabeledGraph {
    let cs: Vec<TriCoord> = cells(n).collect();
    let mut g = LabeledGraph::empty(cs.len(), GraphKind::Triangular { n });
    for (u, a) in cs.iter().enumerate() {
        g.tags[u].coord = Some((a.i, a.j));
        for (v, b) in cs.iter().enumerate().skip(u + 1) {
            if a.i == b.i || a.j == b.j || a.offset() == b.offset() {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Row-major index of square cell `(r, c)`, both 1-based.
pub fn queens_index(n: usize, r: usize, c: usize) -> usize {
    (r - 1) * n + (c - 1)
}

/// Whether two distinct square cells attack along a queen line.
pub fn queens_attack(a: (usize, usize), b: (usize, usize)) -> bool {
    a != b && (a.0 == b.0 || a.1 == b.1 || a.0 + b.1 == b.0 + a.1 || a.0 + a.1 == b.0 + b.1)
}

/// Queens graph on the `n x n` board, vertices in row-major order.
pub fn build_queens(n: usize) -> LabeledGraph {
    let mut g = LabeledGraph::empty(n * n, GraphKind::Queens { n });
    let cs: Vec<(usize, usize)> = (1..=n).flat_map(|r| (1..=n).map(move |c| (r, c))).collect();
    for (u, &a) in cs.iter().enumerate() {
        g.tags[u].coord = Some(a);
        for (v, &b) in cs.iter().enumerate().skip(u + 1) {
            if queens_attack(a, b) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn build_clique(k: usize) -> LabeledGraph {
    let mut g = LabeledGraph::empty(k, GraphKind::Clique { k });
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v);
        }
    }
    g
}

/// `K_{a,b}`; the first `a` vertices form one side.
pub fn build_complete_bipartite(a: usize, b: usize) -> LabeledGraph {
    let mut g = LabeledGraph::empty(a + b, GraphKind::Bipartite { a, b });
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

/// One clique of an edge clique partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliquePart {
    pub line: LineKind,
    pub index: usize,
    /// Vertex indices (0-based label order).
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCliquePartition {
    pub parts: Vec<CliquePart>,
    /// Number of parts through each vertex.
    pub clique_degree: Vec<usize>,
    pub max_clique_degree: usize,
}

impl EdgeCliquePartition {
    /// Every edge of `g` lies in exactly one part, and every part is a clique of `g`.
    pub fn covers_exactly(&self, g: &LabeledGraph) -> bool {
        let n = g.order();
        let mut count = vec![0u32; n * n];
        for p in &self.parts {
            for (x, &u) in p.vertices.iter().enumerate() {
                for &v in &p.vertices[x + 1..] {
                    if !g.has_edge(u, v) {
                        return false;
                    }
                    count[u * n + v] += 1;
                }
            }
        }
        g.edges().iter().all(|&(u, v)| count[u * n + v] == 1)
            && count.iter().sum::<u32>() as usize == g.edge_count()
    }
}

/// Rows, columns and diagonals of a triangular-board graph as cliques.
pub fn ecp_lines(g: &LabeledGraph) -> Result<EdgeCliquePartition> {
    let GraphKind::Triangular { n } = g.kind else {
        return domain("line partition needs a triangular-board graph");
    };
    let mut parts = Vec::with_capacity(3 * n);
    let mut clique_degree = vec![0; tri_number(n)];
    for kind in LineKind::ALL {
        for index in kind.index_range(n) {
            let vertices: Vec<usize> =
                cells(n).filter(|c| kind.contains(*c, index)).map(|c| c.label() - 1).collect();
            for &v in &vertices {
                clique_degree[v] += 1;
            }
            parts.push(CliquePart { line: kind, index, vertices });
        }
    }
    let max_clique_degree = clique_degree.iter().copied().max().unwrap_or(0);
    Ok(EdgeCliquePartition { parts, clique_degree, max_clique_degree })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_four() {
        let g = build_triangular(4);
        assert_eq!(g.order(), 10);
        assert_eq!(g.edge_count(), 30);
        assert!(g.degrees().iter().all(|&d| d == 6));
        let nb: Vec<usize> = g.neighbors(0).map(|v| v + 1).collect();
        assert_eq!(nb, vec![2, 3, 4, 6, 7, 10]);
    }

    #[test]
    fn small_triangular_are_complete() {
        assert_eq!(build_triangular(1).edge_count(), 0);
        let k3 = build_triangular(2);
        assert_eq!(k3.order(), 3);
        assert_eq!(k3.edge_count(), 3);
        let g3 = build_triangular(3);
        assert!(g3.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn queens_small() {
        assert_eq!(build_queens(1).edge_count(), 0);
        let q2 = build_queens(2);
        assert_eq!(q2.edge_count(), 6);
    }

    #[test]
    fn cliques_and_bipartite() {
        let k4 = build_clique(4);
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.degrees().iter().all(|&d| d == 3));
        assert_eq!(build_complete_bipartite(2, 2).edge_count(), 4);
        let k40 = build_complete_bipartite(4, 0);
        assert_eq!((k40.order(), k40.edge_count()), (4, 0));
    }

    #[test]
    fn line_partition() {
        let g = build_triangular(4);
        let ecp = ecp_lines(&g).unwrap();
        assert_eq!(ecp.parts.len(), 12);
        let row4 = ecp.parts.iter().find(|p| p.line == LineKind::Row && p.index == 4).unwrap();
        assert_eq!(row4.vertices, vec![6, 7, 8, 9]);
        assert!(ecp.covers_exactly(&g));
        assert_eq!(ecp.max_clique_degree, 3);
        assert!(ecp_lines(&build_queens(3)).is_err());
    }

    #[test]
    fn exports() {
        let g = build_clique(3);
        let mm = g.to_matrix_market();
        assert!(mm.starts_with("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 3\n"));
        assert_eq!(mm.lines().count(), 5);
        let dot = build_triangular(2).to_dot("t2");
        assert!(dot.contains("label=\"(2,1)\""));
        assert_eq!(dot.matches(" -- ").count(), 3);
    }
}
