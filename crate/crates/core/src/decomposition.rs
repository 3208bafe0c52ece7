//! Splitting the queens graph into two triangular-board graphs,
//! anti-diagonal cliques and two unions of complete bipartite graphs.
//!
//! Cells with `c <= r` are blue, the rest red. Every queen edge lies on
//! exactly one line, so each edge is assigned by its line and the colors
//! of its ends:
//!
//! - `blue`: blue-blue edges along rows, columns and `r-c` diagonals
//! - `red`: the same for red-red
//! - `anti`: every edge along an `r+c` anti-diagonal
//! - `cross_rows`, `cross_cols`: blue-red edges along rows, columns
//!
//! Blue-red pairs never share an `r-c` diagonal.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::board::{tri_number, TriCoord};
use crate::error::{domain, Result};
use crate::graph::{build_queens, build_triangular, queens_index, Color, GraphKind, LabeledGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Part {
    Blue,
    Red,
    Anti,
    CrossRows,
    CrossCols,
}

impl Part {
    pub const ALL: [Part; 5] = [Part::Blue, Part::Red, Part::Anti, Part::CrossRows, Part::CrossCols];

    pub fn name(self) -> &'static str {
        match self {
            Part::Blue => "blue",
            Part::Red => "red",
            Part::Anti => "anti",
            Part::CrossRows => "cross_rows",
            Part::CrossCols => "cross_cols",
        }
    }

    /// Part owning the queen edge between `a` and `b`.
    pub fn of_edge(a: (usize, usize), b: (usize, usize)) -> Part {
        let (ca, cb) = (Color::of_cell(a.0, a.1), Color::of_cell(b.0, b.1));
        if a.0 + a.1 == b.0 + b.1 {
            Part::Anti
        } else if ca == cb {
            if ca == Color::Blue {
                Part::Blue
            } else {
                Part::Red
            }
        } else if a.0 == b.0 {
            Part::CrossRows
        } else {
            Part::CrossCols
        }
    }
}

/// The five parts, each a graph on all `n²` cells in row-major order.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub n: usize,
    pub colors: Vec<Color>,
    pub parts: BTreeMap<Part, LabeledGraph>,
}

fn square_cells(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|r| (1..=n).map(move |c| (r, c))).collect()
}

pub fn decompose(n: usize) -> Result<Decomposition> {
    if n < 4 {
        return domain(format!("the decomposition is stated for n >= 4, got {n}"));
    }
    Ok(decompose_any(n))
}

/// Same construction without the lower size limit.
pub fn decompose_any(n: usize) -> Decomposition {
    let q = build_queens(n);
    let cells = square_cells(n);
    let colors: Vec<Color> = cells.iter().map(|&(r, c)| Color::of_cell(r, c)).collect();
    let mut parts: BTreeMap<Part, LabeledGraph> = Part::ALL
        .into_iter()
        .map(|p| {
            let mut g = LabeledGraph::empty(n * n, GraphKind::Other);
            for (u, &cell) in cells.iter().enumerate() {
                g.tags[u].coord = Some(cell);
                g.tags[u].color = Some(colors[u]);
            }
            (p, g)
        })
        .collect();
    for (u, v) in q.edges() {
        let part = Part::of_edge(cells[u], cells[v]);
        parts.get_mut(&part).expect("all parts present").add_edge(u, v);
    }
    Decomposition { n, colors, parts }
}

impl Decomposition {
    pub fn part(&self, p: Part) -> &LabeledGraph {
        &self.parts[&p]
    }

    /// Whole board graph with every vertex colored.
    pub fn colored_board(&self) -> LabeledGraph {
        let mut q = build_queens(self.n);
        for (u, tag) in q.tags.iter_mut().enumerate() {
            tag.color = Some(self.colors[u]);
        }
        q
    }

    /// DOT drawing of the board with edges colored by part.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph queens {\n  node [style=filled];\n");
        let n = self.n;
        for (u, color) in self.colors.iter().enumerate() {
            let (r, c) = (u / n + 1, u % n + 1);
            out.push_str(&format!(
                "  v{} [label=\"({r},{c})\", fillcolor={}, pos=\"{c},{}!\"];\n",
                u + 1,
                color.name(),
                n - r
            ));
        }
        let edge_color = |p: Part| match p {
            Part::Blue => "blue",
            Part::Red => "red",
            Part::Anti => "darkgreen",
            Part::CrossRows => "orange",
            Part::CrossCols => "purple",
        };
        for (p, g) in &self.parts {
            for (u, v) in g.edges() {
                out.push_str(&format!("  v{} -- v{} [color={}];\n", u + 1, v + 1, edge_color(*p)));
            }
        }
        out.push_str("}\n");
        out
    }

    /// Edge lists per part as 1-based `[(r, c), (r, c)]` pairs.
    pub fn edge_lists(&self) -> BTreeMap<&'static str, Vec<[(usize, usize); 2]>> {
        let n = self.n;
        let cell = |u: usize| (u / n + 1, u % n + 1);
        self.parts
            .iter()
            .map(|(p, g)| (p.name(), g.edges().into_iter().map(|(u, v)| [cell(u), cell(v)]).collect()))
            .collect()
    }
}

/// Matrix cell where the part adjacencies do not add up to the queens adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellMismatch {
    pub row: usize,
    pub col: usize,
    pub expected: u8,
    pub found: u8,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: Vec<String>,
}

impl Check {
    fn new(name: impl Into<String>, details: Vec<String>) -> Self {
        Check { name: name.into(), passed: details.is_empty(), details }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub passed: bool,
    pub identity_mismatches: Vec<CellMismatch>,
    pub checks: Vec<Check>,
}

/// Entrywise comparison of `A(Q)` with the sum of part adjacencies.
pub fn identity_mismatches(d: &Decomposition) -> Vec<CellMismatch> {
    let q = build_queens(d.n);
    let order = q.order();
    let mut out = Vec::new();
    for u in 0..order {
        for v in 0..order {
            let found: u8 = d.parts.values().map(|g| u8::from(g.has_edge(u, v))).sum();
            let expected = u8::from(q.has_edge(u, v));
            if found != expected {
                out.push(CellMismatch { row: u + 1, col: v + 1, expected, found });
            }
        }
    }
    out
}

fn check_disjoint(d: &Decomposition) -> Check {
    let mut details = Vec::new();
    let parts: Vec<(&Part, &LabeledGraph)> = d.parts.iter().collect();
    for (x, (pa, ga)) in parts.iter().enumerate() {
        for (pb, gb) in &parts[x + 1..] {
            for (u, v) in ga.edges() {
                if gb.has_edge(u, v) {
                    details.push(format!("edge {}-{} in both {} and {}", u + 1, v + 1, pa.name(), pb.name()));
                }
            }
        }
    }
    Check::new("edge-disjoint", details)
}

/// Checks that `map` sends the vertices touched by `part` bijectively onto
/// a triangular-board graph of side `side`, preserving adjacency both ways.
fn check_triangular_image(
    d: &Decomposition,
    part: Part,
    side: usize,
    color: Color,
    map: impl Fn(usize, usize) -> (usize, usize),
) -> Check {
    let n = d.n;
    let g = d.part(part);
    let t = build_triangular(side);
    let mut details = Vec::new();
    let members: Vec<usize> = (0..n * n).filter(|&u| d.colors[u] == color).collect();
    if members.len() != tri_number(side) {
        details.push(format!("{} cells of this color, expected {}", members.len(), tri_number(side)));
        return Check::new(format!("{} ≅ triangular({side})", part.name()), details);
    }
    let mut image = vec![usize::MAX; n * n];
    let mut hit = vec![false; tri_number(side)];
    for &u in &members {
        let (i, j) = map(u / n + 1, u % n + 1);
        match TriCoord::new(side, i, j) {
            Ok(c) if !hit[c.label() - 1] => {
                hit[c.label() - 1] = true;
                image[u] = c.label() - 1;
            }
            _ => details.push(format!("cell {} maps to ({i},{j}) which is off-board or taken", u + 1)),
        }
    }
    for u in 0..n * n {
        for v in u + 1..n * n {
            let inside = image[u] != usize::MAX && image[v] != usize::MAX;
            let expected = inside && t.has_edge(image[u], image[v]);
            if g.has_edge(u, v) != expected {
                details.push(format!("pair {}-{}: part {}, image {}", u + 1, v + 1, g.has_edge(u, v), expected));
            }
        }
    }
    Check::new(format!("{} ≅ triangular({side})", part.name()), details)
}

/// Connected components of `g` restricted to vertices with at least one edge,
/// plus the count of isolated vertices.
fn components(g: &LabeledGraph) -> (Vec<Vec<usize>>, usize) {
    let order = g.order();
    let mut seen = vec![false; order];
    let mut comps = Vec::new();
    let mut isolated = 0;
    for s in 0..order {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut at = 0;
        while at < comp.len() {
            for w in g.neighbors(comp[at]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            at += 1;
        }
        if comp.len() == 1 {
            isolated += 1;
        } else {
            comp.sort_unstable();
            comps.push(comp);
        }
    }
    (comps, isolated)
}

fn check_cliques(d: &Decomposition) -> Check {
    let n = d.n;
    let g = d.part(Part::Anti);
    let (comps, isolated) = components(g);
    let mut details = Vec::new();
    let mut sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    for c in &comps {
        let edges: usize = c.iter().map(|&u| c.iter().filter(|&&v| g.has_edge(u, v)).count()).sum::<usize>() / 2;
        if edges != c.len() * (c.len() - 1) / 2 {
            details.push(format!("component of size {} is not complete", c.len()));
        }
    }
    sizes.extend(std::iter::repeat_n(1, isolated));
    sizes.sort_unstable();
    let mut expected: Vec<usize> = (1..=n).chain(1..n).collect();
    expected.sort_unstable();
    if sizes != expected {
        details.push(format!("clique sizes {sizes:?}, expected {expected:?}"));
    }
    Check::new("anti census", details)
}

fn check_bipartite(d: &Decomposition, part: Part) -> Check {
    let n = d.n;
    let g = d.part(part);
    let (comps, isolated) = components(g);
    let mut details = Vec::new();
    let mut shapes = Vec::new();
    for c in &comps {
        let (blue, red): (Vec<usize>, Vec<usize>) = c.iter().partition(|&&u| d.colors[u] == Color::Blue);
        let complete = blue.iter().all(|&a| red.iter().all(|&b| g.has_edge(a, b)))
            && blue.iter().all(|&a| blue.iter().all(|&b| !g.has_edge(a, b)))
            && red.iter().all(|&a| red.iter().all(|&b| !g.has_edge(a, b)));
        if !complete {
            details.push(format!("component {:?} is not complete bipartite between colors", c));
        }
        shapes.push((blue.len(), red.len()));
    }
    shapes.sort_unstable();
    let expected: Vec<(usize, usize)> = (1..n).map(|i| (i, n - i)).collect();
    if shapes != expected {
        details.push(format!("bipartite shapes {shapes:?}, expected {expected:?}"));
    }
    if isolated != n {
        details.push(format!("{isolated} isolated cells, expected {n} (the edgeless K_{{{n},0}})"));
    }
    Check::new(format!("{} census", part.name()), details)
}

pub fn verify_decomposition(d: &Decomposition) -> DecompositionReport {
    let n = d.n;
    let identity_mismatches = identity_mismatches(d);
    let mut checks = vec![
        Check::new(
            "adjacency identity",
            identity_mismatches.iter().map(|m| format!("({},{}): {} vs {}", m.row, m.col, m.found, m.expected)).collect(),
        ),
        check_disjoint(d),
        check_triangular_image(d, Part::Blue, n, Color::Blue, |r, c| (r, c)),
        check_triangular_image(d, Part::Red, n - 1, Color::Red, |r, c| (c - 1, r)),
        check_cliques(d),
        check_bipartite(d, Part::CrossRows),
        check_bipartite(d, Part::CrossCols),
    ];
    let degree_details: Vec<String> = {
        let q = build_queens(n);
        (0..n * n)
            .filter(|&u| d.parts.values().map(|g| g.degree(u)).sum::<usize>() != q.degree(u))
            .map(|u| format!("cell {} degree mismatch", u + 1))
            .collect()
    };
    checks.push(Check::new("degree accounting", degree_details));
    let passed = checks.iter().all(|c| c.passed);
    DecompositionReport { n, passed, identity_mismatches, checks }
}

/// Restriction of a decomposition of side `n+1` to its top-left `n x n` block.
pub fn restrict(d: &Decomposition, n: usize) -> BTreeMap<Part, Vec<(usize, usize)>> {
    let big = d.n;
    let keep = |u: usize| u / big < n && u % big < n;
    let to_small = |u: usize| queens_index(n, u / big + 1, u % big + 1);
    d.parts
        .iter()
        .map(|(p, g)| {
            let edges = g
                .edges()
                .into_iter()
                .filter(|&(u, v)| keep(u) && keep(v))
                .map(|(u, v)| (to_small(u), to_small(v)))
                .collect();
            (*p, edges)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_by_four() {
        let d = decompose(4).unwrap();
        let r = verify_decomposition(&d);
        assert!(r.passed, "{:#?}", r.checks);
        assert_eq!(d.part(Part::Anti).edge_count(), 2 * (1 + 3) + 6);
        assert!(decompose(3).is_err());
    }

    #[test]
    fn example_bipartitions() {
        let d = decompose(4).unwrap();
        let g = d.part(Part::CrossRows);
        // row 1: blue (1,1) joined to red (1,2),(1,3),(1,4)
        let nb: Vec<usize> = g.neighbors(queens_index(4, 1, 1)).collect();
        assert_eq!(nb, vec![1, 2, 3]);
        assert_eq!(g.degree(queens_index(4, 4, 2)), 0);
    }

    #[test]
    fn edge_counts_sum() {
        for n in 4..=8 {
            let d = decompose(n).unwrap();
            let total: usize = d.parts.values().map(LabeledGraph::edge_count).sum();
            // independent count: row/col pairs plus both diagonal directions
            let lines: usize = 2 * n * n * (n - 1) / 2
                + 2 * ((1..n).map(|l| l * (l - 1)).sum::<usize>() + n * (n - 1) / 2);
            assert_eq!(total, lines);
        }
    }

    #[test]
    fn single_edge_removed() {
        let mut d = decompose(5).unwrap();
        let g = d.parts.get_mut(&Part::Anti).unwrap();
        let (u, v) = g.edges()[0];
        g.remove_edge(u, v);
        let r = verify_decomposition(&d);
        assert!(!r.passed);
        assert_eq!(r.identity_mismatches.len(), 2);
        assert_eq!(r.identity_mismatches[0].row, r.identity_mismatches[1].col);
    }

    #[test]
    fn growth_restriction() {
        for n in 4..=8 {
            let small = decompose(n).unwrap();
            let restricted = restrict(&decompose(n + 1).unwrap(), n);
            for (p, g) in &small.parts {
                assert_eq!(restricted[p], g.edges(), "n = {n}, part {}", p.name());
            }
        }
    }
}
