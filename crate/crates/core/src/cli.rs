//! Command dispatch behind the `trispectra` binary.
//!
//! Argument parsing lives in the binary; everything here takes a
//! validated [`RunConfig`] and returns the rendered payload together
//! with the exit status. Payloads carry no timestamps, so identical
//! configurations render identical bytes.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::bareiss::exact_multiplicity;
use crate::board::TriVector;
use crate::decomposition::{decompose, verify_decomposition, Decomposition, Part};
use crate::error::{domain, Result};
use crate::families::first::u_rcd;
use crate::families::reconcile::reconcile_all;
use crate::families::second::x_rcd;
use crate::families::sums::{sums_u, sums_v, sums_x, sums_y};
use crate::families::{
    basis_least, check_independent, is_eigenvector, vector_t, vector_v, vector_y, Family,
    FamilyParam, FamilyVector,
};
use crate::graph::{build_clique, build_complete_bipartite, build_queens, build_triangular, LabeledGraph};
use crate::numeric::{check_conjecture, Verdict};
use crate::spectrum::{
    spectrum_bipartite, spectrum_clique, spectrum_g12, spectrum_g13, spectrum_g23x, spectrum_triangular, Spectrum,
};
use crate::weyl::{chained_bound, table_csv, BoundSearch, Direction};
use crate::quadratic::SurdSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Ascii,
    Mtx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphChoice {
    Tri,
    Queens,
    Clique,
    Bipartite,
    /// Both triangular parts of the queens decomposition.
    G12,
    /// Anti-diagonal cliques.
    G13,
    /// One family of blue-red bipartite components.
    G23x,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rotation {
    Pos,
    Neg,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Build { graph: GraphChoice, n: usize, b: usize },
    Spectrum { graph: GraphChoice, n: usize, b: usize, verify: bool },
    Family { family: Family, n: usize, lambda: Option<i64>, placement: Option<(usize, usize)>, rotation: Option<Rotation> },
    VerifyFamily { family: Option<Family>, sides: RangeInclusive<usize> },
    BasisLeast { n: usize },
    Decompose { n: usize },
    VerifyDecomposition { sides: RangeInclusive<usize> },
    WeylBounds { n: usize, k: Option<usize> },
    CheckConjecture { sides: RangeInclusive<usize>, eps: f64 },
    ReproduceExamples,
    Reconcile { sides: RangeInclusive<usize> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// `None` picks the command's default.
    pub format: Option<Format>,
    pub parallel: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    /// 0 on success, 1 when a verification failed.
    pub status: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { status: 0, output }
    }

    fn checked(passed: bool, output: String) -> Self {
        Outcome { status: if passed { 0 } else { 1 }, output }
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("payload serializes");
    s.push('\n');
    s
}

/// Order-preserving map, parallel on request.
fn fan_out<T: Send + Sync, R: Send>(items: Vec<T>, parallel: bool, f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    if parallel {
        items.par_iter().map(f).collect()
    } else {
        items.iter().map(f).collect()
    }
}

fn unsupported<T>(format: Format, command: &str) -> Result<T> {
    domain(format!("format {format:?} is not available for {command}"))
}

pub fn dispatch(cfg: &RunConfig) -> Result<Outcome> {
    let fmt = cfg.format;
    match &cfg.command {
        Command::Build { graph, n, b } => build(*graph, *n, *b, fmt.unwrap_or(Format::Json)),
        Command::Spectrum { graph, n, b, verify } => spectrum(*graph, *n, *b, *verify, fmt.unwrap_or(Format::Json)),
        Command::Family { family, n, lambda, placement, rotation } => {
            family_vector(*family, *n, *lambda, *placement, *rotation, fmt.unwrap_or(Format::Json))
        }
        Command::VerifyFamily { family, sides } => verify_family(*family, sides.clone(), cfg.parallel, fmt.unwrap_or(Format::Csv)),
        Command::BasisLeast { n } => basis(*n, fmt.unwrap_or(Format::Json)),
        Command::Decompose { n } => decomposition(*n, fmt.unwrap_or(Format::Json)),
        Command::VerifyDecomposition { sides } => {
            let ns: Vec<usize> = sides.clone().collect();
            if ns.iter().any(|&n| n < 4) {
                return domain("the decomposition is stated for n >= 4");
            }
            let reports = fan_out(ns, cfg.parallel, |&n| verify_decomposition(&decompose(n).expect("n >= 4")));
            let passed = reports.iter().all(|r| r.passed);
            Ok(Outcome::checked(passed, pretty(&json!({ "passed": passed, "reports": reports }))))
        }
        Command::WeylBounds { n, k } => weyl_bounds(*n, *k, fmt.unwrap_or(Format::Json)),
        Command::CheckConjecture { sides, eps } => {
            let ns: Vec<usize> = sides.clone().collect();
            let reports = fan_out(ns, cfg.parallel, |&n| check_conjecture(n, *eps));
            let reports = reports.into_iter().collect::<Result<Vec<_>>>()?;
            let violated = reports.iter().any(|r| r.verdict == Verdict::Violated);
            Ok(Outcome::checked(!violated, pretty(&json!({ "violated": violated, "verdicts": reports }))))
        }
        Command::ReproduceExamples => {
            let checks = reproduce_examples();
            let passed = checks.iter().all(|c| c.pass);
            Ok(Outcome::checked(passed, pretty(&json!({ "passed": passed, "checks": checks }))))
        }
        Command::Reconcile { sides } => {
            let summary = reconcile_all(sides.clone());
            Ok(Outcome::checked(summary.conclusive(), pretty(&summary)))
        }
    }
}

fn graph_for(graph: GraphChoice, n: usize, b: usize) -> Result<LabeledGraph> {
    Ok(match graph {
        GraphChoice::Tri => build_triangular(n),
        GraphChoice::Queens => build_queens(n),
        GraphChoice::Clique => build_clique(n),
        GraphChoice::Bipartite => {
            if n + b == 0 {
                return domain("K_{a,b} needs a + b >= 1");
            }
            build_complete_bipartite(n, b)
        }
        GraphChoice::G12 | GraphChoice::G13 | GraphChoice::G23x => {
            let d = decompose(n)?;
            match graph {
                GraphChoice::G12 => union_of(&d, &[Part::Blue, Part::Red]),
                GraphChoice::G13 => d.part(Part::Anti).clone(),
                _ => d.part(Part::CrossRows).clone(),
            }
        }
    })
}

fn union_of(d: &Decomposition, parts: &[Part]) -> LabeledGraph {
    let mut g = d.part(parts[0]).clone();
    for p in &parts[1..] {
        for (u, v) in d.part(*p).edges() {
            g.add_edge(u, v);
        }
    }
    g
}

fn build(graph: GraphChoice, n: usize, b: usize, fmt: Format) -> Result<Outcome> {
    if n == 0 && graph != GraphChoice::Bipartite {
        return domain("n must be at least 1");
    }
    let g = graph_for(graph, n, b)?;
    Ok(Outcome::ok(match fmt {
        Format::Dot => g.to_dot("g"),
        Format::Mtx => g.to_matrix_market(),
        Format::Json => {
            let edges: Vec<[usize; 2]> = g.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect();
            let coords: Vec<Option<(usize, usize)>> = g.tags.iter().map(|t| t.coord).collect();
            pretty(&json!({
                "kind": g.kind,
                "vertices": g.order(),
                "edges": g.edge_count(),
                "coords": coords,
                "edge_list": edges,
            }))
        }
        other => return unsupported(other, "build"),
    }))
}

fn closed_spectrum(graph: GraphChoice, n: usize, b: usize) -> Result<Spectrum> {
    Ok(match graph {
        GraphChoice::Tri => spectrum_triangular(n),
        GraphChoice::Clique => spectrum_clique(n),
        GraphChoice::Bipartite => spectrum_bipartite(n, b),
        GraphChoice::G12 | GraphChoice::G13 | GraphChoice::G23x if n < 4 => {
            return domain("component spectra are stated for n >= 4")
        }
        GraphChoice::G12 => spectrum_g12(n),
        GraphChoice::G13 => spectrum_g13(n),
        GraphChoice::G23x => spectrum_g23x(n),
        GraphChoice::Queens => {
            return domain("the queens graph has no closed-form spectrum; see check-conjecture")
        }
    })
}

#[derive(Serialize)]
struct MultiplicityRow {
    value: i64,
    closed_form: usize,
    exact: usize,
}

fn spectrum(graph: GraphChoice, n: usize, b: usize, verify: bool, fmt: Format) -> Result<Outcome> {
    let s = closed_spectrum(graph, n, b)?;
    if !verify {
        return Ok(Outcome::ok(match fmt {
            Format::Json => s.to_json() + "\n",
            Format::Csv => s.to_csv(),
            other => return unsupported(other, "spectrum"),
        }));
    }
    let g = graph_for(graph, n, b)?;
    let rows: Vec<MultiplicityRow> = s
        .entries()
        .iter()
        .filter_map(|e| e.value.as_int().map(|q| (q, e.mult)))
        .map(|(q, m)| MultiplicityRow { value: q, closed_form: m, exact: exact_multiplicity(&g, q) })
        .collect();
    let passed = s.total() == g.order() && rows.iter().all(|r| r.closed_form == r.exact);
    Ok(Outcome::checked(passed, pretty(&json!({ "spectrum": s, "passed": passed, "integer_multiplicities": rows }))))
}

fn family_vector(
    family: Family,
    n: usize,
    lambda: Option<i64>,
    placement: Option<(usize, usize)>,
    rotation: Option<Rotation>,
    fmt: Format,
) -> Result<Outcome> {
    let mut fv = match (family, lambda, placement) {
        (Family::T, _, Some((x, y))) => vector_t(n, x, y)?,
        (Family::T, _, None) => return domain("the t family needs --x and --y"),
        (f, Some(l), _) => f.build(n, l)?,
        (_, None, _) => return domain("this family needs --lambda"),
    };
    fv.data = match rotation {
        None => fv.data,
        Some(Rotation::Pos) => fv.data.rotate_pos(),
        Some(Rotation::Neg) => fv.data.rotate_neg(),
    };
    Ok(Outcome::ok(match fmt {
        Format::Json => pretty(&fv),
        Format::Ascii => fv.data.render_ascii(),
        other => return unsupported(other, "family"),
    }))
}

/// One line of the family verification table.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyRow {
    pub family: Family,
    pub n: usize,
    pub parameter: String,
    pub defined: bool,
    pub eigenvector: Option<bool>,
    pub line_sums: Option<bool>,
    pub cross_check: Option<bool>,
    pub rank: Option<usize>,
    pub expected_rank: Option<usize>,
}

impl FamilyRow {
    pub fn passed(&self) -> bool {
        [self.eigenvector, self.line_sums, self.cross_check].iter().all(|c| c.unwrap_or(true))
            && self.rank == self.expected_rank
    }
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        None => "-",
        Some(true) => "pass",
        Some(false) => "fail",
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".into(), |r| r.to_string())
}

pub fn family_rows(family: Family, n: usize) -> Vec<FamilyRow> {
    let g = build_triangular(n);
    let row = |parameter: String| FamilyRow {
        family,
        n,
        parameter,
        defined: false,
        eigenvector: None,
        line_sums: None,
        cross_check: None,
        rank: None,
        expected_rank: None,
    };
    if family == Family::T {
        return basis_least(n)
            .unwrap_or_default()
            .into_iter()
            .map(|t| {
                let s = t.data.sum_vectors();
                let mut r = row(match t.parameter {
                    FamilyParam::Placement { x, y } => format!("({x},{y})"),
                    FamilyParam::Eigenvalue(l) => l.to_string(),
                });
                r.defined = true;
                r.eigenvector = Some(is_eigenvector(&g, &t.data, -3));
                r.line_sums = Some(s.by_row.iter().chain(&s.by_col).chain(&s.by_diag).all(|&x| x == 0));
                r
            })
            .collect();
    }
    family
        .lambda_range(n)
        .map(|l| {
            let mut r = row(l.to_string());
            let Ok(fv) = family.build(n, l) else {
                return r;
            };
            r.defined = true;
            let v = &fv.data;
            r.eigenvector = Some(is_eigenvector(&g, v, l));
            let sums = match family {
                Family::U => sums_u(n, l),
                Family::V => sums_v(n, l),
                Family::X => sums_x(n, l),
                _ => sums_y(n, l),
            };
            r.line_sums = Some(v.sum_vectors() == sums);
            r.cross_check = match family {
                Family::U => Some(*v == u_rcd(n, l)),
                Family::X => Some(*v == x_rcd(n, l)),
                _ => None,
            };
            let triple: Option<Vec<TriVector>> = match family {
                Family::U => Some(
                    [Some(v.clone()), Some(v.rotate_neg()), vector_v(n, l).ok().map(|w| w.data)]
                        .into_iter()
                        .flatten()
                        .collect(),
                ),
                Family::X => Some(
                    [Some(v.clone()), Some(v.rotate_pos()), vector_y(n, l).ok().map(|w| w.data)]
                        .into_iter()
                        .flatten()
                        .collect(),
                ),
                _ => None,
            };
            if let Some(t) = triple {
                r.expected_rank = Some(t.len());
                r.rank = check_independent(&t).ok();
            }
            r
        })
        .collect()
}

pub fn family_csv(rows: &[FamilyRow]) -> String {
    let mut out = String::from("family,n,parameter,defined,eigenvector,line_sums,cross_check,rank,expected_rank,status\n");
    for r in rows {
        let status = if !r.defined {
            "undefined"
        } else if r.passed() {
            "pass"
        } else {
            "fail"
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{status}\n",
            r.family,
            r.n,
            r.parameter,
            r.defined,
            flag(r.eigenvector),
            flag(r.line_sums),
            flag(r.cross_check),
            opt(r.rank),
            opt(r.expected_rank)
        ));
    }
    out
}

fn verify_family(family: Option<Family>, sides: RangeInclusive<usize>, parallel: bool, fmt: Format) -> Result<Outcome> {
    if *sides.start() < 4 {
        return domain("eigenvector families need n >= 4");
    }
    let families: Vec<Family> = family.map_or_else(|| Family::ALL.to_vec(), |f| vec![f]);
    let items: Vec<(Family, usize)> = families.iter().flat_map(|&f| sides.clone().map(move |n| (f, n))).collect();
    let rows: Vec<FamilyRow> = fan_out(items, parallel, |&(f, n)| family_rows(f, n)).into_iter().flatten().collect();
    let passed = rows.iter().all(FamilyRow::passed);
    Ok(Outcome::checked(passed, match fmt {
        Format::Csv => family_csv(&rows),
        Format::Json => pretty(&json!({ "passed": passed, "rows": rows })),
        other => return unsupported(other, "verify-family"),
    }))
}

fn basis(n: usize, fmt: Format) -> Result<Outcome> {
    let b: Vec<FamilyVector> = basis_least(n)?;
    let data: Vec<TriVector> = b.iter().map(|t| t.data.clone()).collect();
    let rank = check_independent(&data)?;
    let g = build_triangular(n);
    let eigen = data.iter().all(|v| is_eigenvector(&g, v, -3));
    let passed = rank == b.len() && eigen;
    Ok(Outcome::checked(passed, match fmt {
        Format::Json => pretty(&json!({ "n": n, "count": b.len(), "rank": rank, "all_eigenvectors": eigen, "vectors": b })),
        Format::Ascii => {
            let mut s = format!("{} vectors, rank {rank}\n", b.len());
            for t in &b {
                s.push_str(&format!("\n{:?}\n{}", t.parameter, t.data.render_ascii()));
            }
            s
        }
        other => return unsupported(other, "basis-least"),
    }))
}

fn decomposition(n: usize, fmt: Format) -> Result<Outcome> {
    let d = decompose(n)?;
    Ok(Outcome::ok(match fmt {
        Format::Dot => d.to_dot(),
        Format::Json => pretty(&json!({ "n": n, "parts": d.edge_lists() })),
        other => return unsupported(other, "decompose"),
    }))
}

fn weyl_bounds(n: usize, k: Option<usize>, fmt: Format) -> Result<Outcome> {
    if n < 4 {
        return domain("bounds are defined for n >= 4");
    }
    let search = BoundSearch::new(n);
    let entries = match k {
        Some(k) => vec![search.entry(k)?],
        None => search.table(),
    };
    Ok(Outcome::ok(match fmt {
        Format::Json => pretty(&json!({ "n": n, "bounds": entries })),
        Format::Csv => table_csv(&entries),
        other => return unsupported(other, "weyl-bounds"),
    }))
}

/// One comparison against an embedded expected value.
#[derive(Debug, Clone, Serialize)]
pub struct ExampleCheck {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

fn example(name: &'static str, expected: &str, actual: String) -> ExampleCheck {
    ExampleCheck { name, expected: expected.to_string(), pass: actual == expected, actual }
}

/// Recomputes the worked examples and compares with the embedded values.
pub fn reproduce_examples() -> Vec<ExampleCheck> {
    let iota = TriVector { n: 4, entries: (1..=10).collect() };
    let nb: Vec<usize> = build_triangular(4).neighbors(0).map(|v| v + 1).collect();
    let up = chained_bound(4, [3, 1, 4, 4], Direction::Upper).map(|b| format!("λ_{} <= {}", b.k, b.value));
    let lo = chained_bound(4, [15, 16, 13, 13], Direction::Lower).map(|b| format!("λ_{} >= {}", b.k, b.value));
    let best = BoundSearch::new(4).entry(9).expect("index in range");
    let within = best.lower >= SurdSum::int(-3) && best.upper <= SurdSum::int(4);
    vec![
        example("spectrum of triangular(3)", "{4, 0^[3], -2^[2]}", spectrum_triangular(3).to_string()),
        example("spectrum of triangular(4)", "{6, 1^[3], 0^[2], -2^[3], -3}", spectrum_triangular(4).to_string()),
        example("triangular parts, n = 4", "{6, 4, 1^[3], 0^[5], -2^[5], -3}", spectrum_g12(4).to_string()),
        example("anti-diagonal cliques, n = 4", "{3, 2^[2], 1^[2], 0^[2], -1^[9]}", spectrum_g13(4).to_string()),
        example("bipartite part, n = 4", "{2, √3^[2], 0^[10], -√3^[2], -2}", spectrum_g23x(4).to_string()),
        example("K_{1,3}", "{√3, 0^[2], -√3}", spectrum_bipartite(1, 3).to_string()),
        example("K_{2,2}", "{2, 0^[2], -2}", spectrum_bipartite(2, 2).to_string()),
        example("neighbours of vertex 1 in triangular(4)", "[2, 3, 4, 6, 7, 10]", format!("{nb:?}")),
        example("positive rotation of 1..10", "[10, 6, 9, 3, 5, 8, 1, 2, 4, 7]", format!("{:?}", iota.rotate_pos().entries)),
        example("negative rotation of 1..10", "[7, 8, 4, 9, 5, 2, 10, 6, 3, 1]", format!("{:?}", iota.rotate_neg().entries)),
        example("upper chain (3,1,4,4), n = 4", "λ_9 <= 4", up.unwrap_or_else(|e| e.to_string())),
        example("lower chain (15,16,13,13), n = 4", "λ_9 >= -3", lo.unwrap_or_else(|e| e.to_string())),
        example("best bounds on λ_9, n = 4, within [-3, 4]", "true", within.to_string()),
        example("mult of -3 in triangular(7)", "10", exact_multiplicity(&build_triangular(7), -3).to_string()),
        example("mult of 10 in triangular(6)", "1", exact_multiplicity(&build_triangular(6), 10).to_string()),
        example("mult of -4 in queens(6)", "9", exact_multiplicity(&build_queens(6), -4).to_string()),
        example("mult of -4 in queens(4)", "1", exact_multiplicity(&build_queens(4), -4).to_string()),
    ]
}

/// Integer multiplicities of a spectrum, for quick comparisons.
pub fn integer_part(s: &Spectrum) -> BTreeMap<i64, usize> {
    s.entries().iter().filter_map(|e| e.value.as_int().map(|q| (q, e.mult))).collect()
}
