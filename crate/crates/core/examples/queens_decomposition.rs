//! Splits the queens graph into five parts and verifies the split.
//!
//! ```bash
//! cargo run -p trispectra --example queens_decomposition -- 6
//! ```

use trispectra::{build_queens, decompose, verify_decomposition, Part};

fn main() -> trispectra::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let d = decompose(n)?;
    let q = build_queens(n);
    println!("queens({n}): {} vertices, {} edges", q.order(), q.edge_count());
    for p in [Part::Blue, Part::Red, Part::Anti, Part::CrossRows, Part::CrossCols] {
        println!("  {:<10} {} edges", p.name(), d.part(p).edge_count());
    }

    let report = verify_decomposition(&d);
    for c in &report.checks {
        println!("  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name);
    }
    println!("identity mismatches: {}", report.identity_mismatches.len());
    println!("passed: {}", report.passed);

    let mut broken = d.clone();
    let (u, v) = broken.parts[&Part::Anti].edges()[0];
    broken.parts.get_mut(&Part::Anti).unwrap().remove_edge(u, v);
    let bad = verify_decomposition(&broken);
    println!("after dropping one anti-diagonal edge: passed {}, mismatches {:?}", bad.passed, bad.identity_mismatches);
    Ok(())
}
