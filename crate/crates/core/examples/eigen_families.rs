//! The four parametrised eigenvector families and their checks.
//!
//! ```bash
//! cargo run -p trispectra --example eigen_families -- 11
//! ```

use trispectra::cli::family_rows;
use trispectra::families::{first_range, second_range};
use trispectra::{build_triangular, verify_eigenvector, Family};

fn main() -> trispectra::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let g = build_triangular(n);
    println!("n = {n}: first range {:?}, second range {:?}", first_range(n), second_range(n));

    for family in [Family::U, Family::V, Family::X, Family::Y] {
        for l in family.lambda_range(n) {
            match family.build(n, l) {
                Ok(fv) => {
                    let check = verify_eigenvector(&g, &fv.data, l)?;
                    println!("{family}({l}): A v = {l} v ? {}", check.holds);
                }
                Err(e) => println!("{family}({l}): {e}"),
            }
        }
    }

    let l = *second_range(n).start();
    let x = Family::X.build(n, l)?;
    println!("\nx at λ = {l}:\n{}", x.data.render_ascii());

    println!("rank checks:");
    for family in [Family::U, Family::X] {
        for r in family_rows(family, n) {
            println!("  {} λ={} rank {:?} of {:?}, passed {}", family, r.parameter, r.rank, r.expected_rank, r.passed());
        }
    }
    Ok(())
}
