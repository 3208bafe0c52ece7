//! The -3 eigenspace is spanned by translates of a ten-cell stencil.
//!
//! ```bash
//! cargo run -p trispectra --example least_eigenspace -- 8
//! ```

use trispectra::families::is_eigenvector;
use trispectra::{basis_least, build_triangular, check_independent, exact_multiplicity, tri_number, TriVector};

fn main() -> trispectra::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let g = build_triangular(n);
    let basis = basis_least(n)?;
    println!("stencil at (1,1):\n{}", basis[0].data.render_ascii());

    let data: Vec<TriVector> = basis.iter().map(|t| t.data.clone()).collect();
    let all_eigen = data.iter().all(|v| is_eigenvector(&g, v, -3));
    let rank = check_independent(&data)?;
    let mult = exact_multiplicity(&g, -3);
    println!("n = {n}: {} placements, all eigenvectors: {all_eigen}", data.len());
    println!("rank {rank}, nullity of A + 3I {mult}, T(n-3) {}", tri_number(n - 3));
    Ok(())
}
