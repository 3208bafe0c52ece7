//! Builds the triangular-board graph, checks its line clique partition
//! and prints the export formats.
//!
//! ```bash
//! cargo run -p trispectra --example triangular_graph -- 5
//! ```

use trispectra::{build_triangular, ecp_lines};

fn main() -> trispectra::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let g = build_triangular(n);
    println!("n = {n}: {} vertices, {} edges", g.order(), g.edge_count());
    println!("degrees: {:?}", g.degrees());

    let ecp = ecp_lines(&g)?;
    println!(
        "{} line cliques, max clique degree {}, exact cover: {}",
        ecp.parts.len(),
        ecp.max_clique_degree,
        ecp.covers_exactly(&g)
    );
    for p in ecp.parts.iter().take(4) {
        println!("  {:?} {} -> {:?}", p.line, p.index, p.vertices);
    }

    println!("\n{}", g.to_dot("triangular"));
    let mtx = g.to_matrix_market();
    println!("{}", mtx.lines().take(6).collect::<Vec<_>>().join("\n"));
    Ok(())
}
