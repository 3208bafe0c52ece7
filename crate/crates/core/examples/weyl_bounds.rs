//! Chained Weyl bounds on every eigenvalue of the queens graph, next to
//! the numeric eigenvalues.
//!
//! ```bash
//! cargo run -p trispectra --example weyl_bounds -- 5
//! ```

use trispectra::numeric::graph_eigenvalues;
use trispectra::{bound_table, build_queens, chained_bound, Direction};

fn main() -> trispectra::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let up = chained_bound(n, [3, 1, 4, 4], Direction::Upper)?;
    println!("one upper chain: λ_{} <= {}  ({})", up.k, up.value, up.chain.render(Direction::Upper));

    let numeric = graph_eigenvalues(&build_queens(n))?.values;
    println!("\n{:>3} {:>12} {:>12} {:>12}", "k", "lower", "λ_k", "upper");
    for e in bound_table(n)? {
        let lk = numeric[e.k - 1];
        let inside = e.lower.to_f64() <= lk + 1e-9 && lk <= e.upper.to_f64() + 1e-9;
        println!("{:>3} {:>12.6} {:>12.6} {:>12.6} {}", e.k, e.lower.to_f64(), lk, e.upper.to_f64(), if inside { "" } else { "!" });
    }
    Ok(())
}
