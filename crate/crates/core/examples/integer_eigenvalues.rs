//! Integer eigenvalues of queens graphs against the predicted pattern.
//!
//! ```bash
//! cargo run --release -p trispectra --example integer_eigenvalues -- 10
//! ```

use trispectra::numeric::DEFAULT_SNAP_EPS;
use trispectra::check_conjecture;

fn main() -> trispectra::Result<()> {
    let top: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    for n in 4..=top {
        let r = check_conjecture(n, DEFAULT_SNAP_EPS)?;
        println!("n = {n:>2}: {:?}", r.verdict);
        println!("    observed  {:?}", r.observed);
        if !r.missing.is_empty() || !r.unexpected.is_empty() {
            println!("    missing {:?} unexpected {:?}", r.missing, r.unexpected);
        }
    }
    Ok(())
}
