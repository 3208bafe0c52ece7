//! Searches the boundary perturbations of the x and y constructions and
//! reports which readings make them eigenvectors.
//!
//! ```bash
//! cargo run --release -p trispectra --example boundary_search
//! ```

use trispectra::families::reconcile::reconcile_all;

fn main() {
    let summary = reconcile_all(4..=11);
    for c in &summary.literal {
        println!("{c:?}");
    }
    for r in &summary.searches {
        println!(
            "{}: literal passes {}, {} candidates, {} passing, shipped {} (unique: {})",
            r.piece,
            r.literal_passes,
            r.candidates,
            r.passing.len(),
            r.shipped,
            r.shipped_is_unique_pass
        );
        for p in r.passing.iter().take(5) {
            println!("    {p}");
        }
    }
    println!("conclusive: {}", summary.conclusive());
}
