//! Closed-form spectra, confirmed by exact nullity where the values are integers.
//!
//! ```bash
//! cargo run -p trispectra --example exact_spectra
//! ```

use trispectra::{
    build_triangular, exact_multiplicity, spectrum_bipartite, spectrum_g12, spectrum_g13, spectrum_g23x,
    spectrum_triangular, tri_number,
};

fn main() {
    for n in 2..=9 {
        let s = spectrum_triangular(n);
        let g = build_triangular(n);
        let confirmed = s.entries().iter().all(|e| exact_multiplicity(&g, e.value.as_int().unwrap()) == e.mult);
        println!("triangular({n}) = {s}  [total {} = T(n) {}; nullities agree: {confirmed}]", s.total(), tri_number(n));
    }

    let n = 4;
    println!("\nqueens parts, n = {n}:");
    println!("  triangles  {}", spectrum_g12(n));
    println!("  anti-diag  {}", spectrum_g13(n));
    println!("  bipartite  {}", spectrum_g23x(n));
    println!("  K_2,3      {}", spectrum_bipartite(2, 3));

    let s = spectrum_g23x(5);
    println!("\nbipartite part, n = 5, as CSV:\n{}", s.to_csv());
}
