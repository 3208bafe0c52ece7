//! Exact spectral toolkit for triangular-board graphs and queens graphs.
//!
//! The triangular-board graph of side `n` joins two cells of a
//! triangular board when they share a row, a column or a diagonal. Its
//! spectrum is integral and every eigenspace has an explicit integer
//! basis. The queens graph on an `n x n` board splits into two
//! triangular-board graphs plus cliques and complete bipartite graphs,
//! which yields Weyl-type bounds on its eigenvalues.
//!
//! | module | contents |
//! |--------|----------|
//! | [`board`] | coordinates, labels, rotations, line indicators, line sums |
//! | [`graph`] | graph constructors, line clique partition, DOT and Matrix Market export |
//! | [`families`] | closed-form eigenvectors, eigen checks, rank checks, boundary search |
//! | [`spectrum`] | closed-form spectra over integers and square roots |
//! | [`bareiss`] | exact rank and eigenvalue multiplicity |
//! | [`quadratic`] | exact sums of square roots with sign decisions |
//! | [`decomposition`] | five-part split of the queens graph and its verifier |
//! | [`weyl`] | chained Weyl bounds with an exact optimal search |
//! | [`numeric`] | Jacobi eigen-solver and the integer-eigenvalue monitor |
//! | [`cli`] | command dispatch for the `trispectra` binary |
//!
//! # Examples
//!
//! ```text
//! examples/
//! ├── board_vectors.rs          # labels, rotations, line sums, ASCII layout
//! ├── triangular_graph.rs       # graph build, clique partition, exports
//! ├── exact_spectra.rs          # closed forms checked by exact nullity
//! ├── eigen_families.rs         # u, v, x, y vectors and their checks
//! ├── least_eigenspace.rs       # stencil basis of the -3 eigenspace
//! ├── boundary_search.rs        # perturbation search behind x and y
//! ├── queens_decomposition.rs   # five-part split and its verification
//! ├── weyl_bounds.rs            # bound table against numeric eigenvalues
//! └── integer_eigenvalues.rs    # integer part of queens spectra
//! ```
//!
//! ```bash
//! cargo run -p trispectra --example board_vectors
//! cargo run -p trispectra --example weyl_bounds -- 5
//! ```
//!
//! ```
//! use trispectra::{build_triangular, exact_multiplicity, spectrum_triangular};
//!
//! let s = spectrum_triangular(6);
//! let g = build_triangular(6);
//! for e in s.entries() {
//!     let q = e.value.as_int().unwrap();
//!     assert_eq!(exact_multiplicity(&g, q), e.mult);
//! }
//! ```

pub mod bareiss;
pub mod board;
pub mod cli;
pub mod decomposition;
pub mod error;
pub mod families;
pub mod graph;
pub mod numeric;
pub mod quadratic;
pub mod spectrum;
pub mod weyl;

pub use bareiss::exact_multiplicity;
pub use board::{rcd_vector, tri_number, LineKind, SumVectors, TriCoord, TriVector};
pub use decomposition::{decompose, verify_decomposition, Decomposition, Part};
pub use error::{Error, Result};
pub use families::{
    basis_least, check_independent, verify_eigenvector, vector_t, vector_u, vector_v, vector_x, vector_y, Family,
    FamilyVector,
};
pub use graph::{build_clique, build_complete_bipartite, build_queens, build_triangular, ecp_lines, LabeledGraph};
pub use numeric::{check_conjecture, integer_snap, symmetric_eigenvalues, NumericSpectrum};
pub use quadratic::{ExactEigen, SurdSum};
pub use spectrum::{
    kth_eigenvalue, spectrum_bipartite, spectrum_clique, spectrum_g12, spectrum_g13, spectrum_g23x,
    spectrum_triangular, spectrum_union, Spectrum,
};
pub use weyl::{best_bounds, bound_table, chained_bound, weyl_lower, weyl_upper, BoundEntry, Direction};
