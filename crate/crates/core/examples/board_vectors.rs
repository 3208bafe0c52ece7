//! Labels, rotations and line sums on a small triangular board.
//!
//! ```bash
//! cargo run -p trispectra --example board_vectors
//! ```

use trispectra::board::cells;
use trispectra::{rcd_vector, LineKind, TriVector};

fn main() -> trispectra::Result<()> {
    let n = 4;
    println!("cell labels, n = {n}:");
    for c in cells(n) {
        print!("({},{})->{} ", c.i, c.j, c.label());
    }
    println!("\n");

    let iota = TriVector::from_fn(n, |i, j| (trispectra::tri_number(i - 1) + j) as i64);
    println!("labels as a board vector:\n{}", iota.render_ascii());
    println!("rotated by +120 degrees:\n{}", iota.rotate_pos().render_ascii());
    println!("rotated by -120 degrees:\n{}", iota.rotate_neg().render_ascii());
    assert_eq!(iota.rotate_pos().rotate_pos().rotate_pos(), iota);
    assert_eq!(iota.rotate_pos().rotate_neg(), iota);

    let s = iota.sum_vectors();
    println!("row sums  {:?}", s.by_row);
    println!("col sums  {:?}", s.by_col);
    println!("diag sums {:?}", s.by_diag);

    // Rotation permutes the three families of lines.
    let r = iota.rotate_pos().sum_vectors();
    println!("after rotation: rows {:?} cols {:?} diags {:?}", r.by_row, r.by_col, r.by_diag);

    for kind in LineKind::ALL {
        let v = rcd_vector(kind, n, 2)?;
        println!("{kind:?} 2 indicator, {} cells:\n{}", v.total(), v.render_ascii());
    }
    Ok(())
}
