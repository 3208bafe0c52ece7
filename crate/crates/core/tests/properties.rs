use proptest::prelude::*;

use trispectra::board::cells;
use trispectra::numeric::{integer_snap, symmetric_eigen};
use trispectra::spectrum::Spectrum;
use trispectra::*;

fn board() -> impl Strategy<Value = TriVector> {
    (1usize..=9).prop_flat_map(|n| {
        prop::collection::vec(-20i64..=20, tri_number(n))
            .prop_map(move |e| TriVector::from_entries(n, e).expect("length matches"))
    })
}

fn spectrum() -> impl Strategy<Value = Spectrum> {
    prop::collection::vec(
        (prop_oneof![(-6i64..=6).prop_map(ExactEigen::Int), (-3i64..=3, 2u64..=12).prop_map(|(s, k)| ExactEigen::surd(s, k))], 1usize..=4),
        0..6,
    )
    .prop_map(Spectrum::from_pairs)
}

fn surd_sum() -> impl Strategy<Value = SurdSum> {
    prop::collection::vec(prop_oneof![(-40i64..=40).prop_map(SurdSum::int), (-9i64..=9, 2u64..=30).prop_map(|(s, k)| ExactEigen::surd(s, k).to_sum())], 0..5)
        .prop_map(|terms| terms.iter().fold(SurdSum::zero(), |acc, t| &acc + t))
}

fn sorted_sums(v: &TriVector) -> Vec<i64> {
    let s = v.sum_vectors();
    let mut all: Vec<i64> = s.by_row.iter().chain(&s.by_col).chain(&s.by_diag).copied().collect();
    all.sort_unstable();
    all
}

proptest! {
    #[test]
    fn labels_are_a_bijection(n in 1usize..=40) {
        let labels: Vec<usize> = cells(n).map(|c| c.label()).collect();
        prop_assert_eq!(labels.clone(), (1..=tri_number(n)).collect::<Vec<_>>());
        for l in labels {
            prop_assert_eq!(TriCoord::from_label(l, n).unwrap().label(), l);
        }
    }

    #[test]
    fn rotations_form_a_cyclic_group(v in board()) {
        prop_assert_eq!(v.rotate_pos().rotate_pos().rotate_pos(), v.clone());
        prop_assert_eq!(v.rotate_pos().rotate_neg(), v.clone());
        prop_assert_eq!(v.rotate_pos().rotate_pos(), v.rotate_neg());
    }

    #[test]
    fn rotations_are_graph_automorphisms(v in board()) {
        let g = build_triangular(v.n);
        let av = TriVector::from_entries(v.n, g.apply(&v.entries)).unwrap();
        let rotated = v.rotate_pos();
        prop_assert_eq!(g.apply(&rotated.entries), av.rotate_pos().entries);
    }

    #[test]
    fn line_sums_partition_the_total(v in board()) {
        let s = v.sum_vectors();
        let t = v.total();
        prop_assert_eq!(s.by_row.iter().sum::<i64>(), t);
        prop_assert_eq!(s.by_col.iter().sum::<i64>(), t);
        prop_assert_eq!(s.by_diag.iter().sum::<i64>(), t);
    }

    #[test]
    fn line_sums_are_indicator_products(v in board()) {
        let s = v.sum_vectors();
        for kind in LineKind::ALL {
            for idx in kind.index_range(v.n) {
                let r = rcd_vector(kind, v.n, idx).unwrap();
                let dot: i64 = r.entries.iter().zip(&v.entries).map(|(a, b)| a * b).sum();
                prop_assert_eq!(s.line(kind, idx), dot);
            }
        }
    }

    #[test]
    fn rotation_permutes_line_sums(v in board()) {
        prop_assert_eq!(sorted_sums(&v.rotate_pos()), sorted_sums(&v));
    }

    #[test]
    fn spectrum_union_is_commutative_and_associative(a in spectrum(), b in spectrum(), c in spectrum()) {
        prop_assert_eq!(spectrum_union(&a, &b), spectrum_union(&b, &a));
        prop_assert_eq!(spectrum_union(&spectrum_union(&a, &b), &c), spectrum_union(&a, &spectrum_union(&b, &c)));
        prop_assert_eq!(spectrum_union(&a, &b).total(), a.total() + b.total());
    }

    #[test]
    fn spectrum_entries_descend(a in spectrum()) {
        let e = a.entries();
        prop_assert!(e.windows(2).all(|w| w[0].value > w[1].value));
        prop_assert!(e.windows(2).all(|w| w[0].value.to_f64() > w[1].value.to_f64()));
    }

    #[test]
    fn surd_sign_matches_float(s in surd_sum()) {
        let x = s.to_f64();
        if s.is_zero() {
            prop_assert_eq!(s.signum(), 0);
        } else {
            prop_assert_ne!(s.signum(), 0);
            if x.abs() > 1e-9 {
                prop_assert_eq!(s.signum() as f64, x.signum());
            }
        }
    }

    #[test]
    fn surd_order_matches_float(a in surd_sum(), b in surd_sum()) {
        let d = a.to_f64() - b.to_f64();
        if d.abs() > 1e-9 {
            prop_assert_eq!(a < b, d < 0.0);
        }
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn jacobi_preserves_trace_and_norm(dim in 1usize..=12, seed in prop::collection::vec(-5.0f64..5.0, 144)) {
        let mut m = vec![0.0; dim * dim];
        for p in 0..dim {
            for q in 0..=p {
                let x = seed[p * 12 + q];
                m[p * dim + q] = x;
                m[q * dim + p] = x;
            }
        }
        let trace: f64 = (0..dim).map(|p| m[p * dim + p]).sum();
        let frob: f64 = m.iter().map(|x| x * x).sum();
        let r = symmetric_eigen(&m, dim, 1e-12, true).unwrap();
        prop_assert!(r.values.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!((r.values.iter().sum::<f64>() - trace).abs() < 1e-9);
        prop_assert!((r.values.iter().map(|x| x * x).sum::<f64>() - frob).abs() < 1e-8 * frob.max(1.0));
        prop_assert!(r.residual.unwrap() < 1e-8);
    }

    #[test]
    fn snapping_partitions_values(values in prop::collection::vec(-20.0f64..20.0, 0..40), eps in 1e-9f64..0.49) {
        let s = integer_snap(&values, eps).unwrap();
        let counted: usize = s.integers.iter().map(|&(_, c)| c).sum();
        prop_assert_eq!(counted + s.residue.len(), values.len());
        prop_assert!(s.residue.iter().all(|x| (x - x.round()).abs() > eps));
    }

    #[test]
    fn closed_form_spectrum_has_trace_zero(n in 1usize..=60) {
        let s = spectrum_triangular(n);
        prop_assert_eq!(s.total(), tri_number(n));
        prop_assert_eq!(s.integer_moment(1), Some(0));
        // Every vertex has degree 2(n-1).
        prop_assert_eq!(s.integer_moment(2), Some((tri_number(n) * 2 * (n - 1)) as i64));
    }
}
