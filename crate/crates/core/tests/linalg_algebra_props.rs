use morita_core::algebra::{path_algebra, quotient_by_ideal, validate_algebra, Quiver};
use morita_core::fixtures::gf101;
use morita_core::linalg::{compose, rref_decompose, solve, Mat, Subspace};
use proptest::prelude::*;

mod common;

fn mat(rows: usize, cols: usize, data: Vec<u64>) -> Mat {
    Mat::from_vec(gf101(), rows, cols, data).unwrap()
}

fn arb_mat() -> impl Strategy<Value = Mat> {
    (0usize..7, 0usize..7).prop_flat_map(|(r, c)| {
        // Small entries make rank deficiency common.
        proptest::collection::vec(prop_oneof![3 => 0u64..3, 1 => 0u64..101], r * c).prop_map(move |d| mat(r, c, d))
    })
}

/// Acyclic quivers: arrows only go from lower to higher vertices.
fn arb_quiver() -> impl Strategy<Value = Quiver> {
    (1usize..5).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..5).prop_map(move |pairs| {
            let arrows = pairs.into_iter().filter(|(s, t)| s < t).collect();
            Quiver::new(n, arrows)
        })
    })
}

proptest! {
    #![proptest_config(common::config(64))]

    #[test]
    fn rank_plus_nullity_is_cols(m in arb_mat()) {
        prop_assert_eq!(m.rank() + m.kernel().cols(), m.cols());
        prop_assert!(m.dot(&m.kernel()).is_zero());
    }

    #[test]
    fn solutions_reproduce_the_right_hand_side(m in arb_mat(), seed in proptest::collection::vec(0u64..101, 0..8)) {
        let x: Vec<u64> = (0..m.cols()).map(|i| seed.get(i).copied().unwrap_or(1)).collect();
        let b = Mat::column(gf101(), &m.apply(&x));
        let sol = solve(&m, &b).expect("b is in the column space");
        prop_assert_eq!(compose(&m, &sol).unwrap(), b);
    }

    #[test]
    fn rref_is_invariant_under_row_operations(m in arb_mat(), seed in any::<u64>()) {
        let (p, _) = common::random_invertible(&mut common::rng(seed), gf101(), m.rows());
        let (a, b) = (rref_decompose(&m), rref_decompose(&p.dot(&m)));
        prop_assert_eq!(&a.reduced, &b.reduced);
        prop_assert_eq!(&a.pivots, &b.pivots);
        prop_assert_eq!(a, rref_decompose(&m));
    }

    #[test]
    fn subspace_quotient_has_complementary_dimension(m in arb_mat()) {
        let s = Subspace::column_space(&m);
        prop_assert_eq!(s.quotient_map().rows() + s.dim(), m.rows());
        prop_assert_eq!(s.dim(), m.rank());
    }

    #[test]
    fn path_algebras_validate(q in arb_quiver()) {
        let a = path_algebra(gf101(), &q).unwrap();
        prop_assert!(validate_algebra(&a).is_ok());
        let rad = a.radical().unwrap().clone();
        prop_assert!(a.is_two_sided_ideal(&rad));
        // Nilpotent: rad^(dim+1) = 0.
        let mut power = rad.clone();
        for _ in 0..a.dim() {
            let prods: Vec<Vec<u64>> = power
                .basis()
                .iter()
                .flat_map(|x| rad.basis().iter().map(move |y| (x.clone(), y.clone())))
                .map(|(x, y)| a.mul(&x, &y))
                .collect();
            power = Subspace::spanned_by(gf101(), a.dim(), &prods);
        }
        prop_assert_eq!(power.dim(), 0);
        let (top, _) = quotient_by_ideal(&a, &rad).unwrap();
        prop_assert!(validate_algebra(&top).is_ok());
        prop_assert_eq!(top.radical().unwrap().dim(), 0);
        prop_assert_eq!(top.dim(), q.vertices);
    }
}
