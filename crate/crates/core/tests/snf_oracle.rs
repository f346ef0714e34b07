mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::{check_smith, invariant_factors_by_minors, matrix, to_big};
use eqbir::exact_algebra::{present_quotient, smith_diagonal, smith_normal_form, IntMatrix};

fn arb_matrix(max: usize, bound: i64) -> impl Strategy<Value = (Vec<Vec<i64>>, usize)> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        (
            prop::collection::vec(prop::collection::vec(-bound..=bound, c), r),
            Just(c),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_form_matches_minors((rows, cols) in arb_matrix(6, 20)) {
        let a = matrix(&rows, cols);
        let sf = smith_normal_form(&a);
        prop_assert!(check_smith(&a, &sf).is_ok(), "{:?}", check_smith(&a, &sf));
    }

    #[test]
    fn diagonal_only_agrees((rows, cols) in arb_matrix(5, 9)) {
        let a = matrix(&rows, cols);
        prop_assert_eq!(smith_diagonal(&a), smith_normal_form(&a).s.diagonal());
    }

    #[test]
    fn transpose_has_same_factors((rows, cols) in arb_matrix(5, 9)) {
        let a = matrix(&rows, cols);
        let f = smith_normal_form(&a).invariant_factors();
        prop_assert_eq!(f, smith_normal_form(&a.transpose()).invariant_factors());
    }

    #[test]
    fn quotient_order_is_product_of_factors((rows, cols) in arb_matrix(4, 6)) {
        let a = matrix(&rows, cols);
        let q = present_quotient(cols, &a).unwrap();
        let expect = invariant_factors_by_minors(&to_big(&a), cols);
        prop_assert_eq!(q.free_rank(), cols - expect.len());
        let torsion: Vec<BigInt> = expect.into_iter().filter(|d| *d > BigInt::from(1)).collect();
        prop_assert_eq!(q.torsion(), torsion);
    }

    #[test]
    fn reduction_kills_relations((rows, cols) in arb_matrix(4, 6), pick in 0usize..4) {
        let a = matrix(&rows, cols);
        let q = present_quotient(cols, &a).unwrap();
        let r = a.row(pick % a.rows()).to_vec();
        prop_assert!(q.reduce_element(&r).unwrap().is_zero());
    }

    #[test]
    fn reduce_lift_round_trip((rows, cols) in arb_matrix(4, 6), x in prop::collection::vec(-30i64..=30, 6)) {
        let a = matrix(&rows, cols);
        let q = present_quotient(cols, &a).unwrap();
        let v: Vec<BigInt> = x[..cols].iter().map(|&t| BigInt::from(t)).collect();
        let class = q.reduce_element(&v).unwrap();
        let again = q.reduce_element(&q.lift(&class).unwrap()).unwrap();
        prop_assert_eq!(class, again);
    }
}

#[test]
fn textbook_cases() {
    let a = matrix(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
    assert_eq!(common::big(&smith_diagonal(&a)), vec![2, 6, 12]);
    let z = IntMatrix::zeros(3, 2);
    assert!(check_smith(&z, &smith_normal_form(&z)).is_ok());
    let q = present_quotient(2, &matrix(&[vec![2, 0], vec![0, 3]], 2)).unwrap();
    assert_eq!(q.to_string(), "Z/6");
}
