mod common;

use proptest::prelude::*;

use common::brute_feasible;
use eqbir::atom_ledger::{feasibility, AtomError, Verdict};

fn arb_basis() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(
        prop::collection::vec(0i64..=4, 2).prop_filter("nonzero", |v| v.iter().any(|&x| x > 0)),
        1..=4,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn agrees_with_enumeration(basis in arb_basis(), forced in prop::collection::vec(0u64..=2, 4)) {
        let lower: Vec<u64> = forced[..basis.len()].to_vec();
        let pairs: Vec<(usize, u64)> = lower.iter().copied().enumerate().collect();
        for t0 in 0..=12 {
            for t1 in 0..=12 {
                let target = [t0, t1];
                let r = feasibility(&target, &basis, &pairs).unwrap();
                let want = brute_feasible(&target, &basis, &lower, 12);
                prop_assert_eq!(&r.witness, &want, "target {:?} basis {:?}", target, basis);
                prop_assert_eq!(r.verdict == Verdict::Feasible, want.is_some());
                if want.is_none() {
                    prop_assert!(r.certificate.is_some());
                }
            }
        }
    }
}

#[test]
fn lambda_zero_block() {
    let r = feasibility(&[3, 1], &[vec![1, 1], vec![2, 1]], &[]).unwrap();
    assert_eq!(r.verdict, Verdict::Infeasible);
    let r = feasibility(&[2, 1], &[vec![1, 1], vec![2, 1]], &[]).unwrap();
    assert_eq!(r.witness, Some(vec![0, 1]));
}

#[test]
fn malformed_inputs() {
    assert_eq!(
        feasibility(&[1], &[], &[]).unwrap_err(),
        AtomError::EmptyBasis
    );
    assert!(feasibility(&[1, 1], &[vec![1]], &[]).is_err());
    assert!(feasibility(&[1], &[vec![0]], &[]).is_err());
    assert!(feasibility(&[1], &[vec![-1]], &[]).is_err());
    assert!(feasibility(&[1], &[vec![1]], &[(3, 1)]).is_err());
}
