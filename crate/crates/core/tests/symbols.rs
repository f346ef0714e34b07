mod common;

use proptest::prelude::*;

use common::{
    blowup_relation_terms, cyclic_symbol_module, parse_structure, quotient_dim_mod, totient,
};
use eqbir::symbol_groups::{
    build_presentation, class_of, enumerate_generators, parse_formal_sum, relation_b_expand,
    DualGroup, FormalSymbolSum, Presentation, Symbol, DEFAULT_BUDGET,
};

const LARGE_PRIME: i64 = 1_000_000_007;

fn pres(m: i64, n: usize) -> Presentation {
    build_presentation(&DualGroup::cyclic(m).unwrap(), n, DEFAULT_BUDGET).unwrap()
}

fn torsion_divisible_by(structure: &str, l: i64) -> usize {
    let (_, torsion) = parse_structure(structure);
    torsion
        .iter()
        .filter(|(&d, _)| d % l == 0)
        .map(|(_, &k)| k)
        .sum()
}

/// Free rank and `l`-ranks against a presentation built from scratch.
fn check_against_definition(m: i64, n: usize) {
    let p = pres(m, n);
    let (gens, rows) = cyclic_symbol_module(m, n);
    assert_eq!(p.generators.len(), gens.len(), "B_{n}(Z/{m}) generators");
    let shown = p.structure.to_string();
    let (rank, _) = parse_structure(&shown);
    assert_eq!(
        rank,
        quotient_dim_mod(gens.len(), &rows, LARGE_PRIME),
        "B_{n}(Z/{m}) rank"
    );
    for l in [2, 3, 5, 7, 11, 13] {
        assert_eq!(
            rank + torsion_divisible_by(&shown, l),
            quotient_dim_mod(gens.len(), &rows, l),
            "B_{n}(Z/{m}) = {shown}, l = {l}"
        );
    }
}

#[test]
fn rank_two_modules_match_definition() {
    for m in 2..=16 {
        check_against_definition(m, 2);
    }
}

#[test]
fn rank_three_modules_match_definition() {
    for m in 2..=7 {
        check_against_definition(m, 3);
    }
}

#[test]
fn rank_one_law() {
    for m in 2..=30 {
        let s = pres(m, 1).structure;
        assert_eq!(s.free_rank(), totient(m), "m = {m}");
        assert!(s.torsion().is_empty());
    }
    let klein = DualGroup::new(vec![2, 2]).unwrap();
    assert!(build_presentation(&klein, 1, DEFAULT_BUDGET)
        .unwrap()
        .structure
        .is_trivial());
}

#[test]
fn product_groups_need_enough_entries() {
    let klein = DualGroup::new(vec![2, 2]).unwrap();
    let gens = enumerate_generators(&klein, 2, DEFAULT_BUDGET).unwrap();
    // two distinct nonzero characters
    assert_eq!(gens.len(), 3);
}

#[test]
fn parsed_sums_reduce() {
    let g = DualGroup::cyclic(6).unwrap();
    let p = pres(6, 2);
    let a = parse_formal_sum("[1,2] - [1,1] - [1,2]", &g).unwrap();
    let b = parse_formal_sum("-[1,1]", &g).unwrap();
    assert_eq!(class_of(&a, &p).unwrap(), class_of(&b, &p).unwrap());
    assert!(class_of(&parse_formal_sum("0", &g).unwrap(), &p)
        .unwrap()
        .is_zero());
}

fn arb_symbol(m: i64, n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..m, n).prop_filter("generating", move |v| {
        v.iter().fold(m, |g, &x| num_integer::gcd(g, x)) == 1
    })
}

fn arb_case() -> impl Strategy<Value = (i64, Vec<i64>, Vec<usize>)> {
    (2i64..=7).prop_flat_map(|m| {
        (
            Just(m),
            arb_symbol(m, 3),
            prop::sample::subsequence(vec![0usize, 1, 2], 2..=3),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn expansion_matches_definition((m, v, block) in arb_case()) {
        let g = DualGroup::cyclic(m).unwrap();
        let s = Symbol::cyclic(&g, &v).unwrap();
        // positions refer to the sorted entries
        let sorted: Vec<i64> = s.entries().iter().map(|c| c.components()[0]).collect();
        let got = relation_b_expand(&g, &s, &block).unwrap();
        let mut want = FormalSymbolSum::new();
        for t in blowup_relation_terms(m, &sorted, &block) {
            want.add(Symbol::cyclic(&g, &t).unwrap(), 1);
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn relations_vanish((m, v, block) in arb_case()) {
        let g = DualGroup::cyclic(m).unwrap();
        let p = pres(m, 3);
        let s = Symbol::cyclic(&g, &v).unwrap();
        let mut rel = relation_b_expand(&g, &s, &block).unwrap();
        rel.add(s, -1);
        prop_assert!(class_of(&rel, &p).unwrap().is_zero());
    }

    #[test]
    fn order_of_entries_is_irrelevant(v in arb_symbol(7, 3), shift in 0usize..3) {
        let g = DualGroup::cyclic(7).unwrap();
        let mut w = v.clone();
        w.rotate_left(shift);
        w.swap(0, 2);
        prop_assert_eq!(Symbol::cyclic(&g, &v).unwrap(), Symbol::cyclic(&g, &w).unwrap());
    }

    #[test]
    fn reduction_is_idempotent(coeffs in prop::collection::vec(-5i64..=5, 4), m in 5i64..=9) {
        let p = pres(m, 2);
        let mut sum = FormalSymbolSum::new();
        for (i, &c) in coeffs.iter().enumerate() {
            sum.add(p.generators[i % p.generators.len()].clone(), c);
        }
        let class = class_of(&sum, &p).unwrap();
        let lifted = p.structure.lift(&class).unwrap();
        let mut again = FormalSymbolSum::new();
        for (j, x) in lifted.iter().enumerate() {
            again.add(p.generators[j].clone(), i64::try_from(x.clone()).unwrap());
        }
        prop_assert_eq!(class_of(&again, &p).unwrap(), class);
    }

    #[test]
    fn class_is_additive(a in prop::collection::vec(-4i64..=4, 6), b in prop::collection::vec(-4i64..=4, 6)) {
        let p = pres(10, 2);
        let build = |c: &[i64]| {
            let mut s = FormalSymbolSum::new();
            for (i, &x) in c.iter().enumerate() {
                s.add(p.generators[(i * 5) % p.generators.len()].clone(), x);
            }
            s
        };
        let (sa, sb) = (build(&a), build(&b));
        let mut sum = sa.clone();
        sum.add_sum(&sb, 1);
        let lhs = class_of(&sum, &p).unwrap();
        let rhs = p
            .structure
            .add(&class_of(&sa, &p).unwrap(), &class_of(&sb, &p).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
