use proptest::prelude::*;

use eqbir::atom_ledger::AtomRecord;
use eqbir::blowup::{fuzz_sequence, FuzzOptions};
use eqbir::exact_algebra::LaurentPoly;
use eqbir::fixed_locus::{
    Configuration, CurveComponent, NormalWeights, PointComponent, SurfaceComponent, TAG_PLANE,
    TAG_RULED,
};
use eqbir::invariants::{evaluate, InvariantKind};

/// `J` term by term, with `+` = 1 and `-` = 2 mod 3.
fn j_oracle(c: &Configuration) -> i64 {
    let sign = |w: i64| if w.rem_euclid(3) == 1 { '+' } else { '-' };
    let mut total = 0;
    for pt in &c.points {
        let mut s: Vec<char> = pt.weights.iter().map(|&w| sign(w)).collect();
        s.sort();
        let s: String = s.into_iter().collect();
        if s == "++-" || s == "+--" {
            total += 1;
        }
    }
    for cv in &c.curves {
        let g = i64::from(cv.genus);
        let v = cv.weights.values();
        total += if sign(v[0]) == sign(v[1]) {
            1 - g + cv.d
        } else {
            2 - 2 * g + cv.d
        };
    }
    for s in &c.surfaces {
        total += 3 - 3 * i64::from(s.ruling_genus) - s.k_dot_n;
    }
    total
}

fn k_oracle(c: &Configuration) -> i64 {
    let mut total = c.points.len() as i64;
    for cv in &c.curves {
        total += 2 - 2 * i64::from(cv.genus) + cv.d;
    }
    for s in &c.surfaces {
        total += 4 - 4 * i64::from(s.ruling_genus) - s.k_dot_n;
    }
    total
}

#[test]
fn j_single_components_exhaustive() {
    for a in 1..=2 {
        for b in 1..=2 {
            for e in 1..=2 {
                let mut c = Configuration::empty(3, 3);
                c.points.push(PointComponent::new(vec![a, b, e]));
                assert_eq!(evaluate(&c, &InvariantKind::J).unwrap().value, j_oracle(&c));
            }
            for g in 0..=4 {
                for d in -6..=6 {
                    let mut c = Configuration::empty(3, 3);
                    c.curves
                        .push(CurveComponent::new(g, NormalWeights::Pair(a, b), d));
                    assert_eq!(evaluate(&c, &InvariantKind::J).unwrap().value, j_oracle(&c));
                }
            }
        }
        for g in 0..=3 {
            for ksn in -6..=6 {
                let mut c = Configuration::empty(3, 3);
                c.surfaces.push(SurfaceComponent::new(a, g, ksn, TAG_RULED));
                assert_eq!(evaluate(&c, &InvariantKind::J).unwrap().value, j_oracle(&c));
            }
        }
    }
}

#[test]
fn k_single_components_exhaustive() {
    let mut c = Configuration::empty(2, 3);
    c.points.push(PointComponent::new(vec![1, 1, 1]));
    assert_eq!(evaluate(&c, &InvariantKind::K).unwrap().value, 1);
    for g in 0..=4 {
        for d in -6..=6 {
            let mut c = Configuration::empty(2, 3);
            c.curves
                .push(CurveComponent::new(g, NormalWeights::Pair(1, 1), d));
            assert_eq!(evaluate(&c, &InvariantKind::K).unwrap().value, k_oracle(&c));
            let mut c = Configuration::empty(2, 3);
            c.surfaces.push(SurfaceComponent::new(1, g, d, TAG_RULED));
            assert_eq!(evaluate(&c, &InvariantKind::K).unwrap().value, k_oracle(&c));
        }
    }
}

fn arb_threefold(p: u32) -> impl Strategy<Value = Configuration> {
    let w = 1..i64::from(p);
    (
        prop::collection::vec(prop::collection::vec(w.clone(), 3), 0..4),
        prop::collection::vec((0u32..=3, w.clone(), w.clone(), -4i64..=4), 0..3),
        prop::collection::vec((w, 0u32..=2, -4i64..=4, any::<bool>()), 0..2),
        prop::collection::vec(0u32..=3, 0..2),
    )
        .prop_map(move |(points, curves, surfaces, atoms)| {
            let mut c = Configuration::empty(p, 3);
            for w in points {
                c.points.push(PointComponent::new(w));
            }
            for (g, a, b, d) in curves {
                c.curves
                    .push(CurveComponent::new(g, NormalWeights::Pair(a, b), d));
            }
            for (w, g, ksn, ruled) in surfaces {
                let (g, tag) = if ruled {
                    (g, TAG_RULED)
                } else {
                    (0, TAG_PLANE)
                };
                c.surfaces.push(SurfaceComponent::new(w, g, ksn, tag));
            }
            for g in atoms {
                c.atoms.push(if g == 0 {
                    AtomRecord::trivial_point()
                } else {
                    AtomRecord::trivial_curve(g, None)
                });
            }
            c.canonical()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_round_trip(c in arb_threefold(5)) {
        let back = Configuration::from_json(&c.to_json()).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn j_matches_oracle(c in arb_threefold(3)) {
        prop_assert_eq!(evaluate(&c, &InvariantKind::J).unwrap().value, j_oracle(&c));
    }

    #[test]
    fn invariants_add_over_disjoint_union(a in arb_threefold(3), b in arb_threefold(3)) {
        let u = a.disjoint_union(&b).unwrap().canonical();
        for kind in [InvariantKind::J, InvariantKind::Combined(2), InvariantKind::Combined(3)] {
            let sum = evaluate(&a, &kind).unwrap().value + evaluate(&b, &kind).unwrap().value;
            prop_assert_eq!(evaluate(&u, &kind).unwrap().value, sum);
        }
    }

    #[test]
    fn fuzzing_never_drifts(c in arb_threefold(3), seed in any::<u64>()) {
        let checks = vec![
            InvariantKind::J,
            InvariantKind::Combined(2),
            InvariantKind::Combined(3),
            InvariantKind::Beta,
        ];
        let r = fuzz_sequence(&c, &FuzzOptions::new(15, seed, checks)).unwrap();
        prop_assert!(r.drift.is_none(), "{:?}", r.drift);
        prop_assert_eq!(r.steps_run, 15);
    }

    #[test]
    fn fuzzing_involutions_never_drifts(c in arb_threefold(2), seed in any::<u64>()) {
        let r = fuzz_sequence(&c, &FuzzOptions::new(15, seed, vec![InvariantKind::K, InvariantKind::Beta])).unwrap();
        prop_assert!(r.drift.is_none(), "{:?}", r.drift);
    }

    #[test]
    fn laurent_ring_laws(
        a in prop::collection::vec((-3i64..=3, -5i64..=5), 0..4),
        b in prop::collection::vec((-3i64..=3, -5i64..=5), 0..4),
        c in prop::collection::vec((-3i64..=3, -5i64..=5), 0..4),
    ) {
        let (a, b, c) = (
            LaurentPoly::from_terms(a),
            LaurentPoly::from_terms(b),
            LaurentPoly::from_terms(c),
        );
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        for e in -6..=6 {
            prop_assert_eq!((&a + &b).coeff(e), a.coeff(e) + b.coeff(e));
        }
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&json).unwrap(), a);
    }
}
