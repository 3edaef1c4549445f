mod common;

use std::collections::BTreeSet;

use monideal::*;
use proptest::prelude::*;

const NAMES: [&str; 3] = ["x", "y", "z"];

fn ring(n: usize) -> Ring {
    Ring::new(NAMES[..n].iter().copied()).unwrap()
}

/// A ring with one to three variables and a proper nonzero ideal in it.
fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u64..=4, n), 1..=4).prop_filter_map(
            "needs a non-unit generator",
            move |gens| {
                let gens: Vec<_> = gens.into_iter().filter(|g| g.iter().any(|&e| e > 0)).collect();
                (!gens.is_empty()).then(|| common::ideal(&ring(n), &gens))
            },
        )
    })
}

fn arb_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=3).prop_flat_map(|n| {
        let side = move || {
            prop::collection::vec(prop::collection::vec(0u64..=4, n), 1..=4)
                .prop_map(move |g| common::ideal(&ring(n), &g))
        };
        (side(), side())
    })
}

fn is_canonical(i: &MonomialIdeal) -> bool {
    let g = i.generators();
    let sorted = g.windows(2).all(|w| w[0] < w[1]);
    let antichain = g.iter().all(|a| g.iter().all(|b| a == b || !a.divides(b)));
    sorted && antichain
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn results_are_canonical((i, j) in arb_pair()) {
        for r in [i.sum(&j).unwrap(), i.product(&j).unwrap(), i.intersect(&j).unwrap(), i.radical()] {
            prop_assert!(is_canonical(&r));
        }
        if !j.is_zero() {
            prop_assert!(is_canonical(&i.colon(&j).unwrap()));
        }
    }

    #[test]
    fn minimalize_ignores_order_and_duplicates(i in arb_ideal(), seed in any::<u64>()) {
        let mut gens = i.generators().to_vec();
        gens.extend(i.generators().iter().cloned());
        let k = (seed as usize) % gens.len();
        gens.rotate_left(k);
        gens.reverse();
        prop_assert_eq!(MonomialIdeal::minimalize(i.ring(), gens).unwrap(), i);
    }

    #[test]
    fn powers_multiply(i in arb_ideal(), a in 0u32..=3, b in 0u32..=3) {
        let lhs = i.power(a).unwrap().product(&i.power(b).unwrap()).unwrap();
        prop_assert_eq!(lhs, i.power(a + b).unwrap());
    }

    #[test]
    fn power_matches_naive(i in arb_ideal(), s in 0u32..=4) {
        prop_assert_eq!(common::gens_set(&i.power(s).unwrap()), common::power(&i, s));
    }

    #[test]
    fn lower_power_sits_in_colon(i in arb_ideal(), l in 1u32..=4) {
        let colon = i.power(l).unwrap().colon(&i).unwrap();
        prop_assert!(colon.contains(&i.power(l - 1).unwrap()).unwrap());
    }

    #[test]
    fn sum_product_intersection_laws((i, j) in arb_pair()) {
        prop_assert_eq!(i.sum(&j).unwrap(), j.sum(&i).unwrap());
        prop_assert_eq!(i.product(&j).unwrap(), j.product(&i).unwrap());
        prop_assert_eq!(i.intersect(&j).unwrap(), j.intersect(&i).unwrap());
        let meet = i.intersect(&j).unwrap();
        prop_assert!(i.contains(&meet).unwrap() && j.contains(&meet).unwrap());
        prop_assert!(meet.contains(&i.product(&j).unwrap()).unwrap());
        prop_assert_eq!(i.sum(&i).unwrap(), i.clone());
        prop_assert_eq!(i.intersect(&i).unwrap(), i);
    }

    #[test]
    fn associativity((i, j) in arb_pair(), k in 0usize..3) {
        // a third ideal derived from the pair keeps the ring shared
        let third = match k { 0 => i.radical(), 1 => i.sum(&j).unwrap(), _ => j.power(2).unwrap() };
        prop_assert_eq!(i.sum(&j).unwrap().sum(&third).unwrap(), i.sum(&j.sum(&third).unwrap()).unwrap());
        prop_assert_eq!(i.product(&j).unwrap().product(&third).unwrap(), i.product(&j.product(&third).unwrap()).unwrap());
        prop_assert_eq!(
            i.intersect(&j).unwrap().intersect(&third).unwrap(),
            i.intersect(&j.intersect(&third).unwrap()).unwrap()
        );
    }

    #[test]
    fn colon_matches_oracle((i, j) in arb_pair()) {
        prop_assume!(!j.is_zero());
        prop_assert_eq!(common::gens_set(&i.colon(&j).unwrap()), common::colon(&i, &j));
    }

    #[test]
    fn intersection_matches_oracle((i, j) in arb_pair()) {
        prop_assume!(!i.is_zero() && !j.is_zero());
        prop_assert_eq!(common::gens_set(&i.intersect(&j).unwrap()), common::intersect(&i, &j));
    }

    #[test]
    fn decomposition_recomposes_irredundantly(i in arb_ideal()) {
        let d = irreducible_decomposition(&i).unwrap();
        prop_assert_eq!(d.recompose().unwrap(), i.clone());
        let comps: Vec<MonomialIdeal> = d.components().iter().map(|c| c.to_ideal()).collect();
        for k in 0..comps.len() {
            let mut rest = MonomialIdeal::unit(i.ring());
            for (l, c) in comps.iter().enumerate() {
                if l != k {
                    rest = rest.intersect(c).unwrap();
                }
            }
            prop_assert_ne!(&rest, &i, "component {} is redundant", k);
        }
    }

    #[test]
    fn associated_primes_match_oracle(i in arb_ideal()) {
        prop_assert_eq!(common::prime_vars(&associated_primes(&i).unwrap()), common::associated_primes(&i));
    }

    #[test]
    fn minimal_primes_inside_ass(i in arb_ideal()) {
        let ass = associated_primes(&i).unwrap();
        let min = minimal_primes(&i).unwrap();
        prop_assert!(min.is_subset(&ass));
        for p in &min {
            prop_assert!(!ass.iter().any(|q| q != p && q.is_subset(p)));
        }
        // the radical is the intersection of the minimal primes
        let mut meet = MonomialIdeal::unit(i.ring());
        for p in &min {
            meet = meet.intersect(&p.to_ideal()).unwrap();
        }
        prop_assert_eq!(meet, i.radical());
    }

    #[test]
    fn ass_of_sum_in_disjoint_variables(gi in prop::collection::vec(prop::collection::vec(0u64..=3, 2), 1..=3),
                                        gj in prop::collection::vec(1u64..=4, 1..=2)) {
        // I in x,y and J in z alone: Ass(I+J) = {p + q}
        let r = ring(3);
        let lift: Vec<Vec<u64>> = gi.iter().filter(|g| g.iter().any(|&e| e > 0)).map(|g| vec![g[0], g[1], 0]).collect();
        prop_assume!(!lift.is_empty());
        let i = common::ideal(&r, &lift);
        let j = common::ideal(&r, &gj.iter().map(|&e| vec![0, 0, e]).collect::<Vec<_>>());
        let expected: BTreeSet<Vec<usize>> = associated_primes(&i).unwrap()
            .iter()
            .map(|p| { let mut v = p.vars().to_vec(); v.push(2); v })
            .collect();
        prop_assert_eq!(common::prime_vars(&associated_primes(&i.sum(&j).unwrap()).unwrap()), expected);
    }

    #[test]
    fn text_round_trip(i in arb_ideal()) {
        prop_assert_eq!(parse_ideal(&i.to_string(), i.ring()).unwrap(), i.clone());
        prop_assert_eq!(ideal_from_json(&ideal_to_json(&i)).unwrap(), i);
    }

    #[test]
    fn parser_never_panics(text in "[xyz0-9^*,() ]{0,24}") {
        let _ = parse_ideal(&text, &ring(3));
        let _ = parse_prime(&text, &ring(3));
        let _ = parse_ring(&text);
    }
}

#[test]
fn overflow_is_reported() {
    let r = ring(1);
    let big = parse_ideal("x^9223372036854775807", &r).unwrap();
    assert!(matches!(big.power(3), Err(Error::Overflow(_))));
    assert!(matches!(big.product(&big).unwrap().product(&big), Err(Error::Overflow(_))));
}

#[test]
fn support_of_ass_is_support_of_generators() {
    let r = ring(3);
    for text in ["x^2*y, y^3*z", "x*y*z", "x^3, y^3, x*y*z^2", "y^2"] {
        let i = parse_ideal(text, &r).unwrap();
        let union: BTreeSet<usize> = associated_primes(&i).unwrap().iter().flat_map(|p| p.vars().to_vec()).collect();
        assert_eq!(union, i.support(), "{text}");
    }
}
