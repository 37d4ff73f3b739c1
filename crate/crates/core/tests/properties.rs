use proptest::prelude::*;

use frobring::codes::{
    exhaustive_extension_oracle, extend_to_monomial, hamming_weight, span_code,
    weight_preserving_homs, HomBudget, MonomialTransform,
};
use frobring::duality::{cyclotomic, DualModule, RootSum, QZ};
use frobring::group::AdditiveGroup;
use frobring::{build_ring, standard_catalog, Elem, FiniteRing};

fn catalog_ring(max_order: usize) -> impl Strategy<Value = FiniteRing> {
    let rings: Vec<FiniteRing> = standard_catalog()
        .into_iter()
        .map(|e| build_ring(&e.expr).unwrap())
        .filter(|r| r.order() <= max_order)
        .collect();
    proptest::sample::select(rings)
}

fn qz() -> impl Strategy<Value = QZ> {
    (1u64..60).prop_flat_map(|d| (0..d).prop_map(move |n| QZ::new(n, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monomial_maps_preserve_weight(
        ring in catalog_ring(64),
        seeds in proptest::collection::vec(any::<u32>(), 1..7),
        perm in any::<proptest::sample::Index>(),
    ) {
        let n = seeds.len();
        let x: Vec<Elem> = seeds.iter().map(|s| s % ring.order() as u32).collect();
        let units: Vec<Elem> = seeds
            .iter()
            .map(|s| ring.units()[(*s as usize / 7) % ring.units().len()])
            .collect();
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.rotate_left(perm.index(n));
        let t = MonomialTransform::new(&ring, sigma, units).unwrap();
        prop_assert_eq!(hamming_weight(&ring, &t.apply(&ring, &x)), hamming_weight(&ring, &x));
    }

    #[test]
    fn qz_is_an_abelian_group(a in qz(), b in qz(), c in qz()) {
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a + QZ::ZERO, a);
        prop_assert_eq!(a - a, QZ::ZERO);
        prop_assert_eq!(a.times(3), a + a + a);
    }

    #[test]
    fn qz_division_inverts_multiplication(a in qz(), k in 1u64..20) {
        prop_assert_eq!(a.least_divisor_solution(k).times(k), a);
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<QZ>(&json).unwrap(), a);
    }

    #[test]
    fn multiples_of_the_cyclotomic_polynomial_vanish(
        n in 1u64..40,
        q in proptest::collection::vec(-5i64..5, 1..6),
    ) {
        let phi = cyclotomic(n);
        let mut sum = RootSum::zero(n);
        for (i, &qi) in q.iter().enumerate() {
            for (j, &pj) in phi.iter().enumerate() {
                sum.add_root((i + j) as u64, qi * pj);
            }
        }
        prop_assert!(sum.is_zero());
        if n > 1 {
            // a single root of unity is never zero
            let mut one = RootSum::zero(n);
            one.add_root(q.len() as u64, 1);
            prop_assert!(!one.is_zero());
        }
    }

    #[test]
    fn gamma_and_delta_are_inverse(ring in catalog_ring(36), gens in proptest::collection::vec(any::<u32>(), 0..3)) {
        let gens: Vec<Elem> = gens.iter().map(|g| g % ring.order() as u32).collect();
        let a = AdditiveGroup::of_ring(&ring).closure(&gens);
        let dual = DualModule::new(&ring).unwrap();
        let g = dual.gamma(&ring, &a).unwrap();
        prop_assert_eq!(g.len() * a.len(), ring.order());
        prop_assert_eq!(dual.delta(&g).unwrap(), a);
    }

    #[test]
    fn extension_matches_oracle_on_random_codes(
        ring in catalog_ring(16),
        n in 1usize..=2,
        raw in proptest::collection::vec(any::<u32>(), 1..5),
        pick in any::<proptest::sample::Index>(),
    ) {
        let gens: Vec<Vec<Elem>> = raw
            .chunks(n)
            .filter(|c| c.len() == n)
            .map(|c| c.iter().map(|v| v % ring.order() as u32).collect())
            .collect();
        let code = span_code(&ring, n, &gens, 64);
        prop_assume!(code.is_ok());
        let code = code.unwrap();
        let mut budget = HomBudget::new(1_000_000);
        let homs = weight_preserving_homs(&ring, &code, &mut budget).unwrap();
        prop_assume!(!homs.is_empty());
        let phi = &homs[pick.index(homs.len())];
        let fast = extend_to_monomial(&ring, phi).unwrap();
        let slow = exhaustive_extension_oracle(&ring, phi, 1_000_000).unwrap();
        prop_assert_eq!(fast.is_some(), slow.is_some());
        if let Some(t) = fast {
            prop_assert!(t.restricts_to(&ring, phi));
        }
    }

    #[test]
    fn opposite_is_an_involution(ring in catalog_ring(64)) {
        let back = ring.opposite().opposite();
        prop_assert_eq!(back.mul_table(), ring.mul_table());
        prop_assert!(ring.opposite().validate().is_ok());
    }
}
