//! Library results compared with independent brute force.

use frobring::codes::{
    enumerate_codes, exhaustive_extension_oracle, extend_to_monomial, hamming_weight,
    weight_preserving_homs, Code, HomBudget,
};
use frobring::decomp::{classify, is_primitive, principal_decomposition};
use frobring::duality::{scan_torsion_free_character, DualModule};
use frobring::ideal::{
    left_ideals, minimal_left_ideals, radical, radical_by_maximal_ideals,
    socle_by_radical_annihilator, socle_left,
};
use frobring::injective::{is_pseudo_injective_left, InjectivityCaps};
use frobring::{build_ring, standard_catalog, Elem, FiniteRing, RingExpr};

fn small_catalog(max_order: usize) -> Vec<(&'static str, FiniteRing)> {
    standard_catalog()
        .into_iter()
        .map(|e| (e.name, build_ring(&e.expr).unwrap()))
        .filter(|(_, r)| r.order() <= max_order)
        .collect()
}

#[test]
fn units_match_two_sided_inverse_scan() {
    for (name, r) in small_catalog(64) {
        let brute: Vec<Elem> = r
            .elements()
            .filter(|&x| {
                r.elements()
                    .any(|y| r.mul(x, y) == r.one() && r.mul(y, x) == r.one())
            })
            .collect();
        assert_eq!(r.units(), brute.as_slice(), "{name}");
    }
}

#[test]
fn radical_agrees_with_maximal_ideal_intersection() {
    for (name, r) in small_catalog(64) {
        let rad = radical(&r);
        let oracle = radical_by_maximal_ideals(&r, 100_000).unwrap();
        assert_eq!(rad.elements(), oracle.as_slice(), "{name}");
    }
}

#[test]
fn socle_is_annihilator_of_radical() {
    for (name, r) in small_catalog(64) {
        assert_eq!(
            socle_left(&r).ideal.elements(),
            socle_by_radical_annihilator(&r).as_slice(),
            "{name}"
        );
    }
}

#[test]
fn minimal_ideals_are_minimal_in_the_full_lattice() {
    for (name, r) in small_catalog(32) {
        let all = left_ideals(&r, 100_000).unwrap();
        let nonzero: Vec<_> = all.iter().filter(|i| !i.is_zero()).collect();
        let mut brute: Vec<Vec<Elem>> = nonzero
            .iter()
            .filter(|i| {
                !nonzero
                    .iter()
                    .any(|j| j.len() < i.len() && j.is_subset_of(i))
            })
            .map(|i| i.elements().to_vec())
            .collect();
        brute.sort();
        let mut got: Vec<Vec<Elem>> = minimal_left_ideals(&r)
            .iter()
            .map(|i| i.elements().to_vec())
            .collect();
        got.sort();
        assert_eq!(got, brute, "{name}");
    }
}

#[test]
fn decomposition_idempotents_are_primitive_orthogonal_and_sum_to_one() {
    for (name, r) in small_catalog(64) {
        let dec = principal_decomposition(&r);
        assert!(dec.verify(&r), "{name}");
        let es = &dec.idempotents;
        let total = es.iter().fold(r.zero(), |acc, &e| r.add(acc, e));
        assert_eq!(total, r.one(), "{name}");
        for (i, &e) in es.iter().enumerate() {
            assert!(is_primitive(&r, e), "{name}");
            for (j, &f) in es.iter().enumerate() {
                if i != j {
                    assert_eq!(r.mul(e, f), r.zero(), "{name}");
                }
            }
        }
    }
}

/// A finite ring is Frobenius exactly when it carries a character whose
/// kernel holds no nonzero left ideal; the scan visits every character.
#[test]
fn frobenius_verdict_matches_character_scan() {
    for (name, r) in small_catalog(64) {
        let c = classify(&r).unwrap();
        let dual = DualModule::new(&r).unwrap();
        assert_eq!(
            c.frobenius,
            scan_torsion_free_character(&r, &dual).is_some(),
            "{name}"
        );
    }
}

/// Every function `I → R` checked for additivity and `R`-linearity.
fn brute_pseudo_injective(r: &FiniteRing) -> bool {
    let ideals = left_ideals(r, 10_000).unwrap();
    // maps out of R itself are x ↦ x·f(1), so only proper ideals are scanned
    for ideal in ideals.iter().filter(|i| i.len() < r.order()) {
        let xs = ideal.elements();
        let pos = |x: Elem| xs.binary_search(&x).unwrap();
        let total = (r.order() as u64).pow(xs.len() as u32);
        for code in 0..total {
            let mut c = code;
            let f: Vec<Elem> = xs
                .iter()
                .map(|_| {
                    let v = (c % r.order() as u64) as Elem;
                    c /= r.order() as u64;
                    v
                })
                .collect();
            let linear = xs.iter().all(|&a| {
                xs.iter()
                    .all(|&b| f[pos(r.add(a, b))] == r.add(f[pos(a)], f[pos(b)]))
                    && r.elements()
                        .all(|s| f[pos(r.mul(s, a))] == r.mul(s, f[pos(a)]))
            });
            let mut image = f.clone();
            image.sort_unstable();
            image.dedup();
            if !linear || image.len() != f.len() {
                continue;
            }
            let is_mult = r
                .elements()
                .any(|a| xs.iter().enumerate().all(|(i, &x)| r.mul(x, a) == f[i]));
            if !is_mult {
                return false;
            }
        }
    }
    true
}

#[test]
fn pseudo_injectivity_matches_function_scan() {
    for (name, r) in small_catalog(8) {
        let got = is_pseudo_injective_left(&r, InjectivityCaps::default()).unwrap();
        assert_eq!(got.holds(), brute_pseudo_injective(&r), "{name}");
    }
}

/// All additive, weight-preserving, `R`-linear injections `M → R^n` found by
/// scanning every function on `M`.
fn brute_weight_preserving(r: &FiniteRing, m: &Code) -> usize {
    let n = m.length();
    let words: Vec<Vec<Elem>> = (0..(r.order() as u64).pow(n as u32))
        .map(|mut c| {
            (0..n)
                .map(|_| {
                    let v = (c % r.order() as u64) as Elem;
                    c /= r.order() as u64;
                    v
                })
                .collect()
        })
        .collect();
    let xs = m.elements();
    let total = (words.len() as u64).pow(xs.len() as u32);
    let pos = |x: &[Elem]| m.index_of(x).unwrap();
    let add = |a: &[Elem], b: &[Elem]| -> Vec<Elem> {
        a.iter().zip(b).map(|(&p, &q)| r.add(p, q)).collect()
    };
    let scale = |s: Elem, a: &[Elem]| -> Vec<Elem> { a.iter().map(|&p| r.mul(s, p)).collect() };
    let mut count = 0;
    for code in 0..total {
        let mut c = code;
        let f: Vec<&Vec<Elem>> = xs
            .iter()
            .map(|_| {
                let w = &words[(c % words.len() as u64) as usize];
                c /= words.len() as u64;
                w
            })
            .collect();
        let ok = xs.iter().enumerate().all(|(i, x)| {
            hamming_weight(r, x) == hamming_weight(r, f[i])
                && xs
                    .iter()
                    .enumerate()
                    .all(|(j, y)| *f[pos(&add(x, y))] == add(f[i], f[j]))
                && r.elements()
                    .all(|s| *f[pos(&scale(s, x))] == scale(s, f[i]))
        });
        if ok {
            count += 1;
        }
    }
    count
}

#[test]
fn weight_preserving_homs_match_function_scan() {
    for expr in [
        RingExpr::zmod(4),
        RingExpr::zmod(3),
        RingExpr::product(vec![RingExpr::zmod(2), RingExpr::zmod(2)]),
    ] {
        let r = build_ring(&expr).unwrap();
        for n in 1..=2 {
            for m in enumerate_codes(&r, n, 4, 1000).unwrap() {
                let mut budget = HomBudget::new(1_000_000);
                let homs = weight_preserving_homs(&r, &m, &mut budget).unwrap();
                assert_eq!(
                    homs.len(),
                    brute_weight_preserving(&r, &m),
                    "{} {m:?}",
                    r.name()
                );
            }
        }
    }
}

#[test]
fn extension_agrees_with_oracle_on_small_rings() {
    for (name, r) in small_catalog(9) {
        for n in 1..=2 {
            for m in enumerate_codes(&r, n, 16, 10_000).unwrap() {
                let mut budget = HomBudget::new(1_000_000);
                for phi in weight_preserving_homs(&r, &m, &mut budget).unwrap() {
                    let fast = extend_to_monomial(&r, &phi).unwrap();
                    let slow = exhaustive_extension_oracle(&r, &phi, 1_000_000).unwrap();
                    assert_eq!(fast.is_some(), slow.is_some(), "{name} {:?}", phi.graph());
                    if let Some(t) = fast {
                        assert!(t.restricts_to(&r, &phi));
                    }
                }
            }
        }
    }
}

#[test]
fn canonical_text_round_trips() {
    for (name, r) in small_catalog(64) {
        let back = FiniteRing::from_canonical_str(&r.to_canonical_string()).unwrap();
        assert_eq!(back.add_table(), r.add_table(), "{name}");
        assert_eq!(back.mul_table(), r.mul_table(), "{name}");
        assert_eq!((back.zero(), back.one()), (r.zero(), r.one()), "{name}");
    }
}
