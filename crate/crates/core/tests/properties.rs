use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use smul_core::cxlab::{Monomial, QPolyNF};
use smul_core::ideal::{all_ideals, prime_ideals};
use smul_core::localization::LocalizedRing;
use smul_core::mulset::enumerate_multiplicative_sets;
use smul_core::sprime::{is_s_prime, SPrimeMode};
use smul_core::zint::{IntMulSet, PrincipalIdeal};
use smul_core::{FiniteRing, MultiplicativeSet};

const BOUND: u32 = 6;

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((1..=BOUND, 1u32..3), 0..3)
}

fn poly() -> impl Strategy<Value = QPolyNF> {
    prop::collection::vec((monomial(), -200i64..200), 0..5).prop_map(|terms| {
        QPolyNF::from_terms(terms.into_iter().map(|(m, c)| (m, BigInt::from(c))), BOUND).unwrap()
    })
}

fn small_ring() -> impl Strategy<Value = Arc<FiniteRing>> {
    prop_oneof![
        (2u64..=24).prop_map(|n| FiniteRing::zn(n).unwrap()),
        (2u64..=6, 2u64..=6).prop_map(|(a, b)| FiniteRing::product(FiniteRing::zn(a).unwrap(), FiniteRing::zn(b).unwrap()).unwrap()),
        (1u32..=3).prop_map(|k| FiniteRing::boolean(k).unwrap()),
    ]
}

proptest! {
    #[test]
    fn normalize_is_idempotent(f in poly()) {
        let again = QPolyNF::from_terms(f.terms().map(|(m, c)| (m.clone(), c.clone())), BOUND).unwrap();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn qpoly_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn powers_of_two_multiply(a in 0u32..40, b in 0u32..40) {
        let p = QPolyNF::power_of_two(a, BOUND).mul(&QPolyNF::power_of_two(b, BOUND));
        prop_assert_eq!(p, QPolyNF::power_of_two(a + b, BOUND));
    }

    #[test]
    fn zero_iff_in_every_power(f in poly()) {
        let all = (0..=BOUND).all(|m| f.member_pow2_principal(m).unwrap());
        // nonzero constants escape 2^m R for m past their valuation, but only m <= BOUND is tested
        if f.is_zero() {
            prop_assert!(all);
        }
        if f.terms().all(|(m, _)| !m.is_empty()) {
            prop_assert_eq!(f.is_zero(), all);
        }
    }

    #[test]
    fn principal_meet_is_lcm(a in 1i64..60, b in 1i64..60) {
        let meet = PrincipalIdeal::new(a).intersect(&PrincipalIdeal::new(b));
        let brute = (1..=a * b).find(|m| m % a == 0 && m % b == 0).unwrap();
        prop_assert_eq!(meet.n, brute as u64);
        let join = PrincipalIdeal::new(a).sum(&PrincipalIdeal::new(b));
        prop_assert_eq!(meet.sum(&PrincipalIdeal::new(a)), PrincipalIdeal::new(a));
        prop_assert_eq!(join.intersect(&PrincipalIdeal::new(a)), PrincipalIdeal::new(a));
    }

    #[test]
    fn monoid_membership_matches_closure(gens in prop::collection::vec(prop_oneof![-12i64..=-2, 2i64..=12], 1..4), signs: bool) {
        let s = IntMulSet::monoid(&gens, signs).unwrap();
        let limit = 10_000i64;
        let mut closure = BTreeSet::from([1i64]);
        let mut frontier = vec![1i64];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = x * g;
                if y.abs() <= limit && closure.insert(y) {
                    frontier.push(y);
                }
            }
        }
        if signs {
            let neg: Vec<i64> = closure.iter().map(|x| -x).collect();
            closure.extend(neg);
        }
        for m in -limit..=limit {
            prop_assert_eq!(s.contains(m), closure.contains(&m), "m = {}", m);
        }
    }

    #[test]
    fn integer_rule_matches_bounded_test(g in 2i64..50) {
        let s = IntMulSet::monoid(&[g], false).unwrap();
        prop_assert!(!s.strongly_multiplicative().0);
        for k in 0..10u32 {
            let gk = g.checked_pow(k);
            let gk1 = g.checked_pow(k + 1);
            if let (Some(gk), Some(gk1)) = (gk, gk1) {
                prop_assert!(!PrincipalIdeal::new(gk1).contains(gk));
            }
        }
    }

    #[test]
    fn ring_axioms_and_sm(r in small_ring()) {
        prop_assert!(r.verify_axioms().is_ok());
        for s in enumerate_multiplicative_sets(&r, 64).unwrap() {
            prop_assert_eq!(s.is_strongly_multiplicative_def().is_some(), s.is_strongly_multiplicative_mmc().is_some());
        }
    }

    #[test]
    fn colon_by_s_inside_colon_by_t(r in small_ring()) {
        let ideals = all_ideals(&r).unwrap();
        for s in enumerate_multiplicative_sets(&r, 64).unwrap() {
            let t = s.max_multiple().unwrap();
            for i in &ideals {
                let by_t = i.colon_elem(t);
                for x in s.elements().iter() {
                    prop_assert!(i.colon_elem(x).is_subset(&by_t));
                }
            }
        }
    }

    #[test]
    fn localizing_twice_changes_nothing(r in small_ring()) {
        for s in enumerate_multiplicative_sets(&r, 64).unwrap() {
            let loc = LocalizedRing::new(&s).unwrap();
            let image = s.elements().iter().map(|x| loc.project(x)).collect::<Vec<_>>();
            let again = MultiplicativeSet::close(loc.ring(), &image).unwrap();
            prop_assert!(again.is_subset_of_units());
            let twice = LocalizedRing::new(&again).unwrap();
            prop_assert_eq!(twice.ring().size(), loc.ring().size());
        }
    }

    #[test]
    fn disjoint_primes_are_s_prime(r in small_ring()) {
        let primes = prime_ideals(&r).unwrap();
        for s in enumerate_multiplicative_sets(&r, 64).unwrap() {
            for p in primes.iter().filter(|p| !s.meets(p)) {
                let w = is_s_prime(p, &s, SPrimeMode::Definitional).unwrap();
                prop_assert!(w.is_some());
                prop_assert!(p.colon_elem(r.one()).is_prime());
            }
            if s.is_subset_of_units() {
                for q in all_ideals(&r).unwrap().into_iter().filter(|q| !s.meets(q)) {
                    if is_s_prime(&q, &s, SPrimeMode::ColonPrime).unwrap().is_some() {
                        prop_assert!(q.is_prime());
                    }
                }
            }
        }
    }
}
