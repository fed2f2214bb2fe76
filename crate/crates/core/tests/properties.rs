//! Property tests for the arithmetic layers and for invariants of the
//! classification that must hold for every admissible case.

use proptest::prelude::*;

use submax::bsgs::PermGroup;
use submax::ffield::FieldSpec;
use submax::oracle::{classify, CaseKey, Regime};
use submax::perm::Perm;
use submax::pi_arith::{pi_part, prime_support, Family, FamilyKey, PrimeSet};

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just((2u64, 3u32)),
        Just((2, 5)),
        Just((3, 3)),
        Just((5, 2)),
        Just((13, 1)),
    ]
    .prop_map(|(p, k)| FieldSpec::new(p, k).unwrap())
}

/// Every admissible family/q combination used by the corpus, and a few more.
fn case() -> impl Strategy<Value = CaseKey> {
    let keys = prop_oneof![
        Just((Family::L2TwoP, 4u64)),
        Just((Family::L2TwoP, 8)),
        Just((Family::L2TwoP, 32)),
        Just((Family::L2ThreeP, 27)),
        Just((Family::L2ThreeP, 243)),
        Just((Family::L2Prime, 7)),
        Just((Family::L2Prime, 13)),
        Just((Family::L2Prime, 17)),
        Just((Family::L2Prime, 37)),
        Just((Family::L2Prime, 137)),
        Just((Family::Sz, 8)),
        Just((Family::Sz, 32)),
        Just((Family::L3Three, 3)),
    ];
    (keys, proptest::collection::vec(any::<bool>(), 8)).prop_map(|((f, q), mask)| {
        let key = FamilyKey::new(f, q).unwrap();
        let support = prime_support(key.simple_order()).unwrap();
        let chosen: Vec<u64> = support
            .primes()
            .iter()
            .zip(mask)
            .filter(|(_, keep)| *keep)
            .map(|(p, _)| *p)
            .collect();
        CaseKey::new(key, PrimeSet::new(chosen).unwrap())
    })
}

proptest! {
    #[test]
    fn perm_group_axioms(a in perm(9), b in perm(9), c in perm(9)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        prop_assert_eq!(a.mul(&b).inverse(), b.inverse().mul(&a.inverse()));
        prop_assert_eq!(a.conj(&b).order(), a.order());
        prop_assert!(a.pow(a.order()).is_identity());
    }

    #[test]
    fn perm_order_is_lcm_of_cycles(a in perm(12)) {
        let l = a.cycle_lengths().iter().fold(1u64, |acc, &n| submax::perm::lcm(acc, n as u64));
        prop_assert_eq!(a.order(), l);
    }

    #[test]
    fn schreier_sims_order_matches_enumeration(a in perm(7), b in perm(7)) {
        let g = PermGroup::from_generators(7, &[a.clone(), b.clone()]).unwrap();
        let elements = g.elements().unwrap();
        prop_assert_eq!(elements.len() as u64, g.order());
        prop_assert_eq!(5040 % g.order(), 0);
        prop_assert!(g.contains(&a.mul(&b)));
    }

    #[test]
    fn field_axioms(f in field(), i in 0usize..4096, j in 0usize..4096, k in 0usize..4096) {
        let n = f.size() as usize;
        let (x, y, z) = (f.element(i % n), f.element(j % n), f.element(k % n));
        prop_assert_eq!(f.mul(&x, &f.add(&y, &z)), f.add(&f.mul(&x, &y), &f.mul(&x, &z)));
        prop_assert_eq!(f.mul(&x, &y), f.mul(&y, &x));
        prop_assert!(f.is_zero(&f.sub(&x, &x)));
        prop_assert_eq!(f.index(&x), i % n);
        if !f.is_zero(&x) {
            prop_assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
            prop_assert_eq!(f.pow(&x, f.size() - 1), f.one());
        }
        prop_assert_eq!(f.frobenius(&f.add(&x, &y), 1), f.add(&f.frobenius(&x, 1), &f.frobenius(&y, 1)));
    }

    #[test]
    fn pi_part_splits_the_order(n in 1u64..1_000_000, mask in any::<u8>()) {
        let support = prime_support(n).unwrap();
        let chosen: Vec<u64> = support.primes().iter().enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| *p).collect();
        let pi = PrimeSet::new(chosen).unwrap();
        let rest = support.difference(&pi);
        prop_assert_eq!(pi_part(n, &pi).unwrap() * pi_part(n, &rest).unwrap(), n);
    }

    #[test]
    fn classification_invariants(c in case()) {
        let res = classify(&c).unwrap();
        let s = c.key.simple_order();
        let pi_s = c.pi.intersection(&prime_support(s).unwrap());
        match res.regime {
            Regime::EmptyPi => prop_assert!(pi_s.is_empty()),
            Regime::SinglePrime => prop_assert_eq!(pi_s.len(), 1),
            Regime::Full => prop_assert_eq!(pi_part(s, &c.pi).unwrap(), s),
            Regime::Table => prop_assert!(pi_s.len() >= 2),
        }
        prop_assert!(!res.records.is_empty());
        for r in &res.records {
            prop_assert_eq!(s % r.order, 0);
            prop_assert_eq!(pi_part(r.order, &c.pi).unwrap(), r.order);
            prop_assert!(r.ncc == 1 || r.ncc == 2);
            prop_assert!(r.pi_maximal || r.container.is_some());
            prop_assert_eq!(r.descriptor.expected_order(), Some(r.order));
        }
        // Classification is a pure function of the case.
        prop_assert_eq!(classify(&c).unwrap(), res);
    }
}
