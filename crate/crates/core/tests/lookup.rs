mod common;

use proptest::prelude::*;
use rand::Rng;
use sigbasis::lookup::{may_divide, DivMap, LookupKind, MonomialLookup};
use sigbasis::Monomial;

use common::*;

#[test]
fn divmask_never_rules_out_a_divisor() {
    let mut g = rng(3);
    let calib: Vec<Monomial> = (0..200).map(|_| random_mono(&mut g, 6, 5)).collect();
    let map = DivMap::calibrate(&calib).unwrap();
    let mut ruled_out = 0;
    for _ in 0..100_000 {
        let a = random_mono(&mut g, 6, 3);
        let b = random_mono(&mut g, 6, 6);
        if !may_divide(map.mask(&a), map.mask(&b)) {
            assert!(!a.divides(&b), "{a} | {b} but the mask says no");
            ruled_out += 1;
        }
    }
    assert!(ruled_out > 0);
}

#[test]
fn divlist_accounting_counts_every_live_entry() {
    let mut g = rng(9);
    let mut look = MonomialLookup::new(LookupKind::DivList, 5);
    for id in 0..300 {
        look.insert(random_mono(&mut g, 5, 4), id);
    }
    look.rebuild();
    let before = look.stats();
    let mut divisors = 0u64;
    let queries = 500u64;
    for _ in 0..queries {
        let q = random_mono(&mut g, 5, 6);
        divisors += look.find_all_divisors(&q).len() as u64;
    }
    let s = look.stats();
    let consulted = s.consultations() - before.consultations();
    assert_eq!(consulted, queries * look.len() as u64);
    assert_eq!(s.divisibilities - before.divisibilities, divisors);
    assert_eq!(s.hits + s.misses + s.divisibilities, s.consultations());
}

fn check_against_brute_force(kind: LookupKind, seed: u64, leaf: usize) {
    let mut g = rng(seed);
    let mut look = MonomialLookup::with_leaf_capacity(kind, 4, leaf);
    let mut live: Vec<(usize, Monomial)> = Vec::new();
    for id in 0..400 {
        match g.gen_range(0..10) {
            0..=6 => {
                let m = random_mono(&mut g, 4, 5);
                look.insert(m.clone(), id);
                live.push((id, m));
            }
            7 if !live.is_empty() => {
                let (old, _) = live.swap_remove(g.gen_range(0..live.len()));
                look.retire(old).unwrap();
                assert!(look.retire(old).is_err());
            }
            8 => {
                look.maybe_rebuild();
            }
            _ => {
                let q = random_mono(&mut g, 4, 7);
                let mut want: Vec<usize> = live.iter().filter(|(_, m)| m.divides(&q)).map(|(i, _)| *i).collect();
                let mut got = look.find_all_divisors(&q);
                want.sort_unstable();
                got.sort_unstable();
                assert_eq!(got, want, "{kind}");
                assert_eq!(look.find_divisor(&q).is_some(), !want.is_empty());
                if let Some(id) = look.find_divisor(&q) {
                    assert!(look.monomial(id).unwrap().divides(&q));
                }
            }
        }
        assert_eq!(look.len(), live.len());
    }
    assert!(look.audit(), "{kind}");
}

#[test]
fn all_lookups_agree_with_brute_force() {
    for kind in LookupKind::ALL {
        for (seed, leaf) in [(1, 1), (2, 4), (3, 32)] {
            check_against_brute_force(kind, seed, leaf);
        }
    }
}

proptest! {
    #[test]
    fn mask_soundness(a in prop::collection::vec(0u32..6, 4), b in prop::collection::vec(0u32..6, 4),
                      calib in prop::collection::vec(prop::collection::vec(0u32..8, 4), 1..20)) {
        let calib: Vec<Monomial> = calib.into_iter().map(Monomial::new).collect();
        let map = DivMap::calibrate(&calib).unwrap();
        let (a, b) = (Monomial::new(a), Monomial::new(b));
        if a.divides(&b) {
            prop_assert!(may_divide(map.mask(&a), map.mask(&b)));
        }
    }

    #[test]
    fn lookup_with_predicate(ms in prop::collection::vec(prop::collection::vec(0u32..4, 3), 1..60),
                             q in prop::collection::vec(0u32..6, 3)) {
        let q = Monomial::new(q);
        for kind in LookupKind::ALL {
            let mut look = MonomialLookup::with_leaf_capacity(kind, 3, 2);
            for (id, m) in ms.iter().enumerate() {
                look.insert(Monomial::new(m.clone()), id);
            }
            let even = look.find_divisor_by(&q, |id, _| id % 2 == 0);
            let exists = ms.iter().enumerate().any(|(id, m)| id % 2 == 0 && Monomial::new(m.clone()).divides(&q));
            prop_assert_eq!(even.is_some(), exists);
            if let Some(id) = even {
                prop_assert!(id % 2 == 0);
            }
        }
    }
}
