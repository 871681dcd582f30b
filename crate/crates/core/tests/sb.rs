mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;

use sigbasis::classic::{autoreduce, buchberger_run, ClassicConfig};
use sigbasis::lookup::LookupKind;
use sigbasis::poly::Polynomial;
use sigbasis::queue::QueueConfig;
use sigbasis::sb::{koszul_signature, sb_run, sb_run_traced, ModuleOrderKind, SbConfig, SchreyerTiebreak, Tracer};
use sigbasis::{Ring, RingOrder};

fn gb(ring: &Ring, gens: &[Polynomial], cfg: &SbConfig) -> Vec<Polynomial> {
    sb_run(ring, gens, cfg).reduced_gb(ring, QueueConfig::default(), LookupKind::DivKdTree)
}

fn two_term_law(ring: &Ring, gens: &[Polynomial], cfg: &SbConfig) -> Result<(), String> {
    let res = sb_run(ring, gens, cfg);
    let s = &res.stats;
    let new_entries = res.entries.len() as u64 - gens.iter().filter(|g| !g.is_zero()).count() as u64;
    if !s.accounting_holds() || s.need_reduction != s.to_basis + s.to_syzygy || s.to_basis != new_entries {
        return Err(format!("{cfg:?}: {s:?}"));
    }
    Ok(())
}

#[test]
fn agrees_with_classic_on_small_benchmarks() {
    for name in ["katsura4", "katsura5", "cyclic4", "cyclic5", "hcyclic5"] {
        let (ring, gens) = benchmark(name);
        let a = gb(&ring, &gens, &SbConfig::default());
        let b = buchberger_run(&ring, &gens, &ClassicConfig::default()).basis;
        assert_eq!(a, b, "{name}");
        assert!(is_groebner(&ring, &a), "{name}");
    }
}

#[test]
fn reduction_law_under_every_toggle() {
    for name in ["katsura5", "cyclic5"] {
        let (ring, gens) = benchmark(name);
        let want = gb(&ring, &gens, &SbConfig::default());
        for mask in 0..64u32 {
            for base_divisors in 0..=2 {
                let cfg = SbConfig {
                    base_divisors,
                    signature_criterion: mask & 1 == 0,
                    koszul: mask & 2 == 0,
                    relprime: mask & 4 == 0,
                    early_singular: mask & 8 != 0,
                    module_order: if mask & 16 == 0 {
                        ModuleOrderKind::Schreyer
                    } else {
                        ModuleOrderKind::PositionOverTerm
                    },
                    tiebreak: if mask & 32 == 0 {
                        SchreyerTiebreak::LowerGreater
                    } else {
                        SchreyerTiebreak::HigherGreater
                    },
                    ..SbConfig::default()
                };
                two_term_law(&ring, &gens, &cfg).unwrap();
                assert_eq!(gb(&ring, &gens, &cfg), want, "{name} {cfg:?}");
            }
        }
    }
}

#[test]
fn without_singular_criterion_results_stay_correct() {
    let (ring, gens) = benchmark("katsura5");
    let cfg = SbConfig {
        singular: false,
        ..SbConfig::default()
    };
    let res = sb_run(&ring, &gens, &cfg);
    let s = &res.stats;
    assert!(s.accounting_holds());
    assert_eq!(s.need_reduction, s.to_basis + s.to_syzygy + s.to_singular);
    assert_eq!(s.singular_late, 0);
    assert_eq!(
        res.reduced_gb(&ring, QueueConfig::default(), LookupKind::DivKdTree),
        gb(&ring, &gens, &SbConfig::default())
    );
}

#[test]
fn base_divisors_do_not_change_the_basis() {
    for name in ["katsura5", "katsura6"] {
        let (ring, gens) = benchmark(name);
        let off = sb_run(&ring, &gens, &SbConfig { base_divisors: 0, ..SbConfig::default() });
        let on = sb_run(&ring, &gens, &SbConfig::default());
        assert_eq!(off.stats.base_divisor, 0);
        assert!(on.stats.base_divisor > 0, "{name}");
        let q = QueueConfig::default();
        assert_eq!(off.reduced_gb(&ring, q, LookupKind::List), on.reduced_gb(&ring, q, LookupKind::List));
        assert_eq!(off.syzygies, on.syzygies, "{name}");
    }
}

fn entry_set(res: &sigbasis::sb::SbResult) -> Vec<String> {
    let mut v: Vec<String> = res.entries.iter().map(|e| format!("{} {:?}", e.sig, e.poly)).collect();
    v.sort();
    v
}

#[test]
fn switching_off_a_criterion_keeps_the_entries() {
    for name in ["katsura5", "katsura6", "cyclic5"] {
        let (ring, gens) = benchmark(name);
        let base = SbConfig::default();
        let want = sb_run(&ring, &gens, &base);
        let variants = [
            SbConfig { base_divisors: 0, ..base },
            SbConfig { koszul: false, ..base },
            SbConfig { signature_criterion: false, ..base },
            SbConfig { singular: false, ..base },
            SbConfig { early_singular: true, ..base },
            SbConfig { relprime: false, ..base },
        ];
        for cfg in variants {
            let res = sb_run(&ring, &gens, &cfg);
            assert_eq!(entry_set(&res), entry_set(&want), "{name} {cfg:?}");
            assert_eq!(res.syzygies, want.syzygies, "{name} {cfg:?}");
        }
    }
}

#[test]
fn reducer_choice_does_not_change_any_remainder() {
    let (ring, gens) = benchmark("katsura5");
    let gens = autoreduce(&ring, &gens, QueueConfig::default(), LookupKind::DivKdTree);
    let cfg = SbConfig::default();
    let mut reference = Tracer::default();
    let base = sb_run_traced(&ring, &gens, &cfg, &mut reference);
    assert!(!reference.reductions.is_empty());
    for seed in 0..20 {
        let mut g = rng(seed);
        let mut multi = 0usize;
        let mut pick = |c: &[usize]| {
            multi += usize::from(c.len() > 1);
            g.gen_range(0..c.len())
        };
        let mut tr = Tracer {
            choose: Some(&mut pick),
            ..Tracer::default()
        };
        let res = sb_run_traced(&ring, &gens, &cfg, &mut tr);
        assert_eq!(tr.reductions, reference.reductions, "seed {seed}");
        assert_eq!(res.entries, base.entries);
        drop(tr);
        assert!(multi > 0, "no step had a choice");
    }
}

#[test]
fn syzygy_signatures_are_minimal_and_cover_koszul_syzygies() {
    for name in ["katsura5", "cyclic5"] {
        let (ring, gens) = benchmark(name);
        let res = sb_run(&ring, &gens, &SbConfig::default());
        let syz = &res.syzygies;
        assert!(!syz.is_empty());
        for (i, a) in syz.iter().enumerate() {
            for (j, b) in syz.iter().enumerate() {
                assert!(i == j || !a.divides(b), "{name}: {a} divides {b}");
            }
        }
        assert!(syz.windows(2).all(|w| res.order.cmp(&w[0], &w[1]).is_lt()));
        for (j, b) in res.entries.iter().enumerate() {
            for a in &res.entries[..j] {
                if a.ratio_id != b.ratio_id {
                    let k = koszul_signature(a, b);
                    assert!(syz.iter().any(|s| s.divides(&k)), "{name}: {k} not covered");
                }
            }
        }
    }
}

#[test]
fn base_divisor_theorems_hold() {
    let t = base_divisor_trials(11, 20_000).unwrap();
    assert!(t.low_divides > 0 && t.low_not_divides > 0, "{t:?}");
}

#[test]
fn pair_triangle_stays_within_its_memory_bound() {
    let (ring, gens) = benchmark("katsura6");
    let s = sb_run(&ring, &gens, &SbConfig::default()).stats;
    assert_eq!(s.pair_bound_violations, 0);
    assert!(s.pair_bytes_peak > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_ideals_match_classic(seed in any::<u64>(), order in prop_oneof![
        Just(RingOrder::Grevlex), Just(RingOrder::Lex), Just(RingOrder::Elimination(1))]) {
        let r = ring(7, 3, order);
        let mut g = rng(seed);
        let gens: Vec<Polynomial> = (0..3).map(|_| random_poly(&mut g, &r, 3, 2)).collect();
        prop_assume!(gens.iter().any(|f| !f.is_zero()));
        let a = gb(&r, &gens, &SbConfig::default());
        prop_assert!(is_groebner(&r, &a));
        prop_assert!(gens.iter().all(|f| remainder(&r, f, &a).is_zero()));
        prop_assert_eq!(a, buchberger_run(&r, &gens, &ClassicConfig::default()).basis);
        prop_assert!(two_term_law(&r, &gens, &SbConfig::default()).is_ok());
    }
}
