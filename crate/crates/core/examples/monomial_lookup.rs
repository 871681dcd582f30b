//! Divisor queries against a set of monomials with the four lookup
//! structures, and the divmask counters they keep.
//!
//! cargo run --release --example monomial_lookup

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigbasis::lookup::{LookupKind, MonomialLookup};
use sigbasis::Monomial;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut random = |max: u32| Monomial::new((0..6).map(|_| rng.gen_range(0..=max)).collect::<Vec<_>>());
    let stored: Vec<Monomial> = (0..2000).map(|_| random(5)).collect();
    let queries: Vec<Monomial> = (0..5000).map(|_| random(7)).collect();

    for kind in LookupKind::ALL {
        let mut look = MonomialLookup::new(kind, 6);
        for (id, m) in stored.iter().enumerate() {
            look.insert(m.clone(), id);
        }
        look.rebuild();
        let found: usize = queries.iter().map(|q| look.find_all_divisors(q).len()).sum();
        let s = look.stats();
        println!(
            "{kind:<10} divisors found {found:>6}  mask hits {:>8}  misses {:>8}  hit rate {:5.1}%",
            s.hits,
            s.misses,
            100.0 * s.hit_rate()
        );
    }
}
