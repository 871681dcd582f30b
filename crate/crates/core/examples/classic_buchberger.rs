//! Buchberger's algorithm with the relatively prime, lcm and graph
//! criteria, and the pairs those criteria leave on a monomial ideal.
//!
//! cargo run --release --example classic_buchberger

use sigbasis::classic::{buchberger_run, monomial_pair_selection, ClassicConfig};
use sigbasis::cli::builtin;
use sigbasis::gen::KatsuraNaming;
use sigbasis::io::format_polynomial;
use sigbasis::lookup::LookupKind;
use sigbasis::stats::StatsReport;
use sigbasis::{Monomial, Ring, RingOrder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ideal = builtin("cyclic5", 101, RingOrder::Grevlex, KatsuraNaming::VarCount).ok_or("unknown")??;
    let res = buchberger_run(&ideal.ring, &ideal.gens, &ClassicConfig::default());
    println!("cyclic5: {} elements, smallest lead last:", res.basis.len());
    if let Some(g) = res.basis.last() {
        println!("  {}", format_polynomial(&ideal.ring, g));
    }
    let monomials = res.basis.iter().map(|g| g.len()).sum();
    println!("{}", StatsReport::from_classic(&res.stats, monomials));

    let ring = Ring::new(101, 3, RingOrder::Grevlex)?;
    let gens: Vec<Monomial> = [[2, 1, 0], [1, 2, 0], [0, 1, 2], [1, 0, 1]]
        .iter()
        .map(|e| Monomial::new(e.to_vec()))
        .collect();
    let sel = monomial_pair_selection(&ring, &gens, LookupKind::KdTree);
    println!("monomial ideal {gens:?}");
    println!("pairs kept by the criteria: {:?}", sel.reduced_pairs);
    Ok(())
}
