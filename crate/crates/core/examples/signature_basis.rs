//! The signature algorithm on a benchmark ideal: the reduced Gröbner basis,
//! the minimal syzygy signatures it finds on the way, and its counters.
//!
//! cargo run --release --example signature_basis -- katsura6

use sigbasis::classic::autoreduce;
use sigbasis::cli::builtin;
use sigbasis::gen::KatsuraNaming;
use sigbasis::io::format_polynomial;
use sigbasis::lookup::LookupKind;
use sigbasis::queue::{QueueBackend, QueueConfig};
use sigbasis::sb::{sb_run, SbConfig};
use sigbasis::stats::StatsReport;
use sigbasis::RingOrder;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "katsura6".into());
    let ideal = builtin(&name, 101, RingOrder::Grevlex, KatsuraNaming::VarCount).ok_or("unknown ideal")??;
    let ring = ideal.ring;
    let queue = QueueConfig {
        backend: QueueBackend::Geobucket,
        hashed: true,
        ..QueueConfig::default()
    };
    let gens = autoreduce(&ring, &ideal.gens, queue, LookupKind::DivKdTree);
    let cfg = SbConfig {
        queue,
        ..SbConfig::default()
    };
    let res = sb_run(&ring, &gens, &cfg);

    let gb = res.reduced_gb(&ring, queue, LookupKind::DivKdTree);
    println!("{name}: {} basis elements, {} signature basis entries", gb.len(), res.entries.len());
    for g in gb.iter().take(5) {
        println!("  {}", format_polynomial(&ring, g));
    }
    println!("first syzygy signatures:");
    for s in res.syzygies.iter().take(5) {
        println!("  {s}");
    }
    println!("{}", StatsReport::from_sb(&res.stats, false));
    Ok(())
}
