//! The term queues behind polynomial reduction: every legal configuration
//! sums the same products to the same polynomial.
//!
//! cargo run --example term_queues

use sigbasis::io::{format_polynomial, parse_polynomial};
use sigbasis::queue::{QueueConfig, TermQueue};
use sigbasis::{Ring, RingOrder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = Ring::new(32003, 3, RingOrder::Grevlex)?;
    let f = parse_polynomial(&ring, "x1^3 + 2*x1*x2*x3 - x3^2 + 5", 1)?;
    let g = parse_polynomial(&ring, "x2^2 - x1*x3 + 1", 2)?;

    for cfg in QueueConfig::all_legal() {
        let mut q = TermQueue::new(&ring, cfg)?;
        for v in 0..3 {
            q.push_product(1, &ring.var(v), &f);
            q.push_product(ring.field().from_i64(-2), &ring.var(v), &g);
        }
        let pushed = q.entries();
        let sum = q.drain_to_polynomial();
        println!("{:<28} {pushed:>3} entries -> {} terms", cfg.to_string(), sum.len());
    }

    let mut q = TermQueue::new(&ring, QueueConfig::default())?;
    q.push_product(1, &ring.var(0), &f);
    q.push_product(ring.field().from_i64(-1), &ring.var(0), &f);
    q.push_product(1, &ring.one(), &g);
    println!("x1*f - x1*f + g = {}", format_polynomial(&ring, &q.drain_to_polynomial()));
    Ok(())
}
