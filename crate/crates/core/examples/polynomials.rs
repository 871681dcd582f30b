//! Ring setup, parsing, arithmetic and division over a prime field.
//!
//! cargo run --example polynomials

use sigbasis::division::{classic_reduce, ReduceOptions};
use sigbasis::io::{format_polynomial, parse_polynomial};
use sigbasis::lookup::{LookupKind, MonomialLookup};
use sigbasis::poly::Polynomial;
use sigbasis::{Ring, RingOrder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = Ring::new(101, 3, RingOrder::Grevlex)?;
    let f = parse_polynomial(&ring, "x1^2*x2 - 3*x2*x3 + 7", 1)?;
    let g1 = parse_polynomial(&ring, "x1^2 - x2", 2)?;
    let g2 = parse_polynomial(&ring, "x1*x2 - x3", 3)?;
    let show = |p: &Polynomial| format_polynomial(&ring, p);

    println!("f         = {}", show(&f));
    println!("f + g1    = {}", show(&f.add(&ring, &g1)));
    println!("x3 * g2   = {}", show(&g2.mul_term(&ring, 1, &ring.var(2))));
    println!("S(g1, g2) = {}", show(&Polynomial::s_polynomial(&ring, &g1, &g2)));

    let basis = [g1, g2];
    let mut leads = MonomialLookup::new(LookupKind::List, ring.num_vars());
    for (i, g) in basis.iter().enumerate() {
        leads.insert(g.lead_mono().clone(), i);
    }
    let div = classic_reduce(&ring, &f, &basis, &leads, &ReduceOptions::default());
    println!("f mod (g1, g2) = {}", show(&div.remainder));

    let lex = Ring::new(101, 3, RingOrder::Lex)?;
    let h = parse_polynomial(&lex, "x2^5 + x1*x3 + x3^9", 1)?;
    println!("same polynomial in lex: {}", format_polynomial(&lex, &h));
    Ok(())
}
