//! Classic multivariate division.

use crate::lookup::MonomialLookup;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::queue::{QueueConfig, TermQueue};
use crate::ring::Ring;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Stop as soon as the lead term is irreducible.
    pub top_only: bool,
    /// Scale the remainder to leading coefficient 1.
    pub monic: bool,
    pub queue: QueueConfig,
}

/// `f = sum_i quotients[i] * basis[i] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
    /// Number of reduction steps taken.
    pub steps: usize,
}

/// Divides `f` by the basis elements whose lead monomials are live in
/// `lookup` (payload ids are indices into `basis`).
pub fn classic_reduce(
    ring: &Ring,
    f: &Polynomial,
    basis: &[Polynomial],
    lookup: &MonomialLookup,
    opts: &ReduceOptions,
) -> Division {
    reduce_seeded(ring, &[(1, ring.one(), f, false)], basis, lookup, opts)
}

/// A product `coeff * mono * poly` to start a reduction from; with the flag
/// set only the tail of `poly` is used.
pub type Seed<'a> = (u32, Monomial, &'a Polynomial, bool);

/// Reduces the sum of `seeds`. An S-polynomial is the two seeds
/// `(1, l/hd a, a, true)` and `(-1, l/hd b, b, true)`, whose lead terms
/// would cancel anyway.
pub fn reduce_seeded(
    ring: &Ring,
    seeds: &[Seed<'_>],
    basis: &[Polynomial],
    lookup: &MonomialLookup,
    opts: &ReduceOptions,
) -> Division {
    let field = ring.field();
    let mut q = TermQueue::new(ring, opts.queue).expect("valid queue config");
    for (c, m, g, tail) in seeds {
        if *tail {
            q.push_product_tail(*c, m, g);
        } else {
            q.push_product(*c, m, g);
        }
    }
    let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); basis.len()];
    let mut rem: Vec<Term> = Vec::new();
    let mut steps = 0;
    while let Some(t) = q.pop_max() {
        if opts.top_only && !rem.is_empty() {
            rem.push(t);
            continue;
        }
        match lookup.find_divisor(&t.mono) {
            Some(id) => {
                let g = &basis[id];
                let lead = g.lead().expect("nonzero basis element");
                let c = field.mul(t.coeff, field.inv_nonzero(lead.coeff));
                let m = t.mono.div(&lead.mono).expect("lookup returned a divisor");
                q.push_product_tail(field.neg(c), &m, g);
                quotients[id].push(Term::new(c, m));
                steps += 1;
            }
            None => rem.push(t),
        }
    }
    let mut remainder = Polynomial::from_sorted_terms(rem);
    if opts.monic {
        remainder.make_monic(ring);
    }
    Division {
        quotients: quotients.into_iter().map(Polynomial::from_sorted_terms).collect(),
        remainder,
        steps,
    }
}
