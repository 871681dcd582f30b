//! Benchmark ideals: cyclic-n, its homogenization and Katsura systems.

use std::collections::BTreeMap;

use crate::error::AlgebraError;
use crate::monomial::{Monomial, RingOrder};
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;

/// A generated ideal.
#[derive(Debug, Clone)]
pub struct Ideal {
    pub ring: Ring,
    pub gens: Vec<Polynomial>,
}

// Sums integer-coefficient terms keyed by exponent vector.
fn build(ring: &Ring, terms: BTreeMap<Vec<u32>, i64>) -> Polynomial {
    let f = ring.field();
    Polynomial::normalize(
        ring,
        terms
            .into_iter()
            .map(|(e, c)| Term::new(f.from_i64(c), Monomial::new(e)))
            .collect(),
    )
}

/// Cyclic-n: for `k = 1..n-1` the sum over `i` of `x_i x_{i+1} ... x_{i+k-1}`
/// (indices mod n), plus `x_1 ... x_n - 1`. With `homogenize` an extra last
/// variable `h` is added and the last generator becomes `x_1 ... x_n - h^n`.
pub fn cyclic(n: usize, homogenize: bool, p: u32, order: RingOrder) -> Result<Ideal, AlgebraError> {
    assert!(n >= 2, "cyclic needs n >= 2");
    let nv = n + usize::from(homogenize);
    let ring = Ring::new(p, nv, order)?;
    let mut gens = Vec::with_capacity(n);
    for k in 1..n {
        let mut terms = BTreeMap::new();
        for i in 0..n {
            let mut e = vec![0; nv];
            for d in 0..k {
                e[(i + d) % n] += 1;
            }
            *terms.entry(e).or_insert(0) += 1;
        }
        gens.push(build(&ring, terms));
    }
    let mut terms = BTreeMap::new();
    let mut e = vec![1; nv];
    if homogenize {
        e[n] = 0;
    }
    terms.insert(e, 1);
    let mut last = vec![0; nv];
    if homogenize {
        last[n] = n as u32;
    }
    *terms.entry(last).or_insert(0) -= 1;
    gens.push(build(&ring, terms));
    Ok(Ideal { ring, gens })
}

/// How a Katsura size maps onto the system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KatsuraNaming {
    /// `katsura-n` has `n` variables and `n` equations.
    #[default]
    VarCount,
    /// `katsura-n` has `n + 1` variables `u_0..u_n`.
    Classic,
}

/// The Katsura system in unknowns `u_0..u_k` (`x1 = u_0`): for `m < k`,
/// `sum_{l=-k..k} u_|l| u_|m-l| - u_m`, then `u_0 + 2 sum_{l>=1} u_l - 1`.
/// `k = n - 1` or `k = n` depending on `naming`.
pub fn katsura(n: usize, naming: KatsuraNaming, p: u32, order: RingOrder) -> Result<Ideal, AlgebraError> {
    let k = match naming {
        KatsuraNaming::VarCount => {
            assert!(n >= 2, "katsura needs at least two variables");
            n - 1
        }
        KatsuraNaming::Classic => {
            assert!(n >= 1, "katsura needs n >= 1");
            n
        }
    };
    let nv = k + 1;
    let ring = Ring::new(p, nv, order)?;
    let mut gens = Vec::with_capacity(nv);
    for m in 0..k as i64 {
        let mut terms = BTreeMap::new();
        for l in -(k as i64)..=k as i64 {
            let (a, b) = (l.unsigned_abs() as usize, (m - l).unsigned_abs() as usize);
            if b > k {
                continue;
            }
            let mut e = vec![0; nv];
            e[a] += 1;
            e[b] += 1;
            *terms.entry(e).or_insert(0) += 1;
        }
        let mut e = vec![0; nv];
        e[m as usize] = 1;
        *terms.entry(e).or_insert(0) -= 1;
        gens.push(build(&ring, terms));
    }
    let mut terms = BTreeMap::new();
    for l in 0..nv {
        let mut e = vec![0; nv];
        e[l] = 1;
        terms.insert(e, if l == 0 { 1 } else { 2 });
    }
    terms.insert(vec![0; nv], -1);
    gens.push(build(&ring, terms));
    Ok(Ideal { ring, gens })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two() {
        let id = cyclic(2, false, 101, RingOrder::Grevlex).unwrap();
        assert_eq!(id.gens.len(), 2);
        assert_eq!(id.gens[0].len(), 2);
        assert_eq!(id.gens[1].terms()[0].mono, Monomial::new(vec![1, 1]));
        assert_eq!(id.gens[1].terms()[1].coeff, 100);
    }

    #[test]
    fn hcyclic_is_homogeneous() {
        let id = cyclic(2, true, 101, RingOrder::Grevlex).unwrap();
        assert_eq!(id.ring.num_vars(), 3);
        for g in &id.gens {
            let d = g.lead_mono().degree();
            assert!(g.terms().iter().all(|t| t.mono.degree() == d));
        }
        let id = cyclic(8, true, 101, RingOrder::Grevlex).unwrap();
        assert_eq!((id.ring.num_vars(), id.gens.len()), (9, 8));
    }

    #[test]
    fn katsura_shape() {
        let id = katsura(10, KatsuraNaming::VarCount, 101, RingOrder::Grevlex).unwrap();
        assert_eq!((id.ring.num_vars(), id.gens.len()), (10, 10));
        assert!(id.gens.iter().all(|g| g.lead_mono().degree() <= 2));
        let id = katsura(3, KatsuraNaming::Classic, 101, RingOrder::Grevlex).unwrap();
        assert_eq!((id.ring.num_vars(), id.gens.len()), (4, 4));
    }
}
