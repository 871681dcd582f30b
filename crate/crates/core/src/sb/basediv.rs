//! Base divisors: eliminating `S(beta, gamma)` through a known syzygy
//! signature of `S(alpha, gamma)` without computing the new signature.

use crate::bits::TriangleBits;
use crate::error::BaseDivisorError;
use crate::monomial::Monomial;

use super::SigEntry;

/// High-ratio case: `hd alpha | hd beta` and `gamma` has a larger ratio than
/// both, so `sig S(alpha, gamma) | sig S(beta, gamma)`. Returns whether the
/// triangle already proves `S(alpha, gamma)` to be a syzygy signature.
/// Returns false when the preconditions fail.
pub fn high_base_divisor_eliminates(
    basis: &[SigEntry],
    alpha: usize,
    beta: usize,
    gamma: usize,
    tri: &TriangleBits,
) -> bool {
    let (a, b, c) = (&basis[alpha], &basis[beta], &basis[gamma]);
    alpha != gamma
        && c.ratio_id > a.ratio_id
        && c.ratio_id > b.ratio_id
        && a.lead().divides(b.lead())
        && tri.get(alpha, gamma)
}

/// Exponent bound with `None` standing for infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpBound(pub Vec<Option<u32>>);

impl ExpBound {
    pub fn is_unbounded(&self) -> bool {
        self.0.iter().all(Option::is_none)
    }

    /// Whether `m` divides the (possibly infinite) monomial `x^v`.
    #[inline]
    pub fn admits(&self, m: &Monomial) -> bool {
        self.0
            .iter()
            .zip(m.exps())
            .all(|(v, &e)| v.is_none_or(|v| e <= v))
    }
}

/// Low-ratio case: for `sig alpha | sig beta`, the bound `v` such that for
/// every `gamma` with a smaller ratio than both, `sig S(alpha, gamma)`
/// divides `sig S(beta, gamma)` exactly when `hd gamma | x^v`.
pub fn low_base_divisor_bound(alpha: &SigEntry, beta: &SigEntry) -> Result<ExpBound, BaseDivisorError> {
    if !alpha.sig.divides(&beta.sig) {
        return Err(BaseDivisorError::SignatureNotDivisible);
    }
    let q = beta.sig.mono.div(&alpha.sig.mono).expect("checked divisibility");
    Ok(low_bound_from_exponents(
        alpha.lead().exps(),
        alpha.lead().mul(&q).exps(),
        beta.lead().exps(),
    ))
}

/// The bound from exponent vectors: `a = hd alpha`,
/// `p = hd alpha * sig beta / sig alpha` and `b = hd beta`.
pub fn low_bound_from_exponents(a: &[u32], p: &[u32], b: &[u32]) -> ExpBound {
    ExpBound(
        (0..a.len())
            .map(|i| if b[i] <= p[i] { None } else { Some(p[i].max(a[i])) })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_bound_example() {
        let v = low_bound_from_exponents(&[1, 0], &[0, 2], &[2, 1]);
        assert_eq!(v, ExpBound(vec![Some(1), None]));
        assert!(v.admits(&Monomial::new(vec![1, 9])));
        assert!(!v.admits(&Monomial::new(vec![2, 0])));
    }

    #[test]
    fn high_ratio_core_fact() {
        // min(b, c) - min(a, c) <= b - a componentwise.
        let (a, b, c) = ([1u32, 0], [2u32, 0], [1u32, 3]);
        for i in 0..2 {
            assert!(b[i].min(c[i]) - a[i].min(c[i]) <= b[i] - a[i]);
        }
    }
}
