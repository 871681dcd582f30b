//! Divmasks: 32-bit summaries of which pure-power thresholds divide a
//! monomial. `a | b` implies `mask(a) & !mask(b) == 0`, so a nonzero result
//! proves non-divisibility without touching the exponent vectors.

use crate::error::LookupError;
use crate::monomial::Monomial;

pub const MASK_BITS: usize = 32;

/// One bit per `(variable, threshold)`: bit set iff `exp(var) >= threshold`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DivMap {
    bits: Vec<(usize, u32)>,
}

/// A divmask word produced by one [`DivMap`].
pub type Divmask = u32;

impl DivMap {
    /// A map with no bits; every mask is 0 and `may_divide` always passes.
    pub fn empty() -> Self {
        DivMap { bits: Vec::new() }
    }

    /// Spreads 32 bits round-robin over the first `min(32, n)` variables and
    /// spaces each variable's thresholds evenly between the minimum and
    /// maximum exponent seen in `monomials`.
    pub fn calibrate<'a, I>(monomials: I) -> Result<Self, LookupError>
    where
        I: IntoIterator<Item = &'a Monomial>,
    {
        let mut iter = monomials.into_iter();
        let first = iter.next().ok_or(LookupError::EmptyCalibrationSet)?;
        let n = first.num_vars().min(MASK_BITS);
        let mut lo: Vec<u32> = first.exps()[..n].to_vec();
        let mut hi = lo.clone();
        for m in iter {
            for v in 0..n {
                lo[v] = lo[v].min(m.exp(v));
                hi[v] = hi[v].max(m.exp(v));
            }
        }
        let mut bits = Vec::with_capacity(MASK_BITS);
        for v in 0..n {
            let count = MASK_BITS / n + usize::from(v < MASK_BITS % n);
            for j in 0..count {
                let span = (hi[v] - lo[v]) as u64;
                let mut t = lo[v] + (span * (j as u64 + 1) / (count as u64 + 1)) as u32;
                // A threshold of 0 is set for every monomial and carries no
                // information, unless the variable never occurs at all.
                if t == 0 && hi[v] > 0 {
                    t = 1;
                }
                bits.push((v, t));
            }
        }
        Ok(DivMap { bits })
    }

    /// The `(variable, threshold)` predicate behind each bit, low bit first.
    pub fn bits(&self) -> &[(usize, u32)] {
        &self.bits
    }

    #[inline]
    pub fn mask(&self, m: &Monomial) -> Divmask {
        let e = m.exps();
        let mut out = 0u32;
        for (b, &(v, t)) in self.bits.iter().enumerate() {
            if e[v] >= t {
                out |= 1 << b;
            }
        }
        out
    }
}

/// `false` proves that the monomial behind `a` does not divide the one
/// behind `b`; `true` is inconclusive.
#[inline]
pub fn may_divide(a: Divmask, b: Divmask) -> bool {
    a & !b == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn single_bit_threshold_is_midpoint() {
        let set = [m(&[2, 1, 0]), m(&[0, 3, 0]), m(&[1, 0, 1])];
        let map = DivMap::calibrate(set.iter()).unwrap();
        // 32 bits over 3 variables: 11, 11, 10. Check the formula on y with
        // one bit by recomputing the midpoint spacing directly.
        let y_bits: Vec<u32> = map.bits().iter().filter(|b| b.0 == 1).map(|b| b.1).collect();
        assert_eq!(y_bits.len(), 11);
        assert!(y_bits.iter().all(|&t| (1..=3).contains(&t)));
        let one = DivMap {
            bits: vec![(1, 3 / 2)],
        };
        assert_eq!(one.bits()[0], (1, 1));
    }

    #[test]
    fn single_monomial_set() {
        let x = m(&[2, 0, 5]);
        let map = DivMap::calibrate([&x]).unwrap();
        for &(v, t) in map.bits() {
            assert_eq!(t, x.exp(v));
        }
        assert_eq!(map.mask(&x), u32::MAX);
    }

    #[test]
    fn wide_rings_use_first_32_variables() {
        let mut e = vec![1u32; 51];
        e[40] = 7;
        let map = DivMap::calibrate([&Monomial::new(e)]).unwrap();
        assert_eq!(map.bits().len(), 32);
        assert!(map.bits().iter().all(|&(v, _)| v < 32));
    }

    #[test]
    fn empty_set_is_an_error() {
        assert_eq!(
            DivMap::calibrate(std::iter::empty()),
            Err(LookupError::EmptyCalibrationSet)
        );
    }

    #[test]
    fn may_divide_basics() {
        // bit 0: y^2
        let map = DivMap { bits: vec![(1, 2)] };
        assert!(!may_divide(map.mask(&m(&[0, 3, 0])), map.mask(&m(&[1, 1, 1]))));
        assert!(may_divide(0, 0b1011));
        assert!(may_divide(0b1011, 0b1011));
    }
}
