//! Arithmetic in the prime field F_p with p < 2^31.
//!
//! Elements are plain `u32` values kept in `[0, p)`. Every operation
//! normalizes eagerly.

use crate::error::AlgebraError;

/// A prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Builds `F_p`, rejecting composite or out-of-range characteristics.
    pub fn new(p: u32) -> Result<Self, AlgebraError> {
        if !(2..(1 << 31)).contains(&p) {
            return Err(AlgebraError::CharacteristicOutOfRange(p as u64));
        }
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    #[inline]
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse.
    pub fn inv(&self, a: u32) -> Result<u32, AlgebraError> {
        ff_inv(a, self.p)
    }

    /// Inverse of an element already known to be nonzero.
    #[inline]
    pub(crate) fn inv_nonzero(&self, a: u32) -> u32 {
        ff_inv(a, self.p).expect("nonzero field element")
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for printing.
    pub fn symmetric(&self, a: u32) -> i64 {
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

/// Inverse of `a` modulo the prime `p` by the extended Euclidean algorithm.
pub fn ff_inv(a: u32, p: u32) -> Result<u32, AlgebraError> {
    let a = a % p;
    if a == 0 {
        return Err(AlgebraError::NotInvertible);
    }
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus must be prime");
    Ok(t0.rem_euclid(p as i64) as u32)
}

/// Deterministic trial-division primality test; fine for 32-bit inputs.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let n = n as u64;
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
