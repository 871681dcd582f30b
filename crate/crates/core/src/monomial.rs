//! Exponent-vector monomials and the ring term orders.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::AlgebraError;

const HASH_MUL: u64 = 0x9E37_79B9_7F4A_7C15;
const HASH_MIX: u64 = 0xC2B2_AE3D_27D4_EB4F;

/// A monomial `x^a` stored as an unpacked vector of 32-bit exponents, with
/// its total degree and hash computed once at construction.
#[derive(Clone)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
    hash: u64,
}

fn digest(exps: &[u32]) -> u64 {
    let mut h = 0u64;
    for &e in exps {
        h = h.wrapping_mul(HASH_MUL) ^ (e as u64 + 1).wrapping_mul(HASH_MIX);
    }
    h ^ (h >> 29)
}

impl Monomial {
    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        let exps = exps.into();
        let degree = exps.iter().sum();
        let hash = digest(&exps);
        Monomial { exps, degree, hash }
    }

    /// The monomial 1 in `num_vars` variables.
    pub fn one(num_vars: usize) -> Self {
        Monomial::new(vec![0; num_vars])
    }

    /// The variable `x_{index}` (0-based) raised to `power`.
    pub fn pure_power(num_vars: usize, index: usize, power: u32) -> Self {
        let mut e = vec![0; num_vars];
        e[index] = power;
        Monomial::new(e)
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn hash_value(&self) -> u64 {
        self.hash
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect::<Vec<_>>(),
        )
    }

    /// `self / other`, failing unless `other | self`.
    pub fn div(&self, other: &Monomial) -> Result<Monomial, AlgebraError> {
        self.checked_div(other).ok_or(AlgebraError::NotDivisible)
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a - b)
                .collect::<Vec<_>>(),
        ))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect::<Vec<_>>(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect::<Vec<_>>(),
        )
    }

    /// `self | other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// True when the two monomials share no variable.
    pub fn relatively_prime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `lcm(self, other) / self` without building the lcm.
    pub fn lcm_cofactor(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| b.saturating_sub(*a))
                .collect::<Vec<_>>(),
        )
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.hash == other.hash && self.degree == other.degree && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.hash);
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Term order on the polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingOrder {
    /// Graded reverse lexicographic with `x1 > x2 > ... > xn`.
    Grevlex,
    /// Pure lexicographic with `x1 > x2 > ... > xn`.
    Lex,
    /// Block order: degree in the first `k` variables, ties by grevlex on
    /// the whole exponent vector.
    Elimination(usize),
}

impl RingOrder {
    /// Compares two monomials of the same ring.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            RingOrder::Grevlex => {
                a.degree.cmp(&b.degree).then_with(|| revlex(&a.exps, &b.exps))
            }
            RingOrder::Lex => a.exps.cmp(&b.exps),
            RingOrder::Elimination(k) => {
                let da: u32 = a.exps[..k].iter().sum();
                let db: u32 = b.exps[..k].iter().sum();
                da.cmp(&db)
                    .then(a.degree.cmp(&b.degree))
                    .then_with(|| revlex(&a.exps, &b.exps))
            }
        }
    }

    /// Compares `a` and `b` given only their difference vector `d = a - b`
    /// (entry `i` produced by `diff(i)`). Works for Laurent monomials, which
    /// is what sig-lead ratio comparisons need.
    #[inline]
    pub fn cmp_diff(&self, num_vars: usize, diff: impl Fn(usize) -> i64) -> Ordering {
        match *self {
            RingOrder::Grevlex => {
                let total: i64 = (0..num_vars).map(&diff).sum();
                total.cmp(&0).then_with(|| revlex_diff(num_vars, &diff))
            }
            RingOrder::Lex => {
                for i in 0..num_vars {
                    let d = diff(i);
                    if d != 0 {
                        return d.cmp(&0);
                    }
                }
                Ordering::Equal
            }
            RingOrder::Elimination(k) => {
                let block: i64 = (0..k).map(&diff).sum();
                let total: i64 = (0..num_vars).map(&diff).sum();
                block
                    .cmp(&0)
                    .then(total.cmp(&0))
                    .then_with(|| revlex_diff(num_vars, &diff))
            }
        }
    }
}

impl fmt::Display for RingOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingOrder::Grevlex => f.write_str("grevlex"),
            RingOrder::Lex => f.write_str("lex"),
            RingOrder::Elimination(k) => write!(f, "elim {k}"),
        }
    }
}

/// Accepts `grevlex`, `lex` and `elim <k>`.
impl FromStr for RingOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut words = s.split_whitespace();
        let order = match (words.next(), words.next()) {
            (Some("grevlex"), None) => RingOrder::Grevlex,
            (Some("lex"), None) => RingOrder::Lex,
            (Some("elim"), Some(k)) => RingOrder::Elimination(
                k.parse().map_err(|_| format!("bad elimination block '{k}'"))?,
            ),
            _ => return Err(format!("unknown order '{}'", s.trim())),
        };
        if words.next().is_some() {
            return Err(format!("unknown order '{}'", s.trim()));
        }
        Ok(order)
    }
}

// Reverse-lex tie break of grevlex: the last differing exponent decides and
// the smaller exponent there belongs to the larger monomial.
#[inline]
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

#[inline]
fn revlex_diff(num_vars: usize, diff: &impl Fn(usize) -> i64) -> Ordering {
    for i in (0..num_vars).rev() {
        let d = diff(i);
        if d != 0 {
            return 0.cmp(&d);
        }
    }
    Ordering::Equal
}

/// Free-function form of [`RingOrder::cmp`].
pub fn mono_cmp(a: &Monomial, b: &Monomial, order: RingOrder) -> Ordering {
    order.cmp(a, b)
}
