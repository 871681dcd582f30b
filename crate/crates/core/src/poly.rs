//! Sparse polynomials as term lists sorted strictly decreasing in the ring
//! order.

use std::cmp::Ordering;

use crate::monomial::Monomial;
use crate::ring::Ring;

/// A nonzero coefficient times a monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: u32,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: u32, mono: Monomial) -> Self {
        Term { coeff, mono }
    }
}

/// Invariant: monomials strictly decreasing, coefficients in `[1, p)`.
/// The empty term list is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Wraps a term list the caller guarantees to be normalized.
    pub fn from_sorted_terms(terms: Vec<Term>) -> Self {
        Polynomial { terms }
    }

    /// Sorts, combines like terms modulo p and drops zeros.
    pub fn normalize(ring: &Ring, raw: Vec<Term>) -> Self {
        let f = ring.field();
        let mut raw: Vec<Term> = raw
            .into_iter()
            .map(|t| Term::new(t.coeff % f.characteristic(), t.mono))
            .collect();
        raw.sort_by(|a, b| ring.cmp(&b.mono, &a.mono));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = f.add(last.coeff, t.coeff),
                _ => {
                    if terms.last().is_some_and(|l| l.coeff == 0) {
                        terms.pop();
                    }
                    terms.push(t);
                }
            }
        }
        if terms.last().is_some_and(|l| l.coeff == 0) {
            terms.pop();
        }
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term `hd f`.
    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Leading monomial; panics on zero.
    pub fn lead_mono(&self) -> &Monomial {
        &self.terms[0].mono
    }

    pub fn lead_coeff(&self) -> u32 {
        self.terms.first().map_or(0, |t| t.coeff)
    }

    pub fn is_monic(&self) -> bool {
        self.lead_coeff() == 1
    }

    /// Scales so that the leading coefficient is 1.
    pub fn make_monic(&mut self, ring: &Ring) {
        let Some(lead) = self.terms.first() else {
            return;
        };
        if lead.coeff == 1 {
            return;
        }
        let f = ring.field();
        let inv = f.inv_nonzero(lead.coeff);
        for t in &mut self.terms {
            t.coeff = f.mul(t.coeff, inv);
        }
    }

    pub fn monic(mut self, ring: &Ring) -> Self {
        self.make_monic(ring);
        self
    }

    /// `c * m * self`.
    pub fn mul_term(&self, ring: &Ring, coeff: u32, mono: &Monomial) -> Polynomial {
        let f = ring.field();
        if coeff.is_multiple_of(f.characteristic()) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(f.mul(t.coeff, coeff), t.mono.mul(mono)))
                .collect(),
        }
    }

    /// `self + c * other` by a sorted merge.
    pub fn add_scaled(&self, ring: &Ring, coeff: u32, other: &Polynomial) -> Polynomial {
        let f = ring.field();
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => ring.cmp(&a.mono, &b.mono),
                (Some(_), None) => Ordering::Greater,
                (None, _) => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let b = &other.terms[j];
                    let c = f.mul(b.coeff, coeff);
                    if c != 0 {
                        out.push(Term::new(c, b.mono.clone()));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(self.terms[i].coeff, f.mul(other.terms[j].coeff, coeff));
                    if c != 0 {
                        out.push(Term::new(c, self.terms[i].mono.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, ring: &Ring, other: &Polynomial) -> Polynomial {
        self.add_scaled(ring, 1, other)
    }

    pub fn sub(&self, ring: &Ring, other: &Polynomial) -> Polynomial {
        self.add_scaled(ring, ring.field().neg(1), other)
    }

    /// Checks the sortedness and nonzero-coefficient invariant.
    pub fn is_normalized(&self, ring: &Ring) -> bool {
        self.terms.iter().all(|t| t.coeff != 0 && t.coeff < ring.characteristic())
            && self
                .terms
                .windows(2)
                .all(|w| ring.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    /// The S-polynomial `(l/hd a) a - (l/hd b) b` of two monic polynomials.
    pub fn s_polynomial(ring: &Ring, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let la = a.lead_mono();
        let lb = b.lead_mono();
        let ca = ring.field().inv_nonzero(a.lead_coeff());
        let cb = ring.field().inv_nonzero(b.lead_coeff());
        let left = a.mul_term(ring, ca, &la.lcm_cofactor(lb));
        let right = b.mul_term(ring, cb, &lb.lcm_cofactor(la));
        left.sub(ring, &right)
    }
}

/// Free-function form of [`Polynomial::normalize`].
pub fn poly_normalize(ring: &Ring, raw: Vec<Term>) -> Polynomial {
    Polynomial::normalize(ring, raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::RingOrder;

    fn ring() -> Ring {
        Ring::new(101, 3, RingOrder::Grevlex).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn normalize_examples() {
        let r = ring();
        let p = Polynomial::normalize(&r, vec![Term::new(3, m(&[2, 0, 0])), Term::new(98, m(&[2, 0, 0]))]);
        assert!(p.is_zero());

        let p = Polynomial::normalize(&r, vec![Term::new(1, m(&[0, 1, 0])), Term::new(1, m(&[1, 0, 0]))]);
        assert_eq!(p.terms()[0].mono, m(&[1, 0, 0]));
        assert_eq!(p.terms()[1].mono, m(&[0, 1, 0]));

        let p = Polynomial::normalize(
            &r,
            vec![
                Term::new(2, m(&[1, 0, 0])),
                Term::new(3, m(&[1, 0, 0])),
                Term::new(1, m(&[0, 0, 0])),
            ],
        );
        assert_eq!(p.terms(), &[Term::new(5, m(&[1, 0, 0])), Term::new(1, m(&[0, 0, 0]))]);
        assert!(p.is_normalized(&r));
    }

    #[test]
    fn cancellation_in_the_middle() {
        let r = ring();
        let p = Polynomial::normalize(
            &r,
            vec![
                Term::new(1, m(&[2, 0, 0])),
                Term::new(4, m(&[0, 1, 0])),
                Term::new(97, m(&[0, 1, 0])),
                Term::new(1, m(&[0, 0, 0])),
            ],
        );
        assert_eq!(p.len(), 2);
        assert!(p.is_normalized(&r));
    }

    #[test]
    fn s_polynomial_of_small_pair() {
        let r = ring();
        let f = r.field();
        // x^2 - y and xy - z: y(x^2 - y) - x(xy - z) = -y^2 + xz
        let g1 = Polynomial::normalize(&r, vec![Term::new(1, m(&[2, 0, 0])), Term::new(f.neg(1), m(&[0, 1, 0]))]);
        let g2 = Polynomial::normalize(&r, vec![Term::new(1, m(&[1, 1, 0])), Term::new(f.neg(1), m(&[0, 0, 1]))]);
        let s = Polynomial::s_polynomial(&r, &g1, &g2);
        let expect = Polynomial::normalize(&r, vec![Term::new(f.neg(1), m(&[0, 2, 0])), Term::new(1, m(&[1, 0, 1]))]);
        assert_eq!(s, expect);
    }
}
