//! The ideal text format and canonical polynomial printing.
//!
//! ```text
//! 101
//! 3
//! grevlex
//! x1^2-x2
//! 3*x1*x3+x2-1
//! ```
//!
//! Line 1 is the characteristic, line 2 the number of variables, line 3 the
//! order (`grevlex`, `lex` or `elim <k>`). Every further non-empty line holds
//! one polynomial in `x1..xn`.

use std::fmt::Write as _;

use crate::error::{AlgebraError, ParseError};
use crate::monomial::{Monomial, RingOrder};
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;

/// Parses an ideal file into its ring and normalized generators.
pub fn parse_ideal(text: &str) -> Result<(Ring, Vec<Polynomial>), ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let mut header = |n: usize| lines.next().filter(|(_, l)| !l.is_empty()).ok_or(ParseError::MissingHeader(n));

    let (ln, p) = header(1)?;
    let p: u64 = p.parse().map_err(|_| malformed(ln, format!("bad characteristic '{p}'")))?;
    let (ln_n, n) = header(2)?;
    let n: usize = n.parse().map_err(|_| malformed(ln_n, format!("bad variable count '{n}'")))?;
    let (ln_o, o) = header(3)?;
    let order: RingOrder = o.parse().map_err(|e: String| malformed(ln_o, e))?;

    let p = u32::try_from(p).map_err(|_| malformed(ln, "characteristic outside [2, 2^31)".into()))?;
    let ring = Ring::new(p, n, order).map_err(|e| match e {
        AlgebraError::NotPrime(_) => ParseError::NotPrime { line: ln },
        AlgebraError::NoVariables => malformed(ln_n, e.to_string()),
        AlgebraError::BadEliminationBlock { .. } => malformed(ln_o, e.to_string()),
        e => malformed(ln, e.to_string()),
    })?;

    let mut polys = Vec::new();
    for (ln, line) in lines {
        if !line.is_empty() {
            polys.push(parse_polynomial(&ring, line, ln)?);
        }
    }
    Ok((ring, polys))
}

fn malformed(line: usize, message: String) -> ParseError {
    ParseError::Malformed { line, message }
}

/// Parses one polynomial; `line` is only used for error reporting.
pub fn parse_polynomial(ring: &Ring, text: &str, line: usize) -> Result<Polynomial, ParseError> {
    let s: Vec<u8> = text.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
    if s.is_empty() {
        return Err(malformed(line, "empty polynomial".into()));
    }
    let f = ring.field();
    let p = f.characteristic() as u64;
    let n = ring.num_vars();
    let mut terms = Vec::new();
    let mut pos = 0;
    while pos < s.len() {
        let mut negative = false;
        if s[pos] == b'+' || s[pos] == b'-' {
            negative = s[pos] == b'-';
            pos += 1;
        } else if pos > 0 {
            return Err(malformed(line, format!("expected '+' or '-' at column {}", pos + 1)));
        }
        let mut coeff = 1u32;
        let mut exps = vec![0u32; n];
        loop {
            match s.get(pos) {
                Some(b'0'..=b'9') => {
                    let mut c = 0u64;
                    while let Some(d @ b'0'..=b'9') = s.get(pos) {
                        c = (c * 10 + u64::from(d - b'0')) % p;
                        pos += 1;
                    }
                    coeff = f.mul(coeff, c as u32);
                }
                Some(b'x') => {
                    pos += 1;
                    let index = read_number(&s, &mut pos)
                        .ok_or_else(|| malformed(line, "variable without index".into()))?;
                    if index == 0 || index > n as u64 {
                        return Err(ParseError::VariableOutOfRange {
                            line,
                            index: index as usize,
                            num_vars: n,
                        });
                    }
                    let mut e = 1;
                    if s.get(pos) == Some(&b'^') {
                        pos += 1;
                        e = read_number(&s, &mut pos)
                            .and_then(|e| u32::try_from(e).ok())
                            .ok_or_else(|| malformed(line, "bad exponent".into()))?;
                    }
                    let slot = &mut exps[index as usize - 1];
                    *slot = slot
                        .checked_add(e)
                        .ok_or_else(|| malformed(line, "exponent overflow".into()))?;
                }
                Some(&c) => return Err(malformed(line, format!("unexpected '{}'", c as char))),
                None => return Err(malformed(line, "dangling sign".into())),
            }
            if s.get(pos) == Some(&b'*') {
                pos += 1;
            } else {
                break;
            }
        }
        if negative {
            coeff = f.neg(coeff);
        }
        terms.push(Term::new(coeff, Monomial::new(exps)));
    }
    Ok(Polynomial::normalize(ring, terms))
}

fn read_number(s: &[u8], pos: &mut usize) -> Option<u64> {
    let start = *pos;
    let mut v = 0u64;
    while let Some(d @ b'0'..=b'9') = s.get(*pos) {
        v = v.checked_mul(10)?.checked_add(u64::from(d - b'0'))?;
        *pos += 1;
    }
    (*pos > start).then_some(v)
}

/// Canonical form: terms in decreasing order, coefficients in the symmetric
/// range, unit coefficients omitted on non-constant terms.
pub fn format_polynomial(ring: &Ring, poly: &Polynomial) -> String {
    if poly.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, t) in poly.terms().iter().enumerate() {
        let c = ring.field().symmetric(t.coeff);
        if c < 0 {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        let a = c.unsigned_abs();
        if t.mono.is_one() {
            write!(out, "{a}").unwrap();
        } else if a == 1 {
            write!(out, "{}", t.mono).unwrap();
        } else {
            write!(out, "{a}*{}", t.mono).unwrap();
        }
    }
    out
}

/// Prints a full ideal file in canonical form.
pub fn format_ideal(ring: &Ring, polys: &[Polynomial]) -> String {
    let mut out = format!("{}\n{}\n{}\n", ring.characteristic(), ring.num_vars(), ring.order());
    for g in polys {
        out.push_str(&format_polynomial(ring, g));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_file() {
        let (ring, gens) = parse_ideal("101\n3\ngrevlex\nx1^2-x2\n").unwrap();
        assert_eq!((ring.characteristic(), ring.num_vars()), (101, 3));
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].terms()[0].mono, Monomial::new(vec![2, 0, 0]));
        assert_eq!(gens[0].terms()[1].coeff, 100);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_ideal("4\n2\nlex\nx1\n").unwrap_err(), ParseError::NotPrime { line: 1 });
        assert_eq!(
            parse_ideal("7\n2\nlex\nx1\nx3\n").unwrap_err(),
            ParseError::VariableOutOfRange { line: 5, index: 3, num_vars: 2 }
        );
        assert!(matches!(parse_ideal("7\n2\nlex\nx1+*x2\n"), Err(ParseError::Malformed { line: 4, .. })));
        assert_eq!(parse_ideal("7\n2\n").unwrap_err(), ParseError::MissingHeader(3));
        assert!(parse_ideal("7\n2\nfoo\n").is_err());
    }

    #[test]
    fn canonical_print() {
        let text = "7\n3\nelim 1\n 2*x2 + x1*x1 - 6 + 3*2*x3^2 \n-x2+x2\n";
        let (ring, gens) = parse_ideal(text).unwrap();
        let printed = format_ideal(&ring, &gens);
        assert_eq!(printed, "7\n3\nelim 1\nx1^2-x3^2+2*x2+1\n0\n");
        let (ring2, gens2) = parse_ideal(&printed).unwrap();
        assert_eq!(format_ideal(&ring2, &gens2), printed);
    }
}
