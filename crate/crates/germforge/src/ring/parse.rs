//! The textual polynomial format.
//!
//! ASCII grammar: integers, `/` rationals, identifiers, `+ - * ^` and
//! parentheses. `*` is mandatory between factors, `^` takes a non-negative
//! integer exponent, whitespace is insignificant. Printing then parsing is
//! the identity.

use super::poly::{Coeff, Polynomial, RingContext, RingError, Term};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::sync::Arc;

pub fn parse_polynomial(text: &str, ring: &Arc<RingContext>) -> Result<Polynomial, RingError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        ring,
    };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(RingError::Syntax {
            pos: p.pos,
            msg: format!("unexpected `{}`", p.peek_char()),
        });
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    ring: &'a Arc<RingContext>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn peek_char(&self) -> char {
        self.peek().map(|b| b as char).unwrap_or('\0')
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, RingError> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, RingError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, RingError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let start = self.pos;
            let e = self.uint()?;
            let e: u32 = e.try_into().map_err(|_| RingError::Syntax {
                pos: start,
                msg: "exponent too large".to_string(),
            })?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, RingError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(RingError::Syntax {
                        pos: self.pos,
                        msg: "expected `)`".to_string(),
                    });
                }
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                let numer = self.uint()?;
                if self.peek() == Some(b'.') {
                    return Err(RingError::NonRationalLiteral {
                        pos: self.pos,
                        msg: "decimal literals are not rational".to_string(),
                    });
                }
                let coeff = if self.eat(b'/') {
                    let dstart = self.pos;
                    let denom = self.uint()?;
                    if denom.is_zero() {
                        return Err(RingError::NonRationalLiteral {
                            pos: dstart,
                            msg: "zero denominator".to_string(),
                        });
                    }
                    Coeff::new(numer, denom)
                } else {
                    Coeff::from(numer)
                };
                let _ = start;
                Ok(Polynomial::constant(self.ring, coeff))
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .peek()
                    .map(|b| b.is_ascii_alphanumeric() || b == b'_')
                    .unwrap_or(false)
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                self.skip_ws();
                Polynomial::var(self.ring, name)
            }
            _ => Err(RingError::Syntax {
                pos: self.pos,
                msg: format!("expected a factor, found `{}`", self.peek_char()),
            }),
        }
    }

    fn uint(&mut self) -> Result<BigInt, RingError> {
        let start = self.pos;
        while self.peek().map(|b| b.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(RingError::Syntax {
                pos: self.pos,
                msg: "expected an integer".to_string(),
            });
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        self.skip_ws();
        Ok(s.parse::<BigInt>().expect("digits parse as BigInt"))
    }
}

fn fmt_monomial(
    f: &mut std::fmt::Formatter<'_>,
    vars: &[String],
    exps: &[u16],
    lead_star: bool,
) -> std::fmt::Result {
    let mut first = !lead_star;
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", vars[i])?;
        if e > 1 {
            write!(f, "^{}", e)?;
        }
    }
    Ok(())
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = self.ring().vars();
        for (i, Term { mono, coeff }) in self.terms().iter().enumerate() {
            let neg = coeff.is_negative();
            let abs = if neg { -coeff.clone() } else { coeff.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_one() {
                write!(f, "{}", fmt_coeff(&abs))?;
            } else if abs.is_one() {
                fmt_monomial(f, vars, mono.exps(), false)?;
            } else {
                write!(f, "{}", fmt_coeff(&abs))?;
                fmt_monomial(f, vars, mono.exps(), true)?;
            }
        }
        Ok(())
    }
}

fn fmt_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::MonomialOrder;

    fn ring(vars: &[&str]) -> Arc<RingContext> {
        RingContext::new(vars.iter().copied(), MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn single_monomial() {
        let r = ring(&["x", "y"]);
        let p = parse_polynomial("y^2", &r).unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms()[0].mono.exps(), &[0, 2]);
        assert!(p.terms()[0].coeff.is_one());
    }

    #[test]
    fn named_families_parse() {
        let r = ring(&["u", "v"]);
        let dg3 = parse_polynomial("u^7 + u^3*v^4 + v^6", &r).unwrap();
        assert_eq!(dg3.terms().len(), 3);
        let r3 = ring(&["u", "v", "w"]);
        let m = parse_polynomial("(u*v*w)^2 + u^8 + v^8 + w^8", &r3).unwrap();
        assert_eq!(m.terms().len(), 4);
        assert_eq!(m.total_degree(), Some(8));
    }

    #[test]
    fn print_parse_round_trip() {
        let r = ring(&["x", "y"]);
        for s in [
            "x^2 - 3*x*y + 1/2",
            "-x + y",
            "0",
            "7",
            "-2/3*x^5 + x - 1",
        ] {
            let p = parse_polynomial(s, &r).unwrap();
            let q = parse_polynomial(&p.to_string(), &r).unwrap();
            assert_eq!(p, q, "round trip failed for `{s}`");
        }
    }

    #[test]
    fn error_positions() {
        let r = ring(&["x"]);
        match parse_polynomial("x + @", &r) {
            Err(RingError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert_eq!(
            parse_polynomial("x + z", &r),
            Err(RingError::UndeclaredVariable("z".to_string()))
        );
        assert!(matches!(
            parse_polynomial("1/0", &r),
            Err(RingError::NonRationalLiteral { .. })
        ));
        assert!(matches!(
            parse_polynomial("1.5*x", &r),
            Err(RingError::NonRationalLiteral { .. })
        ));
    }

    #[test]
    fn star_is_mandatory() {
        let r = ring(&["x", "y"]);
        assert!(matches!(
            parse_polynomial("2x", &r),
            Err(RingError::Syntax { .. })
        ));
        assert!(matches!(
            parse_polynomial("x y", &r),
            Err(RingError::Syntax { .. })
        ));
    }
}
