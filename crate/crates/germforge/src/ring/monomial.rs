//! Exponent vectors and monomial orders.

use smallvec::SmallVec;
use std::cmp::Ordering;

/// Exponent vector of a monomial, one entry per ring variable.
///
/// The total degree is cached because order comparisons are the hot path of
/// every basis computation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u16>) -> Self {
        let exps: SmallVec<[u16; 8]> = exps.into_iter().collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            degree: 0,
        }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut exps: SmallVec<[u16; 8]> = smallvec::smallvec![0; nvars];
        exps[idx] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn var_pow(nvars: usize, idx: usize, e: u16) -> Self {
        let mut exps: SmallVec<[u16; 8]> = smallvec::smallvec![0; nvars];
        exps[idx] = e;
        Monomial {
            exps,
            degree: e as u32,
        }
    }

    #[inline]
    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// True when the monomial is a power of the single variable `idx`.
    pub fn is_pure_power_of(&self, idx: usize) -> bool {
        self.degree > 0 && self.exps.iter().enumerate().all(|(i, &e)| i == idx || e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(&a, &b)| a - b)
            .collect();
        Monomial {
            exps,
            degree: other.degree - self.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 8]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a.min(b) == 0)
    }

    pub fn pow(&self, k: u16) -> Monomial {
        let exps = self.exps.iter().map(|&e| e * k).collect();
        Monomial {
            exps,
            degree: self.degree * k as u32,
        }
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "m{:?}", self.exps.as_slice())
    }
}

/// Monomial orders supported by the engine.
///
/// The global kinds are well-orders with 1 smallest; `NegDegRevLex` is the
/// local order used for every quotient of a local ring: it satisfies
/// `1 > x_i`, which is what Mora's normal form needs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    /// Global degree-reverse-lexicographic.
    DegRevLex,
    /// Global lexicographic.
    Lex,
    /// Elimination order: variables `0..split` dominate, degrevlex inside
    /// each block. A leading term free of the first block certifies the
    /// whole polynomial is.
    Block { split: usize },
    /// Local negative-degree-reverse-lexicographic (smaller degree wins).
    NegDegRevLex,
}

impl MonomialOrder {
    pub fn is_global(&self) -> bool {
        !matches!(self, MonomialOrder::NegDegRevLex)
    }

    pub fn is_local(&self) -> bool {
        matches!(self, MonomialOrder::NegDegRevLex)
    }

    /// Compare two monomials; `Greater` means `a` is the leading one.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => deg_revlex(a.exps(), b.exps(), a.degree(), b.degree()),
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::NegDegRevLex => {
                match b.degree().cmp(&a.degree()) {
                    Ordering::Equal => revlex_tie(a.exps(), b.exps()),
                    ord => ord,
                }
            }
            MonomialOrder::Block { split } => {
                let (a1, a2) = a.exps().split_at(split);
                let (b1, b2) = b.exps().split_at(split);
                let da1: u32 = a1.iter().map(|&e| e as u32).sum();
                let db1: u32 = b1.iter().map(|&e| e as u32).sum();
                deg_revlex(a1, b1, da1, db1)
                    .then_with(|| deg_revlex(a2, b2, a.degree() - da1, b.degree() - db1))
            }
        }
    }
}

fn deg_revlex(a: &[u16], b: &[u16], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => revlex_tie(a, b),
        ord => ord,
    }
}

/// Reverse-lex tie break: the last differing exponent decides, smaller wins.
fn revlex_tie(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::DegRevLex;
        // x^2 > xy > y^2 > x > y > 1 in two variables
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0]), &m(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn local_order_has_one_on_top() {
        let o = MonomialOrder::NegDegRevLex;
        assert_eq!(o.cmp(&m(&[0, 0]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[2, 0])), Ordering::Greater);
        // same-degree tie break agrees with degrevlex
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates() {
        let o = MonomialOrder::Block { split: 1 };
        // any power of the first variable beats anything in the second block
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 3]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_quotient() {
        let a = m(&[1, 2]);
        let b = m(&[2, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_into(&b), m(&[1, 1]));
        assert_eq!(a.lcm(&m(&[3, 0])), m(&[3, 2]));
    }
}
