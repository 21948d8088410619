//! Sparse multivariate polynomials over the rationals.

use super::monomial::{Monomial, MonomialOrder};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

pub type Coeff = BigRational;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RingError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),
    #[error("non-rational literal at byte {pos}: {msg}")]
    NonRationalLiteral { pos: usize, msg: String },
    #[error("no substitution image for variable `{0}`")]
    MissingAssignment(String),
    #[error("substitution images live in different rings")]
    MixedImageRings,
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
}

/// A polynomial ring: named variables plus a monomial order.
///
/// Terms of every polynomial in the ring are kept sorted descending in this
/// order, so the leading term is always `terms[0]`.
#[derive(Debug, PartialEq, Eq)]
pub struct RingContext {
    vars: Vec<String>,
    order: MonomialOrder,
}

impl RingContext {
    pub fn new(
        vars: impl IntoIterator<Item = impl Into<String>>,
        order: MonomialOrder,
    ) -> Result<Arc<RingContext>, RingError> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(RingError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(RingContext { vars, order }))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables, different order.
    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> Arc<RingContext> {
        if self.order == order {
            return Arc::clone(self);
        }
        Arc::new(RingContext {
            vars: self.vars.clone(),
            order,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Sparse polynomial: nonzero terms sorted descending by the ring order.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<RingContext>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<RingContext>) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<RingContext>) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &Arc<RingContext>, c: Coeff) -> Self {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push(Term {
                mono: Monomial::one(ring.nvars()),
                coeff: c,
            });
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn constant_i64(ring: &Arc<RingContext>, c: i64) -> Self {
        Self::constant(ring, Coeff::from(BigInt::from(c)))
    }

    pub fn var(ring: &Arc<RingContext>, name: &str) -> Result<Self, RingError> {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| RingError::UndeclaredVariable(name.to_string()))?;
        Ok(Self::from_terms(
            ring,
            vec![Term {
                mono: Monomial::var(ring.nvars(), idx),
                coeff: Coeff::one(),
            }],
        ))
    }

    pub fn monomial(ring: &Arc<RingContext>, mono: Monomial, coeff: Coeff) -> Self {
        let mut terms = Vec::new();
        if !coeff.is_zero() {
            terms.push(Term { mono, coeff });
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    /// Terms already sorted descending in the ring order, no duplicates.
    pub(crate) fn from_sorted_terms(ring: &Arc<RingContext>, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    /// Build from arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(ring: &Arc<RingContext>, terms: Vec<Term>) -> Self {
        let mut map: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for t in terms {
            debug_assert_eq!(t.mono.nvars(), ring.nvars());
            let entry = map.entry(t.mono).or_insert_with(Coeff::zero);
            *entry += t.coeff;
        }
        let mut terms: Vec<Term> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { mono, coeff })
            .collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// Maximal total degree over all terms.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Minimal total degree over all terms (the order of the germ at 0).
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).min()
    }

    /// Ecart used by Mora's normal form.
    pub fn ecart(&self) -> u32 {
        match (self.total_degree(), self.leading_monomial()) {
            (Some(d), Some(lm)) => d - lm.degree(),
            _ => 0,
        }
    }

    pub fn constant_coefficient(&self) -> Coeff {
        self.terms
            .iter()
            .find(|t| t.mono.is_one())
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Coeff::zero)
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    /// Move a polynomial into a ring with the same variables but another
    /// order (terms are re-sorted).
    pub fn reorder(&self, ring: &Arc<RingContext>) -> Polynomial {
        debug_assert_eq!(self.ring.vars(), ring.vars());
        if self.ring.order() == ring.order() {
            let mut p = self.clone();
            p.ring = Arc::clone(ring);
            return p;
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                mono: t.mono.clone(),
                coeff: -t.coeff.clone(),
            })
            .collect();
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.same_ring(other));
        self.merge(other, false, None)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.same_ring(other));
        self.merge(other, true, None)
    }

    /// `self - c * m * other`: the single reduction step of every division
    /// algorithm, done as one sorted merge.
    pub fn sub_scaled(&self, c: &Coeff, m: &Monomial, other: &Polynomial) -> Polynomial {
        self.merge(other, true, Some((c, m)))
    }

    fn merge(
        &self,
        other: &Polynomial,
        subtract: bool,
        scale: Option<(&Coeff, &Monomial)>,
    ) -> Polynomial {
        let order = self.ring.order();
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let other_term = |j: usize| -> (Monomial, Coeff) {
            let t = &other.terms[j];
            match scale {
                None => (t.mono.clone(), t.coeff.clone()),
                Some((c, m)) => (t.mono.mul(m), &t.coeff * c),
            }
        };
        while i < self.terms.len() && j < other.terms.len() {
            let (om, oc) = other_term(j);
            match order.cmp(&self.terms[i].mono, &om) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        mono: om,
                        coeff: if subtract { -oc } else { oc },
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        &self.terms[i].coeff - &oc
                    } else {
                        &self.terms[i].coeff + &oc
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            mono: om,
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < other.terms.len() {
            let (om, oc) = other_term(j);
            out.push(Term {
                mono: om,
                coeff: if subtract { -oc } else { oc },
            });
            j += 1;
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.same_ring(other));
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for t in &small.terms {
            let neg_c = -t.coeff.clone();
            acc = acc.sub_scaled(&neg_c, &t.mono, large);
        }
        acc
    }

    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                mono: t.mono.mul(m),
                coeff: &t.coeff * c,
            })
            .collect();
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms,
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal partial derivative with respect to a declared variable.
    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial, RingError> {
        let idx = self
            .ring
            .var_index(var)
            .ok_or_else(|| RingError::UndeclaredVariable(var.to_string()))?;
        let mut terms = Vec::new();
        for t in &self.terms {
            let e = t.mono.exp(idx);
            if e == 0 {
                continue;
            }
            let mut exps: Vec<u16> = t.mono.exps().to_vec();
            exps[idx] -= 1;
            terms.push(Term {
                mono: Monomial::new(exps),
                coeff: &t.coeff * Coeff::from(BigInt::from(e)),
            });
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// Exact composition: every variable of `self` gets an image in the
    /// target ring of the assignment.
    pub fn substitute(
        &self,
        assignment: &HashMap<String, Polynomial>,
    ) -> Result<Polynomial, RingError> {
        let mut target: Option<Arc<RingContext>> = None;
        for img in assignment.values() {
            match &target {
                None => target = Some(Arc::clone(img.ring())),
                Some(r) => {
                    if !(**r == *img.ring().as_ref()) {
                        return Err(RingError::MixedImageRings);
                    }
                }
            }
        }
        // Which variables are actually used?
        let nv = self.ring.nvars();
        let mut used = vec![false; nv];
        for t in &self.terms {
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        let mut images: Vec<Option<&Polynomial>> = vec![None; nv];
        for (i, name) in self.ring.vars().iter().enumerate() {
            if used[i] {
                images[i] = Some(
                    assignment
                        .get(name)
                        .ok_or_else(|| RingError::MissingAssignment(name.clone()))?,
                );
            }
        }
        let target = match target {
            Some(t) => t,
            // constant-only substitution of a polynomial that uses no vars
            None => {
                if used.iter().any(|&u| u) {
                    return Err(RingError::MissingAssignment(
                        self.ring.vars()[used.iter().position(|&u| u).unwrap()].clone(),
                    ));
                }
                return Ok(Polynomial::constant(
                    &Arc::clone(&self.ring),
                    self.constant_coefficient(),
                ));
            }
        };

        // Memoized powers per variable.
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); nv];
        let power = |i: usize, e: u16, powers: &mut Vec<Vec<Polynomial>>| -> Polynomial {
            let img = images[i].expect("image present for used variable");
            if powers[i].is_empty() {
                powers[i].push(Polynomial::one(&target));
            }
            while powers[i].len() <= e as usize {
                let last = powers[i].last().unwrap().mul(img);
                powers[i].push(last);
            }
            powers[i][e as usize].clone()
        };

        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(&target, t.coeff.clone());
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&power(i, e, &mut powers));
                }
            }
            acc = acc.add(&prod);
        }
        Ok(acc)
    }

    /// Substitute a single variable, staying in the same ring.
    pub fn eval_var(&self, var: &str, value: &Polynomial) -> Result<Polynomial, RingError> {
        let mut assignment = HashMap::new();
        for v in self.ring.vars() {
            if v == var {
                assignment.insert(v.clone(), value.clone());
            } else {
                assignment.insert(v.clone(), Polynomial::var(value.ring(), v)?);
            }
        }
        self.substitute(&assignment)
    }

    /// Map the polynomial into a ring whose variable set contains every
    /// variable the polynomial actually uses (matched by name).
    pub fn embed(&self, target: &Arc<RingContext>) -> Result<Polynomial, RingError> {
        let index: Vec<Option<usize>> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.var_index(v))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut exps = vec![0u16; target.nvars()];
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e > 0 {
                    let j = index[i].ok_or_else(|| {
                        RingError::UndeclaredVariable(self.ring.vars()[i].clone())
                    })?;
                    exps[j] = e;
                }
            }
            terms.push(Term {
                mono: Monomial::new(exps),
                coeff: t.coeff.clone(),
            });
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// True if no term uses the given variable index.
    pub fn is_free_of(&self, idx: usize) -> bool {
        self.terms.iter().all(|t| t.mono.exp(idx) == 0)
    }

    /// Divide all coefficients by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some(lt) => {
                let inv = lt.coeff.recip();
                self.scale(&inv)
            }
        }
    }

    /// The rational content: gcd of numerators over lcm of denominators,
    /// signed like the leading coefficient. Dividing by it gives the
    /// integer-primitive normalization.
    pub fn content(&self) -> Coeff {
        if self.is_zero() {
            return Coeff::zero();
        }
        let mut denom_lcm = BigInt::one();
        for t in &self.terms {
            denom_lcm = num_integer::lcm(denom_lcm, t.coeff.denom().clone());
        }
        let mut num_gcd = BigInt::zero();
        for t in &self.terms {
            let scaled = t.coeff.numer() * (&denom_lcm / t.coeff.denom());
            num_gcd = num_integer::gcd(num_gcd, scaled);
        }
        let mut content = Coeff::new(num_gcd, denom_lcm);
        if self.terms[0].coeff.is_negative() {
            content = -content;
        }
        content
    }

    /// Integer-primitive normalization: clear denominators, divide by the
    /// gcd of numerators, make the leading coefficient positive.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.content().recip())
    }

    /// `s*self - c*m*other` in one sorted merge; the fraction-free
    /// reduction step.
    pub fn scaled_sub_scaled(
        &self,
        s: &Coeff,
        c: &Coeff,
        m: &Monomial,
        other: &Polynomial,
    ) -> Polynomial {
        let order = self.ring.order();
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let om = other.terms[j].mono.mul(m);
            match order.cmp(&self.terms[i].mono, &om) {
                Ordering::Greater => {
                    out.push(Term {
                        mono: self.terms[i].mono.clone(),
                        coeff: &self.terms[i].coeff * s,
                    });
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        mono: om,
                        coeff: -(&other.terms[j].coeff * c),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = &self.terms[i].coeff * s - &other.terms[j].coeff * c;
                    if !coeff.is_zero() {
                        out.push(Term { mono: om, coeff });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        while i < self.terms.len() {
            out.push(Term {
                mono: self.terms[i].mono.clone(),
                coeff: &self.terms[i].coeff * s,
            });
            i += 1;
        }
        while j < other.terms.len() {
            out.push(Term {
                mono: other.terms[j].mono.mul(m),
                coeff: -(&other.terms[j].coeff * c),
            });
            j += 1;
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        }
    }

    /// Exact division by a known divisor; `None` if the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        debug_assert!(self.same_ring(divisor));
        let dlt = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot_terms = Vec::new();
        while let Some(lt) = rem.leading_term() {
            if !dlt.mono.divides(&lt.mono) {
                return None;
            }
            let m = dlt.mono.quotient_into(&lt.mono);
            let c = &lt.coeff / &dlt.coeff;
            quot_terms.push(Term {
                mono: m.clone(),
                coeff: c.clone(),
            });
            rem = rem.sub_scaled(&c, &m, divisor);
        }
        Some(Polynomial::from_terms(&self.ring, quot_terms))
    }

    /// Stable structural comparison used only for deterministic output
    /// ordering (leading monomial first, then the full term list).
    pub fn canonical_cmp(&self, other: &Polynomial) -> Ordering {
        let order = self.ring.order();
        let mut i = 0;
        loop {
            match (self.terms.get(i), other.terms.get(i)) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(a), Some(b)) => {
                    match order.cmp(&a.mono, &b.mono) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                    match a.coeff.cmp(&b.coeff) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
            }
            i += 1;
        }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if !self.same_ring(other) || self.terms.len() != other.terms.len() {
            return false;
        }
        self.terms
            .iter()
            .zip(&other.terms)
            .all(|(a, b)| a.mono == b.mono && a.coeff == b.coeff)
    }
}

impl Eq for Polynomial {}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_polynomial;

    fn ring2() -> Arc<RingContext> {
        RingContext::new(["x", "y"], MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn arithmetic_round_trip() {
        let r = ring2();
        let p = parse_polynomial("x^2 + 2*x*y + y^2", &r).unwrap();
        let q = parse_polynomial("x + y", &r).unwrap();
        assert_eq!(q.mul(&q), p);
        assert_eq!(p.sub(&p), Polynomial::zero(&r));
        assert_eq!(q.pow(2), p);
    }

    #[test]
    fn derivative_power_rule() {
        let r = RingContext::new(["u", "v"], MonomialOrder::DegRevLex).unwrap();
        let p = parse_polynomial("u^7 + u^3*v^4 + v^6", &r).unwrap();
        let du = p.partial_derivative("u").unwrap();
        assert_eq!(du, parse_polynomial("7*u^6 + 3*u^2*v^4", &r).unwrap());
        let c = parse_polynomial("5", &r).unwrap();
        assert!(c.partial_derivative("v").unwrap().is_zero());
    }

    #[test]
    fn substitute_composition_vanishes() {
        let target = RingContext::new(["y"], MonomialOrder::DegRevLex).unwrap();
        let src = RingContext::new(["X", "Y"], MonomialOrder::DegRevLex).unwrap();
        let p = parse_polynomial("Y^2 - X^3", &src).unwrap();
        let mut asg = HashMap::new();
        asg.insert("X".to_string(), parse_polynomial("y^2", &target).unwrap());
        asg.insert("Y".to_string(), parse_polynomial("y^3", &target).unwrap());
        assert!(p.substitute(&asg).unwrap().is_zero());
    }

    #[test]
    fn substitute_identity_is_identity() {
        let r = ring2();
        let p = parse_polynomial("x^2*y - 3*y + 1/2", &r).unwrap();
        let mut asg = HashMap::new();
        asg.insert("x".to_string(), Polynomial::var(&r, "x").unwrap());
        asg.insert("y".to_string(), Polynomial::var(&r, "y").unwrap());
        assert_eq!(p.substitute(&asg).unwrap(), p);
    }

    #[test]
    fn sign_convention_probe() {
        // H = Y^2 + X(X^2 + L)^2 composed with (y^2, y^5 + l*y, l) is nonzero,
        // while the opposite sign vanishes.
        let src = RingContext::new(["X", "Y", "L"], MonomialOrder::DegRevLex).unwrap();
        let tgt = RingContext::new(["y", "l"], MonomialOrder::DegRevLex).unwrap();
        let mut asg = HashMap::new();
        asg.insert("X".to_string(), parse_polynomial("y^2", &tgt).unwrap());
        asg.insert("Y".to_string(), parse_polynomial("y^5 + l*y", &tgt).unwrap());
        asg.insert("L".to_string(), parse_polynomial("l", &tgt).unwrap());
        let plus = parse_polynomial("Y^2 + X*(X^2 + L)^2", &src).unwrap();
        let minus = parse_polynomial("Y^2 - X*(X^2 + L)^2", &src).unwrap();
        assert!(!plus.substitute(&asg).unwrap().is_zero());
        assert!(minus.substitute(&asg).unwrap().is_zero());
    }

    #[test]
    fn exact_division() {
        let r = ring2();
        let p = parse_polynomial("x^3 - y^3", &r).unwrap();
        let d = parse_polynomial("x - y", &r).unwrap();
        let q = p.exact_div(&d).unwrap();
        assert_eq!(q, parse_polynomial("x^2 + x*y + y^2", &r).unwrap());
        assert!(parse_polynomial("x^3 - y^3 + 1", &r)
            .unwrap()
            .exact_div(&d)
            .is_none());
    }

    #[test]
    fn primitive_normalization() {
        let r = ring2();
        let p = parse_polynomial("2/3*x^2 - 4/9*y", &r).unwrap();
        let prim = p.primitive();
        assert_eq!(prim, parse_polynomial("3*x^2 - 2*y", &r).unwrap());
        let n = parse_polynomial("0 - 2*x", &r).unwrap().primitive();
        assert_eq!(n, parse_polynomial("x", &r).unwrap());
    }
}
