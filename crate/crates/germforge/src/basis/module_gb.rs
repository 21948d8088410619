//! Gröbner bases of submodules of free modules, with cofactor tracking.
//!
//! Used for syzygy computation: while running Buchberger on the columns,
//! every element carries its representation in terms of the original
//! generators. S-pairs that reduce to zero hand over a syzygy; reducing the
//! original generators against the finished basis supplies the rest. This
//! is Schreyer's construction, so the collected vectors generate the whole
//! syzygy module.

use crate::ring::{Coeff, Monomial, MonomialOrder, Polynomial, RingContext};
use num_traits::Zero;
use std::cmp::Ordering;
use std::sync::Arc;

/// Term of a free-module element: position, monomial, coefficient.
#[derive(Clone, Debug)]
pub(crate) struct VTerm {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Sparse element of `R^rank`, terms sorted descending position-over-term:
/// lower position dominates, ties broken by the ring order.
#[derive(Clone, Debug)]
pub(crate) struct VPoly {
    pub terms: Vec<VTerm>,
}

fn vterm_cmp(order: MonomialOrder, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| order.cmp(a.1, b.1))
}

impl VPoly {
    pub fn zero() -> Self {
        VPoly { terms: Vec::new() }
    }

    pub fn from_components(components: &[Polynomial], order: MonomialOrder) -> Self {
        let mut terms = Vec::new();
        for (pos, p) in components.iter().enumerate() {
            for t in p.terms() {
                terms.push(VTerm {
                    pos,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                });
            }
        }
        terms.sort_by(|a, b| vterm_cmp(order, (b.pos, &b.mono), (a.pos, &a.mono)));
        VPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    /// `self - c * m * other`, one sorted merge.
    pub fn sub_scaled(&self, c: &Coeff, m: &Monomial, other: &VPoly, order: MonomialOrder) -> VPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let bm = other.terms[j].mono.mul(m);
            match vterm_cmp(order, (a.pos, &a.mono), (other.terms[j].pos, &bm)) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(VTerm {
                        pos: other.terms[j].pos,
                        mono: bm,
                        coeff: -(&other.terms[j].coeff * c),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = &a.coeff - &(&other.terms[j].coeff * c);
                    if !coeff.is_zero() {
                        out.push(VTerm {
                            pos: a.pos,
                            mono: bm,
                            coeff,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for t in &other.terms[j..] {
            out.push(VTerm {
                pos: t.pos,
                mono: t.mono.mul(m),
                coeff: -(&t.coeff * c),
            });
        }
        VPoly { terms: out }
    }

    pub fn scale(&self, c: &Coeff) -> VPoly {
        VPoly {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    pos: t.pos,
                    mono: t.mono.clone(),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }
}

/// A module element together with its cofactors over the original columns.
#[derive(Clone)]
struct Tracked {
    lead: VPoly,
    track: Vec<Polynomial>,
}

impl Tracked {
    fn sub_scaled(&self, c: &Coeff, m: &Monomial, other: &Tracked, order: MonomialOrder) -> Tracked {
        Tracked {
            lead: self.lead.sub_scaled(c, m, &other.lead, order),
            track: self
                .track
                .iter()
                .zip(&other.track)
                .map(|(a, b)| a.sub_scaled(c, m, b))
                .collect(),
        }
    }

    fn primitive(mut self, ring: &Arc<RingContext>) -> Tracked {
        // normalize by the content over lead and track together so the
        // invariant lead = Σ track_i · column_i is preserved
        let mut all = Vec::new();
        for t in &self.lead.terms {
            all.push(t.coeff.clone());
        }
        for p in &self.track {
            for t in p.terms() {
                all.push(t.coeff.clone());
            }
        }
        if all.is_empty() {
            return self;
        }
        let mut denom = num_bigint::BigInt::from(1);
        for c in &all {
            denom = num_integer::lcm(denom, c.denom().clone());
        }
        let mut numer = num_bigint::BigInt::zero();
        for c in &all {
            numer = num_integer::gcd(numer, c.numer() * (&denom / c.denom()));
        }
        if numer.is_zero() {
            return self;
        }
        let factor = Coeff::new(denom, numer);
        self.lead = self.lead.scale(&factor);
        self.track = self.track.iter().map(|p| p.scale(&factor)).collect();
        let _ = ring;
        self
    }
}

struct MPair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
}

/// Syzygy module generators of the given columns (each a rank-`rank`
/// vector flattened as a `VPoly`). Global orders only; the local syzygy
/// module is generated by the same vectors since localization is flat.
pub(crate) fn syzygies(
    columns: &[VPoly],
    rank: usize,
    ring: &Arc<RingContext>,
) -> Vec<Vec<Polynomial>> {
    let order = ring.order();
    debug_assert!(order.is_global());
    let m = columns.len();
    let mut basis: Vec<Tracked> = Vec::new();
    let mut syz: Vec<Vec<Polynomial>> = Vec::new();

    let reduce = |mut e: Tracked, basis: &[Tracked], order: MonomialOrder| -> Tracked {
        'outer: while let Some(lt) = e.lead.lead() {
            for g in basis {
                if let Some(glt) = g.lead.lead() {
                    if glt.pos == lt.pos && glt.mono.divides(&lt.mono) {
                        let mq = glt.mono.quotient_into(&lt.mono);
                        let c = &lt.coeff / &glt.coeff;
                        e = e.sub_scaled(&c, &mq, g, order);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        e
    };

    let mut pairs: Vec<MPair> = Vec::new();
    let add_element = |e: Tracked,
                           basis: &mut Vec<Tracked>,
                           pairs: &mut Vec<MPair>| {
        let lt = e.lead.lead().expect("nonzero element");
        let (pos, lm) = (lt.pos, lt.mono.clone());
        let t = basis.len();
        // chain criteria within the same leading position
        let mut fresh: Vec<MPair> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let glt = g.lead.lead().unwrap();
            if glt.pos == pos {
                fresh.push(MPair {
                    i,
                    j: t,
                    pos,
                    lcm: glt.mono.lcm(&lm),
                });
            }
        }
        let mut keep = vec![true; fresh.len()];
        for a in 0..fresh.len() {
            if !keep[a] {
                continue;
            }
            for b in 0..fresh.len() {
                if a != b
                    && keep[b]
                    && fresh[b].lcm.divides(&fresh[a].lcm)
                    && (fresh[b].lcm != fresh[a].lcm || b < a)
                {
                    keep[a] = false;
                    break;
                }
            }
        }
        pairs.retain(|p| {
            !(p.pos == pos
                && lm.divides(&p.lcm)
                && basis[p.i].lead.lead().unwrap().mono.lcm(&lm) != p.lcm
                && basis[p.j].lead.lead().unwrap().mono.lcm(&lm) != p.lcm)
        });
        pairs.extend(fresh.into_iter().zip(keep).filter_map(|(p, k)| k.then_some(p)));
        basis.push(e);
    };

    for (i, col) in columns.iter().enumerate() {
        let mut track = vec![Polynomial::zero(ring); m];
        track[i] = Polynomial::one(ring);
        let e = Tracked {
            lead: col.clone(),
            track,
        };
        if e.lead.is_zero() {
            // a zero column: its unit vector is already a syzygy
            syz.push(e.track);
            continue;
        }
        let e = reduce(e, &basis, order);
        if e.lead.is_zero() {
            syz.push(e.track);
        } else {
            add_element(e.primitive(ring), &mut basis, &mut pairs);
        }
    }

    while !pairs.is_empty() {
        // normal selection: smallest (degree, order) lcm
        let mut best = 0;
        for k in 1..pairs.len() {
            let c = pairs[k]
                .lcm
                .degree()
                .cmp(&pairs[best].lcm.degree())
                .then_with(|| order.cmp(&pairs[best].lcm, &pairs[k].lcm))
                .then_with(|| (pairs[k].i, pairs[k].j).cmp(&(pairs[best].i, pairs[best].j)));
            if c == Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let (f, g) = (&basis[pair.i], &basis[pair.j]);
        let flt = f.lead.lead().unwrap();
        let glt = g.lead.lead().unwrap();
        let mf = flt.mono.quotient_into(&pair.lcm);
        let mg = glt.mono.quotient_into(&pair.lcm);
        let a = Tracked {
            lead: VPoly::zero().sub_scaled(&-glt.coeff.clone(), &mf, &f.lead, order),
            track: f
                .track
                .iter()
                .map(|p| p.mul_term(&glt.coeff, &mf))
                .collect(),
        };
        let c = flt.coeff.clone();
        let s = a.sub_scaled(&c, &mg, g, order);
        let s = reduce(s, &basis, order);
        if s.lead.is_zero() {
            syz.push(s.primitive(ring).track);
        } else {
            add_element(s.primitive(ring), &mut basis, &mut pairs);
        }
    }

    // the completion rows: reduce each original generator to zero against
    // the finished basis and keep the cofactor difference
    for (i, col) in columns.iter().enumerate() {
        if col.is_zero() {
            continue;
        }
        let mut track = vec![Polynomial::zero(ring); m];
        track[i] = Polynomial::one(ring);
        let e = reduce(
            Tracked {
                lead: col.clone(),
                track,
            },
            &basis,
            order,
        );
        debug_assert!(e.lead.is_zero(), "original column must reduce to zero");
        syz.push(e.primitive(ring).track);
    }

    let _ = rank;
    // normalize, dedupe, drop zero rows, sort deterministically
    let mut out: Vec<Vec<Polynomial>> = Vec::new();
    for row in syz {
        if row.iter().all(|p| p.is_zero()) {
            continue;
        }
        let row = primitive_row(row);
        if !out.iter().any(|r| r == &row) {
            out.push(row);
        }
    }
    out.sort_by(|a, b| {
        for (x, y) in a.iter().zip(b.iter()) {
            match x.canonical_cmp(y) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    });
    out
}

fn primitive_row(row: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut denom = num_bigint::BigInt::from(1);
    let mut numer = num_bigint::BigInt::zero();
    for p in &row {
        for t in p.terms() {
            denom = num_integer::lcm(denom, t.coeff.denom().clone());
        }
    }
    for p in &row {
        for t in p.terms() {
            numer = num_integer::gcd(numer, t.coeff.numer() * (&denom / t.coeff.denom()));
        }
    }
    if numer.is_zero() {
        return row;
    }
    // sign: first nonzero leading coefficient positive
    let mut factor = Coeff::new(denom, numer);
    if let Some(lc) = row
        .iter()
        .find_map(|p| p.leading_term().map(|t| t.coeff.clone()))
    {
        if (lc * &factor) < Coeff::zero() {
            factor = -factor;
        }
    }
    row.iter().map(|p| p.scale(&factor)).collect()
}

/// Plain module Gröbner basis (no tracking), for membership tests.
pub(crate) fn module_groebner(columns: &[VPoly], order: MonomialOrder) -> Vec<VPoly> {
    let mut basis: Vec<VPoly> = columns.iter().filter(|c| !c.is_zero()).cloned().collect();
    let mut pairs: Vec<MPair> = Vec::new();
    let push_pairs = |basis: &[VPoly], t: usize, pairs: &mut Vec<MPair>| {
        let lt = basis[t].lead().unwrap();
        for i in 0..t {
            let g = basis[i].lead().unwrap();
            if g.pos == lt.pos {
                pairs.push(MPair {
                    i,
                    j: t,
                    pos: lt.pos,
                    lcm: g.mono.lcm(&lt.mono),
                });
            }
        }
    };
    for t in 0..basis.len() {
        push_pairs(&basis, t, &mut pairs);
    }
    while let Some(pair) = pairs.pop() {
        let flt = basis[pair.i].lead().unwrap().clone();
        let glt = basis[pair.j].lead().unwrap().clone();
        let mf = flt.mono.quotient_into(&pair.lcm);
        let mg = glt.mono.quotient_into(&pair.lcm);
        let a = VPoly::zero().sub_scaled(&-glt.coeff.clone(), &mf, &basis[pair.i], order);
        let s = a.sub_scaled(&flt.coeff, &mg, &basis[pair.j], order);
        let s = module_reduce(&s, &basis, order);
        if !s.is_zero() {
            basis.push(s);
            push_pairs(&basis, basis.len() - 1, &mut pairs);
        }
    }
    basis
}

pub(crate) fn module_reduce(v: &VPoly, basis: &[VPoly], order: MonomialOrder) -> VPoly {
    let mut h = v.clone();
    'outer: while let Some(lt) = h.lead() {
        for g in basis {
            if let Some(glt) = g.lead() {
                if glt.pos == lt.pos && glt.mono.divides(&lt.mono) {
                    let mq = glt.mono.quotient_into(&lt.mono);
                    let c = &lt.coeff / &glt.coeff;
                    h = h.sub_scaled(&c, &mq, g, order);
                    continue 'outer;
                }
            }
        }
        break;
    }
    h
}
