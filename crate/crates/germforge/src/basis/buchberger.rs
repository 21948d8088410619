//! Buchberger's algorithm for global monomial orders.

use crate::ring::{Coeff, Monomial, MonomialOrder, Polynomial, Term};
use num_traits::Zero;
use std::cmp::Ordering;

/// Critical pair: indices into the basis plus the cached lcm of the leading
/// monomials.
#[derive(Clone)]
pub(crate) struct Pair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
}

/// Gebauer–Möller pair update. `product_criterion` must be disabled for
/// local orders and for module computations, where only the chain criterion
/// is sound.
pub(crate) fn update_pairs(
    pairs: &mut Vec<Pair>,
    lms: &[Monomial],
    t: usize,
    product_criterion: bool,
    skip: impl Fn(usize) -> bool,
) {
    let lm_t = &lms[t];
    let fresh: Vec<Pair> = (0..t)
        .filter(|&i| !skip(i))
        .map(|i| Pair {
            i,
            j: t,
            lcm: lms[i].lcm(lm_t),
        })
        .collect();

    // Criterion M: keep only pairs whose lcm is minimal among the fresh ones.
    let mut keep = vec![true; fresh.len()];
    for a in 0..fresh.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..fresh.len() {
            if a == b || !keep[b] {
                continue;
            }
            if fresh[b].lcm.divides(&fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm {
                keep[a] = false;
                break;
            }
        }
    }
    // Criterion F: among equal lcms keep a single representative, preferring
    // one with coprime leading monomials so the product criterion can fire.
    for a in 0..fresh.len() {
        if !keep[a] {
            continue;
        }
        for b in (a + 1)..fresh.len() {
            if keep[b] && fresh[a].lcm == fresh[b].lcm {
                if product_criterion && lms[fresh[b].i].gcd_is_one(lm_t) {
                    keep[a] = false;
                } else {
                    keep[b] = false;
                }
            }
        }
    }
    // Product criterion.
    if product_criterion {
        for (a, pair) in fresh.iter().enumerate() {
            if keep[a] && lms[pair.i].gcd_is_one(lm_t) {
                keep[a] = false;
            }
        }
    }
    // Criterion B on the surviving old pairs.
    pairs.retain(|p| {
        !(lm_t.divides(&p.lcm) && lms[p.i].lcm(lm_t) != p.lcm && lms[p.j].lcm(lm_t) != p.lcm)
    });
    pairs.extend(
        fresh
            .into_iter()
            .zip(keep)
            .filter_map(|(p, k)| k.then_some(p)),
    );
}

/// Normal selection: pop the pair whose lcm is closest to 1 in the order —
/// the smallest for a global order, the largest for a local one.
pub(crate) fn pop_best_pair(pairs: &mut Vec<Pair>, order: MonomialOrder) -> Option<Pair> {
    if pairs.is_empty() {
        return None;
    }
    let global = order.is_global();
    let mut best = 0;
    for k in 1..pairs.len() {
        let by_order = order.cmp(&pairs[k].lcm, &pairs[best].lcm);
        let toward_one = if global { by_order } else { by_order.reverse() };
        let cmp = toward_one
            .then_with(|| (pairs[k].i, pairs[k].j).cmp(&(pairs[best].i, pairs[best].j)));
        if cmp == Ordering::Less {
            best = k;
        }
    }
    Some(pairs.swap_remove(best))
}

pub(crate) fn spoly(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let lf = f.leading_term().expect("spoly of nonzero");
    let lg = g.leading_term().expect("spoly of nonzero");
    let mf = lf.mono.quotient_into(lcm);
    let mg = lg.mono.quotient_into(lcm);
    let a = f.mul_term(&lg.coeff, &mf);
    let c = lf.coeff.clone();
    a.sub_scaled(&c, &mg, g)
}

/// Pick a reducer among the active divisors: fewest terms, then oldest.
fn pick_reducer(lm: &Monomial, basis: &[Polynomial], active: &[bool]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (k, g) in basis.iter().enumerate() {
        if !active[k] {
            continue;
        }
        if let Some(glm) = g.leading_monomial() {
            if glm.divides(lm) {
                match best {
                    None => best = Some(k),
                    Some(b) if basis[k].terms().len() < basis[b].terms().len() => best = Some(k),
                    _ => {}
                }
            }
        }
    }
    best
}

/// `(b/a)` as a reduced fraction `(numer, denom)`: the fraction-free step
/// multipliers. `denom*tail - numer*m*g` cancels the leading term.
fn step_factors(a: &Coeff, b: &Coeff) -> (Coeff, Coeff) {
    let r = b / a;
    (
        Coeff::from(r.denom().clone()),
        Coeff::from(r.numer().clone()),
    )
}

/// One fraction-free reduction step on a term queue:
/// `sf * tail - cf * m * g`, returning the scale applied to the tail.
fn queue_step(
    tail: &mut std::collections::VecDeque<Term>,
    g: &Polynomial,
    order: MonomialOrder,
) -> Coeff {
    let lt = tail.front().expect("nonempty tail");
    let glt = g.leading_term().expect("nonzero reducer");
    let m = glt.mono.quotient_into(&lt.mono);
    let (sf, cf) = step_factors(&glt.coeff, &lt.coeff);
    let mut out = std::collections::VecDeque::with_capacity(tail.len() + g.terms().len());
    let mut j = 0;
    let gterms = g.terms();
    while let Some(t) = tail.pop_front() {
        let mut placed = false;
        while j < gterms.len() {
            let om = gterms[j].mono.mul(&m);
            match order.cmp(&t.mono, &om) {
                Ordering::Greater => break,
                Ordering::Less => {
                    out.push_back(Term {
                        mono: om,
                        coeff: -(&gterms[j].coeff * &cf),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = &t.coeff * &sf - &gterms[j].coeff * &cf;
                    j += 1;
                    if !coeff.is_zero() {
                        out.push_back(Term { mono: om, coeff });
                    }
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            out.push_back(Term {
                mono: t.mono,
                coeff: t.coeff * &sf,
            });
        }
    }
    while j < gterms.len() {
        out.push_back(Term {
            mono: gterms[j].mono.mul(&m),
            coeff: -(&gterms[j].coeff * &cf),
        });
        j += 1;
    }
    *tail = out;
    sf
}

/// Strip the integer content of the queue, returning it.
fn queue_content_strip(tail: &mut std::collections::VecDeque<Term>) -> Coeff {
    use num_traits::{One, Signed};
    if tail.is_empty() {
        return Coeff::one();
    }
    let mut denom = num_bigint::BigInt::from(1);
    for t in tail.iter() {
        denom = num_integer::lcm(denom, t.coeff.denom().clone());
    }
    let mut numer = num_bigint::BigInt::from(0);
    for t in tail.iter() {
        numer = num_integer::gcd(numer, t.coeff.numer() * (&denom / t.coeff.denom()));
    }
    let mut content = Coeff::new(numer, denom);
    if tail.front().unwrap().coeff.is_negative() {
        content = -content;
    }
    let inv = content.clone().recip();
    for t in tail.iter_mut() {
        t.coeff = &t.coeff * &inv;
    }
    content
}

/// Full normal form (head and tail) against the active part of `basis`,
/// computed fraction-free; returns the exact normal form.
pub(crate) fn reduce_full_active(
    p: &Polynomial,
    basis: &[Polynomial],
    active: &[bool],
) -> Polynomial {
    use num_traits::One;
    let ring = p.ring().clone();
    let order = ring.order();
    let mut tail: std::collections::VecDeque<Term> = p.terms().to_vec().into();
    // rem terms remember the tail scale at the time of emission
    let mut rem: Vec<(Term, Coeff)> = Vec::new();
    let mut scale = Coeff::one();
    let mut steps = 0u32;
    while let Some(lt) = tail.front() {
        match pick_reducer(&lt.mono, basis, active) {
            None => {
                let t = tail.pop_front().unwrap();
                rem.push((t, scale.clone()));
            }
            Some(k) => {
                let sf = queue_step(&mut tail, &basis[k], order);
                scale = scale * sf;
                steps += 1;
                if steps % 16 == 0 {
                    let c = queue_content_strip(&mut tail);
                    scale = scale / c;
                }
            }
        }
    }
    let _ = scale;
    let terms: Vec<Term> = rem
        .into_iter()
        .map(|(t, sk)| Term {
            mono: t.mono,
            coeff: t.coeff / sk,
        })
        .collect();
    Polynomial::from_sorted_terms(&ring, terms)
}

/// Full normal form against all of `basis`.
pub(crate) fn reduce_full(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let active = vec![true; basis.len()];
    reduce_full_active(p, basis, &active)
}

/// Reduced Gröbner basis: monic generators, sorted ascending by leading
/// monomial.
pub(crate) fn groebner(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut input: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    if input.is_empty() {
        return input;
    }
    let order = input[0].ring().order();
    debug_assert!(order.is_global());
    // seed with an interreduced input set
    input.sort_by(|a, b| a.canonical_cmp(b));
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let insert = |h: Polynomial,
                      basis: &mut Vec<Polynomial>,
                      lms: &mut Vec<Monomial>,
                      active: &mut Vec<bool>,
                      pairs: &mut Vec<Pair>| {
        let lm = h.leading_monomial().unwrap().clone();
        for k in 0..basis.len() {
            if active[k] && lm.divides(&lms[k]) {
                active[k] = false;
            }
        }
        basis.push(h);
        lms.push(lm);
        active.push(true);
        let t = basis.len() - 1;
        let inactive = |i: usize| !active[i];
        update_pairs(pairs, lms, t, true, inactive);
    };

    for g in input {
        let h = reduce_full_active(&g, &basis, &active).primitive();
        if !h.is_zero() {
            insert(h, &mut basis, &mut lms, &mut active, &mut pairs);
        }
    }

    let trace = std::env::var("GERMFORGE_GB_TRACE").is_ok();
    let mut steps = 0u64;
    while let Some(pair) = pop_best_pair(&mut pairs, order) {
        let s = spoly(&basis[pair.i], &basis[pair.j], &pair.lcm);
        let h = reduce_full_active(&s, &basis, &active).primitive();
        steps += 1;
        if trace && steps % 10 == 0 {
            let nactive = active.iter().filter(|&&a| a).count();
            let maxterms = basis.iter().map(|b| b.terms().len()).max().unwrap_or(0);
            let maxbits = basis
                .iter()
                .flat_map(|b| b.terms().iter().map(|t| t.coeff.numer().bits()))
                .max()
                .unwrap_or(0);
            eprintln!(
                "gb step {steps}: basis {} (active {nactive}), pairs {}, max terms {maxterms}, max bits {maxbits}, h terms {}, lcm deg {}",
                basis.len(), pairs.len(), h.terms().len(), pair.lcm.degree()
            );
        }
        if !h.is_zero() {
            insert(h, &mut basis, &mut lms, &mut active, &mut pairs);
        }
    }

    let survivors: Vec<Polynomial> = basis
        .into_iter()
        .zip(active)
        .filter_map(|(g, a)| a.then_some(g))
        .collect();
    interreduce(survivors)
}

/// Minimalize and tail-reduce a basis; output monic and canonically sorted.
pub(crate) fn interreduce(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut keep = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..basis.len() {
            if a != b && keep[b] {
                let la = basis[a].leading_monomial().unwrap();
                let lb = basis[b].leading_monomial().unwrap();
                if lb.divides(la) && (lb != la || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let mut active = vec![true; minimal.len()];
        active[i] = false;
        reduced.push(reduce_full_active(&minimal[i], &minimal, &active).monic());
    }
    reduced.sort_by(|a, b| a.canonical_cmp(b));
    reduced
}
