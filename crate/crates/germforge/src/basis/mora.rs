//! Mora's tangent-cone algorithm: weak normal forms and standard bases for
//! local orders.
//!
//! The ecart-driven normal form admits intermediate remainders as reducers,
//! which is what makes division terminate below a local order (where naive
//! division can cycle: reducing `x` by `x - x^2` produces `x^2`, `x^3`, …).

use super::buchberger::{pop_best_pair, spoly, update_pairs};
use crate::ring::{Monomial, Polynomial};

/// Mora weak normal form of `p` against `basis`.
///
/// Returns `h` with `u*p = a_1*g_1 + ... + a_s*g_s + h` for some unit `u`
/// of the local ring; when `basis` is a standard basis, `h == 0` iff `p`
/// lies in the ideal generated by `basis` in the local ring.
pub(crate) fn mora_normal_form(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut h = p.clone();
    let mut reducers: Vec<Polynomial> = basis.to_vec();
    let mut ecarts: Vec<u32> = reducers.iter().map(|g| g.ecart()).collect();
    while let Some(lt) = h.leading_term() {
        let lm = lt.mono.clone();
        // divisor of minimal ecart
        let mut best: Option<usize> = None;
        for (k, g) in reducers.iter().enumerate() {
            if g.leading_monomial().unwrap().divides(&lm) {
                match best {
                    None => best = Some(k),
                    Some(b) if ecarts[k] < ecarts[b] => best = Some(k),
                    _ => {}
                }
            }
        }
        let Some(k) = best else {
            return h;
        };
        let h_ecart = h.ecart();
        if ecarts[k] > h_ecart {
            reducers.push(h.clone());
            ecarts.push(h_ecart);
        }
        let glt = reducers[k].leading_term().unwrap();
        let m = glt.mono.quotient_into(&lm);
        let c = &lt.coeff / &glt.coeff;
        h = h.sub_scaled(&c, &m, &reducers[k]).primitive();
    }
    h
}

/// Standard basis for a local order, computed with Buchberger's loop on top
/// of the Mora normal form. The result is minimal (no leading monomial
/// divides another), monic and canonically sorted; tails are left as
/// computed since tail reduction need not terminate below a local order.
pub(crate) fn mora_standard_basis(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.primitive());
        }
    }
    if basis.is_empty() {
        return basis;
    }
    debug_assert!(basis[0].ring().order().is_local());
    let mut lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial().unwrap().clone())
        .collect();
    let order = basis[0].ring().order();
    let mut pairs = Vec::new();
    for t in 0..basis.len() {
        update_pairs(&mut pairs, &lms, t, false, |_| false);
    }
    while let Some(pair) = pop_best_pair(&mut pairs, order) {
        let s = spoly(&basis[pair.i], &basis[pair.j], &pair.lcm);
        let h = mora_normal_form(&s, &basis).primitive();
        if !h.is_zero() {
            lms.push(h.leading_monomial().unwrap().clone());
            basis.push(h);
            update_pairs(&mut pairs, &lms, basis.len() - 1, false, |_| false);
        }
    }
    // minimalize
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
    let mut minimal: Vec<Polynomial> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| k.then(|| g.monic()))
        .collect();
    minimal.sort_by(|a, b| a.canonical_cmp(b));
    minimal
}
