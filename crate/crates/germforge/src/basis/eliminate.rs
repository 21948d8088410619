//! Elimination ideals via block orders.

use super::buchberger::groebner;
use super::BasisError;
use crate::ring::{MonomialOrder, Polynomial, RingContext};

/// Generators of `<gens> ∩ k[vars \ drop]`, returned in a fresh degrevlex
/// ring on the remaining variables (original relative order), reduced,
/// monic and canonically sorted.
pub fn eliminate(gens: &[Polynomial], drop: &[String]) -> Result<Vec<Polynomial>, BasisError> {
    if gens.is_empty() {
        return Err(BasisError::EmptyGenerators);
    }
    let ring = gens[0].ring().clone();
    for g in gens {
        if !g.same_ring(&gens[0]) {
            return Err(BasisError::MixedRings);
        }
    }
    for d in drop {
        if ring.var_index(d).is_none() {
            return Err(BasisError::UnknownVariable(d.clone()));
        }
    }
    let dropped: Vec<String> = ring
        .vars()
        .iter()
        .filter(|v| drop.contains(v))
        .cloned()
        .collect();
    let kept: Vec<String> = ring
        .vars()
        .iter()
        .filter(|v| !drop.contains(v))
        .cloned()
        .collect();

    let split = dropped.len();
    let block_vars: Vec<String> = dropped.iter().chain(kept.iter()).cloned().collect();
    let block_ring = RingContext::new(block_vars, MonomialOrder::Block { split })
        .expect("variable names already unique");
    let mapped: Vec<Polynomial> = gens
        .iter()
        .map(|g| g.embed(&block_ring).expect("same variable names"))
        .collect();
    let gb = groebner(mapped);

    let sub_ring = RingContext::new(kept, MonomialOrder::DegRevLex).expect("unique names");
    let mut out = Vec::new();
    for g in gb {
        let free = (0..split).all(|i| g.is_free_of(i));
        // the block order guarantees: leading term free of the first block
        // implies the whole polynomial is
        debug_assert_eq!(
            free,
            g.leading_monomial()
                .map(|m| (0..split).all(|i| m.exp(i) == 0))
                .unwrap_or(true)
        );
        if free {
            out.push(g.embed(&sub_ring).expect("kept variables present"));
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_polynomial;

    #[test]
    fn cusp_image() {
        let r = RingContext::new(["y", "X", "Y"], MonomialOrder::DegRevLex).unwrap();
        let gens = vec![
            parse_polynomial("X - y^2", &r).unwrap(),
            parse_polynomial("Y - y^3", &r).unwrap(),
        ];
        let out = eliminate(&gens, &["y".to_string()]).unwrap();
        assert_eq!(out.len(), 1);
        let sub = out[0].ring().clone();
        // monic under degrevlex: X^3 - Y^2
        assert_eq!(out[0], parse_polynomial("X^3 - Y^2", &sub).unwrap());
    }

    #[test]
    fn drop_nothing_returns_reduced_basis() {
        let r = RingContext::new(["x", "X"], MonomialOrder::DegRevLex).unwrap();
        let gens = vec![parse_polynomial("X - x", &r).unwrap()];
        let out = eliminate(&gens, &[]).unwrap();
        assert_eq!(out.len(), 1);
        let sub = out[0].ring().clone();
        // monic under degrevlex on (x, X): x - X, the same ideal
        assert_eq!(out[0], parse_polynomial("x - X", &sub).unwrap());
    }

    #[test]
    fn unknown_drop_variable_errors() {
        let r = RingContext::new(["x"], MonomialOrder::DegRevLex).unwrap();
        let gens = vec![parse_polynomial("x", &r).unwrap()];
        assert!(matches!(
            eliminate(&gens, &["z".to_string()]),
            Err(BasisError::UnknownVariable(_))
        ));
    }
}
