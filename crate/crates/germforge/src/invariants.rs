//! Scalar invariants of function germs: Milnor and Tjurina numbers, the
//! Briançon–Skoda exponent, quasi-homogeneity, and the named function
//! families the catalog uses.

use crate::basis::{BasisError, IdealBasis, QuotientDim};
use crate::linalg;
use crate::ring::{Coeff, MonomialOrder, Polynomial, RingContext, RingError};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum InvariantError {
    #[error("function germ must vanish at the origin")]
    NonZeroConstantTerm,
    #[error("function germ is zero or constant")]
    Degenerate,
    #[error("non-isolated singularity: the Milnor number is infinite")]
    NonIsolated,
    #[error("family parameter out of range: {0}")]
    FamilyRange(String),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// A function germ `(k^d, 0) -> (k, 0)`: a polynomial with zero constant
/// term, over its source ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionGerm {
    poly: Polynomial,
}

impl FunctionGerm {
    pub fn new(poly: Polynomial) -> Result<FunctionGerm, InvariantError> {
        if !poly.constant_coefficient().is_zero() {
            return Err(InvariantError::NonZeroConstantTerm);
        }
        Ok(FunctionGerm { poly })
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        self.poly.ring()
    }

    /// Source dimension d.
    pub fn nvars(&self) -> usize {
        self.ring().nvars()
    }

    /// The Jacobian ideal generators: all partial derivatives.
    pub fn jacobian(&self) -> Vec<Polynomial> {
        self.ring()
            .vars()
            .iter()
            .map(|v| self.poly.partial_derivative(v).expect("declared variable"))
            .collect::<Vec<_>>()
    }

    fn jacobian_basis(&self) -> Result<IdealBasis, InvariantError> {
        if self.poly.is_zero() {
            return Err(InvariantError::Degenerate);
        }
        let gens = self.jacobian();
        if gens.iter().all(|g| g.is_zero()) {
            return Err(InvariantError::Degenerate);
        }
        Ok(IdealBasis::standard_basis(
            &gens,
            MonomialOrder::NegDegRevLex,
        )?)
    }
}

/// Positive rational weights normalizing the weighted degree of every
/// monomial of the witnessed function to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<Coeff>,
}

impl WeightVector {
    pub fn weights(&self) -> &[Coeff] {
        &self.weights
    }
}

/// `μ(g) = dim O_d / Jg`, the local quotient by the Jacobian ideal.
pub fn milnor_number(g: &FunctionGerm) -> Result<QuotientDim, InvariantError> {
    Ok(g.jacobian_basis()?.quotient_dimension()?)
}

/// `τ(g) = dim O_d / (Jg + <g>)`.
pub fn tjurina_number(g: &FunctionGerm) -> Result<QuotientDim, InvariantError> {
    if g.poly.is_zero() {
        return Err(InvariantError::Degenerate);
    }
    let mut gens = g.jacobian();
    gens.push(g.poly.clone());
    let basis = IdealBasis::standard_basis(&gens, MonomialOrder::NegDegRevLex)?;
    Ok(basis.quotient_dimension()?)
}

/// Least `r >= 1` with `g^r` in the Jacobian ideal of the local ring.
/// The search is bounded by the source dimension `d`, which is a theorem,
/// so a miss is an engine failure and reported as such.
pub fn briancon_skoda(g: &FunctionGerm) -> Result<u32, InvariantError> {
    let basis = g.jacobian_basis()?;
    if basis.quotient_dimension()? == QuotientDim::Infinite {
        return Err(InvariantError::NonIsolated);
    }
    let d = g.nvars() as u32;
    let mut power = g.poly.clone();
    for r in 1..=d {
        if basis.contains(&power)? {
            return Ok(r);
        }
        power = power.mul(&g.poly);
    }
    Err(InvariantError::Internal(format!(
        "no Briançon–Skoda exponent found up to d = {d}"
    )))
}

/// Weights `w` with every monomial of `g` of weighted degree exactly 1,
/// in the given coordinates. Free weights (variables not pinned by the
/// system) are assigned from a small positive grid.
pub fn quasihomogeneous_weights(g: &FunctionGerm) -> Result<Option<WeightVector>, InvariantError> {
    if g.poly.is_zero() {
        return Err(InvariantError::Degenerate);
    }
    let n = g.nvars();
    let rows: Vec<Vec<Coeff>> = g
        .poly
        .terms()
        .iter()
        .map(|t| {
            (0..n)
                .map(|i| Coeff::from(BigInt::from(t.mono.exp(i))))
                .collect()
        })
        .collect();
    let rhs = vec![Coeff::one(); rows.len()];
    let grid: Vec<Coeff> = [
        (1, 1),
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 1),
        (3, 1),
    ]
    .iter()
    .map(|&(a, b)| Coeff::new(BigInt::from(a), BigInt::from(b)))
    .collect();
    let free = linalg::free_count(&rows);
    let attempts: Vec<Vec<Coeff>> = if free == 0 {
        vec![vec![Coeff::one()]]
    } else {
        // cycle a few positive values through the free slots
        grid.iter().map(|v| vec![v.clone()]).collect()
    };
    for fv in attempts {
        if let Some(x) = linalg::solve_with_free(&rows, &rhs, &fv) {
            if x.iter().all(|w| w.is_positive()) {
                return Ok(Some(WeightVector { weights: x }));
            }
            if free == 0 {
                return Ok(None);
            }
        } else {
            return Ok(None);
        }
    }
    Ok(None)
}

/// Saito's criterion as a decision procedure: `μ(g) = τ(g)` iff `g` is
/// R-equivalent to a quasi-homogeneous function.
pub fn is_quasihomogeneous_up_to_r(g: &FunctionGerm) -> Result<bool, InvariantError> {
    let mu = milnor_number(g)?
        .finite()
        .ok_or(InvariantError::NonIsolated)?;
    let tau = tjurina_number(g)?
        .finite()
        .ok_or(InvariantError::NonIsolated)?;
    Ok(mu == tau)
}

/// `DG_k(u, v) = u^(2k+1) + u^k v^(k+1) + v^(2k)` for `k >= 3`.
pub fn family_dg(k: u32) -> Result<FunctionGerm, InvariantError> {
    if k < 3 {
        return Err(InvariantError::FamilyRange(format!("DG_k needs k >= 3, got {k}")));
    }
    let ring = RingContext::new(["u", "v"], MonomialOrder::DegRevLex).expect("fresh ring");
    let text = format!("u^{} + u^{}*v^{} + v^{}", 2 * k + 1, k, k + 1, 2 * k);
    let poly = crate::ring::parse_polynomial(&text, &ring)?;
    FunctionGerm::new(poly)
}

/// `M(u, v, w) = (uvw)^2 + u^8 + v^8 + w^8`.
pub fn family_malgrange() -> FunctionGerm {
    let ring = RingContext::new(["u", "v", "w"], MonomialOrder::DegRevLex).expect("fresh ring");
    let poly = crate::ring::parse_polynomial("(u*v*w)^2 + u^8 + v^8 + w^8", &ring)
        .expect("fixed polynomial parses");
    FunctionGerm::new(poly).expect("vanishes at 0")
}

/// `A_k`: `z^(k+1)` for `k >= 1`.
pub fn family_ak(k: u32) -> Result<FunctionGerm, InvariantError> {
    if k < 1 {
        return Err(InvariantError::FamilyRange(format!("A_k needs k >= 1, got {k}")));
    }
    let ring = RingContext::new(["z"], MonomialOrder::DegRevLex).expect("fresh ring");
    let poly = crate::ring::parse_polynomial(&format!("z^{}", k + 1), &ring)?;
    FunctionGerm::new(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_polynomial;

    fn germ(text: &str, vars: &[&str]) -> FunctionGerm {
        let r = RingContext::new(vars.iter().copied(), MonomialOrder::DegRevLex).unwrap();
        FunctionGerm::new(parse_polynomial(text, &r).unwrap()).unwrap()
    }

    #[test]
    fn morse_function() {
        let g = germ("z^2", &["z"]);
        assert_eq!(milnor_number(&g).unwrap(), QuotientDim::Finite(1));
        assert_eq!(tjurina_number(&g).unwrap(), QuotientDim::Finite(1));
        assert_eq!(briancon_skoda(&g).unwrap(), 1);
    }

    #[test]
    fn dg_family_values() {
        for (k, mu, tau) in [(3u32, 30, 27), (4, 56, 48), (5, 90, 75)] {
            let g = family_dg(k).unwrap();
            assert_eq!(milnor_number(&g).unwrap(), QuotientDim::Finite(mu));
            assert_eq!(tjurina_number(&g).unwrap(), QuotientDim::Finite(tau));
            assert!(!is_quasihomogeneous_up_to_r(&g).unwrap());
        }
        assert_eq!(briancon_skoda(&family_dg(3).unwrap()).unwrap(), 2);
        assert!(family_dg(2).is_err());
    }

    #[test]
    fn malgrange_values() {
        let m = family_malgrange();
        assert_eq!(milnor_number(&m).unwrap(), QuotientDim::Finite(215));
        assert_eq!(tjurina_number(&m).unwrap(), QuotientDim::Finite(179));
        assert_eq!(briancon_skoda(&m).unwrap(), 3);
    }

    #[test]
    fn weights_for_brieskorn() {
        let g = germ("x^3 + y^4", &["x", "y"]);
        let w = quasihomogeneous_weights(&g).unwrap().unwrap();
        assert_eq!(w.weights()[0], Coeff::new(BigInt::from(1), BigInt::from(3)));
        assert_eq!(w.weights()[1], Coeff::new(BigInt::from(1), BigInt::from(4)));
        assert!(is_quasihomogeneous_up_to_r(&g).unwrap());
    }

    #[test]
    fn dg3_is_not_quasihomogeneous_in_given_coordinates() {
        let g = family_dg(3).unwrap();
        assert!(quasihomogeneous_weights(&g).unwrap().is_none());
    }

    #[test]
    fn single_variable_weight() {
        let g = germ("y^2", &["y"]);
        let w = quasihomogeneous_weights(&g).unwrap().unwrap();
        assert_eq!(w.weights()[0], Coeff::new(BigInt::from(1), BigInt::from(2)));
    }

    #[test]
    fn euler_identity_when_weights_exist() {
        for text in ["x^3 + y^4", "x^2 + x*y"] {
            let g = germ(text, &["x", "y"]);
            let w = quasihomogeneous_weights(&g).unwrap().unwrap();
            let mut acc = Polynomial::zero(g.ring());
            for (i, v) in g.ring().vars().iter().enumerate() {
                let term = Polynomial::var(g.ring(), v)
                    .unwrap()
                    .mul(&g.poly().partial_derivative(v).unwrap())
                    .scale(&w.weights()[i]);
                acc = acc.add(&term);
            }
            assert_eq!(acc, g.poly().clone());
        }
    }

    #[test]
    fn non_isolated_is_infinite() {
        let g = germ("x^2", &["x", "y"]);
        assert_eq!(milnor_number(&g).unwrap(), QuotientDim::Infinite);
        assert!(matches!(
            briancon_skoda(&g),
            Err(InvariantError::NonIsolated)
        ));
    }

    #[test]
    fn constant_term_rejected() {
        let r = RingContext::new(["x"], MonomialOrder::DegRevLex).unwrap();
        let p = parse_polynomial("x + 1", &r).unwrap();
        assert!(matches!(
            FunctionGerm::new(p),
            Err(InvariantError::NonZeroConstantTerm)
        ));
    }
}
