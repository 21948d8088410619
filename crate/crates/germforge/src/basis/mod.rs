//! Gröbner bases (global orders), Mora standard bases (local orders),
//! syzygies, elimination and quotient dimensions.

mod buchberger;
mod eliminate;
mod module_gb;
mod mora;
mod quotient;

pub use eliminate::eliminate;
pub use quotient::{monomial_quotient_dimension, QuotientDim};

use crate::ring::{Coeff, Monomial, MonomialOrder, Polynomial, RingContext};
use module_gb::VPoly;
use num_traits::Zero;
use std::sync::Arc;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BasisError {
    #[error("no generators given")]
    EmptyGenerators,
    #[error("generators belong to different rings")]
    MixedRings,
    #[error("variable `{0}` is not in the ring")]
    UnknownVariable(String),
    #[error("operation requires a {expected} basis, got {got}")]
    WrongKind {
        expected: &'static str,
        got: &'static str,
    },
    #[error("vector tuples have mismatched ranks")]
    RankMismatch,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisKind {
    GroebnerGlobal,
    StandardLocal,
    Raw,
}

impl BasisKind {
    fn name(&self) -> &'static str {
        match self {
            BasisKind::GroebnerGlobal => "groebner-global",
            BasisKind::StandardLocal => "standard-local",
            BasisKind::Raw => "raw",
        }
    }
}

/// A set of ideal generators, together with what has been computed from it.
///
/// For non-raw kinds, `normal_form` is a membership oracle for the ideal —
/// in the polynomial ring for global orders, in the local ring at the
/// origin for local orders.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    ring: Arc<RingContext>,
    generators: Vec<Polynomial>,
    kind: BasisKind,
    reduced: bool,
}

impl IdealBasis {
    /// Buchberger for global orders, Mora's tangent-cone algorithm for
    /// local ones. The generators are re-sorted under `order` first.
    pub fn standard_basis(
        gens: &[Polynomial],
        order: MonomialOrder,
    ) -> Result<IdealBasis, BasisError> {
        if gens.is_empty() {
            return Err(BasisError::EmptyGenerators);
        }
        for g in gens {
            if !g.same_ring(&gens[0]) {
                return Err(BasisError::MixedRings);
            }
        }
        if let MonomialOrder::Block { split } = order {
            if split > gens[0].ring().nvars() {
                return Err(BasisError::UnknownVariable(format!(
                    "block split {split} exceeds variable count"
                )));
            }
        }
        let ring = gens[0].ring().with_order(order);
        let mapped: Vec<Polynomial> = gens.iter().map(|g| g.reorder(&ring)).collect();
        let generators = if order.is_global() {
            buchberger::groebner(mapped)
        } else {
            mora::mora_standard_basis(mapped)
        };
        Ok(IdealBasis {
            ring,
            generators,
            kind: if order.is_global() {
                BasisKind::GroebnerGlobal
            } else {
                BasisKind::StandardLocal
            },
            reduced: order.is_global(),
        })
    }

    pub fn raw(gens: Vec<Polynomial>) -> Result<IdealBasis, BasisError> {
        if gens.is_empty() {
            return Err(BasisError::EmptyGenerators);
        }
        let ring = gens[0].ring().clone();
        for g in &gens {
            if !g.same_ring(&gens[0]) {
                return Err(BasisError::MixedRings);
            }
        }
        Ok(IdealBasis {
            ring,
            generators: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            kind: BasisKind::Raw,
            reduced: false,
        })
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    /// Is the ideal the whole ring (a unit among the generators)?
    pub fn is_unit_ideal(&self) -> bool {
        self.generators
            .iter()
            .any(|g| g.leading_monomial().map(|m| m.is_one()).unwrap_or(false))
    }

    /// Normal form of `p`: full division for global orders, Mora weak
    /// normal form for local ones. Zero iff `p` is in the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial, BasisError> {
        let p = p.reorder(&self.ring);
        match self.kind {
            BasisKind::GroebnerGlobal => Ok(buchberger::reduce_full(&p, &self.generators)),
            BasisKind::StandardLocal => Ok(mora::mora_normal_form(&p, &self.generators)),
            BasisKind::Raw => Err(BasisError::WrongKind {
                expected: "computed",
                got: self.kind.name(),
            }),
        }
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, BasisError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Vector-space dimension of the local quotient `O/I`: the count of
    /// monomials outside the leading ideal. Requires a local standard
    /// basis.
    pub fn quotient_dimension(&self) -> Result<QuotientDim, BasisError> {
        if self.kind != BasisKind::StandardLocal {
            return Err(BasisError::WrongKind {
                expected: "standard-local",
                got: self.kind.name(),
            });
        }
        Ok(monomial_quotient_dimension(
            &self.leading_monomials(),
            self.ring.nvars(),
        ))
    }

    /// Smallest exponent `e` with `v^e` in the leading ideal, if any.
    pub fn pure_power_in_leading_ideal(&self, var: &str) -> Option<u16> {
        let idx = self.ring.var_index(var)?;
        self.generators
            .iter()
            .filter_map(|g| {
                let lm = g.leading_monomial()?;
                (lm.is_pure_power_of(idx) || lm.is_one()).then(|| lm.exp(idx))
            })
            .min()
    }
}

/// A fixed-length tuple of polynomials: an element of a free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorTuple {
    components: Vec<Polynomial>,
}

impl VectorTuple {
    pub fn new(components: Vec<Polynomial>) -> Result<VectorTuple, BasisError> {
        if components.is_empty() {
            return Err(BasisError::EmptyGenerators);
        }
        for c in &components {
            if !c.same_ring(&components[0]) {
                return Err(BasisError::MixedRings);
            }
        }
        Ok(VectorTuple { components })
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        self.components[0].ring()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// Constant terms of the components: the value of the field at 0.
    pub fn evaluate_at_zero(&self) -> Vec<Coeff> {
        self.components
            .iter()
            .map(|c| c.constant_coefficient())
            .collect()
    }

    /// Σ self_i · other_i.
    pub fn dot(&self, other: &VectorTuple) -> Result<Polynomial, BasisError> {
        if self.rank() != other.rank() {
            return Err(BasisError::RankMismatch);
        }
        let mut acc = Polynomial::zero(self.ring());
        for (a, b) in self.components.iter().zip(&other.components) {
            acc = acc.add(&a.mul(b));
        }
        Ok(acc)
    }
}

/// Generators of the syzygy module `{ c : Σ c_i · columns_i = 0 }`.
///
/// Computed over the polynomial ring with a global order; by flatness of
/// localization the same vectors generate the syzygy module over the local
/// ring. Every returned tuple satisfies the relation exactly.
pub fn module_syzygies(columns: &[VectorTuple]) -> Result<Vec<VectorTuple>, BasisError> {
    if columns.is_empty() {
        return Err(BasisError::EmptyGenerators);
    }
    let rank = columns[0].rank();
    for c in columns {
        if c.rank() != rank {
            return Err(BasisError::RankMismatch);
        }
        if c.ring().vars() != columns[0].ring().vars() {
            return Err(BasisError::MixedRings);
        }
    }
    let ring = columns[0].ring().with_order(MonomialOrder::DegRevLex);
    let vcols: Vec<VPoly> = columns
        .iter()
        .map(|c| {
            let comps: Vec<Polynomial> = c.components.iter().map(|p| p.reorder(&ring)).collect();
            VPoly::from_components(&comps, ring.order())
        })
        .collect();
    let rows = module_gb::syzygies(&vcols, rank, &ring);
    let out: Vec<VectorTuple> = rows
        .into_iter()
        .map(|row| VectorTuple { components: row })
        .collect();
    // exactness check: every syzygy kills the columns
    debug_assert!(out.iter().all(|s| {
        let mut acc = vec![Polynomial::zero(&ring); rank];
        for (c, col) in s.components.iter().zip(columns) {
            for (k, comp) in col.components.iter().enumerate() {
                acc[k] = acc[k].add(&c.mul(&comp.reorder(&ring)));
            }
        }
        acc.iter().all(|p| p.is_zero())
    }));
    Ok(out)
}

/// Membership of `v` in the module generated by `gens` (over the
/// polynomial ring, global order).
pub fn module_contains(gens: &[VectorTuple], v: &VectorTuple) -> Result<bool, BasisError> {
    if gens.is_empty() {
        return Ok(v.is_zero());
    }
    let rank = gens[0].rank();
    if v.rank() != rank {
        return Err(BasisError::RankMismatch);
    }
    let ring = gens[0].ring().with_order(MonomialOrder::DegRevLex);
    let to_vpoly = |t: &VectorTuple| {
        let comps: Vec<Polynomial> = t.components.iter().map(|p| p.reorder(&ring)).collect();
        VPoly::from_components(&comps, ring.order())
    };
    let vcols: Vec<VPoly> = gens.iter().map(to_vpoly).collect();
    let gb = module_gb::module_groebner(&vcols, ring.order());
    Ok(module_gb::module_reduce(&to_vpoly(v), &gb, ring.order()).is_zero())
}

/// Certificate for membership of `p` in the ideal generated by `gens` in
/// the LOCAL ring: polynomials `(u, c_1..c_m)` with `u*p = Σ c_i g_i` and
/// `u(0) = 1`. `None` when `p` is not in the local ideal.
///
/// The certificate is read off the syzygies of `(p, g_1, ..., g_m)`: a
/// generator whose first entry does not vanish at 0 is exactly a unit
/// denominator representation, and if none of the generators has one, no
/// element of the syzygy module does.
pub fn local_membership_certificate(
    p: &Polynomial,
    gens: &[Polynomial],
) -> Result<Option<(Polynomial, Vec<VectorTuple>, Vec<Polynomial>)>, BasisError> {
    let mut cols = Vec::with_capacity(gens.len() + 1);
    cols.push(VectorTuple::new(vec![p.clone()])?);
    for g in gens {
        cols.push(VectorTuple::new(vec![g.clone()])?);
    }
    let syz = module_syzygies(&cols)?;
    for s in &syz {
        let u0 = s.component(0).constant_coefficient();
        if !u0.is_zero() {
            let inv = u0.recip();
            let u = s.component(0).scale(&inv);
            let cofactors: Vec<Polynomial> = (1..s.rank())
                .map(|i| s.component(i).scale(&inv).neg())
                .collect();
            return Ok(Some((u, syz.clone(), cofactors)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_polynomial;

    fn ring(vars: &[&str], order: MonomialOrder) -> Arc<RingContext> {
        RingContext::new(vars.iter().copied(), order).unwrap()
    }

    #[test]
    fn trivial_global_membership() {
        let r = ring(&["z"], MonomialOrder::DegRevLex);
        let b = IdealBasis::standard_basis(
            &[parse_polynomial("z", &r).unwrap()],
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        assert!(b.contains(&parse_polynomial("z^2", &r).unwrap()).unwrap());
        assert!(!b.contains(&parse_polynomial("z + 1", &r).unwrap()).unwrap());
    }

    #[test]
    fn local_unit_membership() {
        // x = (x - x^2)(1 + x + x^2 + ...) locally, but not globally
        let r = ring(&["x"], MonomialOrder::DegRevLex);
        let g = parse_polynomial("x - x^2", &r).unwrap();
        let local = IdealBasis::standard_basis(&[g.clone()], MonomialOrder::NegDegRevLex).unwrap();
        let global = IdealBasis::standard_basis(&[g], MonomialOrder::DegRevLex).unwrap();
        let x = parse_polynomial("x", &r).unwrap();
        assert!(local.contains(&x).unwrap());
        assert!(!global.contains(&x).unwrap());
    }

    #[test]
    fn dg3_jacobian_quotient_dimension() {
        let r = ring(&["u", "v"], MonomialOrder::DegRevLex);
        let gens = vec![
            parse_polynomial("7*u^6 + 3*u^2*v^4", &r).unwrap(),
            parse_polynomial("4*u^3*v^3 + 6*v^5", &r).unwrap(),
        ];
        let b = IdealBasis::standard_basis(&gens, MonomialOrder::NegDegRevLex).unwrap();
        assert_eq!(b.quotient_dimension().unwrap(), QuotientDim::Finite(30));
    }

    #[test]
    fn infinite_quotient() {
        let r = ring(&["x", "y"], MonomialOrder::DegRevLex);
        let b = IdealBasis::standard_basis(
            &[parse_polynomial("x", &r).unwrap()],
            MonomialOrder::NegDegRevLex,
        )
        .unwrap();
        assert_eq!(b.quotient_dimension().unwrap(), QuotientDim::Infinite);
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring(&["x", "y"], MonomialOrder::DegRevLex);
        let x = VectorTuple::new(vec![parse_polynomial("x", &r).unwrap()]).unwrap();
        let y = VectorTuple::new(vec![parse_polynomial("y", &r).unwrap()]).unwrap();
        let syz = module_syzygies(&[x, y]).unwrap();
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        assert_eq!(s.component(0), &parse_polynomial("y", s.ring()).unwrap());
        assert_eq!(
            s.component(1),
            &parse_polynomial("0 - x", s.ring()).unwrap()
        );
    }

    #[test]
    fn euler_relation_syzygy() {
        // columns (dH/dX, dH/dY, H) for H = Y^2 - X^3 admit (2X, 3Y, -6)
        let r = ring(&["X", "Y"], MonomialOrder::DegRevLex);
        let cols = vec![
            VectorTuple::new(vec![parse_polynomial("0 - 3*X^2", &r).unwrap()]).unwrap(),
            VectorTuple::new(vec![parse_polynomial("2*Y", &r).unwrap()]).unwrap(),
            VectorTuple::new(vec![parse_polynomial("Y^2 - X^3", &r).unwrap()]).unwrap(),
        ];
        let syz = module_syzygies(&cols).unwrap();
        // each syzygy satisfies the relation exactly
        for s in &syz {
            let mut acc = Polynomial::zero(s.ring());
            for (c, col) in s.components().iter().zip(&cols) {
                acc = acc.add(&c.mul(&col.component(0).reorder(s.ring())));
            }
            assert!(acc.is_zero());
        }
        // and the Euler relation is in the module they generate
        let euler_ring = syz[0].ring().clone();
        let euler = VectorTuple::new(vec![
            parse_polynomial("2*X", &euler_ring).unwrap(),
            parse_polynomial("3*Y", &euler_ring).unwrap(),
            parse_polynomial("0 - 6", &euler_ring).unwrap(),
        ])
        .unwrap();
        assert!(module_contains(&syz, &euler).unwrap());
    }

    #[test]
    fn single_column_has_no_syzygies() {
        let r = ring(&["x", "y"], MonomialOrder::DegRevLex);
        let col =
            VectorTuple::new(vec![parse_polynomial("x^2 + y", &r).unwrap()]).unwrap();
        assert!(module_syzygies(&[col]).unwrap().is_empty());
    }

    #[test]
    fn membership_certificate_is_exact() {
        // x in <x - x^2> locally: u*x = c*(x - x^2) with u = 1 - x
        let r = ring(&["x"], MonomialOrder::DegRevLex);
        let p = parse_polynomial("x", &r).unwrap();
        let g = parse_polynomial("x - x^2", &r).unwrap();
        let (u, _, cof) = local_membership_certificate(&p, &[g.clone()])
            .unwrap()
            .expect("member locally");
        assert!(!u.constant_coefficient().is_zero());
        let lhs = u.mul(&p.reorder(u.ring()));
        let rhs = cof[0].mul(&g.reorder(u.ring()));
        assert_eq!(lhs, rhs);
        // and a non-member gets no certificate
        let one = parse_polynomial("1", &r).unwrap();
        assert!(local_membership_certificate(&one, &[g])
            .unwrap()
            .is_none());
    }
}
