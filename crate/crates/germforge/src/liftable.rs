//! Vector fields tangent to a divisor, the lift ideal of an unfolding,
//! degrees of substantiality, and isosingular-locus dimensions.
//!
//! Liftable fields are represented by Derlog of the discriminant (or image)
//! of the unfolding. The two agree for stable germs; for inputs whose
//! stability has not been established the derived numbers are Derlog-based
//! evidence and callers are expected to say so.

use crate::basis::{
    local_membership_certificate, module_syzygies, BasisError, IdealBasis, VectorTuple,
};
use crate::geometry::{
    discriminant_equation_named, image_equation_named, GeometryError, HypersurfaceEquation,
};
use crate::germ::{GermError, MapGerm, OnePSU};
use crate::linalg;
use crate::ring::{MonomialOrder, Polynomial, RingError};

#[derive(Debug, thiserror::Error)]
pub enum LiftError {
    #[error("divisor is not reduced")]
    NotReduced,
    #[error("unfolding maps n+1 -> p+1 with n >= p or p = n+1; got {0} -> {1}")]
    UnsupportedDimensions(usize, usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Germ(#[from] GermError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Generators of the module of vector fields tangent to a hypersurface,
/// each with the cofactor of its tangency identity `η(H) = a·H`.
#[derive(Clone, Debug)]
pub struct DerlogModule {
    divisor: HypersurfaceEquation,
    generators: Vec<VectorTuple>,
    cofactors: Vec<Polynomial>,
}

impl DerlogModule {
    pub fn divisor(&self) -> &HypersurfaceEquation {
        &self.divisor
    }

    pub fn generators(&self) -> &[VectorTuple] {
        &self.generators
    }

    pub fn cofactors(&self) -> &[Polynomial] {
        &self.cofactors
    }

    /// `Σ η_i ∂H/∂X_i - a·H`, which is identically zero for every
    /// generator.
    pub fn tangency_defect(&self, idx: usize) -> Polynomial {
        let h = self.divisor.poly();
        let ring = h.ring();
        let mut acc = Polynomial::zero(ring);
        for (i, v) in ring.vars().iter().enumerate() {
            let d = h.partial_derivative(v).expect("declared variable");
            acc = acc.add(&self.generators[idx].component(i).mul(&d));
        }
        acc.sub(&self.cofactors[idx].mul(h))
    }
}

/// Derlog(H) by syzygies of `(∂H/∂X_1, ..., ∂H/∂X_k, -H)`.
pub fn derlog(divisor: &HypersurfaceEquation) -> Result<DerlogModule, LiftError> {
    if !divisor.is_reduced() {
        return Err(LiftError::NotReduced);
    }
    let h = divisor.poly();
    let ring = h.ring().clone();
    let k = ring.nvars();
    let mut columns = Vec::with_capacity(k + 1);
    for v in ring.vars() {
        columns.push(VectorTuple::new(vec![h.partial_derivative(v)?])?);
    }
    columns.push(VectorTuple::new(vec![h.neg()])?);
    let syz = module_syzygies(&columns)?;
    let mut generators = Vec::new();
    let mut cofactors = Vec::new();
    for s in syz {
        let comps: Vec<Polynomial> = (0..k).map(|i| s.component(i).clone()).collect();
        if comps.iter().all(|c| c.is_zero()) {
            continue;
        }
        generators.push(VectorTuple::new(comps)?);
        cofactors.push(s.component(k).clone());
    }
    let module = DerlogModule {
        divisor: divisor.clone(),
        generators,
        cofactors,
    };
    debug_assert!((0..module.generators.len()).all(|i| module.tangency_defect(i).is_zero()));
    Ok(module)
}

/// The divisor an unfolding is measured against: the discriminant for
/// source >= target, the image for corank-one-into-hyperplane dimensions
/// (target = source + 1). The last target variable is the parameter slot.
pub fn opsu_divisor(f: &OnePSU) -> Result<HypersurfaceEquation, LiftError> {
    let germ = f.as_map_germ();
    let (n1, p1) = (germ.source_dim(), germ.target_dim());
    if n1 >= p1 {
        Ok(discriminant_equation_named(&germ, Some("L"))?)
    } else if p1 == n1 + 1 {
        Ok(image_equation_named(&germ, Some("L"))?)
    } else {
        Err(LiftError::UnsupportedDimensions(n1, p1))
    }
}

/// The ideal of last components of the liftable fields, as a local
/// standard basis in the target variables (X, Λ).
#[derive(Clone, Debug)]
pub enum LiftIdeal {
    /// Empty critical locus: every field lifts, the ideal is the whole
    /// ring.
    Unit,
    Ideal {
        derlog: DerlogModule,
        /// Raw last components of the Derlog generators.
        generators: Vec<Polynomial>,
        /// Their local standard basis.
        basis: IdealBasis,
    },
}

impl LiftIdeal {
    pub fn contains(&self, p: &Polynomial) -> Result<bool, LiftError> {
        match self {
            LiftIdeal::Unit => Ok(true),
            LiftIdeal::Ideal { basis, .. } => Ok(basis.contains(p)?),
        }
    }
}

pub fn lift_ideal(f: &OnePSU) -> Result<LiftIdeal, LiftError> {
    let divisor = match opsu_divisor(f) {
        Ok(d) => d,
        Err(LiftError::Geometry(GeometryError::EmptyCriticalLocus)) => return Ok(LiftIdeal::Unit),
        Err(e) => return Err(e),
    };
    let derlog = derlog(&divisor)?;
    let k = divisor.ring().nvars();
    let generators: Vec<Polynomial> = derlog
        .generators()
        .iter()
        .map(|g| g.component(k - 1).clone())
        .filter(|c| !c.is_zero())
        .collect();
    let basis = IdealBasis::standard_basis(&generators, MonomialOrder::NegDegRevLex)?;
    Ok(LiftIdeal::Ideal {
        derlog,
        generators,
        basis,
    })
}

/// Result of the bounded search for the degree of substantiality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Delta {
    Exact(u32),
    /// Search exhausted: δ is at least this value (a pure Λ-power in the
    /// leading ideal, when present, is a lower-bound certificate that was
    /// already tested).
    AtLeast(u32),
    /// No pure Λ-power in the leading ideal at all: no power of Λ can be
    /// in the ideal, so δ = ∞ definitively.
    Infinite,
}

impl Delta {
    pub fn is_one(&self) -> bool {
        matches!(self, Delta::Exact(1))
    }
}

impl std::fmt::Display for Delta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Delta::Exact(m) => write!(f, "{m}"),
            Delta::AtLeast(m) => write!(f, "AT_LEAST({m})"),
            Delta::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// Least `m` with `Λ^m` in the lift ideal of the local ring, searched up
/// to `bound`.
pub fn substantiality_degree(f: &OnePSU, bound: u32) -> Result<Delta, LiftError> {
    let ideal = lift_ideal(f)?;
    substantiality_degree_of(&ideal, bound)
}

pub fn substantiality_degree_of(ideal: &LiftIdeal, bound: u32) -> Result<Delta, LiftError> {
    let LiftIdeal::Ideal { basis, .. } = ideal else {
        return Ok(Delta::Exact(0));
    };
    let ring = basis.ring();
    let lambda_name = ring.vars().last().expect("nonempty ring").clone();
    let lambda = Polynomial::var(ring, &lambda_name)?;
    let mut power = lambda.clone();
    for m in 1..=bound {
        if basis.contains(&power)? {
            return Ok(Delta::Exact(m));
        }
        power = power.mul(&lambda);
    }
    match basis.pure_power_in_leading_ideal(&lambda_name) {
        None => Ok(Delta::Infinite),
        Some(_) => Ok(Delta::AtLeast(bound + 1)),
    }
}

/// Membership `X_p ∈ dπ(Lift(F))` in the local ring: F admits a liftable
/// field whose last component is `X_p` up to a unit factor, since the
/// lift module is closed under multiplication by germs.
pub fn is_cross_substantial(f: &OnePSU) -> Result<bool, LiftError> {
    let ideal = lift_ideal(f)?;
    is_cross_substantial_of(&ideal, f.base_target_dim())
}

pub fn is_cross_substantial_of(ideal: &LiftIdeal, p: usize) -> Result<bool, LiftError> {
    let LiftIdeal::Ideal { basis, .. } = ideal else {
        return Ok(true);
    };
    let xp = Polynomial::var(basis.ring(), &basis.ring().vars()[p - 1])?;
    Ok(basis.contains(&xp)?)
}

/// An explicit liftable field behind a positive cross-substantiality
/// answer: `W = Σ c_i η_i` with last component `u · X_p`, `u(0) = 1`.
pub struct CrossCertificate {
    pub field: VectorTuple,
    pub cofactor: Polynomial,
    pub unit: Polynomial,
}

pub fn cross_substantial_certificate(f: &OnePSU) -> Result<Option<CrossCertificate>, LiftError> {
    let ideal = lift_ideal(f)?;
    let LiftIdeal::Ideal {
        derlog,
        generators,
        basis,
    } = &ideal
    else {
        return Ok(None);
    };
    let p = f.base_target_dim();
    let _ = basis;
    let dring = derlog.divisor().ring().clone();
    let k = dring.nvars();
    let xp = Polynomial::var(&dring, &dring.vars()[p - 1])?;
    let Some((unit, _, cofs)) = local_membership_certificate(&xp, generators)? else {
        return Ok(None);
    };
    // combine the Derlog generators with the membership cofactors
    let mut comps = vec![Polynomial::zero(&dring); k];
    let mut cof = Polynomial::zero(&dring);
    let gens_with_last: Vec<usize> = (0..derlog.generators().len())
        .filter(|&i| !derlog.generators()[i].component(k - 1).is_zero())
        .collect();
    for (c, &gi) in cofs.iter().zip(&gens_with_last) {
        let c = c.reorder(&dring);
        for (slot, comp) in comps.iter_mut().zip(derlog.generators()[gi].components()) {
            *slot = slot.add(&c.mul(comp));
        }
        cof = cof.add(&c.mul(&derlog.cofactors()[gi]));
    }
    let field = VectorTuple::new(comps)?;
    // last component is exactly unit * X_p
    debug_assert_eq!(
        field.component(k - 1).clone(),
        unit.reorder(&dring).mul(&xp.reorder(&dring))
    );
    Ok(Some(CrossCertificate {
        field,
        cofactor: cof,
        unit,
    }))
}

/// Sufficient test for cross-substantiality straight from the divisor:
/// `X_p ∈ <∂H/∂X_1, ..., ∂H/∂X_p>` locally (the partials without the
/// parameter direction).
pub fn jxh_test(divisor: &HypersurfaceEquation) -> Result<bool, LiftError> {
    let ring = divisor.ring();
    let k = ring.nvars();
    if k < 2 {
        return Err(LiftError::UnsupportedDimensions(k, k));
    }
    let h = divisor.poly();
    let gens: Vec<Polynomial> = ring.vars()[..k - 1]
        .iter()
        .map(|v| h.partial_derivative(v))
        .collect::<Result<Vec<_>, _>>()?;
    if gens.iter().all(|g| g.is_zero()) {
        return Ok(false);
    }
    let basis = IdealBasis::standard_basis(&gens, MonomialOrder::NegDegRevLex)?;
    let xp = Polynomial::var(ring, &ring.vars()[k - 2])?;
    Ok(basis.contains(&xp)?)
}

/// Substantiality summary of an unfolding.
#[derive(Clone, Debug)]
pub struct SubstantialityReport {
    pub delta: Delta,
    pub substantial: bool,
    pub cross_substantial: bool,
    pub jxh_sufficient: bool,
}

pub fn substantiality_report(f: &OnePSU, bound: u32) -> Result<SubstantialityReport, LiftError> {
    let ideal = lift_ideal(f)?;
    let delta = substantiality_degree_of(&ideal, bound)?;
    let cross = is_cross_substantial_of(&ideal, f.base_target_dim())?;
    let jxh = match &ideal {
        LiftIdeal::Unit => true,
        LiftIdeal::Ideal { derlog, .. } => jxh_test(derlog.divisor())?,
    };
    let report = SubstantialityReport {
        delta,
        substantial: delta.is_one(),
        cross_substantial: cross,
        jxh_sufficient: jxh,
    };
    debug_assert!(!report.jxh_sufficient || report.cross_substantial);
    Ok(report)
}

/// Dimension of the isosingular locus: the rank of the liftable fields
/// evaluated at the origin. Derlog of the discriminant stands in for the
/// lift module; exact when the germ is stable.
pub fn isosingular_dimension(t: &MapGerm) -> Result<usize, LiftError> {
    if t.source_dim() < t.target_dim() {
        return Err(LiftError::UnsupportedDimensions(
            t.source_dim(),
            t.target_dim(),
        ));
    }
    let divisor = match discriminant_equation_named(t, None) {
        // no critical locus: the germ is trivial in every direction
        Err(GeometryError::EmptyCriticalLocus) => return Ok(t.target_dim()),
        other => other?,
    };
    let module = derlog(&divisor)?;
    let rows: Vec<Vec<crate::ring::Coeff>> = module
        .generators()
        .iter()
        .map(|g| g.evaluate_at_zero())
        .collect();
    Ok(linalg::rank(rows))
}

/// `dim τ̃(T) >= p - s`: the certificate that a germ with a degree-`s`
/// trivializer `T` is an augmentation.
pub fn augmentation_certificate(t: &MapGerm, p: usize, s: usize) -> Result<bool, LiftError> {
    Ok(isosingular_dimension(t)? >= p.saturating_sub(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::module_contains;
    use num_traits::Zero;
    use crate::germ::parse_map_germ;
    use crate::geometry::image_equation_named;
    use crate::ring::{parse_polynomial, RingContext};

    fn opsu(comps: &[&str], vars: &[&str]) -> OnePSU {
        let r = RingContext::new(vars.iter().copied(), MonomialOrder::DegRevLex).unwrap();
        let components = comps
            .iter()
            .map(|c| parse_polynomial(c, &r).unwrap())
            .collect();
        OnePSU::new(components, vars.last().unwrap()).unwrap()
    }

    #[test]
    fn derlog_of_cusp_curve_contains_euler_field() {
        let f = parse_map_germ("y^2, y^3", &vec!["y".into()]).unwrap();
        let h = image_equation_named(&f, None).unwrap();
        let module = derlog(&h).unwrap();
        for i in 0..module.generators().len() {
            assert!(module.tangency_defect(i).is_zero());
        }
        // (2X, 3Y) with cofactor scaled to the monic divisor
        let ring = module.generators()[0].ring().clone();
        let mut with_cof: Vec<VectorTuple> = Vec::new();
        for (g, a) in module.generators().iter().zip(module.cofactors()) {
            let mut comps = g.components().to_vec();
            comps.push(a.clone());
            with_cof.push(VectorTuple::new(comps).unwrap());
        }
        // H is monic: X1^3 - X2^2, so (2 X1, 3 X2)(H) = 6 X1^3 - 6 X2^2 = 6 H
        let euler = VectorTuple::new(vec![
            parse_polynomial("2*X1", &ring).unwrap(),
            parse_polynomial("3*X2", &ring).unwrap(),
            parse_polynomial("6", &ring).unwrap(),
        ])
        .unwrap();
        assert!(module_contains(&with_cof, &euler).unwrap());
    }

    #[test]
    fn derlog_of_smooth_divisor() {
        // H = X in (X, Y): X ∂/∂X and ∂/∂Y are tangent
        let ring = RingContext::new(["X", "Y"], MonomialOrder::DegRevLex).unwrap();
        let h = parse_polynomial("X", &ring).unwrap();
        let divisor = HypersurfaceEquation::from_divisor(h).unwrap();
        let module = derlog(&divisor).unwrap();
        let at0: Vec<Vec<crate::ring::Coeff>> = module
            .generators()
            .iter()
            .map(|g| g.evaluate_at_zero())
            .collect();
        assert_eq!(crate::linalg::rank(at0), 1);
    }

    #[test]
    fn cusp_opsu_is_substantial_and_cross_substantial() {
        let f = opsu(&["y^2", "y^3 + l*y", "l"], &["y", "l"]);
        let report = substantiality_report(&f, 8).unwrap();
        assert_eq!(report.delta, Delta::Exact(1));
        assert!(report.substantial);
        assert!(report.cross_substantial);
    }

    #[test]
    fn f2_opsu_substantial_cross_substantial_jxh() {
        let f = opsu(&["y^2", "y^5 + l*y", "l"], &["y", "l"]);
        let report = substantiality_report(&f, 8).unwrap();
        assert_eq!(report.delta, Delta::Exact(1));
        assert!(report.cross_substantial);
        assert!(report.jxh_sufficient);
        let cert = cross_substantial_certificate(&f).unwrap().expect("cross");
        // tangency of the combined field: W(H) = cofactor * H exactly
        let divisor = opsu_divisor(&f).unwrap();
        let mut acc = Polynomial::zero(divisor.ring());
        for (i, v) in divisor.ring().vars().iter().enumerate() {
            let d = divisor.poly().partial_derivative(v).unwrap();
            acc = acc.add(&cert.field.component(i).mul(&d));
        }
        assert_eq!(acc, cert.cofactor.mul(divisor.poly()));
        // unit really is a unit
        assert!(!cert.unit.constant_coefficient().is_zero());
    }

    #[test]
    fn cuspidal_edge_isosingular_dimension() {
        let t = parse_map_germ(
            "X^3 + X*Y, Y, Z",
            &vec!["X".into(), "Y".into(), "Z".into()],
        )
        .unwrap();
        assert_eq!(isosingular_dimension(&t).unwrap(), 1);
        assert!(!augmentation_certificate(&t, 3, 1).unwrap());
    }

    #[test]
    fn jxh_smoke() {
        // H = L^2 - X1 in (X1, L), p = 1: dH/dX1 = -1 is a unit
        let ring = RingContext::new(["X1", "L"], MonomialOrder::DegRevLex).unwrap();
        let divisor =
            HypersurfaceEquation::from_divisor(parse_polynomial("L^2 - X1", &ring).unwrap())
                .unwrap();
        assert!(jxh_test(&divisor).unwrap());
    }
}
