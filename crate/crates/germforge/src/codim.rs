//! A_e-codimension through the quotient of the lift ideal, the
//! augmentation codimension, and the bounds report.

use crate::basis::{IdealBasis, QuotientDim};
use crate::germ::OnePSU;
use crate::invariants::{
    briancon_skoda, milnor_number, tjurina_number, FunctionGerm, InvariantError,
};
use crate::liftable::{substantiality_degree_of, Delta, LiftError, LiftIdeal};
use crate::ring::{MonomialOrder, Polynomial, RingContext, RingError};
use std::collections::HashMap;

#[derive(Debug, thiserror::Error)]
pub enum CodimError {
    #[error("codimension is infinite: the germ is not A-finite")]
    Infinite,
    #[error("variable `{0}` of the augmenting function collides with a target variable")]
    VariableCollision(String),
    #[error(
        "engine inconsistency, this falsifies the implementation: {0}"
    )]
    InternalInconsistency(String),
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Basis(#[from] crate::basis::BasisError),
}

/// Caches the lift ideal of one unfolding so several reports can reuse it.
pub struct DamonEngine {
    opsu: OnePSU,
    lift: LiftIdeal,
}

impl DamonEngine {
    pub fn new(opsu: &OnePSU) -> Result<DamonEngine, CodimError> {
        let lift = crate::liftable::lift_ideal(opsu)?;
        Ok(DamonEngine {
            opsu: opsu.clone(),
            lift,
        })
    }

    pub fn opsu(&self) -> &OnePSU {
        &self.opsu
    }

    pub fn lift(&self) -> &LiftIdeal {
        &self.lift
    }

    /// `aecod(f) = dim O_{p+1} / (dπ(Lift F) + <Λ>)` under the local order.
    pub fn aecod(&self) -> Result<QuotientDim, CodimError> {
        let LiftIdeal::Ideal {
            generators, basis, ..
        } = &self.lift
        else {
            return Ok(QuotientDim::Finite(0));
        };
        let ring = basis.ring();
        let lambda = Polynomial::var(ring, ring.vars().last().expect("nonempty"))?;
        let mut gens = generators.clone();
        gens.push(lambda.reorder(gens[0].ring()));
        let b = IdealBasis::standard_basis(&gens, MonomialOrder::NegDegRevLex)?;
        Ok(b.quotient_dimension()?)
    }

    pub fn delta(&self, bound: u32) -> Result<Delta, CodimError> {
        Ok(substantiality_degree_of(&self.lift, bound)?)
    }

    /// `aecod(A_{F,g}(f)) = dim O_{p+1+d} / (dπ(Lift F) + <Λ - g> + Jg)`.
    ///
    /// The parameter is eliminated eagerly: `Λ -> g(Z)` is substituted into
    /// the lift generators, which is exactly the quotient by `<Λ - g>`, and
    /// the Jacobian ideal of `g` is adjoined in the joint local ring.
    pub fn augmentation_codim(&self, g: &FunctionGerm) -> Result<QuotientDim, CodimError> {
        if milnor_number(g)? == QuotientDim::Infinite {
            return Err(InvariantError::NonIsolated.into());
        }
        let LiftIdeal::Ideal {
            generators, basis, ..
        } = &self.lift
        else {
            // stable base: the augmentation codimension is dim O_d/Jg ... 0
            // only when there is nothing to unfold; report 0 for the unit
            // ideal, matching aecod = 0
            return Ok(QuotientDim::Finite(0));
        };
        let lift_ring = basis.ring();
        let p = lift_ring.nvars() - 1;
        for v in g.ring().vars() {
            if lift_ring.var_index(v).is_some() {
                return Err(CodimError::VariableCollision(v.clone()));
            }
        }
        let joint_vars: Vec<String> = lift_ring.vars()[..p]
            .iter()
            .cloned()
            .chain(g.ring().vars().iter().cloned())
            .collect();
        let joint = RingContext::new(joint_vars, MonomialOrder::DegRevLex)?;
        let mut assignment = HashMap::new();
        for v in &lift_ring.vars()[..p] {
            assignment.insert(v.clone(), Polynomial::var(&joint, v)?);
        }
        assignment.insert(lift_ring.vars()[p].clone(), g.poly().embed(&joint)?);
        let mut gens: Vec<Polynomial> = generators
            .iter()
            .map(|gen| gen.substitute(&assignment))
            .collect::<Result<Vec<_>, _>>()?;
        for d in g.jacobian() {
            gens.push(d.embed(&joint)?);
        }
        let b = IdealBasis::standard_basis(&gens, MonomialOrder::NegDegRevLex)?;
        Ok(b.quotient_dimension()?)
    }

    pub fn bounds_report(
        &self,
        g: &FunctionGerm,
        label: String,
        bound: u32,
    ) -> Result<BoundsReport, CodimError> {
        let aecod_f = self.aecod()?.finite().ok_or(CodimError::Infinite)?;
        let tau_g = tjurina_number(g)?
            .finite()
            .ok_or(CodimError::Infinite)?;
        let mu_g = milnor_number(g)?.finite().ok_or(CodimError::Infinite)?;
        let bs_g = briancon_skoda(g)?;
        let delta_f = self.delta(bound)?;
        let value = self
            .augmentation_codim(g)?
            .finite()
            .ok_or(CodimError::Infinite)?;
        let lower = aecod_f * tau_g;
        let upper = aecod_f * mu_g;
        let refined = aecod_f * tau_g + mu_g - tau_g;
        let g_quasihom = mu_g == tau_g;
        let f_substantial = delta_f.is_one();
        let lower_equality = value == lower;
        let upper_equality = value == upper;
        if !(lower <= value && value <= upper) {
            return Err(CodimError::InternalInconsistency(format!(
                "bounds violated: {lower} <= {value} <= {upper} fails for {label}"
            )));
        }
        if lower_equality != (g_quasihom || f_substantial) {
            return Err(CodimError::InternalInconsistency(format!(
                "lower-bound equality must hold exactly when μ(g)=τ(g) or δ(F)=1; \
                 got equality={lower_equality}, μ=τ:{g_quasihom}, δ=1:{f_substantial} for {label}"
            )));
        }
        if g_quasihom && !upper_equality {
            return Err(CodimError::InternalInconsistency(format!(
                "μ(g)=τ(g) forces the upper bound to be attained, but {value} < {upper} for {label}"
            )));
        }
        Ok(BoundsReport {
            label,
            aecod_f,
            tau_g,
            mu_g,
            bs_g,
            delta_f,
            codim_aug: value,
            lower,
            upper,
            refined,
            lower_equality,
            upper_equality,
            g_quasihom,
            f_substantial,
        })
    }

    /// `aecod(A_{F,g}(f)) <= μ_I(f) · μ(g)`: the two sides and the verdict.
    pub fn mond_inequality_check(
        &self,
        g: &FunctionGerm,
        mu_image_f: u64,
    ) -> Result<MondReport, CodimError> {
        let lhs = self
            .augmentation_codim(g)?
            .finite()
            .ok_or(CodimError::Infinite)?;
        let mu_g = milnor_number(g)?.finite().ok_or(CodimError::Infinite)?;
        let rhs = mu_image_f * mu_g;
        Ok(MondReport {
            lhs,
            rhs,
            holds: lhs <= rhs,
        })
    }
}

/// One full row of the bounds table.
#[derive(Clone, Debug, serde::Serialize)]
pub struct BoundsReport {
    pub label: String,
    pub aecod_f: u64,
    pub tau_g: u64,
    pub mu_g: u64,
    pub bs_g: u32,
    #[serde(serialize_with = "serialize_delta")]
    pub delta_f: Delta,
    pub codim_aug: u64,
    pub lower: u64,
    pub upper: u64,
    pub refined: u64,
    pub lower_equality: bool,
    pub upper_equality: bool,
    pub g_quasihom: bool,
    pub f_substantial: bool,
}

fn serialize_delta<S: serde::Serializer>(d: &Delta, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&d.to_string())
}

impl BoundsReport {
    pub fn to_row(&self) -> crate::report::ReportRow {
        crate::report::ReportRow {
            label: self.label.clone(),
            lower: self.lower,
            value: self.codim_aug,
            upper: self.upper,
            refined: self.refined,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct MondReport {
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::family_ak;
    use crate::ring::parse_polynomial;

    fn opsu(comps: &[&str], vars: &[&str]) -> OnePSU {
        let r = RingContext::new(vars.iter().copied(), MonomialOrder::DegRevLex).unwrap();
        let components = comps
            .iter()
            .map(|c| parse_polynomial(c, &r).unwrap())
            .collect();
        OnePSU::new(components, vars.last().unwrap()).unwrap()
    }

    #[test]
    fn cusp_opsu_codimension_one() {
        let f = opsu(&["y^2", "y^3 + l*y", "l"], &["y", "l"]);
        let engine = DamonEngine::new(&f).unwrap();
        assert_eq!(engine.aecod().unwrap(), QuotientDim::Finite(1));
    }

    #[test]
    fn f2_opsu_codimension_two_and_morse_bounds() {
        let f = opsu(&["y^2", "y^5 + l*y", "l"], &["y", "l"]);
        let engine = DamonEngine::new(&f).unwrap();
        assert_eq!(engine.aecod().unwrap(), QuotientDim::Finite(2));
        // Morse augmentation: τ = μ = 1 collapses everything to aecod
        let morse = family_ak(1).unwrap();
        let report = engine
            .bounds_report(&morse, "A_{F,A_1}(f_2)".into(), 16)
            .unwrap();
        assert_eq!(report.lower, 2);
        assert_eq!(report.codim_aug, 2);
        assert_eq!(report.upper, 2);
        assert!(report.lower_equality && report.upper_equality);
        assert!(report.g_quasihom);
    }

    #[test]
    fn mond_equality_for_f4() {
        // F = (y^2, y^5 + λy, λ), g = x^3, μ_I(f) = aecod(f) = 2
        let f = opsu(&["y^2", "y^5 + l*y", "l"], &["y", "l"]);
        let engine = DamonEngine::new(&f).unwrap();
        let g = FunctionGerm::new(
            parse_polynomial(
                "x^3",
                &RingContext::new(["x"], MonomialOrder::DegRevLex).unwrap(),
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(
            engine.augmentation_codim(&g).unwrap(),
            QuotientDim::Finite(4)
        );
        let mond = engine.mond_inequality_check(&g, 2).unwrap();
        assert_eq!((mond.lhs, mond.rhs), (4, 4));
        assert!(mond.holds);
    }
}
