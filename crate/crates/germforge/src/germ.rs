//! Map-germs, one-parameter stable unfoldings, the augmentation
//! construction, and the plane-curve arithmetic.

use crate::basis::VectorTuple;
use crate::invariants::{milnor_number, tjurina_number, FunctionGerm, InvariantError};
use crate::ring::{Coeff, MonomialOrder, Polynomial, RingContext, RingError};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum GermError {
    #[error("component {0} does not vanish at the origin")]
    NonZeroConstantTerm(usize),
    #[error("components belong to different rings")]
    MixedRings,
    #[error("variable `{0}` appears in both the unfolding and the augmenting function")]
    VariableCollision(String),
    #[error("the unfolding parameter must be the last source variable")]
    ParamNotLast,
    #[error("the last target component must equal the unfolding parameter")]
    LastComponentNotParam,
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("parity violation: μ = {mu} and r = {r} give a non-integer δ (wrong branch count?)")]
    ParityViolation { mu: u64, r: u64 },
    #[error("τ(g) = δ: the parametrization is smooth or immersive, the quotient is undefined")]
    SmoothOrImmersive,
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A polynomial map-germ `(k^n, 0) -> (k^p, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapGerm {
    components: Vec<Polynomial>,
}

impl MapGerm {
    pub fn new(components: Vec<Polynomial>) -> Result<MapGerm, GermError> {
        if components.is_empty() {
            return Err(GermError::ArityMismatch("no components".into()));
        }
        for (i, c) in components.iter().enumerate() {
            if !c.same_ring(&components[0]) {
                return Err(GermError::MixedRings);
            }
            if !c.constant_coefficient().is_zero() {
                return Err(GermError::NonZeroConstantTerm(i));
            }
        }
        Ok(MapGerm { components })
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn source_ring(&self) -> &Arc<RingContext> {
        self.components[0].ring()
    }

    pub fn source_dim(&self) -> usize {
        self.source_ring().nvars()
    }

    pub fn target_dim(&self) -> usize {
        self.components.len()
    }

    /// Rows = components, columns = source variables.
    pub fn jacobian(&self) -> Vec<Vec<Polynomial>> {
        self.components
            .iter()
            .map(|c| {
                self.source_ring()
                    .vars()
                    .iter()
                    .map(|v| c.partial_derivative(v).expect("declared variable"))
                    .collect()
            })
            .collect()
    }

    /// Target-component permutations are A-equivalences; catalog entries
    /// printed in a different component order compare with this.
    pub fn equal_up_to_target_permutation(&self, other: &MapGerm) -> bool {
        if self.target_dim() != other.target_dim() {
            return false;
        }
        let mut used = vec![false; other.components.len()];
        'outer: for c in &self.components {
            for (j, d) in other.components.iter().enumerate() {
                if !used[j] && c == d {
                    used[j] = true;
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }
}

impl std::fmt::Display for MapGerm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A one-parameter unfolding `F(x, λ) = (f_λ(x), λ)` with the parameter as
/// the last source variable and last target component.
///
/// Stability is an attribute of the catalog entry, not something the
/// constructor verifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePSU {
    /// All p+1 target components, the last one being the bare parameter.
    components: Vec<Polynomial>,
    param: String,
}

impl OnePSU {
    pub fn new(components: Vec<Polynomial>, param: &str) -> Result<OnePSU, GermError> {
        let germ = MapGerm::new(components)?;
        let ring = germ.source_ring().clone();
        match ring.var_index(param) {
            Some(i) if i == ring.nvars() - 1 => {}
            _ => return Err(GermError::ParamNotLast),
        }
        let components = germ.components;
        let lambda = Polynomial::var(&ring, param)?;
        if *components.last().unwrap() != lambda {
            return Err(GermError::LastComponentNotParam);
        }
        Ok(OnePSU {
            components,
            param: param.to_string(),
        })
    }

    pub fn param(&self) -> &str {
        &self.param
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// The unfolded components `f_λ`, without the trailing parameter.
    pub fn unfolded(&self) -> &[Polynomial] {
        &self.components[..self.components.len() - 1]
    }

    pub fn source_ring(&self) -> &Arc<RingContext> {
        self.components[0].ring()
    }

    /// Base target dimension p (the unfolding maps n+1 -> p+1).
    pub fn base_target_dim(&self) -> usize {
        self.components.len() - 1
    }

    pub fn as_map_germ(&self) -> MapGerm {
        MapGerm {
            components: self.components.clone(),
        }
    }

    /// The base germ `f = f_0`, over the source ring without the parameter.
    pub fn base(&self) -> Result<MapGerm, GermError> {
        let ring = self.source_ring();
        let base_vars: Vec<String> = ring.vars()[..ring.nvars() - 1].to_vec();
        let base_ring = RingContext::new(base_vars, ring.order())?;
        let mut assignment = HashMap::new();
        for v in base_ring.vars() {
            assignment.insert(v.clone(), Polynomial::var(&base_ring, v)?);
        }
        assignment.insert(self.param.clone(), Polynomial::zero(&base_ring));
        let comps = self
            .unfolded()
            .iter()
            .map(|c| c.substitute(&assignment))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MapGerm::new(comps)?)
    }
}

impl std::fmt::Display for OnePSU {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_map_germ())
    }
}

fn check_disjoint(f_ring: &RingContext, g_ring: &RingContext) -> Result<(), GermError> {
    for v in g_ring.vars() {
        if f_ring.var_index(v).is_some() {
            return Err(GermError::VariableCollision(v.clone()));
        }
    }
    Ok(())
}

/// The augmentation of the base of `F` by `g`: substitute `λ -> g(z)` in
/// the unfolded components and append the identity on the `z` block.
/// Source dimension n+d, target dimension p+d.
pub fn augment(f: &OnePSU, g: &FunctionGerm) -> Result<MapGerm, GermError> {
    let f_ring = f.source_ring();
    let g_ring = g.ring();
    check_disjoint(f_ring, g_ring)?;
    let x_vars = &f_ring.vars()[..f_ring.nvars() - 1];
    let joint_vars: Vec<String> = x_vars
        .iter()
        .cloned()
        .chain(g_ring.vars().iter().cloned())
        .collect();
    let joint = RingContext::new(joint_vars, MonomialOrder::DegRevLex)?;
    let g_joint = g.poly().embed(&joint)?;
    let mut assignment = HashMap::new();
    for v in x_vars {
        assignment.insert(v.clone(), Polynomial::var(&joint, v)?);
    }
    assignment.insert(f.param().to_string(), g_joint);
    let mut comps = f
        .unfolded()
        .iter()
        .map(|c| c.substitute(&assignment))
        .collect::<Result<Vec<_>, _>>()?;
    for v in g_ring.vars() {
        comps.push(Polynomial::var(&joint, v)?);
    }
    Ok(MapGerm::new(comps)?)
}

/// The natural unfolding of the augmentation: `λ -> g(z) + λ`, keeping the
/// parameter. Its base is exactly `augment(f, g)`.
pub fn natural_opsu(f: &OnePSU, g: &FunctionGerm) -> Result<OnePSU, GermError> {
    let f_ring = f.source_ring();
    let g_ring = g.ring();
    check_disjoint(f_ring, g_ring)?;
    let x_vars = &f_ring.vars()[..f_ring.nvars() - 1];
    let joint_vars: Vec<String> = x_vars
        .iter()
        .cloned()
        .chain(g_ring.vars().iter().cloned())
        .chain(std::iter::once(f.param().to_string()))
        .collect();
    let joint = RingContext::new(joint_vars, MonomialOrder::DegRevLex)?;
    let lambda = Polynomial::var(&joint, f.param())?;
    let shifted = g.poly().embed(&joint)?.add(&lambda);
    let mut assignment = HashMap::new();
    for v in x_vars {
        assignment.insert(v.clone(), Polynomial::var(&joint, v)?);
    }
    assignment.insert(f.param().to_string(), shifted);
    let mut comps = f
        .unfolded()
        .iter()
        .map(|c| c.substitute(&assignment))
        .collect::<Result<Vec<_>, _>>()?;
    for v in g_ring.vars() {
        comps.push(Polynomial::var(&joint, v)?);
    }
    comps.push(lambda);
    let opsu = OnePSU::new(comps, f.param())?;
    debug_assert!(opsu
        .base()
        .map(|b| b == augment(f, g).unwrap())
        .unwrap_or(false));
    Ok(opsu)
}

/// The normal-form unfolding
/// `( f(x) + (1 + Σ q_i(λ) s_i(f(x))) λ γ(x), λ )`
/// built literally from its data: `γ` spans the distinguished normal
/// direction, the `s_i` are target-side multipliers (zero constant term)
/// and the `q_i` are one-variable functions of the parameter.
pub fn normal_form_opsu(
    f: &MapGerm,
    gamma: &VectorTuple,
    s: &[Polynomial],
    q: &[Polynomial],
    param: &str,
) -> Result<OnePSU, GermError> {
    if gamma.rank() != f.target_dim() {
        return Err(GermError::ArityMismatch(format!(
            "γ has rank {}, the germ has {} components",
            gamma.rank(),
            f.target_dim()
        )));
    }
    if s.len() != q.len() {
        return Err(GermError::ArityMismatch(format!(
            "{} multipliers s but {} coefficients q",
            s.len(),
            q.len()
        )));
    }
    for (i, si) in s.iter().enumerate() {
        if !si.constant_coefficient().is_zero() {
            return Err(GermError::NonZeroConstantTerm(i));
        }
        if si.ring().nvars() != f.target_dim() {
            return Err(GermError::ArityMismatch(format!(
                "s_{} lives in {} target variables, expected {}",
                i,
                si.ring().nvars(),
                f.target_dim()
            )));
        }
    }
    let ring = f.source_ring();
    if ring.var_index(param).is_some() {
        return Err(GermError::VariableCollision(param.to_string()));
    }
    let ext_vars: Vec<String> = ring
        .vars()
        .iter()
        .cloned()
        .chain(std::iter::once(param.to_string()))
        .collect();
    let ext = RingContext::new(ext_vars, MonomialOrder::DegRevLex)?;
    let lambda = Polynomial::var(&ext, param)?;

    // s_i(f(x)): substitute the target variables by the components
    let mut factor = Polynomial::one(&ext);
    for (si, qi) in s.iter().zip(q) {
        let mut asg = HashMap::new();
        for (j, v) in si.ring().vars().iter().enumerate() {
            asg.insert(v.clone(), f.components()[j].embed(&ext)?);
        }
        let si_f = si.substitute(&asg)?;
        let mut qasg = HashMap::new();
        let qvar = qi.ring().vars().first().cloned().unwrap_or_default();
        qasg.insert(qvar, lambda.clone());
        let qi_l = if qi.is_constant() {
            Polynomial::constant(&ext, qi.constant_coefficient())
        } else {
            qi.substitute(&qasg)?
        };
        factor = factor.add(&qi_l.mul(&si_f));
    }
    factor = factor.mul(&lambda);

    let mut comps = Vec::with_capacity(f.target_dim() + 1);
    for (fi, gi) in f.components().iter().zip(gamma.components()) {
        comps.push(fi.embed(&ext)?.add(&factor.mul(&gi.embed(&ext)?)));
    }
    comps.push(lambda);
    OnePSU::new(comps, param)
}

/// The plane-curve invariants derived from `μ`, `τ` and the branch count.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PlaneCurveReport {
    pub mu: u64,
    pub tau: u64,
    pub branches: u64,
    pub delta: u64,
    pub mu_image: u64,
    pub aecod: u64,
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub quotient: Coeff,
}

///`δ = (μ + r - 1)/2`, `μ_I = μ - δ`, `aecod = τ - δ`, quotient exact.
/// The branch count `r` is caller-supplied; the parity of `μ + r - 1`
/// cross-checks it.
pub fn plane_curve_report(g: &FunctionGerm, branches: u64) -> Result<PlaneCurveReport, GermError> {
    if g.nvars() != 2 {
        return Err(GermError::ArityMismatch(format!(
            "plane curves have 2 variables, got {}",
            g.nvars()
        )));
    }
    let mu = milnor_number(g)?
        .finite()
        .ok_or(InvariantError::NonIsolated)?;
    let tau = tjurina_number(g)?
        .finite()
        .ok_or(InvariantError::NonIsolated)?;
    if (mu + branches + 1) % 2 != 0 {
        return Err(GermError::ParityViolation { mu, r: branches });
    }
    let delta = (mu + branches - 1) / 2;
    let mu_image = mu - delta;
    if tau <= delta {
        return Err(GermError::SmoothOrImmersive);
    }
    let aecod = tau - delta;
    let quotient = Coeff::new(BigInt::from(mu_image), BigInt::from(aecod));
    Ok(PlaneCurveReport {
        mu,
        tau,
        branches,
        delta,
        mu_image,
        aecod,
        quotient,
    })
}

/// The per-factor values `(k+1)(n-k)` for `1 <= k <= n-1`, their maximum
/// and the quarter-square bound `(n+1)^2/4`; the bound is attained exactly
/// for odd `n`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Conjecture2Bound {
    pub n: u64,
    pub values: Vec<(u64, u64)>,
    pub max: u64,
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub bound: Coeff,
    pub attained: bool,
}

pub fn conjecture2_bound(n: u64) -> Result<Conjecture2Bound, GermError> {
    if n < 2 {
        return Err(GermError::ArityMismatch(format!("need n >= 2, got {n}")));
    }
    let values: Vec<(u64, u64)> = (1..n).map(|k| (k, (k + 1) * (n - k))).collect();
    let max = values.iter().map(|&(_, v)| v).max().unwrap();
    let bound = Coeff::new(BigInt::from((n + 1) * (n + 1)), BigInt::from(4u32));
    let attained = Coeff::from(BigInt::from(max)) == bound;
    Ok(Conjecture2Bound {
        n,
        values,
        max,
        bound,
        attained,
    })
}

/// Parse a comma-separated component list over the given variables into a
/// map-germ.
pub fn parse_map_germ(components: &str, vars: &[String]) -> Result<MapGerm, GermError> {
    let ring = RingContext::new(vars.iter().cloned(), MonomialOrder::DegRevLex)?;
    let comps = components
        .split(',')
        .map(|c| crate::ring::parse_polynomial(c.trim(), &ring))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MapGerm::new(comps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_polynomial;
    use num_traits::One;

    fn opsu(comps: &[&str], vars: &[&str], param: &str) -> OnePSU {
        let r = RingContext::new(vars.iter().copied(), MonomialOrder::DegRevLex).unwrap();
        let components = comps
            .iter()
            .map(|c| parse_polynomial(c, &r).unwrap())
            .collect();
        OnePSU::new(components, param).unwrap()
    }

    fn fgerm(text: &str, vars: &[&str]) -> FunctionGerm {
        let r = RingContext::new(vars.iter().copied(), MonomialOrder::DegRevLex).unwrap();
        FunctionGerm::new(parse_polynomial(text, &r).unwrap()).unwrap()
    }

    #[test]
    fn augment_to_f4() {
        // the augmentation of (y^2, y^5) by x^3 through its natural unfolding
        let f = opsu(&["y^2", "y^5 + l*y", "l"], &["y", "l"], "l");
        let g = fgerm("x^3", &["x"]);
        let a = augment(&f, &g).unwrap();
        let expect = parse_map_germ("y^2, y^5 + x^3*y, x", &vec!["y".into(), "x".into()]).unwrap();
        assert_eq!(a, expect);
        // and the catalog form (x, y^2, y^5 + x^3 y) up to component order
        let f4 = parse_map_germ("x, y^2, y^5 + x^3*y", &vec!["y".into(), "x".into()]).unwrap();
        assert!(a.equal_up_to_target_permutation(&f4));
    }

    #[test]
    fn augment_to_s3_class() {
        let f = opsu(&["y^2", "y^3 + l*y", "l"], &["y", "l"], "l");
        let g = fgerm("x^4", &["x"]);
        let a = augment(&f, &g).unwrap();
        let expect = parse_map_germ("y^2, y^3 + x^4*y, x", &vec!["y".into(), "x".into()]).unwrap();
        assert_eq!(a, expect);
    }

    #[test]
    fn augment_by_smooth_function_is_renaming() {
        let f = opsu(&["y^2", "y^3 + l*y", "l"], &["y", "l"], "l");
        let g = fgerm("z", &["z"]);
        let a = augment(&f, &g).unwrap();
        let expect = parse_map_germ("y^2, y^3 + z*y, z", &vec!["y".into(), "z".into()]).unwrap();
        assert_eq!(a, expect);
    }

    #[test]
    fn variable_collision_rejected() {
        let f = opsu(&["y^2", "y^3 + l*y", "l"], &["y", "l"], "l");
        let g = fgerm("y^3", &["y"]);
        assert!(matches!(
            augment(&f, &g),
            Err(GermError::VariableCollision(_))
        ));
    }

    #[test]
    fn natural_opsu_recovers_augmentation() {
        let f = opsu(&["y^2", "y^5 + l*y", "l"], &["y", "l"], "l");
        let g = fgerm("x^3", &["x"]);
        let n = natural_opsu(&f, &g).unwrap();
        assert_eq!(n.base().unwrap(), augment(&f, &g).unwrap());
        let r = n.source_ring().clone();
        assert_eq!(
            n.components()[1],
            parse_polynomial("y^5 + (x^3 + l)*y", &r).unwrap()
        );
    }

    #[test]
    fn normal_form_opsu_literal() {
        let base = parse_map_germ("y^2, y^5", &vec!["y".into()]).unwrap();
        let gamma = VectorTuple::new(vec![
            Polynomial::zero(base.source_ring()),
            Polynomial::var(base.source_ring(), "y").unwrap(),
        ])
        .unwrap();
        let tring = RingContext::new(["X1", "X2"], MonomialOrder::DegRevLex).unwrap();
        let s1 = parse_polynomial("X1", &tring).unwrap();
        let lring = RingContext::new(["l"], MonomialOrder::DegRevLex).unwrap();

        // q = 0 collapses to (f + λγ, λ)
        let q0 = parse_polynomial("0", &lring).unwrap();
        let triv = normal_form_opsu(&base, &gamma, &[s1.clone()], &[q0], "l").unwrap();
        let r = triv.source_ring().clone();
        assert_eq!(triv.components()[1], parse_polynomial("y^5 + l*y", &r).unwrap());

        // q = λ gives (y^2, y^5 + (1 + λ y^2) λ y, λ)
        let q1 = parse_polynomial("l", &lring).unwrap();
        let u = normal_form_opsu(&base, &gamma, &[s1.clone()], &[q1], "l").unwrap();
        let r = u.source_ring().clone();
        assert_eq!(
            u.components()[1],
            parse_polynomial("y^5 + (1 + l*y^2)*l*y", &r).unwrap()
        );

        // q = λ^2 gives (y^2, y^5 + (1 + λ^2 y^2) λ y, λ)
        let q2 = parse_polynomial("l^2", &lring).unwrap();
        let u = normal_form_opsu(&base, &gamma, &[s1], &[q2], "l").unwrap();
        let r = u.source_ring().clone();
        assert_eq!(
            u.components()[1],
            parse_polynomial("y^5 + (1 + l^2*y^2)*l*y", &r).unwrap()
        );
    }

    #[test]
    fn plane_curve_cusp() {
        let g = fgerm("y^2 - x^3", &["x", "y"]);
        let rep = plane_curve_report(&g, 1).unwrap();
        assert_eq!((rep.mu, rep.tau, rep.delta), (2, 2, 1));
        assert_eq!((rep.mu_image, rep.aecod), (1, 1));
        assert_eq!(rep.quotient, Coeff::one());
    }

    #[test]
    fn plane_curve_e6() {
        let g = fgerm("x^3 + y^4", &["x", "y"]);
        let rep = plane_curve_report(&g, 1).unwrap();
        assert_eq!((rep.mu, rep.tau, rep.delta), (6, 6, 3));
        assert_eq!(rep.quotient, Coeff::one());
    }

    #[test]
    fn plane_curve_parity_and_smooth_errors() {
        let g = fgerm("y^2 - x^3", &["x", "y"]);
        assert!(matches!(
            plane_curve_report(&g, 2),
            Err(GermError::ParityViolation { .. })
        ));
        let smooth = fgerm("x^2 - y^2", &["x", "y"]); // node: μ=τ=1, r=2, δ=1 = τ
        assert!(matches!(
            plane_curve_report(&smooth, 2),
            Err(GermError::SmoothOrImmersive)
        ));
    }

    #[test]
    fn conjecture2_tables() {
        let b3 = conjecture2_bound(3).unwrap();
        assert_eq!(b3.values, vec![(1, 4), (2, 3)]);
        assert_eq!(b3.max, 4);
        assert!(b3.attained);
        let b2 = conjecture2_bound(2).unwrap();
        assert_eq!(b2.values, vec![(1, 2)]);
        assert!(!b2.attained);
        let b5 = conjecture2_bound(5).unwrap();
        assert_eq!(b5.max, 9);
        assert!(b5.attained);
    }
}
