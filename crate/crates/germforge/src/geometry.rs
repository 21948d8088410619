//! Defining equations of images (n -> n+1) and discriminants (n >= p) of
//! polynomial map-germs, computed by elimination.

use crate::basis::{eliminate, BasisError, IdealBasis};
use crate::germ::MapGerm;
use crate::ring::{Coeff, Monomial, MonomialOrder, Polynomial, RingContext, RingError};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum GeometryError {
    #[error("elimination ideal is not principal ({0} generators): the map is not a hypersurface parametrization")]
    NonPrincipal(usize),
    #[error("empty critical locus: the discriminant is the non-vanishing constant 1")]
    EmptyCriticalLocus,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A reduced defining equation of a hypersurface in target space, kept
/// together with the map it came from.
#[derive(Clone, Debug)]
pub struct HypersurfaceEquation {
    poly: Polynomial,
    source: Option<MapGerm>,
    reduced: bool,
}

impl HypersurfaceEquation {
    /// Package a hand-written divisor: the squarefree part is taken, so
    /// the result is always reduced.
    pub fn from_divisor(poly: Polynomial) -> Result<HypersurfaceEquation, GeometryError> {
        if poly.is_zero() || poly.is_constant() {
            return Err(GeometryError::DimensionMismatch(
                "a divisor must be a nonconstant polynomial".into(),
            ));
        }
        Ok(HypersurfaceEquation {
            poly: squarefree_part(&poly).monic(),
            source: None,
            reduced: true,
        })
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        self.poly.ring()
    }

    pub fn source(&self) -> Option<&MapGerm> {
        self.source.as_ref()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Compose the equation with its parametrization; zero for images.
    pub fn compose_with_source(&self) -> Result<Polynomial, GeometryError> {
        let source = self.source.as_ref().ok_or_else(|| {
            GeometryError::DimensionMismatch("divisor has no source parametrization".into())
        })?;
        let mut assignment = HashMap::new();
        for (v, comp) in self.ring().vars().iter().zip(source.components()) {
            assignment.insert(v.clone(), comp.clone());
        }
        Ok(self.poly.substitute(&assignment)?)
    }
}

/// Target variable names `X1..Xk`, with an optional override for the last
/// slot (the unfolding-parameter direction). Names colliding with source
/// variables get a suffix.
pub fn target_names(source: &RingContext, k: usize, last: Option<&str>) -> Vec<String> {
    let mut names: Vec<String> = (1..=k).map(|i| format!("X{i}")).collect();
    if let Some(l) = last {
        names[k - 1] = l.to_string();
    }
    for n in names.iter_mut() {
        while source.var_index(n).is_some() {
            n.push('t');
        }
    }
    names
}

/// Shared elimination core: drop the source variables from the graph ideal
/// `<X_i - F_i>` plus `extra`, in the ring (source vars, target vars).
///
/// Components that are a constant multiple of a bare source variable are
/// eliminated by substitution first; this is exact (linear elimination) and
/// is what keeps the catalog computations small.
fn eliminate_source(
    germ: &MapGerm,
    extra: &[Polynomial],
    names: &[String],
) -> Result<Vec<Polynomial>, GeometryError> {
    let source = germ.source_ring();
    let joint_vars: Vec<String> = source
        .vars()
        .iter()
        .cloned()
        .chain(names.iter().cloned())
        .collect();
    let joint = RingContext::new(joint_vars, MonomialOrder::DegRevLex)?;
    let mut gens: Vec<Polynomial> = Vec::new();
    for (name, comp) in names.iter().zip(germ.components()) {
        let x = Polynomial::var(&joint, name)?;
        gens.push(x.sub(&comp.embed(&joint)?));
    }
    for e in extra {
        gens.push(e.embed(&joint)?);
    }

    let nsource = source.nvars();
    let mut remaining: Vec<bool> = vec![true; nsource];
    // linear elimination loop
    loop {
        let mut applied = false;
        'scan: for gi in 0..gens.len() {
            if gens[gi].is_zero() {
                continue;
            }
            for (j, rem) in remaining.iter().enumerate().take(nsource) {
                if !rem {
                    continue;
                }
                if let Some((coeff, rest)) = split_linear(&gens[gi], j) {
                    // x_j = -rest / coeff, with `rest` free of all source vars
                    let image = rest.scale(&(-coeff.recip()));
                    let var_name = joint.vars()[j].clone();
                    let mut new_gens = Vec::with_capacity(gens.len() - 1);
                    for (k, g) in gens.iter().enumerate() {
                        if k == gi {
                            continue;
                        }
                        new_gens.push(g.eval_var(&var_name, &image)?);
                    }
                    gens = new_gens;
                    remaining[j] = false;
                    applied = true;
                    break 'scan;
                }
            }
        }
        if !applied {
            break;
        }
    }

    let drop: Vec<String> = joint
        .vars()
        .iter()
        .take(nsource)
        .zip(&remaining)
        .filter_map(|(v, &r)| r.then(|| v.clone()))
        .collect();
    gens.retain(|g| !g.is_zero());
    let target_ring = RingContext::new(names.iter().cloned(), MonomialOrder::DegRevLex)?;
    if gens.is_empty() {
        return Ok(vec![]);
    }
    let eliminated = if drop.is_empty() {
        eliminate(&gens, &[])?
    } else {
        eliminate(&gens, &drop)?
    };
    Ok(eliminated
        .into_iter()
        .map(|g| g.embed(&target_ring).expect("target variables only"))
        .collect())
}

/// `g = c*x_j + rest` with constant `c != 0` and `rest` free of `x_j`:
/// returns `(c, rest)`.
fn split_linear(g: &Polynomial, j: usize) -> Option<(Coeff, Polynomial)> {
    let mut coeff: Option<Coeff> = None;
    let mut rest_terms = Vec::new();
    for t in g.terms() {
        let e = t.mono.exp(j);
        if e == 1 && t.mono.degree() == 1 {
            if coeff.is_some() {
                return None;
            }
            coeff = Some(t.coeff.clone());
        } else if e == 0 {
            rest_terms.push(t.clone());
        } else {
            return None;
        }
    }
    let coeff = coeff?;
    let rest = Polynomial::from_terms(g.ring(), rest_terms);
    Some((coeff, rest))
}

/// Defining equation of the image of an `n -> n+1` germ: eliminate the
/// source variables from the graph ideal. The elimination ideal of a graph
/// is prime, so the principal generator is automatically reduced.
pub fn image_equation(germ: &MapGerm) -> Result<HypersurfaceEquation, GeometryError> {
    image_equation_named(germ, None)
}

pub fn image_equation_named(
    germ: &MapGerm,
    last_name: Option<&str>,
) -> Result<HypersurfaceEquation, GeometryError> {
    if germ.target_dim() != germ.source_dim() + 1 {
        return Err(GeometryError::DimensionMismatch(format!(
            "image equation needs target = source + 1, got {} -> {}",
            germ.source_dim(),
            germ.target_dim()
        )));
    }
    let names = target_names(germ.source_ring(), germ.target_dim(), last_name);
    let gens = eliminate_source(germ, &[], &names)?;
    principal(gens, germ, true)
}

/// Defining equation of the discriminant of an `n >= p` germ: adjoin the
/// maximal minors of the Jacobian to the graph ideal, eliminate the source
/// variables, and take the squarefree part of the principal generator.
pub fn discriminant_equation(germ: &MapGerm) -> Result<HypersurfaceEquation, GeometryError> {
    discriminant_equation_named(germ, None)
}

pub fn discriminant_equation_named(
    germ: &MapGerm,
    last_name: Option<&str>,
) -> Result<HypersurfaceEquation, GeometryError> {
    let (n, p) = (germ.source_dim(), germ.target_dim());
    if n < p {
        return Err(GeometryError::DimensionMismatch(format!(
            "discriminant needs source >= target, got {n} -> {p}"
        )));
    }
    let jac = germ.jacobian();
    let minors = maximal_minors(&jac, p, n);
    if minors.iter().all(|m| m.is_zero()) {
        // rank never maximal: handled as a non-principal refusal
        return Err(GeometryError::NonPrincipal(0));
    }
    // constant nonzero minor: the map is a submersion, no critical points
    if minors
        .iter()
        .any(|m| m.is_constant() && !m.is_zero())
    {
        return Err(GeometryError::EmptyCriticalLocus);
    }
    let names = target_names(germ.source_ring(), p, last_name);
    let gens = eliminate_source(germ, &minors, &names)?;
    if gens.len() == 1 && gens[0].is_constant() && !gens[0].is_zero() {
        return Err(GeometryError::EmptyCriticalLocus);
    }
    let eq = principal(gens, germ, false)?;
    let red = squarefree_part(&eq.poly);
    Ok(HypersurfaceEquation {
        poly: red.monic(),
        source: eq.source,
        reduced: true,
    })
}

fn principal(
    gens: Vec<Polynomial>,
    germ: &MapGerm,
    prime: bool,
) -> Result<HypersurfaceEquation, GeometryError> {
    if gens.len() != 1 {
        return Err(GeometryError::NonPrincipal(gens.len()));
    }
    let poly = gens.into_iter().next().unwrap().monic();
    let eq = HypersurfaceEquation {
        poly,
        source: Some(germ.clone()),
        reduced: prime,
    };
    debug_assert!(
        !prime || eq.compose_with_source().map(|c| c.is_zero()).unwrap_or(false),
        "image equation must vanish on the parametrization"
    );
    Ok(eq)
}

/// All p x p minors of the p x n Jacobian (rows = components).
fn maximal_minors(jac: &[Vec<Polynomial>], p: usize, n: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let mut cols: Vec<usize> = (0..p).collect();
    loop {
        out.push(det(jac, &cols));
        // next p-subset of 0..n in lexicographic order
        let mut i = p;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cols[i] != i + n - p {
                cols[i] += 1;
                for j in (i + 1)..p {
                    cols[j] = cols[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn det(jac: &[Vec<Polynomial>], cols: &[usize]) -> Polynomial {
    let ring = jac[0][0].ring();
    let k = cols.len();
    if k == 1 {
        return jac[0][cols[0]].clone();
    }
    let mut acc = Polynomial::zero(ring);
    for (r, &c) in cols.iter().enumerate() {
        let entry = &jac[0][c];
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter_map(|(i, &cc)| (i != r).then_some(cc))
            .collect();
        let minor = det(&jac[1..], &sub_cols);
        let signed = entry.mul(&minor);
        acc = if r % 2 == 0 {
            acc.add(&signed)
        } else {
            acc.sub(&signed)
        };
    }
    acc
}

/// Squarefree part of `h` over ℚ: `h / gcd(h, ∂h/∂X_1, ..., ∂h/∂X_k)`.
///
/// A cheap certificate is tried first: if the ideal generated by `h` and
/// its partials has a zero locus of codimension at least 2 (read off the
/// leading ideal of a Gröbner basis), there is no repeated factor and `h`
/// is returned as is. Only genuinely non-reduced generators pay for the
/// gcd chain.
pub fn squarefree_part(h: &Polynomial) -> Polynomial {
    if h.is_constant() {
        return h.clone();
    }
    let ring = h.ring().clone();
    let n = ring.nvars();
    let mut partials: Vec<Polynomial> = Vec::new();
    for v in ring.vars() {
        let d = h.partial_derivative(v).expect("declared variable");
        if d.is_constant() && !d.is_zero() {
            return h.clone();
        }
        if !d.is_zero() {
            partials.push(d);
        }
    }
    let mut gens = vec![h.clone()];
    gens.extend(partials.iter().cloned());
    if let Ok(basis) = IdealBasis::standard_basis(&gens, MonomialOrder::DegRevLex) {
        if basis.is_unit_ideal()
            || monomial_ideal_dimension(&basis.leading_monomials(), n) + 2 <= n
        {
            return h.clone();
        }
    }
    let mut g = h.clone();
    for p in &partials {
        if g.is_constant() {
            break;
        }
        g = poly_gcd(&g, p);
    }
    if g.is_constant() {
        return h.clone();
    }
    h.exact_div(&g)
        .expect("gcd divides")
        .primitive()
}

/// Krull dimension of the monomial ideal: the largest variable subset
/// containing no generator's support.
fn monomial_ideal_dimension(gens: &[Monomial], n: usize) -> usize {
    let supports: Vec<u32> = gens
        .iter()
        .map(|m| {
            let mut mask = 0u32;
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    let mut best = 0usize;
    for subset in 0u32..(1 << n) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        // independent: every generator uses a variable outside the subset
        if supports.iter().all(|&s| s & !subset != 0) {
            best = size;
        }
    }
    best
}

/// Multivariate gcd through the lcm: `<a> ∩ <b>` is computed by eliminating
/// a tag variable from `<t*a, (1-t)*b>`, and `gcd = a*b / lcm`.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let ring = a.ring();
    let mut tag = "t".to_string();
    while ring.var_index(&tag).is_some() {
        tag.push('t');
    }
    let ext_vars: Vec<String> = std::iter::once(tag.clone())
        .chain(ring.vars().iter().cloned())
        .collect();
    let ext = RingContext::new(ext_vars, MonomialOrder::DegRevLex).expect("unique names");
    let t = Polynomial::var(&ext, &tag).expect("tag present");
    let ta = t.mul(&a.embed(&ext).expect("subring"));
    let tb = Polynomial::one(&ext)
        .sub(&t)
        .mul(&b.embed(&ext).expect("subring"));
    let inter = eliminate(&[ta, tb], &[tag]).expect("well-formed elimination");
    assert_eq!(inter.len(), 1, "<a> ∩ <b> must be principal");
    let lcm = inter.into_iter().next().unwrap().embed(ring).expect("subring");
    let prod = a.mul(b);
    prod.exact_div(&lcm)
        .expect("lcm divides the product")
        .primitive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::germ::parse_map_germ;
    use crate::ring::parse_polynomial;

    fn germ(comps: &str, vars: &[&str]) -> MapGerm {
        parse_map_germ(comps, &vars.iter().map(|s| s.to_string()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn cusp_curve_image() {
        let f = germ("y^2, y^3", &["y"]);
        let h = image_equation(&f).unwrap();
        let r = h.ring().clone();
        assert_eq!(h.poly(), &parse_polynomial("X1^3 - X2^2", &r).unwrap());
        assert!(h.compose_with_source().unwrap().is_zero());
    }

    #[test]
    fn opsu_image_composition_vanishes() {
        let f = germ("y^2, y^5 + l*y, l", &["y", "l"]);
        let h = image_equation_named(&f, Some("L")).unwrap();
        assert!(h.compose_with_source().unwrap().is_zero());
        // X1(X1^2 + L)^2 - X2^2, up to the monic normalization
        let r = h.ring().clone();
        let expect = parse_polynomial("X1*(X1^2 + L)^2 - X2^2", &r).unwrap().monic();
        assert_eq!(h.poly(), &expect);
    }

    #[test]
    fn degenerate_image_is_non_principal() {
        // (x, x, x) collapses the plane to a line: codimension 2 image
        let f = germ("x, x, x", &["x", "y"]);
        assert!(matches!(
            image_equation(&f),
            Err(GeometryError::NonPrincipal(_))
        ));
    }

    #[test]
    fn whitney_cusp_discriminant() {
        let f = germ("x, l^3 + x*l", &["x", "l"]);
        let h = discriminant_equation(&f).unwrap();
        let r = h.ring().clone();
        // 4 X1^3 + 27 X2^2 up to normalization
        let expect = parse_polynomial("4*X1^3 + 27*X2^2", &r).unwrap().monic();
        assert_eq!(h.poly(), &expect);
        // critical parametrization x = -3t^2, y = -2t^3 lies on it
        let tring = RingContext::new(["t"], MonomialOrder::DegRevLex).unwrap();
        let mut asg = HashMap::new();
        asg.insert("X1".to_string(), parse_polynomial("0 - 3*t^2", &tring).unwrap());
        asg.insert("X2".to_string(), parse_polynomial("0 - 2*t^3", &tring).unwrap());
        assert!(h.poly().substitute(&asg).unwrap().is_zero());
    }

    #[test]
    fn identity_has_empty_discriminant() {
        let f = germ("x", &["x"]);
        assert!(matches!(
            discriminant_equation(&f),
            Err(GeometryError::EmptyCriticalLocus)
        ));
    }

    #[test]
    fn discriminant_invariant_under_source_permutation() {
        let a = germ("x, y^4 + x*y^2 + x^2*y + l*y, l", &["x", "y", "l"]);
        let b = germ("x, y^4 + x*y^2 + x^2*y + l*y, l", &["y", "x", "l"]);
        let ha = discriminant_equation(&a).unwrap();
        let hb = discriminant_equation(&b).unwrap();
        assert_eq!(ha.poly(), hb.poly());
    }

    #[test]
    fn gcd_and_squarefree() {
        let r = RingContext::new(["X", "Y"], MonomialOrder::DegRevLex).unwrap();
        let a = parse_polynomial("(X^2 - Y^3)^2*(X + Y)", &r).unwrap();
        let sf = squarefree_part(&a);
        let expect = parse_polynomial("(X^2 - Y^3)*(X + Y)", &r).unwrap().primitive();
        assert_eq!(sf.primitive(), expect);
        // already squarefree input is returned untouched
        let b = parse_polynomial("X^2 - Y^3", &r).unwrap();
        assert_eq!(squarefree_part(&b), b);
        let g = poly_gcd(
            &parse_polynomial("X^2 - Y^2", &r).unwrap(),
            &parse_polynomial("X^2 + 2*X*Y + Y^2", &r).unwrap(),
        );
        assert_eq!(g, parse_polynomial("X + Y", &r).unwrap());
    }
}
