use germforge::basis::{IdealBasis, QuotientDim};
use germforge::germ::OnePSU;
use germforge::liftable::{lift_ideal, substantiality_degree_of, LiftIdeal};
use germforge::ring::{parse_polynomial, MonomialOrder, Polynomial, RingContext};
use std::collections::HashMap;
use std::time::Instant;

fn opsu(comps: &[&str], vars: &[&str]) -> OnePSU {
    let r = RingContext::new(vars.iter().copied(), MonomialOrder::DegRevLex).unwrap();
    let components = comps
        .iter()
        .map(|c| parse_polynomial(c, &r).unwrap())
        .collect();
    OnePSU::new(components, vars.last().unwrap()).unwrap()
}

fn main() {
    let cases = vec![
        (
            "11_5",
            opsu(
                &["x", "y^4 + x*y^2 + x^2*y + l*y", "l"],
                &["x", "y", "l"],
            ),
        ),
        (
            "5_2",
            opsu(
                &["x", "y", "z^5 + x*z + y^2*z^2 + y*z^3 + l*z^2", "l"],
                &["x", "y", "z", "l"],
            ),
        ),
        (
            "P_3^2",
            opsu(
                &["x", "y", "y*z + z^6 + z^8 + l*z^3", "x*z + z^3", "l"],
                &["x", "y", "z", "l"],
            ),
        ),
    ];
    for (name, f) in &cases {
        eprintln!("start {name}");
        let t0 = Instant::now();
        let lift = lift_ideal(f).unwrap();
        let t_lift = t0.elapsed();
        let LiftIdeal::Ideal {
            derlog,
            generators,
            basis,
        } = &lift
        else {
            panic!("unit");
        };
        eprintln!(
            "{name}: divisor degree {:?}, terms {}, {} derlog gens, {} lift gens  [{t_lift:?}]",
            derlog.divisor().poly().total_degree(),
            derlog.divisor().poly().terms().len(),
            derlog.generators().len(),
            generators.len()
        );
        // aecod: quotient of lift + <L>
        let t0 = Instant::now();
        let ring = basis.ring();
        let lambda = Polynomial::var(ring, ring.vars().last().unwrap()).unwrap();
        let mut gens = generators.clone();
        gens.push(lambda.reorder(gens[0].ring()));
        let b = IdealBasis::standard_basis(&gens, MonomialOrder::NegDegRevLex).unwrap();
        let dim = b.quotient_dimension().unwrap();
        eprintln!("  aecod = {dim}  [{:?}]", t0.elapsed());
        let t0 = Instant::now();
        let delta = substantiality_degree_of(&lift, 32).unwrap();
        eprintln!("  delta = {delta}  [{:?}]", t0.elapsed());

        // augmentation by DG_3: substitute L -> g(u,v), adjoin Jg
        let t0 = Instant::now();
        let gr = RingContext::new(["u", "v"], MonomialOrder::DegRevLex).unwrap();
        let g = parse_polynomial("u^7 + u^3*v^4 + v^6", &gr).unwrap();
        let dring = derlog.divisor().ring();
        let p = f.base_target_dim();
        let joint_vars: Vec<String> = dring.vars()[..p]
            .iter()
            .cloned()
            .chain(gr.vars().iter().cloned())
            .collect();
        let joint = RingContext::new(joint_vars, MonomialOrder::DegRevLex).unwrap();
        let mut asg = HashMap::new();
        for v in &dring.vars()[..p] {
            asg.insert(v.clone(), Polynomial::var(&joint, v).unwrap());
        }
        asg.insert(
            dring.vars()[p].clone(),
            g.embed(&joint).unwrap(),
        );
        let mut gens: Vec<Polynomial> = generators
            .iter()
            .map(|gen| gen.substitute(&asg).unwrap())
            .collect();
        gens.push(g.partial_derivative("u").unwrap().embed(&joint).unwrap());
        gens.push(g.partial_derivative("v").unwrap().embed(&joint).unwrap());
        let b = IdealBasis::standard_basis(&gens, MonomialOrder::NegDegRevLex).unwrap();
        let dim = b.quotient_dimension().unwrap();
        assert_eq!(
            dim,
            QuotientDim::Finite(if *name == "P_3^2" { 84 } else { 57 })
        );
        eprintln!("  aug codim with DG_3 = {dim}  [{:?}]", t0.elapsed());
    }
}
