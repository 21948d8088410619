use germforge::basis::IdealBasis;
use germforge::geometry::discriminant_equation_named;
use germforge::germ::parse_map_germ;
use germforge::liftable::derlog;
use germforge::ring::MonomialOrder;
use std::time::Instant;

fn main() {
    let germ = parse_map_germ(
        "x, y^4 + x*y^2 + x^2*y + l*y, l",
        &vec!["x".into(), "y".into(), "l".into()],
    )
    .unwrap();
    let h = discriminant_equation_named(&germ, Some("L")).unwrap();
    let module = derlog(&h).unwrap();
    let k = h.ring().nvars();
    let gens: Vec<_> = module
        .generators()
        .iter()
        .map(|g| g.component(k - 1).clone())
        .filter(|c| !c.is_zero())
        .collect();
    eprintln!("{} lift generators:", gens.len());
    for g in &gens {
        eprintln!(
            "  deg {:?}, ord {:?}, {} terms",
            g.total_degree(),
            g.min_degree(),
            g.terms().len()
        );
    }
    let t0 = Instant::now();
    let basis = IdealBasis::standard_basis(&gens, MonomialOrder::NegDegRevLex).unwrap();
    eprintln!(
        "local SB: {} elements [{:?}]",
        basis.generators().len(),
        t0.elapsed()
    );
    for b in basis.generators().iter().take(8) {
        eprintln!("  lm {:?}", b.leading_monomial());
    }
}
