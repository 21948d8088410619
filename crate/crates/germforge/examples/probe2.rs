use germforge::geometry::{discriminant_equation_named, squarefree_part};
use germforge::germ::parse_map_germ;
use germforge::liftable::derlog;
use germforge::ring::{parse_polynomial, MonomialOrder, RingContext};
use std::time::Instant;

fn main() {
    // stage 1: the discriminant of the 11_5 unfolding
    let germ = parse_map_germ(
        "x, y^4 + x*y^2 + x^2*y + l*y, l",
        &vec!["x".into(), "y".into(), "l".into()],
    )
    .unwrap();
    let t0 = Instant::now();
    let h = discriminant_equation_named(&germ, Some("L")).unwrap();
    eprintln!(
        "discriminant: deg {:?}, {} terms [{:?}]",
        h.poly().total_degree(),
        h.poly().terms().len(),
        t0.elapsed()
    );
    eprintln!("H = {}", h.poly().primitive());

    let t0 = Instant::now();
    let module = derlog(&h).unwrap();
    eprintln!(
        "derlog: {} generators [{:?}]",
        module.generators().len(),
        t0.elapsed()
    );

    // standalone squarefree probe on a synthetic dense-ish polynomial
    let r = RingContext::new(["X1", "X2", "L"], MonomialOrder::DegRevLex).unwrap();
    let p = parse_polynomial("(X1^3 - X2^2 + L*X1)^1 + L^5", &r).unwrap();
    let t0 = Instant::now();
    let _ = squarefree_part(&p);
    eprintln!("sf small [{:?}]", t0.elapsed());
}
