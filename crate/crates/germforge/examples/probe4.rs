use germforge::geometry::discriminant_equation_named;
use germforge::germ::parse_map_germ;
use germforge::liftable::derlog;
use std::time::Instant;

fn main() {
    let germ = parse_map_germ(
        "x, y, z^5 + x*z + y^2*z^2 + y*z^3 + l*z^2, l",
        &vec!["x".into(), "y".into(), "z".into(), "l".into()],
    )
    .unwrap();
    let t0 = Instant::now();
    let h = discriminant_equation_named(&germ, Some("L")).unwrap();
    eprintln!(
        "5_2 discriminant: deg {:?}, {} terms [{:?}]",
        h.poly().total_degree(),
        h.poly().terms().len(),
        t0.elapsed()
    );
    let prim = h.poly().primitive();
    let maxcoef = prim
        .terms()
        .iter()
        .map(|t| t.coeff.numer().bits())
        .max()
        .unwrap();
    eprintln!("max coefficient bits: {maxcoef}");
    let t0 = Instant::now();
    let module = derlog(&h).unwrap();
    eprintln!(
        "derlog: {} generators [{:?}]",
        module.generators().len(),
        t0.elapsed()
    );
}
