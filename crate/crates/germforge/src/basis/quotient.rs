//! Counting standard monomials: the vector-space dimension of `R/I` from
//! the leading ideal of a standard basis.

use crate::ring::Monomial;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

impl QuotientDim {
    pub fn finite(&self) -> Option<u64> {
        match self {
            QuotientDim::Finite(n) => Some(*n),
            QuotientDim::Infinite => None,
        }
    }
}

impl std::fmt::Display for QuotientDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuotientDim::Finite(n) => write!(f, "{n}"),
            QuotientDim::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// Dimension of the quotient by the monomial ideal generated by `lead`:
/// the number of monomials outside it. `Infinite` exactly when some
/// variable has no pure power among the generators.
pub fn monomial_quotient_dimension(lead: &[Monomial], nvars: usize) -> QuotientDim {
    let gens = minimalize(lead.to_vec());
    if gens.iter().any(|g| g.is_one()) {
        return QuotientDim::Finite(0);
    }
    if nvars == 0 {
        return QuotientDim::Finite(1);
    }
    for v in 0..nvars {
        if !gens.iter().any(|g| g.is_pure_power_of(v)) {
            return QuotientDim::Infinite;
        }
    }
    let exps: Vec<Vec<u16>> = gens.iter().map(|g| g.exps().to_vec()).collect();
    QuotientDim::Finite(count_standard(&exps, nvars))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| g.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Recursive staircase count: slice by the exponent of the last variable
/// and group slices between consecutive generator exponents.
fn count_standard(gens: &[Vec<u16>], n: usize) -> u64 {
    if gens.iter().any(|g| g[..n].iter().all(|&e| e == 0)) {
        return 0;
    }
    if n == 0 {
        return 1;
    }
    let last = n - 1;
    let mut cuts: Vec<u16> = gens.iter().map(|g| g[last]).collect();
    cuts.sort_unstable();
    cuts.dedup();
    let top = *cuts.last().expect("nonempty generators");
    let mut total: u64 = 0;
    let mut lo: u16 = 0;
    for &cut in &cuts {
        if cut > lo {
            // slice constant for e in [lo, cut)
            let slice = project(gens, last, lo);
            total += (cut - lo) as u64 * count_standard(&slice, n - 1);
            lo = cut;
        }
    }
    debug_assert_eq!(lo, top);
    // e >= top: the slice contains the projection of the pure power of the
    // last variable, hence the constant monomial, and counts zero.
    total
}

fn project(gens: &[Vec<u16>], last: usize, e: u16) -> Vec<Vec<u16>> {
    let mut out: Vec<Vec<u16>> = Vec::new();
    for g in gens {
        if g[last] <= e {
            let mut p = g.clone();
            p[last] = 0;
            out.push(p);
        }
    }
    // prune non-minimal projections
    let mut minimal: Vec<Vec<u16>> = Vec::new();
    'outer: for g in out {
        let mut i = 0;
        while i < minimal.len() {
            if divides(&minimal[i], &g) {
                continue 'outer;
            }
            if divides(&g, &minimal[i]) {
                minimal.swap_remove(i);
            } else {
                i += 1;
            }
        }
        minimal.push(g);
    }
    minimal
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn box_count() {
        // <x^2, y^3>: standard monomials x^i y^j with i<2, j<3
        let dim = monomial_quotient_dimension(&[m(&[2, 0]), m(&[0, 3])], 2);
        assert_eq!(dim, QuotientDim::Finite(6));
    }

    #[test]
    fn staircase_count() {
        // <x^3, x*y, y^2>: 1, x, x^2, y
        let dim = monomial_quotient_dimension(&[m(&[3, 0]), m(&[1, 1]), m(&[0, 2])], 2);
        assert_eq!(dim, QuotientDim::Finite(4));
    }

    #[test]
    fn missing_pure_power_is_infinite() {
        let dim = monomial_quotient_dimension(&[m(&[1, 0])], 2);
        assert_eq!(dim, QuotientDim::Infinite);
    }

    #[test]
    fn unit_ideal_is_zero_dimensional() {
        let dim = monomial_quotient_dimension(&[m(&[0, 0])], 2);
        assert_eq!(dim, QuotientDim::Finite(0));
    }
}
