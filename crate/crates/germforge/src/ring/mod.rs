//! Sparse exact-rational polynomial arithmetic, monomial orders and parsing.

mod monomial;
mod parse;
mod poly;

pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::{Coeff, Polynomial, RingContext, RingError, Term};
