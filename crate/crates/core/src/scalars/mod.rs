//! Exact scalars: torus monomials, Laurent polynomials, rational functions,
//! truncated `(q, Q)` series and virtual characters.

mod character;
mod laurent;
mod monomial;
mod ratfunc;
mod series;
pub mod text;

pub use character::{bracket_of, Character};
pub use laurent::LaurentPoly;
pub use monomial::Monomial;
pub use ratfunc::RatFunc;
pub use series::QSeries;

/// Equality by cross-multiplication.
pub fn ratfunc_eq(a: &RatFunc, b: &RatFunc) -> bool {
    a == b
}
