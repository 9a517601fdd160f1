//! Exact coefficient arithmetic: rationals and Laurent polynomials in
//! `q, u, v, w, λ`.

mod laurent;
mod rational;

pub(crate) use laurent::join_terms;
pub use laurent::{Exponents, LaurentPoly, Var};
pub use rational::Rational;
