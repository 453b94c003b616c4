//! Exact coefficient arithmetic: Laurent polynomials in `q`, the fraction field
//! `Q(q)`, and cyclotomic numbers `Q(ζ_p)` for character values.

mod cyclotomic;
mod laurent;
mod ratfn;

pub use cyclotomic::{cyclo_theta, is_prime, rational_json, Cyclotomic};
#[cfg(test)]
pub(crate) use cyclotomic::big;
pub use laurent::LaurentPoly;
pub use ratfn::RationalFn;

use num_rational::BigRational;

use crate::error::Result;

/// Exact evaluation of `f` at `q0`.
pub fn poly_eval(f: &LaurentPoly, q0: &BigRational) -> Result<BigRational> {
    f.eval(q0)
}

/// The substitution `q -> q^{-1}`.
pub fn poly_invert_q(f: &LaurentPoly) -> LaurentPoly {
    f.invert_q()
}
