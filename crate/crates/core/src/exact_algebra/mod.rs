//! Exact arithmetic: rationals, sparse Laurent polynomials, Q(t, q) scalars,
//! factored rational functions and determinants.

mod binomial;
mod coeff;
mod context;
mod matrix;
mod poly;
mod qt;
mod rational;

pub use binomial::{gaussian_binomial, one_minus_t_power, t_factorial, t_integer};
pub use coeff::{ratio, scalar, Coeff, Scalar};
pub use context::{Exponents, Param, Var, VarContext, MAX_VARS, ZERO_EXPONENTS};
pub use matrix::{det_bareiss, det_cofactor, determinant, invert, solve_linear, ExactRing, LinearSolution};
pub use poly::{LaurentPoly, Poly};
pub use qt::{absorb_parameters, gcd_tq, lift_parameters, release_parameters, QtScalar};
pub use rational::RationalFn;

/// Polynomial `p` with exact divisibility check, as a free function.
pub fn poly_exact_divide(p: &LaurentPoly, d: &LaurentPoly) -> crate::Result<LaurentPoly> {
    p.exact_div(d)
}

pub fn rat_equal(a: &RationalFn, b: &RationalFn) -> bool {
    a.rat_equal(b)
}
