use super::coeff::Scalar;
use super::context::{Param, VarContext};
use super::poly::Poly;
use crate::error::{Error, Result};

/// `1 - t^k` in `ctx`.
pub fn one_minus_t_power(ctx: VarContext, k: i16) -> Poly<Scalar> {
    Poly::one(ctx) - Poly::param_power(ctx, Param::T, k)
}

/// The t-binomial coefficient `[m choose k]_t` as a polynomial in t.
pub fn gaussian_binomial(ctx: VarContext, m: usize, k: usize) -> Result<Poly<Scalar>> {
    if k > m {
        return Err(Error::OutOfRange(format!("k = {k} exceeds m = {m}")));
    }
    let mut num = Poly::one(ctx);
    let mut den = Poly::one(ctx);
    for j in 1..=k {
        num = num * one_minus_t_power(ctx, (m - k + j) as i16);
        den = den * one_minus_t_power(ctx, j as i16);
    }
    num.exact_div(&den)
}

/// `[n]! = (1-t)(1-t^2)⋯(1-t^n)`.
pub fn t_factorial(ctx: VarContext, n: usize) -> Poly<Scalar> {
    (1..=n).fold(Poly::one(ctx), |acc, i| acc * one_minus_t_power(ctx, i as i16))
}

/// `(1-t^n)/(1-t) = 1 + t + ⋯ + t^{n-1}`.
pub fn t_integer(ctx: VarContext, n: usize) -> Poly<Scalar> {
    (0..n).fold(Poly::zero(ctx), |acc, i| acc + Poly::param_power(ctx, Param::T, i as i16))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::coeff::scalar;
    use crate::exact_algebra::context::Var;

    fn t_poly(ctx: VarContext, coeffs: &[i64]) -> Poly<Scalar> {
        coeffs.iter().enumerate().fold(Poly::zero(ctx), |acc, (i, c)| {
            acc + Poly::var_power(ctx, Var::T, i as i16).scale(&scalar(*c))
        })
    }

    #[test]
    fn small_values() {
        let c = VarContext::new(1).unwrap();
        assert_eq!(gaussian_binomial(c, 3, 1).unwrap(), t_poly(c, &[1, 1, 1]));
        assert_eq!(gaussian_binomial(c, 5, 0).unwrap(), Poly::one(c));
        assert_eq!(gaussian_binomial(c, 4, 2).unwrap(), t_poly(c, &[1, 1, 2, 1, 1]));
        assert!(matches!(gaussian_binomial(c, 2, 3), Err(Error::OutOfRange(_))));
    }
}
