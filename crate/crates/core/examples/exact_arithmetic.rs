//! Sparse Laurent polynomials, factored rational functions and a Bareiss determinant.

use gaudinlab::exact_algebra::{determinant, gaussian_binomial, t_factorial, Poly, RationalFn, Var, VarContext};

fn main() -> gaudinlab::Result<()> {
    let ctx = VarContext::new(2)?;
    let (x1, x2, t) = (Poly::x(ctx, 1), Poly::x(ctx, 2), Poly::t(ctx));
    let f = (&x1 - &(&t * &x2)).pow(2);
    println!("(x1 - t x2)^2 = {f}");
    println!("divided by (x1 - t x2): {}", f.exact_div(&(&x1 - &(&t * &x2)))?);
    println!("swap x1 <-> x2: {}", f.swap_vars(Var::X(1), Var::X(2)));

    let inv = Poly::var_power(ctx, Var::Y(1), -1);
    println!("Laurent: (x1 + 1/y1)^2 = {}", (&x1 + &inv).pow(2));

    let a = RationalFn::from_poly(&x1).div(&RationalFn::from_poly(&(&x1 - &x2)))?;
    let b = RationalFn::from_poly(&x2).div(&RationalFn::from_poly(&(&x2 - &x1)))?;
    println!("x1/(x1-x2) + x2/(x2-x1) = {}", a.add(&b).reduce());

    let m = vec![vec![x1.clone(), t.clone()], vec![x2.clone(), Poly::one(ctx)]];
    println!("det [[x1, t], [x2, 1]] = {}", determinant(&m)?);
    println!("[3]! = {}", t_factorial(ctx, 3));
    println!("[4 choose 2]_t = {}", gaussian_binomial(ctx, 4, 2)?);
    Ok(())
}
