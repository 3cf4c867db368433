//! Divided differences and the Hecke action on polynomials in x1..x3.

use gaudinlab::exact_algebra::{Poly, VarContext};
use gaudinlab::operators::{cup_omega, hecke_cup, hecke_t, partial};

fn main() -> gaudinlab::Result<()> {
    let n = 3;
    let ctx = VarContext::new(n)?;
    let (x1, x2, x3, t) = (Poly::x(ctx, 1), Poly::x(ctx, 2), Poly::x(ctx, 3), Poly::t(ctx));
    let f = x1.pow(2) * &x2 + &t * &x3;

    println!("f = {f}");
    println!("d1 f = {}", partial(&f, 1)?);
    println!("d1 d1 f = {}", partial(&partial(&f, 1)?, 1)?);

    let cup = hecke_cup(&f, 1, n)?;
    let one_plus_t = &Poly::one(ctx) + &t;
    println!("cup1 cup1 f = (1+t) cup1 f: {}", hecke_cup(&cup, 1, n)? == &one_plus_t * &cup);

    let tt = |g: &Poly, i: usize| hecke_t(g, i, n);
    let lhs = tt(&tt(&tt(&f, 1)?, 2)?, 1)?;
    let rhs = tt(&tt(&tt(&f, 2)?, 1)?, 2)?;
    println!("T1 T2 T1 = T2 T1 T2: {}", lhs == rhs);

    println!("x1^2 cup_omega = {}", cup_omega(&x1.pow(2), n)?);
    Ok(())
}
