//! Schur functions of alphabet differences and the factorisation S_{j,β^α}(A−B).

use gaudinlab::alphabets::{factorise_index, factorise_rhs, resultant, schur, Alphabet};
use gaudinlab::combinatorics::Composition;
use gaudinlab::exact_algebra::{Poly, VarContext};

fn main() -> gaudinlab::Result<()> {
    let ctx = VarContext::new(3)?;
    let x = Alphabet::x(ctx);
    let y = Alphabet::y(ctx);
    let s = schur(&Composition::new(vec![0, 1, 1]), &x.minus(&y))?;
    println!("S_(0,1,1)(x - y) has {} terms", s.num_terms());

    let a = Alphabet::new(ctx, vec![Poly::x(ctx, 1), Poly::x(ctx, 2)])?;
    let b = Alphabet::new(ctx, vec![Poly::y(ctx, 1), Poly::t(ctx) * Poly::y(ctx, 2), Poly::y(ctx, 3)])?;
    for j in 0..=3 {
        let lhs = schur(&factorise_index(j, 2, 3), &a.minus(&b))?;
        println!("j={j}: S = (-1)^j e_j(B) R(A,B)? {}", lhs == factorise_rhs(j, &a, &b));
    }
    println!("R(A,B) = {}", resultant(&a, &b));

    let shared = Alphabet::new(ctx, vec![Poly::x(ctx, 2), Poly::y(ctx, 1)])?;
    let z = schur(&factorise_index(1, 2, 2), &a.minus(&shared))?;
    println!("A and B share x2, S vanishes: {}", z.is_zero());
    Ok(())
}
