//! Macdonald polynomials in the monomial basis, the q,t scalar product and b_λ.

use gaudinlab::combinatorics::{partitions_of, Partition};
use gaudinlab::orthogonal_bases::{b_constant, macdonald_p, macdonald_scalar, restrict_to_variables};

fn main() -> gaudinlab::Result<()> {
    for l in partitions_of(3) {
        println!("P_{l} = {}", macdonald_p(&l)?);
    }
    let (a, b) = (Partition::new(vec![2, 1]), Partition::new(vec![3]));
    println!("<P_(2,1), P_(3)> = {}", macdonald_scalar(&macdonald_p(&a)?, &macdonald_p(&b)?)?);
    println!("b_(2) = {}", b_constant(&Partition::new(vec![2]))?);
    let p = macdonald_p(&Partition::new(vec![2]))?;
    println!("P_(2)(x1, x2) = {}", restrict_to_variables(&p, 2)?);
    println!("at q = t: {}", p.at_q_equals_t()?);
    Ok(())
}
