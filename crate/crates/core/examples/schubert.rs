//! Grassmannian Schubert polynomials Y_v(x, y): vanishing, Y_v(x,0) = S_v, uniqueness.

use gaudinlab::combinatorics::Composition;
use gaudinlab::schubert::{factorial_schur, specializes_to_schur, uniqueness_system, vanishing_table};

fn main() -> gaudinlab::Result<()> {
    let v = Composition::new(vec![1, 2]);
    println!("Y_{v} = {}", factorial_schur(&v, 2)?);
    println!("Y_{v}(x, 0) = S_{v}(x): {}", specializes_to_schur(&v)?);
    let table = vanishing_table(2, 3)?;
    let agree = table.iter().filter(|(_, _, van, cont)| van != cont).count();
    println!("vanishing iff not contained: {agree}/{} pairs", table.len());
    let u = uniqueness_system(&v)?;
    println!("uniqueness: {} unknowns, unique {}, matches {}", u.unknowns, u.unique, u.matches_factorial_schur);
    Ok(())
}
