//! x^λ symmetrized with the t-weight is a multiple of the Hall–Littlewood P_λ.

use gaudinlab::combinatorics::partitions_up_to;
use gaudinlab::orthogonal_bases::{c_lambda, classical_hall_littlewood, hl_from_cup};

fn main() -> gaudinlab::Result<()> {
    let n = 2;
    for l in partitions_up_to(3, n) {
        let (_, k) = hl_from_cup(&l, n)?;
        println!("lambda={l}: constant {k} (c_lambda = {})", c_lambda(&l, n)?);
    }
    println!("P_(2,1)(x1,x2,x3) = {}", classical_hall_littlewood(&gaudinlab::combinatorics::Partition::new(vec![2, 1]), 3)?);
    Ok(())
}
