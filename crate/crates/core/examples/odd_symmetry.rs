//! At odd level the normalized determinant is one Schur function of x + y.

use gaudinlab::gaudin::{odd_symmetry_schur, SizeBound};

fn main() -> gaudinlab::Result<()> {
    for (n, r) in [(1, 1), (2, 1), (2, 3), (3, 1)] {
        let s = odd_symmetry_schur(n, r, &SizeBound::default())?;
        println!("n={n} r={r}: single {} index {:?} beta {:?}", s.single, s.index, s.beta);
    }
    Ok(())
}
