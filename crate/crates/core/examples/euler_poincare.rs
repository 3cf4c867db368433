//! Symmetrization identities: the θ-twisted one, the Hall–Littlewood generating
//! function and the Macdonald reduction.

use gaudinlab::euler_poincare::{
    f_tilde, hl_test_scalar, verify_fgmacdo_reduction, verify_hl_generating, verify_theorem_theta,
};

fn main() -> gaudinlab::Result<()> {
    println!("F~_2 = (x1 x2) F_2^1(1/x, y) = {}", f_tilde(2)?);
    for e in 0..=2 {
        let r = verify_theorem_theta(2, e)?;
        println!("theta n=2 f=x1^{e}: {} {}", r.status, r.normalization.unwrap_or_default());
    }
    for n in 1..=2 {
        println!("hl-gen n={n}: {}", verify_hl_generating(n)?.status);
        let (s, ratio) = hl_test_scalar(n)?;
        println!("  scalar {s}, ratio {ratio:?}");
    }
    println!("fgmacdo n=2 D=2: {}", verify_fgmacdo_reduction(2, 2)?.status);
    Ok(())
}
