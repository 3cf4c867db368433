//! Truncated Cauchy kernels: the Macdonald one and its t-deformation.

use gaudinlab::euler_poincare::{sigma_kernel, verify_cauchy_qt, warnaar_normalization, KernelKind};

fn main() -> gaudinlab::Result<()> {
    let k = sigma_kernel(KernelKind::Macdonald, 2, 1)?;
    println!("sigma_1(xy(1-t)/(1-q)) to degree 2, n=1: {}", k.series);
    println!("cauchy n=2 D=3: {}", verify_cauchy_qt(2, 3)?.status);
    for (n, d) in [(1, 3), (2, 2)] {
        let out = warnaar_normalization(n, d)?;
        println!("t-deformed n={n} D={d}: kappa {:?}, empirical {:?}", out.kappa.map(|k| k.to_string()),
            out.empirical.map(|(k, ok)| (k.to_string(), ok)));
    }
    Ok(())
}
