//! F_n^r from the determinant quotient and from the multi-Schur function.
//!
//! cargo run --release --example gaudin_function -- 2 2

use gaudinlab::gaudin::{gaudin_multischur, gaudin_raw, GaudinParams, SizeBound};

fn main() -> gaudinlab::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, r) = (args.first().copied().unwrap_or(2), args.get(1).copied().unwrap_or(1));
    let p = GaudinParams::new(n, r)?;
    let bound = SizeBound::default();
    let ms = gaudin_multischur(&p, &bound)?;
    let raw = gaudin_raw(&p, &bound)?;
    if ms.num_terms() <= 50 {
        println!("F_{n}^{r} = {ms}");
    } else {
        println!("F_{n}^{r}: {} terms", ms.num_terms());
    }
    println!("determinant quotient agrees: {}", raw == ms);
    Ok(())
}
