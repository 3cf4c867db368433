//! F = G at the set-specializations x ⊂ {t^k y_j}, and rebuilding F from G alone.

use gaudinlab::gaudin::{
    f_at_point, g_at_point, gaudin_multischur, reconstruct_from_g, verify_specializations, GaudinParams, SizeBound,
};
use gaudinlab::suites::{worked_point, worked_value};

fn main() -> gaudinlab::Result<()> {
    let p = GaudinParams::new(2, 2)?;
    let bound = SizeBound::default();
    let f = gaudin_multischur(&p, &bound)?;
    let pt = worked_point();
    let g = g_at_point(&p, &pt)?;
    println!("at {}: G = {g}", pt.label());
    println!("F agrees: {}, closed form agrees: {}", f_at_point(&f, &pt)? == g, g == worked_value(p.ctx()?));

    let rep = verify_specializations(&p, &bound)?;
    println!("{} points checked, status {}", rep.checks.len(), rep.status);

    let (rebuilt, unique) = reconstruct_from_g(&p, &bound)?;
    println!("rebuilt from G: unique {unique}, equals F {}", rebuilt == f);
    Ok(())
}
