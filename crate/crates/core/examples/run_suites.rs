//! Runs every verification suite with default parameters and prints one line each.

use gaudinlab::suites::{run_suite, Suite, SuiteConfig};

fn main() -> gaudinlab::Result<()> {
    for s in Suite::ALL {
        let r = run_suite(&SuiteConfig::new(s).with_seed(7))?;
        println!("{:<13} {} ({} checks, {} ms)", s.name(), r.status, r.checks.len(), r.elapsed_ms);
    }
    Ok(())
}
