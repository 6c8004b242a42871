//! Reference checks, one line each. Every expected value is exact: counts,
//! orders and genera are compared as integers with zero tolerance.
//!
//! Set `REGENUM_QUICK=1` to skip the largest linear group.

use std::process::ExitCode;

use regenum::io::data_dir;
use regenum::verify::{run_check, SuiteOptions, CHECKS};
use regenum::Limits;

fn main() -> ExitCode {
    let opts = SuiteOptions {
        quick: std::env::var_os("REGENUM_QUICK").is_some_and(|v| v != "0"),
        limits: Limits::default(),
        data: data_dir(),
    };
    println!("acceptance: {} checks, tolerance exact", CHECKS.len());
    let mut failed = 0;
    for (id, _, _) in CHECKS {
        let outcome = run_check(id, &opts);
        println!("{}  ({:.1}s)", outcome.line(), outcome.seconds);
        if !outcome.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", CHECKS.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
