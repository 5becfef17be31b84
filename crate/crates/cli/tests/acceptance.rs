//! Runs every acceptance criterion at its stated tolerance and prints one
//! line per criterion.

use std::process::ExitCode;

use leflab_cli::suite::{run_check, SuiteOptions, CHECKS};

fn main() -> ExitCode {
    let opts = SuiteOptions::default();
    let mut failed = 0;
    for info in CHECKS {
        let o = run_check(info, opts);
        println!("criterion {:>2} {}: {}", info.index, if o.passed() { "pass" } else { "fail" }, info.title);
        println!("    {}", o.line());
        failed += usize::from(!o.passed());
    }
    println!("{}/{} criteria passed", CHECKS.len() - failed, CHECKS.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
